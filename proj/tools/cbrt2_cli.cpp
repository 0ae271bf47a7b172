// Command-line front end: root enumeration, generator parametrization,
// simultaneous approximations, spacing statistics and large-sieve reports,
// with reproducible seeded runs and a provenance manifest on stderr.

#include <complex>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cbrt2/ideal.hpp"
#include "cbrt2/manifest.hpp"
#include "cbrt2/parametrize.hpp"
#include "cbrt2/rational.hpp"
#include "cbrt2/roots.hpp"
#include "cbrt2/sieve.hpp"
#include "cbrt2/torus.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace cbrt2;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitArg = 1;
constexpr int kExitDomain = 2;
constexpr int kExitInternal = 3;

// Integers above 2^53 would silently lose precision in many JSON readers;
// serialize those as decimal strings.
json json_int(Integer v) {
    const long long lim = 1LL << 53;
    if (v.fits_int64() && v.to_int64() < lim && v.to_int64() > -lim)
        return json(v.to_int64());
    return json(v.to_string());
}

void emit(const std::string& command, const std::map<std::string, std::string>& params,
          std::optional<std::uint64_t> seed, const std::string& payload) {
    std::cout << payload;
    std::cout.flush();
    RunManifest man;
    man.command = command;
    man.parameters = params;
    man.seed = seed;
    man.output_digest = fnv1a64_hex(payload);
    json j;
    j["command"] = man.command;
    j["parameters"] = man.parameters;
    if (man.seed)
        j["seed"] = *man.seed;
    else
        j["seed"] = nullptr;
    j["tool_version"] = man.tool_version;
    j["timestamp"] = man.timestamp;
    j["output_digest"] = man.output_digest;
    std::cerr << j.dump() << "\n";
}

struct Opts {
    long long m = 0, nu = 0, M = 0, K = 1, L = 1;
    double radius_scale = 1.0;
    std::string format = "json";
    std::string seq = "ones";
    bool oracle = false;
    std::optional<std::uint64_t> seed;
};

int cmd_roots(const Opts& o) {
    if (o.m < 1)
        throw std::invalid_argument("roots: --m must be >= 1");
    auto rs = roots_fast(o.m);
    if (o.oracle) {
        if (rs != roots_bruteforce(o.m))
            throw std::logic_error("roots: fast path disagrees with the oracle");
    }
    std::map<std::string, std::string> params{{"m", std::to_string(o.m)},
                                              {"oracle", o.oracle ? "true" : "false"},
                                              {"format", o.format}};
    if (o.format == "csv") {
        std::ostringstream out;
        out << "m,nu\n";
        for (long long nu : rs)
            out << o.m << "," << nu << "\n";
        emit("roots", params, std::nullopt, out.str());
    } else {
        json j;
        j["schema"] = "roots-v1";
        j["m"] = o.m;
        j["roots"] = rs;
        emit("roots", params, std::nullopt, j.dump() + "\n");
    }
    return kExitOk;
}

int cmd_enumerate(const Opts& o) {
    if (o.M < 1)
        throw std::invalid_argument("enumerate: --M must be >= 1");
    auto gens = enumerate_generators(o.M);
    std::map<std::string, std::string> params{{"M", std::to_string(o.M)},
                                              {"format", o.format}};
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& [x, p] : gens) {
            GammaData g = make_gamma(x);
            json r;
            r["m"] = p.m;
            r["nu"] = p.nu;
            r["a"] = json_int(g.a);
            r["b"] = json_int(g.b);
            r["c"] = json_int(g.c);
            r["u"] = json_int(g.u);
            r["v"] = json_int(g.v);
            r["w"] = json_int(g.w);
            rows.push_back(r);
        }
        json j;
        j["schema"] = "enumerate-v1";
        j["rows"] = rows;
        emit("enumerate", params, std::nullopt, j.dump() + "\n");
    } else {
        std::ostringstream out;
        out << "# cbrt2 enumerate csv v1\n";
        out << "m,nu,a,b,c,u,v,w\n";
        for (const auto& [x, p] : gens) {
            GammaData g = make_gamma(x);
            out << p.m << "," << p.nu << "," << g.a << "," << g.b << "," << g.c << "," << g.u
                << "," << g.v << "," << g.w << "\n";
        }
        emit("enumerate", params, std::nullopt, out.str());
    }
    return kExitOk;
}

int cmd_approx(const Opts& o) {
    RootPair p{o.m, o.nu};
    if (o.m < 1)
        throw std::invalid_argument("approx: --m must be >= 1");
    if (!is_valid_root_pair(p))
        throw std::domain_error("approx: (m, nu) is not a root of X^3 = 2");
    GammaData g = make_gamma(generator_from_root(p));
    auto pts = approximations(g);
    Rational tx(Integer(p.nu), Integer(p.m));
    Rational ty(Integer(detail::mulmod(p.nu, p.nu, p.m)), Integer(p.m));
    json jpts = json::array();
    double worst = 0.0;
    for (const auto& pt : pts) {
        Rational px(pt.n1, pt.den), py(pt.n2, pt.den);
        Rational dx = frac_distance(px - tx), dy = frac_distance(py - ty);
        Rational sup = dx < dy ? dy : dx;
        double mdist = (Rational(Integer(p.m)) * sup).to_double();
        worst = std::max(worst, mdist);
        json r;
        r["den"] = json_int(pt.den);
        r["n1"] = json_int(pt.n1);
        r["n2"] = json_int(pt.n2);
        r["torus"] = {px.frac().to_double(), py.frac().to_double()};
        r["m_dist_sup"] = mdist;
        jpts.push_back(r);
    }
    json j;
    j["schema"] = "approx-v1";
    j["m"] = p.m;
    j["nu"] = p.nu;
    j["generator"] = {json_int(g.a), json_int(g.b), json_int(g.c)};
    j["uvw"] = {json_int(g.u), json_int(g.v), json_int(g.w)};
    j["points"] = jpts;
    j["max_m_dist_sup"] = worst;
    emit("approx",
         {{"m", std::to_string(o.m)}, {"nu", std::to_string(o.nu)}, {"format", o.format}},
         std::nullopt, j.dump() + "\n");
    return kExitOk;
}

int cmd_spacing(const Opts& o) {
    if (o.M < 1)
        throw std::invalid_argument("spacing: --M must be >= 1");
    if (o.radius_scale <= 0.0)
        throw std::invalid_argument("spacing: --radius-scale must be positive");
    auto pairs = enumerate_root_pairs(o.M);
    double radius = o.radius_scale / static_cast<double>(o.M);
    bool clamped = false;
    if (radius >= 0.25) {
        radius = 0.2499;  // disc statistics are defined for radius < 1/4
        clamped = true;
    }
    std::vector<TorusPoint> pts;
    pts.reserve(pairs.size());
    for (const auto& p : pairs)
        pts.push_back(TorusPoint::wrap(static_cast<double>(p.nu) / p.m,
                                       static_cast<double>(detail::mulmod(p.nu, p.nu, p.m)) / p.m));
    DiscStats st = disc_count_stats(pts, radius);
    double min_scaled = std::numeric_limits<double>::infinity();
    for (const auto& p : pairs) {
        GammaData g = make_gamma(generator_from_root(p));
        for (const auto& lat : approx_lattices(g)) {
            auto red = gauss_reduce(lat);
            double n = std::sqrt(static_cast<double>(detail::norm2(red.shortest)));
            min_scaled = std::min(min_scaled, n / std::cbrt(static_cast<double>(p.m)));
        }
    }
    json hist = json::object();
    for (const auto& [cnt, freq] : st.histogram)
        hist[std::to_string(cnt)] = freq;
    json j;
    j["schema"] = "spacing-v1";
    j["M"] = o.M;
    j["pair_count"] = pairs.size();
    j["radius"] = radius;
    j["radius_clamped"] = clamped;
    j["max_disc_count"] = st.max_count;
    j["histogram"] = hist;
    j["min_line_norm_scaled"] = pairs.empty() ? 0.0 : min_scaled;
    emit("spacing",
         {{"M", std::to_string(o.M)}, {"radius_scale", std::to_string(o.radius_scale)}},
         std::nullopt, j.dump() + "\n");
    return kExitOk;
}

int cmd_sieve(const Opts& o) {
    if (o.M < 1)
        throw std::invalid_argument("sieve: --M must be >= 1");
    if (o.K < 1 || o.L < 1)
        throw std::invalid_argument("sieve: --K and --L must be >= 1");
    CoeffSeq seq;
    if (o.seq == "ones") {
        seq = make_ones(o.K, o.L);
    } else if (o.seq == "spike") {
        auto pairs = enumerate_root_pairs(o.M);
        if (pairs.empty())
            throw std::domain_error("sieve: no root pairs in (M, 2M] to spike at");
        seq = make_spike(pairs.front().m, pairs.front().nu, o.K, o.L);
    } else if (o.seq == "random") {
        if (!o.seed)
            throw std::invalid_argument("sieve: --seq random requires --seed");
        seq = make_random(o.K, o.L, *o.seed);
    } else {
        throw std::invalid_argument("sieve: --seq must be ones, spike or random");
    }
    SieveReport r = sieve_ratio(o.M, seq);
    json j;
    j["schema"] = "sieve-v1";
    j["M"] = r.M;
    j["K"] = r.K;
    j["L"] = r.L;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["ratio"] = r.ratio;
    j["pair_count"] = r.pair_count;
    j["seq_descriptor"] = r.seq_descriptor;
    if (r.seed)
        j["seed"] = *r.seed;
    else
        j["seed"] = nullptr;
    if (o.K * o.L <= o.M) {
        // the trivial Cauchy bound dominates the theorem's bound in this regime
        j["trivial_bound"] = static_cast<double>(o.K) * static_cast<double>(o.L) *
                             static_cast<double>(r.pair_count) * seq.sum_sq();
    }
    emit("sieve",
         {{"M", std::to_string(o.M)},
          {"K", std::to_string(o.K)},
          {"L", std::to_string(o.L)},
          {"seq", o.seq}},
         o.seed, j.dump() + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic and experiments for roots of X^3 = 2 (mod m)"};
    app.require_subcommand(1);
    Opts o;

    auto* roots = app.add_subcommand("roots", "roots of X^3 = 2 modulo m");
    roots->add_option("--m", o.m, "modulus")->required();
    roots->add_flag("--oracle", o.oracle, "cross-check against the brute-force oracle");
    roots->add_option("--format", o.format, "json|csv");

    auto* enumerate = app.add_subcommand("enumerate", "domain generators for M < m <= 2M");
    enumerate->add_option("--M", o.M, "dyadic parameter")->required();
    enumerate->add_option("--format", o.format, "json|csv")->default_val("csv");

    auto* approx = app.add_subcommand("approx", "simultaneous approximations for one root pair");
    approx->add_option("--m", o.m, "modulus")->required();
    approx->add_option("--nu", o.nu, "residue")->required();
    approx->add_option("--format", o.format, "json");

    auto* spacing = app.add_subcommand("spacing", "disc and shortest-line statistics");
    spacing->add_option("--M", o.M, "dyadic parameter")->required();
    spacing->add_option("--radius-scale", o.radius_scale, "radius = scale/M");

    auto* sieve = app.add_subcommand("sieve", "large sieve ratio report");
    sieve->add_option("--M", o.M, "dyadic parameter")->required();
    sieve->add_option("--K", o.K, "k-support");
    sieve->add_option("--L", o.L, "l-support");
    sieve->add_option("--seq", o.seq, "ones|spike|random");
    std::uint64_t seed_val = 0;
    auto* seed_opt = sieve->add_option("--seed", seed_val, "RNG seed (required for random)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return kExitArg;
    }
    if (seed_opt->count() > 0)
        o.seed = seed_val;

    try {
        if (roots->parsed())
            return cmd_roots(o);
        if (enumerate->parsed())
            return cmd_enumerate(o);
        if (approx->parsed())
            return cmd_approx(o);
        if (spacing->parsed())
            return cmd_spacing(o);
        if (sieve->parsed())
            return cmd_sieve(o);
        return kExitArg;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArg;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
