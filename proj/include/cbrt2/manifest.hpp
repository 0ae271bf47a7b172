#pragma once

#include <cstdint>
#include <ctime>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace cbrt2 {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// FNV-1a 64-bit digest of the payload bytes, reported as 16 hex digits.
inline std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[h & 0xF];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

inline std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Provenance record emitted alongside every CLI payload. The digest covers
/// exactly the bytes written to stdout; the manifest itself goes to stderr so
/// payloads stay byte-identical across reruns.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::optional<std::uint64_t> seed;
    std::string tool_version = kToolVersion;
    std::string timestamp = utc_timestamp();
    std::string output_digest;
};

}  // namespace cbrt2
