#pragma once

#include <array>

#include "cbrt2/int128.hpp"

namespace cbrt2 {

/// Row-major 3x3 integer matrix.
using Mat3 = std::array<std::array<Integer, 3>, 3>;

inline Integer det3(const Mat3& A) {
    return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
           A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
           A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
}

/// Adjugate; A * adj(A) = det(A) * I, so this is the exact inverse of a
/// unimodular matrix.
inline Mat3 adjugate(const Mat3& A) {
    Mat3 r;
    r[0][0] = A[1][1] * A[2][2] - A[1][2] * A[2][1];
    r[0][1] = A[0][2] * A[2][1] - A[0][1] * A[2][2];
    r[0][2] = A[0][1] * A[1][2] - A[0][2] * A[1][1];
    r[1][0] = A[1][2] * A[2][0] - A[1][0] * A[2][2];
    r[1][1] = A[0][0] * A[2][2] - A[0][2] * A[2][0];
    r[1][2] = A[0][2] * A[1][0] - A[0][0] * A[1][2];
    r[2][0] = A[1][0] * A[2][1] - A[1][1] * A[2][0];
    r[2][1] = A[0][1] * A[2][0] - A[0][0] * A[2][1];
    r[2][2] = A[0][0] * A[1][1] - A[0][1] * A[1][0];
    return r;
}

inline Mat3 matmul(const Mat3& A, const Mat3& B) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Integer s = 0;
            for (int k = 0; k < 3; ++k)
                s += A[i][k] * B[k][j];
            r[i][j] = s;
        }
    return r;
}

inline bool mat3_eq(const Mat3& A, const Mat3& B) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (A[i][j] != B[i][j])
                return false;
    return true;
}

}  // namespace cbrt2
