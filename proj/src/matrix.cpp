#include "qs/matrix.hpp"

#include <stdexcept>

namespace qs {

RatMat identity_matrix(int n) {
    RatMat m = zero_matrix(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMat zero_matrix(int rows, int cols) {
    return RatMat(rows, std::vector<Rat>(cols, Rat(0)));
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size())
        throw std::invalid_argument("mat_mul: shape mismatch");
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int m = static_cast<int>(b[0].size());
    RatMat out = zero_matrix(n, m);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

RatMat mat_sub(const RatMat& a, const RatMat& b) {
    if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size()))
        throw std::invalid_argument("mat_sub: shape mismatch");
    RatMat out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
    return out;
}

bool mat_is_zero(const RatMat& a) {
    for (const auto& row : a)
        for (const auto& c : row)
            if (c != 0) return false;
    return true;
}

Rat determinant(RatMat a) {
    int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("determinant: not square");
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rat inv = Rat(1) / a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat factor = a[r][col] * inv;
            for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

RatMat solve_linear(RatMat a, RatMat b) {
    int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve_linear: rhs height mismatch");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("solve_linear: not square");
    int m = b.empty() ? 0 : static_cast<int>(b[0].size());

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("solve_linear: singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        Rat inv = Rat(1) / a[col][col];
        for (int c = 0; c < n; ++c) a[col][c] *= inv;
        for (int c = 0; c < m; ++c) b[col][c] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat factor = a[r][col];
            for (int c = 0; c < n; ++c) a[r][c] -= factor * a[col][c];
            for (int c = 0; c < m; ++c) b[r][c] -= factor * b[col][c];
        }
    }
    return b;
}

} // namespace qs
