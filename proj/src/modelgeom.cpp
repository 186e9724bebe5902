#include "qs/modelgeom.hpp"

#include <stdexcept>

namespace qs {

RatMat symplectic_form(int loops) {
    if (loops < 1) throw std::invalid_argument("symplectic_form: loops >= 1");
    RatMat m = zero_matrix(2 * loops, 2 * loops);
    for (int k = 0; k < loops; ++k) {
        m[k][loops + k] = 1;
        m[loops + k][k] = -1;
    }
    return m;
}

Rat symplectic_pair(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size() || a.size() % 2 != 0)
        throw std::invalid_argument("symplectic_pair: bad vector lengths");
    size_t l = a.size() / 2;
    Rat acc = 0;
    for (size_t k = 0; k < l; ++k) acc += a[k] * b[l + k] - a[l + k] * b[k];
    return acc;
}

namespace {

void validate_point(const LeafPoint& p) {
    if (p.s.size() != p.t.size())
        throw std::invalid_argument("leaf point: s/t length mismatch");
    if (p.loops() < 2) throw std::invalid_argument("leaf point: loops >= 2 required");
    bool nonzero = false;
    for (const auto& c : p.s)
        if (c != 0) nonzero = true;
    for (const auto& c : p.t)
        if (c != 0) nonzero = true;
    if (!nonzero) throw std::invalid_argument("leaf point: zero vector");
}

std::vector<Rat> stacked(int loops) { return std::vector<Rat>(2 * loops, Rat(0)); }

} // namespace

Frame frame_I(const LeafPoint& p) {
    validate_point(p);
    if (!p.in_chart_I()) throw std::invalid_argument("frame_I: s_1 == 0");
    int l = p.loops();
    Frame f;
    f.vectors.reserve(2 * l);

    std::vector<Rat> e = stacked(l);
    for (int k = 0; k < l; ++k) {
        e[k] = p.s[k];
        e[l + k] = p.t[k];
    }
    f.vectors.push_back(std::move(e));

    // w^1: Y = -s_2 e_1 + s_1 e_2
    std::vector<Rat> w1 = stacked(l);
    w1[l + 0] = -p.s[1];
    w1[l + 1] = p.s[0];
    f.vectors.push_back(std::move(w1));
    // w^k, k >= 2: Y = -(s_{k+1}/s_1) e_1 + e_{k+1}
    for (int k = 2; k <= l - 1; ++k) {
        std::vector<Rat> wk = stacked(l);
        wk[l + 0] = -p.s[k] / p.s[0];
        wk[l + k] = 1;
        f.vectors.push_back(std::move(wk));
    }
    // v^k, k >= 2 (descending): X = e_{k+1}, Y = (t_{k+1}/s_1) e_1
    for (int k = l - 1; k >= 2; --k) {
        std::vector<Rat> vk = stacked(l);
        vk[k] = 1;
        vk[l + 0] = p.t[k] / p.s[0];
        f.vectors.push_back(std::move(vk));
    }
    // v^1: X = (1/s_1) e_2, Y = (t_2/s_1^2) e_1
    std::vector<Rat> v1 = stacked(l);
    v1[1] = Rat(1) / p.s[0];
    v1[l + 0] = p.t[1] / (p.s[0] * p.s[0]);
    f.vectors.push_back(std::move(v1));

    // u: Y = (1/s_1) e_1
    std::vector<Rat> u = stacked(l);
    u[l + 0] = Rat(1) / p.s[0];
    f.vectors.push_back(std::move(u));
    return f;
}

Frame frame_J(const LeafPoint& p) {
    validate_point(p);
    if (!p.in_chart_J()) throw std::invalid_argument("frame_J: s_2 == 0");
    int l = p.loops();
    Frame f;
    f.vectors.reserve(2 * l);

    std::vector<Rat> e = stacked(l);
    for (int k = 0; k < l; ++k) {
        e[k] = p.s[k];
        e[l + k] = p.t[k];
    }
    f.vectors.push_back(std::move(e));

    // w^1 is shared between the charts
    std::vector<Rat> w1 = stacked(l);
    w1[l + 0] = -p.s[1];
    w1[l + 1] = p.s[0];
    f.vectors.push_back(std::move(w1));
    // w^k, k >= 2: Y = -(s_{k+1}/s_2) e_2 + e_{k+1}
    for (int k = 2; k <= l - 1; ++k) {
        std::vector<Rat> wk = stacked(l);
        wk[l + 1] = -p.s[k] / p.s[1];
        wk[l + k] = 1;
        f.vectors.push_back(std::move(wk));
    }
    // v^k, k >= 2 (descending): X = e_{k+1}, Y = (t_{k+1}/s_2) e_2
    for (int k = l - 1; k >= 2; --k) {
        std::vector<Rat> vk = stacked(l);
        vk[k] = 1;
        vk[l + 1] = p.t[k] / p.s[1];
        f.vectors.push_back(std::move(vk));
    }
    // v^1: X = -(1/s_2) e_1, Y = -(t_1/s_2^2) e_2
    std::vector<Rat> v1 = stacked(l);
    v1[0] = Rat(-1) / p.s[1];
    v1[l + 1] = -p.t[0] / (p.s[1] * p.s[1]);
    f.vectors.push_back(std::move(v1));

    // u: Y = (1/s_2) e_2
    std::vector<Rat> u = stacked(l);
    u[l + 1] = Rat(1) / p.s[1];
    f.vectors.push_back(std::move(u));
    return f;
}

RatMat frame_matrix(const Frame& f) {
    int dim = static_cast<int>(f.vectors.size());
    RatMat m = zero_matrix(dim, dim);
    for (int col = 0; col < dim; ++col) {
        if (static_cast<int>(f.vectors[col].size()) != dim)
            throw std::invalid_argument("frame vector length mismatch");
        for (int row = 0; row < dim; ++row) m[row][col] = f.vectors[col][row];
    }
    return m;
}

RatMat transition_matrix(const LeafPoint& p) {
    RatMat fi = frame_matrix(frame_I(p));
    RatMat fj = frame_matrix(frame_J(p));
    return solve_linear(std::move(fi), std::move(fj));
}

bool is_unipotent(const RatMat& m) {
    int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("is_unipotent: not square");
    RatMat nil = mat_sub(m, identity_matrix(n));
    RatMat power = nil;
    for (int i = 1; i < n; ++i) {
        if (mat_is_zero(power)) return true;
        power = mat_mul(power, nil);
    }
    return mat_is_zero(power);
}

} // namespace qs
