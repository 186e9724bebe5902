#include "qs/roots.hpp"

#include <stdexcept>

namespace qs {

long long tits_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    validate_dim(q, a, "tits_form lhs");
    validate_dim(q, b, "tits_form rhs");
    int n = q.num_vertices();
    long long acc = 0;
    for (int i = 0; i < n; ++i)
        acc += a[i] * b[i] * (2 - 2 * q.loop_count(i));
    // Arrows enter through the undirected counts n_ij + n_ji; the form is
    // symmetric and orientation-independent.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) acc -= a[i] * b[j] * q.pair_count(i, j);
    return acc;
}

long long p_form(const Quiver& q, const DimVector& v) {
    long long vv = tits_form(q, v, v);
    if (vv % 2 != 0) throw std::logic_error("odd self-pairing"); // cannot happen
    return 1 - vv / 2;
}

std::pair<Quiver, DimVector> extend(const FramedSetting& s) {
    validate_dim(s.quiver, s.v, "extend v");
    validate_dim(s.quiver, s.w, "extend w");
    if (s.quiver.has_vertex("inf"))
        throw std::invalid_argument("quiver already extended: vertex 'inf' present");
    for (auto c : s.w)
        if (c < 0) throw std::invalid_argument("negative framing multiplicity");
    for (auto c : s.v)
        if (c < 0) throw std::invalid_argument("negative dimension entry");

    auto labels = s.quiver.vertex_labels();
    labels.push_back("inf");
    int inf = static_cast<int>(labels.size()) - 1;
    auto arrows = s.quiver.arrows();
    for (int i = 0; i < s.quiver.num_vertices(); ++i)
        for (long long k = 0; k < s.w[i]; ++k) arrows.push_back({i, inf});
    DimVector ext = s.v;
    ext.push_back(1);
    return {Quiver(std::move(labels), std::move(arrows)), std::move(ext)};
}

namespace {

// (beta, e_i) without materializing e_i.
long long pair_with_simple(const Quiver& q, const DimVector& beta, int i) {
    long long acc = beta[i] * (2 - 2 * q.loop_count(i));
    for (int j = 0; j < q.num_vertices(); ++j)
        if (j != i) acc -= beta[j] * q.pair_count(i, j);
    return acc;
}

bool support_connected(const Quiver& q, const DimVector& beta) {
    int n = q.num_vertices();
    int start = -1, size = 0;
    for (int i = 0; i < n; ++i)
        if (beta[i] > 0) {
            if (start < 0) start = i;
            ++size;
        }
    if (size <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j)
            if (!seen[j] && beta[j] > 0 && q.pair_count(i, j) > 0) {
                seen[j] = 1;
                ++reached;
                stack.push_back(j);
            }
    }
    return reached == size;
}

bool is_simple_vector(const DimVector& beta) {
    int ones = 0;
    for (auto c : beta) {
        if (c == 1) ++ones;
        else if (c != 0) return false;
    }
    return ones == 1;
}

} // namespace

bool is_positive_root(const Quiver& q, const DimVector& beta0) {
    validate_dim(q, beta0, "is_positive_root beta");
    bool zero = true;
    for (auto c : beta0) {
        if (c < 0) throw std::invalid_argument("is_positive_root: negative entry");
        if (c != 0) zero = false;
    }
    if (zero) throw std::invalid_argument("is_positive_root: zero vector");

    DimVector beta = beta0;
    for (;;) {
        if (is_simple_vector(beta)) return true;
        // Reflect at a loop-free vertex whenever that strictly lowers the
        // coordinate; height decreases, so this terminates.
        int pivot = -1;
        long long pairing = 0;
        for (int i = 0; i < q.num_vertices(); ++i) {
            if (beta[i] <= 0 || !q.loop_free(i)) continue;
            long long p = pair_with_simple(q, beta, i);
            if (p > 0) {
                pivot = i;
                pairing = p;
                break;
            }
        }
        if (pivot < 0) {
            // No descent available: beta is a root iff it sits in the
            // fundamental region, i.e. its support is connected.
            return support_connected(q, beta);
        }
        beta[pivot] -= pairing;
        if (beta[pivot] < 0) return false; // left the positive cone, not a root
    }
}

std::vector<DimVector> positive_roots_below(const Quiver& q, const DimVector& bound) {
    validate_dim(q, bound, "positive_roots_below bound");
    for (auto c : bound)
        if (c < 0) throw std::invalid_argument("positive_roots_below: negative bound");
    int n = q.num_vertices();
    std::vector<DimVector> out;
    DimVector beta(n, 0);
    for (;;) {
        // advance odometer (last index fastest), skipping the zero vector below
        int i = n - 1;
        while (i >= 0 && beta[i] == bound[i]) {
            beta[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++beta[i];
        if (is_positive_root(q, beta)) out.push_back(beta);
    }
    return out;
}

bool is_generic(const Quiver& q, const Character& theta, const Character& lambda,
                const DimVector& v) {
    if (static_cast<int>(theta.size()) != q.num_vertices() ||
        static_cast<int>(lambda.size()) != q.num_vertices())
        throw std::invalid_argument("is_generic: character length mismatch");
    validate_dim(q, v, "is_generic v");
    auto dot = [&](const Character& c, const DimVector& d) {
        Rat acc = 0;
        for (size_t i = 0; i < d.size(); ++i) acc += c[i] * d[i];
        return acc;
    };
    for (const auto& root : positive_roots_below(q, v)) {
        if (root == v) continue;
        if (dot(lambda, root) == 0 && dot(theta, root) == 0) return false;
    }
    return true;
}

} // namespace qs
