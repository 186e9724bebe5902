#include "qs/hypertoric.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace qs {

bool operator==(const SignVector& a, const SignVector& b) { return a.signs == b.signs; }

bool operator<(const SignVector& a, const SignVector& b) {
    // '+' (+1) sorts before '-' (-1), entrywise lexicographic
    if (a.signs.size() != b.signs.size()) return a.signs.size() < b.signs.size();
    for (size_t i = 0; i < a.signs.size(); ++i)
        if (a.signs[i] != b.signs[i]) return a.signs[i] > b.signs[i];
    return false;
}

int h_index(int n, int i, int j) {
    if (i < 0 || j <= i || j >= n) throw std::invalid_argument("h_index: bad pair");
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Arrangement build_reduced(int n, int loops, int w, const Rat& lambda) {
    if (n < 1 || loops < 2 || w < 1)
        throw std::invalid_argument("build_reduced: need n >= 1, loops >= 2, w >= 1");
    Arrangement arr;
    arr.reduced = true;
    arr.n = n;
    arr.loops = loops;
    arr.w = w;
    arr.lambda = lambda;
    arr.integral = is_integer(lambda);

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            arr.vars.push_back("h" + std::to_string(i + 1) + std::to_string(j + 1));
            arr.plus_min.push_back(Rat(loops - 1));
            arr.minus_max.push_back(Rat(-(loops - 1)));
        }
    int q0 = static_cast<int>(arr.vars.size());
    for (int i = 0; i < n; ++i) {
        arr.vars.push_back("q" + std::to_string(i + 1));
        arr.plus_min.push_back(Rat(0));
        arr.minus_max.push_back(Rat(-w));
    }
    arr.integral_flags.assign(arr.vars.size(), arr.integral ? 1 : 0);

    int nv = static_cast<int>(arr.vars.size());
    for (int i = 0; i < n; ++i) {
        LinRow row;
        row.a.assign(nv, Rat(0));
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            // -h_ij with the convention h_ji = -h_ij
            if (i < j) row.a[h_index(n, i, j)] = -1;
            else row.a[h_index(n, j, i)] = 1;
        }
        row.a[q0 + i] = -1;
        row.b = lambda;
        arr.eqs.push_back(std::move(row));
    }
    return arr;
}

namespace {

struct FullLayout {
    int n = 0, loops = 0, w = 0;

    int arrow_var(int i, int j, int k) const { // ordered pair (i, j), copy k
        int pair_pos = i * (n - 1) + (j > i ? j - 1 : j);
        return pair_pos * (loops - 1) + k;
    }
    int leg_var(int i, int m) const { // framing leg m at vertex i
        return n * (n - 1) * (loops - 1) + i * w + m;
    }
    int total() const { return n * (n - 1) * (loops - 1) + n * w; }
};

FullLayout layout_of(const Arrangement& arr) {
    if (arr.reduced) throw std::invalid_argument("expected full arrangement");
    return FullLayout{arr.n, arr.loops, arr.w};
}

} // namespace

Arrangement build_full(const SliceQuiverData& slice, const Rat& lambda) {
    int n = slice.quiver.num_vertices();
    if (n < 1) throw std::invalid_argument("build_full: empty slice");
    for (auto c : slice.v)
        if (c != 1)
            throw std::invalid_argument("build_full: slice is not a minimal leaf slice");
    int loops;
    if (n >= 2) {
        int between = slice.quiver.arrow_count(0, 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && slice.quiver.arrow_count(i, j) != between)
                    throw std::invalid_argument("build_full: non-uniform slice arrows");
        loops = between + 1;
    } else {
        loops = static_cast<int>(slice.loop_counts.at(0));
    }
    for (auto c : slice.loop_counts)
        if (c != loops) throw std::invalid_argument("build_full: non-uniform slice loops");
    if (loops < 2) throw std::invalid_argument("build_full: need loops >= 2");
    long long w_ll = slice.w.at(0);
    for (auto c : slice.w)
        if (c != w_ll) throw std::invalid_argument("build_full: non-uniform slice framing");
    if (w_ll < 1) throw std::invalid_argument("build_full: need framing >= 1");
    int w = static_cast<int>(w_ll);

    Arrangement arr;
    arr.reduced = false;
    arr.n = n;
    arr.loops = loops;
    arr.w = w;
    arr.lambda = lambda;
    arr.integral = is_integer(lambda);

    FullLayout lay{n, loops, w};
    arr.vars.assign(lay.total(), "");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < loops - 1; ++k)
                arr.vars[lay.arrow_var(i, j, k)] = "v" + std::to_string(i + 1) +
                                                   std::to_string(j + 1) + "k" +
                                                   std::to_string(k + 1);
        }
    for (int i = 0; i < n; ++i)
        for (int m = 0; m < w; ++m)
            arr.vars[lay.leg_var(i, m)] =
                "q" + std::to_string(i + 1) + "m" + std::to_string(m + 1);
    arr.plus_min.assign(arr.vars.size(), Rat(0));
    arr.minus_max.assign(arr.vars.size(), Rat(-1));
    arr.integral_flags.assign(arr.vars.size(), arr.integral ? 1 : 0);

    for (int i = 0; i < n; ++i) {
        LinRow row;
        row.a.assign(lay.total(), Rat(0));
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int k = 0; k < loops - 1; ++k) {
                row.a[lay.arrow_var(j, i, k)] += 1;
                row.a[lay.arrow_var(i, j, k)] -= 1;
            }
        }
        for (int m = 0; m < w; ++m) row.a[lay.leg_var(i, m)] = -1;
        row.b = lambda;
        arr.eqs.push_back(std::move(row));
    }
    return arr;
}

Polyhedron realize_chamber(const Arrangement& arr, const SignVector& sign) {
    int nv = static_cast<int>(arr.vars.size());
    if (static_cast<int>(sign.signs.size()) != nv)
        throw std::invalid_argument("sign vector length mismatch");
    Polyhedron p;
    p.num_vars = nv;
    p.eq = arr.eqs;
    for (int v = 0; v < nv; ++v) {
        LinRow row;
        row.a.assign(nv, Rat(0));
        if (sign.signs[v] > 0) {
            row.a[v] = -1;
            row.b = -arr.plus_min[v];
        } else {
            row.a[v] = 1;
            row.b = arr.minus_max[v];
        }
        p.le.push_back(std::move(row));
    }
    return p;
}

Chamber chamber_status(const Arrangement& arr, const SignVector& sign) {
    Chamber ch;
    ch.sign = sign;
    Polyhedron p = realize_chamber(arr, sign);
    if (!is_feasible(p)) {
        ch.status = ChamberStatus::Empty;
        return ch;
    }
    if (!is_bounded(p)) {
        ch.status = ChamberStatus::Unbounded;
        return ch;
    }
    ch.status = ChamberStatus::Bounded;
    ch.lattice = lattice_points(p);
    return ch;
}

std::vector<Chamber> enumerate_bounded(const Arrangement& arr, int jobs) {
    std::vector<Chamber> out;
    if (!arr.integral) return out;
    int m = static_cast<int>(arr.vars.size());
    if (m > 24) throw std::invalid_argument("enumerate_bounded: too many variables");
    unsigned long long total = 1ull << m;

    auto sign_at = [m](unsigned long long idx) {
        SignVector s;
        s.signs.resize(m);
        for (int v = 0; v < m; ++v)
            s.signs[v] = (idx >> (m - 1 - v)) & 1ull ? -1 : 1;
        return s;
    };
    auto scan = [&](unsigned long long lo, unsigned long long hi,
                    std::vector<Chamber>& sink) {
        for (unsigned long long idx = lo; idx < hi; ++idx) {
            Chamber ch = chamber_status(arr, sign_at(idx));
            if (ch.status == ChamberStatus::Bounded) sink.push_back(std::move(ch));
        }
    };

    if (jobs <= 1) {
        scan(0, total, out);
        return out;
    }
    int workers = std::min<unsigned long long>(jobs, total);
    std::vector<std::vector<Chamber>> parts(workers);
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) {
        unsigned long long lo = total * t / workers;
        unsigned long long hi = total * (t + 1) / workers;
        threads.emplace_back([&, t, lo, hi] { scan(lo, hi, parts[t]); });
    }
    for (auto& th : threads) th.join();
    // contiguous index ranges concatenated in order == sequential order
    for (auto& part : parts)
        for (auto& ch : part) out.push_back(std::move(ch));
    return out;
}

long long reference_count(int n, int loops, int w, const Rat& lambda) {
    if (n < 1 || loops < 2 || w < 1)
        throw std::invalid_argument("reference_count: bad parameters");
    if (!is_integer(lambda)) return 0;
    Rat upper = Rat((n - 1) * (loops - 1) + w);
    Rat lower = Rat(-(n - 1) * (loops - 1));
    if (lambda >= upper || lambda <= lower) {
        long long f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    }
    return 0;
}

SignVector reduce_chamber(const Arrangement& full, const Chamber& chamber) {
    FullLayout lay = layout_of(full);
    if (chamber.status != ChamberStatus::Bounded)
        throw std::invalid_argument("reduce_chamber: chamber must be bounded nonempty");
    const auto& s = chamber.sign.signs;
    if (static_cast<int>(s.size()) != lay.total())
        throw std::invalid_argument("reduce_chamber: sign length mismatch");

    int n = lay.n;
    SignVector out;
    out.signs.assign(n * (n - 1) / 2 + n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int8_t fwd = s[lay.arrow_var(i, j, 0)];
            for (int k = 0; k < lay.loops - 1; ++k) {
                if (s[lay.arrow_var(i, j, k)] != fwd ||
                    s[lay.arrow_var(j, i, k)] != -fwd)
                    throw std::invalid_argument(
                        "reduce_chamber: incoherent arrow signs (chamber not bounded?)");
            }
            out.signs[h_index(n, i, j)] = fwd;
        }
    int q0 = n * (n - 1) / 2;
    for (int i = 0; i < n; ++i) {
        int8_t leg = s[lay.leg_var(i, 0)];
        for (int m = 0; m < lay.w; ++m)
            if (s[lay.leg_var(i, m)] != leg)
                throw std::invalid_argument(
                    "reduce_chamber: incoherent framing signs (chamber not bounded?)");
        out.signs[q0 + i] = leg;
    }
    return out;
}

namespace {

int8_t pair_sign(const SignVector& reduced, int n, int i, int j) {
    if (i < j) return reduced.signs[h_index(n, i, j)];
    return static_cast<int8_t>(-reduced.signs[h_index(n, j, i)]);
}

} // namespace

std::vector<int> chamber_to_ordering(const SignVector& reduced, int n) {
    if (static_cast<int>(reduced.signs.size()) != n * (n - 1) / 2 + n)
        throw std::invalid_argument("chamber_to_ordering: sign length mismatch");
    std::vector<int> remaining(n);
    for (int i = 0; i < n; ++i) remaining[i] = i;
    std::vector<int> order;
    while (!remaining.empty()) {
        int found = -1;
        for (int r : remaining) {
            bool all_plus = true;
            for (int t : remaining)
                if (t != r && pair_sign(reduced, n, r, t) != 1) {
                    all_plus = false;
                    break;
                }
            if (all_plus) {
                if (found >= 0)
                    throw std::invalid_argument("chamber_to_ordering: peel index not unique");
                found = r;
            }
        }
        if (found < 0)
            throw std::invalid_argument("chamber_to_ordering: no peel index");
        order.push_back(found);
        remaining.erase(std::find(remaining.begin(), remaining.end(), found));
    }
    return order;
}

SignVector sn_act(const std::vector<int>& sigma, const SignVector& reduced, int n) {
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("sn_act: permutation length mismatch");
    std::vector<char> seen(n, 0);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("sn_act: not a permutation");
        seen[v] = 1;
    }
    if (static_cast<int>(reduced.signs.size()) != n * (n - 1) / 2 + n)
        throw std::invalid_argument("sn_act: sign length mismatch");

    SignVector out;
    out.signs.assign(reduced.signs.size(), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int a = sigma[i], b = sigma[j];
            int8_t s = reduced.signs[h_index(n, i, j)];
            if (a < b) out.signs[h_index(n, a, b)] = s;
            else out.signs[h_index(n, b, a)] = static_cast<int8_t>(-s);
        }
    int q0 = n * (n - 1) / 2;
    for (int i = 0; i < n; ++i) out.signs[q0 + sigma[i]] = reduced.signs[q0 + i];
    return out;
}

} // namespace qs
