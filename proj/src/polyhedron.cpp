#include "qs/polyhedron.hpp"

#include "qs/log.hpp"
#include "qs/simplex.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

namespace qs {

namespace {

std::atomic<bool> g_cross_check{false};

bool row_is_zero(const std::vector<Rat>& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& c) { return c == 0; });
}

// Scale to coprime integer coefficients (rhs scales along, stays rational).
void normalize_row(LinRow& row) {
    Int l = 1;
    for (const auto& c : row.a) l = lcm(l, denominator(c));
    Int g = 0;
    for (const auto& c : row.a) g = gcd(g, Int(numerator(c) * (l / denominator(c))));
    if (g == 0) return;
    Rat scale = Rat(l, g);
    for (auto& c : row.a) c *= scale;
    row.b *= scale;
}

// Dedup key for an integer-normalized coefficient vector.
std::vector<Int> key_of(const LinRow& row) {
    std::vector<Int> k;
    k.reserve(row.a.size());
    for (const auto& c : row.a) k.push_back(numerator(c));
    return k;
}

LinRow drop_var(const LinRow& row, int var) {
    LinRow out;
    out.a.reserve(row.a.size() - 1);
    for (size_t j = 0; j < row.a.size(); ++j)
        if (static_cast<int>(j) != var) out.a.push_back(row.a[j]);
    out.b = row.b;
    return out;
}

Polyhedron infeasible_stub(int num_vars) {
    // canonical unsatisfiable system: 0 <= -1
    Polyhedron out;
    out.num_vars = num_vars;
    out.le.push_back({std::vector<Rat>(num_vars, Rat(0)), Rat(-1)});
    return out;
}

// Every inequality carries the sorted set of original inequality rows it was
// combined from.  After E eliminations on one chain, a combined row descending
// from more than E+1 original inequalities is redundant (Kohler's criterion),
// so the combination step refuses to create it; this caps the otherwise
// double-exponential growth of long chains.  Equalities are removed by exact
// substitution, never multiply, and do not enter the ancestor count.
using Hist = std::vector<int>;

Hist hist_union(const Hist& x, const Hist& y) {
    Hist out;
    out.reserve(x.size() + y.size());
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

struct TRow {
    LinRow row;
    Hist hist; // empty for equality rows
};

// A polyhedron mid-chain, with ancestor tracking and the elimination count.
struct TSys {
    int num_vars = 0;
    int elims = 0;
    bool infeasible = false;
    std::vector<TRow> eq, le;
};

TSys track(const Polyhedron& p) {
    TSys s;
    s.num_vars = p.num_vars;
    for (const auto& r : p.eq) s.eq.push_back({r, {}});
    int idx = 0;
    for (const auto& r : p.le) s.le.push_back({r, {idx++}});
    return s;
}

Polyhedron untrack(const TSys& s) {
    if (s.infeasible) return infeasible_stub(s.num_vars);
    Polyhedron p;
    p.num_vars = s.num_vars;
    for (const auto& r : s.eq) p.eq.push_back(r.row);
    // Looser-rhs variants of one coefficient vector are kept during a chain
    // only for their ancestries; pointwise the least rhs implies the rest.
    std::map<std::vector<Int>, Rat> best;
    for (const auto& r : s.le) {
        LinRow row = r.row;
        normalize_row(row);
        auto key = key_of(row);
        auto it = best.find(key);
        if (it == best.end()) best.emplace(std::move(key), std::move(row.b));
        else if (row.b < it->second) it->second = row.b;
    }
    for (const auto& [coeffs, b] : best) {
        LinRow row;
        row.a.reserve(coeffs.size());
        for (const auto& c : coeffs) row.a.push_back(Rat(c));
        row.b = b;
        p.le.push_back(std::move(row));
    }
    return p;
}

struct TrackedSet {
    // coeffs -> entries (rhs, ancestry).  An entry may displace another only
    // when it dominates in BOTH senses (rhs <= and ancestry subset); dropping
    // a looser-rhs row with a narrower ancestry would let the width prune
    // discard combinations the projection still needs.
    std::map<std::vector<Int>, std::vector<std::pair<Rat, Hist>>> tightest;
    bool infeasible = false;
    size_t count = 0;

    void add(LinRow row, Hist hist) {
        if (row_is_zero(row.a)) {
            if (row.b < 0) infeasible = true;
            return;
        }
        normalize_row(row);
        auto& bucket = tightest[key_of(row)];
        auto subset = [](const Hist& small, const Hist& big) {
            return std::includes(big.begin(), big.end(), small.begin(), small.end());
        };
        for (const auto& [b2, h2] : bucket)
            if (b2 <= row.b && subset(h2, hist)) return;
        count -= bucket.size();
        std::erase_if(bucket, [&](const std::pair<Rat, Hist>& e) {
            return row.b <= e.first && subset(hist, e.second);
        });
        bucket.emplace_back(std::move(row.b), std::move(hist));
        count += bucket.size();
    }

    std::vector<TRow> rows(int num_vars) const {
        std::vector<TRow> out;
        out.reserve(count);
        for (const auto& [coeffs, bucket] : tightest)
            for (const auto& [b, h] : bucket) {
                TRow t;
                t.row.a.reserve(num_vars);
                for (const auto& c : coeffs) t.row.a.push_back(Rat(c));
                t.row.b = b;
                t.hist = h;
                out.push_back(std::move(t));
            }
        return out;
    }
};

void eliminate_tracked(TSys& s, int var) {
    ++s.elims;
    const size_t bound = static_cast<size_t>(s.elims) + 1;
    const int out_vars = s.num_vars - 1;
    if (s.infeasible) {
        s.num_vars = out_vars;
        s.eq.clear();
        s.le.clear();
        return;
    }

    std::vector<TRow> eq_out;
    TrackedSet le;

    // Exact substitution path: solve one equality for the variable.
    int pivot = -1;
    for (size_t i = 0; i < s.eq.size(); ++i)
        if (s.eq[i].row.a[var] != 0) {
            pivot = static_cast<int>(i);
            break;
        }
    if (pivot >= 0) {
        const TRow& e = s.eq[pivot];
        auto substituted = [&](const TRow& t) {
            LinRow r = t.row;
            Rat factor = r.a[var] / e.row.a[var];
            if (factor != 0) {
                for (size_t j = 0; j < r.a.size(); ++j) r.a[j] -= factor * e.row.a[j];
                r.b -= factor * e.row.b;
            }
            return TRow{drop_var(r, var), t.hist};
        };
        for (size_t i = 0; i < s.eq.size(); ++i) {
            if (static_cast<int>(i) == pivot) continue;
            TRow t = substituted(s.eq[i]);
            if (row_is_zero(t.row.a)) {
                if (t.row.b != 0) s.infeasible = true;
                continue;
            }
            eq_out.push_back(std::move(t));
        }
        for (const auto& t : s.le) {
            TRow sub = substituted(t);
            le.add(std::move(sub.row), std::move(sub.hist));
        }
        if (log_has("trace"))
            std::cerr << "[fm] subst var " << var << ": " << s.le.size() << " -> "
                      << le.count << " rows\n";
    } else {
        // Classic combination of lower and upper bounds.
        std::vector<const TRow*> uppers, lowers;
        for (const auto& t : s.le) {
            if (t.row.a[var] > 0) uppers.push_back(&t);
            else if (t.row.a[var] < 0) lowers.push_back(&t);
            else le.add(drop_var(t.row, var), t.hist);
        }
        for (const auto* up : uppers)
            for (const auto* lo : lowers) {
                Hist h = hist_union(up->hist, lo->hist);
                if (h.size() > bound) continue; // redundant by ancestry width
                // up: a x_v <= ...,  lo: -c x_v <= ...  with a, c > 0
                Rat a = up->row.a[var];
                Rat c = -lo->row.a[var];
                LinRow combined;
                combined.a.resize(s.num_vars);
                for (int j = 0; j < s.num_vars; ++j)
                    combined.a[j] = c * up->row.a[j] + a * lo->row.a[j];
                combined.b = c * up->row.b + a * lo->row.b;
                le.add(drop_var(combined, var), std::move(h));
            }
        for (const auto& t : s.eq) eq_out.push_back({drop_var(t.row, var), t.hist});
        if (log_has("trace"))
            std::cerr << "[fm] comb var " << var << ": " << s.le.size() << " -> "
                      << le.count << " rows (" << uppers.size()
                      << " up, " << lowers.size() << " lo)\n";
    }

    if (le.infeasible) s.infeasible = true;
    s.num_vars = out_vars;
    s.eq = std::move(eq_out);
    s.le = le.rows(out_vars);
    if (s.infeasible) {
        s.eq.clear();
        s.le.clear();
    }
}

} // namespace

void Polyhedron::validate() const {
    for (const auto& r : eq)
        if (static_cast<int>(r.a.size()) != num_vars)
            throw std::invalid_argument("equality row length mismatch");
    for (const auto& r : le)
        if (static_cast<int>(r.a.size()) != num_vars)
            throw std::invalid_argument("inequality row length mismatch");
}

Polyhedron fm_eliminate(const Polyhedron& p, int var) {
    p.validate();
    if (var < 0 || var >= p.num_vars)
        throw std::invalid_argument("fm_eliminate: variable out of range");
    TSys s = track(p);
    eliminate_tracked(s, var);
    return untrack(s);
}

namespace {

bool feasible_fm(const Polyhedron& p) {
    TSys s = track(p);
    while (s.num_vars > 0 && !s.infeasible) eliminate_tracked(s, s.num_vars - 1);
    if (s.infeasible) return false;
    for (const auto& r : s.eq)
        if (r.row.b != 0) return false;
    for (const auto& r : s.le)
        if (r.row.b < 0) return false;
    return true;
}

Polyhedron recession_cone(const Polyhedron& p) {
    Polyhedron cone = p;
    for (auto& r : cone.eq) r.b = 0;
    for (auto& r : cone.le) r.b = 0;
    return cone;
}

bool bounded_fm(const Polyhedron& p) {
    if (!feasible_fm(p)) {
        if (log_has("debug"))
            std::cerr << "[polyhedron] is_bounded on infeasible input: true by convention\n";
        return true;
    }
    Polyhedron cone = recession_cone(p);
    for (int v = 0; v < p.num_vars; ++v) {
        CoordInterval iv = coordinate_interval(cone, v);
        if (!iv.feasible)
            throw std::logic_error("recession cone cannot be empty");
        if (!iv.lo || !iv.hi) return false;
        if (*iv.lo != 0 || *iv.hi != 0)
            throw std::logic_error("recession cone interval must be {0} when finite");
    }
    return true;
}

} // namespace

CoordInterval coordinate_interval(const Polyhedron& p, int var) {
    p.validate();
    if (var < 0 || var >= p.num_vars)
        throw std::invalid_argument("coordinate_interval: variable out of range");
    TSys cur = track(p);
    int target = var;
    for (int v = p.num_vars - 1; cur.num_vars > 1; --v) {
        if (v == target) continue;
        eliminate_tracked(cur, v);
        if (v < target) --target; // indices shift below the eliminated column
    }
    CoordInterval out;
    if (cur.infeasible) {
        out.feasible = false;
        return out;
    }
    std::optional<Rat> pin;
    for (const auto& t : cur.eq) {
        const LinRow& r = t.row;
        if (r.a[0] == 0) {
            if (r.b != 0) out.feasible = false;
            continue;
        }
        Rat val = r.b / r.a[0];
        if (pin && *pin != val) out.feasible = false;
        pin = val;
    }
    for (const auto& t : cur.le) {
        const LinRow& r = t.row;
        if (r.a[0] == 0) {
            if (r.b < 0) out.feasible = false;
        } else if (r.a[0] > 0) {
            Rat hi = r.b / r.a[0];
            if (!out.hi || hi < *out.hi) out.hi = hi;
        } else {
            Rat lo = r.b / r.a[0];
            if (!out.lo || lo > *out.lo) out.lo = lo;
        }
    }
    if (pin) {
        if ((out.lo && *out.lo > *pin) || (out.hi && *out.hi < *pin)) out.feasible = false;
        out.lo = out.hi = pin;
    }
    if (out.lo && out.hi && *out.lo > *out.hi) out.feasible = false;
    return out;
}

bool is_feasible_simplex(const Polyhedron& p) {
    p.validate();
    LinearProgram lp;
    lp.num_vars = p.num_vars;
    for (const auto& r : p.le) {
        lp.A.push_back(r.a);
        lp.b.push_back(r.b);
    }
    for (const auto& r : p.eq) {
        lp.E.push_back(r.a);
        lp.f.push_back(r.b);
    }
    lp.c.assign(p.num_vars, Rat(0));
    return solve_lp(lp).status != LpResult::Status::Infeasible;
}

bool is_bounded_simplex(const Polyhedron& p) {
    if (!is_feasible_simplex(p)) return true;
    Polyhedron cone = recession_cone(p);
    LinearProgram lp;
    lp.num_vars = cone.num_vars;
    for (const auto& r : cone.le) {
        lp.A.push_back(r.a);
        lp.b.push_back(r.b);
    }
    for (const auto& r : cone.eq) {
        lp.E.push_back(r.a);
        lp.f.push_back(r.b);
    }
    for (int v = 0; v < cone.num_vars; ++v) {
        for (int dir : {1, -1}) {
            lp.c.assign(cone.num_vars, Rat(0));
            lp.c[v] = dir;
            auto res = solve_lp(lp);
            if (res.status == LpResult::Status::Unbounded) return false;
            if (res.status == LpResult::Status::Optimal && res.value > 0) return false;
        }
    }
    return true;
}

void set_cross_check(bool enabled) { g_cross_check = enabled; }

bool cross_check_enabled() { return g_cross_check || log_has("check"); }

bool is_feasible(const Polyhedron& p) {
    p.validate();
    bool fm = feasible_fm(p);
    if (cross_check_enabled()) {
        bool sx = is_feasible_simplex(p);
        if (fm != sx)
            throw std::logic_error("feasibility cross-check mismatch: fm=" +
                                   std::to_string(fm) + " simplex=" + std::to_string(sx));
    }
    return fm;
}

bool is_bounded(const Polyhedron& p) {
    p.validate();
    bool fm = bounded_fm(p);
    if (cross_check_enabled()) {
        bool sx = is_bounded_simplex(p);
        if (fm != sx)
            throw std::logic_error("boundedness cross-check mismatch: fm=" +
                                   std::to_string(fm) + " simplex=" + std::to_string(sx));
    }
    return fm;
}

std::vector<std::vector<long long>> lattice_points(const Polyhedron& p) {
    p.validate();
    if (!is_feasible(p)) return {};
    if (!is_bounded(p))
        throw std::invalid_argument("lattice_points: unbounded polyhedron");

    if (p.num_vars == 0) return {{}};

    // chain[k] keeps variables 0..k (projections of p)
    std::vector<Polyhedron> chain(p.num_vars);
    chain[p.num_vars - 1] = p;
    TSys s = track(p);
    for (int k = p.num_vars - 1; k > 0; --k) {
        eliminate_tracked(s, k);
        chain[k - 1] = untrack(s);
    }

    // The walk below runs in integer arithmetic: scale every row of every
    // chain level by its denominator lcm once, instead of paying rational
    // normalization per visited point.
    struct IRow {
        std::vector<Int> a;
        Int b;
        bool equality;
    };
    std::vector<std::vector<IRow>> levels(p.num_vars);
    for (int k = 0; k < p.num_vars; ++k) {
        auto scale_in = [&](const LinRow& r, bool equality) {
            Int l = denominator(r.b);
            for (const auto& c : r.a) l = lcm(l, denominator(c));
            IRow ir;
            ir.a.reserve(r.a.size());
            for (const auto& c : r.a) ir.a.push_back(Int(numerator(c) * (l / denominator(c))));
            ir.b = numerator(r.b) * (l / denominator(r.b));
            ir.equality = equality;
            levels[k].push_back(std::move(ir));
        };
        for (const auto& r : chain[k].eq) scale_in(r, true);
        for (const auto& r : chain[k].le) scale_in(r, false);
    }

    std::vector<std::vector<long long>> out;
    std::vector<Int> point(p.num_vars, 0);

    auto floor_div = [](const Int& num, const Int& den) { // den > 0
        Int q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    };

    // Interval for x_k inside chain[k] with x_0..x_{k-1} fixed.
    auto bounds_at = [&](int k) -> std::optional<std::pair<Int, Int>> {
        std::optional<Int> lo, hi;
        for (const auto& r : levels[k]) {
            Int rest = r.b;
            for (int j = 0; j < k; ++j) rest -= r.a[j] * point[j];
            const Int& coef = r.a[k];
            if (coef == 0) {
                if (r.equality ? rest != 0 : rest < 0) return std::nullopt;
                continue;
            }
            if (r.equality) {
                if (rest % coef != 0) return std::nullopt; // non-integral pin
                Int v = rest / coef;
                if ((lo && *lo > v) || (hi && *hi < v)) return std::nullopt;
                lo = hi = v;
            } else if (coef > 0) {
                Int v = floor_div(rest, coef);
                if (!hi || v < *hi) hi = v;
            } else {
                Int v = -floor_div(rest, Int(-coef)); // ceil(rest/coef), coef < 0
                if (!lo || v > *lo) lo = v;
            }
        }
        if (!lo || !hi)
            throw std::logic_error("unbounded coordinate in bounded polyhedron");
        if (*lo > *hi) return std::nullopt;
        return std::make_pair(*lo, *hi);
    };

    std::function<void(int)> walk = [&](int k) {
        auto bounds = bounds_at(k);
        if (!bounds) return;
        for (Int v = bounds->first; v <= bounds->second; ++v) {
            point[k] = v;
            if (k + 1 == p.num_vars) {
                std::vector<long long> pt;
                pt.reserve(p.num_vars);
                for (const auto& c : point) pt.push_back(c.convert_to<long long>());
                out.push_back(std::move(pt));
            } else {
                walk(k + 1);
            }
        }
    };
    walk(0);
    return out;
}

} // namespace qs
