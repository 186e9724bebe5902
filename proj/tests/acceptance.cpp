// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Counts and dimensions are exact; the only tolerances are the
// wall-clock budgets pinned below.
#include "qs/hypertoric.hpp"
#include "qs/modelgeom.hpp"
#include "qs/polyhedron.hpp"
#include "qs/roots.hpp"
#include "qs/strata.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace qs;

namespace {

constexpr double kBudgetChamberGrid = 120.0; // seconds
constexpr double kBudgetBijection = 60.0;
constexpr double kBudgetModelGeom = 10.0;
constexpr unsigned long long kCorpusSeed = 20260815ull;
constexpr unsigned long long kModelSeed = 5082026ull;

struct Outcome {
    bool ok = true;
    std::ostringstream why;

    void fail(const std::string& msg) {
        ok = false;
        why << "    " << msg << "\n";
    }
};

RepresentationType minimal_leaf_type(int n) {
    RepresentationType tau;
    tau.parts.push_back({{0, 1}, 1});
    for (int i = 0; i < n; ++i) tau.parts.push_back({{1, 0}, 1});
    return tau;
}

// ---- 1. chamber counting across the full parameter grid --------------------

Outcome criterion_counts() {
    Outcome out;
    for (int n : {2, 3, 4}) {
        for (int ell : {2, 3}) {
            for (int w : {1, 2}) {
                long long lo = -static_cast<long long>(n - 1) * (ell - 1) - 2;
                long long hi = static_cast<long long>(n - 1) * (ell - 1) + w + 2;
                for (long long lam = lo; lam <= hi; ++lam) {
                    Arrangement arr = build_reduced(n, ell, w, Rat(lam));
                    long long got = static_cast<long long>(enumerate_bounded(arr).size());
                    long long want = reference_count(n, ell, w, Rat(lam));
                    if (got != want) {
                        std::ostringstream m;
                        m << "n=" << n << " ell=" << ell << " w=" << w << " lambda=" << lam
                          << ": enumerated " << got << ", closed form " << want;
                        out.fail(m.str());
                    }
                }
                // non-integral parameters carry no bounded chambers
                for (Rat lam : {Rat(1, 2), Rat(-1, 3), Rat(2 * hi - 1, 2)}) {
                    Arrangement arr = build_reduced(n, ell, w, lam);
                    if (!enumerate_bounded(arr).empty() || reference_count(n, ell, w, lam) != 0) {
                        std::ostringstream m;
                        m << "n=" << n << " ell=" << ell << " w=" << w
                          << " non-integer lambda=" << rat_to_string(lam) << ": expected none";
                        out.fail(m.str());
                    }
                }
            }
        }
    }
    return out;
}

// ---- 2. full-arrangement enumeration reduces bijectively -------------------

Outcome criterion_reduction() {
    Outcome out;
    struct Cell {
        int n, ell, w;
    };
    std::vector<Cell> cells{{2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {2, 3, 2}, {3, 2, 1}};
    for (const Cell& c : cells) {
        auto [qext, vext] = extend(flower_setting(c.n, c.ell, c.w));
        SliceQuiverData slice = slice_quiver(qext, minimal_leaf_type(c.n));
        long long plus = static_cast<long long>(c.n - 1) * (c.ell - 1) + c.w;
        long long minus = -static_cast<long long>(c.n - 1) * (c.ell - 1);
        for (long long lam : {minus - 1, minus, minus + 1, plus - 1, plus, plus + 1}) {
            Arrangement full = build_full(slice, Rat(lam));
            Arrangement red = build_reduced(c.n, c.ell, c.w, Rat(lam));
            auto full_chs = enumerate_bounded(full);
            auto red_chs = enumerate_bounded(red);
            std::ostringstream where;
            where << "n=" << c.n << " ell=" << c.ell << " w=" << c.w << " lambda=" << lam;
            if (full_chs.size() != red_chs.size()) {
                out.fail(where.str() + ": full count " + std::to_string(full_chs.size()) +
                         " != reduced count " + std::to_string(red_chs.size()));
                continue;
            }
            std::set<SignVector> red_signs;
            for (const auto& ch : red_chs) red_signs.insert(ch.sign);
            std::set<SignVector> images;
            for (const auto& ch : full_chs) {
                SignVector img = reduce_chamber(full, ch);
                if (!red_signs.count(img)) out.fail(where.str() + ": image not a reduced chamber");
                images.insert(img);
            }
            if (images.size() != full_chs.size())
                out.fail(where.str() + ": reduction not injective");
        }
    }
    return out;
}

// ---- 3. orderings exhaust S_n and the action intertwines -------------------

Outcome criterion_orderings() {
    Outcome out;
    for (int n : {2, 3, 4}) {
        long long lam = n; // super-threshold for ell = 2, w = 1
        auto chs = enumerate_bounded(build_reduced(n, 2, 1, Rat(lam)));
        long long nf = 1;
        for (int i = 2; i <= n; ++i) nf *= i;

        std::set<std::vector<int>> seen;
        std::set<SignVector> bounded_signs;
        for (const auto& ch : chs) {
            seen.insert(chamber_to_ordering(ch.sign, n));
            bounded_signs.insert(ch.sign);
        }
        if (static_cast<long long>(chs.size()) != nf)
            out.fail("n=" + std::to_string(n) + ": " + std::to_string(chs.size()) +
                     " chambers, want " + std::to_string(nf));
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        long long perms = 0;
        do {
            ++perms;
            if (!seen.count(sigma))
                out.fail("n=" + std::to_string(n) + ": no chamber yields this ordering");
            for (const auto& ch : chs) {
                SignVector moved = sn_act(sigma, ch.sign, n);
                if (!bounded_signs.count(moved)) {
                    out.fail("n=" + std::to_string(n) + ": action leaves the bounded set");
                    continue;
                }
                auto direct = chamber_to_ordering(moved, n);
                auto composed = chamber_to_ordering(ch.sign, n);
                for (int& v : composed) v = sigma[v];
                if (direct != composed)
                    out.fail("n=" + std::to_string(n) + ": action does not intertwine");
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        if (perms != nf || seen.size() != static_cast<size_t>(nf))
            out.fail("n=" + std::to_string(n) + ": ordering map not onto S_n");
    }
    return out;
}

// ---- 4. flatness and the stratification of the (2,2,1) flower --------------

Outcome criterion_strata() {
    Outcome out;
    for (int n : {1, 2, 3})
        for (int ell : {2, 3})
            for (int w : {1, 2})
                if (!moment_map_flat(flower_setting(n, ell, w)))
                    out.fail("moment map not flat at n=" + std::to_string(n) +
                             " ell=" + std::to_string(ell) + " w=" + std::to_string(w));

    FramedSetting s = flower_setting(2, 2, 1);
    auto [qext, vext] = extend(s);
    auto types = enumerate_rep_types(s);
    if (types.size() != 5)
        out.fail("flower (2,2,1): " + std::to_string(types.size()) + " types, want 5");

    long long open_dim = -1;
    for (const auto& tau : types) open_dim = std::max(open_dim, stratum_dim(qext, tau));
    if (open_dim != 12)
        out.fail("open leaf dimension " + std::to_string(open_dim) + ", want 12");

    long long minimal_dim = stratum_dim(qext, minimal_leaf_type(2));
    if (minimal_dim != 8)
        out.fail("minimal relevant leaf dimension " + std::to_string(minimal_dim) + ", want 8");
    return out;
}

// ---- 5. boundary codimensions -----------------------------------------------

Outcome criterion_boundary() {
    Outcome out;
    for (int ell : {2, 3}) {
        for (int n = 1; n <= 5; ++n) {
            FramedSetting s = flower_setting(n, ell, 1);
            auto [qext, vext] = extend(s);
            auto types = enumerate_rep_types(s);
            auto codim = min_boundary_codim(qext, minimal_leaf_type(n), types);
            if (codim && *codim < 4) {
                std::ostringstream m;
                m << "minimal leaf n=" << n << " ell=" << ell << ": codim " << *codim << " < 4";
                out.fail(m.str());
            }
        }
    }
    // the one-2a relevant leaf at ell = 2 meets its boundary in codim 2
    for (int n = 2; n <= 5; ++n) {
        FramedSetting s = flower_setting(n, 2, 1);
        auto [qext, vext] = extend(s);
        auto types = enumerate_rep_types(s);
        RepresentationType tau;
        tau.parts.push_back({{0, 1}, 1});
        for (int i = 0; i < n - 2; ++i) tau.parts.push_back({{1, 0}, 1});
        tau.parts.push_back({{2, 0}, 1});
        auto codim = min_boundary_codim(qext, tau, types);
        if (!codim || *codim != 2) {
            std::ostringstream m;
            m << "doubled-part leaf n=" << n << ": codim "
              << (codim ? std::to_string(*codim) : std::string("none")) << ", want 2";
            out.fail(m.str());
        }
    }
    return out;
}

// ---- 6. model geometry: frames, transition matrix, unipotency --------------

Rat random_rat(std::mt19937_64& rng) {
    long long num = static_cast<long long>(rng() % 13) - 6;
    long long den = 1 + static_cast<long long>(rng() % 3);
    return Rat(num, den);
}

RatMat expected_transition(const LeafPoint& p) {
    int l = p.loops();
    int dim = 2 * l;
    Rat d = p.s[0] * p.s[1];
    RatMat m = identity_matrix(dim);
    int v1 = dim - 2, u = dim - 1;
    m[0][v1] = Rat(-1) / d;
    m[1][u] = Rat(1) / d;
    m[1][v1] = (p.t[1] / p.s[0] - p.t[0] / p.s[1]) / d;
    for (int k = 2; k <= l - 1; ++k) {
        m[1][k] = -p.s[k] / d;
        m[1][dim - 1 - k] = p.t[k] / d;
        m[k][v1] = p.t[k] / d;
        m[dim - 1 - k][v1] = p.s[k] / d;
    }
    return m;
}

RatMat expected_gram(int loops) {
    int dim = 2 * loops;
    RatMat g = zero_matrix(dim, dim);
    g[0][dim - 1] = 1;
    g[dim - 1][0] = -1;
    for (int k = 1; k <= loops - 1; ++k) {
        g[dim - 1 - k][k] = 1;
        g[k][dim - 1 - k] = -1;
    }
    return g;
}

Outcome criterion_modelgeom() {
    Outcome out;
    std::mt19937_64 rng(kModelSeed);
    for (int l : {2, 3, 4}) {
        RatMat want_gram = expected_gram(l);
        int dim = 2 * l;
        for (int rep = 0; rep < 50; ++rep) {
            LeafPoint p;
            p.s.resize(l);
            p.t.resize(l);
            do {
                for (auto& c : p.s) c = random_rat(rng);
                for (auto& c : p.t) c = random_rat(rng);
            } while (p.s[0] == 0 || p.s[1] == 0);

            std::ostringstream where;
            where << "loops=" << l << " sample=" << rep;
            for (const Frame& f : {frame_I(p), frame_J(p)}) {
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j)
                        if (symplectic_pair(f.vectors[i], f.vectors[j]) != want_gram[i][j]) {
                            out.fail(where.str() + ": Gram matrix not Darboux");
                            i = dim;
                            break;
                        }
            }
            RatMat m = transition_matrix(p);
            if (m != expected_transition(p))
                out.fail(where.str() + ": transition differs from the closed form");
            RatMat nil = mat_sub(m, identity_matrix(dim));
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j <= i; ++j)
                    if (nil[i][j] != 0) {
                        out.fail(where.str() + ": defect not strictly upper triangular");
                        i = dim;
                        break;
                    }
            if (!is_unipotent(m)) out.fail(where.str() + ": transition not unipotent");
        }
    }
    return out;
}

// ---- 7. elimination vs simplex on the random corpus ------------------------

Outcome criterion_dual_route() {
    Outcome out;
    std::mt19937_64 rng(kCorpusSeed);
    auto coeff = [&]() { return static_cast<long long>(rng() % 7) - 3; };
    for (int t = 0; t < 200; ++t) {
        int nv = 1 + static_cast<int>(rng() % 6);
        int nle = 1 + static_cast<int>(rng() % 12);
        int neq = static_cast<int>(rng() % 3);
        Polyhedron p;
        p.num_vars = nv;
        for (int i = 0; i < nle + neq; ++i) {
            LinRow r;
            for (int j = 0; j < nv; ++j) r.a.push_back(Rat(coeff()));
            r.b = Rat(static_cast<long long>(rng() % 13) - 6, 1 + rng() % 2);
            if (i < neq) p.eq.push_back(std::move(r));
            else p.le.push_back(std::move(r));
        }
        if (is_feasible(p) != is_feasible_simplex(p))
            out.fail("system " + std::to_string(t) + ": feasibility verdicts differ");
        if (is_bounded(p) != is_bounded_simplex(p))
            out.fail("system " + std::to_string(t) + ": boundedness verdicts differ");
    }
    return out;
}

// -----------------------------------------------------------------------------

int report(int index, const char* label, Outcome (*fn)(), double budget, int& failures) {
    auto start = std::chrono::steady_clock::now();
    Outcome out = fn();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = budget <= 0 || secs < budget;
    bool ok = out.ok && in_budget;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (ok ? "[PASS]" : "[FAIL]") << " " << index << ". " << label << " (" << secs << "s";
    if (budget > 0) line << " / budget " << budget << "s";
    line << ")";
    std::cout << line.str() << "\n";
    if (!out.ok) std::cerr << out.why.str();
    if (!in_budget) std::cerr << "    over budget\n";
    if (!ok) ++failures;
    return 0;
}

} // namespace

int main() {
    int failures = 0;
    report(1, "bounded chamber counts match the closed form on the full grid",
           criterion_counts, kBudgetChamberGrid, failures);
    report(2, "full-arrangement chambers reduce bijectively", criterion_reduction,
           kBudgetBijection, failures);
    report(3, "orderings biject with S_n and the action intertwines",
           criterion_orderings, 0, failures);
    report(4, "moment map flat; (2,2,1) strata count and dimensions",
           criterion_strata, 0, failures);
    report(5, "boundary codimension bounds", criterion_boundary, 0, failures);
    report(6, "Darboux frames and unipotent transition matrices",
           criterion_modelgeom, kBudgetModelGeom, failures);
    report(7, "elimination and simplex verdicts agree on the random corpus",
           criterion_dual_route, 0, failures);

    if (failures) {
        std::cerr << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
