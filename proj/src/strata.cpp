#include "qs/strata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace qs {

bool operator==(const RepPart& a, const RepPart& b) {
    return a.mult == b.mult && a.root == b.root;
}

bool operator<(const RepPart& a, const RepPart& b) {
    if (a.root != b.root) return a.root < b.root;
    return a.mult < b.mult;
}

bool operator==(const RepresentationType& a, const RepresentationType& b) {
    return a.parts == b.parts;
}

bool operator<(const RepresentationType& a, const RepresentationType& b) {
    return a.parts < b.parts;
}

DimVector RepresentationType::total(int num_vertices) const {
    DimVector acc(num_vertices, 0);
    for (const auto& part : parts) {
        if (static_cast<int>(part.root.size()) != num_vertices)
            throw std::invalid_argument("part length mismatch in type total");
        for (int i = 0; i < num_vertices; ++i) acc[i] += part.mult * part.root[i];
    }
    return acc;
}

namespace {

int inf_index(const Quiver& q) { return q.index_of("inf"); }

bool is_extended_flower(const Quiver& q) {
    return q.num_vertices() == 2 && q.index_of("inf") == 1 && q.loop_free(1);
}

std::string flower_root_name(const DimVector& root) {
    long long m = root[0];
    if (root[1] == 1) {
        if (m == 0) return "a_inf";
        if (m == 1) return "a_inf+a";
        return "a_inf+" + std::to_string(m) + "a";
    }
    if (m == 1) return "a";
    return std::to_string(m) + "a";
}

// Maximal sum of p over decompositions of `target` into >= 2 positive roots
// drawn (with repetition) from `roots`; nullopt when no such decomposition.
struct DecompMax {
    const std::vector<DimVector>& roots;
    const std::vector<long long>& pvals;
    std::map<std::pair<DimVector, int>, std::optional<long long>> memo;

    static bool leq(const DimVector& a, const DimVector& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    }
    static bool is_zero(const DimVector& a) {
        return std::all_of(a.begin(), a.end(), [](long long c) { return c == 0; });
    }

    // best over decompositions into >= 1 roots of index >= i
    std::optional<long long> best(const DimVector& u, int i) {
        if (is_zero(u)) return 0;
        auto key = std::make_pair(u, i);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::optional<long long> out;
        for (int j = i; j < static_cast<int>(roots.size()); ++j) {
            if (!leq(roots[j], u)) continue;
            DimVector rest(u);
            for (size_t t = 0; t < u.size(); ++t) rest[t] -= roots[j][t];
            auto sub = best(rest, j);
            if (sub && (!out || pvals[j] + *sub > *out)) out = pvals[j] + *sub;
        }
        memo[key] = out;
        return out;
    }

    // best over decompositions of `target` into >= 2 roots
    std::optional<long long> best_proper(const DimVector& target) {
        std::optional<long long> out;
        for (int j = 0; j < static_cast<int>(roots.size()); ++j) {
            if (roots[j] == target || !leq(roots[j], target)) continue;
            DimVector rest(target);
            for (size_t t = 0; t < target.size(); ++t) rest[t] -= roots[j][t];
            auto sub = best(rest, j);
            if (sub && (!out || pvals[j] + *sub > *out)) out = pvals[j] + *sub;
        }
        return out;
    }
};

Rat char_dot(const Character& c, const DimVector& v) {
    Rat acc = 0;
    for (size_t i = 0; i < v.size(); ++i) acc += c[i] * v[i];
    return acc;
}

} // namespace

std::string RepresentationType::display(const Quiver& q) const {
    std::string out = "(";
    bool flower = is_extended_flower(q);
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "; ";
        if (flower) {
            out += flower_root_name(parts[i].root);
        } else {
            out += "[";
            for (size_t j = 0; j < parts[i].root.size(); ++j) {
                if (j) out += ",";
                out += std::to_string(parts[i].root[j]);
            }
            out += "]";
        }
        out += "," + std::to_string(parts[i].mult);
    }
    return out + ")";
}

bool simple_rep_exists(const Quiver& qext, const Character& lam, const DimVector& v1) {
    validate_dim(qext, v1, "simple_rep_exists v");
    if (static_cast<int>(lam.size()) != qext.num_vertices())
        throw std::invalid_argument("simple_rep_exists: parameter length mismatch");
    bool zero = std::all_of(v1.begin(), v1.end(), [](long long c) { return c == 0; });
    if (zero) throw std::invalid_argument("simple_rep_exists: zero vector");

    if (!is_positive_root(qext, v1)) return false;
    if (char_dot(lam, v1) != 0) return false;

    // Closed form for the extended flower (>= 2 loops): every root m*a and
    // a_inf + m*a carries a simple at any orthogonal parameter.  This includes
    // a_inf + a at w = 1, where the decomposition search below would reject it
    // on the equality p(a_inf+a) = p(a_inf) + p(a); the two routes agree on
    // every other flower input.
    if (is_extended_flower(qext) && qext.loop_count(0) >= 2 && v1[1] <= 1) return true;

    std::vector<DimVector> roots;
    std::vector<long long> pvals;
    for (auto& r : positive_roots_below(qext, v1)) {
        if (char_dot(lam, r) != 0) continue;
        pvals.push_back(p_form(qext, r));
        roots.push_back(std::move(r));
    }
    DecompMax dm{roots, pvals, {}};
    auto best = dm.best_proper(v1);
    return !best || *best < p_form(qext, v1);
}

bool moment_map_flat(const FramedSetting& s) {
    auto [qext, vt] = extend(s);
    std::vector<DimVector> roots = positive_roots_below(qext, vt);
    std::vector<long long> pvals;
    pvals.reserve(roots.size());
    for (const auto& r : roots) pvals.push_back(p_form(qext, r));
    DecompMax dm{roots, pvals, {}};
    auto best = dm.best_proper(vt);
    return !best || *best <= p_form(qext, vt);
}

namespace {

void descending_partitions(long long c, long long max_part,
                           std::vector<long long>& cur,
                           const std::function<void()>& emit) {
    if (c == 0) {
        emit();
        return;
    }
    for (long long part = std::min(c, max_part); part >= 1; --part) {
        cur.push_back(part);
        descending_partitions(c - part, part, cur, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<RepresentationType> enumerate_rep_types(const FramedSetting& s) {
    auto [qext, vt] = extend(s);
    int nv = qext.num_vertices();
    int inf = inf_index(qext);

    std::vector<DimVector> framed, plain;
    std::vector<long long> plain_p;
    Character zero_lam(nv, Rat(0));
    for (auto& r : positive_roots_below(qext, vt)) {
        if (!simple_rep_exists(qext, zero_lam, r)) continue;
        if (r[inf] == 1) framed.push_back(std::move(r));
        else plain.push_back(std::move(r));
    }
    for (const auto& r : plain) plain_p.push_back(p_form(qext, r));

    std::vector<RepresentationType> out;
    std::vector<RepPart> cur;

    std::function<void(DimVector, size_t)> rec = [&](DimVector rem, size_t j) {
        bool done = std::all_of(rem.begin(), rem.end(),
                                [](long long c) { return c == 0; });
        if (done) {
            RepresentationType tau;
            tau.parts = cur;
            std::sort(tau.parts.begin() + 1, tau.parts.end());
            out.push_back(std::move(tau));
            return;
        }
        if (j >= plain.size()) return;
        rec(rem, j + 1);
        long long cap = 0;
        {
            // max count of plain[j] fitting in rem
            cap = -1;
            for (int t = 0; t < nv; ++t)
                if (plain[j][t] > 0) {
                    long long q = rem[t] / plain[j][t];
                    cap = (cap < 0) ? q : std::min(cap, q);
                }
        }
        for (long long c = 1; c <= cap; ++c) {
            DimVector rest(rem);
            for (int t = 0; t < nv; ++t) rest[t] -= c * plain[j][t];
            if (plain_p[j] == 0) {
                // unique simple: one isotypic part only
                cur.push_back({plain[j], c});
                rec(rest, j + 1);
                cur.pop_back();
            } else {
                std::vector<long long> mults;
                descending_partitions(c, c, mults, [&]() {
                    size_t added = mults.size();
                    for (long long m : mults) cur.push_back({plain[j], m});
                    rec(rest, j + 1);
                    cur.resize(cur.size() - added);
                });
            }
        }
    };

    for (const auto& v0 : framed) {
        DimVector rem(vt);
        for (int t = 0; t < nv; ++t) rem[t] -= v0[t];
        cur.clear();
        cur.push_back({v0, 1});
        rec(rem, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long stratum_dim(const Quiver& qext, const RepresentationType& tau) {
    if (tau.parts.empty()) throw std::invalid_argument("empty representation type");
    long long acc = 0;
    for (const auto& part : tau.parts) acc += p_form(qext, part.root);
    return 2 * acc;
}

bool is_relevant(const Quiver& qext, const RepresentationType& tau) {
    if (!is_extended_flower(qext))
        throw std::invalid_argument("is_relevant expects an extended flower quiver");
    if (tau.parts.empty()) return false;
    int inf = inf_index(qext);
    if (tau.parts[0].root[inf] != 1 || tau.parts[0].mult != 1) return false;
    for (size_t i = 1; i < tau.parts.size(); ++i) {
        const auto& part = tau.parts[i];
        if (part.root[inf] != 0 || part.mult != 1 || part.root[0] <= 0) return false;
    }
    return true;
}

FlowerLeafSpec FlowerLeafSpec::from_type(int loops, int w, const Quiver& qext,
                                         const RepresentationType& tau) {
    if (!is_relevant(qext, tau))
        throw std::invalid_argument("type is not a relevant flower leaf");
    FlowerLeafSpec leaf;
    leaf.loops = loops;
    leaf.w = w;
    leaf.n0 = tau.parts[0].root[0];
    long long n = leaf.n0;
    for (size_t i = 1; i < tau.parts.size(); ++i) {
        leaf.parts.push_back(tau.parts[i].root[0]);
        n += tau.parts[i].root[0];
    }
    leaf.n = static_cast<int>(n);
    return leaf;
}

long long relevant_leaf_dim(const FlowerLeafSpec& leaf) {
    if (leaf.n0 < 0) throw std::invalid_argument("negative framed component");
    long long sum = leaf.n0, squares = leaf.n0 * leaf.n0;
    for (long long p : leaf.parts) {
        if (p <= 0) throw std::invalid_argument("non-positive leaf part");
        sum += p;
        squares += p * p;
    }
    if (sum != leaf.n) throw std::invalid_argument("leaf parts do not sum to n");
    long long k = static_cast<long long>(leaf.parts.size());
    return 2 * k + 2 * leaf.n0 * leaf.w + (2 * leaf.loops - 2) * squares;
}

RepresentationType relevantize(const RepresentationType& tau) {
    RepresentationType out;
    for (const auto& part : tau.parts)
        for (long long m = 0; m < part.mult; ++m) out.parts.push_back({part.root, 1});
    if (out.parts.size() > 1) std::sort(out.parts.begin() + 1, out.parts.end());
    return out;
}

namespace {

// Can `items` be split into blocks with the given exact target sums?
bool block_partition_exists(std::vector<long long> items,
                            std::vector<long long> targets) {
    long long total = 0, want = 0;
    for (long long x : items) total += x;
    for (long long t : targets) {
        if (t < 0) return false;
        want += t;
    }
    if (total != want) return false;
    std::sort(items.begin(), items.end(), std::greater<>());
    std::function<bool(size_t)> place = [&](size_t idx) -> bool {
        if (idx == items.size()) return true;
        for (size_t b = 0; b < targets.size(); ++b) {
            if (targets[b] < items[idx]) continue;
            // skip blocks identical to an already-tried one
            bool dup = false;
            for (size_t c = 0; c < b; ++c)
                if (targets[c] == targets[b]) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            targets[b] -= items[idx];
            if (place(idx + 1)) {
                targets[b] += items[idx];
                return true;
            }
            targets[b] += items[idx];
        }
        return false;
    };
    return place(0);
}

} // namespace

bool in_boundary(const Quiver& qext, const RepresentationType& tau,
                 const RepresentationType& tau2) {
    if (!is_relevant(qext, tau))
        throw std::invalid_argument("in_boundary: tau must be relevant");
    RepresentationType rel = relevantize(tau2);
    if (!is_relevant(qext, rel))
        throw std::invalid_argument("in_boundary: tau2 must relevantize to a flower leaf");
    if (tau2 == tau) return false;

    long long n0 = tau.parts[0].root[0];
    long long r0 = rel.parts[0].root[0];
    if (r0 > n0) return false;
    std::vector<long long> items, targets;
    for (size_t i = 1; i < rel.parts.size(); ++i) items.push_back(rel.parts[i].root[0]);
    targets.push_back(n0 - r0);
    for (size_t i = 1; i < tau.parts.size(); ++i) targets.push_back(tau.parts[i].root[0]);
    return block_partition_exists(std::move(items), std::move(targets));
}

std::optional<long long> min_boundary_codim(
    const Quiver& qext, const RepresentationType& tau,
    const std::vector<RepresentationType>& all_types) {
    std::optional<long long> out;
    long long dim_tau = stratum_dim(qext, tau);
    for (const auto& other : all_types) {
        if (other == tau) continue;
        if (!in_boundary(qext, tau, other)) continue;
        long long codim = dim_tau - stratum_dim(qext, other);
        if (!out || codim < *out) out = codim;
    }
    return out;
}

SliceQuiverData slice_quiver(const Quiver& qext, const RepresentationType& tau) {
    if (!is_extended_flower(qext))
        throw std::invalid_argument("slice_quiver expects an extended flower quiver");
    if (tau.parts.empty() || tau.parts[0].root[inf_index(qext)] != 1)
        throw std::invalid_argument("slice_quiver: missing framed part");
    const DimVector& v0 = tau.parts[0].root;
    size_t k = tau.parts.size() - 1;

    SliceQuiverData data;
    data.loops_removed = true;
    for (const auto& part : tau.parts)
        if (part.mult != 1) data.loops_removed = false;

    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> arrows;
    for (size_t i = 1; i <= k; ++i) {
        labels.push_back(std::to_string(i));
        const auto& part = tau.parts[i];
        data.v.push_back(part.mult);
        data.w.push_back(-tits_form(qext, v0, part.root));
        data.loop_counts.push_back(p_form(qext, part.root));
    }
    for (size_t i = 1; i <= k; ++i)
        for (size_t j = i + 1; j <= k; ++j) {
            long long between = -tits_form(qext, tau.parts[i].root, tau.parts[j].root);
            if (between < 0 || between % 2 != 0)
                throw std::logic_error("slice pair count not a nonnegative even number");
            // most symmetric orientation: split evenly both ways
            for (long long a = 0; a < between / 2; ++a) {
                arrows.push_back({static_cast<int>(i - 1), static_cast<int>(j - 1)});
                arrows.push_back({static_cast<int>(j - 1), static_cast<int>(i - 1)});
            }
        }
    if (!data.loops_removed)
        for (size_t i = 0; i < k; ++i)
            for (long long a = 0; a < data.loop_counts[i]; ++a)
                arrows.push_back({static_cast<int>(i), static_cast<int>(i)});
    data.quiver = Quiver(std::move(labels), std::move(arrows));
    return data;
}

Character restrict_parameter(const Rat& lambda, const FlowerLeafSpec& leaf) {
    Character out;
    out.reserve(leaf.parts.size());
    for (long long ni : leaf.parts)
        out.push_back(Rat(ni) * lambda - Rat(ni * leaf.n0 * (leaf.loops - 1)));
    return out;
}

} // namespace qs
