#pragma once

#include "qs/quiver.hpp"
#include "qs/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qs {

// One isotypic part: `mult` copies of a single simple of dimension `root`.
// Distinct parts with equal roots stand for non-isomorphic simples and are
// legal only when p(root) > 0 (a p = 0 root has a unique simple).
struct RepPart {
    DimVector root;
    long long mult = 1;
};

bool operator==(const RepPart& a, const RepPart& b);
bool operator<(const RepPart& a, const RepPart& b);

// Decomposition type of a semisimple point.  Parts are kept sorted with the
// framed part (the one whose "inf" coordinate is 1) first; the part sum is
// the total dimension vector.
struct RepresentationType {
    std::vector<RepPart> parts;

    DimVector total(int num_vertices) const;
    std::string display(const Quiver& q) const;
};

bool operator==(const RepresentationType& a, const RepresentationType& b);
bool operator<(const RepresentationType& a, const RepresentationType& b);

// Leaf description of a flower type (all multiplicities 1):
//   framed part = (n0) + inf, plain parts n_1,...,n_k, n0 + sum n_i = n.
struct FlowerLeafSpec {
    int n = 0;
    int loops = 0;
    int w = 0;
    long long n0 = 0;
    std::vector<long long> parts;

    static FlowerLeafSpec from_type(int loops, int w, const Quiver& qext,
                                    const RepresentationType& tau);
};

// Slice datum attached to a type: one vertex per non-framed part.
struct SliceQuiverData {
    Quiver quiver;            // loops omitted when loops_removed
    DimVector v;              // part multiplicities
    DimVector w;              // -(v0, v^i)
    std::vector<long long> loop_counts; // p(v^i), before removal
    bool loops_removed = false;
};

// Existence of a simple representation with dimension v1 at parameter lam
// (strict superadditivity of p over parameter-orthogonal decompositions).
bool simple_rep_exists(const Quiver& qext, const Character& lam, const DimVector& v1);

// Flatness of the framed moment map: p is (non-strictly) superadditive over
// every decomposition of the extended dimension vector into positive roots.
bool moment_map_flat(const FramedSetting& s);

// All decomposition types of the extended vector at parameter 0, canonically
// ordered.  Each part's root must itself admit a simple representation.
std::vector<RepresentationType> enumerate_rep_types(const FramedSetting& s);

// Stratum dimension: 2 * sum of p(root) over parts (multiplicity ignored).
long long stratum_dim(const Quiver& qext, const RepresentationType& tau);

// Flower types with every multiplicity 1 and every non-framed part supported
// at the flower vertex.
bool is_relevant(const Quiver& qext, const RepresentationType& tau);

// 2k + 2 n0 w + (2 loops - 2) * sum_{i=0..k} n_i^2.
long long relevant_leaf_dim(const FlowerLeafSpec& leaf);

// Expand multiplicities into repeated multiplicity-1 parts.
RepresentationType relevantize(const RepresentationType& tau);

// Closure order test between flower types: tau2 lies in the boundary of the
// relevant type tau iff tau2 != tau and the part sizes of relevantize(tau2)
// can be grouped into blocks matching tau's part sizes (the framed excess
// r0 <= n0 absorbed into the n0 block).
bool in_boundary(const Quiver& qext, const RepresentationType& tau,
                 const RepresentationType& tau2);

// Minimum of dim(tau) - dim(tau2) over boundary members drawn from all_types;
// nullopt when the boundary is empty.
std::optional<long long> min_boundary_codim(const Quiver& qext,
                                            const RepresentationType& tau,
                                            const std::vector<RepresentationType>& all_types);

// Slice quiver of a type over the extended flower quiver.  Loops are dropped
// (and flagged) when every multiplicity is 1.
SliceQuiverData slice_quiver(const Quiver& qext, const RepresentationType& tau);

// Induced parameter on the slice of a relevant leaf: component i equals
// n_i * lambda - n_i * n0 * (loops - 1).  Minimal leaf: (lambda,...,lambda).
Character restrict_parameter(const Rat& lambda, const FlowerLeafSpec& leaf);

} // namespace qs
