#pragma once

#include "qs/polyhedron.hpp"
#include "qs/quiver.hpp"
#include "qs/strata.hpp"

#include <string>
#include <vector>

namespace qs {

// Sign assignment, one entry per arrangement variable, +1 or -1.
struct SignVector {
    std::vector<int8_t> signs;
};

bool operator==(const SignVector& a, const SignVector& b);
bool operator<(const SignVector& a, const SignVector& b);

enum class ChamberStatus { Empty, Bounded, Unbounded };

struct Chamber {
    SignVector sign;
    ChamberStatus status = ChamberStatus::Empty;
    std::vector<std::vector<long long>> lattice; // populated when Bounded
};

// Affine half-space arrangement cut out by per-vertex balance equations.
// Two flavours share the realization scheme:
//   full:    one variable per slice arrow (loops excluded) and per framing
//            leg; '+' means x >= 0, '-' means x <= -1.
//   reduced: one variable h_ij per unordered vertex pair and one q_i per
//            vertex; '+' means h_ij >= loops-1 / q_i >= 0, '-' means
//            h_ij <= -(loops-1) / q_i <= -w.
struct Arrangement {
    bool reduced = false;
    int n = 0, loops = 0, w = 0;
    Rat lambda;
    bool integral = false;            // lambda in Z; enumeration empty otherwise
    std::vector<std::string> vars;    // canonical variable order
    std::vector<char> integral_flags; // one per variable
    std::vector<LinRow> eqs;          // balance equations over vars
    std::vector<Rat> plus_min;        // '+' -> x_v >= plus_min[v]
    std::vector<Rat> minus_max;       // '-' -> x_v <= minus_max[v]
};

// Reduced arrangement for the n-vertex minimal slice with `loops` loops and
// framing w at parameter lambda.
Arrangement build_reduced(int n, int loops, int w, const Rat& lambda);

// Full arrangement attached (only) to a minimal-leaf slice datum.
Arrangement build_full(const SliceQuiverData& slice, const Rat& lambda);

// Realize one chamber as a rational polyhedron (equations + chosen sides).
Polyhedron realize_chamber(const Arrangement& arr, const SignVector& sign);

// Classify one sign vector; lattice points are filled in when bounded.
Chamber chamber_status(const Arrangement& arr, const SignVector& sign);

// All bounded nonempty chambers, brute force over every sign vector, in
// lexicographic sign order ('+' before '-').  Non-integral lambda -> empty.
std::vector<Chamber> enumerate_bounded(const Arrangement& arr, int jobs = 1);

// Closed-form bounded-chamber count: n! when lambda is an integer with
// lambda >= (n-1)(loops-1)+w or lambda <= -(n-1)(loops-1), else 0.
long long reference_count(int n, int loops, int w, const Rat& lambda);

// Collapse a bounded full chamber onto reduced signs (per-pair and per-leg
// signs are coherent on bounded chambers; incoherence is an error).
SignVector reduce_chamber(const Arrangement& full, const Chamber& chamber);

// Position of h_ij (i < j, 0-based) in the reduced variable order.
int h_index(int n, int i, int j);

// Recursive peel: the unique index whose h-signs against all remaining
// indices are '+' comes first; errors when no unique peel index exists.
std::vector<int> chamber_to_ordering(const SignVector& reduced, int n);

// Relabel a reduced sign vector by a permutation sigma (0-based image list):
// the sign of h_{sigma(i) sigma(j)} is the sign of h_ij, with orientation
// flips for reversed pairs; q signs relabel directly.
SignVector sn_act(const std::vector<int>& sigma, const SignVector& reduced, int n);

} // namespace qs
