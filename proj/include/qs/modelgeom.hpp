#pragma once

#include "qs/matrix.hpp"

#include <vector>

namespace qs {

// Difference coordinates of one off-diagonal pair block: s_k and t_k for
// k = 1..loops, stored 0-based.  The point must be nonzero; chart I needs
// s_1 != 0 and chart J needs s_2 != 0.
struct LeafPoint {
    std::vector<Rat> s, t;

    int loops() const { return static_cast<int>(s.size()); }
    bool in_chart_I() const { return !s.empty() && s[0] != 0; }
    bool in_chart_J() const { return s.size() > 1 && s[1] != 0; }
};

// Ordered symplectic basis attached to a point: the vectors are, in order,
//   [ pair direction, w^1..w^{loops-1}, v^{loops-1}..v^1, conjugate u ].
struct Frame {
    std::vector<std::vector<Rat>> vectors; // each of length 2*loops
};

// Block matrix [[0, I],[-I, 0]] of size 2*loops.
RatMat symplectic_form(int loops);

// Pairing sum_k (x_k y'_k - y_k x'_k) of two stacked (x; y) vectors.
Rat symplectic_pair(const std::vector<Rat>& a, const std::vector<Rat>& b);

Frame frame_I(const LeafPoint& p);
Frame frame_J(const LeafPoint& p);

// Matrix whose columns are the frame vectors in order.
RatMat frame_matrix(const Frame& f);

// Coordinates of frame_J in frame_I: the unique M with F_I * M = F_J,
// computed by exact elimination.  Needs both charts.
RatMat transition_matrix(const LeafPoint& p);

// (m - I)^dim == 0, decided exactly.
bool is_unipotent(const RatMat& m);

} // namespace qs
