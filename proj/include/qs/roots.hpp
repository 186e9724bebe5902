#pragma once

#include "qs/quiver.hpp"

#include <utility>
#include <vector>

namespace qs {

// Symmetric bilinear form of the quiver:
//   (v,v') = sum_i v_i v'_i (2 - 2 n_ii) - sum_{i != j} v_i v'_j n_ij.
// Orientation-independent; loops enter only through n_ii.
long long tits_form(const Quiver& q, const DimVector& a, const DimVector& b);

// p(v) = 1 - (v,v)/2.  (v,v) is always even, so this is an exact integer.
long long p_form(const Quiver& q, const DimVector& v);

// Framed extension: appends a vertex "inf" with w_i arrows i -> inf and
// returns the extended quiver together with the extended vector (v, 1).
// Rejects quivers that already carry an "inf" vertex.
std::pair<Quiver, DimVector> extend(const FramedSetting& s);

// Positive-root test for quivers with loops.  Reflections act only at
// loop-free vertices and are applied only when they strictly lower the
// coordinate; a vector survives iff it lands on a simple root or in the
// fundamental region (connected support, (beta, e_i) <= 0 at every loop-free
// vertex of the support).  beta must be nonzero and componentwise >= 0.
bool is_positive_root(const Quiver& q, const DimVector& beta);

// All positive roots beta with 0 <= beta <= bound, in lexicographic order
// (componentwise, first index most significant).
std::vector<DimVector> positive_roots_below(const Quiver& q, const DimVector& bound);

// (theta, lambda) is generic for v iff no positive root v' < v (componentwise,
// v' != v) satisfies lambda . v' = 0 and theta . v' = 0.
bool is_generic(const Quiver& q, const Character& theta, const Character& lambda,
                const DimVector& v);

} // namespace qs
