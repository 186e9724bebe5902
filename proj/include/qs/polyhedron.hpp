#pragma once

#include "qs/rational.hpp"

#include <optional>
#include <vector>

namespace qs {

// One linear row a . x (= or <=) b; the container decides which.
struct LinRow {
    std::vector<Rat> a;
    Rat b;
};

// Rational polyhedron { x : eq rows hold with =, le rows with <= }.
struct Polyhedron {
    int num_vars = 0;
    std::vector<LinRow> eq;
    std::vector<LinRow> le;

    void validate() const;
};

// Fourier-Motzkin projection of one variable.  An equality containing the
// variable is used for exact substitution when available; otherwise every
// (lower, upper) inequality pair is combined.  Rows are normalized to
// coprime integer coefficients; duplicate rows keep the tightest bound
// (pairwise dominance only, no general redundancy elimination).
Polyhedron fm_eliminate(const Polyhedron& p, int var);

// Feasibility over the rationals, decided by eliminating every variable.
bool is_feasible(const Polyhedron& p);

// Trivial-recession-cone test: for each coordinate, project the cone
// { eq . x = 0, le . x <= 0 } onto it and require the interval {0}.
// An infeasible polyhedron counts as bounded.
bool is_bounded(const Polyhedron& p);

// All integer points, each of length num_vars, in lexicographic order.
// Rejects unbounded input.
std::vector<std::vector<long long>> lattice_points(const Polyhedron& p);

// Interval of one coordinate of the projection onto that coordinate;
// nullopt bound = unbounded on that side.  Infeasible -> empty optional pair
// flagged by `feasible`.
struct CoordInterval {
    bool feasible = true;
    std::optional<Rat> lo, hi;
};
CoordInterval coordinate_interval(const Polyhedron& p, int var);

// Independent decision routes via the exact simplex (see simplex.hpp);
// used for cross-checking against the FM routes.
bool is_feasible_simplex(const Polyhedron& p);
bool is_bounded_simplex(const Polyhedron& p);

// When enabled, is_feasible/is_bounded assert agreement with the simplex
// route on every call.  Controlled by QS_LOG=check as well.
void set_cross_check(bool enabled);
bool cross_check_enabled();

} // namespace qs
