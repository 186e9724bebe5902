#pragma once

#include "qs/rational.hpp"

#include <optional>
#include <vector>

namespace qs {

// Exact primal simplex with Bland's rule (anti-cycling) on free variables:
//   maximize c . x   s.t.   A x <= b,  E x = f.
// Free variables are split internally; phase I drives artificials out.
struct LpResult {
    enum class Status { Infeasible, Optimal, Unbounded } status;
    Rat value; // meaningful for Optimal
};

struct LinearProgram {
    int num_vars = 0;
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    std::vector<std::vector<Rat>> E;
    std::vector<Rat> f;
    std::vector<Rat> c;
};

LpResult solve_lp(const LinearProgram& lp);

} // namespace qs
