#include "qs/simplex.hpp"

#include <stdexcept>

namespace qs {

namespace {

// Dense tableau, rows in canonical form (basis columns are unit vectors).
struct Tableau {
    std::vector<std::vector<Rat>> rows; // each: cols coefficients + rhs
    std::vector<Rat> obj;               // reduced costs + objective value
    std::vector<int> basis;             // basic column per row
    int cols = 0;

    Rat& rhs(int i) { return rows[i][cols]; }
    Rat& obj_val() { return obj[cols]; }

    void pivot(int r, int c) {
        Rat inv = rows[r][c];
        for (int j = 0; j <= cols; ++j) rows[r][j] /= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == r) continue;
            Rat factor = rows[i][c];
            if (factor == 0) continue;
            for (int j = 0; j <= cols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        Rat factor = obj[c];
        if (factor != 0)
            for (int j = 0; j <= cols; ++j) obj[j] -= factor * rows[r][j];
        basis[r] = c;
    }

    // Bland's rule; `allowed` masks columns that may enter.
    // Returns Optimal or Unbounded.
    LpResult::Status run(const std::vector<char>& allowed) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols; ++j)
                if (allowed[j] && obj[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return LpResult::Status::Optimal;
            int leave = -1;
            Rat best;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rat ratio = rhs(static_cast<int>(i)) / rows[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = static_cast<int>(i);
                    best = ratio;
                }
            }
            if (leave < 0) return LpResult::Status::Unbounded;
            pivot(leave, enter);
        }
    }
};

} // namespace

LpResult solve_lp(const LinearProgram& lp) {
    int n = lp.num_vars;
    int m_le = static_cast<int>(lp.A.size());
    int m_eq = static_cast<int>(lp.E.size());
    int m = m_le + m_eq;
    for (const auto& row : lp.A)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("lp: inequality row length mismatch");
    for (const auto& row : lp.E)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("lp: equality row length mismatch");
    if (static_cast<int>(lp.c.size()) != n)
        throw std::invalid_argument("lp: objective length mismatch");

    // Columns: u_0..u_{n-1}, v_0..v_{n-1} (x = u - v), slacks, artificials.
    int slack0 = 2 * n;
    int art0 = slack0 + m_le;

    // Count artificials: every equality row, plus inequality rows with b < 0
    // (their slack enters with -1 after row negation).
    std::vector<char> negate(m, 0);
    int n_art = 0;
    for (int i = 0; i < m_le; ++i)
        if (lp.b[i] < 0) {
            negate[i] = 1;
            ++n_art;
        }
    for (int i = 0; i < m_eq; ++i) {
        if (lp.f[i] < 0) negate[m_le + i] = 1;
        ++n_art;
    }

    Tableau t;
    t.cols = art0 + n_art;
    t.rows.assign(m, std::vector<Rat>(t.cols + 1, Rat(0)));
    t.basis.assign(m, -1);

    int next_art = art0;
    for (int i = 0; i < m; ++i) {
        bool is_le = i < m_le;
        const auto& src = is_le ? lp.A[i] : lp.E[i - m_le];
        Rat rhs = is_le ? lp.b[i] : lp.f[i - m_le];
        Rat sign = negate[i] ? Rat(-1) : Rat(1);
        for (int j = 0; j < n; ++j) {
            t.rows[i][j] = sign * src[j];
            t.rows[i][n + j] = -sign * src[j];
        }
        if (is_le) t.rows[i][slack0 + i] = sign;
        t.rows[i][t.cols] = sign * rhs;
        if (is_le && !negate[i]) {
            t.basis[i] = slack0 + i;
        } else {
            t.basis[i] = next_art;
            t.rows[i][next_art] = 1;
            ++next_art;
        }
    }

    // Phase I: maximize -sum(artificials).
    t.obj.assign(t.cols + 1, Rat(0));
    for (int j = art0; j < t.cols; ++j) t.obj[j] = -1;
    for (int i = 0; i < m; ++i)
        if (t.basis[i] >= art0)
            for (int j = 0; j <= t.cols; ++j) t.obj[j] += t.rows[i][j];

    std::vector<char> allowed(t.cols, 1);
    if (t.run(allowed) != LpResult::Status::Optimal)
        throw std::logic_error("phase I cannot be unbounded");
    if (t.obj_val() != 0) return {LpResult::Status::Infeasible, Rat(0)};

    // Drive leftover artificials out of the basis; drop redundant rows.
    for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
        if (t.basis[i] < art0) continue;
        int enter = -1;
        for (int j = 0; j < art0; ++j)
            if (t.rows[i][j] != 0) {
                enter = j;
                break;
            }
        if (enter >= 0) {
            t.pivot(i, enter);
        } else {
            t.rows.erase(t.rows.begin() + i);
            t.basis.erase(t.basis.begin() + i);
        }
    }

    // Phase II: original objective on u/v columns, artificials barred.
    t.obj.assign(t.cols + 1, Rat(0));
    for (int j = 0; j < n; ++j) {
        t.obj[j] = lp.c[j];
        t.obj[n + j] = -lp.c[j];
    }
    for (size_t i = 0; i < t.rows.size(); ++i) {
        Rat cb = t.obj[t.basis[i]];
        if (cb != 0)
            for (int j = 0; j <= t.cols; ++j) t.obj[j] -= cb * t.rows[i][j];
    }
    for (int j = art0; j < t.cols; ++j) allowed[j] = 0;
    auto status = t.run(allowed);
    if (status == LpResult::Status::Unbounded) return {status, Rat(0)};
    // objective value: obj row holds -z after canonicalization
    return {LpResult::Status::Optimal, -t.obj_val()};
}

} // namespace qs
