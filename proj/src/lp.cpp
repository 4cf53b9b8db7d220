#include "tropigon/lp.hpp"

#include <cassert>

namespace tropigon {

LPRow& LinearProgram::add_row(Rel rel, const Q& rhs) {
    rows.push_back(LPRow{std::vector<Q>(nvars), rel, rhs});
    return rows.back();
}

namespace {

struct Tableau {
    int m = 0;
    int ncols = 0;
    std::vector<std::vector<Q>> t;  // m constraint rows + objective row, last column is rhs
    std::vector<int> basis;

    void pivot(int r, int c) {
        std::vector<Q>& pr = t[r];
        Q piv = pr[c];
        for (int j = 0; j <= ncols; ++j) {
            if (sgn(pr[j]) != 0) pr[j] /= piv;
        }
        for (int i = 0; i <= m; ++i) {
            if (i == r) continue;
            std::vector<Q>& row = t[i];
            if (sgn(row[c]) == 0) continue;
            Q f = row[c];
            for (int j = 0; j <= ncols; ++j) {
                if (sgn(pr[j]) != 0) row[j] -= f * pr[j];
            }
        }
        basis[r] = c;
    }

    // Bland's rule; returns false when unbounded.
    bool run(const std::vector<char>& allowed) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols; ++j) {
                if (allowed[j] && sgn(t[m][j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Q best;
            for (int i = 0; i < m; ++i) {
                if (sgn(t[i][enter]) <= 0) continue;
                Q ratio = t[i][ncols] / t[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LPSolution solve_lp(const LinearProgram& lp) {
    const int n = lp.nvars;
    const int m = static_cast<int>(lp.rows.size());
    std::vector<LPRow> rows = lp.rows;
    for (LPRow& row : rows) {
        assert(static_cast<int>(row.a.size()) == n);
        if (sgn(row.b) < 0) {
            for (Q& v : row.a) v = -v;
            row.b = -row.b;
            if (row.rel == Rel::LE) row.rel = Rel::GE;
            else if (row.rel == Rel::GE) row.rel = Rel::LE;
        }
    }
    int nslack = 0, nart = 0;
    for (const LPRow& row : rows) {
        if (row.rel != Rel::EQ) ++nslack;
        if (row.rel != Rel::LE) ++nart;
    }
    Tableau tab;
    tab.m = m;
    tab.ncols = n + nslack + nart;
    tab.t.assign(m + 1, std::vector<Q>(tab.ncols + 1));
    tab.basis.assign(m, -1);
    std::vector<char> is_art(tab.ncols, 0);
    int sc = n, ac = n + nslack;
    for (int i = 0; i < m; ++i) {
        const LPRow& row = rows[i];
        for (int j = 0; j < n; ++j) tab.t[i][j] = row.a[j];
        tab.t[i][tab.ncols] = row.b;
        if (row.rel == Rel::LE) {
            tab.t[i][sc] = 1;
            tab.basis[i] = sc++;
        } else {
            if (row.rel == Rel::GE) tab.t[i][sc++] = -1;
            tab.t[i][ac] = 1;
            is_art[ac] = 1;
            tab.basis[i] = ac++;
        }
    }

    LPSolution sol;
    std::vector<char> allowed(tab.ncols, 1);
    if (nart > 0) {
        for (int j = 0; j < tab.ncols; ++j) tab.t[m][j] = is_art[j] ? Q(1) : Q(0);
        for (int i = 0; i < m; ++i) {
            if (!is_art[tab.basis[i]]) continue;
            for (int j = 0; j <= tab.ncols; ++j) tab.t[m][j] -= tab.t[i][j];
        }
        tab.run(allowed);
        if (sgn(tab.t[m][tab.ncols]) != 0) {
            sol.status = LPSolution::Status::Infeasible;
            return sol;
        }
        for (int i = 0; i < m; ++i) {
            if (!is_art[tab.basis[i]]) continue;
            for (int j = 0; j < tab.ncols; ++j) {
                if (!is_art[j] && sgn(tab.t[i][j]) != 0) {
                    tab.pivot(i, j);
                    break;
                }
            }
        }
        for (int j = 0; j < tab.ncols; ++j) allowed[j] = !is_art[j];
    }

    for (int j = 0; j <= tab.ncols; ++j) tab.t[m][j] = 0;
    for (int j = 0; j < n && j < static_cast<int>(lp.objective.size()); ++j) tab.t[m][j] = -lp.objective[j];
    for (int i = 0; i < m; ++i) {
        int b = tab.basis[i];
        if (sgn(tab.t[m][b]) == 0) continue;
        Q f = tab.t[m][b];
        for (int j = 0; j <= tab.ncols; ++j) tab.t[m][j] -= f * tab.t[i][j];
    }
    if (!tab.run(allowed)) {
        sol.status = LPSolution::Status::Unbounded;
        return sol;
    }
    sol.status = LPSolution::Status::Optimal;
    sol.value = tab.t[m][tab.ncols];
    sol.x.assign(n, Q(0));
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.t[i][tab.ncols];
    }
    return sol;
}

}  // namespace tropigon
