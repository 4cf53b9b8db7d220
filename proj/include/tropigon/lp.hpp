#pragma once

#include "tropigon/rational.hpp"

#include <vector>

namespace tropigon {

enum class Rel { LE, GE, EQ };

struct LPRow {
    std::vector<Q> a;
    Rel rel = Rel::LE;
    Q b;
};

// maximize objective·x subject to rows, x >= 0.
struct LinearProgram {
    int nvars = 0;
    std::vector<LPRow> rows;
    std::vector<Q> objective;

    LPRow& add_row(Rel rel, const Q& rhs);
};

struct LPSolution {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    Q value;
    std::vector<Q> x;
};

LPSolution solve_lp(const LinearProgram& lp);

}  // namespace tropigon
