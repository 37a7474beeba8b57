#pragma once

// Worked 3-alternating quantified CNF example and the frozen digit table of
// the trilevel interdiction knapsack compiled from it. Shared between the
// reduction tests and the acceptance run so both compare against the same
// bytes.

#include <string>

#include "mcn/reductions.hpp"

namespace fixtures {

// E = (a or b or not c) and (not a or not b or d) and (a or c or b)
// with exists {a,b}, forall {c}, exists {d}. Satisfiable: a=1, b=0 works for
// every c with any d.
inline mcn::CnfFormula worked_qbf3() {
    mcn::CnfFormula f;
    f.num_vars = 4;
    f.var_names = {"a", "b", "c", "d"};
    f.clauses = {{1, 2, -3}, {-1, -2, 4}, {1, 3, 2}};
    f.block_x = {1, 2};
    f.block_y = {3};
    f.block_z = {4};
    return f;
}

// Digit matrix of the compiled knapsack, most significant digit first.
// Columns: forbidden, d, c, b, a, clause 1, clause 2, clause 3.
inline std::string worked_qbf3_digit_table() {
    return "items: 14, digits: 8 (most significant first)\n"
           "a'(literal:a) | 0 0 0 0 1 0 0 0\n"
           "a(literal:a) | 0 0 0 0 1 0 0 0\n"
           "p(literal:a) | 0 0 0 0 1 1 0 1\n"
           "a'(literal:-a) | 0 0 0 0 1 0 0 0\n"
           "a(literal:-a) | 0 0 0 0 1 0 0 0\n"
           "p(literal:-a) | 0 0 0 0 1 0 1 0\n"
           "a'(literal:b) | 0 0 0 1 0 0 0 0\n"
           "a(literal:b) | 0 0 0 1 0 0 0 0\n"
           "p(literal:b) | 0 0 0 1 0 1 0 1\n"
           "a'(literal:-b) | 0 0 0 1 0 0 0 0\n"
           "a(literal:-b) | 0 0 0 1 0 0 0 0\n"
           "p(literal:-b) | 0 0 0 1 0 0 1 0\n"
           "a'(literal:c) | 0 0 1 0 0 0 0 0\n"
           "a(literal:c) | 0 0 1 0 0 0 0 0\n"
           "p(literal:c) | 0 0 1 0 0 0 0 1\n"
           "a'(literal:-c) | 0 0 1 0 0 0 0 0\n"
           "a(literal:-c) | 0 0 1 0 0 0 0 0\n"
           "p(literal:-c) | 0 0 1 0 0 1 0 0\n"
           "a'(literal:d) | 0 1 0 0 0 0 0 0\n"
           "a(literal:d) | 0 1 0 0 0 0 0 0\n"
           "p(literal:d) | 0 1 0 0 0 0 1 0\n"
           "a'(literal:-d) | 0 1 0 0 0 0 0 0\n"
           "a(literal:-d) | 0 1 0 0 0 0 0 0\n"
           "p(literal:-d) | 0 1 0 0 0 0 0 0\n"
           "a'(clause:1:slot1) | 1 0 0 0 0 0 0 0\n"
           "a(clause:1:slot1) | 1 0 0 0 0 0 0 0\n"
           "p(clause:1:slot1) | 0 0 0 0 0 1 0 0\n"
           "a'(clause:1:slot2) | 1 0 0 0 0 0 0 0\n"
           "a(clause:1:slot2) | 1 0 0 0 0 0 0 0\n"
           "p(clause:1:slot2) | 0 0 0 0 0 2 0 0\n"
           "a'(clause:2:slot1) | 1 0 0 0 0 0 0 0\n"
           "a(clause:2:slot1) | 1 0 0 0 0 0 0 0\n"
           "p(clause:2:slot1) | 0 0 0 0 0 0 1 0\n"
           "a'(clause:2:slot2) | 1 0 0 0 0 0 0 0\n"
           "a(clause:2:slot2) | 1 0 0 0 0 0 0 0\n"
           "p(clause:2:slot2) | 0 0 0 0 0 0 2 0\n"
           "a'(clause:3:slot1) | 1 0 0 0 0 0 0 0\n"
           "a(clause:3:slot1) | 1 0 0 0 0 0 0 0\n"
           "p(clause:3:slot1) | 0 0 0 0 0 0 0 1\n"
           "a'(clause:3:slot2) | 1 0 0 0 0 0 0 0\n"
           "a(clause:3:slot2) | 1 0 0 0 0 0 0 0\n"
           "p(clause:3:slot2) | 0 0 0 0 0 0 0 2\n"
           "A' | 0 0 0 1 1 0 0 0\n"
           "A | 0 0 1 2 2 0 0 0\n"
           "B | 0 1 1 1 1 4 4 4\n"
           "Kbar | 0 1 1 1 1 4 4 4\n";
}

}  // namespace fixtures
