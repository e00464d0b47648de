#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eisen/cells.hpp"
#include "eisen/linear_form.hpp"
#include "eisen/rational.hpp"

namespace eisen {

/// Exponents n_i(a, b, s0) of |c_i| in the central character attached to a
/// cell, as affine forms in s0; the last coordinate is eliminated through
/// c_1 ... c_m = 1, so there are m - 1 of them.
struct CharacterExponents {
    Cell cell;
    std::vector<LinearForm> forms;
};

CharacterExponents character_exponents(const Cell& c, int m1, int m2, int n);

/// The four case formulas for the first exponent, keyed by whether
/// a_1 and b_r vanish. Returned for comparison against the direct
/// computation; the direct computation is the ground truth.
LinearForm first_exponent_case_formula(const Cell& c, int m1, int m2, int n);

/// Direct computation against the case formula, for one cell.
struct FirstExponentComparison {
    Cell cell;
    LinearForm computed;
    LinearForm formula;
    bool match = false;
};
FirstExponentComparison compare_first_exponent(const Cell& c, int m1, int m2, int n);

/// Values of s0 at which every exponent vanishes: empty or a single rational.
std::optional<Rat> trivial_solution(const CharacterExponents& e);

struct CellSolution {
    Cell cell;
    std::optional<Rat> s0;
};
std::vector<CellSolution> trivial_character_solutions(int m1, int m2, int n);

struct VanishingReport {
    int k = 0;
    int n = 0;
    bool consistent_vanishing = false;
    std::vector<CellSolution> solutions;
    std::vector<std::string> findings;
};

/// Consistency scan behind the vanishing of the value at s = 0 when
/// m1 = m2 = k: no cell character may be trivial there.
VanishingReport vanishing_at_zero_report(int k, int n);

} // namespace eisen
