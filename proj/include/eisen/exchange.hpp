#pragma once

#include <string>
#include <vector>

#include "eisen/matrix.hpp"
#include "eisen/orbit.hpp"
#include "eisen/positions.hpp"

namespace eisen {

/// A unipotent-group character given by its coordinate domain and the
/// support matrix A: the character value on v is psi(tr(A(v - I))).
struct CharacterDatum {
    PosSet domain;
    IntMatrix support;

    bool operator==(const CharacterDatum&) const = default;
};

/// Every nonzero support entry (j, i) must have (i, j) in the domain.
bool character_is_supported(const CharacterDatum& c);

/// Realizes "conjugating by g inside the integral": the domain moves by the
/// permutation action of g and the support becomes g * support * g^{-1}.
/// Non-permutation g is accepted only when it preserves the domain span.
CharacterDatum conjugate_character(const CharacterDatum& c, const IntMatrix& g);

struct StepReport {
    std::string name;
    bool pass = true;
    std::string note;
};

struct PlanReport {
    std::string plan;
    std::vector<StepReport> steps;
    CharacterDatum final_character;
    bool all_pass = true;
    std::vector<std::string> findings;  // imported analytic facts the plan relies on
};

/// Step-by-step verification of the conjugation/root-exchange bookkeeping
/// that relates the (k, 1^{l-k}) Fourier coefficient to the derivative-type
/// coefficient integrated over V_{l-k+1, 1^{k-1}}.
PlanReport verify_hook_descent_plan(int ell, int k);

/// Mirror plan, targeting the coefficient over V_{1^{k-1}, l-k+1}.
PlanReport verify_hook_mirror_plan(int ell, int k);

/// The (k^r) plan: shuffle conjugation, staged exchanges filling the rows,
/// enlargement obstructions with their Jordan types, ending at the full
/// maximal-unipotent character with gaps at the block boundaries.
PlanReport verify_rectangle_whittaker_plan(int k, int r);

/// Invariance of the (k^r) character under diag(a, ..., a), a of determinant
/// one, on random samples; plus the Jordan type (k+1, k^{r-2}, k-1) of the
/// stated obstruction coefficient.
PlanReport verify_rectangle_diagonal_invariance(int k, int r, int sample_count,
                                                unsigned long long seed);

} // namespace eisen
