#include "eisen/characters.hpp"

#include <stdexcept>

#include "eisen/cfunction.hpp"

namespace eisen {

namespace {

// Position of each torus coordinate in the conjugated arrangement: the
// a_i-segment occupies its own slots in reversed order, then the b-segments
// follow after the first group, also reversed within each segment.
std::vector<int> reversed_segment_positions(const Cell& c, int m1, int m2) {
    auto asum = partial_sums(c.a.parts());
    auto bsum = partial_sums(c.b.parts());
    std::vector<int> pos(m1 + m2);
    for (int i = 0; i < c.r; ++i) {
        int seg = asum[i] + bsum[i];  // interleaved start of group i
        for (int t = 1; t <= c.a[i]; ++t) pos[seg + t - 1] = asum[i] + (c.a[i] - t);
        for (int t = 1; t <= c.b[i]; ++t)
            pos[seg + c.a[i] + t - 1] = m1 + bsum[i] + (c.b[i] - t);
    }
    return pos;
}

} // namespace

CharacterExponents character_exponents(const Cell& c, int m1, int m2, int n) {
    if (!cell_is_valid(c, m1, m2))
        throw std::invalid_argument("character_exponents: invalid cell");
    int m = m1 + m2;
    auto pos = reversed_segment_positions(c, m1, m2);
    Rat nn(Int(n), Int(1));
    std::vector<LinearForm> e(m);
    for (int i = 0; i < m; ++i) {
        // Half-sum shift from the Borel modulus, then the slot exponent.
        LinearForm u = slot_exponent(pos[i], m1, m2);
        e[i] = {Rat(Int(n) * Int(m - 1 - 2 * i), Int(2)) + nn * u.constant, nn * u.slope};
    }
    CharacterExponents out{c, {}};
    for (int i = 0; i + 1 < m; ++i) out.forms.push_back(e[i] - e[m - 1]);
    return out;
}

LinearForm first_exponent_case_formula(const Cell& c, int m1, int m2, int n) {
    int m = m1 + m2;
    int a1 = c.a[0], ar = c.a[c.r - 1], b1 = c.b[0], br = c.b[c.r - 1];
    Rat nn(Int(n), Int(1));
    if (a1 >= 1 && br >= 1)
        return {nn * (Rat(Int(3 * m), Int(2)) - Rat(Int(a1 + br), Int(1))),
                Rat(Int(2 * n), Int(1))};
    if (a1 >= 1 && br == 0)
        return {nn * Rat(Int(m1 - (a1 + ar) + m), Int(1)), Rat(Int(0), Int(1))};
    if (a1 == 0 && br >= 1)
        return {nn * Rat(Int(m1 - (b1 + br) + m), Int(1)), Rat(Int(0), Int(1))};
    return {nn * (Rat(Int(3 * m), Int(2)) - Rat(Int(ar + b1), Int(1))),
            Rat(Int(-2 * n), Int(1))};
}

FirstExponentComparison compare_first_exponent(const Cell& c, int m1, int m2, int n) {
    FirstExponentComparison out{c, character_exponents(c, m1, m2, n).forms.at(0),
                                first_exponent_case_formula(c, m1, m2, n), false};
    out.match = out.computed == out.formula;
    return out;
}

std::optional<Rat> trivial_solution(const CharacterExponents& e) {
    std::optional<Rat> candidate;
    for (const auto& f : e.forms) {
        if (f.is_constant()) continue;
        Rat root = -f.constant / f.slope;
        if (candidate && *candidate != root) return std::nullopt;
        candidate = root;
    }
    if (!candidate) return std::nullopt;  // all constant: never trivial for m1, m2 >= 1
    for (const auto& f : e.forms)
        if (f.eval(*candidate) != Rat(Int(0), Int(1))) return std::nullopt;
    return candidate;
}

std::vector<CellSolution> trivial_character_solutions(int m1, int m2, int n) {
    if (m1 < 1 || m2 < 1)
        throw std::invalid_argument("trivial_character_solutions: need m1, m2 >= 1");
    std::vector<CellSolution> out;
    for (const Cell& c : enumerate_cells(m1, m2))
        out.push_back({c, trivial_solution(character_exponents(c, m1, m2, n))});
    return out;
}

VanishingReport vanishing_at_zero_report(int k, int n) {
    if (k < 1) throw std::invalid_argument("vanishing_at_zero_report: need k >= 1");
    VanishingReport rep;
    rep.k = k;
    rep.n = n;
    rep.solutions = trivial_character_solutions(k, k, n);
    rep.consistent_vanishing = true;
    Rat zero(Int(0), Int(1));
    for (const auto& sol : rep.solutions)
        if (sol.s0 && *sol.s0 == zero) rep.consistent_vanishing = false;
    rep.findings.push_back(
        "base case k=1 imported: the intertwining operator acts as minus the identity at the "
        "center");
    rep.findings.push_back(
        "the scan certifies the character side only; the functional-analytic steps are "
        "imported");
    return rep;
}

} // namespace eisen
