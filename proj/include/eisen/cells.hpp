#pragma once

#include <string>
#include <vector>

#include "eisen/matrix.hpp"
#include "eisen/partition.hpp"

namespace eisen {

/// One Weyl double-coset term of the constant term: a pair of compositions
/// (a, b) of (m1, m2) with a_i + b_i >= 1, b_i >= 1 for i < r and a_i >= 1
/// for i >= 2 (minimality of r).
struct Cell {
    int r = 1;
    Composition a;
    Composition b;

    bool operator==(const Cell&) const = default;
    bool operator<(const Cell& o) const {
        if (r != o.r) return r < o.r;
        if (a.parts() != o.a.parts()) return a.parts() < o.a.parts();
        return b.parts() < o.b.parts();
    }
};

std::string to_string(const Cell& c);

bool cell_is_valid(const Cell& c, int m1, int m2);

/// All cells for (m1, m2), lexicographic by (r, a, b). Their number is
/// binomial(m1 + m2, m1).
std::vector<Cell> enumerate_cells(int m1, int m2);

/// The block permutation matrix of the cell at block size n: column group i
/// carries (a_i, b_i) letters; the a-letters stack into the first m1 block
/// rows, the b-letters into the last m2.
IntMatrix cell_weyl_matrix(const Cell& c, int n);

/// diag(w_1, w_2): the two within-group reversal matrices, block size n.
IntMatrix group_reversal_matrix(int m1, int m2, int n);

/// Source letter -> target position map of the cell matrix (the letter-level
/// content of cell_weyl_matrix at n = 1).
std::vector<int> cell_letter_map(const Cell& c, int m1, int m2);

/// The permutation of the m block letters induced by the reversal composed
/// with the cell matrix.
BlockPermutation eta_permutation(const Cell& c, int m1, int m2, int n);

/// Inverted cross pairs (i, j), i < j source letters with i in the first
/// group and j in the second, whose target positions are out of order. These
/// index the s-dependent factors of the cell's intertwining operator.
std::vector<std::pair<int, int>> cross_inversions(const Cell& c, int m1, int m2);

} // namespace eisen
