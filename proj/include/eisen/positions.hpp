#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eisen/matrix.hpp"

namespace eisen {

/// A set of matrix positions (i, j), i != j, 0-based. Each position stands
/// for the one-parameter root subgroup I + x e_{i,j}.
using PosSet = std::set<std::pair<int, int>>;

/// Positions of the unipotent radical V_c: all (i, j) with i in an earlier
/// block than j. Zero-size blocks contribute nothing.
PosSet radical_positions(const std::vector<int>& block_sizes);

/// Positions (i, j) with weights[i] - weights[j] >= min_gap.
PosSet gap_positions(const std::vector<int>& weights, int min_gap);

/// Image of every position under i -> image[i].
PosSet apply_permutation(const PosSet& set, const std::vector<int>& image);

/// Closed under composition of roots: (i,j),(j,k) in set implies (i,k) in set.
/// This is what makes exp(span) a group for coordinate subgroups.
bool is_bracket_closed(const PosSet& set);

/// No two positions chain: (i,j),(j,k) never both present (abelian subgroup).
bool is_abelian(const PosSet& set);

/// 0/1 matrix with ones at the given positions.
IntMatrix positions_matrix(const PosSet& set, int size);

std::string to_string(const PosSet& set);

} // namespace eisen
