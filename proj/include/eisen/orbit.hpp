#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eisen/matrix.hpp"
#include "eisen/partition.hpp"
#include "eisen/positions.hpp"
#include "eisen/rational.hpp"

namespace eisen {

/// The (k, m-vector, n-vector) decomposition of a partition: part 2j has
/// multiplicity m_j - m_{j+1}, part 2j-1 has multiplicity n_j - n_{j+1}.
struct OrbitPartitionData {
    int k = 0;
    std::vector<int> m;  // m_1 >= ... >= m_k >= 0
    std::vector<int> n;  // n_1 >= ... >= n_k >= 0, m_k + n_k >= 1
};

OrbitPartitionData parse_orbit_data(const Partition& p);
Partition reassemble(const OrbitPartitionData& d);

/// Exponents of the one-parameter torus attached to p, weakly decreasing.
std::vector<int> torus_weights(const Partition& p);

/// The full block division of the radical composition: the 4k-1 blocks
/// (m_k, n_k, ..., m_1, n_1, m_1, n_2, m_2, ..., n_k, m_k), zeros retained.
Composition radical_composition(const Partition& p);

struct RootSets {
    PosSet n_full;    // gap >= 1
    PosSet n_square;  // gap >= 2
};
RootSets root_sets(const Partition& p);

/// The lower-nilpotent 0/1 matrix carrying the character of N^2: the
/// character value on v is tr(alpha * (v - I)).
IntMatrix support_matrix(const Partition& p);

/// Sizes of the general-linear factors of the stabilizer of the character
/// inside the Levi; zero factors dropped.
std::vector<int> stabilizer_shape(const Partition& p);

int heisenberg_dim(const Partition& p);

struct Polarization {
    PosSet x;  // odd superdiagonal block pairs of the radical division
    PosSet y;  // even superdiagonal block pairs
};
Polarization polarization(const Partition& p);

/// tr(alpha_p [x - I, y - I]) for group elements x, y.
Rat symplectic_pair(const Partition& p, const IntMatrix& x, const IntMatrix& y);

/// A torus weight vector h together with a nilpotent alpha such that every
/// support position (i, j) satisfies weights[i] - weights[j] = -2.
struct WhittakerPair {
    std::vector<int> weights;
    IntMatrix alpha;
};
bool is_whittaker_pair(const WhittakerPair& pair);

struct Sl2Triple {
    WhittakerPair pair;
    IntMatrix beta;
};

/// Completes a nilpotent alpha in chain form (at most one unit entry per row
/// and per column) to an sl2-triple: [h, alpha] = -2 alpha, [h, beta] = 2 beta,
/// [beta, alpha] = h. Chains are processed in descending length, heads in
/// index order. Throws std::invalid_argument otherwise.
Sl2Triple neutral_completion(const IntMatrix& alpha);

/// Root positions of N'_{alpha,h}: weight gap >= 2, plus gap-1 positions
/// whose root vector commutes with alpha.
PosSet nprime_subgroup(const WhittakerPair& pair);

/// Stabilizer generators, for checking that conjugation fixes the support
/// matrix. Each factor of the stabilizer shape is embedded diagonally across
/// the blocks of the radical composition; `g` must be square of the factor's
/// size. `factor` indexes the nonzero factors in stabilizer_shape order.
IntMatrix embed_stabilizer_generator(const Partition& p, int factor, const IntMatrix& g);

} // namespace eisen
