#include "eisen/orbit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace eisen {

namespace {

struct Block {
    char type;   // 'm' or 'n'
    int level;   // the j in m_j / n_j
    int size;
    int weight;  // torus exponent carried by the block
};

// The 4k-1 blocks (m_k, n_k, ..., m_1, n_1, m_1, n_2, m_2, ..., n_k, m_k)
// with their torus weights (2k-1, 2k-2, ..., 1, 0, -1, ..., 1-2k).
std::vector<Block> full_blocks(const OrbitPartitionData& d) {
    std::vector<Block> blocks;
    for (int j = d.k; j >= 1; --j) {
        blocks.push_back({'m', j, d.m[j - 1], 2 * j - 1});
        blocks.push_back({'n', j, d.n[j - 1], 2 * j - 2});
    }
    blocks.push_back({'m', 1, d.m[0], -1});
    for (int j = 2; j <= d.k; ++j) {
        blocks.push_back({'n', j, d.n[j - 1], -(2 * j - 2)});
        blocks.push_back({'m', j, d.m[j - 1], -(2 * j - 1)});
    }
    return blocks;
}

std::vector<int> block_sizes(const std::vector<Block>& blocks) {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const Block& b : blocks) sizes.push_back(b.size);
    return sizes;
}

} // namespace

OrbitPartitionData parse_orbit_data(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("parse_orbit_data: empty partition");
    int k = (p[0] + 1) / 2;
    std::map<int, int> mult;
    for (int part : p.parts()) ++mult[part];
    OrbitPartitionData d;
    d.k = k;
    d.m.assign(k, 0);
    d.n.assign(k, 0);
    // m_j = number of even parts >= 2j, n_j = number of odd parts >= 2j-1.
    for (int j = k; j >= 1; --j) {
        d.m[j - 1] = (j < k ? d.m[j] : 0) + (mult.count(2 * j) ? mult[2 * j] : 0);
        d.n[j - 1] = (j < k ? d.n[j] : 0) + (mult.count(2 * j - 1) ? mult[2 * j - 1] : 0);
    }
    return d;
}

Partition reassemble(const OrbitPartitionData& d) {
    std::vector<int> parts;
    auto mult_at = [&](const std::vector<int>& v, int j) {
        int next = j < d.k ? v[j] : 0;
        return v[j - 1] - next;
    };
    for (int j = d.k; j >= 1; --j) {
        for (int t = 0; t < mult_at(d.m, j); ++t) parts.push_back(2 * j);
        for (int t = 0; t < mult_at(d.n, j); ++t) parts.push_back(2 * j - 1);
    }
    return Partition(parts);
}

std::vector<int> torus_weights(const Partition& p) {
    auto blocks = full_blocks(parse_orbit_data(p));
    std::vector<int> weights;
    for (const Block& b : blocks)
        for (int t = 0; t < b.size; ++t) weights.push_back(b.weight);
    return weights;
}

Composition radical_composition(const Partition& p) {
    return Composition(block_sizes(full_blocks(parse_orbit_data(p))));
}

RootSets root_sets(const Partition& p) {
    auto weights = torus_weights(p);
    return {gap_positions(weights, 1), gap_positions(weights, 2)};
}

IntMatrix support_matrix(const Partition& p) {
    auto blocks = full_blocks(parse_orbit_data(p));
    auto starts = partial_sums(block_sizes(blocks));
    int size = starts.back();
    IntMatrix alpha(size, size);
    // One truncated identity per skip-one block pair (b, b+2), transposed to
    // block position (b+2, b); alpha is lower nilpotent.
    for (std::size_t b = 0; b + 2 < blocks.size(); ++b) {
        int common = std::min(blocks[b].size, blocks[b + 2].size);
        for (int t = 0; t < common; ++t) alpha.at(starts[b + 2] + t, starts[b] + t) = 1;
    }
    return alpha;
}

std::vector<int> stabilizer_shape(const Partition& p) {
    auto d = parse_orbit_data(p);
    auto entry = [&](const std::vector<int>& v, int j) { return j <= d.k ? v[j - 1] : 0; };
    std::vector<int> factors;
    for (int i = 0; i <= d.k - 1; ++i) {
        int fm = entry(d.m, d.k - i) - entry(d.m, d.k - i + 1);
        int fn = entry(d.n, d.k - i) - entry(d.n, d.k - i + 1);
        if (fm > 0) factors.push_back(fm);
        if (fn > 0) factors.push_back(fn);
    }
    return factors;
}

int heisenberg_dim(const Partition& p) {
    auto d = parse_orbit_data(p);
    int dim = 0;
    for (int i = 1; i <= d.k; ++i) dim += d.m[i - 1] * d.n[i - 1];
    for (int i = 2; i <= d.k; ++i) dim += d.m[i - 2] * d.n[i - 1];
    return dim;
}

Polarization polarization(const Partition& p) {
    auto blocks = full_blocks(parse_orbit_data(p));
    auto starts = partial_sums(block_sizes(blocks));
    auto pair_positions = [&](std::size_t b1, std::size_t b2, PosSet& out) {
        for (int i = starts[b1]; i < starts[b1 + 1]; ++i)
            for (int j = starts[b2]; j < starts[b2 + 1]; ++j) out.insert({i, j});
    };
    Polarization pol;
    for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
        // 1-based pair (b+1, b+2): odd-starting pairs go to X, even to Y.
        if (b % 2 == 0)
            pair_positions(b, b + 1, pol.x);
        else
            pair_positions(b, b + 1, pol.y);
    }
    return pol;
}

Rat symplectic_pair(const Partition& p, const IntMatrix& x, const IntMatrix& y) {
    IntMatrix alpha = support_matrix(p);
    IntMatrix id = IntMatrix::identity(alpha.rows());
    IntMatrix a = x - id, b = y - id;
    return Rat(trace(alpha * bracket(a, b)), Int(1));
}

bool is_whittaker_pair(const WhittakerPair& pair) {
    if (static_cast<int>(pair.weights.size()) != pair.alpha.rows() || !pair.alpha.is_square())
        return false;
    for (int i = 0; i < pair.alpha.rows(); ++i)
        for (int j = 0; j < pair.alpha.cols(); ++j)
            if (pair.alpha.at(i, j) != 0 && pair.weights[i] - pair.weights[j] != -2) return false;
    return true;
}

Sl2Triple neutral_completion(const IntMatrix& alpha) {
    if (!alpha.is_square()) throw std::invalid_argument("neutral_completion: not square");
    if (!is_nilpotent(alpha)) throw std::invalid_argument("neutral_completion: not nilpotent");
    int size = alpha.rows();
    std::vector<int> next(size, -1), prev(size, -1);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            const Int& v = alpha.at(i, j);
            if (v == 0) continue;
            if (v != 1 || next[j] != -1 || prev[i] != -1)
                throw std::invalid_argument(
                    "neutral_completion: support matrix is not in chain form");
            next[j] = i;
            prev[i] = j;
        }
    std::vector<std::vector<int>> chains;
    for (int head = 0; head < size; ++head) {
        if (prev[head] != -1) continue;
        std::vector<int> chain{head};
        while (next[chain.back()] != -1) chain.push_back(next[chain.back()]);
        chains.push_back(std::move(chain));
    }
    std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    Sl2Triple out{{std::vector<int>(size, 0), alpha}, IntMatrix(size, size)};
    for (const auto& chain : chains) {
        int len = static_cast<int>(chain.size());
        for (int u = 0; u < len; ++u) out.pair.weights[chain[u]] = len - 1 - 2 * u;
        for (int u = 1; u < len; ++u)
            out.beta.at(chain[u - 1], chain[u]) = Int(u) * Int(len - u);
    }
    return out;
}

PosSet nprime_subgroup(const WhittakerPair& pair) {
    int size = static_cast<int>(pair.weights.size());
    PosSet out = gap_positions(pair.weights, 2);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            if (i == j || pair.weights[i] - pair.weights[j] != 1) continue;
            IntMatrix e(size, size);
            e.at(i, j) = 1;
            if (bracket(e, pair.alpha).is_zero()) out.insert({i, j});
        }
    return out;
}

IntMatrix embed_stabilizer_generator(const Partition& p, int factor, const IntMatrix& g) {
    auto d = parse_orbit_data(p);
    auto entry = [&](const std::vector<int>& v, int j) { return j <= d.k ? v[j - 1] : 0; };
    struct Factor {
        char type;
        int level;  // j0: factor GL_{v_{j0} - v_{j0+1}}
        int size;
        int offset;  // rows skipped inside each block: v_{j0+1}
    };
    std::vector<Factor> factors;
    for (int i = 0; i <= d.k - 1; ++i) {
        int j0 = d.k - i;
        int fm = entry(d.m, j0) - entry(d.m, j0 + 1);
        int fn = entry(d.n, j0) - entry(d.n, j0 + 1);
        if (fm > 0) factors.push_back({'m', j0, fm, entry(d.m, j0 + 1)});
        if (fn > 0) factors.push_back({'n', j0, fn, entry(d.n, j0 + 1)});
    }
    if (factor < 0 || factor >= static_cast<int>(factors.size()))
        throw std::invalid_argument("embed_stabilizer_generator: factor out of range");
    const Factor& f = factors[factor];
    if (g.rows() != f.size || g.cols() != f.size)
        throw std::invalid_argument("embed_stabilizer_generator: generator size mismatch");
    auto blocks = full_blocks(d);
    auto starts = partial_sums(block_sizes(blocks));
    IntMatrix out = IntMatrix::identity(starts.back());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].type != f.type || blocks[b].level > f.level) continue;
        int base = starts[b] + f.offset;
        for (int r = 0; r < f.size; ++r)
            for (int c = 0; c < f.size; ++c) out.at(base + r, base + c) = g.at(r, c);
    }
    return out;
}

} // namespace eisen
