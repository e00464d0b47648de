#include "eisen/positions.hpp"

#include "eisen/partition.hpp"

namespace eisen {

PosSet radical_positions(const std::vector<int>& block_sizes) {
    PosSet out;
    auto sums = partial_sums(block_sizes);
    int nblocks = static_cast<int>(block_sizes.size());
    for (int b = 0; b < nblocks; ++b)
        for (int b2 = b + 1; b2 < nblocks; ++b2)
            for (int i = sums[b]; i < sums[b + 1]; ++i)
                for (int j = sums[b2]; j < sums[b2 + 1]; ++j) out.insert({i, j});
    return out;
}

PosSet gap_positions(const std::vector<int>& weights, int min_gap) {
    PosSet out;
    int n = static_cast<int>(weights.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && weights[i] - weights[j] >= min_gap) out.insert({i, j});
    return out;
}

PosSet apply_permutation(const PosSet& set, const std::vector<int>& image) {
    PosSet out;
    for (auto [i, j] : set) out.insert({image[i], image[j]});
    return out;
}

bool is_bracket_closed(const PosSet& set) {
    for (auto [i, j] : set)
        for (auto [p, q] : set)
            if (j == p && i != q && !set.count({i, q})) return false;
    return true;
}

bool is_abelian(const PosSet& set) {
    for (auto [i, j] : set)
        for (auto [p, q] : set)
            if (j == p || q == i) return false;
    return true;
}

IntMatrix positions_matrix(const PosSet& set, int size) {
    IntMatrix m(size, size);
    for (auto [i, j] : set) m.at(i, j) = 1;
    return m;
}

std::string to_string(const PosSet& set) {
    std::string s = "{";
    bool first = true;
    for (auto [i, j] : set) {
        if (!first) s += ",";
        first = false;
        s += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    }
    return s + "}";
}

} // namespace eisen
