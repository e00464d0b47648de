#pragma once

#include <optional>
#include <string>
#include <vector>

namespace eisen {

/// Weakly decreasing tuple of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const;
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    bool operator==(const Partition&) const = default;
    /// Lexicographic; used only for deterministic ordering of sweeps.
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

/// Tuple of non-negative integers. Zero parts are kept; callers drop them
/// when forming a parabolic subgroup.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const;
    std::size_t size() const { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    Composition without_zeros() const;

    bool operator==(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

/// Partial sums of the first j parts, j = 0..size.
std::vector<int> partial_sums(const std::vector<int>& parts);

/// Dominance order: true iff every partial sum of p is <= the matching
/// partial sum of q (padding with zeros). Requires sum(p) == sum(q).
bool dominance_leq(const Partition& p, const Partition& q);

/// All partitions of n, in a fixed deterministic order.
std::vector<Partition> partitions_of(int n);

/// Parses "4,2,1". Returns nullopt unless entries are positive and weakly
/// decreasing.
std::optional<Partition> parse_partition(const std::string& text);

std::string to_string(const Partition& p);
std::string to_string(const Composition& c);

/// A permutation of the blocks of a composition.
struct BlockPermutation {
    Composition block_sizes;
    std::vector<int> image;  // image[i] = target block of block i (0-based)

    bool is_valid() const;
};

} // namespace eisen
