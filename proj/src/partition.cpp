#include "eisen/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eisen {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("composition parts must be non-negative");
}

int Composition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition Composition::without_zeros() const {
    std::vector<int> out;
    for (int p : parts_)
        if (p > 0) out.push_back(p);
    return Composition(out);
}

std::vector<int> partial_sums(const std::vector<int>& parts) {
    std::vector<int> sums(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) sums[i + 1] = sums[i] + parts[i];
    return sums;
}

bool dominance_leq(const Partition& p, const Partition& q) {
    if (p.sum() != q.sum()) throw std::invalid_argument("dominance_leq: sizes differ");
    std::size_t len = std::max(p.size(), q.size());
    int sp = 0, sq = 0;
    for (std::size_t j = 0; j < len; ++j) {
        sp += j < p.size() ? p[j] : 0;
        sq += j < q.size() ? q[j] : 0;
        if (sp > sq) return false;
    }
    return true;
}

namespace {
void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::optional<Partition> parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size() || v <= 0) return std::nullopt;
            parts.push_back(v);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (parts.empty()) return std::nullopt;
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) return std::nullopt;
    return Partition(parts);
}

std::string to_string(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

std::string to_string(const Composition& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s;
}

bool BlockPermutation::is_valid() const {
    std::vector<bool> seen(image.size(), false);
    if (image.size() != block_sizes.size()) return false;
    for (int v : image) {
        if (v < 0 || v >= static_cast<int>(image.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

} // namespace eisen
