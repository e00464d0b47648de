#include "eisen/cells.hpp"

#include <stdexcept>

namespace eisen {

std::string to_string(const Cell& c) {
    return "(a=(" + to_string(c.a) + "), b=(" + to_string(c.b) + "))";
}

bool cell_is_valid(const Cell& c, int m1, int m2) {
    if (c.r < 1) return false;
    if (static_cast<int>(c.a.size()) != c.r || static_cast<int>(c.b.size()) != c.r) return false;
    if (c.a.sum() != m1 || c.b.sum() != m2) return false;
    for (int i = 0; i < c.r; ++i) {
        if (c.a[i] + c.b[i] < 1) return false;
        if (i < c.r - 1 && c.b[i] < 1) return false;
        if (i >= 1 && c.a[i] < 1) return false;
    }
    return true;
}

namespace {
// Compositions of `total` with length `len` and entries bounded below by
// mins[i], in lexicographic order.
void gen_compositions(int total, int len, const std::vector<int>& mins, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    int at = static_cast<int>(cur.size());
    if (at == len) {
        if (total == 0) out.push_back(cur);
        return;
    }
    int rest_min = 0;
    for (int i = at + 1; i < len; ++i) rest_min += mins[i];
    for (int v = mins[at]; v <= total - rest_min; ++v) {
        cur.push_back(v);
        gen_compositions(total - v, len, mins, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Cell> enumerate_cells(int m1, int m2) {
    if (m1 < 0 || m2 < 0) throw std::invalid_argument("enumerate_cells: negative block count");
    std::vector<Cell> cells;
    for (int r = 1; r <= m1 + m2; ++r) {
        std::vector<int> amin(r, 1), bmin(r, 1);
        amin[0] = 0;
        bmin[r - 1] = 0;
        std::vector<std::vector<int>> as, bs;
        std::vector<int> cur;
        gen_compositions(m1, r, amin, cur, as);
        gen_compositions(m2, r, bmin, cur, bs);
        for (const auto& a : as)
            for (const auto& b : bs) {
                Cell c{r, Composition(a), Composition(b)};
                if (cell_is_valid(c, m1, m2)) cells.push_back(c);
            }
    }
    return cells;
}

std::vector<int> cell_letter_map(const Cell& c, int m1, int m2) {
    if (!cell_is_valid(c, m1, m2))
        throw std::invalid_argument("cell_letter_map: invalid cell");
    std::vector<int> image(m1 + m2);
    auto asum = partial_sums(c.a.parts());
    auto bsum = partial_sums(c.b.parts());
    for (int i = 0; i < c.r; ++i) {
        int group = asum[i] + bsum[i];
        for (int t = 0; t < c.a[i]; ++t) image[asum[i] + t] = group + t;
        for (int t = 0; t < c.b[i]; ++t) image[m1 + bsum[i] + t] = group + c.a[i] + t;
    }
    return image;
}

IntMatrix cell_weyl_matrix(const Cell& c, int n) {
    int m = c.a.sum() + c.b.sum();
    std::vector<int> letters = cell_letter_map(c, c.a.sum(), c.b.sum());
    IntMatrix w(m * n, m * n);
    // Letter i sits at target position letters[i]: rows follow the source.
    for (int i = 0; i < m; ++i)
        for (int t = 0; t < n; ++t) w.at(i * n + t, letters[i] * n + t) = 1;
    return w;
}

IntMatrix group_reversal_matrix(int m1, int m2, int n) {
    std::vector<int> image(static_cast<std::size_t>(m1 + m2) * n);
    for (int i = 0; i < m1; ++i)
        for (int t = 0; t < n; ++t) image[i * n + t] = (m1 - 1 - i) * n + t;
    for (int j = 0; j < m2; ++j)
        for (int t = 0; t < n; ++t) image[(m1 + j) * n + t] = (m1 + m2 - 1 - j) * n + t;
    return IntMatrix::permutation(image);
}

BlockPermutation eta_permutation(const Cell& c, int m1, int m2, int n) {
    auto letters = cell_letter_map(c, m1, m2);
    int m = m1 + m2;
    // eta[t] = the source letter whose image under the reversal-composed cell
    // matrix is slot t.
    std::vector<int> eta(m);
    for (int i = 0; i < m; ++i) {
        int slot = letters[i];
        int reversed = slot < m1 ? m1 - 1 - slot : m1 + (m - 1 - slot);
        eta[reversed] = i;
    }
    return BlockPermutation{Composition(std::vector<int>(m, n)), eta};
}

std::vector<std::pair<int, int>> cross_inversions(const Cell& c, int m1, int m2) {
    auto letters = cell_letter_map(c, m1, m2);
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < m1; ++i)
        for (int j = m1; j < m1 + m2; ++j)
            if (letters[i] > letters[j]) out.push_back({i, j});
    return out;
}

} // namespace eisen
