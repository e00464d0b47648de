#include <doctest.h>

#include "eisen/cells.hpp"

using namespace eisen;

namespace {
long long binom(int n, int k) {
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}
} // namespace

TEST_CASE("cell enumeration small cases") {
    auto c11 = enumerate_cells(1, 1);
    REQUIRE(c11.size() == 2);
    CHECK(c11[0] == Cell{1, Composition({1}), Composition({1})});
    CHECK(c11[1] == Cell{2, Composition({0, 1}), Composition({1, 0})});

    CHECK(enumerate_cells(2, 1).size() == 3);
    CHECK(enumerate_cells(2, 2).size() == 6);
}

TEST_CASE("cell count equals the binomial coefficient") {
    for (int m1 = 1; m1 <= 9; ++m1)
        for (int m2 = 1; m1 + m2 <= 10; ++m2)
            CHECK(static_cast<long long>(enumerate_cells(m1, m2).size()) ==
                  binom(m1 + m2, m1));
}

TEST_CASE("cells are valid and lexicographically ordered") {
    auto cells = enumerate_cells(3, 2);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        CHECK(cell_is_valid(cells[i], 3, 2));
        if (i) CHECK(cells[i - 1] < cells[i]);
    }
}

TEST_CASE("the swap cell's matrix is the antidiagonal block swap") {
    Cell swap{2, Composition({0, 1}), Composition({1, 0})};
    IntMatrix w = cell_weyl_matrix(swap, 2);
    IntMatrix expected(4, 4);
    expected.at(0, 2) = 1;
    expected.at(1, 3) = 1;
    expected.at(2, 0) = 1;
    expected.at(3, 1) = 1;
    CHECK(w == expected);

    auto eta = eta_permutation(swap, 1, 1, 1);
    CHECK(eta.image == std::vector<int>{1, 0});
    CHECK(eta.is_valid());
}

TEST_CASE("r = 1 cells have no cross inversions") {
    Cell id{1, Composition({2}), Composition({3})};
    CHECK(cross_inversions(id, 2, 3).empty());
    // The induced permutation reverses within the two groups separately.
    auto eta = eta_permutation(id, 2, 3, 1);
    CHECK(eta.image == std::vector<int>{1, 0, 4, 3, 2});
}

TEST_CASE("single cross inversion for the middle cell of (2,1)") {
    Cell c{2, Composition({1, 1}), Composition({1, 0})};
    auto inv = cross_inversions(c, 2, 1);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == std::pair<int, int>{1, 2});

    // Counted through eta: one inverted pair across the two groups.
    auto eta = eta_permutation(c, 2, 1, 1).image;
    int cross = 0;
    for (int t = 0; t < 2; ++t)
        for (int u = 2; u < 3; ++u)
            if (eta[t] > eta[u]) ++cross;
    CHECK(cross == 1);
}

TEST_CASE("letter map matches the weyl matrix") {
    for (int m1 = 1; m1 <= 4; ++m1)
        for (int m2 = 1; m2 <= 4; ++m2)
            for (const Cell& c : enumerate_cells(m1, m2)) {
                auto letters = cell_letter_map(c, m1, m2);
                IntMatrix w = cell_weyl_matrix(c, 1);
                for (int i = 0; i < m1 + m2; ++i) CHECK(w.at(i, letters[i]) == 1);
            }
}
