#include <doctest.h>

#include "eisen/orbit.hpp"

using namespace eisen;

namespace {

// The derivative-coefficient Whittaker pair: constant weights on the first
// l-k+1 coordinates, then descending even steps; the nilpotent is a chain on
// the last k coordinates.
WhittakerPair derivative_pair(int ell, int k) {
    WhittakerPair pair;
    pair.weights.assign(ell - k + 1, k - 1);
    for (int t = 1; t < k; ++t) pair.weights.push_back(k - 1 - 2 * t);
    pair.alpha = IntMatrix(ell, ell);
    for (int t = 1; t < k; ++t) pair.alpha.at(ell - k + t, ell - k + t - 1) = 1;
    return pair;
}

} // namespace

TEST_CASE("partition decomposition examples") {
    auto d = parse_orbit_data(Partition({4, 2, 1}));
    CHECK(d.k == 2);
    CHECK(d.m == std::vector<int>{2, 1});
    CHECK(d.n == std::vector<int>{1, 0});

    d = parse_orbit_data(Partition({2}));
    CHECK(d.k == 1);
    CHECK(d.m == std::vector<int>{1});
    CHECK(d.n == std::vector<int>{0});

    d = parse_orbit_data(Partition({1, 1, 1}));
    CHECK(d.k == 1);
    CHECK(d.m == std::vector<int>{0});
    CHECK(d.n == std::vector<int>{3});
}

TEST_CASE("decomposition round trip over all partitions of size <= 12") {
    for (int ell = 1; ell <= 12; ++ell)
        for (const auto& p : partitions_of(ell)) CHECK(reassemble(parse_orbit_data(p)) == p);
}

TEST_CASE("torus weights") {
    CHECK(torus_weights(Partition({1, 1, 1, 1})) == std::vector<int>{0, 0, 0, 0});
    CHECK(torus_weights(Partition({4, 2, 1})) == std::vector<int>{3, 1, 1, 0, -1, -1, -3});
    CHECK(torus_weights(Partition({2, 2})) == std::vector<int>{1, 1, -1, -1});
}

TEST_CASE("radical composition") {
    CHECK(radical_composition(Partition({4, 2, 1})) ==
          Composition({1, 0, 2, 1, 2, 0, 1}));
    CHECK(radical_composition(Partition({4, 2, 1})).without_zeros() ==
          Composition({1, 2, 1, 2, 1}));
    CHECK(radical_composition(Partition({2})) == Composition({1, 0, 1}));
    CHECK(radical_composition(Partition({1, 1, 1, 1})).without_zeros() == Composition({4}));
}

TEST_CASE("root sets") {
    auto empty = root_sets(Partition({1, 1, 1}));
    CHECK(empty.n_full.empty());
    CHECK(empty.n_square.empty());

    auto r421 = root_sets(Partition({4, 2, 1}));
    CHECK(r421.n_full.size() == 19);
    CHECK(r421.n_square.size() == 15);

    // All parts even: the two subgroups coincide.
    auto even = root_sets(Partition({2, 2}));
    CHECK(even.n_full == even.n_square);
    auto even2 = root_sets(Partition({4, 4, 2}));
    CHECK(even2.n_full == even2.n_square);
}

TEST_CASE("support matrix matches the worked display") {
    IntMatrix expected(7, 7);
    expected.at(1, 0) = 1;
    expected.at(4, 1) = 1;
    expected.at(5, 2) = 1;
    expected.at(6, 4) = 1;
    CHECK(support_matrix(Partition({4, 2, 1})) == expected);

    IntMatrix e21(2, 2);
    e21.at(1, 0) = 1;
    CHECK(support_matrix(Partition({2})) == e21);
    CHECK(support_matrix(Partition({1, 1, 1})).is_zero());
}

TEST_CASE("support matrix lies in the labelled orbit, all sizes <= 12") {
    for (int ell = 1; ell <= 12; ++ell)
        for (const auto& p : partitions_of(ell))
            CHECK(jordan_partition(support_matrix(p)) == p);
}

TEST_CASE("stabilizer shape") {
    CHECK(stabilizer_shape(Partition({4, 2, 1})) == std::vector<int>{1, 1, 1});
    CHECK(stabilizer_shape(Partition({2, 2})) == std::vector<int>{2});
    CHECK(stabilizer_shape(Partition({1, 1, 1, 1, 1})) == std::vector<int>{5});
}

TEST_CASE("heisenberg dimension") {
    CHECK(heisenberg_dim(Partition({4, 2, 1})) == 2);
    CHECK(heisenberg_dim(Partition({2, 1})) == 1);
    CHECK(heisenberg_dim(Partition({3, 3})) == 0);
    CHECK(heisenberg_dim(Partition({2, 2})) == 0);
}

TEST_CASE("polarization of the worked example") {
    Partition p({4, 2, 1});
    auto pol = polarization(p);
    CHECK(pol.x.size() == 2);
    CHECK(pol.y.size() == 2);
    CHECK(is_abelian(pol.x));
    CHECK(is_abelian(pol.y));
    // Basis pairing matrix has full rank 2.
    IntMatrix gram(2, 2);
    int i = 0;
    for (auto u : pol.x) {
        int j = 0;
        for (auto v : pol.y) {
            IntMatrix x = IntMatrix::identity(7), y = IntMatrix::identity(7);
            x.at(u.first, u.second) = 1;
            y.at(v.first, v.second) = 1;
            gram.at(i, j++) = symplectic_pair(p, x, y).numerator();
        }
        ++i;
    }
    CHECK(rank(gram) == 2);
}

TEST_CASE("whittaker pairs and the gap axiom") {
    for (int ell = 1; ell <= 10; ++ell)
        for (const auto& p : partitions_of(ell))
            CHECK(is_whittaker_pair({torus_weights(p), support_matrix(p)}));
    CHECK(is_whittaker_pair(derivative_pair(5, 3)));
    CHECK(is_whittaker_pair(derivative_pair(4, 2)));
}

TEST_CASE("neutral completion") {
    IntMatrix e21(2, 2);
    e21.at(1, 0) = 1;
    auto triple = neutral_completion(e21);
    CHECK(triple.pair.weights == std::vector<int>{1, -1});
    IntMatrix e12(2, 2);
    e12.at(0, 1) = 1;
    CHECK(triple.beta == e12);

    Partition p({4, 2, 1});
    auto t2 = neutral_completion(support_matrix(p));
    CHECK(t2.pair.weights == torus_weights(p));

    // sl2 identities for the derivative-pair nilpotent; its neutral weights
    // place the chain weights on the last k coordinates.
    auto dp = derivative_pair(5, 3);
    auto t3 = neutral_completion(dp.alpha);
    CHECK(t3.pair.weights == std::vector<int>{0, 0, 2, 0, -2});
    IntMatrix h(5, 5);
    for (int i = 0; i < 5; ++i) h.at(i, i) = t3.pair.weights[i];
    CHECK(bracket(h, dp.alpha) + dp.alpha + dp.alpha == IntMatrix::zero(5));
    CHECK(bracket(h, t3.beta) == t3.beta + t3.beta);
    CHECK(bracket(t3.beta, dp.alpha) == h);

    CHECK_THROWS(neutral_completion(IntMatrix::identity(2)));
}

TEST_CASE("N' subgroup") {
    // For the orbit pairs it coincides with N^2.
    for (int ell = 1; ell <= 8; ++ell)
        for (const auto& p : partitions_of(ell))
            CHECK(nprime_subgroup({torus_weights(p), support_matrix(p)}) ==
                  root_sets(p).n_square);

    // alpha = 0: everything of positive gap commutes.
    WhittakerPair free{{1, 0, -1}, IntMatrix::zero(3)};
    CHECK(nprime_subgroup(free) == gap_positions(free.weights, 1));

    // The derivative pair at (4,2) gives exactly the one-block-column group.
    PosSet expected;
    for (int i = 0; i < 3; ++i) expected.insert({i, 3});
    CHECK(nprime_subgroup(derivative_pair(4, 2)) == expected);
}

TEST_CASE("counting identities across all partitions of size <= 12") {
    for (int ell = 1; ell <= 12; ++ell)
        for (const auto& p : partitions_of(ell)) {
            auto roots = root_sets(p);
            CHECK(static_cast<int>(roots.n_full.size() - roots.n_square.size()) ==
                  2 * heisenberg_dim(p));
            auto pol = polarization(p);
            CHECK(static_cast<int>(pol.x.size()) == heisenberg_dim(p));
            CHECK(static_cast<int>(pol.y.size()) == heisenberg_dim(p));
        }
}

TEST_CASE("stabilizer embeddings fix the support") {
    for (const char* text : {"4,2,1", "3,2,2,1", "2,2", "5,4,1"}) {
        Partition p = *parse_partition(text);
        IntMatrix alpha = support_matrix(p);
        auto shape = stabilizer_shape(p);
        for (std::size_t f = 0; f < shape.size(); ++f) {
            int size = shape[f];
            for (int u = 0; u < size; ++u)
                for (int v = 0; v < size; ++v) {
                    if (u == v) continue;
                    IntMatrix g = IntMatrix::elementary(size, u, v, Int(1));
                    IntMatrix emb = embed_stabilizer_generator(p, static_cast<int>(f), g);
                    CHECK(conjugate(alpha, emb) == alpha);
                }
        }
    }
}
