#include <doctest.h>

#include <random>

#include "eisen/matrix.hpp"
#include "eisen/partition.hpp"
#include "eisen/rational.hpp"

using namespace eisen;

TEST_CASE("rational parsing and formatting") {
    CHECK(to_string(rat(3, 4)) == "3/4");
    CHECK(to_string(rat(-6, 4)) == "-3/2");
    CHECK(to_string(rat(8, 4)) == "2");
    CHECK(*parse_rational("5/4") == rat(5, 4));
    CHECK(*parse_rational("-7") == rat(-7));
    CHECK(!parse_rational("1/0"));
    CHECK(!parse_rational("x"));
    CHECK(!parse_rational("1/-2"));
}

TEST_CASE("dominance order on small examples") {
    CHECK(dominance_leq(Partition({1, 1, 1, 1}), Partition({2, 1, 1})));
    CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
    CHECK(dominance_leq(Partition({2, 1, 1}), Partition({2, 2})));
    CHECK(!dominance_leq(Partition({3, 1}), Partition({2, 2})));
    CHECK_THROWS(dominance_leq(Partition({2}), Partition({1})));
}

TEST_CASE("dominance is a partial order on partitions of fixed size") {
    for (int ell = 1; ell <= 8; ++ell) {
        auto ps = partitions_of(ell);
        for (const auto& p : ps) CHECK(dominance_leq(p, p));
        for (const auto& p : ps)
            for (const auto& q : ps) {
                if (dominance_leq(p, q) && dominance_leq(q, p)) CHECK(p == q);
                for (const auto& r : ps)
                    if (dominance_leq(p, q) && dominance_leq(q, r))
                        CHECK(dominance_leq(p, r));
            }
    }
}

TEST_CASE("partition generation counts") {
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_of(12).size() == 77);
}

TEST_CASE("rank and jordan on jordan blocks") {
    IntMatrix j3(3, 3);
    j3.at(1, 0) = 1;
    j3.at(2, 1) = 1;
    CHECK(rank(j3) == 2);
    CHECK(jordan_partition(j3) == Partition({3}));

    IntMatrix two_blocks(4, 4);
    two_blocks.at(1, 0) = 1;
    two_blocks.at(3, 2) = 1;
    CHECK(jordan_partition(two_blocks) == Partition({2, 2}));

    CHECK(jordan_partition(IntMatrix::zero(3)) == Partition({1, 1, 1}));
    IntMatrix not_nilpotent = IntMatrix::identity(2);
    CHECK_THROWS(jordan_partition(not_nilpotent));
}

TEST_CASE("conjugation basics") {
    IntMatrix n(2, 2);
    n.at(1, 0) = 1;  // e_{2,1}
    CHECK(conjugate(n, IntMatrix::identity(2)) == n);
    IntMatrix swap = IntMatrix::permutation({1, 0});
    IntMatrix e12(2, 2);
    e12.at(0, 1) = 1;
    CHECK(conjugate(n, swap) == e12);
    CHECK_THROWS(conjugate(n, IntMatrix::zero(2)));
}

TEST_CASE("jordan type is invariant under random unimodular conjugation") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> pick(0, 5);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix n(6, 6);
        // A nilpotent in chain form with a random shape.
        n.at(1, 0) = 1;
        n.at(2, 1) = 1;
        if (trial % 2) n.at(4, 3) = 1;
        Partition base = jordan_partition(n);
        IntMatrix g = IntMatrix::identity(6);
        for (int e = 0; e < 6; ++e) {
            int i = pick(rng), j = pick(rng);
            if (i != j) g = g * IntMatrix::elementary(6, i, j, Int(coeff(rng)));
        }
        CHECK(jordan_partition(conjugate(n, g)) == base);
    }
}

TEST_CASE("rank sequence of nilpotents is convex") {
    for (int ell = 1; ell <= 8; ++ell)
        for (const auto& p : partitions_of(ell)) {
            // chain-form nilpotent with the parts of p
            IntMatrix n(ell, ell);
            int at = 0;
            for (std::size_t b = 0; b < p.size(); ++b) {
                for (int t = 1; t < p[b]; ++t) n.at(at + t, at + t - 1) = 1;
                at += p[b];
            }
            auto seq = rank_sequence(n);
            CHECK(seq.front() == ell);
            for (std::size_t j = 1; j < seq.size(); ++j) CHECK(seq[j] <= seq[j - 1]);
            for (std::size_t j = 2; j < seq.size(); ++j)
                CHECK(seq[j - 2] - seq[j - 1] >= seq[j - 1] - seq[j]);
            CHECK(jordan_partition(n) == p);
        }
}

TEST_CASE("matrix file round trip") {
    IntMatrix m(2, 3);
    m.at(0, 0) = 5;
    m.at(1, 2) = -7;
    auto back = read_matrix(write_matrix(m));
    REQUIRE(back.has_value());
    CHECK(*back == m);
    CHECK(!read_matrix("2 2 1 2 3"));
    CHECK(!read_matrix("junk"));
}
