#include <doctest.h>

#include "eisen/cfunction.hpp"

using namespace eisen;

namespace {

LinearForm two_s_plus(const Rat& c) { return {c, rat(2)}; }

RatioProduct ratio(std::vector<Rat> num_consts, std::vector<Rat> den_consts) {
    RatioProduct out;
    for (const auto& c : num_consts) out.numerators.push_back(two_s_plus(c));
    for (const auto& c : den_consts) out.denominators.push_back(two_s_plus(c));
    return out.simplified();
}

} // namespace

TEST_CASE("base cell ratio L(2s)/L(2s+1)") {
    Cell swap{2, Composition({0, 1}), Composition({1, 0})};
    RatioProduct expected = ratio({rat(0)}, {rat(1)});
    CHECK(gk_ratio(swap, 1, 1) == expected);
    CHECK(closed_form_c(swap, 1, 1) == expected);
    CHECK(to_string(expected) == "L(2s) / L(2s+1)");
}

TEST_CASE("r = 1 cells give the empty product") {
    Cell id{1, Composition({2}), Composition({2})};
    CHECK(gk_ratio(id, 2, 2).numerators.empty());
    CHECK(closed_form_c(id, 2, 2).numerators.empty());
}

TEST_CASE("the open-cell product telescopes") {
    // a = (0, m1), b = (m2, 0): product over j of
    // L(2s - m/2 + j) / L(2s - m/2 + m1 + j).
    for (int m1 = 1; m1 <= 4; ++m1)
        for (int m2 = 1; m2 <= 4; ++m2) {
            Cell open{2, Composition({0, m1}), Composition({m2, 0})};
            std::vector<Rat> nums, dens;
            for (int j = 1; j <= m2; ++j) {
                nums.push_back(rat(-(m1 + m2), 2) + rat(j));
                dens.push_back(rat(-(m1 + m2), 2) + rat(m1 + j));
            }
            CHECK(gk_ratio(open, m1, m2) == ratio(nums, dens));
        }
}

TEST_CASE("interior cell of (2,2)") {
    Cell c{2, Composition({1, 1}), Composition({1, 1})};
    CHECK(closed_form_c(c, 2, 2) == ratio({rat(-1)}, {rat(0)}));  // L(2s-1)/L(2s)
}

TEST_CASE("inversion product equals the closed form, all cells with m <= 8") {
    for (int m1 = 1; m1 < 8; ++m1)
        for (int m2 = 1; m1 + m2 <= 8; ++m2)
            for (const Cell& c : enumerate_cells(m1, m2)) {
                INFO("m1=" << m1 << " m2=" << m2 << " cell " << to_string(c));
                CHECK(gk_ratio(c, m1, m2) == closed_form_c(c, m1, m2));
            }
}

TEST_CASE("pole certificates at rational points") {
    RatioProduct base = ratio({rat(0)}, {rat(1)});
    auto at_half = pole_certificate(base, rat(1, 2));
    CHECK(at_half.order == 1);
    CHECK(at_half.exact);

    auto at_34 = pole_certificate(base, rat(3, 4));
    CHECK(at_34.order == 0);
    CHECK(at_34.exact);

    // Below the axiom range the certificate is marked indeterminate.
    auto at_quarter = pole_certificate(base, rat(1, 4));
    CHECK(!at_quarter.exact);
    CHECK(at_quarter.offending.size() == 1);
}

TEST_CASE("the open cell certifies a simple pole at m/4 for every m <= 8") {
    for (int m1 = 1; m1 < 8; ++m1)
        for (int m2 = 1; m1 + m2 <= 8; ++m2) {
            Cell open{2, Composition({0, m1}), Composition({m2, 0})};
            auto cert = pole_certificate(gk_ratio(open, m1, m2), rat(m1 + m2, 4));
            CHECK(cert.order == 1);
            CHECK(cert.exact);
        }
}

TEST_CASE("certificate order is invariant under common factors") {
    RatioProduct base = ratio({rat(0), rat(-1)}, {rat(1), rat(2)});
    RatioProduct padded = base;
    LinearForm extra{rat(5, 4), rat(2)};
    padded.numerators.push_back(extra);
    padded.denominators.push_back(extra);
    for (const Rat& s0 : {rat(1, 2), rat(1), rat(3, 4)})
        CHECK(pole_certificate(base, s0).order == pole_certificate(padded, s0).order);
}

TEST_CASE("rightmost pole scans") {
    auto scan11 = rightmost_pole_scan(1, 1);
    CHECK(scan11.max_candidate == rat(1, 2));
    CHECK(scan11.pass());

    auto scan21 = rightmost_pole_scan(2, 1);
    CHECK(scan21.max_candidate == rat(3, 4));
    CHECK(scan21.pass());

    auto scan22 = rightmost_pole_scan(2, 2);
    CHECK(scan22.max_candidate == rat(1));
    CHECK(scan22.pass());
}

TEST_CASE("no certified pole to the right of m/4") {
    for (int m1 = 1; m1 < 6; ++m1)
        for (int m2 = 1; m1 + m2 <= 6; ++m2)
            for (const Cell& c : enumerate_cells(m1, m2))
                for (int quarters = 1; quarters <= 8; ++quarters) {
                    Rat s0 = rat(m1 + m2, 4) + rat(quarters, 4);
                    auto cert = pole_certificate(closed_form_c(c, m1, m2), s0);
                    CHECK(cert.order == 0);
                    CHECK(cert.exact);
                }
}
