#pragma once

#include <string>
#include <vector>

#include "eisen/cells.hpp"
#include "eisen/linear_form.hpp"
#include "eisen/rational.hpp"

namespace eisen {

/// Formal product of L-value ratios: prod L(f) / prod L(g), f, g affine in s.
struct RatioProduct {
    std::vector<LinearForm> numerators;
    std::vector<LinearForm> denominators;

    /// Cancels forms appearing on both sides and sorts; after this no form
    /// lies in both multisets.
    RatioProduct simplified() const;

    bool operator==(const RatioProduct&) const = default;
};

std::string to_string(const RatioProduct& rp, const std::string& symbol = "s");

/// Standing facts about the L-function: a pole of the given order at
/// pole_point, holomorphic and nonvanishing at real arguments >=
/// nonvanishing_threshold otherwise. Defaults model L(tau x tau-hat, .).
struct LAxioms {
    Rat pole_point{Int(1), Int(1)};
    int pole_order = 1;
    Rat nonvanishing_threshold{Int(1), Int(1)};
};

struct PoleCertificate {
    Rat point;
    int order = 0;
    bool exact = true;                   // false: some argument left the axiom range
    std::vector<LinearForm> offending;   // arguments below the threshold at the point
};

/// Exponents of the inducing characters at the residue point: slot i carries
/// (m1+1-2i)/2 + s for i <= m1 and (m2+1-2j)/2 - s for slot m1+j.
LinearForm slot_exponent(int slot, int m1, int m2);

/// The cell's c-function from the Gindikin-Karpelevich factors of the
/// inverted cross pairs, cancelled. Within-group factors are excluded; they
/// are consumed by the residue normalization.
RatioProduct gk_ratio(const Cell& c, int m1, int m2);

/// The closed-form double product: numerator argument 2s - m/2 + B_{i-1} + j,
/// denominator argument 2s - m/2 + A_{>i} + B_{i-1} + j, over i < r, j <= b_i.
RatioProduct closed_form_c(const Cell& c, int m1, int m2);

PoleCertificate pole_certificate(const RatioProduct& prod, const Rat& s0,
                                 const LAxioms& ax = {});

struct CellPole {
    Cell cell;
    std::vector<Rat> candidates;  // numerator arguments solved against the pole point
    PoleCertificate at_max;
};

struct RightmostScan {
    int m1 = 0, m2 = 0;
    Rat max_candidate;
    bool candidate_is_quarter_m = false;
    bool some_order_one = false;
    bool all_at_most_one = false;
    bool none_beyond = false;
    bool all_exact = false;
    std::vector<CellPole> cells;

    bool pass() const {
        return candidate_is_quarter_m && some_order_one && all_at_most_one && none_beyond &&
               all_exact;
    }
};

RightmostScan rightmost_pole_scan(int m1, int m2, const LAxioms& ax = {});

} // namespace eisen
