#include "eisen/cfunction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace eisen {

RatioProduct RatioProduct::simplified() const {
    std::map<LinearForm, int> count;
    for (const auto& f : numerators) ++count[f];
    for (const auto& f : denominators) --count[f];
    RatioProduct out;
    for (const auto& [f, c] : count) {
        for (int i = 0; i < c; ++i) out.numerators.push_back(f);
        for (int i = 0; i < -c; ++i) out.denominators.push_back(f);
    }
    return out;
}

std::string to_string(const RatioProduct& rp, const std::string& symbol) {
    if (rp.numerators.empty() && rp.denominators.empty()) return "1";
    std::string s;
    for (const auto& f : rp.numerators) s += "L(" + to_string(f, symbol) + ")";
    if (s.empty()) s = "1";
    if (!rp.denominators.empty()) {
        s += " / ";
        for (const auto& f : rp.denominators) s += "L(" + to_string(f, symbol) + ")";
    }
    return s;
}

LinearForm slot_exponent(int slot, int m1, int m2) {
    if (slot < m1) return {Rat(Int(m1 - 1 - 2 * slot), Int(2)), Rat(Int(1), Int(1))};
    int j = slot - m1;
    return {Rat(Int(m2 - 1 - 2 * j), Int(2)), Rat(Int(-1), Int(1))};
}

RatioProduct gk_ratio(const Cell& c, int m1, int m2) {
    RatioProduct out;
    for (auto [i, j] : cross_inversions(c, m1, m2)) {
        LinearForm arg = slot_exponent(i, m1, m2) - slot_exponent(j, m1, m2);
        out.numerators.push_back(arg);
        out.denominators.push_back(arg + Rat(Int(1), Int(1)));
    }
    return out.simplified();
}

RatioProduct closed_form_c(const Cell& c, int m1, int m2) {
    if (!cell_is_valid(c, m1, m2)) throw std::invalid_argument("closed_form_c: invalid cell");
    int m = m1 + m2;
    auto asum = partial_sums(c.a.parts());
    auto bsum = partial_sums(c.b.parts());
    RatioProduct out;
    Rat two(Int(2), Int(1));
    for (int i = 1; i <= c.r - 1; ++i) {
        int a_after = m1 - asum[i];  // a_{i+1} + ... + a_r
        int b_before = bsum[i - 1];  // b_1 + ... + b_{i-1}
        for (int j = 1; j <= c.b[i - 1]; ++j) {
            Rat base = Rat(Int(-m), Int(2)) + Rat(Int(b_before + j), Int(1));
            out.numerators.push_back({base, two});
            out.denominators.push_back({base + Rat(Int(a_after), Int(1)), two});
        }
    }
    return out.simplified();
}

PoleCertificate pole_certificate(const RatioProduct& prod, const Rat& s0, const LAxioms& ax) {
    if (ax.pole_point < ax.nonvanishing_threshold || ax.pole_order < 1)
        throw std::invalid_argument("pole_certificate: ill-formed axioms");
    PoleCertificate cert;
    cert.point = s0;
    int pole_balance = 0;
    for (const auto& f : prod.numerators) {
        Rat v = f.eval(s0);
        if (v == ax.pole_point) ++pole_balance;
        if (v < ax.nonvanishing_threshold && v != ax.pole_point) cert.offending.push_back(f);
    }
    for (const auto& f : prod.denominators) {
        Rat v = f.eval(s0);
        if (v == ax.pole_point) --pole_balance;
        if (v < ax.nonvanishing_threshold && v != ax.pole_point) cert.offending.push_back(f);
    }
    cert.order = pole_balance * ax.pole_order;
    cert.exact = cert.offending.empty();
    return cert;
}

RightmostScan rightmost_pole_scan(int m1, int m2, const LAxioms& ax) {
    if (m1 < 1 || m2 < 1)
        throw std::invalid_argument("rightmost_pole_scan: need m1, m2 >= 1");
    RightmostScan scan;
    scan.m1 = m1;
    scan.m2 = m2;
    Rat quarter_m(Int(m1 + m2), Int(4));
    scan.all_at_most_one = true;
    scan.none_beyond = true;
    scan.all_exact = true;
    bool have_candidate = false;
    for (const Cell& cell : enumerate_cells(m1, m2)) {
        CellPole cp{cell, {}, {}};
        RatioProduct prod = closed_form_c(cell, m1, m2);
        for (const auto& f : prod.numerators) {
            if (f.is_constant()) continue;
            Rat at = (ax.pole_point - f.constant) / f.slope;
            cp.candidates.push_back(at);
            if (!have_candidate || at > scan.max_candidate) scan.max_candidate = at;
            have_candidate = true;
            if (at > quarter_m) scan.none_beyond = false;
        }
        cp.at_max = pole_certificate(prod, quarter_m, ax);
        if (cp.at_max.order > 1) scan.all_at_most_one = false;
        if (cp.at_max.order == 1) scan.some_order_one = true;
        if (!cp.at_max.exact) scan.all_exact = false;
        scan.cells.push_back(std::move(cp));
    }
    scan.candidate_is_quarter_m = have_candidate && scan.max_candidate == quarter_m;
    return scan;
}

} // namespace eisen
