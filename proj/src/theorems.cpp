#include "eisen/theorems.hpp"

#include <algorithm>
#include <stdexcept>

namespace eisen {

DescentResult descend(const SpehSpec& spec) {
    if (spec.min_len() < 1) throw std::invalid_argument("descend: no descent available");
    DescentResult out;
    out.child = {spec.n, spec.m1 - 1, spec.m2 - 1};
    if (spec.m1 >= spec.m2) {
        out.variant = DescentVariant::D;
        out.det_twist = Rat(Int(2 * spec.n - 1), Int(2));
        out.region_bound = Rat(Int(spec.m2 - spec.m1), Int(2));
    } else {
        out.variant = DescentVariant::DPrime;
        out.det_twist = Rat(Int(1 - 2 * spec.n), Int(2));
        out.region_bound = Rat(Int(spec.m1 - spec.m2), Int(2));
    }
    return out;
}

PoleList pole_list(const SpehSpec& spec) {
    PoleList out;
    if (spec.min_len() == 0) {
        out.matches_closed_form = true;
        return out;
    }
    Rat quarter_m(Int(spec.m()), Int(4));
    out.poles.push_back({quarter_m, 1});
    if (spec.min_len() >= 2) {
        DescentResult d = descend(spec);
        PoleList child = pole_list(d.child);
        out.gates_ok = child.gates_ok;
        out.gates = child.gates;
        for (const auto& [point, order] : child.poles) {
            GateRecord gate{spec, point, d.region_bound, d.variant, false, false};
            Rat twice = Rat(Int(2), Int(1)) * point;
            gate.satisfied = twice >= d.region_bound;
            gate.tight = twice == d.region_bound;
            if (!gate.satisfied) out.gates_ok = false;
            out.gates.push_back(gate);
            out.poles.push_back({point, order});
        }
    }
    std::sort(out.poles.begin(), out.poles.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    out.matches_closed_form = true;
    int expected = spec.min_len();
    if (static_cast<int>(out.poles.size()) != expected) out.matches_closed_form = false;
    for (int i = 0; i < expected && out.matches_closed_form; ++i) {
        Rat point = quarter_m - Rat(Int(i), Int(2));
        if (i >= static_cast<int>(out.poles.size()) || out.poles[i].first != point ||
            out.poles[i].second != 1)
            out.matches_closed_form = false;
    }
    return out;
}

ZeroReport value_at_zero(const SpehSpec& spec) {
    ZeroReport rep;
    if (spec.m1 == spec.m2 && spec.m1 >= 1) {
        rep.verdict = ZeroVerdict::vanishes;
        rep.base_case_imported = true;
        VanishingReport scan = vanishing_at_zero_report(spec.m1, spec.n);
        rep.scan = scan.solutions;
        rep.findings = scan.findings;
        if (!scan.consistent_vanishing)
            rep.findings.push_back("warning: a cell character is trivial at 0");
    } else {
        rep.findings.push_back("vanishing is claimed only for m1 = m2");
    }
    return rep;
}

Partition residual_orbit(const SpehSpec& spec, int i) {
    if (i < 0 || i > spec.min_len() - 1)
        throw std::invalid_argument("residual_orbit: index out of range");
    std::vector<int> parts(i, 2 * spec.n);
    parts.insert(parts.end(), spec.m() - 2 * i, spec.n);
    Partition orbit(parts);
    Partition bound = generic_orbit_bound(spec.n, {spec.m1, spec.m2});
    if (!dominance_leq(orbit, bound))
        throw std::logic_error("residual_orbit: dominance bound violated");
    if (i >= 1) {
        Partition child = residual_orbit({spec.n, spec.m1 - 1, spec.m2 - 1}, i - 1);
        std::vector<int> rebuilt{2 * spec.n};
        rebuilt.insert(rebuilt.end(), child.parts().begin(), child.parts().end());
        if (Partition(rebuilt) != orbit)
            throw std::logic_error("residual_orbit: descent recursion violated");
    }
    return orbit;
}

Partition generic_orbit_bound(int n, const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("generic_orbit_bound: no blocks");
    std::vector<int> sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    int k = static_cast<int>(sorted.size());
    std::vector<int> out;
    for (int j = 0; j < k; ++j) {
        int mult = sorted[j] - (j > 0 ? sorted[j - 1] : 0);
        out.insert(out.end(), mult, (k - j) * n);
    }
    return Partition(out);
}

SatakeMultiset speh_exponents(int n, int length, const Rat& shift) {
    SatakeMultiset out;
    for (int j = 1; j <= n; ++j)
        for (int a = 0; a < length; ++a)
            out.insert({j, Rat(Int(length - 1 - 2 * a), Int(2)) + shift});
    return out;
}

bool coincidence_check(const SpehSpec& spec, int i) {
    if (i < 0 || i > spec.min_len() - 1)
        throw std::invalid_argument("coincidence_check: index out of range");
    Rat si = Rat(Int(spec.m()), Int(4)) - Rat(Int(i), Int(2));
    SatakeMultiset lhs = speh_exponents(spec.n, spec.m1, si);
    for (const auto& e : speh_exponents(spec.n, spec.m2, -si)) lhs.insert(e);
    Rat twist(Int(spec.m1 - spec.m2), Int(4));
    SatakeMultiset rhs = speh_exponents(spec.n, spec.m() - i, twist);
    for (const auto& e :
         speh_exponents(spec.n, i, twist + Rat(Int(spec.m2 - spec.m1), Int(2))))
        rhs.insert(e);
    return lhs == rhs;
}

bool segments_linked(const SegmentPair& pair) {
    std::set<Rat> x, y;
    for (int a = 0; a < pair.m1; ++a)
        x.insert(Rat(Int(pair.m1 - 1 - 2 * a), Int(2)) + pair.s);
    for (int b = 0; b < pair.m2; ++b)
        y.insert(Rat(Int(pair.m2 - 1 - 2 * b), Int(2)) - pair.s);
    std::set<Rat> all = x;
    all.insert(y.begin(), y.end());
    Rat one(Int(1), Int(1));
    auto it = all.begin();
    Rat prev = *it;
    for (++it; it != all.end(); ++it) {
        if (*it - prev != one) return false;
        prev = *it;
    }
    auto contains = [](const std::set<Rat>& big, const std::set<Rat>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    return !contains(x, y) && !contains(y, x);
}

std::vector<Rat> linked_points(int m1, int m2, const Rat& max) {
    std::vector<Rat> out;
    for (Int t = 1; Rat(t, Int(4)) <= max; ++t) {
        Rat s(t, Int(4));
        if (segments_linked({s, m1, m2})) out.push_back(s);
    }
    return out;
}

} // namespace eisen
