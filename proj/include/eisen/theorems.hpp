#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eisen/characters.hpp"
#include "eisen/partition.hpp"
#include "eisen/rational.hpp"

namespace eisen {

/// The datum of an Eisenstein series induced from two Speh blocks of a
/// cuspidal of size n: lengths m1 and m2, evaluated at s and -s.
struct SpehSpec {
    int n = 1;
    int m1 = 0;
    int m2 = 0;

    int m() const { return m1 + m2; }
    int min_len() const { return m1 < m2 ? m1 : m2; }
    bool operator==(const SpehSpec&) const = default;
};

enum class DescentVariant { D, DPrime };

struct DescentResult {
    SpehSpec child;
    Rat det_twist;
    Rat region_bound;  // holomorphy region: 2 Re(s) >= region_bound
    DescentVariant variant = DescentVariant::D;
};

/// One descent: removes one copy of the cuspidal block from each Speh factor.
/// Variant D when m1 >= m2 (twist (2n-1)/2, region bound (m2-m1)/2), the
/// mirror variant otherwise. Requires min(m1, m2) >= 1.
DescentResult descend(const SpehSpec& spec);

struct GateRecord {
    SpehSpec at;
    Rat point;
    Rat bound;
    DescentVariant variant = DescentVariant::D;
    bool satisfied = false;
    bool tight = false;
};

struct PoleList {
    std::vector<std::pair<Rat, int>> poles;  // (point, order), descending points
    std::vector<GateRecord> gates;
    bool gates_ok = true;
    bool matches_closed_form = false;  // { m/4 - i/2 : 0 <= i <= min-1 }, all simple
};

/// The descent recursion for the pole list: { (m/4, 1) } union the child's
/// list, each recursive point checked against the holomorphy gate.
PoleList pole_list(const SpehSpec& spec);

enum class ZeroVerdict { vanishes, no_claim };

struct ZeroReport {
    ZeroVerdict verdict = ZeroVerdict::no_claim;
    bool base_case_imported = false;
    std::vector<CellSolution> scan;  // character-triviality evidence when it applies
    std::vector<std::string> findings;
};

/// Vanishing at s = 0: claimed exactly when m1 = m2 >= 1, with the
/// character-scan evidence attached.
ZeroReport value_at_zero(const SpehSpec& spec);

/// The partition ((2n)^i, n^{m-2i}) attached to the residue at the i-th pole,
/// verified against the generic bound and the descent recursion.
Partition residual_orbit(const SpehSpec& spec, int i);

/// The bound ((kn)^{m_(1)}, ((k-1)n)^{m_(2)-m_(1)}, ..., n^{m_(k)-m_(k-1)})
/// over the ascending sort of the lengths; zero multiplicities dropped.
Partition generic_orbit_bound(int n, const std::vector<int>& parts);

/// Multiset of (orbit index, rational shift) pairs modelling the unramified
/// datum of a Speh block of the given length, twisted by `shift`.
using SatakeMultiset = std::multiset<std::pair<int, Rat>>;

SatakeMultiset speh_exponents(int n, int length, const Rat& shift);

/// Equality of unramified exponent multisets between the induction at the
/// i-th pole point and its two-block rearrangement.
bool coincidence_check(const SpehSpec& spec, int i);

struct SegmentPair {
    Rat s;
    int m1 = 0;
    int m2 = 0;
};

/// Linkage: the union of the two exponent segments is an arithmetic chain of
/// step one and neither contains the other.
bool segments_linked(const SegmentPair& pair);

/// All linked values on the positive quarter-integer grid up to `max`.
std::vector<Rat> linked_points(int m1, int m2, const Rat& max);

} // namespace eisen
