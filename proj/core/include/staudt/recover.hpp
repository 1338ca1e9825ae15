#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "staudt/curves.hpp"

namespace staudt {

// Access to a curve through point membership only: a query predicate plus a
// deterministic enumerator of points on the curve. The enumerator owns its
// own cursor, so each oracle instance is a fresh point stream.
class MembershipOracle {
public:
    MembershipOracle(GroundField k, std::function<bool(const ProjPoint&)> member,
                     std::function<std::optional<ProjPoint>()> next)
        : field_(k), member_(std::move(member)), next_(std::move(next)) {}

    const GroundField& field() const { return field_; }
    bool member(const ProjPoint& p) const { return member_(p); }
    std::optional<ProjPoint> next() const { return next_(); }

private:
    GroundField field_;
    std::function<bool(const ProjPoint&)> member_;
    std::function<std::optional<ProjPoint>()> next_;
};

// Self-oracle for a known curve: membership by evaluation; enumeration scans
// the whole plane over a finite field, and walks the line or the conic
// parametrization over the rationals (other rational curves are rejected,
// since finding their points is a different problem).
MembershipOracle oracle_from_curve(const Curve& c);

// First n distinct enumerated points; throws when the curve runs out.
std::vector<ProjPoint> sample_curve_points(const MembershipOracle& o, std::size_t n);

struct RecoveredEquation {
    std::uint32_t degree;
    MultiPoly poly; // homogeneous with leading coefficient 1
};

// Smallest degree d <= max_degree whose degree-d coefficient space, cut out
// by the evaluation matrix of the first (d+1)(d+2)/2 - 1 points, is one
// dimensional and vanishes on every remaining point. Throws when points are
// too few, when they underdetermine the curve, or when nothing fits.
RecoveredEquation recover_equation(const std::vector<ProjPoint>& points, std::uint32_t max_degree);

// True when every probe curve meets the sampled point set in at most n
// points: the incidence-side test that the oracle's curve has low degree.
// Probes must have degree <= n and differ from the oracle's curve.
bool detect_low_degree(const MembershipOracle& o, const std::vector<Curve>& probes,
                       std::uint64_t n, std::size_t sample_limit = 64);

} // namespace staudt
