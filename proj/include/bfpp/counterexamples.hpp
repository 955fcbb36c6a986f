#pragma once

#include "bfpp/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bfpp {

/// Exact point of the plane.
struct PlanePoint {
    Rational x, y;
    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// Rational surrogate for (1/2)*arctan|x|: g(x) = x / (2*(1 + |x|)).
/// Same structure: Lipschitz constant 1/2, unique fixed point 0, maps
/// (0, inf) into itself, and g(x) < x/2 for x > 0 — so g restricted to
/// (0, 1) is a 1/2-contraction without a fixed point.
Rational segment_map(const Rational& x);

/// The bilateral-accumulation instance, one-sided on (0, 1]:
/// excluded intervals (a_n, b_n) with a_n = 3*4^-(n+1), b_n = 4^-n and
/// targets z_n = 4^-(n+2) = b_{n+2}, for n >= 1. The ambient set is
/// X = (0,1] minus the union of the open (a_n, b_n).
namespace accumulation {

Rational a(std::uint64_t n);
Rational b(std::uint64_t n);
Rational z(std::uint64_t n);

/// The excluded interval containing x, if any.
std::optional<std::uint64_t> violating_interval(const Rational& x);

/// x in X: x in (0,1] and inside no excluded interval.
bool contains(const Rational& x);

/// Least n >= 1 with 4^-n < x (strict). Throws if x <= 0.
std::uint64_t index(const Rational& x);

/// f(x) = z_{n_x}. Throws std::domain_error naming the violated interval
/// if x is not in X.
Rational map(const Rational& x);

/// Exact re-check of the instance invariants for all n <= limit:
/// b_{n+1} < a_n, z_n < (b_n - a_n)/2, z_n in X, z strictly decreasing.
/// Returns a description of the first failure, or nullopt.
std::optional<std::string> check_invariants(std::uint64_t limit);

}  // namespace accumulation

/// Exact triangle wave tw(t) = |((t-1) mod 4) - 2| - 1: period 4, values
/// in [-1, 1], peaks at t = 1 mod 4, troughs at t = 3 mod 4.
Rational triangle_wave(const Rational& t);

/// "Map each wave horizontally to the next": (x, y) -> (x/(1+4x), y) on
/// x in (0, 1]. In the u = 1/x coordinate this is u -> u + 4, so it maps
/// the wave graph {(x, tw(1/x))} into itself and has no fixed point.
PlanePoint wave_shift(const PlanePoint& p);

/// Point of the wave graph above x.
PlanePoint wave_graph_point(const Rational& x);

struct StrictDecreaseReport {
    std::uint64_t pairs_checked = 0;
    /// Indices of pairs whose image distance failed to strictly decrease.
    std::vector<std::size_t> violations;
    /// Max over pairs of |f(p)-f(q)|^2 / |p-q|^2 (squared distances of
    /// rational points are rational, so this is exact).
    Rational max_sq_ratio;
    std::pair<PlanePoint, PlanePoint> max_pair;
};

/// Compares exact squared distances before and after the map for every
/// pair; reports violations and the worst observed ratio as evidence
/// that the map, though strictly distance-decreasing, is no contraction.
/// Throws on an empty list or a pair of equal points.
StrictDecreaseReport verify_strict_decrease(
    const std::function<PlanePoint(const PlanePoint&)>& map,
    const std::vector<std::pair<PlanePoint, PlanePoint>>& pairs);

/// Deterministic pseudo-random points of the wave graph: x in (0, 1]
/// with bounded numerator/denominator, y = tw(1/x).
std::vector<PlanePoint> graph_sample(std::uint64_t count, std::uint64_t seed);

}  // namespace bfpp
