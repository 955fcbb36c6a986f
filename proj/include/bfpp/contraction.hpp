#pragma once

#include "bfpp/geometry.hpp"
#include "bfpp/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bfpp {

/// Continuous piecewise-affine self-map of the line.
///
/// Breakpoints (t_i, v_i) with strictly increasing t_i; the map
/// interpolates affinely between consecutive breakpoints and is constant
/// at the boundary values outside [t_first, t_last], so it is total on
/// the whole line. A single breakpoint yields a constant map.
class PiecewiseAffineMap {
public:
    struct Breakpoint {
        Rational t, v;
        friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
    };

    explicit PiecewiseAffineMap(std::vector<Breakpoint> bps);

    /// Convenience: the affine map x -> slope*x + intercept realized over
    /// the span [lo, hi] (constant outside).
    static PiecewiseAffineMap affine(const Rational& slope, const Rational& intercept,
                                     const Rational& lo, const Rational& hi);

    const std::vector<Breakpoint>& breakpoints() const { return bps_; }

    Rational eval(const Rational& x) const;

    /// Exact Lipschitz constant: max over pieces of |slope|; 0 if constant.
    const Rational& lipschitz() const { return lip_; }

    /// Exact image f(I); an interval by continuity. Extrema occur at the
    /// endpoint values or at interior breakpoint values.
    RInterval image_interval(const RInterval& i) const;

    friend bool operator==(const PiecewiseAffineMap&, const PiecewiseAffineMap&) = default;

private:
    std::vector<Breakpoint> bps_;
    std::vector<Rational> slopes_;  // slopes_[i] over [t_i, t_{i+1}]
    Rational lip_;
};

/// The unique fixed point of a contraction (lipschitz < 1), located by
/// solving s*x + c = x on the piece (or constant tail) that contains it.
/// Throws std::invalid_argument if lipschitz(f) >= 1.
Rational exact_fixed_point(const PiecewiseAffineMap& f);

/// Audit record of one Banach iteration run: q is the map's Lipschitz
/// ratio, x_n the final iterate and bound the a-posteriori error bound
/// (q/(1-q))*|x_n - x_{n-1}|, which dominates |x_n - x*| exactly.
struct FixedPointCertificate {
    Rational q;
    std::uint64_t n = 0;
    Rational x_n;
    Rational bound;
};

/// Iterates x_{i+1} = f(x_i) until the a-posteriori bound drops to tol.
/// The bound needs two consecutive iterates, so at least two steps are
/// taken and the stopping rule is first consulted at n = 2. Terminates
/// for every contraction since the bound contracts by factor q per step.
/// Throws std::invalid_argument if lipschitz(f) >= 1 or tol <= 0.
FixedPointCertificate banach_iterate(const PiecewiseAffineMap& f, const Rational& x0,
                                     const Rational& tol);

/// A map given by an evaluation rule with a declared (not proved)
/// Lipschitz upper bound. Used for the non-affine explicit maps; all
/// certificate-level checking sticks to PiecewiseAffineMap.
struct MapOracle {
    std::function<Rational(const Rational&)> eval;
    Rational lipschitz_bound;
    std::optional<RInterval> domain;  // nullopt = whole line
    std::string name;
};

MapOracle as_oracle(const PiecewiseAffineMap& f, std::string name = "piecewise-affine");

/// max over pairs of |f(x)-f(y)|/|x-y|: a certified lower bound on the
/// true Lipschitz constant. Throws on an empty list or a pair with equal
/// components.
Rational empirical_lipschitz(const MapOracle& f,
                             std::span<const std::pair<Rational, Rational>> pairs);

/// One-dimensional Lipschitz extension by the lower McShane envelope
/// g(x) = min_i (y_i + L*|x - x_i|). The data must be L-compatible
/// (|y_i - y_j| <= L*|x_i - x_j|); the first violating pair is reported
/// otherwise. The result agrees with the data at every node and is
/// L-Lipschitz on the whole line.
MapOracle lipschitz_extend_1d(std::vector<std::pair<Rational, Rational>> data,
                              const Rational& lipschitz_bound);

}  // namespace bfpp
