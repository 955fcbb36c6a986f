#pragma once

#include "bfpp/contraction.hpp"
#include "bfpp/rational.hpp"
#include "bfpp/witness.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace bfpp {

/// Seeded PRNG over rationals. All artifact randomness flows through
/// this wrapper: mt19937_64 raw output reduced by modulo (documented so
/// runs are reproducible from the seed alone), fractions drawn as
/// num/den with both bounded.
class RatRng {
public:
    explicit RatRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform-ish integer in [0, n); modulo reduction.
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    /// Fraction in (0, 1): den in [2, max_den], num in [1, den-1].
    Rational unit_open(std::uint64_t max_den);

    /// Fraction in (0, 1]: den in [1, max_den], num in [1, den].
    Rational unit_half_open(std::uint64_t max_den);

    /// Fraction in [0, 1]: den in [1, max_den], num in [0, den].
    Rational unit_closed(std::uint64_t max_den);

    /// lo + (hi - lo) * unit_open(max_den): a rational strictly inside.
    Rational in_open(const Rational& lo, const Rational& hi, std::uint64_t max_den);

    /// Fraction in [-1, 1]: num in [-den, den], den in [1, max_den].
    Rational signed_unit(std::uint64_t max_den);

private:
    std::mt19937_64 eng_;
};

/// Random piecewise-affine map on a span of [0, 1]: every slope is
/// ratio_cap * (a signed unit fraction), so lipschitz <= ratio_cap holds
/// exactly by construction.
PiecewiseAffineMap random_pw_map(RatRng& rng, std::size_t max_interior_breaks,
                                 const Rational& ratio_cap);

/// Builtin trial families for the coverage checker. "mixed" cycles
/// through all of them.
enum class MapFamily { Affine, Constant, TowardBlock, Collapse, Sawtooth, Mixed };

MapFamily parse_map_family(const std::string& name);
std::string family_name(MapFamily f);

/// Deterministic trial map for one coverage trial: families aimed at the
/// stage's Y-block plus generic random maps, all of ratio <= cert.r.
PiecewiseAffineMap coverage_trial_map(MapFamily family, std::uint64_t trial, RatRng& rng,
                                      const StageCertificate& cert);

}  // namespace bfpp
