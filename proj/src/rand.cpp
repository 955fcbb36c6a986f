#include "bfpp/rand.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfpp {

Rational RatRng::unit_open(std::uint64_t max_den) {
    if (max_den < 2)
        throw std::invalid_argument("RatRng::unit_open: max_den must be >= 2");
    std::uint64_t den = 2 + below(max_den - 1);
    std::uint64_t num = 1 + below(den - 1);
    return Rational(Int(num), Int(den));
}

Rational RatRng::unit_half_open(std::uint64_t max_den) {
    if (max_den < 1)
        throw std::invalid_argument("RatRng::unit_half_open: max_den must be >= 1");
    std::uint64_t den = 1 + below(max_den);
    std::uint64_t num = 1 + below(den);
    return Rational(Int(num), Int(den));
}

Rational RatRng::in_open(const Rational& lo, const Rational& hi, std::uint64_t max_den) {
    if (!(lo < hi))
        throw std::invalid_argument("RatRng::in_open: lo >= hi");
    return lo + (hi - lo) * unit_open(max_den);
}

Rational RatRng::signed_unit(std::uint64_t max_den) {
    std::uint64_t den = 1 + below(max_den);
    std::uint64_t num = below(2 * den + 1);  // 0 .. 2*den
    return Rational(Int(num) - Int(den), Int(den));
}

PiecewiseAffineMap random_pw_map(RatRng& rng, std::size_t max_interior_breaks,
                                 const Rational& ratio_cap) {
    std::vector<Rational> ts{Rational(0), Rational(1)};
    std::size_t interior = rng.below(max_interior_breaks + 1);
    for (std::size_t i = 0; i < interior; ++i) ts.push_back(rng.unit_open(64));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    std::vector<PiecewiseAffineMap::Breakpoint> bps;
    bps.reserve(ts.size());
    Rational v = rng.unit_open(64);
    bps.push_back({ts[0], v});
    for (std::size_t i = 1; i < ts.size(); ++i) {
        Rational slope = ratio_cap * rng.signed_unit(32);
        v += slope * (ts[i] - ts[i - 1]);
        bps.push_back({ts[i], v});
    }
    return PiecewiseAffineMap(std::move(bps));
}

MapFamily parse_map_family(const std::string& name) {
    if (name == "affine") return MapFamily::Affine;
    if (name == "constant") return MapFamily::Constant;
    if (name == "toward") return MapFamily::TowardBlock;
    if (name == "collapse") return MapFamily::Collapse;
    if (name == "sawtooth") return MapFamily::Sawtooth;
    if (name == "mixed") return MapFamily::Mixed;
    throw std::invalid_argument("unknown map family '" + name + "'");
}

std::string family_name(MapFamily f) {
    switch (f) {
        case MapFamily::Affine: return "affine";
        case MapFamily::Constant: return "constant";
        case MapFamily::TowardBlock: return "toward";
        case MapFamily::Collapse: return "collapse";
        case MapFamily::Sawtooth: return "sawtooth";
        case MapFamily::Mixed: return "mixed";
    }
    return "?";
}

namespace {

const StageCertificate::Inserted& inserted_of(const StageCertificate& cert) {
    if (cert.kind != StageCase::Inserted || !cert.ins)
        throw std::invalid_argument("coverage trial maps need an Inserted stage");
    return *cert.ins;
}

}  // namespace

PiecewiseAffineMap coverage_trial_map(MapFamily family, std::uint64_t trial, RatRng& rng,
                                      const StageCertificate& cert) {
    const auto& ins = inserted_of(cert);
    const Rational& r = cert.req.r;
    if (family == MapFamily::Mixed)
        family = static_cast<MapFamily>(trial % 5);
    switch (family) {
        case MapFamily::Constant: {
            // Constant at a random Y-center: lands inside one Y-interval.
            std::size_t j = rng.below(ins.ys.size());
            return PiecewiseAffineMap({{Rational(0), ins.ys[j]}});
        }
        case MapFamily::TowardBlock: {
            // Full-ratio affine translate aimed so a random source point
            // lands on a random Y-center.
            std::size_t j = rng.below(ins.ys.size());
            Rational src = rng.unit_open(64);
            Rational slope = rng.below(2) ? r : -r;
            Rational intercept = ins.ys[j] - slope * src;
            return PiecewiseAffineMap::affine(slope, intercept, Rational(0), Rational(1));
        }
        case MapFamily::Collapse: {
            // Affine collapse of [0,1] onto the Y-block span, ratio capped.
            Rational slope = min(r, ins.ys.max() - ins.ys.min());
            if (slope.is_zero()) slope = r;  // k = 1: degenerate span
            if (rng.below(2)) slope = -slope;
            Rational mid_src(1, 2);
            Rational mid_dst = (ins.ys.min() + ins.ys.max()) / Rational(2);
            Rational intercept = mid_dst - slope * mid_src;
            return PiecewiseAffineMap::affine(slope, intercept, Rational(0), Rational(1));
        }
        case MapFamily::Sawtooth: {
            // Zigzag of slopes +-r across the block: alternating teeth
            // anchored at the block ends, as many meets as the ratio allows.
            Rational lo = ins.ys.min(), hi = ins.zs.max();
            Rational step = (Rational(1) - Rational(0)) / Rational(8);
            std::vector<PiecewiseAffineMap::Breakpoint> bps;
            Rational t(0);
            Rational v = lo;
            bool up = true;
            for (int i = 0; i <= 8; ++i) {
                bps.push_back({t, v});
                Rational next = v + (up ? r : -r) * step;
                if (hi < next) next = hi;
                if (next < lo) next = lo;
                if (next == v) up = !up;  // bounce off the clamped edge
                v = std::move(next);
                up = !up;
                t += step;
            }
            // Abscissae are exact multiples of step, strictly increasing;
            // consecutive equal values are fine (zero-slope pieces).
            return PiecewiseAffineMap(std::move(bps));
        }
        case MapFamily::Affine:
        case MapFamily::Mixed:
            break;
    }
    return random_pw_map(rng, 6, r);
}

}  // namespace bfpp
