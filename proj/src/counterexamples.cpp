#include "bfpp/counterexamples.hpp"

#include "bfpp/rand.hpp"

#include <stdexcept>

namespace bfpp {

Rational segment_map(const Rational& x) {
    Rational den = Rational(2) * (Rational(1) + abs(x));
    return x / den;
}

namespace accumulation {

namespace {

Rational pow4_inv(std::uint64_t n) {
    // 4^-n as a canonical rational; 4^n = 2^(2n).
    return Rational(Int(1), Int(1) << (2 * n));
}

}  // namespace

Rational a(std::uint64_t n) { return Rational(3) * pow4_inv(n + 1); }
Rational b(std::uint64_t n) { return pow4_inv(n); }
Rational z(std::uint64_t n) { return pow4_inv(n + 2); }

std::optional<std::uint64_t> violating_interval(const Rational& x) {
    if (!(Rational(0) < x && x <= Rational(1))) return std::nullopt;
    for (std::uint64_t n = 1;; ++n) {
        Rational bn = b(n);
        if (bn <= x) return std::nullopt;  // later intervals lie entirely below x
        if (a(n) < x) return n;            // x < b_n already holds
    }
}

bool contains(const Rational& x) {
    if (!(Rational(0) < x && x <= Rational(1))) return false;
    return !violating_interval(x).has_value();
}

std::uint64_t index(const Rational& x) {
    if (!(Rational(0) < x))
        throw std::domain_error("accumulation::index: x must be positive");
    Rational pw(1, 4);
    std::uint64_t n = 1;
    while (!(pw < x)) {
        pw /= Rational(4);
        ++n;
    }
    return n;
}

Rational map(const Rational& x) {
    if (!(Rational(0) < x && x <= Rational(1)))
        throw std::domain_error("accumulation::map: x outside (0,1]");
    if (auto n = violating_interval(x))
        throw std::domain_error("accumulation::map: x = " + x.to_string() +
                                " lies in the excluded interval (" + a(*n).to_string() + ", " +
                                b(*n).to_string() + "), n = " + std::to_string(*n));
    return z(index(x));
}

std::optional<std::string> check_invariants(std::uint64_t limit) {
    for (std::uint64_t n = 1; n <= limit; ++n) {
        if (!(b(n + 1) < a(n)))
            return "b_" + std::to_string(n + 1) + " < a_" + std::to_string(n) + " fails";
        if (!(z(n) < (b(n) - a(n)) / Rational(2)))
            return "z_" + std::to_string(n) + " < (b_n - a_n)/2 fails";
        if (!contains(z(n)))
            return "z_" + std::to_string(n) + " not in X";
        if (!(z(n + 1) < z(n)))
            return "z not strictly decreasing at n = " + std::to_string(n);
    }
    return std::nullopt;
}

}  // namespace accumulation

Rational triangle_wave(const Rational& t) {
    Rational s = t - Rational(1);
    Rational m = s - Rational(4) * Rational((s / Rational(4)).floor());  // (t-1) mod 4 in [0,4)
    return abs(m - Rational(2)) - Rational(1);
}

PlanePoint wave_shift(const PlanePoint& p) {
    if (!(Rational(0) < p.x && p.x <= Rational(1)))
        throw std::domain_error("wave_shift: x outside (0,1]");
    return PlanePoint{p.x / (Rational(1) + Rational(4) * p.x), p.y};
}

PlanePoint wave_graph_point(const Rational& x) {
    if (!(Rational(0) < x && x <= Rational(1)))
        throw std::domain_error("wave_graph_point: x outside (0,1]");
    return PlanePoint{x, triangle_wave(Rational(1) / x)};
}

namespace {

Rational sq_dist(const PlanePoint& p, const PlanePoint& q) {
    Rational dx = p.x - q.x;
    Rational dy = p.y - q.y;
    return dx * dx + dy * dy;
}

}  // namespace

StrictDecreaseReport verify_strict_decrease(
    const std::function<PlanePoint(const PlanePoint&)>& map,
    const std::vector<std::pair<PlanePoint, PlanePoint>>& pairs) {
    if (pairs.empty())
        throw std::invalid_argument("verify_strict_decrease: empty pair list");
    StrictDecreaseReport rep;
    rep.max_sq_ratio = Rational(0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [p, q] = pairs[i];
        if (p == q)
            throw std::invalid_argument("verify_strict_decrease: pair of equal points");
        Rational before = sq_dist(p, q);
        Rational after = sq_dist(map(p), map(q));
        if (!(after < before)) rep.violations.push_back(i);
        Rational ratio = after / before;
        if (rep.max_sq_ratio < ratio) {
            rep.max_sq_ratio = std::move(ratio);
            rep.max_pair = pairs[i];
        }
        ++rep.pairs_checked;
    }
    return rep;
}

std::vector<PlanePoint> graph_sample(std::uint64_t count, std::uint64_t seed) {
    if (count < 1)
        throw std::invalid_argument("graph_sample: count must be >= 1");
    RatRng rng(seed);
    std::vector<PlanePoint> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        Rational x = rng.unit_half_open(1000);  // x in (0, 1]
        out.push_back(wave_graph_point(x));
    }
    return out;
}

}  // namespace bfpp
