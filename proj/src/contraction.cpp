#include "bfpp/contraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfpp {

PiecewiseAffineMap::PiecewiseAffineMap(std::vector<Breakpoint> bps) : bps_(std::move(bps)) {
    if (bps_.empty())
        throw std::invalid_argument("PiecewiseAffineMap: no breakpoints");
    for (std::size_t i = 1; i < bps_.size(); ++i)
        if (!(bps_[i - 1].t < bps_[i].t))
            throw std::invalid_argument("PiecewiseAffineMap: abscissae not strictly increasing");
    slopes_.reserve(bps_.size() > 0 ? bps_.size() - 1 : 0);
    lip_ = Rational(0);
    for (std::size_t i = 0; i + 1 < bps_.size(); ++i) {
        Rational s = (bps_[i + 1].v - bps_[i].v) / (bps_[i + 1].t - bps_[i].t);
        lip_ = max(lip_, abs(s));
        slopes_.push_back(std::move(s));
    }
}

PiecewiseAffineMap PiecewiseAffineMap::affine(const Rational& slope, const Rational& intercept,
                                              const Rational& lo, const Rational& hi) {
    if (!(lo < hi))
        throw std::invalid_argument("PiecewiseAffineMap::affine: lo >= hi");
    return PiecewiseAffineMap({{lo, slope * lo + intercept}, {hi, slope * hi + intercept}});
}

Rational PiecewiseAffineMap::eval(const Rational& x) const {
    if (x <= bps_.front().t) return bps_.front().v;
    if (x >= bps_.back().t) return bps_.back().v;
    // Find the piece [t_i, t_{i+1}] with t_i <= x < t_{i+1}.
    auto it = std::upper_bound(bps_.begin(), bps_.end(), x,
                               [](const Rational& v, const Breakpoint& b) { return v < b.t; });
    std::size_t i = static_cast<std::size_t>(it - bps_.begin()) - 1;
    return bps_[i].v + slopes_[i] * (x - bps_[i].t);
}

RInterval PiecewiseAffineMap::image_interval(const RInterval& in) const {
    Rational lo = eval(in.lo);
    Rational hi = eval(in.hi);
    if (hi < lo) std::swap(lo, hi);
    auto it = std::upper_bound(bps_.begin(), bps_.end(), in.lo,
                               [](const Rational& v, const Breakpoint& b) { return v < b.t; });
    for (; it != bps_.end() && it->t < in.hi; ++it) {
        if (it->v < lo)
            lo = it->v;
        else if (hi < it->v)
            hi = it->v;
    }
    return RInterval(std::move(lo), std::move(hi));
}

Rational exact_fixed_point(const PiecewiseAffineMap& f) {
    if (!(f.lipschitz() < Rational(1)))
        throw std::invalid_argument("exact_fixed_point: map is not a contraction");
    const auto& bps = f.breakpoints();
    // Constant tails first: f is v_front on (-inf, t_front] and v_back on
    // [t_back, inf).
    if (bps.front().v <= bps.front().t) return bps.front().v;
    if (bps.back().v >= bps.back().t) return bps.back().v;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const Rational s = (bps[i + 1].v - bps[i].v) / (bps[i + 1].t - bps[i].t);
        // Solve v_i + s*(x - t_i) = x.
        Rational x = (bps[i].v - s * bps[i].t) / (Rational(1) - s);
        if (bps[i].t <= x && x <= bps[i + 1].t) return x;
    }
    // Unreachable for a contraction: a fixed point always exists.
    throw std::logic_error("exact_fixed_point: no piece contains the fixed point");
}

FixedPointCertificate banach_iterate(const PiecewiseAffineMap& f, const Rational& x0,
                                     const Rational& tol) {
    const Rational& q = f.lipschitz();
    if (!(q < Rational(1)))
        throw std::invalid_argument("banach_iterate: map is not a contraction");
    if (!(Rational(0) < tol))
        throw std::invalid_argument("banach_iterate: tol must be positive");
    const Rational factor = q / (Rational(1) - q);
    Rational prev = x0;
    Rational cur = f.eval(prev);
    std::uint64_t n = 1;
    Rational bound;
    for (;;) {
        Rational next = f.eval(cur);
        ++n;
        bound = factor * abs(next - cur);
        prev = std::move(cur);
        cur = std::move(next);
        if (bound <= tol) break;
    }
    return FixedPointCertificate{q, n, std::move(cur), std::move(bound)};
}

MapOracle as_oracle(const PiecewiseAffineMap& f, std::string name) {
    return MapOracle{[f](const Rational& x) { return f.eval(x); }, f.lipschitz(), std::nullopt,
                     std::move(name)};
}

Rational empirical_lipschitz(const MapOracle& f,
                             std::span<const std::pair<Rational, Rational>> pairs) {
    if (pairs.empty())
        throw std::invalid_argument("empirical_lipschitz: empty pair list");
    Rational best(0);
    for (const auto& [x, y] : pairs) {
        if (x == y)
            throw std::invalid_argument("empirical_lipschitz: pair with equal components");
        best = max(best, abs(f.eval(x) - f.eval(y)) / abs(x - y));
    }
    return best;
}

MapOracle lipschitz_extend_1d(std::vector<std::pair<Rational, Rational>> data,
                              const Rational& lipschitz_bound) {
    if (data.empty())
        throw std::invalid_argument("lipschitz_extend_1d: empty data");
    for (std::size_t i = 0; i < data.size(); ++i)
        for (std::size_t j = i + 1; j < data.size(); ++j)
            if (lipschitz_bound * abs(data[i].first - data[j].first) <
                abs(data[i].second - data[j].second))
                throw std::invalid_argument(
                    "lipschitz_extend_1d: data not compatible with bound at nodes (" +
                    data[i].first.to_string() + ", " + data[i].second.to_string() + ") and (" +
                    data[j].first.to_string() + ", " + data[j].second.to_string() + ")");
    Rational bound = lipschitz_bound;
    auto eval = [data = std::move(data), L = lipschitz_bound](const Rational& x) {
        Rational best = data.front().second + L * abs(x - data.front().first);
        for (std::size_t i = 1; i < data.size(); ++i)
            best = min(best, data[i].second + L * abs(x - data[i].first));
        return best;
    };
    return MapOracle{std::move(eval), std::move(bound), std::nullopt, "mcshane-extension"};
}

}  // namespace bfpp
