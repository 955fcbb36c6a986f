#include "bfpp/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfpp {

FinSet::FinSet(std::vector<Rational> pts) : pts_(std::move(pts)) {
    if (pts_.empty())
        throw std::invalid_argument("FinSet: empty");
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

FinSet FinSet::from_sorted(std::vector<Rational> pts) {
    if (pts.empty())
        throw std::invalid_argument("FinSet: empty");
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i - 1] < pts[i]))
            throw std::invalid_argument("FinSet::from_sorted: not strictly increasing");
    FinSet s;
    s.pts_ = std::move(pts);
    return s;
}

bool FinSet::contains(const Rational& x) const {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), x);
    return it != pts_.end() && *it == x;
}

Rational dist_point_set(const Rational& x, const FinSet& s) {
    const auto& p = s.points();
    auto it = std::lower_bound(p.begin(), p.end(), x);
    if (it == p.end()) return x - p.back();
    Rational best = *it - x;  // *it >= x
    if (it != p.begin()) best = min(best, x - *(it - 1));
    return best;
}

Rational dist_sets(const FinSet& a, const FinSet& b) {
    // Both sorted: the closest pair is adjacent in the merged order.
    const auto& pa = a.points();
    const auto& pb = b.points();
    std::size_t i = 0, j = 0;
    bool have = false;
    Rational best;
    auto consider = [&](const Rational& x, const Rational& y) {
        Rational d = abs(x - y);
        if (!have || d < best) {
            best = std::move(d);
            have = true;
        }
    };
    while (i < pa.size() && j < pb.size()) {
        consider(pa[i], pb[j]);
        if (pa[i] < pb[j])
            ++i;
        else
            ++j;
    }
    while (i < pa.size()) consider(pa[i++], pb.back());
    while (j < pb.size()) consider(pa.back(), pb[j++]);
    return best;
}

Rational diameter(const FinSet& s) { return s.max() - s.min(); }

namespace {

// sup over a in A of dist(a, B); both sorted, single forward sweep.
Rational directed_hausdorff(const FinSet& a, const FinSet& b) {
    const auto& pb = b.points();
    Rational worst = 0;
    std::size_t j = 0;
    for (const Rational& x : a) {
        while (j + 1 < pb.size() && pb[j + 1] <= x) ++j;
        Rational d = abs(x - pb[j]);
        if (j + 1 < pb.size()) d = min(d, pb[j + 1] - x);
        if (worst < d) worst = std::move(d);
    }
    return worst;
}

}  // namespace

Rational hausdorff(const FinSet& a, const FinSet& b) {
    return max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

Rational dist_point_interval(const Rational& x, const Rational& lo, const Rational& hi) {
    if (x < lo) return lo - x;
    if (hi < x) return x - hi;
    return Rational(0);
}

Rational dist_set_interval(const FinSet& s, const Rational& lo, const Rational& hi) {
    const auto& p = s.points();
    // Points inside the interval give distance zero.
    auto it = std::lower_bound(p.begin(), p.end(), lo);
    if (it != p.end() && *it <= hi) return Rational(0);
    Rational best;
    bool have = false;
    if (it != p.end()) {
        best = *it - hi;
        have = true;
    }
    if (it != p.begin()) {
        Rational d = lo - *(it - 1);
        if (!have || d < best) best = std::move(d);
    }
    return best;
}

}  // namespace bfpp
