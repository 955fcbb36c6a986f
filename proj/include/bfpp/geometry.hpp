#pragma once

#include "bfpp/rational.hpp"

#include <cstddef>
#include <vector>

namespace bfpp {

/// Closed interval [lo, hi] with rational endpoints; degenerate allowed.
/// Whether the endpoints count is decided by the operation using it.
struct RInterval {
    Rational lo, hi;

    RInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo)
            throw std::invalid_argument("RInterval: lo > hi");
    }

    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains_open(const Rational& x) const { return lo < x && x < hi; }

    friend bool operator==(const RInterval& a, const RInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Nonempty finite set of rationals, kept strictly increasing.
class FinSet {
public:
    /// Sorts and removes duplicates; throws if the input is empty.
    explicit FinSet(std::vector<Rational> pts);

    /// Trusted fast path: input must already be strictly increasing.
    static FinSet from_sorted(std::vector<Rational> pts);

    const std::vector<Rational>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    const Rational& operator[](std::size_t i) const { return pts_[i]; }
    const Rational& min() const { return pts_.front(); }
    const Rational& max() const { return pts_.back(); }

    bool contains(const Rational& x) const;

    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    friend bool operator==(const FinSet& a, const FinSet& b) { return a.pts_ == b.pts_; }
    friend bool operator!=(const FinSet& a, const FinSet& b) { return !(a == b); }

private:
    FinSet() = default;
    std::vector<Rational> pts_;
};

/// min over s in S of |x - s|; exact.
Rational dist_point_set(const Rational& x, const FinSet& s);

/// min over (a, b) in A x B of |a - b|; exact.
Rational dist_sets(const FinSet& a, const FinSet& b);

/// max(S) - min(S).
Rational diameter(const FinSet& s);

/// Hausdorff distance: max of the two directed sup-of-inf distances; exact.
Rational hausdorff(const FinSet& a, const FinSet& b);

/// Distance from a point to the closed interval [lo, hi] (equals the
/// distance to the open interval, which shares its closure).
Rational dist_point_interval(const Rational& x, const Rational& lo, const Rational& hi);

/// Distance from a finite set to the interval [lo, hi].
Rational dist_set_interval(const FinSet& s, const Rational& lo, const Rational& hi);

}  // namespace bfpp
