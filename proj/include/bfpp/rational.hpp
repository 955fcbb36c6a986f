#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bfpp {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-precision integers.
///
/// Invariants: always in lowest terms, denominator > 0, zero is 0/1.
/// Equal values therefore have identical representations, so equality is
/// plain field comparison and the serialized form "num/den" is canonical.
/// All arithmetic is exact; there is no floating-point anywhere.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}

    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero())
            throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    Rational(long long n, long long d) : Rational(Int(n), Int(d)) {}

    /// Parses "num/den" or a bare integer "num". Lowest terms are not
    /// required on input; the result is normalized.
    static Rational parse(std::string_view s);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    /// Canonical serialization, always with the slash: "0/1", "-3/4".
    std::string to_string() const { return num_.str() + "/" + den_.str(); }

    /// Largest integer <= value.
    Int floor() const {
        Int q = num_ / den_;
        if (num_ < 0 && num_ % den_ != 0) --q;
        return q;
    }

    /// Smallest integer >= value.
    Int ceil() const {
        Int q = num_ / den_;
        if (num_ > 0 && num_ % den_ != 0) ++q;
        return q;
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_.is_zero())
            throw std::invalid_argument("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        Int g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;  // carries the sign
    Int den_;  // always > 0
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Rational Rational::parse(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("Rational::parse: bad literal '" + std::string(s) + "'"); };
    auto digits = [&](std::string_view t) {
        if (t.empty()) bad();
        for (char c : t)
            if (c < '0' || c > '9') bad();
        return Int(std::string(t));
    };
    std::string_view rest = s;
    bool neg = false;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
        neg = rest.front() == '-';
        rest.remove_prefix(1);
    }
    Int n, d = 1;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        n = digits(rest.substr(0, slash));
        d = digits(rest.substr(slash + 1));
        if (d.is_zero()) bad();
    } else {
        n = digits(rest);
    }
    if (neg) n = -n;
    return Rational(std::move(n), std::move(d));
}

}  // namespace bfpp
