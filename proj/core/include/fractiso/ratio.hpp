#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fractiso/errors.hpp"

namespace fractiso {

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator; every field operation and comparison is exact.
class Ratio {
public:
    Ratio() : v_(0) {}
    Ratio(long n) : v_(n) {}       // NOLINT: implicit by design, scalars mix freely
    Ratio(long n, long d);
    explicit Ratio(mpq_class q) : v_(std::move(q)) { canonicalize(); }

    /// Parses "p/q", a plain integer, or a decimal string ("0.25" -> 25/100
    /// reduced). Decimal conversion is exact: d digits give denominator 10^d.
    static Ratio parse(std::string_view text);

    /// Canonical lowest-terms "p/q" form, denominator always printed ("0/1", "1/1", "-2/3").
    std::string str() const;

    double to_double() const { return v_.get_d(); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Ratio& operator+=(const Ratio& o) { v_ += o.v_; return *this; }
    Ratio& operator-=(const Ratio& o) { v_ -= o.v_; return *this; }
    Ratio& operator*=(const Ratio& o) { v_ *= o.v_; return *this; }
    Ratio& operator/=(const Ratio& o);

    friend Ratio operator+(Ratio a, const Ratio& b) { a += b; return a; }
    friend Ratio operator-(Ratio a, const Ratio& b) { a -= b; return a; }
    friend Ratio operator*(Ratio a, const Ratio& b) { a *= b; return a; }
    friend Ratio operator/(Ratio a, const Ratio& b) { a /= b; return a; }
    friend Ratio operator-(const Ratio& a) { return Ratio(mpq_class(-a.v_)); }

    friend bool operator==(const Ratio& a, const Ratio& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    void canonicalize() { v_.canonicalize(); }
    mpq_class v_;
};

using RatioVec = std::vector<Ratio>;
using RatioMat = std::vector<RatioVec>;

inline const Ratio& ratio_zero() { static const Ratio z(0); return z; }
inline const Ratio& ratio_one() { static const Ratio o(1); return o; }

bool in_unit_interval(const Ratio& r);

/// Exact dot product sum_i a(i)*b(i).
Ratio dot(const RatioVec& a, const RatioVec& b);

} // namespace fractiso
