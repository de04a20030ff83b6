#include "fractiso/ratio.hpp"

#include <cctype>

namespace fractiso {

Ratio::Ratio(long n, long d) {
    if (d == 0) fail(errc::parse_error, "zero denominator");
    v_ = mpq_class(n, d);
    canonicalize();
}

Ratio& Ratio::operator/=(const Ratio& o) {
    if (o.is_zero()) fail(errc::parse_error, "division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Ratio Ratio::parse(std::string_view text) {
    // strip surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) fail(errc::parse_error, "empty scalar");

    std::string s(text);
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den))
            fail(errc::parse_error, "bad rational '" + s + "'");
        mpq_class q;
        if (q.set_str(s, 10) != 0) fail(errc::parse_error, "bad rational '" + s + "'");
        if (sgn(q.get_den()) == 0) fail(errc::parse_error, "zero denominator in '" + s + "'");
        return Ratio(std::move(q));
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) whole.erase(0, 1);
        if (whole.empty() && frac.empty()) fail(errc::parse_error, "bad decimal '" + s + "'");
        if ((!whole.empty() && !is_integer_token(whole)) || (!frac.empty() && !is_integer_token(frac)))
            fail(errc::parse_error, "bad decimal '" + s + "'");
        const std::string all_digits = whole + frac;
        mpz_class digits(all_digits.empty() ? std::string("0") : all_digits, 10);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpq_class q(digits, scale);
        if (negative) q = -q;
        return Ratio(std::move(q));
    }
    if (!is_integer_token(s)) fail(errc::parse_error, "bad integer '" + s + "'");
    return Ratio(mpq_class(mpz_class(s, 10)));
}

std::string Ratio::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool in_unit_interval(const Ratio& r) {
    return r >= ratio_zero() && r <= ratio_one();
}

Ratio dot(const RatioVec& a, const RatioVec& b) {
    if (a.size() != b.size()) fail(errc::dimension_mismatch, "dot of unequal lengths");
    Ratio acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

} // namespace fractiso
