#include "coembed/extreal.hpp"

#include <cctype>

namespace coembed {

Rational Rational::parse(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'"); };
    if (s.empty()) bad();

    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        if (slash == 0 || slash + 1 >= s.size()) bad();
        Rational n = parse(s.substr(0, slash));
        Rational d = parse(s.substr(slash + 1));
        if (!n.is_integer() || !d.is_integer()) bad();
        if (d.is_zero()) throw std::domain_error("Rational: zero denominator");
        return n / d;
    }

    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') { neg = s[i] == '-'; ++i; }
    if (i >= s.size()) bad();

    long long intpart = 0, frac = 0, scale = 1;
    bool any_digit = false;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
        any_digit = true;
        if (__builtin_mul_overflow(intpart, 10LL, &intpart) ||
            __builtin_add_overflow(intpart, (long long)(s[i] - '0'), &intpart))
            throw std::overflow_error("Rational: literal too large");
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        bool any_frac = false;
        for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
            any_frac = true;
            if (__builtin_mul_overflow(frac, 10LL, &frac) ||
                __builtin_add_overflow(frac, (long long)(s[i] - '0'), &frac) ||
                __builtin_mul_overflow(scale, 10LL, &scale))
                throw std::overflow_error("Rational: literal too large");
        }
        if (!any_digit && !any_frac) bad();
    } else if (!any_digit) {
        bad();
    }
    if (i != s.size()) bad();

    Rational r = Rational(intpart) + Rational(frac, scale);
    return neg ? -r : r;
}

ExtReal ExtReal::parse(std::string_view s) {
    if (s == "inf" || s == "Inf" || s == "INF" || s == "oo")
        return ExtReal::infinity();
    return ExtReal(Rational::parse(s));
}

ExtReal conjugate(const ExtReal& p) {
    if (p.is_infinite()) return ExtReal(Rational(1));
    const Rational& v = p.rational();
    if (v <= Rational(1)) return ExtReal::infinity();
    return ExtReal(v / (v - Rational(1)));
}

ExtReal q_down(const ExtReal& q) {
    ExtReal c = conjugate(q);
    return c < q ? c : q;
}

Rational gamma_exponent(const ExtReal& p, const ExtReal& q, const ExtReal& r) {
    return Rational(1, 2) - r.inv() + p.inv() - q.inv();
}

ThetaValue theta_from(const ExtReal& q, const ExtReal& r) {
    ExtReal qd = q_down(q);
    if (r <= qd) return ExtReal::infinity();
    Rational inv_theta = qd.inv() - r.inv();
    // r > q_down(q) <= 2 forces 1/q_down - 1/r > 0.
    return ExtReal(inv_theta.reciprocal());
}

} // namespace coembed
