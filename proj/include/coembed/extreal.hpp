#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coembed/rational.hpp"

namespace coembed {

/**
 * An exponent value in (0, inf]: either a strictly positive rational or
 * infinity. Hosts the integrability exponents p, q, r and the
 * summability exponent theta.
 */
class ExtReal {
public:
    ExtReal(const Rational& v) : finite_(v) {
        if (!v.is_positive())
            throw std::domain_error("ExtReal: finite values must be > 0");
    }
    ExtReal(long long v) : ExtReal(Rational(v)) {}

    static ExtReal infinity() { return ExtReal(infinite_tag{}); }

    bool is_infinite() const { return !finite_.has_value(); }
    bool is_finite() const { return finite_.has_value(); }

    const Rational& rational() const {
        if (!finite_) throw std::domain_error("ExtReal: infinite value has no rational form");
        return *finite_;
    }

    // 1/x with 1/inf = 0 exactly.
    Rational inv() const {
        if (!finite_) return Rational(0);
        return finite_->reciprocal();
    }

    bool operator==(const ExtReal& o) const {
        if (is_infinite() || o.is_infinite()) return is_infinite() == o.is_infinite();
        return *finite_ == *o.finite_;
    }
    bool operator<(const ExtReal& o) const {
        if (is_infinite()) return false;
        if (o.is_infinite()) return true;
        return *finite_ < *o.finite_;
    }
    bool operator<=(const ExtReal& o) const { return *this < o || *this == o; }
    bool operator>(const ExtReal& o) const { return o < *this; }
    bool operator>=(const ExtReal& o) const { return o <= *this; }

    std::string to_string() const {
        return finite_ ? finite_->to_string() : std::string("inf");
    }

    // Parses "inf" (or "oo") or anything Rational::parse accepts.
    static ExtReal parse(std::string_view s);

private:
    struct infinite_tag {};
    explicit ExtReal(infinite_tag) : finite_(std::nullopt) {}
    std::optional<Rational> finite_;
};

/// The summability exponent theta in (0, inf].
using ThetaValue = ExtReal;

// Conjugate exponent: inf for p <= 1, p/(p-1) for 1 < p < inf, 1 for p = inf.
ExtReal conjugate(const ExtReal& p);

// min{q, q'}. Always <= 2.
ExtReal q_down(const ExtReal& q);

// 1/2 - 1/r + 1/p - 1/q as an exact rational, with 1/inf = 0.
Rational gamma_exponent(const ExtReal& p, const ExtReal& q, const ExtReal& r);

// inf when r <= q_down(q); otherwise the theta with 1/theta = 1/q_down(q) - 1/r.
ThetaValue theta_from(const ExtReal& q, const ExtReal& r);

} // namespace coembed
