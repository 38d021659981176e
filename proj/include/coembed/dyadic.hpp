#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "coembed/rational.hpp"

namespace coembed {

/**
 * A single exact term c * 2^e with rational c and rational exponent e.
 * Canonical form keeps c odd-over-odd: every factor of two is folded
 * into the exponent, so equal values have equal representations.
 *
 * All matrix entries of the discretized dilation families live here, as
 * do the individual inequality sides of the octant classification.
 */
class DyadicValue {
public:
    DyadicValue() : coeff_(0), exp_(0) {}
    DyadicValue(const Rational& coeff, const Rational& exp2) : coeff_(coeff), exp_(exp2) {
        normalize();
    }
    static DyadicValue from_integer(long long v) { return DyadicValue(Rational(v), Rational(0)); }
    static DyadicValue one() { return from_integer(1); }
    static DyadicValue zero() { return DyadicValue(); }
    // 2^e
    static DyadicValue pow2(const Rational& e) { return DyadicValue(Rational(1), e); }

    const Rational& coeff() const { return coeff_; }
    const Rational& exp2() const { return exp_; }

    bool is_zero() const { return coeff_.is_zero(); }
    bool is_negative() const { return coeff_.is_negative(); }

    DyadicValue operator-() const { return DyadicValue(-coeff_, exp_); }
    DyadicValue abs() const { return coeff_.is_negative() ? -*this : *this; }

    DyadicValue operator*(const DyadicValue& o) const {
        if (is_zero() || o.is_zero()) return zero();
        return DyadicValue(coeff_ * o.coeff_, exp_ + o.exp_);
    }
    DyadicValue reciprocal() const {
        return DyadicValue(coeff_.reciprocal(), -exp_);
    }
    DyadicValue pow_int(long long k) const {
        if (k < 0) return reciprocal().pow_int(-k);
        DyadicValue acc = one(), b = *this;
        while (k > 0) {
            if (k & 1) acc = acc * b;
            b = (k >>= 1) ? b * b : b;
        }
        return acc;
    }

    bool operator==(const DyadicValue& o) const {
        return coeff_ == o.coeff_ && exp_ == o.exp_;
    }

    // Exact three-way comparison of the real values.
    std::strong_ordering operator<=>(const DyadicValue& o) const;

    // Exact rational value when the exponent is an integer of modest size.
    std::optional<Rational> to_rational() const;

    long double to_long_double() const;
    std::string to_string() const;

private:
    void normalize();
    Rational coeff_; // odd numerator and denominator (or zero)
    Rational exp_;
};

/**
 * A finite sum of dyadic terms, canonicalized to at most one term per
 * exponent-residue class mod 1: terms whose exponents differ by an
 * integer merge exactly (3 = 1 + 1 + 1 collapses to a single term).
 * The family {2^rho : rho in [0,1) rational} is linearly independent
 * over Q, so this representation is unique and structural equality is
 * complete. Norm values of the discretized matrices take this shape:
 * 2^n + 2^{n l1}(1+|m1|) + ...
 *
 * compare() decides the exact sign of a difference: zero is the empty
 * sum, and a nonzero sign is certified by directed-rounding evaluation
 * at escalating precision.
 */
class DyadicSum {
public:
    DyadicSum() = default;
    DyadicSum(const DyadicValue& v) { *this += v; }
    static DyadicSum from_integer(long long v) { return DyadicSum(DyadicValue::from_integer(v)); }

    DyadicSum& operator+=(const DyadicValue& v);
    DyadicSum& operator+=(const DyadicSum& o);
    DyadicSum operator+(const DyadicSum& o) const {
        DyadicSum r = *this;
        r += o;
        return r;
    }
    DyadicSum operator-() const;
    DyadicSum operator-(const DyadicSum& o) const { return *this + (-o); }
    DyadicSum operator*(const DyadicValue& v) const;
    DyadicSum operator*(const DyadicSum& o) const;
    DyadicSum pow_uint(unsigned k) const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    // residue in [0,1) -> the canonical term of that class
    const std::map<Rational, DyadicValue>& terms() const { return terms_; }
    std::optional<DyadicValue> single_term() const;

    bool operator==(const DyadicSum& o) const { return terms_ == o.terms_; }

    // Exact sign of (*this - o).
    std::strong_ordering compare(const DyadicSum& o) const;
    std::strong_ordering compare(const Rational& q) const {
        return compare(DyadicSum(DyadicValue(q, Rational(0))));
    }

    std::optional<Rational> to_rational() const;
    long double to_long_double() const;
    std::string to_string() const;

private:
    std::map<Rational, DyadicValue> terms_;
};

} // namespace coembed
