#pragma once

#include <compare>
#include <string>
#include <vector>

#include "coembed/dyadic.hpp"

namespace coembed {

/**
 * One exact positive value of the form  scale * base^power  with a
 * dyadic-sum scale and base and a rational power. Matrix norms raised
 * to weight exponents live here; integral powers of single dyadic
 * terms fold into the scale so that simple cases reduce to plain
 * dyadic values.
 */
class PowerProduct {
public:
    PowerProduct(DyadicSum scale, DyadicSum base, Rational power);

    const DyadicSum& scale() const { return scale_; }
    const DyadicSum& base() const { return base_; }
    const Rational& power() const { return power_; }

    bool is_power_free() const { return power_.is_zero(); }

    PowerProduct operator*(const DyadicValue& v) const {
        return PowerProduct(scale_ * v, base_, power_);
    }

    bool operator==(const PowerProduct& o) const {
        return scale_ == o.scale_ && base_ == o.base_ && power_ == o.power_;
    }

    long double to_long_double() const;
    std::string to_string() const;

private:
    friend class PowerSum;
    DyadicSum scale_;
    DyadicSum base_;  // strictly positive terms
    Rational power_;
};

// Exact direction of a comparison between two positive power products.
// Structural equality is decided first; distinct values are separated
// by directed-rounding evaluation at escalating precision.
std::strong_ordering certified_compare(const PowerProduct& a, const PowerProduct& b);

/**
 * A sum of power products, canonicalized: expandable terms (integral
 * powers of small bases) are flattened into power-free dyadic sums and
 * terms sharing (base, power) are merged.
 */
class PowerSum {
public:
    PowerSum() = default;
    PowerSum(const PowerProduct& t) { *this += t; }

    PowerSum& operator+=(const PowerProduct& t);
    PowerSum operator+(const PowerSum& o) const;
    PowerSum operator*(const DyadicValue& v) const;

    const std::vector<PowerProduct>& terms() const { return terms_; }

    bool operator==(const PowerSum& o) const { return terms_ == o.terms_; }

    // Exact value as a dyadic sum, available when every term is
    // power-free after canonicalization.
    std::optional<DyadicSum> to_dyadic_sum() const;

    // Exact comparison against a rational; requires to_dyadic_sum().
    std::strong_ordering compare(const Rational& q) const;

    long double to_long_double() const;
    std::string to_string() const;

private:
    std::vector<PowerProduct> terms_;
};

} // namespace coembed
