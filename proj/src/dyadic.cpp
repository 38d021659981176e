#include "coembed/dyadic.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <mpfr.h>

namespace coembed {

using boost::multiprecision::cpp_int;

namespace {

// 2-adic valuation of a nonzero integer.
int val2(long long v) {
    int k = 0;
    while ((v & 1) == 0) { v >>= 1; ++k; }
    return k;
}

cpp_int ipow(cpp_int base, long long e) {
    cpp_int acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace

void DyadicValue::normalize() {
    if (coeff_.is_zero()) {
        exp_ = Rational(0);
        return;
    }
    long long n = coeff_.num() < 0 ? -coeff_.num() : coeff_.num();
    long long d = coeff_.den();
    int shift = val2(n) - val2(d);
    if (shift != 0) {
        exp_ += Rational(shift);
        if (shift > 0)
            coeff_ = Rational(coeff_.num() >> shift, d);
        else
            coeff_ = Rational(coeff_.num(), d >> (-shift));
    }
}

std::strong_ordering DyadicValue::operator<=>(const DyadicValue& o) const {
    int ls = coeff_.is_zero() ? 0 : (coeff_.is_negative() ? -1 : 1);
    int rs = o.coeff_.is_zero() ? 0 : (o.coeff_.is_negative() ? -1 : 1);
    if (ls != rs) return ls <=> rs;
    if (ls == 0) return std::strong_ordering::equal;

    // Same sign: compare |a| = c1 2^{e1} against |b| = c2 2^{e2} by
    // raising to the exponent-difference denominator, which turns the
    // question into an integer comparison.
    Rational d = o.exp_ - exp_; // |a| <= |b|  <=>  c1/c2 <= 2^d
    long long y = d.den();
    long long x = d.num();
    const Rational c1 = coeff_.abs(), c2 = o.coeff_.abs();
    cpp_int lhs = ipow(cpp_int(c1.num()), y) * ipow(cpp_int(c2.den()), y);
    cpp_int rhs = ipow(cpp_int(c2.num()), y) * ipow(cpp_int(c1.den()), y);
    if (x >= 0)
        rhs <<= static_cast<unsigned>(x);
    else
        lhs <<= static_cast<unsigned>(-x);
    std::strong_ordering mag = lhs < rhs ? std::strong_ordering::less
                             : lhs > rhs ? std::strong_ordering::greater
                                         : std::strong_ordering::equal;
    if (ls > 0) return mag;
    return mag == std::strong_ordering::less    ? std::strong_ordering::greater
         : mag == std::strong_ordering::greater ? std::strong_ordering::less
                                                : std::strong_ordering::equal;
}

std::optional<Rational> DyadicValue::to_rational() const {
    if (is_zero()) return Rational(0);
    if (!exp_.is_integer()) return std::nullopt;
    long long e = exp_.num();
    if (e > 62 || e < -62) return std::nullopt;
    Rational p = e >= 0 ? Rational(1LL << e) : Rational(1, 1LL << (-e));
    return coeff_ * p;
}

long double DyadicValue::to_long_double() const {
    if (is_zero()) return 0.0L;
    return coeff_.to_long_double() * std::exp2(exp_.to_long_double());
}

std::string DyadicValue::to_string() const {
    if (auto r = to_rational()) return r->to_string();
    return coeff_.to_string() + "*2^(" + exp_.to_string() + ")";
}

namespace {

Rational exp_residue(const Rational& e) {
    return e - Rational(e.floor());
}

// 2^d as a Rational for |d| <= 62.
Rational pow2_rational(long long d) {
    if (d > 62 || d < -62)
        throw std::overflow_error("DyadicSum: merged terms span too many binary orders");
    return d >= 0 ? Rational(1LL << d) : Rational(1, 1LL << -d);
}

} // namespace

DyadicSum& DyadicSum::operator+=(const DyadicValue& v) {
    if (v.is_zero()) return *this;
    const Rational res = exp_residue(v.exp2());
    auto it = terms_.find(res);
    if (it == terms_.end()) {
        terms_.emplace(res, v);
        return *this;
    }
    // Same residue class: exponents differ by an integer, merge exactly.
    const DyadicValue& cur = it->second;
    Rational d = v.exp2() - cur.exp2();
    Rational c = cur.coeff() + v.coeff() * pow2_rational(d.num());
    DyadicValue merged(c, cur.exp2());
    if (merged.is_zero())
        terms_.erase(it);
    else
        it->second = merged;
    return *this;
}

DyadicSum& DyadicSum::operator+=(const DyadicSum& o) {
    for (const auto& [res, v] : o.terms_) *this += v;
    return *this;
}

DyadicSum DyadicSum::operator-() const {
    DyadicSum r;
    for (const auto& [res, v] : terms_) r.terms_.emplace(res, -v);
    return r;
}

DyadicSum DyadicSum::operator*(const DyadicValue& v) const {
    DyadicSum r;
    for (const auto& [res, t] : terms_) r += t * v;
    return r;
}

DyadicSum DyadicSum::operator*(const DyadicSum& o) const {
    DyadicSum r;
    for (const auto& [res, t] : terms_) r += o * t;
    return r;
}

DyadicSum DyadicSum::pow_uint(unsigned k) const {
    DyadicSum acc = from_integer(1);
    DyadicSum b = *this;
    while (k > 0) {
        if (k & 1) acc = acc * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return acc;
}

std::optional<DyadicValue> DyadicSum::single_term() const {
    if (terms_.size() != 1) return std::nullopt;
    return terms_.begin()->second;
}

std::optional<Rational> DyadicSum::to_rational() const {
    Rational acc(0);
    for (const auto& [res, v] : terms_) {
        auto r = v.to_rational();
        if (!r) return std::nullopt;
        acc += *r;
    }
    return acc;
}

long double DyadicSum::to_long_double() const {
    long double acc = 0.0L;
    for (const auto& [res, v] : terms_) acc += v.to_long_double();
    return acc;
}

std::string DyadicSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [res, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << v.to_string();
    }
    return os.str();
}

namespace {

// Sign of a nonzero sum of dyadic terms c * 2^e: directed-rounding
// evaluation, doubling the precision until the enclosure excludes zero.
// Uniqueness of the canonical form guarantees the value is nonzero, so
// the loop terminates.
int certified_sign(const std::map<Rational, DyadicValue>& terms) {
    for (mpfr_prec_t prec = 128;; prec *= 2) {
        if (prec > (mpfr_prec_t)1 << 22)
            throw std::runtime_error("DyadicSum::compare: precision escalation failed");
        mpfr_t lo, hi, term, expo;
        mpfr_inits2(prec, lo, hi, term, expo, (mpfr_ptr) nullptr);

        auto eval = [&](mpfr_rnd_t rnd, mpfr_t out) {
            mpfr_set_zero(out, 1);
            for (const auto& [res, v] : terms) {
                const Rational& c = v.coeff();
                // bound of the positive factor 2^e flips with the sign of c
                mpfr_rnd_t edir = c.is_positive() == (rnd == MPFR_RNDU) ? MPFR_RNDU : MPFR_RNDD;
                mpfr_set_si(expo, v.exp2().num(), MPFR_RNDN);
                mpfr_div_si(expo, expo, v.exp2().den(), edir);
                mpfr_exp2(expo, expo, edir);
                mpfr_set_si(term, c.num(), MPFR_RNDN);
                mpfr_div_si(term, term, c.den(), rnd);
                mpfr_mul(term, term, expo, rnd);
                mpfr_add(out, out, term, rnd);
            }
        };

        eval(MPFR_RNDD, lo);
        eval(MPFR_RNDU, hi);
        int result = 0;
        bool decided = false;
        if (mpfr_sgn(lo) > 0) { result = 1; decided = true; }
        else if (mpfr_sgn(hi) < 0) { result = -1; decided = true; }
        mpfr_clears(lo, hi, term, expo, (mpfr_ptr) nullptr);
        if (decided) return result;
    }
}

} // namespace

std::strong_ordering DyadicSum::compare(const DyadicSum& o) const {
    DyadicSum diff = *this - o;
    if (diff.terms_.empty()) return std::strong_ordering::equal;
    if (diff.terms_.size() == 1) {
        return diff.terms_.begin()->second.is_negative() ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
    }
    // All same-sign terms settle without evaluation.
    bool any_pos = false, any_neg = false;
    for (const auto& [res, v] : diff.terms_) (v.is_negative() ? any_neg : any_pos) = true;
    if (!any_neg) return std::strong_ordering::greater;
    if (!any_pos) return std::strong_ordering::less;

    // Quick long double bracket before escalating.
    long double approx = diff.to_long_double();
    long double mag = 0.0L;
    for (const auto& [res, v] : diff.terms_) {
        long double t = v.to_long_double();
        mag += t < 0 ? -t : t;
    }
    if (approx > mag * 1e-15L) return std::strong_ordering::greater;
    if (approx < -mag * 1e-15L) return std::strong_ordering::less;

    int s = certified_sign(diff.terms_);
    return s > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

} // namespace coembed
