#include "coembed/powers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <mpfr.h>

namespace coembed {

namespace {

DyadicSum unit_sum() { return DyadicSum::from_integer(1); }

bool strictly_positive(const DyadicSum& s) {
    for (const auto& [res, v] : s.terms())
        if (v.is_negative() || v.is_zero()) return false;
    return !s.is_zero();
}

} // namespace

PowerProduct::PowerProduct(DyadicSum scale, DyadicSum base, Rational power)
    : scale_(std::move(scale)), base_(std::move(base)), power_(power) {
    if (!strictly_positive(base_))
        throw std::domain_error("PowerProduct: base must be a positive sum");
    if (power_.is_zero()) {
        base_ = unit_sum();
        return;
    }
    if (auto t = base_.single_term()) {
        if (power_.is_integer()) {
            scale_ = scale_ * t->pow_int(power_.num());
            base_ = unit_sum();
            power_ = Rational(0);
        } else if (t->coeff() == Rational(1)) {
            scale_ = scale_ * DyadicValue::pow2(t->exp2() * power_);
            base_ = unit_sum();
            power_ = Rational(0);
        }
    }
    // Small positive integral powers of small bases expand exactly.
    if (!power_.is_zero() && power_.is_integer() && power_.num() > 0 &&
        power_.num() <= 6 && base_.term_count() <= 4) {
        scale_ = scale_ * base_.pow_uint(static_cast<unsigned>(power_.num()));
        base_ = unit_sum();
        power_ = Rational(0);
    }
}

long double PowerProduct::to_long_double() const {
    long double s = scale_.to_long_double();
    if (power_.is_zero()) return s;
    return s * std::pow(base_.to_long_double(), power_.to_long_double());
}

std::string PowerProduct::to_string() const {
    std::ostringstream os;
    os << "(" << scale_.to_string() << ")";
    if (!power_.is_zero())
        os << "*(" << base_.to_string() << ")^(" << power_.to_string() << ")";
    return os.str();
}

PowerSum& PowerSum::operator+=(const PowerProduct& t) {
    if (t.scale_.is_zero()) return *this;
    for (auto& existing : terms_) {
        if (existing.base_ == t.base_ && existing.power_ == t.power_) {
            existing.scale_ += t.scale_;
            return *this;
        }
    }
    terms_.push_back(t);
    std::sort(terms_.begin(), terms_.end(), [](const PowerProduct& a, const PowerProduct& b) {
        if (a.power_ != b.power_) return a.power_ < b.power_;
        return a.base_.terms() < b.base_.terms();
    });
    return *this;
}

PowerSum PowerSum::operator+(const PowerSum& o) const {
    PowerSum r = *this;
    for (const auto& t : o.terms_) r += t;
    return r;
}

PowerSum PowerSum::operator*(const DyadicValue& v) const {
    PowerSum r;
    for (const auto& t : terms_) r += t * v;
    return r;
}

std::optional<DyadicSum> PowerSum::to_dyadic_sum() const {
    DyadicSum acc;
    for (const auto& t : terms_) {
        if (!t.is_power_free()) return std::nullopt;
        acc += t.scale();
    }
    return acc;
}

std::strong_ordering PowerSum::compare(const Rational& q) const {
    auto d = to_dyadic_sum();
    if (!d)
        throw std::domain_error("PowerSum::compare: value is not exactly expandable");
    return d->compare(q);
}

long double PowerSum::to_long_double() const {
    long double acc = 0.0L;
    for (const auto& t : terms_) acc += t.to_long_double();
    return acc;
}

std::string PowerSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        os << terms_[i].to_string();
    }
    return os.str();
}

namespace {

// Directed-rounding evaluation of scale * base^power into [lo, hi].
void bracket_product(const PowerProduct& t, mpfr_prec_t prec, mpfr_t lo, mpfr_t hi) {
    mpfr_t slo, shi, blo, bhi, plo, phi;
    mpfr_inits2(prec, slo, shi, blo, bhi, plo, phi, (mpfr_ptr) nullptr);

    auto eval_sum = [&](const DyadicSum& s, mpfr_t down, mpfr_t up) {
        mpfr_set_zero(down, 1);
        mpfr_set_zero(up, 1);
        mpfr_t term;
        mpfr_init2(term, prec);
        for (const auto& [res, v] : s.terms()) {
            const Rational& e = v.exp2();
            const Rational& c = v.coeff();
            for (int dir = 0; dir < 2; ++dir) {
                mpfr_rnd_t rnd = dir ? MPFR_RNDU : MPFR_RNDD;
                mpfr_rnd_t edir = (c.is_positive() == (rnd == MPFR_RNDU)) ? MPFR_RNDU : MPFR_RNDD;
                mpfr_set_si(term, e.num(), MPFR_RNDN);
                mpfr_div_si(term, term, e.den(), edir);
                mpfr_exp2(term, term, edir);
                mpfr_mul_si(term, term, c.num(), rnd);
                mpfr_div_si(term, term, c.den(), rnd);
                mpfr_add(dir ? up : down, dir ? up : down, term, rnd);
            }
        }
        mpfr_clear(term);
    };

    eval_sum(t.scale(), slo, shi);
    if (t.is_power_free()) {
        mpfr_set(lo, slo, MPFR_RNDD);
        mpfr_set(hi, shi, MPFR_RNDU);
    } else {
        eval_sum(t.base(), blo, bhi);
        bool pos_power = t.power().is_positive();
        mpfr_set_si(plo, t.power().num(), MPFR_RNDN);
        mpfr_div_si(plo, plo, t.power().den(), MPFR_RNDD);
        mpfr_set_si(phi, t.power().num(), MPFR_RNDN);
        mpfr_div_si(phi, phi, t.power().den(), MPFR_RNDU);
        // base > 0; monotonicity in base depends on the power sign
        mpfr_t tmp;
        mpfr_init2(tmp, prec);
        if (pos_power) {
            mpfr_pow(tmp, blo, plo, MPFR_RNDD);
            mpfr_mul(lo, slo, tmp, MPFR_RNDD);
            mpfr_pow(tmp, bhi, phi, MPFR_RNDU);
            mpfr_mul(hi, shi, tmp, MPFR_RNDU);
        } else {
            mpfr_pow(tmp, bhi, plo, MPFR_RNDD);
            mpfr_mul(lo, slo, tmp, MPFR_RNDD);
            mpfr_pow(tmp, blo, phi, MPFR_RNDU);
            mpfr_mul(hi, shi, tmp, MPFR_RNDU);
        }
        mpfr_clear(tmp);
    }
    mpfr_clears(slo, shi, blo, bhi, plo, phi, (mpfr_ptr) nullptr);
}

} // namespace

std::strong_ordering certified_compare(const PowerProduct& a, const PowerProduct& b) {
    if (a == b) return std::strong_ordering::equal;
    for (mpfr_prec_t prec = 96;; prec *= 2) {
        if (prec > (mpfr_prec_t)1 << 20)
            throw std::runtime_error("certified_compare: values too close to separate");
        mpfr_t alo, ahi, blo, bhi;
        mpfr_inits2(prec, alo, ahi, blo, bhi, (mpfr_ptr) nullptr);
        bracket_product(a, prec, alo, ahi);
        bracket_product(b, prec, blo, bhi);
        bool less = mpfr_cmp(ahi, blo) < 0;
        bool greater = mpfr_cmp(alo, bhi) > 0;
        mpfr_clears(alo, ahi, blo, bhi, (mpfr_ptr) nullptr);
        if (less) return std::strong_ordering::less;
        if (greater) return std::strong_ordering::greater;
    }
}

} // namespace coembed
