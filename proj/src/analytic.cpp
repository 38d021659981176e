#include "coembed/analytic.hpp"

#include <stdexcept>

namespace coembed {

StandardCase pick_standard_case(const Rational& l1, const Rational& l2) {
    const Rational one(1);
    if (l2 <= one) return StandardCase::BothAtMostOne;
    if (l1 <= one) return StandardCase::Straddling;
    return StandardCase::BothAtLeastOne;
}

namespace {

struct Chain {
    Rational lo;
    Rational hi;
};

Chain standard_chain(StandardCase c, const Rational& l1, const Rational& l2, const Rational& b,
                     const Rational& inv_theta) {
    switch (c) {
        case StandardCase::BothAtLeastOne:
            return {(l1 + l2 - Rational(2)) * inv_theta + b, (l1 - l2) * inv_theta + b * l2};
        case StandardCase::BothAtMostOne:
            return {(l2 - l1) * inv_theta + b * l1, (l1 + l2 - Rational(2)) * inv_theta + b};
        case StandardCase::Straddling:
            return {(l2 - l1) * inv_theta + b * l1, (l1 - l2) * inv_theta + b * l2};
    }
    throw std::logic_error("unreachable");
}

MembershipAnswer finish(std::vector<Condition> conds) {
    bool member = true;
    for (const auto& c : conds) member = member && c.satisfied;
    return MembershipAnswer{member, std::move(conds)};
}

} // namespace

MembershipAnswer eval_standard_case(StandardCase c, const Rational& l1, const Rational& l2,
                                    const Rational& a, const Rational& b,
                                    const ThetaValue& theta) {
    if (b.is_negative()) throw std::invalid_argument("eval_standard_case: b must be >= 0");
    std::vector<Condition> conds;
    if (theta.is_infinite()) {
        Chain ch = standard_chain(c, l1, l2, b, Rational(0));
        conds.push_back(Condition::make("lower<=a", ch.lo, Rel::LE, a));
        conds.push_back(Condition::make("a<=upper", a, Rel::LE, ch.hi));
    } else {
        const Rational th = theta.rational();
        Chain ch = standard_chain(c, l1, l2, b, th.reciprocal());
        conds.push_back(Condition::make("b*theta>2", b * th, Rel::GT, Rational(2)));
        conds.push_back(Condition::make("lower<a", ch.lo, Rel::LT, a));
        conds.push_back(Condition::make("a<upper", a, Rel::LT, ch.hi));
    }
    return finish(std::move(conds));
}

MembershipAnswer psi_in_ltheta_standard(const Rational& lambda1, const Rational& lambda2,
                                        const Rational& a, const Rational& b,
                                        const ThetaValue& theta) {
    if (b.is_negative())
        throw std::invalid_argument("psi_in_ltheta_standard: b must be >= 0");
    Rational l1 = lambda1, l2 = lambda2;
    if (l2 < l1) std::swap(l1, l2);

    const StandardCase canonical = pick_standard_case(l1, l2);
    MembershipAnswer ans = eval_standard_case(canonical, l1, l2, a, b, theta);

    // At case boundaries every applicable chain must give the same flag.
    const Rational one(1);
    for (StandardCase c :
         {StandardCase::BothAtMostOne, StandardCase::Straddling, StandardCase::BothAtLeastOne}) {
        if (c == canonical) continue;
        bool applicable = (c == StandardCase::BothAtMostOne && l1 <= one && l2 <= one) ||
                          (c == StandardCase::Straddling && l1 <= one && one <= l2) ||
                          (c == StandardCase::BothAtLeastOne && one <= l1 && one <= l2);
        if (!applicable) continue;
        MembershipAnswer other = eval_standard_case(c, l1, l2, a, b, theta);
        if (other.member != ans.member)
            throw std::logic_error("psi_in_ltheta_standard: boundary case chains disagree");
    }
    return ans;
}

MembershipAnswer psi_in_ltheta_toeplitz(const Rational& delta, const Rational& a,
                                        const Rational& b, const ThetaValue& theta) {
    if (b.is_negative())
        throw std::invalid_argument("psi_in_ltheta_toeplitz: b must be >= 0");
    const Rational one_minus_2d = Rational(1) - Rational(2) * delta;
    const bool nonneg = !delta.is_negative();
    std::vector<Condition> conds;
    if (theta.is_infinite()) {
        Rational lo = nonneg ? b * one_minus_2d : b;
        Rational hi = nonneg ? b : b * one_minus_2d;
        conds.push_back(Condition::make("lower<=a", lo, Rel::LE, a));
        conds.push_back(Condition::make("a<=upper", a, Rel::LE, hi));
    } else {
        const Rational th = theta.rational();
        const Rational shift = Rational(-3) * delta * th.reciprocal();
        Rational lo = nonneg ? b * one_minus_2d : shift + b;
        Rational hi = nonneg ? shift + b : b * one_minus_2d;
        conds.push_back(Condition::make("b*theta>2", b * th, Rel::GT, Rational(2)));
        conds.push_back(Condition::make("lower<a", lo, Rel::LT, a));
        conds.push_back(Condition::make("a<upper", a, Rel::LT, hi));
    }
    return finish(std::move(conds));
}

MembershipAnswer psi_in_ltheta(const GroupSpec& group, const Rational& a, const Rational& b,
                               const ThetaValue& theta) {
    if (group.is_standard()) {
        const auto& g = group.as_standard();
        return psi_in_ltheta_standard(g.lambda1, g.lambda2, a, b, theta);
    }
    return psi_in_ltheta_toeplitz(group.as_toeplitz().delta, a, b, theta);
}

MembershipBounds membership_bounds(const GroupSpec& group, const Rational& b,
                                   const ThetaValue& theta) {
    const bool finite = theta.is_finite();
    const Rational inv_theta = finite ? theta.rational().reciprocal() : Rational(0);
    if (group.is_standard()) {
        Rational l1 = group.as_standard().lambda1, l2 = group.as_standard().lambda2;
        if (l2 < l1) std::swap(l1, l2);
        Chain ch = standard_chain(pick_standard_case(l1, l2), l1, l2, b, inv_theta);
        return MembershipBounds{ch.lo, ch.hi, finite, finite};
    }
    const Rational d = group.as_toeplitz().delta;
    const Rational one_minus_2d = Rational(1) - Rational(2) * d;
    const Rational shift = Rational(-3) * d * inv_theta;
    const bool nonneg = !d.is_negative();
    Rational lo = nonneg ? b * one_minus_2d : shift + b;
    Rational hi = nonneg ? shift + b : b * one_minus_2d;
    return MembershipBounds{lo, hi, finite, finite};
}

} // namespace coembed
