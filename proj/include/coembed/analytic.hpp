#pragma once

#include <string>
#include <vector>

#include "coembed/extreal.hpp"
#include "coembed/groups.hpp"

namespace coembed {

enum class Rel { LT, LE, GT };

inline const char* rel_symbol(Rel r) {
    switch (r) {
        case Rel::LT: return "<";
        case Rel::LE: return "<=";
        case Rel::GT: return ">";
    }
    return "?";
}

/// One evaluated inequality of a membership characterization.
struct Condition {
    std::string name;
    Rational lhs;
    Rel rel;
    Rational rhs;
    bool satisfied;

    static Condition make(std::string name, const Rational& lhs, Rel rel, const Rational& rhs) {
        bool sat = rel == Rel::LT   ? lhs < rhs
                   : rel == Rel::LE ? lhs <= rhs
                                    : lhs > rhs;
        return Condition{std::move(name), lhs, rel, rhs, sat};
    }
};

struct MembershipAnswer {
    bool member;
    std::vector<Condition> conditions;
};

// Sorted-lambda case selection: both exponents at most one, straddling
// one, or both at least one. At boundaries (a lambda equal to 1) the
// applicable chains agree; the first matching case in this order is
// canonical.
enum class StandardCase { BothAtMostOne, Straddling, BothAtLeastOne };

StandardCase pick_standard_case(const Rational& l1_sorted, const Rational& l2_sorted);

// Evaluates one case's characterization chain verbatim; exposed so the
// boundary-agreement property is testable.
MembershipAnswer eval_standard_case(StandardCase c, const Rational& l1, const Rational& l2,
                                    const Rational& a, const Rational& b, const ThetaValue& theta);

// Is psi^{(a,b)} in l^theta(Z^3) for the standard group family?
// Normalizes lambda1 <= lambda2, picks the canonical case, and (at case
// boundaries) checks that every applicable chain agrees.
MembershipAnswer psi_in_ltheta_standard(const Rational& lambda1, const Rational& lambda2,
                                        const Rational& a, const Rational& b,
                                        const ThetaValue& theta);

// Toeplitz family counterpart, split on the sign of delta.
MembershipAnswer psi_in_ltheta_toeplitz(const Rational& delta, const Rational& a,
                                        const Rational& b, const ThetaValue& theta);

// Dispatch on the group variant.
MembershipAnswer psi_in_ltheta(const GroupSpec& group, const Rational& a, const Rational& b,
                               const ThetaValue& theta);

/// The closed member interval for a in a fixed (group, b, theta) slice;
/// empty when lo > hi or (finite theta) b*theta <= 2. Bounds are strict
/// for finite theta.
struct MembershipBounds {
    Rational lo;
    Rational hi;
    bool strict;
    bool needs_btheta;  // finite theta: also requires b*theta > 2
};

MembershipBounds membership_bounds(const GroupSpec& group, const Rational& b,
                                   const ThetaValue& theta);

} // namespace coembed
