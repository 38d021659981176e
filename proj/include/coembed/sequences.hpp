#pragma once

#include <vector>

#include "coembed/groups.hpp"

namespace coembed {

/// A summability question: is psi^{(a,b)} in l^theta(Z^3) for this group?
struct SummabilityQuery {
    Rational a;
    Rational b;
    ThetaValue theta;
    GroupSpec group;

    SummabilityQuery(Rational a_, Rational b_, ThetaValue theta_, GroupSpec group_)
        : a(a_), b(b_), theta(theta_), group(std::move(group_)) {
        if (b.is_negative())
            throw std::invalid_argument("SummabilityQuery: b must be >= 0");
    }
};

// psi^{(a,b)}_{n,m1,m2} = 2^{na} ||A_{n,m1,m2,1}||^{-b}, exact.
PowerProduct psi(const GroupSpec& group, const Rational& a, const Rational& b, long long n,
                 long long m1, long long m2);

// The shift a = alpha + c * gamma with c the group's determinant
// exponent coefficient and gamma = 1/2 - 1/r + 1/p - 1/q.
Rational a_shift(const GroupSpec& group, const ExtReal& p, const ExtReal& q, const ExtReal& r,
                 const Rational& alpha);

// zeta = 2^{na} (||A||^{-beta} + ||A||^{k-beta}), independent of eps.
PowerSum zeta(const GroupSpec& group, const ExtReal& p, const ExtReal& q, const ExtReal& r,
              const WeightSpec& ws, long long k, const FamilyIndex& idx);

/// One of the eight index octants M_i^{+-} of Z^3.
struct OctantId {
    int index;  // 1..4
    bool plus;  // n >= 0 half

    bool operator==(const OctantId& o) const { return index == o.index && plus == o.plus; }
    std::string to_string() const {
        return "M" + std::to_string(index) + (plus ? "+" : "-");
    }
};

std::vector<OctantId> all_octants();

// The octants whose defining inequalities hold at (n, m1, m2); never
// empty (the octants cover Z^3, overlapping on boundaries). Callers
// normalize lambda1 <= lambda2 via the swap symmetry.
std::vector<OctantId> octant_members(const Rational& lambda1, const Rational& lambda2,
                                     long long n, long long m1, long long m2);

// The single norm term that dominates ||A|| on the given octant, for
// 1 <= lambda1 <= lambda2 (the range where the dominance constant 5 is
// certified). Rejects indices outside the octant. Diagnostic only; the
// verdict engine never consumes this.
DyadicValue dominant_norm_term(const OctantId& octant, const Rational& lambda1,
                               const Rational& lambda2, long long n, long long m1, long long m2);

// Asymptotic size m0^{1+rho} of the tail sum over m >= m0 of m^rho,
// valid for rho < -1. Used by the numeric oracle to gauge truncation.
long double tail_sum_estimate(long long m0, const Rational& rho);

} // namespace coembed
