#include "coembed/sequences.hpp"

#include <cmath>
#include <stdexcept>

namespace coembed {

PowerProduct psi(const GroupSpec& group, const Rational& a, const Rational& b, long long n,
                 long long m1, long long m2) {
    if (b.is_negative()) throw std::invalid_argument("psi: b must be >= 0");
    DyadicSum scale(DyadicValue::pow2(Rational(n) * a));
    DyadicSum base = norm_sum(matrix_A(group, FamilyIndex(n, m1, m2, +1)));
    return PowerProduct(scale, base, -b);
}

Rational a_shift(const GroupSpec& group, const ExtReal& p, const ExtReal& q, const ExtReal& r,
                 const Rational& alpha) {
    return alpha + group.det_exponent_coeff() * gamma_exponent(p, q, r);
}

PowerSum zeta(const GroupSpec& group, const ExtReal& p, const ExtReal& q, const ExtReal& r,
              const WeightSpec& ws, long long k, const FamilyIndex& idx) {
    if (k < 0) throw std::invalid_argument("zeta: k must be >= 0");
    const Rational a = a_shift(group, p, q, r, ws.alpha);
    DyadicSum scale(DyadicValue::pow2(Rational(idx.n) * a));
    DyadicSum base = norm_sum(matrix_A(group, FamilyIndex(idx.n, idx.m1, idx.m2, +1)));
    PowerSum out(PowerProduct(scale, base, -ws.beta));
    out += PowerProduct(scale, base, Rational(k) - ws.beta);
    return out;
}

std::vector<OctantId> all_octants() {
    std::vector<OctantId> v;
    for (bool plus : {true, false})
        for (int i = 1; i <= 4; ++i) v.push_back(OctantId{i, plus});
    return v;
}

namespace {

struct OctantTerms {
    DyadicValue shear1;  // 2^{n l1} |m1|
    DyadicValue shear2;  // 2^{n l2} |m2|
    DyadicValue diag1;   // 2^{n l1}
    DyadicValue diag2;   // 2^{n l2}
    DyadicValue diag0;   // 2^{n}
};

OctantTerms octant_terms(const Rational& l1, const Rational& l2, long long n, long long m1,
                         long long m2) {
    const Rational rn(n);
    OctantTerms t;
    t.shear1 = DyadicValue(Rational(m1 < 0 ? -m1 : m1), rn * l1);
    t.shear2 = DyadicValue(Rational(m2 < 0 ? -m2 : m2), rn * l2);
    t.diag1 = DyadicValue::pow2(rn * l1);
    t.diag2 = DyadicValue::pow2(rn * l2);
    t.diag0 = DyadicValue::pow2(rn);
    return t;
}

bool le(const DyadicValue& a, const DyadicValue& b) { return (a <=> b) != std::strong_ordering::greater; }

bool in_octant(const OctantId& o, const OctantTerms& t, long long n) {
    if (o.plus != (n >= 0)) return false;
    const DyadicValue& low = o.plus ? t.diag2 : t.diag0;
    switch (o.index) {
        case 1: return le(t.shear1, t.shear2) && le(low, t.shear2);
        case 2: return le(t.shear1, t.shear2) && le(t.shear2, low);
        case 3: return le(t.shear2, t.shear1) && le(low, t.shear1);
        case 4: return le(t.shear2, t.shear1) && le(t.shear1, low);
    }
    throw std::invalid_argument("octant index out of range");
}

} // namespace

std::vector<OctantId> octant_members(const Rational& lambda1, const Rational& lambda2,
                                     long long n, long long m1, long long m2) {
    if (lambda2 < lambda1)
        throw std::invalid_argument("octant_members: requires lambda1 <= lambda2");
    OctantTerms t = octant_terms(lambda1, lambda2, n, m1, m2);
    std::vector<OctantId> out;
    for (const auto& o : all_octants())
        if (in_octant(o, t, n)) out.push_back(o);
    return out;
}

DyadicValue dominant_norm_term(const OctantId& octant, const Rational& lambda1,
                               const Rational& lambda2, long long n, long long m1, long long m2) {
    if (lambda1 < Rational(1) || lambda2 < lambda1)
        throw std::invalid_argument(
            "dominant_norm_term: table certified only for 1 <= lambda1 <= lambda2");
    OctantTerms t = octant_terms(lambda1, lambda2, n, m1, m2);
    if (!in_octant(octant, t, n))
        throw std::invalid_argument("dominant_norm_term: index not in " + octant.to_string());
    if (octant.plus) {
        switch (octant.index) {
            case 1: return t.shear2;
            case 2: return t.diag2;
            case 3: return t.shear1;
            case 4: return t.diag2;
        }
    } else {
        switch (octant.index) {
            case 1: return t.shear2;
            case 2: return t.diag0;
            case 3: return t.shear1;
            case 4: return t.diag0;
        }
    }
    throw std::invalid_argument("octant index out of range");
}

long double tail_sum_estimate(long long m0, const Rational& rho) {
    if (m0 < 1) throw std::invalid_argument("tail_sum_estimate: m0 must be >= 1");
    if (!(rho < Rational(-1)))
        throw std::invalid_argument("tail_sum_estimate: rho must be < -1 (tail diverges)");
    return std::pow(static_cast<long double>(m0),
                    (Rational(1) + rho).to_long_double());
}

} // namespace coembed
