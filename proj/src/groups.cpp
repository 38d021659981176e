#include "coembed/groups.hpp"

#include <sstream>
#include <stdexcept>

namespace coembed {

std::string GroupSpec::to_string() const {
    if (is_standard()) {
        const auto& g = as_standard();
        return "standard(" + g.lambda1.to_string() + ", " + g.lambda2.to_string() + ")";
    }
    return "toeplitz(" + as_toeplitz().delta.to_string() + ")";
}

std::string IndexedMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < 3; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (int j = 0; j < 3; ++j) {
            os << e_[i][j].to_string();
            if (j < 2) os << ", ";
        }
        os << "]" << (i == 2 ? "]" : "\n");
    }
    return os.str();
}

namespace {

DyadicValue dv(long long coeff, const Rational& exp2) {
    return DyadicValue(Rational(coeff), exp2);
}

// Exact difference of two dyadic terms whose exponents differ by an
// integer (always the case for the corner minors of the B family).
DyadicValue dyadic_sub(const DyadicValue& p, const DyadicValue& q) {
    if (q.is_zero()) return p;
    if (p.is_zero()) return -q;
    Rational d = p.exp2() - q.exp2();
    if (!d.is_integer() || d.num() > 62 || d.num() < -62)
        throw std::logic_error("dyadic_sub: terms do not align");
    Rational two_pow = d.num() >= 0 ? Rational(1LL << d.num()) : Rational(1, 1LL << -d.num());
    return DyadicValue(p.coeff() * two_pow - q.coeff(), q.exp2());
}

// Inverse of an invertible upper triangular 3x3 matrix, then transposed.
// All divisions stay inside the dyadic field.
IndexedMatrix inverse_transpose_upper(const IndexedMatrix& b) {
    const DyadicValue &a00 = b.at(0, 0), &a01 = b.at(0, 1), &a02 = b.at(0, 2);
    const DyadicValue &a11 = b.at(1, 1), &a12 = b.at(1, 2), &a22 = b.at(2, 2);

    IndexedMatrix inv; // upper triangular inverse
    inv.at(0, 0) = a00.reciprocal();
    inv.at(1, 1) = a11.reciprocal();
    inv.at(2, 2) = a22.reciprocal();
    inv.at(0, 1) = -(a01 * (a00 * a11).reciprocal());
    inv.at(1, 2) = -(a12 * (a11 * a22).reciprocal());
    DyadicValue num = dyadic_sub(a01 * a12, a02 * a11);
    inv.at(0, 2) = num * (a00 * a11 * a22).reciprocal();

    IndexedMatrix out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.at(i, j) = inv.at(j, i);
    return out;
}

} // namespace

IndexedMatrix matrix_B(const GroupSpec& group, const FamilyIndex& idx) {
    IndexedMatrix m;
    const long long n = idx.n;
    const Rational rn(n);
    if (group.is_standard()) {
        const auto& g = group.as_standard();
        m.at(0, 0) = dv(1, rn);
        m.at(0, 1) = dv(idx.m1, rn);
        m.at(0, 2) = dv(idx.m2, rn);
        m.at(1, 1) = dv(1, rn * g.lambda1);
        m.at(2, 2) = dv(1, rn * g.lambda2);
    } else {
        const Rational d = group.as_toeplitz().delta;
        const Rational e1 = rn * (Rational(1) - d);
        const Rational e2 = rn * (Rational(1) - Rational(2) * d);
        m.at(0, 0) = dv(1, rn);
        m.at(0, 1) = dv(idx.m1, rn);
        m.at(0, 2) = dv(idx.m2, rn);
        m.at(1, 1) = dv(1, e1);
        m.at(1, 2) = dv(idx.m1, e1);
        m.at(2, 2) = dv(1, e2);
    }
    if (idx.eps == -1)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = -m.at(i, j);
    return m;
}

IndexedMatrix matrix_A(const GroupSpec& group, const FamilyIndex& idx) {
    FamilyIndex flipped(-idx.n, idx.m1, idx.m2, idx.eps);
    return inverse_transpose_upper(matrix_B(group, flipped));
}

DyadicSum norm_sum(const IndexedMatrix& m) {
    DyadicSum s;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += m.at(i, j).abs();
    return s;
}

DyadicValue det_abs(const IndexedMatrix& m) {
    DyadicSum det;
    det += m.at(0, 0) * m.at(1, 1) * m.at(2, 2);
    det += m.at(0, 1) * m.at(1, 2) * m.at(2, 0);
    det += m.at(0, 2) * m.at(1, 0) * m.at(2, 1);
    det += -(m.at(0, 2) * m.at(1, 1) * m.at(2, 0));
    det += -(m.at(0, 1) * m.at(1, 0) * m.at(2, 2));
    det += -(m.at(0, 0) * m.at(1, 2) * m.at(2, 1));
    auto t = det.single_term();
    if (!t) throw std::logic_error("det_abs: determinant is not a dyadic power");
    return t->abs();
}

PowerSum weight_u(const GroupSpec& group, const FamilyIndex& idx, const WeightSpec& ws,
                  const ExtReal& r) {
    const Rational c = group.det_exponent_coeff();
    const Rational n(idx.n);
    const Rational det_pow = -(n * c) * (Rational(1, 2) - r.inv()) - n * ws.alpha;
    DyadicSum scale(DyadicValue::pow2(det_pow));
    DyadicSum base = norm_sum(matrix_A(group, idx));
    return PowerSum(PowerProduct(scale, base, ws.beta));
}

PowerSum weight_w(const GroupSpec& group, const FamilyIndex& idx, const ExtReal& p,
                  const ExtReal& q, long long k) {
    if (k < 0) throw std::invalid_argument("weight_w: k must be >= 0");
    const Rational c = group.det_exponent_coeff();
    const Rational det_pow = Rational(idx.n) * c * (p.inv() - q.inv());
    DyadicSum scale(DyadicValue::pow2(det_pow));
    DyadicSum base = norm_sum(matrix_A(group, idx));
    PowerSum out(PowerProduct(scale, DyadicSum::from_integer(1), Rational(0)));
    out += PowerProduct(scale, base, Rational(k));
    return out;
}

std::array<std::array<DyadicSum, 3>, 3> product_with_transpose(const IndexedMatrix& a,
                                                               const IndexedMatrix& b) {
    std::array<std::array<DyadicSum, 3>, 3> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            DyadicSum acc;
            for (int k = 0; k < 3; ++k) {
                DyadicValue prod = a.at(i, k) * b.at(j, k);
                if (!prod.is_zero()) acc += prod;
            }
            out[i][j] = acc;
        }
    return out;
}

bool is_identity(const std::array<std::array<DyadicSum, 3>, 3>& m) {
    const DyadicSum one = DyadicSum::from_integer(1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) {
                if (!(m[i][j] == one)) return false;
            } else if (!m[i][j].is_zero()) {
                return false;
            }
        }
    return true;
}

} // namespace coembed
