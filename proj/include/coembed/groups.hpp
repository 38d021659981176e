#pragma once

#include <array>
#include <string>
#include <utility>
#include <variant>

#include "coembed/dyadic.hpp"
#include "coembed/extreal.hpp"
#include "coembed/powers.hpp"

namespace coembed {

struct StandardGroup {
    Rational lambda1;
    Rational lambda2;
};

struct ToeplitzGroup {
    Rational delta;
};

/**
 * One of the two shearlet dilation group families in dimension three:
 * standard (diagonal scaling exponents lambda1, lambda2) or Toeplitz
 * (single exponent delta with unipotent Toeplitz shearing).
 */
class GroupSpec {
public:
    GroupSpec(StandardGroup g) : v_(g) {}
    GroupSpec(ToeplitzGroup g) : v_(g) {}
    static GroupSpec standard(Rational l1, Rational l2) { return GroupSpec(StandardGroup{l1, l2}); }
    static GroupSpec toeplitz(Rational d) { return GroupSpec(ToeplitzGroup{d}); }

    bool is_standard() const { return std::holds_alternative<StandardGroup>(v_); }
    bool is_toeplitz() const { return std::holds_alternative<ToeplitzGroup>(v_); }
    const StandardGroup& as_standard() const { return std::get<StandardGroup>(v_); }
    const ToeplitzGroup& as_toeplitz() const { return std::get<ToeplitzGroup>(v_); }

    // Unordered pair of off-first-row diagonal exponents, sorted
    // ascending: {lambda1, lambda2} or {1-delta, 1-2*delta}. Groups with
    // equal pairs share all embedding verdicts in the p = r setting.
    std::pair<Rational, Rational> diagonal_pair() const {
        Rational a, b;
        if (is_standard()) {
            a = as_standard().lambda1;
            b = as_standard().lambda2;
        } else {
            const Rational d = as_toeplitz().delta;
            a = Rational(1) - d;
            b = Rational(1) - Rational(2) * d;
        }
        if (b < a) std::swap(a, b);
        return {a, b};
    }

    // Coefficient c with |det A_n| = 2^{n c}: 1+lambda1+lambda2 resp. 3(1-delta).
    Rational det_exponent_coeff() const {
        if (is_standard())
            return Rational(1) + as_standard().lambda1 + as_standard().lambda2;
        return Rational(3) * (Rational(1) - as_toeplitz().delta);
    }

    std::string to_string() const;

private:
    std::variant<StandardGroup, ToeplitzGroup> v_;
};

struct FamilyIndex {
    long long n;
    long long m1;
    long long m2;
    int eps = +1;

    FamilyIndex(long long n_, long long m1_, long long m2_, int eps_ = +1)
        : n(n_), m1(m1_), m2(m2_), eps(eps_) {
        if (eps != 1 && eps != -1)
            throw std::invalid_argument("FamilyIndex: eps must be +1 or -1");
    }
};

/// 3x3 matrix of exact dyadic entries.
class IndexedMatrix {
public:
    IndexedMatrix() = default;
    const DyadicValue& at(int i, int j) const { return e_[i][j]; }
    DyadicValue& at(int i, int j) { return e_[i][j]; }
    std::string to_string() const;

private:
    std::array<std::array<DyadicValue, 3>, 3> e_{};
};

struct WeightSpec {
    Rational alpha;
    Rational beta;
    WeightSpec(Rational a, Rational b) : alpha(a), beta(b) {
        if (b.is_negative())
            throw std::invalid_argument("WeightSpec: beta must be >= 0");
    }
};

// The discretized well-spread family member B_{n,m1,m2,eps}
// (upper triangular).
IndexedMatrix matrix_B(const GroupSpec& group, const FamilyIndex& idx);

// A_{n,m1,m2,eps} := (B_{-n,m1,m2,eps})^{-T}, computed by symbolic
// triangular inversion. The n -> -n reindexing is a bijection of the
// index set and gives the norm and determinant identities with
// positive powers of n.
IndexedMatrix matrix_A(const GroupSpec& group, const FamilyIndex& idx);

// Entrywise absolute sum of all nine entries.
DyadicSum norm_sum(const IndexedMatrix& m);

// |det|, exactly a single power of two for both families.
DyadicValue det_abs(const IndexedMatrix& m);

// u^{(alpha,beta)} = 2^{-n c (1/2 - 1/r)} 2^{-n alpha} * ||A||^beta
// with c the group's determinant exponent coefficient.
PowerSum weight_u(const GroupSpec& group, const FamilyIndex& idx, const WeightSpec& ws,
                  const ExtReal& r);

// w^{{q}} = |det A|^{1/p - 1/q} (1 + ||A||^k).
PowerSum weight_w(const GroupSpec& group, const FamilyIndex& idx, const ExtReal& p,
                  const ExtReal& q, long long k);

// A * transpose(B at -n); used to certify the inverse-transpose relation.
std::array<std::array<DyadicSum, 3>, 3> product_with_transpose(const IndexedMatrix& a,
                                                               const IndexedMatrix& b);

bool is_identity(const std::array<std::array<DyadicSum, 3>, 3>& m);

} // namespace coembed
