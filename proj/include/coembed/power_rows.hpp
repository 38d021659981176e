#pragma once

namespace coembed::rows {

/// Compensated (Neumaier) accumulator in long double.
struct NeumaierSum {
    long double s = 0.0L;
    long double c = 0.0L;
    void add(long double x) {
        long double t = s + x;
        if ((s >= 0 ? s : -s) >= (x >= 0 ? x : -x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    long double value() const { return s + c; }
};

// Sum over j in [jlo, jhi] of (Q + w j)^{-s}, Q > 0, w > 0.
// jhi < 0 means an infinite tail (requires s > 1). An exact head runs
// until Q + w j >= 8 max(s,1) w; the remainder uses Euler-Maclaurin
// through the B4 term, which keeps the relative error below ~1e-9 on
// that range.
long double row_sum_pow(long double Q, long double w, long long jlo, long long jhi,
                        long double s);

// Sum over j in [jlo, jhi] of ln(Q + w j), finite range only.
long double row_sum_log(long double Q, long double w, long long jlo, long long jhi);

// Sum over |m1| <= M, |m2| <= M of (K + u |m1| + v |m2|)^{-s}.
long double slab_standard(long double K, long double u, long double v, long long M,
                          long double s);

// Full-plane limit of slab_standard; requires s > 2.
long double slab_standard_inf(long double K, long double u, long double v, long double s);

// Sum over |m1| <= M, |m2| <= M of (B0 + cu |m1| + w2 |m1^2 - m2|)^{-s}.
long double slab_toeplitz(long double B0, long double cu, long double w2, long long M,
                          long double s);

// Full-plane limit of slab_toeplitz; requires s > 2.
long double slab_toeplitz_inf(long double B0, long double cu, long double w2, long double s);

// Direct enumeration references for validating the accelerated sums.
long double slab_standard_enum(long double K, long double u, long double v, long long M,
                               long double s);
long double slab_toeplitz_enum(long double B0, long double cu, long double w2, long long M,
                               long double s);

} // namespace coembed::rows
