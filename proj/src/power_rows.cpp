#include "coembed/power_rows.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coembed::rows {

namespace {

// First j from which the Euler-Maclaurin remainder is certified small.
long long em_start(long double Q, long double w, long long jlo, long double s) {
    long double cut = 8.0L * (s > 1.0L ? s : 1.0L) - Q / w;
    if (cut <= (long double)jlo) return jlo;
    long double c = std::ceil((double)cut);
    if (c > 9.0e18L) throw std::domain_error("row_sum_pow: range too large");
    return (long long)c;
}

// Euler-Maclaurin for sum over j in [a, b] of (Q + w j)^{-s}, assuming
// Q + w a >= 8 max(s,1) w. b < 0 encodes an infinite tail (s > 1).
long double em_tail_pow(long double Q, long double w, long long a, long long b, long double s) {
    const bool inf = b < 0;
    const long double xa = Q + w * a;
    const long double xb = inf ? 0.0L : Q + w * b;

    long double integral;
    if (s == 1.0L) {
        if (inf) throw std::domain_error("row_sum_pow: divergent infinite tail (s = 1)");
        integral = (std::log(xb) - std::log(xa)) / w;
    } else {
        long double Fa = std::pow(xa, 1.0L - s) / (w * (1.0L - s));
        long double Fb = inf ? 0.0L : std::pow(xb, 1.0L - s) / (w * (1.0L - s));
        if (inf && s <= 1.0L)
            throw std::domain_error("row_sum_pow: divergent infinite tail (s <= 1)");
        integral = Fb - Fa;
    }

    const long double fa = std::pow(xa, -s);
    const long double fb = inf ? 0.0L : std::pow(xb, -s);
    const long double d1a = -s * w * std::pow(xa, -s - 1.0L);
    const long double d1b = inf ? 0.0L : -s * w * std::pow(xb, -s - 1.0L);
    const long double c3 = s * (s + 1.0L) * (s + 2.0L) * w * w * w;
    const long double d3a = -c3 * std::pow(xa, -s - 3.0L);
    const long double d3b = inf ? 0.0L : -c3 * std::pow(xb, -s - 3.0L);
    const long double c5 = c3 * (s + 3.0L) * (s + 4.0L) * w * w;
    const long double d5a = -c5 * std::pow(xa, -s - 5.0L);
    const long double d5b = inf ? 0.0L : -c5 * std::pow(xb, -s - 5.0L);

    // Euler-Maclaurin through the B6 term.
    return integral + (fa + fb) / 2.0L + (d1b - d1a) / 12.0L - (d3b - d3a) / 720.0L +
           (d5b - d5a) / 30240.0L;
}

long double em_tail_log(long double Q, long double w, long long a, long long b) {
    const long double xa = Q + w * a;
    const long double xb = Q + w * b;
    // antiderivative of ln(Q + w x): (Q + w x)(ln(Q + w x) - 1)/w
    const long double Fa = xa * (std::log(xa) - 1.0L) / w;
    const long double Fb = xb * (std::log(xb) - 1.0L) / w;
    const long double d1a = w / xa, d1b = w / xb;
    const long double d3a = 2.0L * w * w * w / (xa * xa * xa);
    const long double d3b = 2.0L * w * w * w / (xb * xb * xb);
    return (Fb - Fa) + (std::log(xa) + std::log(xb)) / 2.0L + (d1b - d1a) / 12.0L -
           (d3b - d3a) / 720.0L;
}

} // namespace

long double row_sum_pow(long double Q, long double w, long long jlo, long long jhi,
                        long double s) {
    const bool inf = jhi < 0;
    if (!inf && jhi < jlo) return 0.0L;
    long long jstar = em_start(Q, w, jlo, s);
    if (!inf && jstar > jhi + 1) jstar = jhi + 1;
    NeumaierSum acc;
    for (long long j = jlo; j < jstar; ++j) acc.add(std::pow(Q + w * j, -s));
    if (inf || jstar <= jhi) acc.add(em_tail_pow(Q, w, jstar, inf ? -1 : jhi, s));
    return acc.value();
}

long double row_sum_log(long double Q, long double w, long long jlo, long long jhi) {
    if (jhi < jlo) return 0.0L;
    long long jstar = em_start(Q, w, jlo, 1.0L);
    if (jstar > jhi + 1) jstar = jhi + 1;
    NeumaierSum acc;
    for (long long j = jlo; j < jstar; ++j) acc.add(std::log(Q + w * j));
    if (jstar <= jhi) acc.add(em_tail_log(Q, w, jstar, jhi));
    return acc.value();
}

namespace {

// Row over j = 0..M (or infinity) with the origin-fold weights 1,2,2,...
long double folded_row(long double Q, long double v, long long M, long double s) {
    return std::pow(Q, -s) + 2.0L * row_sum_pow(Q, v, 1, M, s);
}

} // namespace

long double slab_standard(long double K, long double u, long double v, long long M,
                          long double s) {
    NeumaierSum part1;
    // The i = 0 row carries fold weight 1 and must stay in the explicit
    // head; the Euler-Maclaurin block assumes the constant weight 2.
    long long i0 = std::max<long long>(1, em_start(K, u, 0, s));
    const bool tail = i0 <= M;
    const long long head_end = tail ? i0 : M + 1;

    part1.add(folded_row(K, v, M, s));
    for (long long i = 1; i < head_end; ++i)
        part1.add(2.0L * folded_row(K + u * i, v, M, s));
    if (!tail) return part1.value();

    // Remaining i in [i0, M]: Euler-Maclaurin in i, with each piece an
    // elementary function of j summed by a folded row.
    const long double Qa = K + u * i0;
    const long double Qb = K + u * M;
    auto R = [&](long double Q, long double t) { return folded_row(Q, v, M, t); };

    long double integral;
    if (s == 1.0L) {
        long double La = std::log(Qa) + 2.0L * row_sum_log(Qa, v, 1, M);
        long double Lb = std::log(Qb) + 2.0L * row_sum_log(Qb, v, 1, M);
        integral = (Lb - La) / u;
    } else {
        integral = (R(Qb, s - 1.0L) - R(Qa, s - 1.0L)) / (u * (1.0L - s));
    }
    const long double boundary = (R(Qa, s) + R(Qb, s)) / 2.0L;
    const long double deriv1 = (-s * u / 12.0L) * (R(Qb, s + 1.0L) - R(Qa, s + 1.0L));
    const long double c3 = s * (s + 1.0L) * (s + 2.0L) * u * u * u;
    const long double deriv3 = (c3 / 720.0L) * (R(Qb, s + 3.0L) - R(Qa, s + 3.0L));

    part1.add(2.0L * (integral + boundary + deriv1 + deriv3));
    return part1.value();
}

long double slab_standard_inf(long double K, long double u, long double v, long double s) {
    if (s <= 2.0L)
        throw std::domain_error("slab_standard_inf: requires s > 2");
    auto Rinf = [&](long double Q, long double t) {
        return std::pow(Q, -t) + 2.0L * row_sum_pow(Q, v, 1, -1, t);
    };
    NeumaierSum acc;
    long long i0 = std::max<long long>(1, em_start(K, u, 0, s));
    acc.add(Rinf(K, s));
    for (long long i = 1; i < i0; ++i) acc.add(2.0L * Rinf(K + u * i, s));

    const long double Qa = K + u * i0;
    const long double integral = Rinf(Qa, s - 1.0L) / (u * (s - 1.0L));
    const long double boundary = Rinf(Qa, s) / 2.0L;
    const long double deriv1 = (s * u / 12.0L) * Rinf(Qa, s + 1.0L);
    const long double c3 = s * (s + 1.0L) * (s + 2.0L) * u * u * u;
    const long double deriv3 = -(c3 / 720.0L) * Rinf(Qa, s + 3.0L);
    acc.add(2.0L * (integral + boundary + deriv1 + deriv3));
    return acc.value();
}

namespace {

// Sum over m2 in [-M, M] at fixed |m1| = uu: reindex t = m1^2 - m2,
// which sweeps [uu^2 - M, uu^2 + M] bijectively.
long double toeplitz_inner(long double Bu, long double w2, long long uu, long long M,
                           long double s) {
    const long long usq = uu * uu;
    if (usq >= M) return row_sum_pow(Bu, w2, usq - M, usq + M, s);
    return row_sum_pow(Bu, w2, 0, usq + M, s) + row_sum_pow(Bu, w2, 1, M - usq, s);
}

} // namespace

long double slab_toeplitz(long double B0, long double cu, long double w2, long long M,
                          long double s) {
    NeumaierSum acc;
    acc.add(toeplitz_inner(B0, w2, 0, M, s));
    for (long long uu = 1; uu <= M; ++uu)
        acc.add(2.0L * toeplitz_inner(B0 + cu * uu, w2, uu, M, s));
    return acc.value();
}

long double slab_toeplitz_inf(long double B0, long double cu, long double w2, long double s) {
    if (s <= 2.0L)
        throw std::domain_error("slab_toeplitz_inf: requires s > 2");
    auto G = [&](long double Bu) {
        // full m2 line: t = 0 ray plus t = 1.. ray
        return row_sum_pow(Bu, w2, 0, -1, s) + row_sum_pow(Bu, w2, 1, -1, s);
    };
    NeumaierSum acc;
    acc.add(G(B0));
    // March u until the analytic remainder of the u-tail is negligible.
    long long uu = 1;
    for (;; ++uu) {
        long double g = G(B0 + cu * uu);
        acc.add(2.0L * g);
        if (uu >= 64 && g * (long double)uu < 1e-22L * std::fabs(acc.value())) break;
        if (uu > (1LL << 26)) break;
    }
    // Remaining u-tail: G ~ 2 (B0 + cu u)^{1-s} / (w2 (s-1)), summed over
    // u > uu via the integral (B0 + cu uu)^{2-s} / (cu (s-2)).
    const long double Qa = B0 + cu * (uu + 1);
    acc.add(4.0L / (w2 * (s - 1.0L)) * std::pow(Qa, 2.0L - s) / (cu * (s - 2.0L)));
    return acc.value();
}

long double slab_standard_enum(long double K, long double u, long double v, long long M,
                               long double s) {
    NeumaierSum acc;
    for (long long i = 0; i <= M; ++i) {
        long double wi = i == 0 ? 1.0L : 2.0L;
        for (long long j = 0; j <= M; ++j) {
            long double wj = j == 0 ? 1.0L : 2.0L;
            acc.add(wi * wj * std::pow(K + u * i + v * j, -s));
        }
    }
    return acc.value();
}

long double slab_toeplitz_enum(long double B0, long double cu, long double w2, long long M,
                               long double s) {
    NeumaierSum acc;
    for (long long m1 = -M; m1 <= M; ++m1) {
        long double Bu = B0 + cu * (m1 < 0 ? -m1 : m1);
        for (long long m2 = -M; m2 <= M; ++m2) {
            long long t = m1 * m1 - m2;
            acc.add(std::pow(Bu + w2 * (t < 0 ? -t : t), -s));
        }
    }
    return acc.value();
}

} // namespace coembed::rows
