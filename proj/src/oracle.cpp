#include "coembed/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "coembed/power_rows.hpp"

namespace coembed {

const char* oracle_class_name(OracleClass c) {
    switch (c) {
        case OracleClass::Convergent: return "Convergent";
        case OracleClass::Divergent: return "Divergent";
        case OracleClass::Inconclusive: return "Inconclusive";
    }
    return "?";
}

void TruncationSchedule::validate() const {
    if (levels.size() < 4)
        throw std::invalid_argument("TruncationSchedule: need at least 4 levels");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i].n_bound < 1 || levels[i].m_bound < 1)
            throw std::invalid_argument("TruncationSchedule: bounds must be positive");
        if (i > 0) {
            if (levels[i].n_bound <= levels[i - 1].n_bound ||
                levels[i].m_bound < 2 * levels[i - 1].m_bound)
                throw std::invalid_argument(
                    "TruncationSchedule: n must increase and m must at least double");
        }
    }
}

namespace {

struct SlabCoeffs {
    // norm(n, m1, m2) = base + c1 |m1| + c2 |m2|            (standard)
    //                 = base + c1 |m1| + c2 |m1^2 - m2|     (toeplitz)
    long double base;
    long double c1;
    long double c2;
    bool toeplitz;
};

SlabCoeffs slab_coeffs(const GroupSpec& group, long long n) {
    const long double nf = (long double)n;
    if (group.is_standard()) {
        const auto& g = group.as_standard();
        long double a = std::exp2(nf);
        long double b = std::exp2(nf * g.lambda1.to_long_double());
        long double c = std::exp2(nf * g.lambda2.to_long_double());
        return SlabCoeffs{a + b + c, b, c, false};
    }
    const long double d = group.as_toeplitz().delta.to_long_double();
    long double a = std::exp2(nf);
    long double b = std::exp2(nf * (1.0L - d));
    long double c = std::exp2(nf * (1.0L - 2.0L * d));
    return SlabCoeffs{a + b + c, b + c, c, true};
}

long double slab_value(const SlabCoeffs& sc, long long M, long double s, bool exact) {
    if (sc.toeplitz)
        return exact ? rows::slab_toeplitz_enum(sc.base, sc.c1, sc.c2, M, s)
                     : rows::slab_toeplitz(sc.base, sc.c1, sc.c2, M, s);
    return exact ? rows::slab_standard_enum(sc.base, sc.c1, sc.c2, M, s)
                 : rows::slab_standard(sc.base, sc.c1, sc.c2, M, s);
}

// theta = inf: the box supremum. Every norm coefficient is positive, so
// the per-slab supremum of psi sits at m = (0, 0); growing the m-box
// never moves it. The level value is the max over |n| <= N.
long double level_sup(const SummabilityQuery& q, long long N, long long M, bool exact) {
    const long double a = q.a.to_long_double();
    const long double b = q.b.to_long_double();
    long double best = 0.0L;
    for (long long n = -N; n <= N; ++n) {
        SlabCoeffs sc = slab_coeffs(q.group, n);
        long double v;
        if (!exact) {
            v = std::exp2((long double)n * a) * std::pow(sc.base, -b);
        } else {
            v = 0.0L;
            for (long long m1 = -M; m1 <= M; ++m1)
                for (long long m2 = -M; m2 <= M; ++m2) {
                    long long t = sc.toeplitz ? m1 * m1 - m2 : m2;
                    long double norm = sc.base + sc.c1 * (m1 < 0 ? -m1 : m1) +
                                       sc.c2 * (t < 0 ? -t : t);
                    long double cand = std::exp2((long double)n * a) * std::pow(norm, -b);
                    if (cand > v) v = cand;
                }
        }
        if (v > best) best = v;
    }
    return best;
}

struct LevelResult {
    long double value;
    long double tail;
    bool tail_valid;
};

LevelResult level_sum(const SummabilityQuery& q, long long N, long long M, int workers,
                      bool exact) {
    const long double theta = q.theta.rational().to_long_double();
    const long double s = q.b.to_long_double() * theta;
    const long double a_theta = q.a.to_long_double() * theta;

    const long long slabs = 2 * N + 1;
    std::vector<long double> slab_vals((std::size_t)slabs, 0.0L);
    auto run = [&](long long lo, long long hi) {
        for (long long idx = lo; idx < hi; ++idx) {
            long long n = idx - N;
            SlabCoeffs sc = slab_coeffs(q.group, n);
            slab_vals[(std::size_t)idx] =
                std::exp2((long double)n * a_theta) * slab_value(sc, M, s, exact);
        }
    };
    if (workers <= 1) {
        run(0, slabs);
    } else {
        std::vector<std::thread> pool;
        long long chunk = (slabs + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            long long lo = w * chunk, hi = std::min<long long> (slabs, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run, lo, hi);
        }
        for (auto& t : pool) t.join();
    }
    rows::NeumaierSum acc;
    for (long double v : slab_vals) acc.add(v);

    // Coarse m-tail size per slab from the asymptotic tail law, valid
    // once the row decay exponent clears 2.
    LevelResult res{acc.value(), 0.0L, false};
    const Rational s_exact = q.b * q.theta.rational();
    if (Rational(2) < s_exact) {
        const long double one_dim_tail = tail_sum_estimate(M + 1, -s_exact);
        rows::NeumaierSum tacc;
        for (long long n = -N; n <= N; ++n) {
            SlabCoeffs sc = slab_coeffs(q.group, n);
            long double rows_count = 2.0L * (long double)(2 * M + 1);
            long double coeff = sc.c1 < sc.c2 ? sc.c1 : sc.c2;
            tacc.add(std::exp2((long double)n * a_theta) * rows_count *
                     std::pow(coeff, -s) * one_dim_tail);
        }
        res.tail = tacc.value();
        res.tail_valid = true;
    }
    return res;
}

} // namespace

OracleVerdict classify_membership(const SummabilityQuery& query,
                                  const TruncationSchedule& schedule,
                                  const OracleThresholds& thresholds, int workers,
                                  bool exact_enumeration) {
    schedule.validate();
    if (exact_enumeration)
        for (const auto& l : schedule.levels)
            if (l.m_bound > 4096)
                throw std::invalid_argument("classify_membership: enumeration box too large");

    OracleVerdict out;
    out.growth_rate = 0.0;

    const bool finite_theta = query.theta.is_finite();
    long double prev = 0.0L;
    for (std::size_t j = 0; j < schedule.levels.size(); ++j) {
        const auto& lvl = schedule.levels[j];
        LevelResult r;
        if (finite_theta) {
            r = level_sum(query, lvl.n_bound, lvl.m_bound, workers, exact_enumeration);
        } else {
            r = LevelResult{level_sup(query, lvl.n_bound, lvl.m_bound, exact_enumeration),
                            0.0L, false};
        }
        LevelStat st;
        st.n_bound = lvl.n_bound;
        st.m_bound = lvl.m_bound;
        st.value = r.value;
        st.increment = j == 0 ? r.value : r.value - prev;
        st.tail_estimate = r.tail;
        st.tail_estimate_valid = r.tail_valid;
        out.statistics.push_back(st);
        prev = r.value;
    }

    const auto& st = out.statistics;
    const long double conv_cut = thresholds.convergent_ratio * (1.0L + thresholds.rel_guard);
    const long double div_cut = thresholds.divergent_growth * (1.0L - thresholds.rel_guard);

    bool convergent = true, divergent = true;
    for (std::size_t j = 2; j < st.size(); ++j) {
        const long double i_prev = st[j - 1].increment;
        const long double i_cur = st[j].increment;
        bool plateau = i_cur <= thresholds.plateau_rel * st[j].value;
        bool decaying = plateau || (i_prev > 0.0L && i_cur / i_prev <= conv_cut);
        bool bounded = st[j].value <= thresholds.bounded_growth * st[j - 1].value &&
                       i_cur <= i_prev * (1.0L + thresholds.rel_guard);
        convergent = convergent && (decaying || bounded);

        bool growing = st[j - 1].value > 0.0L && st[j].value >= div_cut * st[j - 1].value;
        divergent = divergent && growing;
    }

    if (convergent && !divergent)
        out.classification = OracleClass::Convergent;
    else if (divergent && !convergent)
        out.classification = OracleClass::Divergent;
    else
        out.classification = OracleClass::Inconclusive;

    // Least-squares slope of log2(value) against the level index.
    std::size_t L = st.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t j = 0; j < L; ++j) {
        double x = (double)j;
        double y = (double)std::log2((double)st[j].value);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double denom = (double)L * sxx - sx * sx;
    out.growth_rate = denom != 0 ? ((double)L * sxy - sx * sy) / denom : 0.0;
    return out;
}

} // namespace coembed
