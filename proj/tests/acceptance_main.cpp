// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure. Criteria run the full stated grids; stated runtime
// budgets are enforced.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "coembed/margin_grid.hpp"
#include "coembed/report.hpp"
#include "coembed/sequences.hpp"
#include "coembed/verdict.hpp"

using namespace coembed;

namespace {

struct Criterion {
    bool pass = true;
    std::ostringstream detail;
    void fail(const std::string& why) {
        if (pass) detail << why;
        pass = false;
    }
};

int worker_count() {
    if (const char* env = std::getenv("COEMBED_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? (int)hc : 1;
}

Rational rand_rational(std::mt19937_64& rng, long long lo, long long hi, long long max_den = 4) {
    std::uniform_int_distribution<long long> num(lo, hi), den(1, max_den);
    return Rational(num(rng), den(rng));
}

ExtReal rand_exponent_any(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 6);
    switch (pick(rng)) {
        case 0: return ExtReal(Rational(1, 2));
        case 1: return ExtReal(Rational(3, 4));
        case 2: return ExtReal(Rational(1));
        case 3: return ExtReal(Rational(3, 2));
        case 4: return ExtReal(Rational(2));
        case 5: return ExtReal(Rational(4));
        default: return ExtReal::infinity();
    }
}

ExtReal rand_exponent_0_2(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(1, 8);
    return ExtReal(Rational(num(rng), 4));
}

GroupSpec rand_group(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng))
        return GroupSpec::standard(rand_rational(rng, -4, 4), rand_rational(rng, -4, 4));
    return GroupSpec::toeplitz(rand_rational(rng, -4, 4));
}

// --- criterion 1 -------------------------------------------------------

DyadicSum standard_norm_closed(const Rational& l1, const Rational& l2, long long n,
                               long long m1, long long m2) {
    DyadicSum s;
    s += DyadicValue::pow2(Rational(n));
    s += DyadicValue(Rational(1 + std::llabs(m1)), Rational(n) * l1);
    s += DyadicValue(Rational(1 + std::llabs(m2)), Rational(n) * l2);
    return s;
}

Criterion criterion_norm_identities() {
    Criterion c;
    std::vector<GroupSpec> groups = {
        GroupSpec::standard(Rational(1), Rational(1)),
        GroupSpec::standard(Rational(1), Rational(2)),
        GroupSpec::standard(Rational(1, 2), Rational(2)),
        GroupSpec::standard(Rational(-1), Rational(3)),
        GroupSpec::toeplitz(Rational(-1)),
        GroupSpec::toeplitz(Rational(0)),
        GroupSpec::toeplitz(Rational(1, 2)),
        GroupSpec::toeplitz(Rational(1)),
    };

    std::vector<std::pair<GroupSpec, long long>> tasks;
    for (const auto& g : groups)
        for (long long n = -8; n <= 8; ++n) tasks.emplace_back(g, n);

    std::atomic<std::size_t> next{0};
    std::atomic<long long> bad{0};
    auto work = [&] {
        for (;;) {
            std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) return;
            const auto& [g, n] = tasks[t];
            const bool std_family = g.is_standard();
            for (long long m1 = -64; m1 <= 64; ++m1)
                for (long long m2 = -64; m2 <= 64; ++m2)
                    for (int eps : {+1, -1}) {
                        FamilyIndex idx(n, m1, m2, eps);
                        IndexedMatrix A = matrix_A(g, idx);
                        IndexedMatrix B = matrix_B(g, FamilyIndex(-n, m1, m2, eps));
                        if (!is_identity(product_with_transpose(A, B))) {
                            ++bad;
                            return;
                        }
                        if (std_family && eps == +1) {
                            const auto& sg = g.as_standard();
                            if (!(norm_sum(A) ==
                                  standard_norm_closed(sg.lambda1, sg.lambda2, n, m1, m2))) {
                                ++bad;
                                return;
                            }
                        }
                    }
        }
    };
    int n = worker_count();
    std::vector<std::thread> pool;
    for (int w = 0; w < n - 1; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (bad > 0) c.fail("matrix identity or norm closed form violated");
    return c;
}

// --- criterion 2 -------------------------------------------------------

Criterion criterion_analytic_consistency() {
    Criterion c;
    std::mt19937_64 rng(20260810);

    // case-boundary agreement
    for (int trial = 0; trial < 500; ++trial) {
        Rational a = rand_rational(rng, -12, 12);
        Rational b = rand_rational(rng, 0, 8);
        std::uniform_int_distribution<int> pick(0, 3);
        ThetaValue th = pick(rng) == 0 ? ThetaValue(ExtReal::infinity())
                                       : ThetaValue(ExtReal(rand_rational(rng, 1, 8)));
        Rational l2 = Rational(1) + rand_rational(rng, 0, 5);
        if (eval_standard_case(StandardCase::Straddling, Rational(1), l2, a, b, th).member !=
            eval_standard_case(StandardCase::BothAtLeastOne, Rational(1), l2, a, b, th).member)
            c.fail("case chains disagree at lambda1 = 1");
        Rational l1 = Rational(1) - rand_rational(rng, 0, 5);
        if (eval_standard_case(StandardCase::BothAtMostOne, l1, Rational(1), a, b, th).member !=
            eval_standard_case(StandardCase::Straddling, l1, Rational(1), a, b, th).member)
            c.fail("case chains disagree at lambda2 = 1");
    }

    // theta monotonicity
    const std::vector<ThetaValue> ladder = {ExtReal(Rational(1, 2)), ExtReal(Rational(1)),
                                            ExtReal(Rational(2)), ExtReal(Rational(4)),
                                            ExtReal::infinity()};
    for (int trial = 0; trial < 500; ++trial) {
        GroupSpec g = rand_group(rng);
        Rational a = rand_rational(rng, -10, 10);
        Rational b = rand_rational(rng, 0, 6);
        bool seen = false;
        for (const auto& th : ladder) {
            bool m = psi_in_ltheta(g, a, b, th).member;
            if (seen && !m) c.fail("membership lost when raising theta");
            seen = seen || m;
        }
    }

    // swap symmetry
    for (int trial = 0; trial < 500; ++trial) {
        Rational l1 = rand_rational(rng, -5, 5), l2 = rand_rational(rng, -5, 5);
        Rational a = rand_rational(rng, -10, 10);
        Rational b = rand_rational(rng, 0, 6);
        std::uniform_int_distribution<int> pick(0, 3);
        ThetaValue th = pick(rng) == 0 ? ThetaValue(ExtReal::infinity())
                                       : ThetaValue(ExtReal(rand_rational(rng, 1, 8)));
        if (psi_in_ltheta_standard(l1, l2, a, b, th).member !=
            psi_in_ltheta_standard(l2, l1, a, b, th).member)
            c.fail("swap symmetry violated");
    }

    // zeta splitting: decide == p<=q and both psi memberships
    int checked = 0;
    for (int trial = 0; trial < 1500 && checked < 520; ++trial) {
        GroupSpec g = rand_group(rng);
        ExtReal p = rand_exponent_any(rng);
        ExtReal q = rand_exponent_any(rng);
        if (q.is_finite() && Rational(2) < q.rational()) q = ExtReal(Rational(2));
        ExtReal r = rand_exponent_any(rng);
        Rational alpha = rand_rational(rng, -10, 10);
        Rational beta = rand_rational(rng, 0, 6);
        std::uniform_int_distribution<long long> kd(0, 4);
        long long k = kd(rng);
        ParamTuple t(p, q, r, WeightSpec(alpha, beta), k);
        Answer got = decide(g, t).answer;
        if (beta < Rational(k)) {
            if (got != Answer::DoesNotEmbed) c.fail("beta < k tuple not rejected");
            continue;
        }
        const Rational a = a_shift(g, p, q, r, alpha);
        const ThetaValue th = theta_from(q, r);
        bool expected = p <= q && psi_in_ltheta(g, a, beta, th).member &&
                        psi_in_ltheta(g, a, beta - Rational(k), th).member;
        if (got != (expected ? Answer::Embeds : Answer::DoesNotEmbed))
            c.fail("zeta-splitting equivalence violated");
        ++checked;
    }
    if (checked < 500) c.fail("insufficient zeta-splitting samples");
    return c;
}

// --- criterion 3 -------------------------------------------------------

Criterion criterion_oracle_cross_validation(VerifyOutcome& outcome_out) {
    Criterion c;
    MarginGridOptions opts;  // margin 1/4, decisive placement
    auto grid = margin_grid(opts);
    long long members = 0, non_members = 0;
    for (const auto& mq : grid) (mq.expected_member ? members : non_members)++;
    if (members < 200 || non_members < 200) c.fail("margin grid too small");

    auto outcome = run_verification(grid, TruncationSchedule::default_schedule(),
                                    OracleThresholds{}, worker_count());
    outcome_out = outcome;
    if (outcome.contradictions != 0) {
        std::ostringstream os;
        os << outcome.contradictions << " contradictions (first: "
           << outcome.contradiction_labels.front() << ")";
        c.fail(os.str());
    }
    double rate = (double)outcome.inconclusive / (double)grid.size();
    if (rate > 0.10) {
        std::ostringstream os;
        os << "inconclusive rate " << rate << " above 10%";
        c.fail(os.str());
    }

    // Bare-margin placement: samples hug the boundary at distance 1/4.
    // Inconclusive answers are expected there; contradictions are not.
    MarginGridOptions strict;
    strict.decisive = false;
    strict.extended_groups = false;
    auto near_grid = margin_grid(strict);
    auto near = run_verification(near_grid, TruncationSchedule::default_schedule(),
                                 OracleThresholds{}, worker_count());
    if (near.contradictions != 0) {
        std::ostringstream os;
        os << near.contradictions << " contradictions on the bare-margin grid (first: "
           << near.contradiction_labels.front() << ")";
        c.fail(os.str());
    }
    return c;
}

// --- criterion 4 -------------------------------------------------------

std::vector<Rational> alpha_probes(const GroupSpec& g, const ExtReal& q, const Rational& beta,
                                   long long k) {
    const auto [l1, l2] = g.diagonal_pair();
    const Rational bk = beta - Rational(k);
    Rational lower, upper;
    switch (pick_standard_case(l1, l2)) {
        case StandardCase::BothAtLeastOne:
            lower = beta;
            upper = bk * l2;
            break;
        case StandardCase::BothAtMostOne:
            lower = beta * l1 < bk * l1 ? bk * l1 : beta * l1;
            upper = bk;
            break;
        case StandardCase::Straddling:
            lower = beta * l1 < bk * l1 ? bk * l1 : beta * l1;
            upper = bk * l2;
            break;
    }
    const Rational shift = g.det_exponent_coeff() * (Rational(1, 2) - q.inv());
    return {lower - shift, upper - shift};
}

bool probe_distinguishes(const GroupSpec& g1, const GroupSpec& g2) {
    for (const ExtReal& q : {ExtReal(2), ExtReal(1)})
        for (long long beta = 0; beta <= 2; ++beta)
            for (long long k = 0; k <= 2; ++k) {
                std::vector<Rational> candidates;
                for (const auto& g : {g1, g2})
                    for (const auto& a : alpha_probes(g, q, Rational(beta), k))
                        candidates.push_back(a);
                for (const auto& alpha : candidates) {
                    ParamTuple t(q, q, q, WeightSpec(alpha, Rational(beta)), k);
                    if (decide(g1, t).answer != decide(g2, t).answer) return true;
                }
            }
    return false;
}

Criterion criterion_structural_properties() {
    Criterion c;
    std::mt19937_64 rng(64);

    // isotropic groups never embed with positive smoothness
    GroupSpec iso = GroupSpec::standard(Rational(1), Rational(1));
    for (int trial = 0; trial < 1000; ++trial) {
        ExtReal p = rand_exponent_any(rng), q = rand_exponent_any(rng),
                r = rand_exponent_any(rng);
        Rational alpha = rand_rational(rng, -10, 10);
        Rational beta = rand_rational(rng, 0, 8);
        std::uniform_int_distribution<long long> kd(1, 4);
        ParamTuple t(p, q, r, WeightSpec(alpha, beta), kd(rng));
        if (decide(iso, t).answer == Answer::Embeds)
            c.fail("isotropic group reported an embedding with k >= 1");
    }

    // beta >= k is necessary
    for (int trial = 0; trial < 1000; ++trial) {
        GroupSpec g = rand_group(rng);
        ExtReal p = rand_exponent_any(rng), q = rand_exponent_any(rng),
                r = rand_exponent_any(rng);
        std::uniform_int_distribution<long long> kd(1, 6);
        long long k = kd(rng);
        Rational beta = rand_rational(rng, 0, 4 * k - 1, 4);
        if (!(beta < Rational(k))) beta = Rational(k) - Rational(1, 4);
        ParamTuple t(p, q, r, WeightSpec(rand_rational(rng, -10, 10), beta), k);
        if (decide(g, t).answer == Answer::Embeds) c.fail("embedding with beta < k");
    }

    // Toeplitz groups match Standard(1-d, 1-2d) on q in (0,2] at p = r
    for (int trial = 0; trial < 1000; ++trial) {
        Rational d = rand_rational(rng, -4, 4);
        GroupSpec tg = GroupSpec::toeplitz(d);
        GroupSpec sg = GroupSpec::standard(Rational(1) - d, Rational(1) - Rational(2) * d);
        ExtReal p = rand_exponent_any(rng);
        ExtReal q = rand_exponent_0_2(rng);
        std::uniform_int_distribution<long long> kd(0, 3);
        ParamTuple t(p, q, p, WeightSpec(rand_rational(rng, -10, 10), rand_rational(rng, 0, 6)),
                     kd(rng));
        if (decide(tg, t).answer != decide(sg, t).answer)
            c.fail("Toeplitz and reduced standard verdicts differ");
    }

    // distinct diagonal pairs are separated by the finite probe grid
    int found_pairs = 0;
    while (found_pairs < 20) {
        GroupSpec g1 = rand_group(rng), g2 = rand_group(rng);
        if (same_embedding_behavior(g1, g2)) continue;
        ++found_pairs;
        if (!probe_distinguishes(g1, g2))
            c.fail("probe grid failed to distinguish " + g1.to_string() + " vs " +
                   g2.to_string());
    }

    // and equivalent groups are never separated
    for (int trial = 0; trial < 200; ++trial) {
        Rational d = rand_rational(rng, -4, 4);
        GroupSpec tg = GroupSpec::toeplitz(d);
        GroupSpec sg = GroupSpec::standard(Rational(1) - Rational(2) * d, Rational(1) - d);
        if (!same_embedding_behavior(tg, sg)) c.fail("canonical pair mismatch");
        if (probe_distinguishes(tg, sg)) c.fail("equivalent groups distinguished");
    }
    return c;
}

// --- criterion 5 -------------------------------------------------------

Criterion criterion_constructive_witnesses() {
    Criterion c;
    std::mt19937_64 rng(5150);

    int witnesses = 0;
    for (int trial = 0; trial < 500; ++trial) {
        GroupSpec g = rand_group(rng);
        ExtReal q = rand_exponent_0_2(rng);
        // p <= q within (0, q]
        std::uniform_int_distribution<long long> num(1, q.rational().num() * 4 / q.rational().den());
        ExtReal p = ExtReal(Rational(num(rng), 4));
        Rational beta = rand_rational(rng, 0, 6);
        std::uniform_int_distribution<long long> kd(0, 3);
        long long k = kd(rng);
        auto witness = exists_alpha(g, p, q, beta, k);
        if (!witness) continue;
        ++witnesses;
        ParamTuple t(p, q, p, WeightSpec(*witness, beta), k);
        if (decide(g, t).answer != Answer::Embeds) c.fail("witness alpha does not embed");
    }
    if (witnesses < 100) c.fail("too few witnesses produced");

    int scanned = 0;
    for (int trial = 0; trial < 200; ++trial) {
        GroupSpec g = rand_group(rng);
        ExtReal p = rand_exponent_0_2(rng);
        Rational alpha = rand_rational(rng, -12, 12);
        Rational beta = rand_rational(rng, 0, 8);
        auto fast = max_smoothness_k(g, p, alpha, beta);

        std::optional<long long> slow;
        for (long long k = 0; k <= 20; ++k) {
            ParamTuple t(p, p, p, WeightSpec(alpha, beta), k);
            if (decide(g, t).answer == Answer::Embeds) slow = k;
        }
        if (fast != slow) c.fail("max_smoothness_k disagrees with the exhaustive scan");
        ++scanned;
    }
    if (scanned != 200) c.fail("scan count mismatch");
    return c;
}

// --- criterion 6 -------------------------------------------------------

Criterion criterion_tail_estimates() {
    Criterion c;
    for (const Rational& rho : {Rational(-3, 2), Rational(-2), Rational(-3)}) {
        const long double rf = rho.to_long_double();
        const long long M = 2'000'000;
        // suffix sums: tail(m0) for every m0 <= 200 in one downward pass
        long double tail = std::pow((long double)M, rf + 1.0L) / (-(rf + 1.0L)) +
                           std::pow((long double)M, rf) / 2.0L;
        for (long long m = M - 1; m >= 201; --m) tail += std::pow((long double)m, rf);
        for (long long m0 = 200; m0 >= 1; --m0) {
            tail += std::pow((long double)m0, rf);
            long double ratio = tail / tail_sum_estimate(m0, rho);
            if (!(ratio >= 0.25L && ratio <= 4.0L)) {
                std::ostringstream os;
                os << "tail ratio " << (double)ratio << " at m0=" << m0
                   << " rho=" << rho.to_string();
                c.fail(os.str());
            }
        }
    }
    return c;
}

// --- driver ------------------------------------------------------------

struct Outcome {
    std::string name;
    double limit_s;
    Criterion result;
    double elapsed_s;
};

} // namespace

int main() {
    std::vector<Outcome> outcomes;
    VerifyOutcome verify_stats;

    auto run = [&](const std::string& name, double limit,
                   const std::function<Criterion()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        Criterion c = fn();
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        outcomes.push_back({name, limit, std::move(c), dt});
    };

    run("1 norm identities (exact, |n|<=8, |m|<=64, both families)", 10.0,
        criterion_norm_identities);
    run("2 analytic self-consistency (>=500 samples per property)", 30.0,
        criterion_analytic_consistency);
    run("3 oracle cross-validation (margin-1/4 grid)", 600.0,
        [&] { return criterion_oracle_cross_validation(verify_stats); });
    run("4 structural properties (isotropic, beta>=k, Toeplitz reduction, separation)", 60.0,
        criterion_structural_properties);
    run("5 constructive witnesses and maximal smoothness", 60.0,
        criterion_constructive_witnesses);
    run("6 tail-sum asymptotics (m0 <= 200)", 5.0, criterion_tail_estimates);

    bool all_pass = true;
    for (auto& o : outcomes) {
        bool timed_out = o.elapsed_s > o.limit_s;
        bool pass = o.result.pass && !timed_out;
        all_pass = all_pass && pass;
        std::printf("[%s] criterion %s  (%.2fs / limit %.0fs)%s%s\n", pass ? "PASS" : "FAIL",
                    o.name.c_str(), o.elapsed_s, o.limit_s,
                    o.result.detail.str().empty() ? "" : " -- ",
                    o.result.detail.str().c_str());
        if (timed_out) std::printf("       exceeded runtime budget\n");
    }
    std::printf("oracle grid: %lld member / %lld non-member, %lld agreements, %lld inconclusive, %lld contradictions\n",
                verify_stats.member_queries, verify_stats.non_member_queries,
                verify_stats.agreements, verify_stats.inconclusive,
                verify_stats.contradictions);
    return all_pass ? 0 : 1;
}
