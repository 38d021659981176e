#include "coembed/verdict.hpp"

#include <stdexcept>

namespace coembed {

const char* answer_name(Answer a) {
    switch (a) {
        case Answer::Embeds: return "Embeds";
        case Answer::DoesNotEmbed: return "DoesNotEmbed";
        case Answer::IndeterminateGap: return "IndeterminateGap";
    }
    return "?";
}

namespace {

Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

struct ChainResult {
    bool holds;
    std::string case_id;
    std::vector<Condition> conditions;
};

// The combined lower/upper bounds for the shift A = alpha + c*gamma in
// one lambda case. D = 1/q_down - 1/r (zero in the theta = inf branch).
struct Bounds {
    Rational lo;
    Rational hi;
};

Bounds standard_bounds(StandardCase c, const Rational& l1, const Rational& l2, const Rational& beta,
                       long long k, const Rational& D) {
    const Rational bk = beta - Rational(k);
    const Rational mx = rmax(beta * l1, bk * l1);
    switch (c) {
        case StandardCase::BothAtLeastOne:
            return {(l1 + l2 - Rational(2)) * D + beta, (l1 - l2) * D + bk * l2};
        case StandardCase::BothAtMostOne:
            return {(l2 - l1) * D + mx, (l1 + l2 - Rational(2)) * D + bk};
        case StandardCase::Straddling:
            return {(l2 - l1) * D + mx, (l1 - l2) * D + bk * l2};
    }
    throw std::logic_error("unreachable");
}

Bounds toeplitz_bounds(const Rational& delta, const Rational& beta, long long k,
                       const Rational& D) {
    const Rational bk = beta - Rational(k);
    const Rational one_minus_2d = Rational(1) - Rational(2) * delta;
    if (!delta.is_negative()) {
        return {rmax(beta * one_minus_2d, bk * one_minus_2d),
                Rational(-3) * delta * D + bk};
    }
    return {Rational(-3) * delta * D + beta, bk * one_minus_2d};
}

const char* case_name(StandardCase c) {
    switch (c) {
        case StandardCase::BothAtLeastOne: return "i";
        case StandardCase::BothAtMostOne: return "ii";
        case StandardCase::Straddling: return "iii";
    }
    return "?";
}

// Evaluates the printed inequality chain with q_down replaced by
// `q_like` (q_down itself for the characterized/sufficient form, q for
// the q in (2,inf) necessary form).
ChainResult evaluate_chain(const GroupSpec& group, const ParamTuple& t, const ExtReal& q_like) {
    const Rational A =
        t.weight.alpha + group.det_exponent_coeff() * gamma_exponent(t.p, t.q, t.r);
    const Rational beta = t.weight.beta;
    const bool sup_branch = t.r <= q_like;
    const Rational D = sup_branch ? Rational(0) : q_like.inv() - t.r.inv();

    ChainResult res;
    res.holds = true;
    auto add = [&](Condition c) {
        res.holds = res.holds && c.satisfied;
        res.conditions.push_back(std::move(c));
    };

    if (!sup_branch)
        add(Condition::make("beta>k+2(1/qv-1/r)", beta, Rel::GT,
                            Rational(t.k) + Rational(2) * D));

    auto add_bounds = [&](const Bounds& b) {
        if (sup_branch) {
            add(Condition::make("lower<=A", b.lo, Rel::LE, A));
            add(Condition::make("A<=upper", A, Rel::LE, b.hi));
        } else {
            add(Condition::make("lower<A", b.lo, Rel::LT, A));
            add(Condition::make("A<upper", A, Rel::LT, b.hi));
        }
    };

    if (group.is_standard()) {
        Rational l1 = group.as_standard().lambda1, l2 = group.as_standard().lambda2;
        if (l2 < l1) std::swap(l1, l2);
        const StandardCase canonical = pick_standard_case(l1, l2);
        res.case_id = case_name(canonical);
        Bounds b = standard_bounds(canonical, l1, l2, beta, t.k, D);
        add_bounds(b);

        // Boundary lambdas admit more than one printed chain; they must
        // agree, and exact arithmetic lets us check rather than assume.
        const Rational one(1);
        for (StandardCase c : {StandardCase::BothAtMostOne, StandardCase::Straddling,
                               StandardCase::BothAtLeastOne}) {
            if (c == canonical) continue;
            bool applicable = (c == StandardCase::BothAtMostOne && l2 <= one) ||
                              (c == StandardCase::Straddling && l1 <= one && one <= l2) ||
                              (c == StandardCase::BothAtLeastOne && one <= l1);
            if (!applicable) continue;
            Bounds ob = standard_bounds(c, l1, l2, beta, t.k, D);
            bool oholds = sup_branch ? (ob.lo <= A && A <= ob.hi) : (ob.lo < A && A < ob.hi);
            bool cholds = sup_branch ? (b.lo <= A && A <= b.hi) : (b.lo < A && A < b.hi);
            if (oholds != cholds)
                throw std::logic_error("decide: boundary case chains disagree");
        }
    } else {
        const Rational d = group.as_toeplitz().delta;
        res.case_id = d.is_negative() ? "toeplitz,d<0" : "toeplitz,d>=0";
        add_bounds(toeplitz_bounds(d, beta, t.k, D));
    }
    return res;
}

TraceEntry entry_from(const Condition& c, const std::string& prefix) {
    return TraceEntry{prefix + c.name, c.lhs.to_string(), c.rel, c.rhs.to_string(), c.satisfied};
}

} // namespace

Verdict decide(const GroupSpec& group, const ParamTuple& params) {
    if (params.weight.beta.is_negative())
        throw std::invalid_argument("decide: beta must be >= 0");

    const ExtReal qd = q_down(params.q);
    const ThetaValue theta = theta_from(params.q, params.r);
    const bool characterized =
        params.q.is_infinite() || params.q.rational() <= Rational(2);

    Verdict v{Answer::DoesNotEmbed,
              characterized ? Regime::Characterized : Regime::Gap,
              theta,
              "",
              {},
              std::nullopt};

    const bool p_le_q = params.p <= params.q;
    v.trace.push_back(TraceEntry{"p<=q", params.p.to_string(), Rel::LE, params.q.to_string(),
                                 p_le_q});

    ChainResult suf = evaluate_chain(group, params, qd);
    v.case_id = suf.case_id;

    if (characterized) {
        for (const auto& c : suf.conditions) v.trace.push_back(entry_from(c, ""));
        v.answer = (p_le_q && suf.holds) ? Answer::Embeds : Answer::DoesNotEmbed;
    } else {
        ChainResult nec = evaluate_chain(group, params, params.q);
        for (const auto& c : suf.conditions) v.trace.push_back(entry_from(c, "suf:"));
        for (const auto& c : nec.conditions) v.trace.push_back(entry_from(c, "nec:"));
        if (p_le_q && suf.holds)
            v.answer = Answer::Embeds;
        else if (!p_le_q || !nec.holds)
            v.answer = Answer::DoesNotEmbed;
        else
            v.answer = Answer::IndeterminateGap;
    }

    for (const auto& e : v.trace)
        if (!e.satisfied) {
            v.failed_first = e.name;
            break;
        }

    // An Embeds verdict must carry p <= q and beta >= k.
    if (v.answer == Answer::Embeds &&
        (!p_le_q || params.weight.beta < Rational(params.k)))
        throw std::logic_error("decide: Embeds verdict violating a necessary gate");
    return v;
}

bool beta_ge_k_necessary(const ParamTuple& params) {
    return params.weight.beta >= Rational(params.k);
}

bool same_embedding_behavior(const GroupSpec& g1, const GroupSpec& g2) {
    return g1.diagonal_pair() == g2.diagonal_pair();
}

std::optional<Rational> exists_alpha(const GroupSpec& group, const ExtReal& p, const ExtReal& q,
                                     const Rational& beta, long long k) {
    if (beta.is_negative()) throw std::invalid_argument("exists_alpha: beta must be >= 0");
    if (k < 0) throw std::invalid_argument("exists_alpha: k must be >= 0");
    if (!(p <= q)) throw std::invalid_argument("exists_alpha: requires p <= q");
    if (q.is_infinite() || Rational(2) < q.rational())
        throw std::invalid_argument("exists_alpha: requires q in (0,2]");

    const auto [l1, l2] = group.diagonal_pair();
    const Rational bk = beta - Rational(k);
    const StandardCase c = pick_standard_case(l1, l2);

    Rational lower, upper;
    switch (c) {
        case StandardCase::BothAtLeastOne:
            lower = beta;
            upper = bk * l2;
            break;
        case StandardCase::BothAtMostOne:
            lower = rmax(beta * l1, bk * l1);
            upper = bk;
            break;
        case StandardCase::Straddling:
            lower = rmax(beta * l1, bk * l1);
            upper = bk * l2;
            break;
    }
    if (upper < lower) return std::nullopt;

    // Put the shift A at the chain's upper bound.
    const Rational shift = group.det_exponent_coeff() * (Rational(1, 2) - q.inv());
    return upper - shift;
}

std::optional<long long> max_smoothness_k(const GroupSpec& group, const ExtReal& p,
                                          const Rational& alpha, const Rational& beta) {
    if (beta.is_negative())
        throw std::invalid_argument("max_smoothness_k: beta must be >= 0");
    if (p.is_infinite() || Rational(2) < p.rational())
        throw std::invalid_argument("max_smoothness_k: requires p in (0,2]");

    const auto [l1, l2] = group.diagonal_pair();
    const Rational A = alpha + group.det_exponent_coeff() * (Rational(1, 2) - p.inv());

    // Closed-form cap from the chain's right inequality, then descend.
    Rational cap;
    if (pick_standard_case(l1, l2) == StandardCase::BothAtMostOne)
        cap = beta - A;
    else
        cap = beta - A / l2;
    if (beta < cap) cap = beta;

    long long k = cap.floor();
    if (k < 0) return std::nullopt;
    for (; k >= 0; --k) {
        ParamTuple t(p, p, p, WeightSpec(alpha, beta), k);
        if (decide(group, t).answer == Answer::Embeds) return k;
    }
    return std::nullopt;
}

} // namespace coembed
