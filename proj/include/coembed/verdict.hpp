#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coembed/analytic.hpp"
#include "coembed/groups.hpp"

namespace coembed {

/// The full embedding query (p, q, r, alpha, beta, k).
struct ParamTuple {
    ExtReal p;
    ExtReal q;
    ExtReal r;
    WeightSpec weight;
    long long k;

    ParamTuple(ExtReal p_, ExtReal q_, ExtReal r_, WeightSpec w_, long long k_)
        : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), weight(w_), k(k_) {
        if (k < 0) throw std::invalid_argument("ParamTuple: k must be >= 0");
    }
};

enum class Answer { Embeds, DoesNotEmbed, IndeterminateGap };
enum class Regime { Characterized, Gap };

const char* answer_name(Answer a);

/// One rendered inequality of a verdict trace; sides are exact strings
/// ("num/den" or "inf") so consumers can re-verify them.
struct TraceEntry {
    std::string name;
    std::string lhs;
    Rel rel;
    std::string rhs;
    bool satisfied;
};

struct Verdict {
    Answer answer;
    Regime regime;
    ThetaValue theta;
    std::string case_id;
    std::vector<TraceEntry> trace;
    std::optional<std::string> failed_first;
};

// Decides Co(L^{p,r}_{v^{(alpha,beta)}}) -> W^{k,q}(R^3) for the group.
// Exact on q in (0,2] u {inf}; for q in (2,inf) evaluates the
// sufficient chain (with q_down) and the necessary chain (with q
// substituted) and reports the gap when they disagree.
Verdict decide(const GroupSpec& group, const ParamTuple& params);

// beta >= k. Every Embeds verdict satisfies this; decide() asserts it.
bool beta_ge_k_necessary(const ParamTuple& params);

// Equality of the unordered diagonal-exponent pairs: the exact
// criterion for two groups to share all embedding verdicts over
// q in (0,2], p = r.
bool same_embedding_behavior(const GroupSpec& g1, const GroupSpec& g2);

// The constructive witness alpha for an embedding of Co(L^p) (p = r)
// into W^{k,q}, when one exists. Requires p <= q and q in (0,2].
std::optional<Rational> exists_alpha(const GroupSpec& group, const ExtReal& p, const ExtReal& q,
                                     const Rational& beta, long long k);

// Largest k with decide(group, (p,p,p,alpha,beta,k)) = Embeds, found by
// descending from the closed-form bound; nullopt when no k >= 0 embeds.
// Requires p in (0,2].
std::optional<long long> max_smoothness_k(const GroupSpec& group, const ExtReal& p,
                                          const Rational& alpha, const Rational& beta);

} // namespace coembed
