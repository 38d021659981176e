#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coembed/analytic.hpp"
#include "coembed/oracle.hpp"

namespace coembed {

/// One cross-validation query: oracle input plus the analytic answer
/// and the exact distance of the sample from every decision boundary.
struct MarginQuery {
    SummabilityQuery query;
    bool expected_member;
    Rational slack;  // min distance to any boundary; 0 marks a boundary point
    std::string label;
};

/**
 * Grid construction. Inside samples sit at interior fractions of the
 * analytic member interval; outside samples sit a fixed offset beyond
 * each bound. `decisive` widens the offsets to max(margin, 2/theta)
 * (3/2 at theta = inf) and keeps only inside points whose geometric
 * level rates clear the classifier thresholds with headroom; with it
 * off, every point at distance >= margin is kept, which exercises the
 * no-contradiction guarantee near the boundary where Inconclusive
 * answers are expected.
 */
struct MarginGridOptions {
    Rational margin = Rational(1, 4);
    bool decisive = true;
    bool extended_groups = true;  // supplement the core lattice for volume
};

std::vector<MarginQuery> margin_grid(const MarginGridOptions& opts);

/// Aggregate outcome of running the oracle across a grid.
struct VerifyOutcome {
    long long member_queries = 0;
    long long non_member_queries = 0;
    long long agreements = 0;
    long long inconclusive = 0;
    long long contradictions = 0;           // at slack > 0 only
    long long boundary_disagreements = 0;   // slack = 0, informational
    std::vector<std::string> contradiction_labels;
};

VerifyOutcome run_verification(const std::vector<MarginQuery>& grid,
                               const TruncationSchedule& schedule,
                               const OracleThresholds& thresholds, int workers);

} // namespace coembed
