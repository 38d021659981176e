#pragma once

#include <string>
#include <vector>

#include "coembed/sequences.hpp"

namespace coembed {

/**
 * Growing-box truncation levels for the numeric summability check. The
 * m-range grows at least geometrically so the octant boundaries, which
 * drift like 2^{n (l2 - l1)}, stay represented.
 */
struct TruncationSchedule {
    struct Level {
        long long n_bound;
        long long m_bound;
    };
    std::vector<Level> levels;

    static TruncationSchedule default_schedule() {
        return TruncationSchedule{{{6, 1 << 8}, {8, 1 << 10}, {10, 1 << 12}, {12, 1 << 14}}};
    }

    void validate() const;
};

/**
 * Trend thresholds. The ratio comparisons carry a small relative guard:
 * the true level dynamics are geometric, but finite boxes add slowly
 * varying transients that can park a ratio a fraction of a percent on
 * the wrong side of an exact threshold. The decisive rates on the two
 * sides differ by at least a factor 2^{1/2}, so a percent-level guard
 * cannot flip a classification across sides.
 */
struct OracleThresholds {
    long double convergent_ratio = 0.5L;  // max increment decay ratio
    long double divergent_growth = 4.0L;  // min per-level total growth
    // A level pair also counts as converging when the total grew by at
    // most this factor with a non-increasing increment; the slowest
    // genuinely divergent trend at margin 1/4 grows by 2^{1/2} ~ 1.41
    // per level, well clear of it.
    long double bounded_growth = 1.2L;
    long double rel_guard = 0.02L;
    long double plateau_rel = 1e-6L;  // increment negligible vs total
};

enum class OracleClass { Convergent, Divergent, Inconclusive };

const char* oracle_class_name(OracleClass c);

struct LevelStat {
    long long n_bound;
    long long m_bound;
    long double value;
    long double increment;      // value minus previous level's value
    long double tail_estimate;  // coarse m-tail size, when s > 2
    bool tail_estimate_valid;
};

struct OracleVerdict {
    OracleClass classification;
    std::vector<LevelStat> statistics;
    double growth_rate;  // least-squares slope of log2(value) per level
};

/**
 * Brute-force numeric classifier for psi^{(a,b)} in l^theta(Z^3):
 * truncated partial sums of psi^theta (finite theta) or truncated box
 * suprema (theta = inf) over the schedule's boxes, classified by trend.
 * Consumes only the psi definition, never the closed-form
 * characterizations. Deterministic: fixed slab order, compensated
 * accumulation, and worker partitioning that cannot reorder the
 * reduction.
 *
 * exact_enumeration forces direct enumeration of every box index
 * (validation mode; m bounds above 4096 are rejected there).
 */
OracleVerdict classify_membership(const SummabilityQuery& query,
                                  const TruncationSchedule& schedule = TruncationSchedule::default_schedule(),
                                  const OracleThresholds& thresholds = OracleThresholds{},
                                  int workers = 1, bool exact_enumeration = false);

} // namespace coembed
