#include "coembed/margin_grid.hpp"

#include <atomic>
#include <thread>

namespace coembed {

namespace {

Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }

struct ComboContext {
    GroupSpec group;
    Rational b;
    ThetaValue theta;
    std::string tag;
};

// Predicted per-level decay/growth rates: an inside point at distance s
// from the nearer a-bound drains by 2^{-2 theta s} per level in the
// n-direction and by 4^{2 - b theta} in the m-direction; an outside
// point at distance s grows by 2^{2 theta s}.
bool decisive_inside(const Rational& slack_a, const Rational& btheta_slack,
                     const ThetaValue& theta) {
    if (theta.is_infinite()) return true;  // sup plateaus exactly
    const Rational th = theta.rational();
    return th * slack_a >= Rational(1) && btheta_slack >= Rational(1, 2);
}

void add_point(std::vector<MarginQuery>& out, const ComboContext& cc, const Rational& a,
               const Rational& slack, const std::string& note) {
    SummabilityQuery q(a, cc.b, cc.theta, cc.group);
    const bool member = psi_in_ltheta(cc.group, a, cc.b, cc.theta).member;
    out.push_back(MarginQuery{q, member, slack, cc.tag + " " + note});
}

void add_inside_points(std::vector<MarginQuery>& out, const ComboContext& cc,
                       const MembershipBounds& mb, const MarginGridOptions& opts) {
    if (mb.hi < mb.lo || mb.hi == mb.lo) {
        if (!(mb.hi < mb.lo) && !mb.strict && opts.margin.is_zero())
            add_point(out, cc, mb.lo, Rational(0), "a=lo=hi");  // width-zero interval
        return;
    }
    Rational btheta_slack(1);
    if (cc.theta.is_finite()) {
        btheta_slack = cc.b * cc.theta.rational() - Rational(2);
        if (btheta_slack < opts.margin || btheta_slack.is_zero()) return;
    }
    const Rational width = mb.hi - mb.lo;
    for (const auto& frac : {Rational(1, 4), Rational(3, 8), Rational(1, 2), Rational(5, 8),
                             Rational(3, 4)}) {
        const Rational a = mb.lo + width * frac;
        const Rational slack_a = rmin(a - mb.lo, mb.hi - a);
        const Rational slack = rmin(slack_a, btheta_slack);
        if (slack < opts.margin) continue;
        if (opts.decisive && !decisive_inside(slack_a, btheta_slack, cc.theta)) continue;
        add_point(out, cc, a, slack, "inside f=" + frac.to_string());
    }
}

void add_outside_points(std::vector<MarginQuery>& out, const ComboContext& cc,
                        const MembershipBounds& mb, const MarginGridOptions& opts) {
    Rational offset = opts.margin;
    if (opts.decisive) {
        Rational decisive_offset =
            cc.theta.is_finite() ? Rational(2) / cc.theta.rational() : Rational(3, 2);
        if (offset < decisive_offset) offset = decisive_offset;
    }
    for (int side = 0; side < 2; ++side) {
        // at least `offset` away from the violated bound (trivially
        // outside whenever the member interval is empty)
        const Rational a = side == 0 ? mb.lo - offset : mb.hi + offset;
        add_point(out, cc, a, offset, side == 0 ? "below" : "above");
    }
}

} // namespace

std::vector<MarginQuery> margin_grid(const MarginGridOptions& opts) {
    std::vector<GroupSpec> groups;
    auto std_pair = [&](long long n1, long long d1, long long n2, long long d2) {
        groups.push_back(GroupSpec::standard(Rational(n1, d1), Rational(n2, d2)));
    };
    std_pair(1, 1, 1, 1);
    std_pair(1, 1, 2, 1);
    std_pair(2, 1, 3, 1);
    std_pair(1, 2, 1, 2);
    std_pair(1, 2, 2, 1);
    std_pair(0, 1, 1, 1);
    std_pair(-1, 1, 2, 1);
    for (long long num : {-2, -1, 0, 1, 2}) {
        groups.push_back(GroupSpec::toeplitz(Rational(num, 2)));
    }
    if (opts.extended_groups) {
        std_pair(3, 1, 4, 1);
        std_pair(1, 2, 3, 1);
        std_pair(-1, 1, 3, 1);
        std_pair(2, 1, 2, 1);
        std_pair(3, 2, 3, 1);
        std_pair(1, 1, 3, 1);
        groups.push_back(GroupSpec::toeplitz(Rational(1, 4)));
        groups.push_back(GroupSpec::toeplitz(Rational(3, 4)));
        groups.push_back(GroupSpec::toeplitz(Rational(2)));
        groups.push_back(GroupSpec::toeplitz(Rational(3, 2)));
    }

    std::vector<ThetaValue> thetas = {ExtReal(Rational(1)), ExtReal(Rational(2)),
                                      ExtReal(Rational(4)), ExtReal::infinity()};
    std::vector<Rational> bs = {Rational(1), Rational(3)};

    std::vector<MarginQuery> grid;
    for (const auto& g : groups)
        for (const auto& th : thetas)
            for (const auto& b : bs) {
                ComboContext cc{g, b, th,
                                g.to_string() + " b=" + b.to_string() +
                                    " theta=" + th.to_string()};
                MembershipBounds mb = membership_bounds(g, b, th);
                add_inside_points(grid, cc, mb, opts);
                add_outside_points(grid, cc, mb, opts);
            }
    return grid;
}

VerifyOutcome run_verification(const std::vector<MarginQuery>& grid,
                               const TruncationSchedule& schedule,
                               const OracleThresholds& thresholds, int workers) {
    std::vector<OracleClass> results(grid.size(), OracleClass::Inconclusive);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            results[i] =
                classify_membership(grid[i].query, schedule, thresholds, 1).classification;
        }
    };
    int n = std::max(1, workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < n - 1; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    VerifyOutcome out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& mq = grid[i];
        (mq.expected_member ? out.member_queries : out.non_member_queries)++;
        const OracleClass got = results[i];
        if (got == OracleClass::Inconclusive) {
            out.inconclusive++;
            continue;
        }
        const bool says_member = got == OracleClass::Convergent;
        if (says_member == mq.expected_member) {
            out.agreements++;
        } else if (mq.slack.is_zero()) {
            out.boundary_disagreements++;
        } else {
            out.contradictions++;
            out.contradiction_labels.push_back(mq.label);
        }
    }
    return out;
}

} // namespace coembed
