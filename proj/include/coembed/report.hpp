#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "coembed/margin_grid.hpp"
#include "coembed/verdict.hpp"

namespace coembed {

// Machine-readable renderings. Exact values are emitted as "num/den"
// strings ("inf" for infinity), never as floats, so consumers can
// re-verify every inequality; oracle statistics are decimal floats
// with 17 significant digits.

std::string verdict_to_text(const GroupSpec& g, const ParamTuple& t, const Verdict& v);
std::string verdict_to_json(const GroupSpec& g, const ParamTuple& t, const Verdict& v);

/// Cartesian sweep description; lattices iterate lexicographically in
/// the field order below.
struct SweepConfig {
    std::vector<GroupSpec> groups;
    std::vector<ExtReal> ps;
    std::vector<ExtReal> qs;
    std::vector<ExtReal> rs;
    std::vector<Rational> alphas;
    std::vector<Rational> betas;
    std::vector<long long> ks;
    std::string format = "csv";
    std::size_t max_tuples = 1000000;

    std::size_t tuple_count() const {
        return groups.size() * ps.size() * qs.size() * rs.size() * alphas.size() *
               betas.size() * ks.size();
    }
};

struct SweepRow {
    GroupSpec group;
    ParamTuple params;
    Verdict verdict;
};

// Evaluates every tuple; deterministic row order regardless of the
// worker count. Throws when the product exceeds config.max_tuples.
std::vector<SweepRow> run_sweep(const SweepConfig& config, int workers);

extern const char* const kSweepCsvHeader;
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_to_json(const std::vector<SweepRow>& rows);

std::string verify_to_text(const VerifyOutcome& o, const Rational& margin, bool decisive);
std::string verify_to_json(const VerifyOutcome& o, const Rational& margin, bool decisive);

// Flat key = value configuration, one pair per line; '#' starts a
// comment; list values use {a, b, c}. CLI flags override file keys.
std::map<std::string, std::vector<std::string>> parse_config(std::istream& in);

} // namespace coembed
