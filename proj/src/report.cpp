#include "coembed/report.hpp"

#include <atomic>
#include <cstdio>
#include <istream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace coembed {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt17(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", (double)v);
    return buf;
}

ordered_json group_json(const GroupSpec& g) {
    ordered_json j;
    if (g.is_standard()) {
        j["family"] = "standard";
        j["lambda1"] = g.as_standard().lambda1.to_string();
        j["lambda2"] = g.as_standard().lambda2.to_string();
    } else {
        j["family"] = "toeplitz";
        j["delta"] = g.as_toeplitz().delta.to_string();
    }
    return j;
}

ordered_json trace_json(const std::vector<TraceEntry>& trace) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : trace) {
        ordered_json c;
        c["name"] = e.name;
        c["lhs"] = e.lhs;
        c["rel"] = rel_symbol(e.rel);
        c["rhs"] = e.rhs;
        c["satisfied"] = e.satisfied;
        arr.push_back(c);
    }
    return arr;
}

ordered_json verdict_json_obj(const GroupSpec& g, const ParamTuple& t, const Verdict& v) {
    ordered_json j;
    j["group"] = group_json(g);
    j["p"] = t.p.to_string();
    j["q"] = t.q.to_string();
    j["r"] = t.r.to_string();
    j["alpha"] = t.weight.alpha.to_string();
    j["beta"] = t.weight.beta.to_string();
    j["k"] = t.k;
    j["theta"] = v.theta.to_string();
    j["regime"] = v.regime == Regime::Characterized ? "characterized" : "gap";
    j["case"] = v.case_id;
    j["answer"] = answer_name(v.answer);
    j["failed_first"] = v.failed_first ? ordered_json(*v.failed_first) : ordered_json(nullptr);
    j["trace"] = trace_json(v.trace);
    return j;
}

} // namespace

std::string verdict_to_text(const GroupSpec& g, const ParamTuple& t, const Verdict& v) {
    std::ostringstream os;
    os << "group:   " << g.to_string() << "\n"
       << "query:   p=" << t.p.to_string() << " q=" << t.q.to_string()
       << " r=" << t.r.to_string() << " alpha=" << t.weight.alpha.to_string()
       << " beta=" << t.weight.beta.to_string() << " k=" << t.k << "\n"
       << "theta:   " << v.theta.to_string() << "\n"
       << "case:    " << v.case_id
       << (v.regime == Regime::Gap ? "  [q in (2,inf): gap regime]" : "") << "\n"
       << "answer:  " << answer_name(v.answer) << "\n";
    if (v.failed_first) os << "failed:  " << *v.failed_first << "\n";
    os << "trace:\n";
    for (const auto& e : v.trace)
        os << "  " << (e.satisfied ? "[ok]  " : "[no]  ") << e.name << ": " << e.lhs << " "
           << rel_symbol(e.rel) << " " << e.rhs << "\n";
    return os.str();
}

std::string verdict_to_json(const GroupSpec& g, const ParamTuple& t, const Verdict& v) {
    return verdict_json_obj(g, t, v).dump(2) + "\n";
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, int workers) {
    const std::size_t total = config.tuple_count();
    if (total > config.max_tuples)
        throw std::invalid_argument("run_sweep: tuple count " + std::to_string(total) +
                                    " exceeds cap " + std::to_string(config.max_tuples));

    std::vector<std::pair<GroupSpec, ParamTuple>> tasks;
    tasks.reserve(total);
    for (const auto& g : config.groups)
        for (const auto& p : config.ps)
            for (const auto& q : config.qs)
                for (const auto& r : config.rs)
                    for (const auto& alpha : config.alphas)
                        for (const auto& beta : config.betas)
                            for (long long k : config.ks)
                                tasks.emplace_back(g, ParamTuple(p, q, r, WeightSpec(alpha, beta), k));

    std::vector<std::optional<Verdict>> verdicts(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            verdicts[i] = decide(tasks[i].first, tasks[i].second);
        }
    };
    int n = std::max(1, workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < n - 1; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::vector<SweepRow> rows;
    rows.reserve(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i)
        rows.push_back(SweepRow{tasks[i].first, tasks[i].second, std::move(*verdicts[i])});
    return rows;
}

const char* const kSweepCsvHeader =
    "group,lambda1,lambda2,delta,p,q,r,alpha,beta,k,theta,case,answer,failed_first";

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << kSweepCsvHeader << "\n";
    for (const auto& row : rows) {
        const bool std_family = row.group.is_standard();
        os << (std_family ? "standard" : "toeplitz") << ","
           << (std_family ? row.group.as_standard().lambda1.to_string() : "") << ","
           << (std_family ? row.group.as_standard().lambda2.to_string() : "") << ","
           << (std_family ? "" : row.group.as_toeplitz().delta.to_string()) << ","
           << row.params.p.to_string() << "," << row.params.q.to_string() << ","
           << row.params.r.to_string() << "," << row.params.weight.alpha.to_string() << ","
           << row.params.weight.beta.to_string() << "," << row.params.k << ","
           << row.verdict.theta.to_string() << "," << row.verdict.case_id << ","
           << answer_name(row.verdict.answer) << ","
           << (row.verdict.failed_first ? *row.verdict.failed_first : "") << "\n";
    }
    return os.str();
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) arr.push_back(verdict_json_obj(row.group, row.params, row.verdict));
    return arr.dump(2) + "\n";
}

std::string verify_to_text(const VerifyOutcome& o, const Rational& margin, bool decisive) {
    std::ostringstream os;
    os << "margin grid: " << o.member_queries << " member / " << o.non_member_queries
       << " non-member queries (margin " << margin.to_string() << ", "
       << (decisive ? "decisive" : "strict") << " placement)\n"
       << "agreements:              " << o.agreements << "\n"
       << "inconclusive:            " << o.inconclusive << "\n"
       << "contradictions:          " << o.contradictions << "\n"
       << "boundary disagreements:  " << o.boundary_disagreements << "\n";
    for (const auto& l : o.contradiction_labels) os << "  CONTRADICTION at " << l << "\n";
    return os.str();
}

std::string verify_to_json(const VerifyOutcome& o, const Rational& margin, bool decisive) {
    ordered_json j;
    j["margin"] = margin.to_string();
    j["placement"] = decisive ? "decisive" : "strict";
    j["member_queries"] = o.member_queries;
    j["non_member_queries"] = o.non_member_queries;
    j["agreements"] = o.agreements;
    j["inconclusive"] = o.inconclusive;
    j["contradictions"] = o.contradictions;
    j["boundary_disagreements"] = o.boundary_disagreements;
    j["contradiction_labels"] = o.contradiction_labels;
    double rate = o.member_queries + o.non_member_queries > 0
                      ? (double)o.inconclusive /
                            (double)(o.member_queries + o.non_member_queries)
                      : 0.0;
    j["inconclusive_rate"] = fmt17(rate);
    return j.dump(2) + "\n";
}

std::map<std::string, std::vector<std::string>> parse_config(std::istream& in) {
    std::map<std::string, std::vector<std::string>> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string t = trim(line);
        if (t.empty()) continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key.empty() || val.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key or value");
        std::vector<std::string> items;
        if (val.front() == '{') {
            if (val.back() != '}')
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": unterminated list");
            std::string body = val.substr(1, val.size() - 2);
            std::string cur;
            for (char c : body) {
                if (c == ',' || c == ' ' || c == '\t') {
                    if (!cur.empty()) items.push_back(cur);
                    cur.clear();
                } else {
                    cur.push_back(c);
                }
            }
            if (!cur.empty()) items.push_back(cur);
        } else {
            items.push_back(val);
        }
        out[key] = std::move(items);
    }
    return out;
}

} // namespace coembed
