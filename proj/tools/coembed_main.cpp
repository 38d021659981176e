// coembed: embedding verdicts for three-dimensional shearlet coorbit
// scales, parameter sweeps, and analytic-vs-numeric verification runs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "coembed/report.hpp"

namespace {

using namespace coembed;

constexpr int kUsageError = 64;

int worker_count(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("COEMBED_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? (int)hc : 1;
}

struct GroupFlags {
    std::string family;
    std::string lambda1, lambda2, delta;

    GroupSpec build() const {
        if (family == "standard") {
            if (lambda1.empty() || lambda2.empty())
                throw CLI::ValidationError("--group standard requires --lambda1 and --lambda2");
            return GroupSpec::standard(Rational::parse(lambda1), Rational::parse(lambda2));
        }
        if (family == "toeplitz") {
            if (delta.empty())
                throw CLI::ValidationError("--group toeplitz requires --delta");
            return GroupSpec::toeplitz(Rational::parse(delta));
        }
        throw CLI::ValidationError("--group must be standard or toeplitz");
    }
};

TruncationSchedule parse_levels(const std::string& text) {
    // "6:256,8:1024,10:4096,12:16384"
    TruncationSchedule s;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        auto colon = cur.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--levels expects N:M pairs");
        s.levels.push_back({std::stoll(cur.substr(0, colon)), std::stoll(cur.substr(colon + 1))});
        cur.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else
            cur.push_back(c);
    }
    flush();
    s.validate();
    return s;
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::vector<std::string>& items, Parse parse) {
    std::vector<T> out;
    for (const auto& s : items) out.push_back(parse(s));
    return out;
}

std::vector<std::string> config_or_flag(const std::map<std::string, std::vector<std::string>>& cfg,
                                        const std::string& key,
                                        const std::vector<std::string>& flag) {
    if (!flag.empty()) return flag;
    auto it = cfg.find(key);
    if (it != cfg.end()) return it->second;
    return {};
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"embedding decisions for 3d shearlet coorbit scales"};
    app.require_subcommand(1);

    // ---- decide ----
    auto* dec = app.add_subcommand("decide", "decide one embedding query");
    GroupFlags gf;
    std::string p_s, q_s, r_s, alpha_s, beta_s, format = "text";
    long long k = 0;
    dec->add_option("--group", gf.family, "standard | toeplitz")->required();
    dec->add_option("--lambda1", gf.lambda1, "standard scaling exponent 1 (rational)");
    dec->add_option("--lambda2", gf.lambda2, "standard scaling exponent 2 (rational)");
    dec->add_option("--delta", gf.delta, "toeplitz exponent (rational)");
    dec->add_option("--p", p_s, "inner exponent p (rational or inf)")->required();
    dec->add_option("--q", q_s, "target exponent q")->required();
    dec->add_option("--r", r_s, "outer exponent r")->required();
    dec->add_option("--alpha", alpha_s, "scale weight alpha")->required();
    dec->add_option("--beta", beta_s, "shear weight beta (>= 0)")->required();
    dec->add_option("--k", k, "smoothness order (>= 0)")->required();
    dec->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    // ---- sweep ----
    auto* sw = app.add_subcommand("sweep", "evaluate a lattice of queries");
    std::string sw_config, sw_out, sw_format;
    std::vector<std::string> sw_group, sw_l1, sw_l2, sw_delta, sw_p, sw_q, sw_r, sw_alpha,
        sw_beta, sw_k;
    long long sw_cap = -1;
    int sw_workers = 0;
    sw->add_option("--config", sw_config, "config file (flat key = value)");
    sw->add_option("--group", sw_group, "group families: standard and/or toeplitz");
    sw->add_option("--lambda1", sw_l1, "lattice for lambda1");
    sw->add_option("--lambda2", sw_l2, "lattice for lambda2");
    sw->add_option("--delta", sw_delta, "lattice for delta");
    sw->add_option("--p", sw_p, "lattice for p");
    sw->add_option("--q", sw_q, "lattice for q");
    sw->add_option("--r", sw_r, "lattice for r");
    sw->add_option("--alpha", sw_alpha, "lattice for alpha");
    sw->add_option("--beta", sw_beta, "lattice for beta");
    sw->add_option("--k", sw_k, "lattice for k");
    sw->add_option("--format", sw_format, "csv | json");
    sw->add_option("--out", sw_out, "output file (default stdout)");
    sw->add_option("--max-tuples", sw_cap, "reject larger cartesian products");
    sw->add_option("--workers", sw_workers, "worker threads (default COEMBED_WORKERS or cores)");

    // ---- verify ----
    auto* vf = app.add_subcommand("verify", "cross-validate analytic answers with the oracle");
    std::string vf_margin = "1/4", vf_levels, vf_format = "text", vf_out;
    bool vf_strict = false;
    double vf_conv = 0.5, vf_div = 4.0;
    int vf_workers = 0;
    vf->add_option("--margin", vf_margin, "minimum boundary slack (rational, default 1/4)");
    vf->add_flag("--strict", vf_strict,
                 "place samples at the bare margin instead of decisive offsets");
    vf->add_option("--levels", vf_levels, "schedule override, e.g. 6:256,8:1024,10:4096,12:16384");
    vf->add_option("--conv-ratio", vf_conv, "convergent increment-decay threshold");
    vf->add_option("--div-growth", vf_div, "divergent per-level growth threshold");
    vf->add_option("--format", vf_format, "text | json")->check(CLI::IsMember({"text", "json"}));
    vf->add_option("--out", vf_out, "output file (default stdout)");
    vf->add_option("--workers", vf_workers, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }

    try {
        if (dec->parsed()) {
            GroupSpec g = gf.build();
            ParamTuple t(ExtReal::parse(p_s), ExtReal::parse(q_s), ExtReal::parse(r_s),
                         WeightSpec(Rational::parse(alpha_s), Rational::parse(beta_s)), k);
            Verdict v = decide(g, t);
            std::cout << (format == "json" ? verdict_to_json(g, t, v)
                                           : verdict_to_text(g, t, v));
            switch (v.answer) {
                case Answer::Embeds: return 0;
                case Answer::DoesNotEmbed: return 1;
                case Answer::IndeterminateGap: return 2;
            }
        }

        if (sw->parsed()) {
            std::map<std::string, std::vector<std::string>> cfg;
            if (!sw_config.empty()) {
                std::ifstream f(sw_config);
                if (!f) throw std::runtime_error("cannot open config file " + sw_config);
                cfg = parse_config(f);
            }
            SweepConfig sc;
            auto families = config_or_flag(cfg, "group", sw_group);
            if (families.empty()) families = {"standard"};
            auto l1 = parse_list<Rational>(config_or_flag(cfg, "lambda1", sw_l1), Rational::parse);
            auto l2 = parse_list<Rational>(config_or_flag(cfg, "lambda2", sw_l2), Rational::parse);
            auto dl = parse_list<Rational>(config_or_flag(cfg, "delta", sw_delta), Rational::parse);
            for (const auto& fam : families) {
                if (fam == "standard") {
                    for (const auto& a : l1)
                        for (const auto& b : l2) sc.groups.push_back(GroupSpec::standard(a, b));
                } else if (fam == "toeplitz") {
                    for (const auto& d : dl) sc.groups.push_back(GroupSpec::toeplitz(d));
                } else {
                    throw std::invalid_argument("unknown group family " + fam);
                }
            }
            sc.ps = parse_list<ExtReal>(config_or_flag(cfg, "p", sw_p), ExtReal::parse);
            sc.qs = parse_list<ExtReal>(config_or_flag(cfg, "q", sw_q), ExtReal::parse);
            sc.rs = parse_list<ExtReal>(config_or_flag(cfg, "r", sw_r), ExtReal::parse);
            sc.alphas =
                parse_list<Rational>(config_or_flag(cfg, "alpha", sw_alpha), Rational::parse);
            sc.betas = parse_list<Rational>(config_or_flag(cfg, "beta", sw_beta), Rational::parse);
            for (const auto& s : config_or_flag(cfg, "k", sw_k))
                sc.ks.push_back(std::stoll(s));
            auto fmt = config_or_flag(cfg, "format", sw_format.empty()
                                                         ? std::vector<std::string>{}
                                                         : std::vector<std::string>{sw_format});
            if (!fmt.empty()) sc.format = fmt.front();
            auto out_path = config_or_flag(
                cfg, "out", sw_out.empty() ? std::vector<std::string>{}
                                           : std::vector<std::string>{sw_out});
            if (sw_cap > 0) sc.max_tuples = (std::size_t)sw_cap;
            else if (auto it = cfg.find("max_tuples"); it != cfg.end())
                sc.max_tuples = (std::size_t)std::stoll(it->second.front());

            std::cerr << "sweep: " << sc.tuple_count() << " tuples\n";
            auto rows = run_sweep(sc, worker_count(sw_workers));
            std::string rendered = sc.format == "json" ? sweep_to_json(rows) : sweep_to_csv(rows);
            write_out(out_path.empty() ? "" : out_path.front(), rendered);
            return 0;
        }

        if (vf->parsed()) {
            MarginGridOptions opts;
            opts.margin = Rational::parse(vf_margin);
            if (opts.margin.is_negative())
                throw std::invalid_argument("--margin must be >= 0");
            opts.decisive = !vf_strict;
            TruncationSchedule sched = vf_levels.empty() ? TruncationSchedule::default_schedule()
                                                         : parse_levels(vf_levels);
            OracleThresholds th;
            th.convergent_ratio = vf_conv;
            th.divergent_growth = vf_div;
            auto grid = margin_grid(opts);
            auto outcome = run_verification(grid, sched, th, worker_count(vf_workers));
            std::string rendered = vf_format == "json"
                                       ? verify_to_json(outcome, opts.margin, opts.decisive)
                                       : verify_to_text(outcome, opts.margin, opts.decisive);
            write_out(vf_out, rendered);
            return outcome.contradictions == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
