// Command-line front end: exact joint distributions, statistics, the
// generating-function identity suite, Monte Carlo simulation, and the
// bipartition encodings. All output is deterministic given the flags.

#include "napkin/bipartition.hpp"
#include "napkin/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

namespace {

using namespace napkin;

constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

XYPoly joint_polynomial(int n, const Params& params, TableKind kind, int order,
                        bool use_oracle) {
    if (use_oracle) {
        JointDistribution d = enumerate(n, params, kind);
        return to_polynomial(d.probs);
    }
    if (n > order)
        throw CLI::ValidationError("--n exceeds --order; pass --oracle or raise --order");
    GFSet g = build_full(params, n);
    return kind == TableKind::Circular ? g.C.coeff(n) : g.S.coeff(n);
}

int cmd_exact(int n, const Params& params, TableKind kind, int order, bool use_oracle,
              const std::string& format, bool with_float, Output& out) {
    XYPoly poly = joint_polynomial(n, params, kind, order, use_oracle);
    JointDistribution d;
    d.n = n;
    d.p = params.p;
    d.kind = kind;
    for (const auto& [k, c] : poly.terms()) d.probs[{k.first, k.second}] = c;
    if (format == "json") {
        out.stream() << distribution_to_json(d, with_float).dump(2) << "\n";
    } else if (format == "csv") {
        out.stream() << distribution_to_csv(d);
    } else {
        out.stream() << "P(i napkinless, j frustrated) at n=" << n
                     << ", p=" << format_rational(params.p) << ", "
                     << (kind == TableKind::Circular ? "circular" : "straight") << " table\n";
        for (const auto& [k, v] : d.probs) {
            out.stream() << "  i=" << k.first << " j=" << k.second << "  "
                         << format_rational(v);
            if (with_float) out.stream() << "  (" << to_double(v) << ")";
            out.stream() << "\n";
        }
    }
    return 0;
}

int cmd_stats(int n, const Params& params, const std::string& format, bool with_float,
              Output& out) {
    ZSeries mc = build_moment_gf(params, n);
    StatReport rep = moments_shifted(mc, n, params);
    if (format == "json") {
        json j{{"stats", stat_report_to_json(rep, with_float)}};
        if (params.p != 0 && params.p != 1)
            j["asymptotics"] = asymptotics_to_json(asymptotic_slopes(params));
        out.stream() << j.dump(2) << "\n";
    } else if (format == "csv") {
        out.stream() << "n,p,E_napkinless,E_frustrated,E_happy,Var_napkinless,"
                        "Var_frustrated,Covar\n"
                     << rep.n << ',' << format_rational(rep.p) << ','
                     << format_rational(rep.e_napkinless) << ','
                     << format_rational(rep.e_frustrated) << ','
                     << format_rational(rep.e_happy) << ','
                     << format_rational(rep.var_napkinless) << ','
                     << format_rational(rep.var_frustrated) << ','
                     << format_rational(rep.covar) << '\n';
    } else {
        out.stream() << "n=" << rep.n << " p=" << format_rational(rep.p) << "\n"
                     << "  E[napkinless] = " << format_rational(rep.e_napkinless)
                     << "  (" << to_double(rep.e_napkinless) << ")\n"
                     << "  E[frustrated] = " << format_rational(rep.e_frustrated)
                     << "  (" << to_double(rep.e_frustrated) << ")\n"
                     << "  E[happy]      = " << format_rational(rep.e_happy) << "  ("
                     << to_double(rep.e_happy) << ")\n"
                     << "  Var[napkinless] = " << to_double(rep.var_napkinless) << "\n"
                     << "  Var[frustrated] = " << to_double(rep.var_frustrated) << "\n"
                     << "  Covar           = " << to_double(rep.covar) << "\n";
        if (params.p != 0 && params.p != 1) {
            AsymptoticReport a = asymptotic_slopes(params);
            out.stream() << "  asymptotic E[napkinless]/n -> "
                         << a.e_napkinless_slope.str(10) << "\n";
        }
    }
    return 0;
}

int cmd_verify(int order, const Params& params, const std::string& format, Output& out) {
    GFSet g = build_full(params, order);
    IdentityReport rep = verify_identities(g);
    if (format == "json") {
        out.stream() << identity_report_to_json(rep).dump(2) << "\n";
    } else if (format == "csv") {
        out.stream() << "name,pass,asserted,first_fail\n";
        for (const auto& c : rep.checks)
            out.stream() << c.name << ',' << (c.pass ? 1 : 0) << ','
                         << (c.asserted ? 1 : 0) << ',' << c.first_fail << '\n';
    } else {
        for (const auto& c : rep.checks)
            out.stream() << (c.pass ? "PASS " : "FAIL ") << c.name
                         << (c.asserted ? "" : " (informational)") << "\n";
        out.stream() << (rep.all_passed() ? "all identities hold" : "IDENTITY FAILURE")
                     << " (order " << order << ", p=" << format_rational(params.p)
                     << ")\n";
    }
    return rep.all_passed() ? 0 : kExitVerifyFailed;
}

int cmd_simulate(int n, const Params& params, uint64_t trials, uint64_t seed,
                 const std::string& format, Output& out) {
    MonteCarloReport rep = montecarlo(n, params, trials, seed);
    if (format == "json") {
        out.stream() << montecarlo_to_json(rep).dump(2) << "\n";
    } else if (format == "csv") {
        out.stream() << "n,trials,seed,sum_o,sum_m,sum_happy,mean_napkinless_frac,"
                        "mean_frustrated_frac,mean_happy_frac\n"
                     << rep.n << ',' << rep.trials << ',' << rep.seed << ',' << rep.sum_o
                     << ',' << rep.sum_m << ',' << rep.sum_happy << ','
                     << rep.mean_o_frac << ',' << rep.mean_m_frac << ','
                     << rep.mean_happy_frac << '\n';
    } else {
        out.stream() << "n=" << rep.n << " trials=" << rep.trials << " seed=" << rep.seed
                     << "\n"
                     << "  napkinless fraction: " << rep.mean_o_frac << " +- "
                     << rep.se_o_frac << "\n"
                     << "  frustrated fraction: " << rep.mean_m_frac << " +- "
                     << rep.se_m_frac << "\n"
                     << "  happy fraction:      " << rep.mean_happy_frac << " +- "
                     << rep.se_happy_frac << "\n";
    }
    return 0;
}

int cmd_encode(const std::string& perm_text, TableKind kind, const std::string& format,
               Output& out) {
    SignedPermutation pi = parse_permutation(perm_text);
    std::string text;
    if (kind == TableKind::Circular) {
        text = format_bipartition(encode_circular(pi));
    } else {
        text = format_bipartition(encode_linear(pi));
    }
    TableOutcome outcome = replay(pi, kind);
    if (format == "json") {
        json j{{"perm", format_permutation(pi)},
               {"table", kind == TableKind::Circular ? "circular" : "straight"},
               {"bipartition", text},
               {"o", outcome.o},
               {"m", outcome.m},
               {"neg", outcome.neg_count},
               {"pos", outcome.pos_count}};
        if (kind == TableKind::Linear)
            j["end_class"] = std::string(1, end_class_char(outcome.end_class));
        out.stream() << j.dump(2) << "\n";
    } else if (format == "csv") {
        out.stream() << "field,value\nbipartition," << text << "\no," << outcome.o
                     << "\nm," << outcome.m << "\nneg," << outcome.neg_count << "\npos,"
                     << outcome.pos_count << "\n";
        if (kind == TableKind::Linear)
            out.stream() << "end_class," << end_class_char(outcome.end_class) << "\n";
    } else {
        out.stream() << text << "\n"
                     << "o=" << outcome.o << " m=" << outcome.m
                     << " neg=" << outcome.neg_count << " pos=" << outcome.pos_count;
        if (kind == TableKind::Linear)
            out.stream() << " end_class=" << end_class_char(outcome.end_class);
        out.stream() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics engine for the banquet napkin problem"};
    app.require_subcommand(1);

    std::string p_text = "1/2";
    std::string format = "pretty";
    std::string output_path;
    int n = 1;
    int order = 12;
    bool with_float = false;
    bool use_oracle = false;
    std::string table = "circular";
    uint64_t trials = 100000;
    uint64_t seed = 1;
    std::string perm_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", p_text, "left-preference probability as a rational a/b");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--output", output_path, "write to file instead of stdout");
        sub->add_flag("--float", with_float, "add decimal renderings of exact rationals");
    };

    CLI::App* exact = app.add_subcommand("exact", "exact joint distribution P(i,j,n)");
    exact->add_option("--n", n, "table size")->required();
    exact->add_option("--order", order, "series truncation order");
    exact->add_flag("--oracle", use_oracle, "use brute-force enumeration (n <= 8)");
    exact->add_option("--table", table, "circular or straight")
        ->check(CLI::IsMember({"circular", "straight"}));
    add_common(exact);

    CLI::App* stats = app.add_subcommand("stats", "exact moments and asymptotic slopes");
    stats->add_option("--n", n, "table size")->required();
    add_common(stats);

    CLI::App* verify = app.add_subcommand("verify", "generating-function identity suite");
    verify->add_option("--order", order, "series truncation order");
    add_common(verify);

    CLI::App* simulate = app.add_subcommand("simulate", "seeded Monte Carlo simulation");
    simulate->add_option("--n", n, "table size")->required();
    simulate->add_option("--trials", trials, "number of trials");
    simulate->add_option("--seed", seed, "RNG seed (splitmix64 streams)");
    add_common(simulate);

    CLI::App* encode = app.add_subcommand("encode", "bipartition encoding of a permutation");
    encode->add_option("--perm", perm_text, "signed permutation, e.g. 2,-3,4,-1")->required();
    encode->add_option("--table", table, "circular or straight")
        ->check(CLI::IsMember({"circular", "straight"}));
    add_common(encode);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        napkin::Params params{napkin::parse_rational(p_text)};
        napkin::TableKind kind =
            table == "circular" ? napkin::TableKind::Circular : napkin::TableKind::Linear;
        Output out;
        out.open(output_path);
        if (exact->parsed())
            return cmd_exact(n, params, kind, order, use_oracle, format, with_float, out);
        if (stats->parsed()) return cmd_stats(n, params, format, with_float, out);
        if (verify->parsed()) return cmd_verify(order, params, format, out);
        if (simulate->parsed()) return cmd_simulate(n, params, trials, seed, format, out);
        if (encode->parsed()) return cmd_encode(perm_text, kind, format, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
