// g2an: numeric certification of the genus-two G-function identities for the
// A_n singularity Frobenius manifolds.
//
//   g2an verify    run the identity suite over seeded random parameter points
//   g2an eval      evaluate the G^(2) data at a user-supplied point and jet
//   g2an residues  compare every tabulated closed residue form to the oracle
//
// Exit codes: 0 all gating checks pass, 1 mathematical failure, 2 usage error.

#include "g2an/errors.hpp"
#include "g2an/frobenius.hpp"
#include "g2an/g2.hpp"
#include "g2an/json_io.hpp"
#include "g2an/residues.hpp"
#include "g2an/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace {

using nlohmann::json;
using namespace g2an;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    long precision_bits = kDefaultPrecisionBits;
    std::uint64_t seed = 42;
    int threads = 1;
    std::string input_file;
    std::string output_file;
    bool json_output = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input) {
    cmd->add_option("--precision-bits", o.precision_bits, "Working precision in bits (>= 128)");
    cmd->add_option("--seed", o.seed, "Seed for the deterministic sampler");
    cmd->add_option("--threads", o.threads, "Worker count (output is schedule-independent)");
    cmd->add_option("--output", o.output_file, "Write the JSON result to this file");
    cmd->add_flag("--json", o.json_output, "Emit machine-readable JSON on stdout");
    if (with_input) cmd->add_option("--input", o.input_file, "Input JSON file");
}

int check_precision(const CommonOpts& o) {
    if (o.precision_bits < 128) {
        std::cerr << "error: --precision-bits must be at least 128\n";
        return kExitUsage;
    }
    return kExitOk;
}

void write_out(const CommonOpts& o, const json& doc, bool force_stdout_json) {
    if (!o.output_file.empty()) {
        std::ofstream f(o.output_file);
        f << doc.dump(2) << "\n";
    }
    if (o.json_output || force_stdout_json) std::cout << doc.dump(2) << "\n";
}

json read_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open input file '" + path + "'");
    json j;
    f >> j;
    return j;
}

int cmd_verify(const CommonOpts& o, int n_filter, int trials, std::optional<double> tol) {
    if (int rc = check_precision(o)) return rc;
    if (n_filter != 0 && (n_filter < 1 || n_filter > 8)) {
        std::cerr << "error: --n must be between 1 and 8\n";
        return kExitUsage;
    }
    if (tol && *tol <= 0) {
        std::cerr << "error: --tol must be positive\n";
        return kExitUsage;
    }

    SuiteConfig cfg;
    cfg.seed = o.seed;
    cfg.precision_bits = o.precision_bits;
    cfg.threads = o.threads;
    cfg.tolerance_override = tol;
    if (n_filter != 0) cfg.n_filter = std::vector<int>{n_filter};
    if (trials > 0) cfg.trials_override = trials;

    VerificationReport report = run_suite(default_registry(o.precision_bits), cfg);
    json doc = report_to_json(report);
    write_out(o, doc, false);

    if (!o.json_output) {
        // one line per (check, n): worst trial
        std::map<std::pair<std::string, int>, std::pair<bool, std::string>> worst;
        for (const auto& e : report.entries) {
            auto key = std::make_pair(e.check_id, e.n);
            auto it = worst.find(key);
            if (it == worst.end())
                worst[key] = {e.passed, e.rel_residual};
            else if (!e.passed)
                it->second = {false, e.rel_residual};
        }
        for (const auto& [key, val] : worst)
            std::printf("%-4s %-28s n=%d  rel=%s\n", val.first ? "ok" : "FAIL", key.first.c_str(),
                        key.second, val.second.c_str());
        std::printf("checks: %d total, %d passed, %d failed (gating), %d informational; %.1fs\n",
                    report.summary.total, report.summary.passed, report.summary.failed,
                    report.summary.informational_failed, report.summary.wall_time_seconds);
    }
    return report.all_gating_passed() ? kExitOk : kExitMathFailure;
}

json termsum_to_json(const TermSum& t) {
    return json{{"value", complex_to_json(t.value)},
                {"termscale", t.termscale.to_decimal(40)},
                {"rel_residual", t.rel_residual().to_decimal(40)}};
}

int cmd_eval(const CommonOpts& o) {
    if (int rc = check_precision(o)) return rc;
    if (o.input_file.empty()) {
        std::cerr << "error: eval requires --input FILE with {\"n\", \"t\", \"ux\", \"uxx\"}\n";
        return kExitUsage;
    }
    json in;
    ParamPoint point;
    Jet2 jet;
    try {
        in = read_input(o.input_file);
        point = param_point_from_json(in, o.precision_bits);
        jet = jet_from_json(in, o.precision_bits);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        FrobeniusPoint fp = build_point(point);
        const int n = fp.n;

        json out;
        out["n"] = n;
        auto cx_list = [](const std::vector<BigComplex>& v) {
            json a = json::array();
            for (const auto& x : v) a.push_back(complex_to_json(x));
            return a;
        };
        out["z"] = cx_list(fp.z);
        out["u"] = cx_list(fp.u);
        out["hsq"] = cx_list(fp.hsq);
        out["h"] = cx_list(fp.h);
        out["H"] = cx_list(fp.H);
        json ctab = json::array();
        for (int i = 0; i < n; ++i) {
            json row = json::object();
            for (int k = 3; k <= fp.c_max(); ++k)
                row[std::to_string(k)] = complex_to_json(fp.C(i, k));
            ctab.push_back(std::move(row));
        }
        out["C"] = std::move(ctab);

        json gi = json::array(), qi = json::array();
        for (int i = 0; i < n; ++i) gi.push_back(termsum_to_json(g2_Gi(fp, jet, i)));
        for (int i = 0; i < n; ++i) qi.push_back(termsum_to_json(g2_Qi(fp, i)));
        json gij = json::array(), pij = json::array();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i != j) {
                    json row = termsum_to_json(g2_Gij(fp, i, j));
                    row["i"] = i;
                    row["j"] = j;
                    gij.push_back(std::move(row));
                }
                json prow = termsum_to_json(g2_Pij(fp, i, j));
                prow["i"] = i;
                prow["j"] = j;
                pij.push_back(std::move(prow));
            }
        out["Gi"] = std::move(gi);
        out["Gij"] = std::move(gij);
        out["Pij"] = std::move(pij);
        out["Qi"] = std::move(qi);
        out["G2_total"] = termsum_to_json(g2_total(fp, jet));

        write_out(o, out, true);
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    }
}

int cmd_residues(const CommonOpts& o, int n) {
    if (int rc = check_precision(o)) return rc;
    ParamPoint point;
    try {
        if (!o.input_file.empty()) {
            point = param_point_from_json(read_input(o.input_file), o.precision_bits);
        } else {
            if (n < 1 || n > 8) {
                std::cerr << "error: --n must be between 1 and 8\n";
                return kExitUsage;
            }
            point = sample_admissible(n, o.seed, 1, o.precision_bits).at(0);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        FrobeniusPoint fp = build_point(point);
        const long prec = o.precision_bits;
        json rows = json::array();
        BigReal worst(0L, prec);

        auto push = [&](const char* formula, int i, int j, int p, int q, const TermSum& closed,
                        const BigComplex& oracle) {
            BigReal rel = compare_against_scale(closed.value, oracle, closed.termscale);
            worst = max(worst, rel);
            json row{{"formula", formula}, {"i", i},
                     {"p", p},             {"closed", complex_to_json(closed.value)},
                     {"oracle", complex_to_json(oracle)}, {"rel_diff", rel.to_decimal(40)}};
            if (j >= 0) row["j"] = j;
            if (q > 0) row["q"] = q;
            rows.push_back(std::move(row));
        };

        for (int i = 0; i < fp.n; ++i) {
            for (int p = 2; p <= 6; ++p) {
                push("R1", i, -1, p, 0, closed_R1_terms(fp, i, p), oracle_R1(fp, i, p));
                push("R2", i, -1, p, 0, closed_R2_terms(fp, i, p), oracle_R2(fp, i, p));
            }
            for (int p = 4; p <= 8; ++p)
                push("R3", i, -1, p, 0, closed_R3_terms(fp, i, p), oracle_R3(fp, i, p));
            for (auto [p, q] : {std::pair{5, 3}, {2, 4}, {3, 4}, {4, 4}})
                push("R4", i, -1, p, q, closed_R4_terms(fp, i, p, q), oracle_R4(fp, i, p, q));
            for (int j = 0; j < fp.n; ++j) {
                if (i == j) continue;
                for (auto [p, q] : {std::pair{2, 2}, {2, 4}, {4, 2}})
                    push("R5", i, j, p, q, closed_R5_terms(fp, i, j, p, q),
                         oracle_R5(fp, i, j, p, q));
                for (auto [p, q] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {4, 2}})
                    push("R6", i, j, p, q, closed_R6_terms(fp, i, j, p, q),
                         oracle_R6(fp, i, j, p, q));
            }
        }

        json doc{{"point", param_point_to_json(point)},
                 {"rows", rows},
                 {"max_rel_diff", worst.to_decimal(40)}};
        write_out(o, doc, false);
        if (!o.json_output) {
            for (const auto& row : doc["rows"]) {
                std::ostringstream line;
                line << row["formula"].get<std::string>() << " i=" << row["i"].get<int>();
                if (row.contains("j")) line << " j=" << row["j"].get<int>();
                line << " p=" << row["p"].get<int>();
                if (row.contains("q")) line << " q=" << row["q"].get<int>();
                line << "  rel_diff=" << row["rel_diff"].get<std::string>();
                std::cout << line.str() << "\n";
            }
            std::cout << "max relative difference: " << doc["max_rel_diff"].get<std::string>()
                      << "\n";
        }
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-precision verification engine for the A_n genus-two G-function"};
    app.require_subcommand(0, 1);

    CommonOpts vopts, eopts, ropts;
    int verify_n = 0;
    int verify_trials = 0;
    int residues_n = 2;
    std::optional<double> tol;
    double tol_value = 0.0;

    CLI::App* verify = app.add_subcommand("verify", "Run the identity suite");
    add_common(verify, vopts, false);
    verify->add_option("--n", verify_n, "Restrict to one manifold dimension (1..8)");
    verify->add_option("--trials", verify_trials, "Samples per (check, n)");
    CLI::Option* tol_opt = verify->add_option("--tol", tol_value, "Override every gating tolerance");

    CLI::App* eval = app.add_subcommand("eval", "Evaluate G^(2) data at a point");
    add_common(eval, eopts, true);

    CLI::App* residues = app.add_subcommand("residues", "Closed residue forms vs series oracle");
    add_common(residues, ropts, true);
    residues->add_option("--n", residues_n, "Dimension of the sampled point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (tol_opt->count() > 0) tol = tol_value;

    try {
        if (eval->parsed()) return cmd_eval(eopts);
        if (residues->parsed()) return cmd_residues(ropts, residues_n);
        return cmd_verify(vopts, verify_n, verify_trials, tol);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
