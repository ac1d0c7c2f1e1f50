// yangirr: irreducibility criteria and oracle for tensor products of
// elementary Yangian modules.
#include "yangirr/cli.hpp"
#include "yangirr/errors.hpp"
#include "yangirr/yangian.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace yangirr;
using yangirr::cli::json;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitDisagree = 3;

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + out);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Irreducibility of tensor products of elementary Yangian modules"};
    app.require_subcommand(1);

    std::string input, out, criterion, window, format = "json";
    std::size_t cap = 0;
    bool with_matrix = false, serial = false;

    auto* diagram = app.add_subcommand("diagram", "Boxes, contents, counts and Drinfeld roots of one spec");
    diagram->add_option("file", input, "JSON spec")->required();

    auto* check = app.add_subcommand("check", "Evaluate a combinatorial criterion");
    check->add_option("file", input, "JSON spec list")->required();
    auto* g33 = check->add_flag_callback("--thm33", [&] { criterion = "thm33"; }, "sufficient criterion");
    auto* g34 = check->add_flag_callback("--thm34", [&] { criterion = "thm34"; }, "rectangle criterion");
    auto* g23 = check->add_flag_callback("--thm23", [&] { criterion = "thm23"; }, "intertwiner singular set");
    g33->excludes(g34, g23);
    g34->excludes(g23);

    auto* oracle = app.add_subcommand("oracle", "Matrix oracle next to the criteria");
    oracle->add_option("file", input, "JSON spec list")->required();
    oracle->add_option("--cap", cap, "dimension cap (default from YANGIRR_DIM_CAP or 64)");

    auto* inter = app.add_subcommand("intertwiner", "Leading coefficient of the R-matrix product for two specs");
    inter->add_option("file", input, "JSON list of two specs")->required();
    inter->add_flag("--matrix", with_matrix, "include the matrix entries");

    auto* sweep = app.add_subcommand("sweep", "Grid of criteria and oracle verdicts over integer h shifts");
    sweep->add_option("file", input, "JSON job")->required();
    sweep->add_option("--window", window, "integer window a..b (overrides the job)");
    sweep->add_option("--cap", cap, "dimension cap");
    sweep->add_option("--out", out, "output file (default stdout)");
    sweep->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sweep->add_flag("--serial", serial, "compute rows on one thread");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*diagram) {
            std::cout << cli::diagram_report(read_json(input)).dump(2) << '\n';
        } else if (*check) {
            if (criterion.empty()) throw Error(ErrorKind::InvalidInput, "pass one of --thm33, --thm34, --thm23");
            std::cout << cli::check_report(read_json(input), criterion).dump(2) << '\n';
        } else if (*oracle) {
            const json rep = cli::oracle_report(read_json(input), cap);
            std::cout << rep.dump(2) << '\n';
            if (!rep["agree"].get<bool>()) return kExitDisagree;
        } else if (*inter) {
            std::cout << cli::intertwiner_report(read_json(input), with_matrix).dump(2) << '\n';
        } else if (*sweep) {
            cli::SweepJob job = cli::parse_job(read_json(input));
            if (!window.empty()) std::tie(job.lo, job.hi) = cli::parse_window(window);
            job.cap = cap;
            const auto rows = cli::run_sweep(job, !serial);
            emit(format == "csv" ? cli::rows_csv(rows) : cli::rows_json(rows).dump(2) + "\n", out);
            for (const auto& r : rows)
                if (!r.agree) {
                    std::cerr << "disagreement in row " << r.spec_ids << " h=" << to_string(r.h_difference) << '\n';
                    return kExitDisagree;
                }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Internal ? 1 : kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return 0;
}
