#include <fstream>
#include <iostream>
#include <iterator>
#include <regex>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "slicereg/cli.hpp"
#include "slicereg/expr.hpp"

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::optional<std::string> read_file(const std::string& path) {
    if (path.empty() || path == "-") return read_all(std::cin);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    return read_all(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slicecalc: slice functions, star exponentials and square roots"};
    std::string command;
    std::string input;
    std::string output;
    std::optional<double> tol;
    std::optional<std::string> grid;
    std::optional<std::string> domain;
    std::optional<std::uint64_t> seed;
    bool as_json = false;
    std::optional<std::string> check;

    std::vector<std::string> positional;
    app.add_option("args", positional,
                   "[command] [input]: eval, exp, identities, sum-rule, sqrt or classify (overrides the job), "
                   "then the job file (JSON; stdin when omitted or '-')");
    app.add_option("--tol", tol, "evaluation tolerance");
    app.add_option("--grid", grid, "grid size NxM");
    app.add_option("--domain", domain, "whole, slit or rect:amin,amax,bmax");
    app.add_option("--seed", seed, "jitter the grid nodes with this seed");
    app.add_flag("--json", as_json, "print the JSON report");
    app.add_option("-o,--output", output, "write the report to this file");
    app.add_option("--check-report", check, "validate a report file and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    static const std::set<std::string> commands{"eval", "exp", "identities", "sum-rule", "sqrt", "classify"};
    std::size_t next = 0;
    if (next < positional.size() && commands.contains(positional[next])) command = positional[next++];
    if (next < positional.size()) input = positional[next++];
    if (next < positional.size()) {
        std::cerr << "unexpected argument '" << positional[next] << "'\n";
        return 2;
    }

    if (check) {
        const auto text = read_file(*check);
        if (!text) {
            std::cerr << "cannot read " << *check << '\n';
            return 2;
        }
        if (const auto err = slicereg::check_report(*text)) {
            std::cerr << "invalid report: " << *err << '\n';
            return 2;
        }
        std::cout << "report ok\n";
        return 0;
    }

    const auto text = read_file(input);
    if (!text) {
        std::cerr << "cannot read " << input << '\n';
        return 2;
    }

    slicereg::JobResult result;
    try {
        slicereg::JobSpec spec = slicereg::job_from_json(nlohmann::json::parse(*text));
        if (!command.empty()) spec.command = command;
        if (tol) spec.tol = *tol;
        if (domain) spec.domain = slicereg::parse_domain(*domain);
        if (seed) spec.grid.seed = *seed;
        if (grid) {
            std::smatch m;
            if (!std::regex_match(*grid, m, std::regex(R"((\d+)x(\d+))"))) {
                throw slicereg::InputError("--grid must look like NxM");
            }
            spec.grid.n_alpha = std::stoi(m[1]);
            spec.grid.n_beta = std::stoi(m[2]);
        }
        result = slicereg::run(spec);
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "malformed JSON: " << e.what() << '\n';
        return 2;
    } catch (const slicereg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    const std::string rendered = as_json ? result.report.dump(2) + "\n" : slicereg::render_text(result.report);
    if (output.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream(output) << rendered;
    }
    return result.exit_code;
}
