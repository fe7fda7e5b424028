#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "slicereg/domain.hpp"

namespace slicereg {

/// One invocation of the command-line front end.
struct JobSpec {
    std::string command;  ///< eval, exp, identities, sum-rule, sqrt, classify
    std::vector<nlohmann::json> functions;
    std::vector<Quaternion> points;
    std::vector<double> coeffs;  ///< real coefficients for sqrt
    PlanarDomain domain = PlanarDomain::rectangle(-2.0, 2.0, 2.0);
    GridSpec grid;
    double tol = 1e-9;
    double series_tol = 1e-12;

    /// Throws InputError unless the command is known, the grid is at least 2x2
    /// and both tolerances are positive.
    void validate() const;
};

JobSpec job_from_json(const nlohmann::json& j);

struct JobResult {
    int exit_code = 0;  ///< 0 ok, 1 identity violation or failed check, 2 input error
    nlohmann::json report;
};

/// Never throws: input errors become exit code 2 with an "error" field.
JobResult run(const JobSpec& spec);

/// Parses and runs a JSON job document.
JobResult run_json(const std::string& text);

/// Human-readable rendering of a report.
std::string render_text(const nlohmann::json& report);

/// Checks that `text` is a report produced by run(); returns an error message if not.
std::optional<std::string> check_report(const std::string& text);

}  // namespace slicereg
