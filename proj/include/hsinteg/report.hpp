#ifndef HSINTEG_REPORT_HPP
#define HSINTEG_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <hsinteg/integ.hpp>

namespace hsinteg
{

inline constexpr const char *tool_version = "1.0.0";

/// Problem file contents before parsing the polynomials.
struct ProblemSpec {
    std::string coefficients;
    std::vector<std::string> variables;
    std::string order = "degrevlex";
    std::vector<std::string> ideal;
    std::optional<std::vector<unsigned>> weights;
};

// Throws UsageError naming the offending key.
ProblemSpec problem_spec_from_json(const nlohmann::json &j);
nlohmann::json to_json(const ProblemSpec &spec);
// Reads and parses a problem file; JSON syntax errors carry line and column.
ProblemSpec load_problem_file(const std::string &path);
// Polynomial parse errors name the ideal entry and character position.
Problem build_problem(const ProblemSpec &spec);

// {"x": ["x", c_1, ..., c_n], ...}
nlohmann::json images_to_json(const HSDerivation &d);
HSDerivation images_from_json(const nlohmann::json &j, const ContextPtr &ctx);

nlohmann::json polys_to_json(const std::vector<Polynomial> &ps);
std::vector<Polynomial> polys_from_json(const nlohmann::json &j, const ContextPtr &ctx);

nlohmann::json evidence_to_json(const MembershipEvidence &e);

nlohmann::json check_report_json(const ProblemSpec &spec, const IntegrabilityReport &report);
nlohmann::json integrate_report_json(const ProblemSpec &spec, const LogDerivation &delta, unsigned level, LiftMode mode,
                                     const IntegrationResult &result);
nlohmann::json euler_report_json(const ProblemSpec &spec, const std::vector<unsigned> &weights, unsigned level,
                                 const HSDerivation &integral);

/// Outcome of re-checking every certificate and evidence blob in a report.
struct VerifyOutcome {
    std::size_t certificates = 0;
    std::size_t evidence = 0;
    std::vector<std::string> failures;
};

VerifyOutcome verify_report(const nlohmann::json &report);

} // namespace hsinteg

#endif
