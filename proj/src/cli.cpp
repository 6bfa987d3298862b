#include <hsinteg/cli.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <hsinteg/errors.hpp>
#include <hsinteg/limits.hpp>
#include <hsinteg/report.hpp>

namespace hsinteg
{

using nlohmann::json;

namespace
{

std::vector<std::string> split(const std::string &text, const std::string &seps)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (seps.find(c) != std::string::npos) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto &s : out) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    }
    return out;
}

std::string tuple_string(const std::vector<Polynomial> &ps)
{
    std::string out = "(";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        out += (i ? ", " : "") + ps[i].to_string();
    }
    return out + ")";
}

// Ideal generators print smallest leading term first.
std::vector<Polynomial> ascending(std::vector<Polynomial> ps)
{
    std::reverse(ps.begin(), ps.end());
    return ps;
}

std::string series_string(const TruncatedSeries &s)
{
    std::string out = s[0].to_string();
    for (unsigned i = 1; i <= s.level(); ++i) {
        if (s[i].is_zero()) {
            continue;
        }
        out += " + (" + s[i].to_string() + ")*t";
        if (i > 1) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

void print_images(std::ostream &out, const HSDerivation &d, const std::string &indent)
{
    const auto &vars = d.context()->vars;
    for (std::size_t r = 0; r < d.nvars(); ++r) {
        out << indent << vars.name(r) << " -> " << series_string(d.images()[r]) << "\n";
    }
}

std::string modes_string(const std::vector<LiftMode> &modes)
{
    std::string out;
    for (std::size_t i = 0; i < modes.size(); ++i) {
        out += (i ? ", " : "") + to_string(modes[i]);
    }
    return modes.empty() ? "none" : out;
}

void print_evidence(std::ostream &out, const MembershipEvidence &e)
{
    out << "  evidence (" << to_string(e.mode) << " lift of a length " << e.from_level
        << " integral): target " << tuple_string(e.target.entries()) << " has nonzero normal form "
        << tuple_string(e.normal_form.entries()) << "\n";
}

std::string problem_line(const ProblemSpec &spec)
{
    std::string out = spec.coefficients + "[";
    for (std::size_t i = 0; i < spec.variables.size(); ++i) {
        out += (i ? ", " : "") + spec.variables[i];
    }
    out += "] / (";
    for (std::size_t i = 0; i < spec.ideal.size(); ++i) {
        out += (i ? ", " : "") + spec.ideal[i];
    }
    return out + "), order " + spec.order;
}

struct Options {
    std::string problem_file;
    std::string ring;
    std::string vars;
    std::string ideal;
    std::string order = "degrevlex";
    bool json = false;
    std::size_t max_pairs = 0;
    unsigned max_degree = 0;
    double timeout = 0;

    unsigned max_level = 4;
    std::string derivation;
    unsigned level = 0;
    std::string mode = "free";
    std::string ledger_from;
    std::string weights;
    std::string poly;
    std::string by;
    std::string report;
};

struct Flags {
    CLI::Option *problem = nullptr;
    CLI::Option *ring = nullptr;
    CLI::Option *vars = nullptr;
    CLI::Option *ideal = nullptr;
    CLI::Option *order = nullptr;
    CLI::Option *max_pairs = nullptr;
    CLI::Option *max_degree = nullptr;
    CLI::Option *timeout = nullptr;
    CLI::Option *weights = nullptr;
    CLI::Option *ledger_from = nullptr;
};

void add_common(CLI::App *sub, Options &o, Flags &f)
{
    f.problem = sub->add_option("--problem", o.problem_file, "Problem file (JSON)");
    f.ring = sub->add_option("--ring", o.ring, "Coefficients: F2, F3, Fp:<p>, Q or Z");
    f.vars = sub->add_option("--vars", o.vars, "Comma-separated variable names");
    f.ideal = sub->add_option("--ideal", o.ideal, "Comma-separated ideal generators");
    f.order = sub->add_option("--order", o.order, "degrevlex, deglex or lex");
    sub->add_flag("--json", o.json, "Machine-readable output");
    f.max_pairs = sub->add_option("--max-pairs", o.max_pairs, "Groebner pair budget");
    f.max_degree = sub->add_option("--max-degree", o.max_degree, "Degree guard");
    f.timeout = sub->add_option("--timeout-seconds", o.timeout, "Wall-clock limit");
}

ProblemSpec problem_spec(const Options &o, const Flags &f)
{
    const bool inline_given = f.ring->count() || f.vars->count() || f.ideal->count();
    if (f.problem->count()) {
        if (inline_given) {
            throw UsageError("give either --problem or --ring/--vars/--ideal, not both");
        }
        ProblemSpec spec = load_problem_file(o.problem_file);
        if (f.order->count()) {
            spec.order = o.order;
        }
        return spec;
    }
    if (!f.ring->count() || !f.vars->count()) {
        throw UsageError("a problem needs --problem FILE or --ring and --vars (with --ideal)");
    }
    ProblemSpec spec;
    spec.coefficients = o.ring;
    spec.variables = split(o.vars, ",");
    if (!o.ideal.empty()) {
        spec.ideal = split(o.ideal, ",;");
    }
    spec.order = o.order;
    return spec;
}

void apply_limits(const Options &o, const Flags &f)
{
    limits() = Limits{};
    if (f.max_pairs->count()) {
        limits().max_pairs = o.max_pairs;
    }
    if (f.max_degree->count()) {
        limits().max_degree = o.max_degree;
    }
    if (f.timeout->count()) {
        if (o.timeout <= 0) {
            throw UsageError("--timeout-seconds must be positive");
        }
        limits().deadline =
            std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(o.timeout));
    }
}

std::vector<unsigned> parse_weights(const std::string &text)
{
    std::vector<unsigned> out;
    for (const auto &piece : split(text, ",")) {
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos || piece.size() > 9) {
            throw UsageError("weights must be comma-separated natural numbers, got '" + text + "'");
        }
        out.push_back(static_cast<unsigned>(std::stoul(piece)));
    }
    return out;
}

json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError(path + ": " + e.what(), e.byte);
    }
}

int cmd_check(const Options &o, const ProblemSpec &spec, const Problem &problem, std::ostream &out)
{
    const IntegrabilityReport rep = check_equality(problem, o.max_level);
    if (o.json) {
        out << check_report_json(spec, rep).dump(2) << "\n";
        return rep.aborted ? exit_resource : exit_ok;
    }
    out << "problem: " << problem_line(spec) << "\n";
    if (rep.trivial_ring) {
        out << "1 lies in the ideal: A is the zero ring and every level is vacuously TRUE\n";
    }
    out << "generators of Der(log I):\n";
    for (std::size_t i = 0; i < rep.generators.size(); ++i) {
        out << "  [" << i << "] " << tuple_string(rep.generators[i].coeffs()) << "\n";
    }
    for (const auto &l : rep.levels) {
        out << "level " << l.level << ": " << to_string(l.verdict);
        if (l.witness) {
            out << "  witness [" << l.witness->generator << "] "
                << tuple_string(rep.generators[l.witness->generator].coeffs()) << "\n";
            print_evidence(out, l.witness->evidence);
        } else {
            out << "\n";
        }
    }
    out << "ledger:";
    for (unsigned j : rep.ledger) {
        out << " Ider(A;" << j << ")=Der(A)";
    }
    out << "\n";
    if (rep.aborted) {
        out << "aborted: " << rep.abort_reason << "\npartial report, NOT a verdict beyond the levels listed\n";
        return exit_resource;
    }
    return exit_ok;
}

int cmd_derlog(const Options &o, const ProblemSpec &spec, const Problem &problem, std::ostream &out)
{
    const auto gens = log_derivations(problem);
    if (o.json) {
        json g = json::array();
        for (const auto &d : gens) {
            g.push_back(polys_to_json(d.coeffs()));
        }
        out << json{{"tool", "hsinteg"}, {"version", tool_version}, {"command", "derlog"}, {"problem", to_json(spec)},
                    {"generators", g}}
                   .dump(2)
            << "\n";
        return exit_ok;
    }
    for (const auto &d : gens) {
        out << tuple_string(d.coeffs()) << "\n";
    }
    return exit_ok;
}

int cmd_integrate(const Options &o, const ProblemSpec &spec, const Problem &problem, const Flags &f, std::ostream &out)
{
    const LogDerivation delta = LogDerivation::parse(problem, o.derivation);
    const LiftMode mode = parse_lift_mode(o.mode);
    std::optional<std::vector<unsigned>> ledger;
    if (f.ledger_from->count()) {
        const json rep = read_json_file(o.ledger_from);
        if (!rep.contains("ledger") || !rep.contains("problem") ||
            !(problem_spec_from_json(rep.at("problem")).ideal == spec.ideal)) {
            throw UsageError("'" + o.ledger_from + "' is not a report for this problem");
        }
        ledger = rep.at("ledger").get<std::vector<unsigned>>();
    }
    const IntegrationResult res = integrate_derivation(delta, problem, o.level, mode, ledger ? &*ledger : nullptr);
    if (o.json) {
        out << integrate_report_json(spec, delta, o.level, mode, res).dump(2) << "\n";
        return exit_ok;
    }
    out << "derivation " << tuple_string(delta.coeffs()) << " to level " << o.level << " (" << to_string(mode)
        << "): " << to_string(res.status) << "\n";
    if (!res.reason.empty()) {
        out << "  " << res.reason << "\n";
    }
    out << (res.status == IntegrationStatus::yes ? "certificate" : "longest integral") << " (length "
        << res.integral.length() << ", modes " << modes_string(res.modes) << "):\n";
    print_images(out, res.integral, "  ");
    if (res.evidence) {
        print_evidence(out, *res.evidence);
    }
    return exit_ok;
}

int cmd_euler(const Options &o, const ProblemSpec &spec, const Problem &problem, const Flags &f, std::ostream &out)
{
    std::vector<unsigned> weights;
    if (f.weights->count()) {
        weights = parse_weights(o.weights);
    } else if (problem.weights()) {
        weights = *problem.weights();
    } else {
        throw UsageError("euler needs --weights or weights in the problem file");
    }
    const HSDerivation d = euler_integral(weights, problem, o.level);
    if (o.json) {
        out << euler_report_json(spec, weights, o.level, d).dump(2) << "\n";
        return exit_ok;
    }
    out << "Euler integral to level " << o.level << ":\n";
    print_images(out, d, "  ");
    return exit_ok;
}

json ideal_json(const char *command, const ProblemSpec &spec, const char *key, const std::vector<Polynomial> &ps)
{
    return json{{"tool", "hsinteg"}, {"version", tool_version}, {"command", command}, {"problem", to_json(spec)},
                {key, polys_to_json(ps)}};
}

int cmd_gb(const Options &o, const ProblemSpec &spec, const Problem &problem, std::ostream &out)
{
    std::vector<Polynomial> basis;
    for (const auto &g : problem.ideal_basis().generators()) {
        basis.push_back(g[0]);
    }
    basis = ascending(std::move(basis));
    if (o.json) {
        out << ideal_json("gb", spec, "basis", basis).dump(2) << "\n";
    } else {
        out << tuple_string(basis) << "\n";
    }
    return exit_ok;
}

int cmd_nf(const Options &o, const ProblemSpec &spec, const Problem &problem, std::ostream &out)
{
    const Polynomial f = parse_polynomial(o.poly, problem.context());
    const Polynomial r = normal_form(f, problem.ideal_basis());
    const auto lift = r.is_zero() ? ideal_membership(f, problem.ideal_basis()) : std::nullopt;
    if (o.json) {
        json j{{"tool", "hsinteg"},     {"version", tool_version}, {"command", "nf"},
               {"problem", to_json(spec)}, {"polynomial", f.to_string()}, {"normal_form", r.to_string()},
               {"member", r.is_zero()}};
        j["lift"] = lift ? polys_to_json(*lift) : json(nullptr);
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    out << "normal form: " << r.to_string() << "\n";
    if (lift) {
        out << "member: yes, lift " << tuple_string(*lift) << "\n";
    } else {
        out << "member: no\n";
    }
    return exit_ok;
}

int cmd_quotient(const Options &o, const ProblemSpec &spec, const Problem &problem, std::ostream &out)
{
    const Polynomial g = parse_polynomial(o.by, problem.context());
    const auto q = ascending(ideal_quotient(problem.ideal(), g));
    if (o.json) {
        json j = ideal_json("quotient", spec, "quotient", q);
        j["by"] = g.to_string();
        out << j.dump(2) << "\n";
    } else {
        out << tuple_string(q) << "\n";
    }
    return exit_ok;
}

int cmd_jacobian(const Options &o, const ProblemSpec &spec, const Problem &problem, std::ostream &out)
{
    const JacobianData &jd = problem.jacobian();
    if (o.json) {
        json j = ideal_json("jacobian-ideal", spec, "minors", jd.minors);
        j["rank"] = jd.rank;
        j["generators"] = polys_to_json(jd.generators);
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    out << "rank " << jd.rank << "\n";
    out << "J = " << tuple_string(jd.generators) << "\n";
    return exit_ok;
}

int cmd_verify(const Options &o, std::ostream &out)
{
    const VerifyOutcome v = verify_report(read_json_file(o.report));
    if (o.json) {
        out << json{{"certificates", v.certificates}, {"evidence", v.evidence}, {"failures", v.failures},
                    {"verified", v.failures.empty()}}
                   .dump(2)
            << "\n";
    } else {
        out << "checked " << v.certificates << " certificate(s) and " << v.evidence << " evidence blob(s)\n";
        for (const auto &msg : v.failures) {
            out << "FAILED: " << msg << "\n";
        }
        out << (v.failures.empty() ? "all verified\n" : "verification failed\n");
    }
    return v.failures.empty() ? exit_ok : exit_verify_failed;
}

void report_abort(const Options &o, const std::string &command, const std::string &reason, std::ostream &out)
{
    if (o.json) {
        out << json{{"tool", "hsinteg"},
                    {"version", tool_version},
                    {"command", command},
                    {"aborted", true},
                    {"status", "aborted: partial report, NOT a verdict"},
                    {"abort_reason", reason}}
                   .dump(2)
            << "\n";
    } else {
        out << "aborted: " << reason << "\nNOT a verdict\n";
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Integrability of derivations by Hasse-Schmidt derivations over F_p, Q and Z", "hsinteg"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);
    Options o;
    Flags f;

    auto *check = app.add_subcommand("check", "Decide Der(A) = Ider(A;N) level by level");
    check->add_option("--max-level", o.max_level, "Highest level N to decide")->capture_default_str();
    auto *derlog = app.add_subcommand("derlog", "Print generators of Der(log I)");
    auto *integ = app.add_subcommand("integrate", "Greedy integration of one derivation");
    integ->add_option("--derivation", o.derivation, "Coefficients a_1,...,a_d")->required();
    integ->add_option("--level", o.level, "Target length")->required();
    integ->add_option("--mode", o.mode, "free or jacobian")->capture_default_str();
    auto *euler = app.add_subcommand("euler", "Euler vector field integral for quasi-homogeneous ideals");
    euler->add_option("--level", o.level, "Length of the integral")->required();
    auto *gb = app.add_subcommand("gb", "Reduced Groebner basis of the ideal");
    auto *nf = app.add_subcommand("nf", "Normal form and membership lift");
    nf->add_option("--poly", o.poly, "Polynomial to reduce")->required();
    auto *quot = app.add_subcommand("quotient", "Ideal quotient (I : g)");
    quot->add_option("--by", o.by, "The polynomial g")->required();
    auto *jac = app.add_subcommand("jacobian-ideal", "Jacobian rank and J^0_c + I");
    auto *verify = app.add_subcommand("verify", "Re-verify the certificates and evidence in a report");
    verify->add_option("--report", o.report, "Report file (JSON)")->required();
    verify->add_flag("--json", o.json, "Machine-readable output");

    const std::vector<CLI::App *> problem_commands{check, derlog, integ, euler, gb, nf, quot, jac};
    std::vector<Flags> per_command(problem_commands.size());
    for (std::size_t i = 0; i < problem_commands.size(); ++i) {
        add_common(problem_commands[i], o, per_command[i]);
    }
    CLI::Option *weights_opt = euler->add_option("--weights", o.weights, "Comma-separated weights");
    CLI::Option *ledger_opt = integ->add_option("--ledger-from", o.ledger_from, "Take the ledger from a check report");

    std::vector<const char *> argv{"hsinteg"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    CLI::App *active = app.get_subcommands().front();
    const std::string command = active->get_name();
    for (std::size_t i = 0; i < problem_commands.size(); ++i) {
        if (problem_commands[i] == active) {
            f = per_command[i];
        }
    }
    f.weights = weights_opt;
    f.ledger_from = ledger_opt;

    try {
        if (active == verify) {
            limits() = Limits{};
            return cmd_verify(o, out);
        }
        apply_limits(o, f);
        const ProblemSpec spec = problem_spec(o, f);
        const Problem problem = build_problem(spec);
        if (active == check) {
            return cmd_check(o, spec, problem, out);
        }
        if (active == derlog) {
            return cmd_derlog(o, spec, problem, out);
        }
        if (active == integ) {
            return cmd_integrate(o, spec, problem, f, out);
        }
        if (active == euler) {
            return cmd_euler(o, spec, problem, f, out);
        }
        if (active == gb) {
            return cmd_gb(o, spec, problem, out);
        }
        if (active == nf) {
            return cmd_nf(o, spec, problem, out);
        }
        if (active == quot) {
            return cmd_quotient(o, spec, problem, out);
        }
        return cmd_jacobian(o, spec, problem, out);
    } catch (const ResourceError &e) {
        report_abort(o, command, e.what(), out);
        return exit_resource;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const nlohmann::json::exception &e) {
        err << "error: malformed JSON content: " << e.what() << "\n";
        return exit_usage;
    } catch (const InternalError &e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

} // namespace hsinteg
