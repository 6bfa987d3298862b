#include <hsinteg/report.hpp>

#include <fstream>
#include <set>

#include <hsinteg/errors.hpp>

namespace hsinteg
{

using nlohmann::json;

namespace
{

const json &require(const json &j, const char *key)
{
    if (!j.contains(key)) {
        throw UsageError(std::string("missing key '") + key + "'");
    }
    return j.at(key);
}

std::vector<std::string> string_list(const json &j, const char *key)
{
    const json &v = require(j, key);
    if (!v.is_array()) {
        throw UsageError(std::string("'") + key + "' must be an array of strings");
    }
    std::vector<std::string> out;
    for (const auto &e : v) {
        if (!e.is_string()) {
            throw UsageError(std::string("'") + key + "' must be an array of strings");
        }
        out.push_back(e.get<std::string>());
    }
    return out;
}

} // namespace

ProblemSpec problem_spec_from_json(const json &j)
{
    if (!j.is_object()) {
        throw UsageError("problem must be a JSON object");
    }
    static const std::set<std::string> known{"coefficients", "variables", "order", "ideal", "weights"};
    for (const auto &[key, value] : j.items()) {
        if (!known.count(key)) {
            throw UsageError("unknown problem key '" + key + "'");
        }
    }
    ProblemSpec spec;
    const json &c = require(j, "coefficients");
    if (!c.is_string()) {
        throw UsageError("'coefficients' must be a string");
    }
    spec.coefficients = c.get<std::string>();
    spec.variables = string_list(j, "variables");
    spec.ideal = string_list(j, "ideal");
    if (j.contains("order")) {
        if (!j.at("order").is_string()) {
            throw UsageError("'order' must be a string");
        }
        spec.order = j.at("order").get<std::string>();
    }
    if (j.contains("weights")) {
        std::vector<unsigned> w;
        for (const auto &e : j.at("weights")) {
            if (!e.is_number_unsigned()) {
                throw UsageError("'weights' must be an array of natural numbers");
            }
            w.push_back(e.get<unsigned>());
        }
        spec.weights = std::move(w);
    }
    return spec;
}

json to_json(const ProblemSpec &spec)
{
    json j;
    j["coefficients"] = spec.coefficients;
    j["variables"] = spec.variables;
    j["order"] = spec.order;
    j["ideal"] = spec.ideal;
    if (spec.weights) {
        j["weights"] = *spec.weights;
    }
    return j;
}

ProblemSpec load_problem_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open problem file '" + path + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError(path + ": " + e.what(), e.byte);
    }
    try {
        return problem_spec_from_json(j);
    } catch (const UsageError &e) {
        throw UsageError(path + ": " + e.what());
    }
}

Problem build_problem(const ProblemSpec &spec)
{
    const ContextPtr ctx =
        make_context(RingSpec::parse(spec.coefficients), VariableSet(spec.variables), MonomialOrder::parse(spec.order));
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < spec.ideal.size(); ++i) {
        try {
            gens.push_back(parse_polynomial(spec.ideal[i], ctx));
        } catch (const ParseError &e) {
            throw ParseError("ideal[" + std::to_string(i) + "]: " + e.message(), e.position());
        }
    }
    return Problem(ctx, std::move(gens), spec.weights);
}

json images_to_json(const HSDerivation &d)
{
    json j = json::object();
    const auto &vars = d.context()->vars;
    for (std::size_t r = 0; r < d.nvars(); ++r) {
        json row = json::array();
        for (const auto &c : d.images()[r].coeffs()) {
            row.push_back(c.to_string());
        }
        j[vars.name(r)] = std::move(row);
    }
    return j;
}

HSDerivation images_from_json(const json &j, const ContextPtr &ctx)
{
    if (!j.is_object()) {
        throw UsageError("certificate images must be an object keyed by variable");
    }
    std::vector<TruncatedSeries> images;
    for (const auto &name : ctx->vars.names()) {
        if (!j.contains(name)) {
            throw UsageError("certificate has no image for '" + name + "'");
        }
        std::vector<Polynomial> coeffs = polys_from_json(j.at(name), ctx);
        if (coeffs.empty()) {
            throw UsageError("empty image for '" + name + "'");
        }
        images.emplace_back(std::move(coeffs));
    }
    return HSDerivation::from_images(std::move(images));
}

json polys_to_json(const std::vector<Polynomial> &ps)
{
    json j = json::array();
    for (const auto &p : ps) {
        j.push_back(p.to_string());
    }
    return j;
}

std::vector<Polynomial> polys_from_json(const json &j, const ContextPtr &ctx)
{
    if (!j.is_array()) {
        throw UsageError("expected an array of polynomial strings");
    }
    std::vector<Polynomial> out;
    for (const auto &e : j) {
        if (!e.is_string()) {
            throw UsageError("expected an array of polynomial strings");
        }
        out.push_back(parse_polynomial(e.get<std::string>(), ctx));
    }
    return out;
}

json evidence_to_json(const MembershipEvidence &e)
{
    return json{{"mode", to_string(e.mode)},
                {"from_level", e.from_level},
                {"target", polys_to_json(e.target.entries())},
                {"normal_form", polys_to_json(e.normal_form.entries())}};
}

namespace
{

json header(const char *command, const ProblemSpec &spec)
{
    return json{{"tool", "hsinteg"}, {"version", tool_version}, {"command", command}, {"problem", to_json(spec)}};
}

json modes_json(const std::vector<LiftMode> &modes)
{
    json j = json::array();
    for (auto m : modes) {
        j.push_back(to_string(m));
    }
    return j;
}

} // namespace

json check_report_json(const ProblemSpec &spec, const IntegrabilityReport &report)
{
    json j = header("check", spec);
    j["trivial_ring"] = report.trivial_ring;
    json gens = json::array();
    for (const auto &g : report.generators) {
        gens.push_back(polys_to_json(g.coeffs()));
    }
    j["generators"] = std::move(gens);
    json levels = json::array();
    for (const auto &l : report.levels) {
        json e{{"level", l.level}, {"verdict", to_string(l.verdict)}, {"witness", nullptr}};
        if (l.witness) {
            e["witness"] = json{{"generator", l.witness->generator},
                                {"derivation", polys_to_json(report.generators[l.witness->generator].coeffs())},
                                {"evidence", evidence_to_json(l.witness->evidence)}};
        }
        json certs = json::array();
        for (const auto &c : l.certificates) {
            certs.push_back(json{{"generator", c.generator}, {"images", images_to_json(c.integral)}, {"modes", modes_json(c.modes)}});
        }
        e["certificates"] = std::move(certs);
        levels.push_back(std::move(e));
    }
    j["levels"] = std::move(levels);
    j["ledger"] = report.ledger;
    j["aborted"] = report.aborted;
    if (report.aborted) {
        j["status"] = "aborted: partial report, NOT a verdict";
        j["abort_reason"] = report.abort_reason;
    } else {
        j["status"] = "complete";
    }
    return j;
}

json integrate_report_json(const ProblemSpec &spec, const LogDerivation &delta, unsigned level, LiftMode mode,
                           const IntegrationResult &result)
{
    json j = header("integrate", spec);
    j["derivation"] = polys_to_json(delta.coeffs());
    j["target_level"] = level;
    j["mode"] = to_string(mode);
    j["status"] = to_string(result.status);
    j["reason"] = result.reason;
    j["integral"] = json{{"images", images_to_json(result.integral)}, {"modes", modes_json(result.modes)}};
    j["evidence"] = result.evidence ? evidence_to_json(*result.evidence) : json(nullptr);
    j["ledger"] = result.ledger;
    j["aborted"] = false;
    return j;
}

json euler_report_json(const ProblemSpec &spec, const std::vector<unsigned> &weights, unsigned level,
                       const HSDerivation &integral)
{
    json j = header("euler", spec);
    j["weights"] = weights;
    j["level"] = level;
    std::vector<Polynomial> chi;
    for (std::size_t r = 0; r < weights.size(); ++r) {
        chi.push_back(Polynomial::variable(integral.context(), r).scaled(integral.context()->ring.from_int(weights[r])));
    }
    j["derivation"] = polys_to_json(chi);
    j["integral"] = json{{"images", images_to_json(integral)}};
    j["aborted"] = false;
    return j;
}

namespace
{

class Verifier
{
public:
    explicit Verifier(const json &report)
        : spec_(problem_spec_from_json(require(report, "problem"))), problem_(build_problem(spec_)),
          ctx_(problem_.context())
    {
    }

    void certificate(const json &images, const std::vector<Polynomial> &delta, std::optional<unsigned> length,
                     const std::string &label)
    {
        ++out.certificates;
        const HSDerivation d = images_from_json(images, ctx_);
        if (length && d.length() != *length) {
            out.failures.push_back(label + ": length " + std::to_string(d.length()) + ", expected " +
                                   std::to_string(*length));
            return;
        }
        if (!verify_certificate(d, delta, problem_)) {
            out.failures.push_back(label + ": not a logarithmic integral of the claimed derivation");
        }
    }

    // The stored normal form must be nonzero and reproduced by a fresh
    // reduction; with the integral at hand the target is recomputed too.
    void evidence(const json &ev, const std::optional<HSDerivation> &integral, const std::string &label)
    {
        ++out.evidence;
        const LiftMode mode = parse_lift_mode(require(ev, "mode").get<std::string>());
        const ModuleVector target(ctx_, polys_from_json(require(ev, "target"), ctx_));
        const ModuleVector claimed(ctx_, polys_from_json(require(ev, "normal_form"), ctx_));
        if (target.rank() != problem_.ideal().size() || claimed.rank() != target.rank()) {
            out.failures.push_back(label + ": evidence vectors have the wrong rank");
            return;
        }
        const ModuleVector nf = normal_form_with_lift(target, problem_.extension_module(mode)).remainder;
        if (nf.is_zero() || !(nf == claimed)) {
            out.failures.push_back(label + ": normal form not reproduced");
            return;
        }
        if (integral) {
            const unsigned n = integral->length();
            const HSDerivation padded = taylor_extend(*integral, n + 1);
            for (std::size_t s = 0; s < problem_.ideal().size(); ++s) {
                if (!(padded.component(n + 1, problem_.ideal()[s]) == target[s])) {
                    out.failures.push_back(label + ": target does not match the stored integral");
                    return;
                }
            }
        }
    }

    const Problem &problem() const
    {
        return problem_;
    }
    const ContextPtr &context() const
    {
        return ctx_;
    }

    VerifyOutcome out;

private:
    ProblemSpec spec_;
    Problem problem_;
    ContextPtr ctx_;
};

} // namespace

VerifyOutcome verify_report(const json &report)
{
    Verifier v(report);
    const auto &ctx = v.context();
    const std::string command = require(report, "command").get<std::string>();
    if (command == "check") {
        std::vector<std::vector<Polynomial>> gens;
        for (const auto &g : require(report, "generators")) {
            gens.push_back(polys_from_json(g, ctx));
            LogDerivation(v.problem(), gens.back());
        }
        for (const auto &level : require(report, "levels")) {
            const unsigned n = require(level, "level").get<unsigned>();
            for (const auto &c : require(level, "certificates")) {
                const std::size_t g = require(c, "generator").get<std::size_t>();
                if (g >= gens.size()) {
                    throw UsageError("certificate names a missing generator");
                }
                v.certificate(require(c, "images"), gens[g], n,
                              "level " + std::to_string(n) + " generator " + std::to_string(g));
            }
            const json &w = require(level, "witness");
            if (!w.is_null()) {
                v.evidence(require(w, "evidence"), std::nullopt, "level " + std::to_string(n) + " witness");
            }
        }
    } else if (command == "integrate") {
        const auto delta = polys_from_json(require(report, "derivation"), ctx);
        const json &integral = require(require(report, "integral"), "images");
        const std::string status = require(report, "status").get<std::string>();
        if (status == "YES") {
            v.certificate(integral, delta, require(report, "target_level").get<unsigned>(), "certificate");
        } else {
            v.certificate(integral, delta, std::nullopt, "partial integral");
        }
        const json &ev = require(report, "evidence");
        if (!ev.is_null()) {
            v.evidence(ev, images_from_json(integral, ctx), "evidence");
        }
    } else if (command == "euler") {
        const auto delta = polys_from_json(require(report, "derivation"), ctx);
        v.certificate(require(require(report, "integral"), "images"), delta, require(report, "level").get<unsigned>(),
                      "euler certificate");
    } else {
        throw UsageError("cannot verify a '" + command + "' report");
    }
    return v.out;
}

} // namespace hsinteg
