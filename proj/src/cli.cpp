#include "mpj/cli.hpp"

#include "mpj/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

namespace mpj::cli {

int exit_code(const Outcome& o)
{
    if (o.malformed)
        return exit_malformed;
    if (o.axiom_failure)
        return exit_axiom_failure;
    if (o.split_error)
        return exit_not_split;
    if (o.theorem_failure)
        return exit_theorem_failure;
    if (o.disagreement)
        return exit_disagreement;
    if (o.hypotheses_unmet)
        return exit_hypotheses_unmet;
    return exit_ok;
}

namespace {

bool all_pass(const NamedRecords& rs)
{
    for (const auto& [name, v] : rs)
        if (v.applicable && !v.pass)
            return false;
    return true;
}

SimplicityRecord simplicity_record(const ConnectionContext& ctx)
{
    SimplicityRecord s;
    try {
        const auto c = simplicity_criterion(ctx);
        s.applicable = true;
        s.simple = c.simple;
        s.strict_simple = c.strict_simple;
        s.reason = c.reason;
    } catch (const HypothesesUnmet& e) {
        s.reason = e.what();
    }
    return s;
}

} // namespace

PipelineResult run_pipeline(const AlgebraFile& f, const PipelineOptions& opts)
{
    PipelineResult res;
    ReportFile& r = res.report;
    r.name = f.name;
    r.dim = f.algebra.dim();
    r.basis = f.algebra.basis_names();

    AxiomOptions aopts;
    aopts.seed = opts.seed;
    aopts.exec = opts.exec;
    const AxiomReport axioms = verify_axioms(f.algebra, aopts);
    r.axioms = to_records(axioms);
    if (axioms.non_lie_certificate)
        r.non_lie_certificate = WitnessRecord{axioms.non_lie_certificate->indices, axioms.non_lie_certificate->text};
    if (!axioms.all_pass()) {
        res.outcome.axiom_failure = true;
        return res;
    }

    try {
        res.rd.emplace(root_decomposition(f.algebra, f.masa_subspace()));
    } catch (const Error& e) {
        res.outcome.split_error = true;
        r.error = e.what();
        return res;
    }
    r.split = to_record(*res.rd, verify_split(*res.rd), verify_rootspace_products(*res.rd, opts.exec));
    if (!all_pass(r.split->verdicts)) {
        res.outcome.theorem_failure = true;
        return res;
    }
    if (!opts.decompose)
        return res;

    try {
        res.ctx.emplace(*res.rd, opts.exec);
    } catch (const EquivalenceViolation& e) {
        res.outcome.theorem_failure = true;
        r.error = e.what();
        return res;
    }
    DecompositionReport d = decompose(*res.ctx, opts.exec);
    if (opts.hooks && opts.hooks->tamper_decomposition)
        opts.hooks->tamper_decomposition(d);
    r.decomposition = to_record(f.algebra, d, simplicity_record(*res.ctx));
    if (d.theorem_failure())
        res.outcome.theorem_failure = true;
    return res;
}

// ---- text rendering ----

namespace {

constexpr int kLabelWidth = 24;

std::string root_text(const RootRecord& r)
{
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i)
        s += (i ? ", " : "") + r[i];
    return s + ")";
}

std::string roots_text(const std::vector<RootRecord>& rs)
{
    std::string s = "{";
    for (std::size_t i = 0; i < rs.size(); ++i)
        s += (i ? ", " : "") + root_text(rs[i]);
    return s + "}";
}

std::string list_text(const std::vector<std::string>& xs)
{
    if (xs.empty())
        return "0";
    std::string s = "span{";
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? "; " : "") + xs[i];
    return s + "}";
}

void row(std::ostream& out, const std::string& label, const std::string& value)
{
    out << "  " << std::left << std::setw(kLabelWidth) << label << value << '\n';
}

void print_verdicts(std::ostream& out, const NamedRecords& rs)
{
    for (const auto& [name, v] : rs) {
        std::string value = !v.applicable ? "n/a" : v.pass ? "pass" : "FAIL";
        if (v.witness && (!v.pass || !v.applicable))
            value += "  " + v.witness->text;
        row(out, name, value);
    }
}

void print_report(std::ostream& out, const ReportFile& r)
{
    out << r.name << " (dim " << r.dim << ")\n";
    out << "axioms\n";
    print_verdicts(out, r.axioms);
    row(out, "non-Lie certificate", r.non_lie_certificate ? r.non_lie_certificate->text : "none (Lie bracket)");
    if (r.error)
        out << "error: " << *r.error << '\n';
    if (r.split) {
        out << "split\n";
        print_verdicts(out, r.split->verdicts);
        row(out, "symmetric", r.split->symmetric ? "yes" : "no");
        for (const auto& rs : r.split->roots)
            row(out, "root " + root_text(rs.root), "dim " + std::to_string(rs.dim));
    }
    if (!r.decomposition)
        return;
    const auto& d = *r.decomposition;
    out << "connections\n";
    row(out, "Omega", roots_text(d.omega));
    for (std::size_t i = 0; i < d.classes.size(); ++i)
        row(out, "class " + std::to_string(i), roots_text(d.classes[i]));
    out << "ideals\n";
    for (std::size_t i = 0; i < d.ideals.size(); ++i) {
        const auto& id = d.ideals[i];
        row(out, "I_" + std::to_string(i),
            "dim " + std::to_string(id.dim) + " = " + std::to_string(id.dim_ideal_h) + " + " +
                std::to_string(id.dim_v) + "  " + list_text(id.basis));
    }
    row(out, "center", list_text(d.center));
    row(out, "U", list_text(d.u));
    out << "verdicts\n";
    print_verdicts(out, d.verdicts);
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        const auto& c = d.components[i];
        const bool ok = c.axioms && c.split && c.roots_match && c.criterion_simple && c.oracle_simple;
        row(out, "component " + std::to_string(i),
            "dim " + std::to_string(c.dim) + " " + roots_text(c.class_roots) + (ok ? " simple" : " NOT certified"));
    }
    out << "simplicity\n";
    if (d.simplicity.applicable) {
        row(out, "criterion", d.simplicity.simple ? "simple" : "not simple: " + d.simplicity.reason);
        row(out, "strict (PP != 0)", d.simplicity.strict_simple ? "simple" : "not simple");
    } else {
        row(out, "criterion", "n/a: " + d.simplicity.reason);
    }
}

// ---- commands ----

struct Globals {
    std::uint64_t seed = kDefaultSmokeSeed;
    std::size_t max_dim = 32;
    bool serial = false;
};

AlgebraFile load_checked(const std::string& path, const Globals& g)
{
    AlgebraFile f = load_algebra_file(path);
    if (f.algebra.dim() > g.max_dim)
        throw ParseError(path + ": dimension " + std::to_string(f.algebra.dim()) + " exceeds --max-dim " +
                         std::to_string(g.max_dim));
    return f;
}

PipelineOptions pipeline_options(const Globals& g, bool decompose, const FaultHooks* hooks)
{
    PipelineOptions o;
    o.seed = g.seed;
    o.exec = g.serial ? Exec::serial : Exec::parallel;
    o.decompose = decompose;
    o.hooks = hooks;
    return o;
}

int cmd_verify(const std::string& path, const Globals& g, std::ostream& out)
{
    const auto res = run_pipeline(load_checked(path, g), pipeline_options(g, false, nullptr));
    print_report(out, res.report);
    return exit_code(res.outcome);
}

int cmd_decompose(const std::string& path, const std::string& format, const Globals& g, std::ostream& out,
                  const FaultHooks* hooks)
{
    const auto res = run_pipeline(load_checked(path, g), pipeline_options(g, true, hooks));
    if (format == "machine")
        out << serialize(res.report);
    else
        print_report(out, res.report);
    return exit_code(res.outcome);
}

int cmd_simple(const std::string& path, bool oracle, const Globals& g, std::ostream& out, const FaultHooks* hooks)
{
    auto res = run_pipeline(load_checked(path, g), pipeline_options(g, false, hooks));
    if (!res.rd) {
        print_report(out, res.report);
        return exit_code(res.outcome);
    }
    Outcome& o = res.outcome;
    const Exec exec = g.serial ? Exec::serial : Exec::parallel;
    try {
        res.ctx.emplace(*res.rd, exec);
    } catch (const EquivalenceViolation& e) {
        out << "error: " << e.what() << '\n';
        o.theorem_failure = true;
        return exit_code(o);
    }
    out << res.report.name << " (dim " << res.report.dim << ")\n";
    std::optional<CriterionResult> crit;
    try {
        crit = simplicity_criterion(*res.ctx);
    } catch (const HypothesesUnmet& e) {
        row(out, "criterion", std::string("n/a: hypotheses unmet: ") + e.what());
        o.hypotheses_unmet = true;
    }
    if (crit) {
        row(out, "criterion", crit->simple ? "simple" : "not simple: " + crit->reason);
        row(out, "strict (PP != 0)", crit->strict_simple ? "simple" : "not simple");
    }
    if (oracle) {
        try {
            bool verdict = oracle_is_simple(*res.rd, exec);
            if (hooks && hooks->tamper_oracle)
                hooks->tamper_oracle(verdict);
            row(out, "oracle", verdict ? "simple" : "not simple");
            if (crit) {
                const bool agree = verdict == crit->simple;
                row(out, "agreement", agree ? "yes" : "NO: criterion and oracle disagree");
                o.disagreement = o.disagreement || !agree;
            }
        } catch (const OraclePreconditionUnmet& e) {
            row(out, "oracle", std::string("n/a: preconditions unmet: ") + e.what());
            o.hypotheses_unmet = true;
        }
    }
    return exit_code(o);
}

int cmd_generate(const std::vector<std::string>& tokens, const std::string& out_path, std::ostream& out)
{
    const auto names = family_names();
    std::vector<std::pair<std::string, std::vector<long>>> parts;
    for (const auto& t : tokens) {
        if (std::find(names.begin(), names.end(), t) != names.end()) {
            parts.push_back({t, {}});
            continue;
        }
        long value = 0;
        std::size_t used = 0;
        try {
            value = std::stol(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != t.size() || used == 0)
            throw UnknownFamily("unknown family \"" + t + "\"");
        if (parts.empty())
            throw UnknownFamily("parameter " + t + " given before any family");
        parts.back().second.push_back(value);
    }
    std::optional<GeneratedAlgebra> g;
    for (const auto& [name, params] : parts) {
        GeneratedAlgebra next = generate(name, params);
        g = g ? direct_sum(*g, next) : std::move(next);
    }
    const std::string text = serialize(to_algebra_file(*g));
    if (out_path.empty()) {
        out << text;
        return exit_ok;
    }
    std::ofstream file(out_path);
    if (!file)
        throw ParseError("cannot write " + out_path);
    file << text;
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const FaultHooks* hooks)
{
    CLI::App app{"Exact structure theory of split Malcev-Poisson-Jordan algebras", "mpj"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "Seed of the pseudorandom smoke test")->capture_default_str();
    app.add_option("--max-dim", g.max_dim, "Refuse inputs of larger dimension")->capture_default_str();
    app.add_flag("--serial", g.serial, "Use the serial reference kernels");

    std::string path;
    auto* verify = app.add_subcommand("verify", "Check the axioms and the split structure");
    verify->add_option("file", path, "Algebra file (JSON)")->required();
    verify->fallthrough();

    std::string format = "text";
    auto* dec = app.add_subcommand("decompose", "Connections, ideals and theorem verdicts");
    dec->add_option("file", path, "Algebra file (JSON)")->required();
    dec->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));
    dec->fallthrough();

    bool oracle = false;
    auto* simple = app.add_subcommand("simple", "Simplicity criterion");
    simple->add_option("file", path, "Algebra file (JSON)")->required();
    simple->add_flag("--oracle", oracle, "Cross-check with the brute-force ideal oracle");
    simple->fallthrough();

    std::vector<std::string> tokens;
    std::string out_path;
    auto* gen = app.add_subcommand("generate", "Write a bundled family; several families give their direct sum");
    gen->add_option("family", tokens, "Family names, each followed by its integer parameters")->required();
    gen->add_option("-o,--output", out_path, "Output path (default: stdout)");
    gen->fallthrough();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_malformed;
    }

    try {
        if (*verify)
            return cmd_verify(path, g, out);
        if (*dec)
            return cmd_decompose(path, format, g, out, hooks);
        if (*simple)
            return cmd_simple(path, oracle, g, out, hooks);
        return cmd_generate(tokens, out_path, out);
    } catch (const ParseError& e) {
        err << "malformed input: " << e.what() << '\n';
    } catch (const InvalidStructure& e) {
        err << "malformed input: " << e.what() << '\n';
    } catch (const UnknownFamily& e) {
        err << "unknown family: " << e.what() << '\n';
    } catch (const ProbeEmpty& e) {
        err << e.what() << '\n';
    }
    return exit_malformed;
}

} // namespace mpj::cli
