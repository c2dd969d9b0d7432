#include "mpj/decomposition.hpp"

#include "mpj/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mpj {

namespace {

std::string format_roots(const std::vector<Root>& roots)
{
    std::string s = "{";
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i)
            s += ", ";
        s += format_root(roots[i]);
    }
    return s + "}";
}

Witness escape_witness(const AlgebraSpec& a, const ProductEscape& e, std::size_t i, std::size_t j,
                       const std::string& where)
{
    Witness w;
    w.indices = {i, j};
    w.defect = e.product;
    const std::string l = format_vec(a, e.left), r = format_vec(a, e.right), p = format_vec(a, e.product);
    w.text = (e.is_bracket ? "[" + l + ", " + r + "]" : "(" + l + ")(" + r + ")") + " = " + p + " " + where;
    return w;
}

Witness text_witness(std::string text, std::vector<std::size_t> indices = {}, Vec defect = {})
{
    return Witness{std::move(indices), std::move(defect), std::move(text)};
}

/// First basis vector of `s` outside `t`, if any.
std::optional<Vec> first_outside(const Subspace& s, const Subspace& t)
{
    for (const auto& v : s.basis())
        if (!t.contains(v))
            return v;
    return std::nullopt;
}

} // namespace

IdealData build_ideal(const ConnectionContext& ctx, const std::vector<Root>& class_roots)
{
    const RootDecomposition& rd = ctx.rd();
    const AlgebraSpec& a = rd.algebra();
    const std::size_t n = a.dim();
    IdealData d{class_roots, Subspace(n), Subspace(n), Subspace(n)};
    for (const auto& b : class_roots) {
        const Subspace pb = rd.space(b);
        d.v = sum(d.v, pb);
        if (!rd.has_root(-b))
            continue;
        const Subspace pn = rd.space(-b);
        d.ideal_h = sum(d.ideal_h, sum(bracket_span(a, pb, pn), jordan_span(a, pb, pn)));
    }
    if (!rd.masa().contains(d.ideal_h))
        throw InvalidStructure("I_H of class " + format_roots(class_roots) + " is not contained in H");
    if (!intersect(d.v, rd.masa()).is_zero())
        throw InvalidStructure("root spaces of class " + format_roots(class_roots) + " meet H");
    d.ideal = sum(d.ideal_h, d.v);
    return d;
}

std::vector<IdealData> build_ideals(const ConnectionContext& ctx, Exec exec)
{
    const auto& classes = ctx.partition().classes;
    return parallel_map<IdealData>(
        classes.size(), [&](std::size_t i) { return build_ideal(ctx, classes[i]); }, exec);
}

IdealFamilyReport verify_ideal_family(const ConnectionContext& ctx, const std::vector<IdealData>& ideals, Exec exec)
{
    const AlgebraSpec& a = ctx.rd().algebra();
    const Subspace whole = Subspace::full(a.dim());
    const Subspace zero(a.dim());
    IdealFamilyReport rep;

    auto escapes = parallel_map<std::optional<ProductEscape>>(
        ideals.size(), [&](std::size_t i) { return find_escape(a, ideals[i].ideal, whole, ideals[i].ideal); },
        exec);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (escapes[i]) {
            rep.ideal_property = Verdict::fail(
                escape_witness(a, *escapes[i], i, i, "escapes I_" + format_roots(ideals[i].class_roots)));
            break;
        }
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = i + 1; j < ideals.size(); ++j)
            pairs.emplace_back(i, j);
    auto cross = parallel_map<std::optional<ProductEscape>>(
        pairs.size(),
        [&](std::size_t t) { return find_escape(a, ideals[pairs[t].first].ideal, ideals[pairs[t].second].ideal, zero); },
        exec);
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        if (cross[t]) {
            const auto [i, j] = pairs[t];
            rep.pairwise_annihilation = Verdict::fail(escape_witness(
                a, *cross[t], i, j,
                "is nonzero between I_" + format_roots(ideals[i].class_roots) + " and I_" +
                    format_roots(ideals[j].class_roots)));
            break;
        }
    }
    return rep;
}

Subspace h_product_span(const RootDecomposition& rd)
{
    const AlgebraSpec& a = rd.algebra();
    Subspace s(a.dim());
    for (const auto& r : rd.root_list()) {
        if (!rd.has_root(-r))
            continue;
        const Subspace pa = rd.space(r), pn = rd.space(-r);
        s = sum(s, sum(bracket_span(a, pa, pn), jordan_span(a, pa, pn)));
    }
    return s;
}

ComplementResult complement_and_decompose(const ConnectionContext& ctx, const std::vector<IdealData>& ideals)
{
    const RootDecomposition& rd = ctx.rd();
    const std::size_t n = rd.algebra().dim();
    ComplementResult res{h_product_span(rd), Subspace(n), Verdict::ok()};
    res.u = complement(res.product_span, rd.masa());
    Subspace total = res.u;
    for (const auto& d : ideals)
        total = sum(total, d.ideal);
    if (auto miss = first_outside(Subspace::full(n), total))
        res.spans_p = Verdict::fail(text_witness(
            "U + sum of I_[a] has dimension " + std::to_string(total.dim()) + " < " + std::to_string(n) +
                "; missing " + format_vec(rd.algebra(), *miss),
            {}, *miss));
    return res;
}

DirectReport check_direct(const ConnectionContext& ctx, const std::vector<IdealData>& ideals)
{
    const RootDecomposition& rd = ctx.rd();
    const AlgebraSpec& a = rd.algebra();
    DirectReport rep;

    const Subspace z = center(a);
    if (!z.is_zero())
        rep.center_zero =
            Verdict::fail(text_witness("central element " + format_vec(a, z.basis().front()), {}, z.basis().front()));

    const Subspace span = h_product_span(rd);
    if (auto miss = first_outside(rd.masa(), span))
        rep.h_generated = Verdict::fail(
            text_witness(format_vec(a, *miss) + " in H is not in the span of the +-a products", {}, *miss));

    rep.applicable = rep.center_zero.pass && rep.h_generated.pass;
    if (!rep.applicable)
        return rep;

    std::size_t total = 0;
    for (const auto& d : ideals)
        total += d.ideal.dim();
    if (total != a.dim()) {
        rep.direct_sum = Verdict::fail(text_witness("ideal dimensions sum to " + std::to_string(total) +
                                                    ", expected " + std::to_string(a.dim())));
        return rep;
    }
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        for (std::size_t j = i + 1; j < ideals.size(); ++j) {
            const Subspace meet = intersect(ideals[i].ideal, ideals[j].ideal);
            if (!meet.is_zero()) {
                rep.direct_sum = Verdict::fail(text_witness(
                    "I_" + format_roots(ideals[i].class_roots) + " and I_" + format_roots(ideals[j].class_roots) +
                        " share " + format_vec(a, meet.basis().front()),
                    {i, j}, meet.basis().front()));
                return rep;
            }
        }
    }
    return rep;
}

bool is_maximal_length(const RootDecomposition& rd)
{
    return maximal_length_verdict(rd).pass;
}

Verdict maximal_length_verdict(const RootDecomposition& rd)
{
    const auto& roots = rd.roots();
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i].space.dim() != 1)
            return Verdict::fail(text_witness("dim P_" + format_root(roots[i].root) + " = " +
                                                  std::to_string(roots[i].space.dim()),
                                              {i}));
    return Verdict::ok();
}

Verdict root_multiplicative(const ConnectionContext& ctx)
{
    const RootDecomposition& rd = ctx.rd();
    const AlgebraSpec& a = rd.algebra();
    const auto roots = rd.root_list();
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const Root& al = roots[i];
        const Subspace pa = rd.space(al);
        for (std::size_t j = 0; j < roots.size(); ++j) {
            const Root& be = roots[j];
            const Subspace pb = rd.space(be);
            const std::string pair = "(" + format_root(al) + ", " + format_root(be) + ")";
            if (be != -al && rd.has_root(al + be)) {
                if (bracket_span(a, pa, pb).is_zero())
                    return Verdict::fail(
                        text_witness(pair + ": a+b is a root but [P_a, P_b] = 0", {i, j}));
                if (jordan_span(a, pa, pb).is_zero())
                    return Verdict::fail(text_witness(pair + ": a+b is a root but P_a P_b = 0", {i, j}));
            }
            if (ctx.in_omega(al) && ctx.theta_conditions(al, be).any()) {
                const Subspace h = bracket_span(a, pa, rd.space(-al));
                if (bracket_span(a, h, pb).is_zero())
                    return Verdict::fail(text_witness(pair + ": theta_a * b = b via " +
                                                          ctx.theta_conditions(al, be).describe() +
                                                          " but [[P_a, P_-a], P_b] = 0",
                                                      {i, j}));
            }
        }
    }
    return Verdict::ok();
}

std::vector<std::string> criterion_hypothesis_failures(const ConnectionContext& ctx)
{
    std::vector<std::string> out;
    if (auto v = root_multiplicative(ctx); !v.pass)
        out.push_back("not root-multiplicative: " + v.witness->text);
    if (auto v = maximal_length_verdict(ctx.rd()); !v.pass)
        out.push_back("not of maximal length: " + v.witness->text);
    if (!ctx.rd().is_symmetric())
        out.push_back("root system is not symmetric");
    return out;
}

namespace {

std::string join(const std::vector<std::string>& parts)
{
    std::string s;
    for (const auto& p : parts)
        s += (s.empty() ? "" : "; ") + p;
    return s;
}

} // namespace

CriterionResult simplicity_criterion(const ConnectionContext& ctx)
{
    if (auto fails = criterion_hypothesis_failures(ctx); !fails.empty())
        throw HypothesesUnmet(join(fails));
    const RootDecomposition& rd = ctx.rd();
    const AlgebraSpec& a = rd.algebra();
    CriterionResult res;
    res.connected = ctx.partition().classes.size() == 1;
    res.h_generated = h_product_span(rd) == rd.masa();
    res.simple = res.connected && res.h_generated;
    std::vector<std::string> why;
    if (!res.connected)
        why.push_back(std::to_string(ctx.partition().classes.size()) + " connection classes");
    if (!res.h_generated)
        why.push_back("H is not generated by the +-a products");
    res.reason = join(why);
    const Subspace whole = Subspace::full(a.dim());
    res.strict_simple = res.simple && !jordan_span(a, whole, whole).is_zero();
    return res;
}

bool oracle_is_simple(const RootDecomposition& rd, Exec exec)
{
    const AlgebraSpec& a = rd.algebra();
    std::vector<std::string> fails;
    if (!is_maximal_length(rd))
        fails.push_back("not of maximal length");
    if (!center(a).is_zero())
        fails.push_back("nonzero center");
    if (!rd.is_symmetric())
        fails.push_back("root system is not symmetric");
    if (!fails.empty())
        throw OraclePreconditionUnmet(join(fails));

    const Subspace whole = Subspace::full(a.dim());
    if (bracket_span(a, whole, whole).is_zero())
        return false;
    const auto& roots = rd.roots();
    auto full = parallel_map<char>(
        roots.size(), [&](std::size_t i) -> char { return ideal_closure(a, roots[i].space) == whole; }, exec);
    return std::all_of(full.begin(), full.end(), [](char c) { return c != 0; });
}

bool splits_along_roots(const RootDecomposition& rd, const Subspace& ideal)
{
    std::size_t total = intersect(ideal, rd.masa()).dim();
    for (const auto& rs : rd.roots())
        total += intersect(ideal, rs.space).dim();
    return total == ideal.dim();
}

namespace {

ComponentReport certify_component(const ConnectionContext& ctx, const IdealData& d)
{
    const RootDecomposition& rd = ctx.rd();
    ComponentReport c;
    c.class_roots = d.class_roots;
    c.algebra = subalgebra_on_subspace(rd.algebra(), d.ideal);

    std::vector<Vec> masa_coords;
    for (const auto& h : d.ideal_h.basis())
        masa_coords.push_back(d.ideal.coordinates(h));
    c.masa = Subspace::span(d.ideal.dim(), masa_coords);

    AxiomOptions opts;
    opts.exec = Exec::serial;
    c.axioms_pass = verify_axioms(c.algebra, opts).all_pass();

    std::optional<RootDecomposition> crd;
    try {
        crd.emplace(root_decomposition(c.algebra, c.masa));
        c.split_pass = verify_split(*crd).all_pass() && verify_rootspace_products(*crd, Exec::serial).verdict.pass;
    } catch (const Error&) {
        return c;
    }

    // Restrict each class root to I_H, expressed on the component's MASA basis.
    std::set<Root> restricted;
    for (const auto& r : d.class_roots) {
        Root out;
        for (const auto& m : c.masa.basis()) {
            const Vec hc = rd.masa().coordinates(d.ideal.combine(m));
            Rational val = 0;
            for (std::size_t k = 0; k < hc.size(); ++k)
                val += r[k] * hc[k];
            out.push_back(val);
        }
        restricted.insert(out);
    }
    const auto croots = crd->root_list();
    c.roots_match = restricted.size() == d.class_roots.size() &&
                    std::vector<Root>(restricted.begin(), restricted.end()) == croots;

    const ConnectionContext cctx(*crd, Exec::serial);
    try {
        c.criterion_simple = simplicity_criterion(cctx).simple;
    } catch (const HypothesesUnmet&) {
        c.criterion_simple = false;
    }
    try {
        c.oracle_simple = oracle_is_simple(*crd, Exec::serial);
    } catch (const OraclePreconditionUnmet&) {
        c.oracle_simple = false;
    }
    return c;
}

std::vector<std::string> component_hypothesis_failures(const ConnectionContext& ctx)
{
    auto fails = criterion_hypothesis_failures(ctx);
    const AlgebraSpec& a = ctx.rd().algebra();
    if (!center(a).is_zero())
        fails.push_back("nonzero center");
    if (h_product_span(ctx.rd()) != ctx.rd().masa())
        fails.push_back("H is not generated by the +-a products");
    return fails;
}

} // namespace

std::vector<ComponentReport> simple_components(const ConnectionContext& ctx, const std::vector<IdealData>& ideals,
                                               Exec exec)
{
    if (auto fails = component_hypothesis_failures(ctx); !fails.empty())
        throw HypothesesUnmet(join(fails));
    return parallel_map<ComponentReport>(
        ideals.size(), [&](std::size_t i) { return certify_component(ctx, ideals[i]); }, exec);
}

const NamedVerdict& DecompositionReport::verdict(const std::string& name) const
{
    for (const auto& v : verdicts)
        if (v.name == name)
            return v;
    throw std::out_of_range("no verdict named " + name);
}

bool DecompositionReport::theorem_failure() const
{
    return std::any_of(verdicts.begin(), verdicts.end(),
                       [](const NamedVerdict& v) { return v.theorem && v.applicable && !v.verdict.pass; });
}

DecompositionReport decompose(const ConnectionContext& ctx, Exec exec)
{
    const RootDecomposition& rd = ctx.rd();
    DecompositionReport rep;
    rep.lambda = rd.root_list();
    rep.omega = ctx.omega();
    rep.classes = ctx.partition().classes;
    rep.ideals = build_ideals(ctx, exec);
    rep.center = center(rd.algebra());

    const auto family = verify_ideal_family(ctx, rep.ideals, exec);
    const auto comp = complement_and_decompose(ctx, rep.ideals);
    rep.product_span = comp.product_span;
    rep.u = comp.u;
    const auto direct = check_direct(ctx, rep.ideals);

    rep.verdicts.push_back({"ideal_property", true, true, family.ideal_property});
    rep.verdicts.push_back({"pairwise_annihilation", true, true, family.pairwise_annihilation});
    rep.verdicts.push_back({"spans_P", true, true, comp.spans_p});
    rep.verdicts.push_back({"direct_sum", true, direct.applicable, direct.direct_sum});
    rep.verdicts.push_back({"center_zero", false, true, direct.center_zero});
    rep.verdicts.push_back({"H_generated", false, true, direct.h_generated});
    rep.verdicts.push_back({"maximal_length", false, true, maximal_length_verdict(rd)});
    rep.verdicts.push_back({"root_multiplicative", false, true, root_multiplicative(ctx)});

    NamedVerdict comps{"simple_components", true, false, Verdict::ok()};
    if (auto fails = component_hypothesis_failures(ctx); fails.empty()) {
        comps.applicable = true;
        rep.components = simple_components(ctx, rep.ideals, exec);
        for (std::size_t i = 0; i < rep.components.size(); ++i) {
            const auto& c = rep.components[i];
            if (c.certified())
                continue;
            std::vector<std::string> bad;
            if (!c.axioms_pass)
                bad.push_back("axioms");
            if (!c.split_pass)
                bad.push_back("split structure");
            if (!c.roots_match)
                bad.push_back("root system");
            if (!c.criterion_simple)
                bad.push_back("criterion");
            if (!c.oracle_simple)
                bad.push_back("oracle");
            comps.verdict = Verdict::fail(
                text_witness("component I_" + format_roots(c.class_roots) + " fails: " + join(bad), {i}));
            break;
        }
    } else {
        comps.verdict.witness = text_witness("hypotheses unmet: " + join(fails));
    }
    rep.verdicts.push_back(std::move(comps));
    return rep;
}

} // namespace mpj
