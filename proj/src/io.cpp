#include "mpj/io.hpp"

#include "mpj/errors.hpp"
#include "mpj/rational.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace mpj {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        throw ParseError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(where + ": missing field \"" + key + "\"");
    return *it;
}

std::size_t index_field(const Json& j, const char* key, std::size_t bound, const std::string& where)
{
    const Json& v = field(j, key, where);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw ParseError(where + ": \"" + key + "\" must be a non-negative integer");
    const auto idx = v.get<std::size_t>();
    if (idx >= bound)
        throw ParseError(where + ": \"" + key + "\" = " + std::to_string(idx) + " is out of range (dim " +
                         std::to_string(bound) + ")");
    return idx;
}

Rational rational_value(const Json& v, const std::string& where)
{
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long>());
    throw ParseError(where + ": rationals must be strings \"p\" or \"p/q\"");
}

const Json& array_field(const Json& j, const char* key, const std::string& where)
{
    const Json& v = field(j, key, where);
    if (!v.is_array())
        throw ParseError(where + ": \"" + key + "\" must be an array");
    return v;
}

/// Reads a sparse product table; `strict` selects i < j over i <= j.
void read_products(const Json& list, const char* what, std::size_t n, bool strict,
                   const std::function<void(std::size_t, std::size_t, std::size_t, const Rational&)>& set)
{
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < list.size(); ++e) {
        const std::string where = std::string(what) + "[" + std::to_string(e) + "]";
        const Json& entry = list[e];
        const std::size_t i = index_field(entry, "i", n, where);
        const std::size_t j = index_field(entry, "j", n, where);
        if (strict ? i >= j : i > j)
            throw ParseError(where + ": requires i " + (strict ? "<" : "<=") + " j");
        if (!seen.insert({i, j}).second)
            throw ParseError(where + ": repeated entry for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        const Json& terms = array_field(entry, "terms", where);
        std::set<std::size_t> ks;
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const std::string tw = where + ".terms[" + std::to_string(t) + "]";
            const std::size_t k = index_field(terms[t], "k", n, tw);
            if (!ks.insert(k).second)
                throw ParseError(tw + ": repeated k = " + std::to_string(k));
            set(i, j, k, rational_value(field(terms[t], "c", tw), tw + ".c"));
        }
    }
}

Json product_table(const AlgebraSpec& a, bool bracket)
{
    Json out = Json::array();
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = bracket ? i + 1 : i; j < n; ++j) {
            const Vec& v = bracket ? a.bracket_basis(i, j) : a.jordan_basis(i, j);
            if (is_zero(v))
                continue;
            Json terms = Json::array();
            for (std::size_t k = 0; k < n; ++k)
                if (v[k] != 0)
                    terms.push_back(Json{{"k", k}, {"c", to_string(v[k])}});
            out.push_back(Json{{"i", i}, {"j", j}, {"terms", std::move(terms)}});
        }
    }
    return out;
}

Json vec_json(const Vec& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

} // namespace

AlgebraFile parse_algebra_file(const Json& j)
{
    try {
        AlgebraFile f;
        const Json& name = field(j, "name", "algebra");
        if (!name.is_string())
            throw ParseError("algebra: \"name\" must be a string");
        f.name = name.get<std::string>();

        const Json& dim = field(j, "dim", "algebra");
        if (!dim.is_number_unsigned())
            throw ParseError("algebra: \"dim\" must be a non-negative integer");
        const auto n = dim.get<std::size_t>();

        const Json& basis = array_field(j, "basis", "algebra");
        if (basis.size() != n)
            throw ParseError("algebra: basis has " + std::to_string(basis.size()) + " labels, dim is " +
                             std::to_string(n));
        std::vector<std::string> names;
        std::set<std::string> unique;
        for (const auto& b : basis) {
            if (!b.is_string() || b.get<std::string>().empty())
                throw ParseError("algebra: basis labels must be non-empty strings");
            names.push_back(b.get<std::string>());
            if (!unique.insert(names.back()).second)
                throw ParseError("algebra: repeated basis label \"" + names.back() + "\"");
        }

        f.algebra = AlgebraSpec(names);
        read_products(array_field(j, "bracket", "algebra"), "bracket", n, true,
                      [&](std::size_t i, std::size_t jj, std::size_t k, const Rational& c) {
                          f.algebra.set_bracket(i, jj, k, c);
                      });
        read_products(array_field(j, "jordan", "algebra"), "jordan", n, false,
                      [&](std::size_t i, std::size_t jj, std::size_t k, const Rational& c) {
                          f.algebra.set_jordan(i, jj, k, c);
                      });

        const Json& masa = array_field(j, "masa", "algebra");
        for (std::size_t m = 0; m < masa.size(); ++m) {
            const std::string where = "masa[" + std::to_string(m) + "]";
            if (!masa[m].is_array() || masa[m].size() != n)
                throw ParseError(where + ": expected " + std::to_string(n) + " coordinates");
            Vec v;
            for (const auto& x : masa[m])
                v.push_back(rational_value(x, where));
            f.masa.push_back(std::move(v));
        }
        if (f.masa_subspace().dim() != f.masa.size())
            throw ParseError("masa: vectors are linearly dependent");
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("algebra: ") + e.what());
    }
}

AlgebraFile parse_algebra_file(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_algebra_file(j);
}

AlgebraFile load_algebra_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra_file(ss.str());
}

Json to_json(const AlgebraFile& f)
{
    Json masa = Json::array();
    for (const auto& v : f.masa)
        masa.push_back(vec_json(v));
    return Json{{"name", f.name},
                {"dim", f.algebra.dim()},
                {"basis", f.algebra.basis_names()},
                {"bracket", product_table(f.algebra, true)},
                {"jordan", product_table(f.algebra, false)},
                {"masa", std::move(masa)}};
}

std::string serialize(const AlgebraFile& f)
{
    return to_json(f).dump(2) + "\n";
}

AlgebraFile to_algebra_file(const GeneratedAlgebra& g)
{
    return AlgebraFile{g.name, g.algebra, g.masa.basis()};
}

// ---- reports ----

RootRecord to_record(const Root& r)
{
    RootRecord out;
    for (const auto& x : r)
        out.push_back(to_string(x));
    return out;
}

namespace {

std::optional<WitnessRecord> witness_record(const std::optional<Witness>& w)
{
    if (!w)
        return std::nullopt;
    return WitnessRecord{w->indices, w->text};
}

std::vector<RootRecord> to_records(const std::vector<Root>& roots)
{
    std::vector<RootRecord> out;
    for (const auto& r : roots)
        out.push_back(to_record(r));
    return out;
}

std::vector<std::string> formatted_basis(const AlgebraSpec& a, const Subspace& s)
{
    std::vector<std::string> out;
    for (const auto& v : s.basis())
        out.push_back(format_vec(a, v));
    return out;
}

} // namespace

VerdictRecord to_record(const Verdict& v, bool applicable)
{
    return VerdictRecord{v.pass, applicable, witness_record(v.witness)};
}

NamedRecords to_records(const AxiomReport& r)
{
    return {{"anticommutative", to_record(r.anticommutative)},
            {"malcev_identity", to_record(r.malcev_identity)},
            {"jordan_commutative", to_record(r.jordan_commutative)},
            {"jordan_identity", to_record(r.jordan_identity)},
            {"leibniz", to_record(r.leibniz)},
            {"random_smoke", to_record(r.random_smoke)}};
}

SplitSection to_record(const RootDecomposition& rd, const SplitReport& s, const RootProductReport& p)
{
    SplitSection out;
    out.verdicts = {{"direct_and_spanning", to_record(s.direct_and_spanning)},
                    {"zero_space_is_masa", to_record(s.zero_space_is_masa)},
                    {"joint_eigen", to_record(s.joint_eigen)},
                    {"rootspace_products", to_record(p.verdict)}};
    out.symmetric = s.symmetric;
    for (const auto& rs : rd.roots())
        out.roots.push_back({to_record(rs.root), rs.space.dim()});
    return out;
}

DecompositionSection to_record(const AlgebraSpec& a, const DecompositionReport& d, const SimplicityRecord& s)
{
    DecompositionSection out;
    out.omega = to_records(d.omega);
    for (const auto& c : d.classes)
        out.classes.push_back(to_records(c));
    for (const auto& i : d.ideals)
        out.ideals.push_back(
            {to_records(i.class_roots), i.ideal_h.dim(), i.v.dim(), i.ideal.dim(), formatted_basis(a, i.ideal)});
    out.center = formatted_basis(a, d.center);
    out.u = formatted_basis(a, d.u);
    for (const auto& v : d.verdicts)
        out.verdicts.emplace_back(v.name, to_record(v.verdict, v.applicable));
    for (const auto& c : d.components)
        out.components.push_back({to_records(c.class_roots), c.algebra.dim(), c.axioms_pass, c.split_pass,
                                  c.roots_match, c.criterion_simple, c.oracle_simple});
    out.simplicity = s;
    return out;
}

// ---- report JSON ----

namespace {

Json witness_json(const std::optional<WitnessRecord>& w)
{
    if (!w)
        return nullptr;
    return Json{{"indices", w->indices}, {"text", w->text}};
}

std::optional<WitnessRecord> parse_witness(const Json& j)
{
    if (j.is_null())
        return std::nullopt;
    return WitnessRecord{j.at("indices").get<std::vector<std::size_t>>(), j.at("text").get<std::string>()};
}

Json verdicts_json(const NamedRecords& rs)
{
    Json out = Json::object();
    for (const auto& [name, v] : rs) {
        Json e{{"pass", v.pass}};
        if (!v.applicable)
            e["applicable"] = false;
        e["witness"] = witness_json(v.witness);
        out[name] = std::move(e);
    }
    return out;
}

NamedRecords parse_verdicts(const Json& j)
{
    NamedRecords out;
    for (const auto& [name, v] : j.items())
        out.emplace_back(name, VerdictRecord{v.at("pass").get<bool>(), v.value("applicable", true),
                                             parse_witness(v.at("witness"))});
    return out;
}

Json roots_json(const std::vector<RootRecord>& rs)
{
    Json out = Json::array();
    for (const auto& r : rs)
        out.push_back(r);
    return out;
}

std::vector<RootRecord> parse_roots(const Json& j)
{
    return j.get<std::vector<RootRecord>>();
}

} // namespace

Json to_json(const ReportFile& r)
{
    Json j{{"name", r.name}, {"dim", r.dim}, {"basis", r.basis}};
    j["axioms"] = verdicts_json(r.axioms);
    j["non_lie_certificate"] = witness_json(r.non_lie_certificate);
    if (r.split) {
        Json roots = Json::array();
        for (const auto& rs : r.split->roots)
            roots.push_back(Json{{"root", rs.root}, {"dim", rs.dim}});
        j["split"] = Json{{"verdicts", verdicts_json(r.split->verdicts)},
                          {"symmetric", r.split->symmetric},
                          {"roots", std::move(roots)}};
    }
    if (r.decomposition) {
        const auto& d = *r.decomposition;
        Json classes = Json::array();
        for (const auto& c : d.classes)
            classes.push_back(roots_json(c));
        Json ideals = Json::array();
        for (const auto& i : d.ideals)
            ideals.push_back(Json{{"class", roots_json(i.class_roots)},
                                  {"dim_ideal_h", i.dim_ideal_h},
                                  {"dim_v", i.dim_v},
                                  {"dim", i.dim},
                                  {"basis", i.basis}});
        Json comps = Json::array();
        for (const auto& c : d.components)
            comps.push_back(Json{{"class", roots_json(c.class_roots)},
                                 {"dim", c.dim},
                                 {"axioms", c.axioms},
                                 {"split", c.split},
                                 {"roots_match", c.roots_match},
                                 {"criterion_simple", c.criterion_simple},
                                 {"oracle_simple", c.oracle_simple}});
        j["decomposition"] = Json{{"omega", roots_json(d.omega)},
                                  {"classes", std::move(classes)},
                                  {"ideals", std::move(ideals)},
                                  {"center", d.center},
                                  {"U", d.u},
                                  {"verdicts", verdicts_json(d.verdicts)},
                                  {"components", std::move(comps)},
                                  {"simplicity", Json{{"applicable", d.simplicity.applicable},
                                                      {"simple", d.simplicity.simple},
                                                      {"strict_simple", d.simplicity.strict_simple},
                                                      {"reason", d.simplicity.reason}}}};
    }
    if (r.error)
        j["error"] = *r.error;
    return j;
}

ReportFile parse_report(const Json& j)
{
    try {
        ReportFile r;
        r.name = j.at("name").get<std::string>();
        r.dim = j.at("dim").get<std::size_t>();
        r.basis = j.at("basis").get<std::vector<std::string>>();
        r.axioms = parse_verdicts(j.at("axioms"));
        r.non_lie_certificate = parse_witness(j.at("non_lie_certificate"));
        if (j.contains("split")) {
            const Json& s = j.at("split");
            SplitSection sec;
            sec.verdicts = parse_verdicts(s.at("verdicts"));
            sec.symmetric = s.at("symmetric").get<bool>();
            for (const auto& rs : s.at("roots"))
                sec.roots.push_back({rs.at("root").get<RootRecord>(), rs.at("dim").get<std::size_t>()});
            r.split = std::move(sec);
        }
        if (j.contains("decomposition")) {
            const Json& d = j.at("decomposition");
            DecompositionSection sec;
            sec.omega = parse_roots(d.at("omega"));
            for (const auto& c : d.at("classes"))
                sec.classes.push_back(parse_roots(c));
            for (const auto& i : d.at("ideals"))
                sec.ideals.push_back({parse_roots(i.at("class")), i.at("dim_ideal_h").get<std::size_t>(),
                                      i.at("dim_v").get<std::size_t>(), i.at("dim").get<std::size_t>(),
                                      i.at("basis").get<std::vector<std::string>>()});
            sec.center = d.at("center").get<std::vector<std::string>>();
            sec.u = d.at("U").get<std::vector<std::string>>();
            sec.verdicts = parse_verdicts(d.at("verdicts"));
            for (const auto& c : d.at("components"))
                sec.components.push_back({parse_roots(c.at("class")), c.at("dim").get<std::size_t>(),
                                          c.at("axioms").get<bool>(), c.at("split").get<bool>(),
                                          c.at("roots_match").get<bool>(), c.at("criterion_simple").get<bool>(),
                                          c.at("oracle_simple").get<bool>()});
            const Json& s = d.at("simplicity");
            sec.simplicity = {s.at("applicable").get<bool>(), s.at("simple").get<bool>(),
                              s.at("strict_simple").get<bool>(), s.at("reason").get<std::string>()};
            r.decomposition = std::move(sec);
        }
        if (j.contains("error"))
            r.error = j.at("error").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

std::string serialize(const ReportFile& r)
{
    return to_json(r).dump(2) + "\n";
}

} // namespace mpj
