#pragma once

#include "mpj/algebra.hpp"
#include "mpj/axioms.hpp"
#include "mpj/decomposition.hpp"
#include "mpj/generators.hpp"
#include "mpj/split.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mpj {

using Json = nlohmann::ordered_json;

/// On-disk algebra: sparse structure constants, 0-based indices, rationals as
/// strings "p" or "p/q" (JSON integers are accepted too).
struct AlgebraFile {
    std::string name;
    AlgebraSpec algebra;
    /// Coordinate vectors spanning the MASA, as written.
    std::vector<Vec> masa;

    Subspace masa_subspace() const { return Subspace::span(algebra.dim(), masa); }
    bool operator==(const AlgebraFile&) const = default;
};

/// Throws ParseError on any schema violation: missing or mistyped fields,
/// indices out of range, bracket entries with i >= j, Jordan entries with
/// i > j, repeated entries, or dependent MASA vectors.
AlgebraFile parse_algebra_file(const Json& j);
AlgebraFile parse_algebra_file(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);

Json to_json(const AlgebraFile& f);
/// Two-space indented JSON with a trailing newline.
std::string serialize(const AlgebraFile& f);

AlgebraFile to_algebra_file(const GeneratedAlgebra& g);

struct WitnessRecord {
    std::vector<std::size_t> indices;
    std::string text;
    bool operator==(const WitnessRecord&) const = default;
};

struct VerdictRecord {
    bool pass = true;
    /// False when hypotheses are unmet and the verdict is vacuous.
    bool applicable = true;
    std::optional<WitnessRecord> witness;
    bool operator==(const VerdictRecord&) const = default;
};

using NamedRecords = std::vector<std::pair<std::string, VerdictRecord>>;
/// Root as exact rational strings.
using RootRecord = std::vector<std::string>;

struct RootSpaceRecord {
    RootRecord root;
    std::size_t dim = 0;
    bool operator==(const RootSpaceRecord&) const = default;
};

struct IdealRecord {
    std::vector<RootRecord> class_roots;
    std::size_t dim_ideal_h = 0;
    std::size_t dim_v = 0;
    std::size_t dim = 0;
    /// Canonical basis, formatted with basis labels.
    std::vector<std::string> basis;
    bool operator==(const IdealRecord&) const = default;
};

struct ComponentRecord {
    std::vector<RootRecord> class_roots;
    std::size_t dim = 0;
    bool axioms = false;
    bool split = false;
    bool roots_match = false;
    bool criterion_simple = false;
    bool oracle_simple = false;
    bool operator==(const ComponentRecord&) const = default;
};

struct SimplicityRecord {
    bool applicable = false;
    /// Set when applicable.
    bool simple = false;
    bool strict_simple = false;
    /// Failing condition or unmet hypotheses.
    std::string reason;
    bool operator==(const SimplicityRecord&) const = default;
};

struct SplitSection {
    NamedRecords verdicts;
    bool symmetric = false;
    std::vector<RootSpaceRecord> roots;
    bool operator==(const SplitSection&) const = default;
};

struct DecompositionSection {
    std::vector<RootRecord> omega;
    std::vector<std::vector<RootRecord>> classes;
    std::vector<IdealRecord> ideals;
    std::vector<std::string> center;
    std::vector<std::string> u;
    NamedRecords verdicts;
    std::vector<ComponentRecord> components;
    SimplicityRecord simplicity;
    bool operator==(const DecompositionSection&) const = default;
};

/// Machine-readable report. Sections after the first failing stage are absent.
struct ReportFile {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    NamedRecords axioms;
    std::optional<WitnessRecord> non_lie_certificate;
    std::optional<SplitSection> split;
    std::optional<DecompositionSection> decomposition;
    /// Message of the structural error that stopped the pipeline.
    std::optional<std::string> error;
    bool operator==(const ReportFile&) const = default;
};

RootRecord to_record(const Root& r);
VerdictRecord to_record(const Verdict& v, bool applicable = true);
NamedRecords to_records(const AxiomReport& r);
SplitSection to_record(const RootDecomposition& rd, const SplitReport& s, const RootProductReport& p);
DecompositionSection to_record(const AlgebraSpec& a, const DecompositionReport& d, const SimplicityRecord& s);

Json to_json(const ReportFile& r);
ReportFile parse_report(const Json& j);
std::string serialize(const ReportFile& r);

} // namespace mpj
