#pragma once

#include "mpj/connections.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mpj {

/// I_[a] = I_{H,[a]} (+) V_[a] for one connection class [a].
struct IdealData {
    std::vector<Root> class_roots;
    /// span{[P_b, P_-b] + P_b P_-b : b in [a]}, inside H.
    Subspace ideal_h;
    /// Sum of P_b over b in [a].
    Subspace v;
    Subspace ideal;
};

/// Throws InvalidStructure if I_H is not inside H or V meets H.
IdealData build_ideal(const ConnectionContext& ctx, const std::vector<Root>& class_roots);
/// One ideal per class of ctx.partition(), in class order.
std::vector<IdealData> build_ideals(const ConnectionContext& ctx, Exec exec = Exec::parallel);

struct IdealFamilyReport {
    /// [I, P] and I P lie in I for every class ideal.
    Verdict ideal_property;
    /// Both products vanish between ideals of distinct classes.
    Verdict pairwise_annihilation;
};

IdealFamilyReport verify_ideal_family(const ConnectionContext& ctx, const std::vector<IdealData>& ideals,
                                      Exec exec = Exec::parallel);

/// span{[P_a, P_-a] + P_a P_-a : a in Lambda}.
Subspace h_product_span(const RootDecomposition& rd);

struct ComplementResult {
    Subspace product_span;
    /// Complement of product_span inside H.
    Subspace u;
    /// U + sum of the class ideals is P.
    Verdict spans_p;
};

ComplementResult complement_and_decompose(const ConnectionContext& ctx, const std::vector<IdealData>& ideals);

struct DirectReport {
    Verdict center_zero;
    /// H equals the product span.
    Verdict h_generated;
    /// Both hypotheses hold, so the directness check was run.
    bool applicable = false;
    /// Dimensions add up to dim P and pairwise intersections are zero.
    Verdict direct_sum;
};

DirectReport check_direct(const ConnectionContext& ctx, const std::vector<IdealData>& ideals);

/// Every root space is one-dimensional.
bool is_maximal_length(const RootDecomposition& rd);
Verdict maximal_length_verdict(const RootDecomposition& rd);

/// For a, b in Lambda: a + b in Lambda (b != -a) requires [P_a,P_b] != 0 and
/// P_a P_b != 0; a in Omega with theta_a * b = b requires [[P_a,P_-a],P_b] != 0.
/// The witness lists the indices of a and b in the root list.
Verdict root_multiplicative(const ConnectionContext& ctx);
inline bool is_root_multiplicative(const ConnectionContext& ctx) { return root_multiplicative(ctx).pass; }

struct CriterionResult {
    /// One connection class and H generated by the +-a products. Simplicity
    /// of the ideal lattice (both products), together with [P,P] != 0.
    bool simple = false;
    bool connected = false;
    bool h_generated = false;
    /// Literal definition: additionally P P != 0.
    bool strict_simple = false;
    /// Empty when simple, else the failing condition(s).
    std::string reason;
};

/// Standing hypotheses of the criterion, as failure messages; empty when met.
std::vector<std::string> criterion_hypothesis_failures(const ConnectionContext& ctx);

/// Throws HypothesesUnmet unless P is root-multiplicative, of maximal length
/// and has a symmetric root system.
CriterionResult simplicity_criterion(const ConnectionContext& ctx);

/// Brute force: P is simple iff [P,P] != 0 and the ideal closure of every root
/// space is P.
///
/// Complete under maximal length and Z(P) = 0: a nonzero ideal I splits as
/// (I n H) (+) sum (I n P_a). If I lies in H then [I, P_a] lies in I n P_a = 0
/// and I P_a likewise, so I is central and hence zero. Otherwise some I n P_a
/// is nonzero and equals P_a, so I contains the closure of P_a.
///
/// Throws OraclePreconditionUnmet when a precondition fails.
bool oracle_is_simple(const RootDecomposition& rd, Exec exec = Exec::parallel);

/// dim(I n H) + sum dim(I n P_a) == dim I.
bool splits_along_roots(const RootDecomposition& rd, const Subspace& ideal);

struct ComponentReport {
    std::vector<Root> class_roots;
    AlgebraSpec algebra;
    /// I_H in component coordinates.
    Subspace masa;
    bool axioms_pass = false;
    bool split_pass = false;
    /// Component roots equal the restrictions of the class roots to I_H.
    bool roots_match = false;
    bool criterion_simple = false;
    bool oracle_simple = false;

    bool certified() const { return axioms_pass && split_pass && roots_match && criterion_simple && oracle_simple; }
};

/// Extracts each class ideal as a standalone algebra and certifies it.
/// Throws HypothesesUnmet listing the failed hypotheses.
std::vector<ComponentReport> simple_components(const ConnectionContext& ctx, const std::vector<IdealData>& ideals,
                                               Exec exec = Exec::parallel);

struct NamedVerdict {
    std::string name;
    /// Conclusion of a theorem (a failure indicts input or implementation)
    /// rather than a property of the input.
    bool theorem = false;
    /// False when the theorem's hypotheses are unmet; the verdict is then vacuous.
    bool applicable = true;
    Verdict verdict;
};

struct DecompositionReport {
    std::vector<Root> lambda;
    std::vector<Root> omega;
    std::vector<std::vector<Root>> classes;
    std::vector<IdealData> ideals;
    Subspace center;
    Subspace product_span;
    Subspace u;
    /// Fixed order: ideal_property, pairwise_annihilation, spans_P,
    /// direct_sum, center_zero, H_generated, maximal_length,
    /// root_multiplicative, simple_components.
    std::vector<NamedVerdict> verdicts;
    std::vector<ComponentReport> components;

    const NamedVerdict& verdict(const std::string& name) const;
    /// Some applicable theorem verdict failed.
    bool theorem_failure() const;
};

DecompositionReport decompose(const ConnectionContext& ctx, Exec exec = Exec::parallel);

} // namespace mpj
