#pragma once

#include "mpj/algebra.hpp"
#include "mpj/axioms.hpp"

#include <string>
#include <vector>

namespace mpj {

/// A functional on H, as its values on the canonical basis of H.
using Root = Vec;

bool is_zero_root(const Root& r);

struct RootSpace {
    Root root;
    Subspace space;

    bool operator==(const RootSpace&) const = default;
};

/// P = H (+) sum of root spaces P_alpha, relative to a given abelian H.
class RootDecomposition {
public:
    RootDecomposition(AlgebraSpec algebra, Subspace masa, std::vector<RootSpace> roots, Subspace zero_space);

    const AlgebraSpec& algebra() const { return algebra_; }
    const Subspace& masa() const { return masa_; }
    /// Nonzero roots with their spaces, sorted lexicographically by root.
    const std::vector<RootSpace>& roots() const { return roots_; }
    const Subspace& zero_space() const { return zero_space_; }

    bool has_root(const Root& r) const;
    /// P_r: H for the zero functional, the root space for r in Lambda, and the
    /// zero subspace otherwise.
    Subspace space(const Root& r) const;
    std::vector<Root> root_list() const;
    bool is_symmetric() const;

private:
    AlgebraSpec algebra_;
    Subspace masa_;
    std::vector<RootSpace> roots_;
    Subspace zero_space_;
};

/// ad(h) as a matrix: column i holds [h, e_i].
Matrix ad_matrix(const AlgebraSpec& a, const Vec& h);

/// Root-space decomposition by successive rational eigen-decompositions of
/// ad(h_i) over the canonical basis of `masa`.
///
/// Throws NotAbelian if [H,H] or HH is nonzero, NotSplit if some ad(h_i) is
/// not diagonalizable over the rationals on a refined block, and NotMasa if
/// the zero-weight space differs from H.
RootDecomposition root_decomposition(const AlgebraSpec& a, const Subspace& masa);

struct SplitReport {
    /// H and the root spaces are independent and together span P.
    Verdict direct_and_spanning;
    /// P_0 = H.
    Verdict zero_space_is_masa;
    /// [h, v] = alpha(h) v on every basis pair.
    Verdict joint_eigen;
    bool symmetric = false;

    bool all_pass() const { return direct_and_spanning.pass && zero_space_is_masa.pass && joint_eigen.pass; }
};

SplitReport verify_split(const RootDecomposition& rd);

struct RootProductReport {
    /// One line per checked containment.
    std::vector<std::string> verified;
    Verdict verdict;
};

/// For every ordered pair (alpha, beta) in Lambda u {0}:
///   [P_a, P_b] in P_{a+b}           (a != b)
///   [P_a, P_a] in P_{2a} + P_{-a}
///   P_a P_b    in P_{a+b}
RootProductReport verify_rootspace_products(const RootDecomposition& rd, Exec exec = Exec::parallel);

std::string format_root(const Root& r);

} // namespace mpj
