#pragma once

#include "mpj/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mpj {

/// A finite-dimensional algebra with two bilinear products given by structure
/// constants: the bracket [e_i, e_j] = sum_k c[i][j][k] e_k and the Jordan
/// (juxtaposition) product e_i e_j = sum_k d[i][j][k] e_k.
///
/// The setters keep c antisymmetric and d symmetric, so an AlgebraSpec built
/// through them can never violate either invariant.
class AlgebraSpec {
public:
    AlgebraSpec() = default;
    explicit AlgebraSpec(std::vector<std::string> basis_names);

    /// Validates c[i][j][k] = -c[j][i][k] and d[i][j][k] = d[j][i][k];
    /// throws InvalidStructure otherwise. Indexing is c[(i*n + j)][k].
    static AlgebraSpec from_dense(std::vector<std::string> basis_names, std::vector<Vec> bracket,
                                  std::vector<Vec> jordan);
    /// Same as from_dense without validation. Only meant for fault injection
    /// into raw constants, e.g. to exercise verify_axioms.
    static AlgebraSpec from_dense_unchecked(std::vector<std::string> basis_names, std::vector<Vec> bracket,
                                            std::vector<Vec> jordan);

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }

    /// Sets [e_i, e_j] on e_k to value and [e_j, e_i] on e_k to -value. i != j.
    void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& value);
    /// Sets e_i e_j and e_j e_i on e_k to value.
    void set_jordan(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

    const Rational& bracket_coeff(std::size_t i, std::size_t j, std::size_t k) const
    {
        return bracket_[i * dim() + j][k];
    }
    const Rational& jordan_coeff(std::size_t i, std::size_t j, std::size_t k) const
    {
        return jordan_[i * dim() + j][k];
    }
    /// [e_i, e_j] as a vector.
    const Vec& bracket_basis(std::size_t i, std::size_t j) const { return bracket_[i * dim() + j]; }
    /// e_i e_j as a vector.
    const Vec& jordan_basis(std::size_t i, std::size_t j) const { return jordan_[i * dim() + j]; }

    bool jordan_is_zero() const;
    bool bracket_is_zero() const;

    bool operator==(const AlgebraSpec&) const = default;

private:
    void check_index(std::size_t i, std::size_t j, std::size_t k) const;

    std::vector<std::string> names_;
    std::vector<Vec> bracket_;
    std::vector<Vec> jordan_;
};

Vec bracket(const AlgebraSpec& a, const Vec& u, const Vec& v);
Vec jordan_prod(const AlgebraSpec& a, const Vec& u, const Vec& v);

/// Jacobian J(x,y,z) = [[x,y],z] - [[x,z],y] - [x,[y,z]].
Vec jacobian(const AlgebraSpec& a, const Vec& x, const Vec& y, const Vec& z);

/// Z(P) = {v : [v,P] = 0 and vP = 0}.
Subspace center(const AlgebraSpec& a);

/// Smallest subspace containing s and stable under left and right bracket and
/// Jordan multiplication by every basis vector.
Subspace ideal_closure(const AlgebraSpec& a, const Subspace& s);

/// Span of all products [s, t] (s in S, t in T).
Subspace bracket_span(const AlgebraSpec& a, const Subspace& s, const Subspace& t);
/// Span of all products s t (s in S, t in T).
Subspace jordan_span(const AlgebraSpec& a, const Subspace& s, const Subspace& t);

/// A product of two basis vectors that leaves a target subspace.
struct ProductEscape {
    bool is_bracket = true;
    Vec left;
    Vec right;
    Vec product;
};

/// First basis product of (S, T) not contained in `target`, scanning brackets
/// before Jordan products and both in basis order.
std::optional<ProductEscape> find_escape(const AlgebraSpec& a, const Subspace& s, const Subspace& t,
                                         const Subspace& target);

/// Block-diagonal sum. Labels of `b` that collide with labels of `a` get a
/// numeric suffix.
AlgebraSpec direct_sum(const AlgebraSpec& a, const AlgebraSpec& b);
/// s (+) t inside the direct sum of their ambient spaces.
Subspace direct_sum(const Subspace& s, const Subspace& t);

/// Restricts both products to s, expressed in the canonical basis of s.
/// Throws NotClosed when a product of basis vectors leaves s.
AlgebraSpec subalgebra_on_subspace(const AlgebraSpec& a, const Subspace& s);

/// Exact rendering with basis labels, e.g. "2*e - 1/3*h"; "0" for zero.
std::string format_vec(const AlgebraSpec& a, const Vec& v);
/// Plain coordinate rendering, e.g. "(1, -1/2)".
std::string format_coords(const Vec& v);

} // namespace mpj
