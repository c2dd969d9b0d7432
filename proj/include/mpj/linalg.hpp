#pragma once

#include "mpj/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace mpj {

using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
/// y += a * x
void axpy(Vec& y, const Rational& a, const Vec& x);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);
Vec operator-(const Vec& v);

/// Dense rectangular matrix over the rationals, stored by rows.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    /// `cols` is needed so that an empty row list still has a shape.
    static Matrix from_rows(std::vector<Vec> rows, std::size_t cols);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const Vec& row(std::size_t i) const { return rows_[i]; }
    const std::vector<Vec>& row_list() const { return rows_; }

    /// Matrix-vector product m * v.
    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<Vec> rows_;
};

/// A rational vector subspace identified by its reduced row echelon basis.
///
/// The basis rows have strictly increasing pivot columns, pivot entries 1 and
/// zeros elsewhere in every pivot column, so two subspaces are equal iff their
/// basis lists are identical.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, std::span<const Vec> vectors);
    static Subspace full(std::size_t n);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// v minus its projection along the pivot columns; zero iff v is in the span.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the canonical basis. v must lie in the subspace.
    Vec coordinates(const Vec& v) const;
    /// Inverse of coordinates().
    Vec combine(const Vec& coords) const;

    bool operator==(const Subspace&) const = default;

private:
    friend Subspace rref(const Matrix& m);

    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/// Row space of m in canonical form.
Subspace rref(const Matrix& m);
/// {v : m v = 0}.
Subspace kernel(const Matrix& m);
Subspace intersect(const Subspace& s, const Subspace& t);
Subspace sum(const Subspace& s, const Subspace& t);
/// {w : w . v = 0 for all v in s}.
Subspace annihilator(const Subspace& s);

/// A complement c of s inside `within`: s (+) c = within. The basis vectors of
/// `within` are scanned in canonical order and kept when they enlarge the span.
Subspace complement(const Subspace& s, const Subspace& within);

/// Coefficients c_0..c_n (ascending powers) of det(x I - m). Monic.
std::vector<Rational> characteristic_polynomial(const Matrix& m);

struct Eigenpair {
    Rational value;
    Subspace space;
};

/// All rational eigenvalues of a square matrix, ascending, with eigenspaces.
std::vector<Eigenpair> rational_eigen(const Matrix& m);

/// Integer roots of an integer polynomial (ascending coefficients), ascending,
/// without multiplicity.
std::vector<Integer> integer_roots(std::vector<Integer> coeffs);

} // namespace mpj
