#include "mpj/algebra.hpp"

#include "mpj/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace mpj {

namespace {

std::string unique_label(const std::string& wanted, const std::set<std::string>& taken)
{
    if (!taken.count(wanted))
        return wanted;
    for (int suffix = 2;; ++suffix) {
        std::string cand = wanted + "_" + std::to_string(suffix);
        if (!taken.count(cand))
            return cand;
    }
}

} // namespace

AlgebraSpec::AlgebraSpec(std::vector<std::string> basis_names)
    : names_(std::move(basis_names)), bracket_(names_.size() * names_.size(), zero_vec(names_.size())),
      jordan_(bracket_)
{
}

AlgebraSpec AlgebraSpec::from_dense_unchecked(std::vector<std::string> basis_names, std::vector<Vec> bracket,
                                              std::vector<Vec> jordan)
{
    const std::size_t n = basis_names.size();
    if (bracket.size() != n * n || jordan.size() != n * n)
        throw DimensionMismatch("structure constant tables must have n*n rows");
    for (const auto& r : bracket)
        if (r.size() != n)
            throw DimensionMismatch("bracket row length differs from dimension");
    for (const auto& r : jordan)
        if (r.size() != n)
            throw DimensionMismatch("jordan row length differs from dimension");
    AlgebraSpec a;
    a.names_ = std::move(basis_names);
    a.bracket_ = std::move(bracket);
    a.jordan_ = std::move(jordan);
    return a;
}

AlgebraSpec AlgebraSpec::from_dense(std::vector<std::string> basis_names, std::vector<Vec> bracket,
                                    std::vector<Vec> jordan)
{
    AlgebraSpec a = from_dense_unchecked(std::move(basis_names), std::move(bracket), std::move(jordan));
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (a.bracket_coeff(i, j, k) != -a.bracket_coeff(j, i, k))
                    throw InvalidStructure("bracket constants are not antisymmetric at (" + a.names_[i] + ", " +
                                           a.names_[j] + ")");
                if (a.jordan_coeff(i, j, k) != a.jordan_coeff(j, i, k))
                    throw InvalidStructure("jordan constants are not symmetric at (" + a.names_[i] + ", " +
                                           a.names_[j] + ")");
            }
    return a;
}

void AlgebraSpec::check_index(std::size_t i, std::size_t j, std::size_t k) const
{
    if (i >= dim() || j >= dim() || k >= dim())
        throw DimensionMismatch("structure constant index out of range");
}

void AlgebraSpec::set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& value)
{
    check_index(i, j, k);
    if (i == j)
        throw InvalidStructure("[x,x] = 0: diagonal bracket constants are fixed to zero");
    bracket_[i * dim() + j][k] = value;
    bracket_[j * dim() + i][k] = -value;
}

void AlgebraSpec::set_jordan(std::size_t i, std::size_t j, std::size_t k, const Rational& value)
{
    check_index(i, j, k);
    jordan_[i * dim() + j][k] = value;
    jordan_[j * dim() + i][k] = value;
}

bool AlgebraSpec::jordan_is_zero() const
{
    return std::all_of(jordan_.begin(), jordan_.end(), [](const Vec& v) { return is_zero(v); });
}

bool AlgebraSpec::bracket_is_zero() const
{
    return std::all_of(bracket_.begin(), bracket_.end(), [](const Vec& v) { return is_zero(v); });
}

namespace {

Vec multiply(const AlgebraSpec& a, const Vec& u, const Vec& v, bool use_bracket)
{
    const std::size_t n = a.dim();
    if (u.size() != n || v.size() != n)
        throw DimensionMismatch("product operand length differs from algebra dimension");
    Vec out = zero_vec(n);
    Rational uv;
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(u[i]) == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(v[j]) == 0)
                continue;
            const Vec& row = use_bracket ? a.bracket_basis(i, j) : a.jordan_basis(i, j);
            uv = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(row[k]) != 0)
                    out[k] += uv * row[k];
        }
    }
    return out;
}

} // namespace

Vec bracket(const AlgebraSpec& a, const Vec& u, const Vec& v)
{
    return multiply(a, u, v, true);
}

Vec jordan_prod(const AlgebraSpec& a, const Vec& u, const Vec& v)
{
    return multiply(a, u, v, false);
}

Vec jacobian(const AlgebraSpec& a, const Vec& x, const Vec& y, const Vec& z)
{
    Vec r = bracket(a, bracket(a, x, y), z);
    axpy(r, Rational(-1), bracket(a, bracket(a, x, z), y));
    axpy(r, Rational(-1), bracket(a, x, bracket(a, y, z)));
    return r;
}

Subspace center(const AlgebraSpec& a)
{
    const std::size_t n = a.dim();
    // Row (j, k) of the stacked system maps v to the e_k coefficient of [v, e_j]
    // (resp. v e_j).
    std::vector<Vec> rows;
    rows.reserve(2 * n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Vec rb(n), rj(n);
            for (std::size_t i = 0; i < n; ++i) {
                rb[i] = a.bracket_coeff(i, j, k);
                rj[i] = a.jordan_coeff(i, j, k);
            }
            rows.push_back(std::move(rb));
            rows.push_back(std::move(rj));
        }
    return kernel(Matrix::from_rows(std::move(rows), n));
}

Subspace ideal_closure(const AlgebraSpec& a, const Subspace& s)
{
    const std::size_t n = a.dim();
    if (s.ambient_dim() != n)
        throw DimensionMismatch("ideal_closure: seed lives in a different ambient space");
    Subspace current = s;
    std::deque<Vec> pending(s.basis().begin(), s.basis().end());
    while (!pending.empty() && current.dim() < n) {
        Vec v = std::move(pending.front());
        pending.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
            const Vec e = unit_vec(n, j);
            for (Vec p : {bracket(a, v, e), bracket(a, e, v), jordan_prod(a, v, e), jordan_prod(a, e, v)}) {
                if (current.contains(p))
                    continue;
                current = sum(current, Subspace::span(n, std::span<const Vec>(&p, 1)));
                pending.push_back(std::move(p));
            }
        }
    }
    return current;
}

namespace {

Subspace product_span(const AlgebraSpec& a, const Subspace& s, const Subspace& t, bool use_bracket)
{
    if (s.ambient_dim() != a.dim() || t.ambient_dim() != a.dim())
        throw DimensionMismatch("product span: subspace ambient dimension differs from algebra");
    std::vector<Vec> prods;
    for (const auto& u : s.basis())
        for (const auto& v : t.basis()) {
            Vec p = use_bracket ? bracket(a, u, v) : jordan_prod(a, u, v);
            if (!is_zero(p))
                prods.push_back(std::move(p));
        }
    return Subspace::span(a.dim(), prods);
}

} // namespace

Subspace bracket_span(const AlgebraSpec& a, const Subspace& s, const Subspace& t)
{
    return product_span(a, s, t, true);
}

Subspace jordan_span(const AlgebraSpec& a, const Subspace& s, const Subspace& t)
{
    return product_span(a, s, t, false);
}

std::optional<ProductEscape> find_escape(const AlgebraSpec& a, const Subspace& s, const Subspace& t,
                                         const Subspace& target)
{
    for (bool use_bracket : {true, false})
        for (const auto& u : s.basis())
            for (const auto& v : t.basis()) {
                Vec p = use_bracket ? bracket(a, u, v) : jordan_prod(a, u, v);
                if (!target.contains(p))
                    return ProductEscape{use_bracket, u, v, std::move(p)};
            }
    return std::nullopt;
}

AlgebraSpec direct_sum(const AlgebraSpec& a, const AlgebraSpec& b)
{
    const std::size_t na = a.dim(), nb = b.dim();
    std::vector<std::string> names = a.basis_names();
    std::set<std::string> taken(names.begin(), names.end());
    for (const auto& name : b.basis_names()) {
        names.push_back(unique_label(name, taken));
        taken.insert(names.back());
    }
    AlgebraSpec out(std::move(names));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) {
                if (i < j && sgn(a.bracket_coeff(i, j, k)) != 0)
                    out.set_bracket(i, j, k, a.bracket_coeff(i, j, k));
                if (i <= j && sgn(a.jordan_coeff(i, j, k)) != 0)
                    out.set_jordan(i, j, k, a.jordan_coeff(i, j, k));
            }
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k) {
                if (i < j && sgn(b.bracket_coeff(i, j, k)) != 0)
                    out.set_bracket(na + i, na + j, na + k, b.bracket_coeff(i, j, k));
                if (i <= j && sgn(b.jordan_coeff(i, j, k)) != 0)
                    out.set_jordan(na + i, na + j, na + k, b.jordan_coeff(i, j, k));
            }
    return out;
}

Subspace direct_sum(const Subspace& s, const Subspace& t)
{
    const std::size_t n = s.ambient_dim() + t.ambient_dim();
    std::vector<Vec> rows;
    for (const auto& v : s.basis()) {
        Vec w = zero_vec(n);
        std::copy(v.begin(), v.end(), w.begin());
        rows.push_back(std::move(w));
    }
    for (const auto& v : t.basis()) {
        Vec w = zero_vec(n);
        std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(s.ambient_dim()));
        rows.push_back(std::move(w));
    }
    return Subspace::span(n, rows);
}

AlgebraSpec subalgebra_on_subspace(const AlgebraSpec& a, const Subspace& s)
{
    if (s.ambient_dim() != a.dim())
        throw DimensionMismatch("subalgebra_on_subspace: ambient dimension mismatch");
    if (auto esc = find_escape(a, s, s, s))
        throw NotClosed(std::string(esc->is_bracket ? "[" : "(") + format_vec(a, esc->left) + ", " +
                        format_vec(a, esc->right) + (esc->is_bracket ? "]" : ")") + " = " +
                        format_vec(a, esc->product) + " leaves the subspace");

    const std::size_t m = s.dim();
    std::vector<std::string> names;
    std::set<std::string> taken;
    for (std::size_t r = 0; r < m; ++r) {
        const Vec& v = s.basis()[r];
        std::size_t nonzero = 0;
        for (const auto& q : v)
            nonzero += sgn(q) != 0;
        std::string wanted =
            nonzero == 1 && v[s.pivots()[r]] == 1 ? a.basis_names()[s.pivots()[r]] : "v" + std::to_string(r + 1);
        names.push_back(unique_label(wanted, taken));
        taken.insert(names.back());
    }
    AlgebraSpec out(std::move(names));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            const Vec& u = s.basis()[i];
            const Vec& v = s.basis()[j];
            Vec bc = s.coordinates(bracket(a, u, v));
            Vec jc = s.coordinates(jordan_prod(a, u, v));
            for (std::size_t k = 0; k < m; ++k) {
                if (i != j && sgn(bc[k]) != 0)
                    out.set_bracket(i, j, k, bc[k]);
                if (sgn(jc[k]) != 0)
                    out.set_jordan(i, j, k, jc[k]);
            }
        }
    return out;
}

std::string format_vec(const AlgebraSpec& a, const Vec& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0)
            continue;
        Rational c = v[i];
        if (out.empty()) {
            if (sgn(c) < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
            c = abs(c);
        }
        if (c != 1)
            out += to_string(c) + "*";
        out += i < a.dim() ? a.basis_names()[i] : "e" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::string format_coords(const Vec& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

} // namespace mpj
