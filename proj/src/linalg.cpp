#include "mpj/linalg.hpp"

#include "mpj/errors.hpp"

#include <algorithm>
#include <utility>

namespace mpj {

Vec zero_vec(std::size_t n)
{
    return Vec(n, Rational(0));
}

Vec unit_vec(std::size_t n, std::size_t i)
{
    Vec v = zero_vec(n);
    v[i] = 1;
    return v;
}

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

void axpy(Vec& y, const Rational& a, const Vec& x)
{
    if (sgn(a) == 0)
        return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (sgn(x[i]) != 0)
            y[i] += a * x[i];
}

Vec operator+(const Vec& a, const Vec& b)
{
    Vec r = a;
    axpy(r, Rational(1), b);
    return r;
}

Vec operator-(const Vec& a, const Vec& b)
{
    Vec r = a;
    axpy(r, Rational(-1), b);
    return r;
}

Vec operator*(const Rational& s, const Vec& v)
{
    Vec r = zero_vec(v.size());
    axpy(r, s, v);
    return r;
}

Vec operator-(const Vec& v)
{
    return Rational(-1) * v;
}

// --- Matrix -----------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, zero_vec(cols)) {}

Matrix Matrix::from_rows(std::vector<Vec> rows, std::size_t cols)
{
    for (const auto& r : rows)
        if (r.size() != cols)
            throw DimensionMismatch("matrix rows must share one length");
    Matrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Vec Matrix::apply(const Vec& v) const
{
    if (v.size() != cols_)
        throw DimensionMismatch("matrix-vector size mismatch");
    Vec out = zero_vec(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(rows_[i][j]) != 0 && sgn(v[j]) != 0)
                out[i] += rows_[i][j] * v[j];
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = rows_[i][j];
    return t;
}

Matrix Matrix::operator*(const Matrix& other) const
{
    if (cols_ != other.rows())
        throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(rows(), other.cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (sgn(rows_[i][k]) != 0)
                axpy(out.rows_[i], rows_[i][k], other.rows_[k]);
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const
{
    if (rows() != other.rows() || cols_ != other.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < rows(); ++i)
        axpy(out.rows_[i], Rational(-1), other.rows_[i]);
    return out;
}

// --- Subspace ----------------------------------------------------------------

Subspace rref(const Matrix& m)
{
    std::vector<Vec> rows = m.row_list();
    const std::size_t ncols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pick = rank;
        while (pick < rows.size() && sgn(rows[pick][col]) == 0)
            ++pick;
        if (pick == rows.size())
            continue;
        std::swap(rows[rank], rows[pick]);
        Rational inv = 1 / rows[rank][col];
        for (auto& x : rows[rank])
            x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || sgn(rows[r][col]) == 0)
                continue;
            Rational f = -rows[r][col];
            axpy(rows[r], f, rows[rank]);
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    Subspace s(ncols);
    s.basis_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vec> vectors)
{
    return rref(Matrix::from_rows(std::vector<Vec>(vectors.begin(), vectors.end()), ambient_dim));
}

Subspace Subspace::full(std::size_t n)
{
    return rref(Matrix::identity(n));
}

Vec Subspace::reduce(const Vec& v) const
{
    if (v.size() != ambient_)
        throw DimensionMismatch("vector does not match subspace ambient dimension");
    Vec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Rational f = r[pivots_[i]];
        if (sgn(f) != 0)
            axpy(r, -f, basis_[i]);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const
{
    return mpj::is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        throw DimensionMismatch("subspace ambient dimensions differ");
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Vec Subspace::coordinates(const Vec& v) const
{
    if (!contains(v))
        throw NotContained("vector is not in the subspace");
    Vec c(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        c[i] = v[pivots_[i]];
    return c;
}

Vec Subspace::combine(const Vec& coords) const
{
    if (coords.size() != basis_.size())
        throw DimensionMismatch("coordinate vector length differs from subspace dimension");
    Vec v = zero_vec(ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        axpy(v, coords[i], basis_[i]);
    return v;
}

Subspace kernel(const Matrix& m)
{
    const std::size_t n = m.cols();
    Subspace r = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots())
        is_pivot[p] = true;
    std::vector<Vec> vecs;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        Vec v = zero_vec(n);
        v[f] = 1;
        for (std::size_t i = 0; i < r.dim(); ++i)
            v[r.pivots()[i]] = -r.basis()[i][f];
        vecs.push_back(std::move(v));
    }
    return Subspace::span(n, vecs);
}

Subspace annihilator(const Subspace& s)
{
    return kernel(Matrix::from_rows(s.basis(), s.ambient_dim()));
}

Subspace intersect(const Subspace& s, const Subspace& t)
{
    if (s.ambient_dim() != t.ambient_dim())
        throw DimensionMismatch("intersect: ambient dimensions differ");
    // s ∩ t = (s° + t°)°, with ° the annihilator under the standard pairing.
    std::vector<Vec> rows = annihilator(s).basis();
    const Subspace more = annihilator(t);
    rows.insert(rows.end(), more.basis().begin(), more.basis().end());
    return kernel(Matrix::from_rows(std::move(rows), s.ambient_dim()));
}

Subspace sum(const Subspace& s, const Subspace& t)
{
    if (s.ambient_dim() != t.ambient_dim())
        throw DimensionMismatch("sum: ambient dimensions differ");
    std::vector<Vec> rows = s.basis();
    rows.insert(rows.end(), t.basis().begin(), t.basis().end());
    return Subspace::span(s.ambient_dim(), rows);
}

Subspace complement(const Subspace& s, const Subspace& within)
{
    if (!within.contains(s))
        throw NotContained("complement: s is not contained in `within`");
    Subspace current = s;
    std::vector<Vec> added;
    for (const auto& w : within.basis()) {
        if (current.contains(w))
            continue;
        added.push_back(w);
        current = sum(current, Subspace::span(s.ambient_dim(), std::span<const Vec>(&w, 1)));
    }
    return Subspace::span(s.ambient_dim(), added);
}

// --- Eigenvalues ---------------------------------------------------------------

std::vector<Rational> characteristic_polynomial(const Matrix& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw DimensionMismatch("characteristic polynomial needs a square matrix");
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i)
            mk(i, i) += c[n - k + 1];
        Matrix amk = m * mk;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += amk(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return c;
}

namespace {

Integer eval_poly(const std::vector<Integer>& c, const Integer& x)
{
    Integer acc = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * x + c[i];
    return acc;
}

// Divides c by (x - r); c(r) must be zero.
void deflate(std::vector<Integer>& c, const Integer& r)
{
    const std::size_t deg = c.size() - 1;
    std::vector<Integer> q(deg);
    Integer carry = 0;
    for (std::size_t i = deg; i-- > 0;) {
        carry = c[i + 1] + carry * r;
        q[i] = carry;
    }
    c = std::move(q);
}

void trim(std::vector<Integer>& c)
{
    while (c.size() > 1 && c.back() == 0)
        c.pop_back();
}

// Fujiwara bound: every complex root satisfies |z| <= 2 max |a_{n-i}/a_n|^{1/i}.
Integer root_bound(const std::vector<Integer>& c)
{
    const std::size_t deg = c.size() - 1;
    Integer best = 0;
    Integer lead = abs(c[deg]);
    for (std::size_t i = 1; i <= deg; ++i) {
        Integer a = abs(c[deg - i]);
        if (a == 0)
            continue;
        Integer ratio = a / lead + 1;
        Integer r;
        mpz_root(r.get_mpz_t(), ratio.get_mpz_t(), i);
        r += 1;
        if (r > best)
            best = r;
    }
    return 2 * best;
}

} // namespace

std::vector<Integer> integer_roots(std::vector<Integer> c)
{
    trim(c);
    std::vector<Integer> roots;
    if (c.size() <= 1)
        return roots;
    if (c[0] == 0) {
        roots.push_back(0);
        while (c.size() > 1 && c[0] == 0)
            c.erase(c.begin());
    }
    Integer bound = root_bound(c);
    for (Integer d = 1; c.size() > 1 && d <= bound; ++d) {
        if (!mpz_divisible_p(c[0].get_mpz_t(), d.get_mpz_t()))
            continue;
        for (int sign : {1, -1}) {
            Integer cand = sign * d;
            if (c.size() > 1 && eval_poly(c, cand) == 0) {
                roots.push_back(cand);
                while (c.size() > 1 && eval_poly(c, cand) == 0)
                    deflate(c, cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Eigenpair> rational_eigen(const Matrix& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw DimensionMismatch("rational_eigen needs a square matrix");
    std::vector<Eigenpair> out;
    if (n == 0)
        return out;

    // Scale to an integer matrix; its characteristic polynomial is monic over
    // the integers, so its rational roots are integers.
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    Matrix scaled = m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scaled(i, j) *= scale;

    std::vector<Rational> cp = characteristic_polynomial(scaled);
    std::vector<Integer> icp;
    icp.reserve(cp.size());
    for (const auto& q : cp)
        icp.emplace_back(q.get_num());

    for (const auto& r : integer_roots(icp)) {
        Rational lambda(r, scale);
        lambda.canonicalize();
        Matrix shifted = m;
        for (std::size_t i = 0; i < n; ++i)
            shifted(i, i) -= lambda;
        out.push_back({lambda, kernel(shifted)});
    }
    return out;
}

} // namespace mpj
