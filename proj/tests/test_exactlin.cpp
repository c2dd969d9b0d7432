#include "support.hpp"

#include "mpj/errors.hpp"
#include "mpj/linalg.hpp"
#include "mpj/rational.hpp"

#include <doctest.h>

using namespace mpj;
using testing::cofactor_det;

namespace {

Matrix mat(std::vector<Vec> rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    return Matrix::from_rows(std::move(rows), cols);
}

Subspace span_of(std::size_t n, std::vector<Vec> vs)
{
    return Subspace::span(n, vs);
}

} // namespace

TEST_SUITE("exactlin")
{
    TEST_CASE("rationals parse exactly and canonicalize")
    {
        CHECK(parse_rational("6/4") == Rational(3, 2));
        CHECK(parse_rational("-7") == Rational(-7));
        CHECK(parse_rational("0/5") == 0);
        CHECK(to_string(parse_rational("-10/4")) == "-5/2");
        CHECK_THROWS_AS(parse_rational("10/-4"), ParseError);
        CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
        CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
        CHECK_THROWS_AS(parse_rational(""), ParseError);
        CHECK_THROWS_AS(parse_rational("x"), ParseError);
        CHECK(to_string(Rational(1, 3) + Rational(1, 6)) == "1/2");
    }

    TEST_CASE("rref examples")
    {
        auto a = rref(mat({{1, 2}, {2, 4}}));
        REQUIRE(a.dim() == 1);
        CHECK(a.basis()[0] == Vec{1, 2});

        auto z = rref(mat({{0, 0}}));
        CHECK(z.dim() == 0);
        CHECK(z.ambient_dim() == 2);

        auto d = rref(mat({{2, 0}, {0, 3}}));
        CHECK(d.basis() == std::vector<Vec>{{1, 0}, {0, 1}});
    }

    TEST_CASE("kernel examples")
    {
        CHECK(kernel(Matrix::identity(3)).is_zero());
        CHECK(kernel(Matrix(2, 3)) == Subspace::full(3));
        auto k = kernel(mat({{1, 1}}));
        REQUIRE(k.dim() == 1);
        CHECK(k.basis()[0] == Vec{1, -1});
    }

    TEST_CASE("intersect examples")
    {
        auto s = span_of(3, {{1, 2, 3}, {0, 1, 1}});
        CHECK(intersect(s, s) == s);
        CHECK(intersect(span_of(2, {unit_vec(2, 0)}), span_of(2, {unit_vec(2, 1)})).is_zero());
        auto t = intersect(span_of(3, {unit_vec(3, 0), unit_vec(3, 1)}), span_of(3, {unit_vec(3, 1), unit_vec(3, 2)}));
        CHECK(t == span_of(3, {unit_vec(3, 1)}));
        CHECK_THROWS_AS(intersect(Subspace(2), Subspace(3)), DimensionMismatch);
    }

    TEST_CASE("complement examples and errors")
    {
        auto w = span_of(3, {{1, 1, 0}, {0, 0, 1}});
        CHECK(complement(w, w).is_zero());
        CHECK(complement(Subspace(3), w) == w);
        CHECK(complement(span_of(2, {unit_vec(2, 0)}), Subspace::full(2)) == span_of(2, {unit_vec(2, 1)}));
        CHECK_THROWS_AS(complement(span_of(3, {unit_vec(3, 1)}), w), NotContained);
    }

    TEST_CASE("coordinates and combine are inverse")
    {
        auto s = span_of(4, {{1, 2, 0, 1}, {0, 1, 1, 1}});
        const Vec v = Rational(3) * s.basis()[0] - Rational(1, 2) * s.basis()[1];
        CHECK(s.combine(s.coordinates(v)) == v);
        CHECK(s.coordinates(v) == Vec{3, Rational(-1, 2)});
    }

    TEST_CASE("rational eigen examples")
    {
        auto ev = rational_eigen(mat({{2, 0, 0}, {0, -2, 0}, {0, 0, 0}}));
        REQUIRE(ev.size() == 3);
        CHECK(ev[0].value == -2);
        CHECK(ev[0].space == span_of(3, {unit_vec(3, 1)}));
        CHECK(ev[1].value == 0);
        CHECK(ev[1].space == span_of(3, {unit_vec(3, 2)}));
        CHECK(ev[2].value == 2);
        CHECK(ev[2].space == span_of(3, {unit_vec(3, 0)}));

        CHECK(rational_eigen(mat({{0, -1}, {1, 0}})).empty());

        // ad(h) of sl2 in the basis (h, e, f).
        auto ad = rational_eigen(mat({{0, 0, 0}, {0, 2, 0}, {0, 0, -2}}));
        REQUIRE(ad.size() == 3);
        for (const auto& p : ad)
            CHECK(p.space.dim() == 1);
    }

    TEST_CASE("rational eigenvalues with denominators")
    {
        // Eigenvalues 1/2 and -1/3, non-diagonal basis.
        auto m = mat({{Rational(1, 2), 1}, {0, Rational(-1, 3)}});
        auto ev = rational_eigen(m);
        REQUIRE(ev.size() == 2);
        CHECK(ev[0].value == Rational(-1, 3));
        CHECK(ev[1].value == Rational(1, 2));
        for (const auto& p : ev)
            for (const auto& v : p.space.basis())
                CHECK(m.apply(v) == p.value * v);
    }

    TEST_CASE("non-diagonalizable matrix reports a short eigenspace")
    {
        auto ev = rational_eigen(mat({{1, 1}, {0, 1}}));
        REQUIRE(ev.size() == 1);
        CHECK(ev[0].value == 1);
        CHECK(ev[0].space.dim() == 1);
    }

    TEST_CASE("integer roots")
    {
        // (x-3)(x+2)x^2 = x^4 - x^3 - 6x^2
        CHECK(integer_roots({0, 0, -6, -1, 1}) == std::vector<Integer>{-2, 0, 3});
        CHECK(integer_roots({1, 0, 1}).empty());
        CHECK(integer_roots({-12, 1}) == std::vector<Integer>{12});
    }

    TEST_CASE("characteristic polynomial matches a cofactor determinant oracle")
    {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 1 + trial % 5;
            auto rows = testing::random_vectors(rng, n, n);
            const Matrix m = Matrix::from_rows(rows, n);
            const auto coeffs = characteristic_polynomial(m);
            REQUIRE(coeffs.size() == n + 1);
            CHECK(coeffs[n] == 1);
            for (int x = -3; x <= 3; ++x) {
                std::vector<Vec> shifted(n, Vec(n));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        shifted[i][j] = (i == j ? Rational(x) : Rational(0)) - rows[i][j];
                Rational value = 0, power = 1;
                for (const auto& c : coeffs) {
                    value += c * power;
                    power *= x;
                }
                CHECK(value == cofactor_det(shifted));
            }
        }
    }

    TEST_CASE("property: rref is idempotent and rank-nullity holds")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 6;
            auto rows = testing::random_vectors(rng, c, r, 2);
            const Matrix m = Matrix::from_rows(rows, c);
            const Subspace s = rref(m);
            CHECK(rref(Matrix::from_rows(s.basis(), c)) == s);
            CHECK(s.dim() == testing::naive_rank(rows));
            const Subspace k = kernel(m);
            CHECK(k.dim() + rref(m.transpose()).dim() == c);
            for (const auto& v : k.basis())
                CHECK(is_zero(m.apply(v)));
        }
    }

    TEST_CASE("property: complement is a direct complement")
    {
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 2 + trial % 5;
            const Subspace w = testing::random_subspace(rng, n, n);
            // A subspace of w: span of combinations of w's basis.
            std::vector<Vec> gens;
            for (const auto& coeffs : testing::random_vectors(rng, w.dim(), trial % 3))
                gens.push_back(w.combine(coeffs));
            const Subspace s = Subspace::span(n, gens);
            const Subspace c = complement(s, w);
            CHECK(s.dim() + c.dim() == w.dim());
            CHECK(intersect(s, c).is_zero());
            CHECK(sum(s, c) == w);
        }
    }

    TEST_CASE("property: eigenspaces are exact and independent")
    {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 2 + trial % 4;
            // Conjugate a diagonal matrix by a unimodular upper triangular one.
            auto d = testing::random_vectors(rng, n, 1, 2)[0];
            Matrix diag(n, n), p = Matrix::identity(n), pinv;
            for (std::size_t i = 0; i < n; ++i)
                diag(i, i) = d[i];
            auto extra = testing::random_vectors(rng, n, n, 2);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    p(i, j) = extra[i][j];
            // Invert the unit upper triangular p by back substitution.
            pinv = Matrix::identity(n);
            for (std::size_t col = 0; col < n; ++col)
                for (std::size_t i = n; i-- > 0;) {
                    Rational v = (i == col) ? 1 : 0;
                    for (std::size_t k = i + 1; k < n; ++k)
                        v -= p(i, k) * pinv(k, col);
                    pinv(i, col) = v;
                }
            REQUIRE(p * pinv == Matrix::identity(n));
            const Matrix m = p * diag * pinv;
            const auto ev = rational_eigen(m);
            std::size_t total = 0;
            Subspace acc(n);
            for (const auto& e : ev) {
                for (const auto& v : e.space.basis())
                    CHECK(m.apply(v) == e.value * v);
                CHECK(intersect(acc, e.space).is_zero());
                acc = sum(acc, e.space);
                total += e.space.dim();
            }
            CHECK(total == n);
        }
    }
}
