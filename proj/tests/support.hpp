#pragma once

#include "mpj/algebra.hpp"
#include "mpj/generators.hpp"
#include "mpj/linalg.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

using mpj::Rational;
using mpj::Vec;

inline std::string data_path(const std::string& file)
{
    return std::string(MPJ_DATA_DIR) + "/" + file;
}

/// Determinant by cofactor expansion along the first row. Independent of the
/// elimination code under test; fine for n <= 8.
inline Rational cofactor_det(const std::vector<Vec>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    Rational det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0)
            continue;
        std::vector<Vec> minor;
        for (std::size_t r = 1; r < n; ++r) {
            Vec row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(row);
        }
        const Rational term = m[0][c] * cofactor_det(minor);
        det += (c % 2 == 0) ? term : Rational(-term);
    }
    return det;
}

/// Rank by plain Gaussian elimination on a copy, without canonical form.
inline std::size_t naive_rank(std::vector<Vec> rows)
{
    std::size_t rank = 0;
    if (rows.empty())
        return 0;
    const std::size_t cols = rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = 0; k < cols; ++k)
                rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Random integer vectors with entries in [-range, range].
inline std::vector<Vec> random_vectors(std::mt19937_64& rng, std::size_t n, std::size_t count, int range = 3)
{
    std::uniform_int_distribution<int> d(-range, range);
    std::vector<Vec> out(count, Vec(n));
    for (auto& v : out)
        for (auto& x : v)
            x = d(rng);
    return out;
}

inline mpj::Subspace random_subspace(std::mt19937_64& rng, std::size_t n, std::size_t max_gens)
{
    std::uniform_int_distribution<std::size_t> k(1, max_gens);
    return mpj::Subspace::span(n, random_vectors(rng, n, k(rng)));
}

/// Naive ideal test: products of every basis vector of s with every unit
/// vector stay in s.
inline bool is_ideal(const mpj::AlgebraSpec& a, const mpj::Subspace& s)
{
    for (const auto& v : s.basis())
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Vec e = mpj::unit_vec(a.dim(), j);
            if (!s.contains(mpj::bracket(a, v, e)) || !s.contains(mpj::jordan_prod(a, v, e)))
                return false;
        }
    return true;
}

inline std::vector<mpj::GeneratedAlgebra> bundled_families()
{
    using namespace mpj;
    const auto s = lie_sl2();
    return {s,
            abelian(1),
            abelian(3),
            malcev_m7(),
            solvable2(),
            direct_sum(s, s),
            direct_sum(direct_sum(s, s), s),
            direct_sum(s, abelian(1)),
            direct_sum(s, solvable2()),
            direct_sum(direct_sum(s, s), malcev_m7())};
}

} // namespace testing

namespace testing {

/// Algebra with random antisymmetric bracket and symmetric Jordan constants.
/// Satisfies no identity in general; used to test linearizations and kernels.
inline mpj::AlgebraSpec random_algebra(std::mt19937_64& rng, std::size_t n, int range = 2, bool jordan = true)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("b" + std::to_string(i));
    mpj::AlgebraSpec a(names);
    std::uniform_int_distribution<int> d(-range, range);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (i != j)
                    a.set_bracket(i, j, k, d(rng));
                if (jordan)
                    a.set_jordan(i, j, k, d(rng));
            }
    return a;
}

} // namespace testing
