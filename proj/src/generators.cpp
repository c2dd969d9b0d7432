#include "mpj/generators.hpp"

#include "mpj/axioms.hpp"
#include "mpj/errors.hpp"
#include "mpj/split.hpp"

#include <array>
#include <functional>

namespace mpj {

GeneratedAlgebra lie_sl2()
{
    AlgebraSpec a({"h", "e", "f"});
    a.set_bracket(0, 1, 1, 2);
    a.set_bracket(0, 2, 2, -2);
    a.set_bracket(1, 2, 0, 1);
    Vec h = unit_vec(3, 0);
    return {"lie_sl2", std::move(a), Subspace::span(3, std::span<const Vec>(&h, 1))};
}

GeneratedAlgebra abelian(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("a" + std::to_string(i + 1));
    return {"abelian(" + std::to_string(n) + ")", AlgebraSpec(std::move(names)), Subspace::full(n)};
}

namespace {

// Zorn vector-matrix model of the split octonions: [[a, u], [v, b]] with
// scalars a, b and u, v in Q^3.
struct Zorn {
    Rational a;
    std::array<Rational, 3> u;
    std::array<Rational, 3> v;
    Rational b;
};

Rational dot(const std::array<Rational, 3>& p, const std::array<Rational, 3>& q)
{
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
}

std::array<Rational, 3> cross(const std::array<Rational, 3>& p, const std::array<Rational, 3>& q)
{
    return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

Zorn operator*(const Zorn& x, const Zorn& y)
{
    Zorn r;
    r.a = x.a * y.a + dot(x.u, y.v);
    r.b = x.b * y.b + dot(x.v, y.u);
    auto vv = cross(x.v, y.v);
    auto uu = cross(x.u, y.u);
    for (int i = 0; i < 3; ++i) {
        r.u[i] = x.a * y.u[i] + y.b * x.u[i] - vv[i];
        r.v[i] = y.a * x.v[i] + x.b * y.v[i] + uu[i];
    }
    return r;
}

// Trace-zero coordinates: (a, u1, u2, u3, v1, v2, v3) <-> [[a, u], [v, -a]].
Zorn from_coords(std::size_t i)
{
    Zorn z{0, {0, 0, 0}, {0, 0, 0}, 0};
    if (i == 0) {
        z.a = 1;
        z.b = -1;
    } else if (i <= 3) {
        z.u[i - 1] = 1;
    } else {
        z.v[i - 4] = 1;
    }
    return z;
}

Vec to_coords(const Zorn& z)
{
    if (z.a + z.b != 0)
        throw InvalidStructure("commutator left the trace-zero octonions");
    return {z.a, z.u[0], z.u[1], z.u[2], z.v[0], z.v[1], z.v[2]};
}

} // namespace

GeneratedAlgebra malcev_m7()
{
    AlgebraSpec a({"h", "x1", "x2", "x3", "y1", "y2", "y3"});
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j) {
            Zorn p = from_coords(i), q = from_coords(j);
            Zorn pq = p * q, qp = q * p;
            Zorn comm{pq.a - qp.a, {}, {}, pq.b - qp.b};
            for (int k = 0; k < 3; ++k) {
                comm.u[k] = pq.u[k] - qp.u[k];
                comm.v[k] = pq.v[k] - qp.v[k];
            }
            Vec c = to_coords(comm);
            for (std::size_t k = 0; k < 7; ++k)
                if (sgn(c[k]) != 0)
                    a.set_bracket(i, j, k, c[k]);
        }
    Vec h = unit_vec(7, 0);
    return {"malcev_m7", std::move(a), Subspace::span(7, std::span<const Vec>(&h, 1))};
}

GeneratedAlgebra solvable2()
{
    AlgebraSpec a({"h", "x"});
    a.set_bracket(0, 1, 1, 1);
    Vec h = unit_vec(2, 0);
    return {"solvable2", std::move(a), Subspace::span(2, std::span<const Vec>(&h, 1))};
}

GeneratedAlgebra direct_sum(const GeneratedAlgebra& a, const GeneratedAlgebra& b)
{
    return {a.name + "+" + b.name, direct_sum(a.algebra, b.algebra), direct_sum(a.masa, b.masa)};
}

namespace {

struct Slot {
    std::size_t i, j, k;
};

// Jordan constants d[i][j][k] (i <= j) compatible with Leibniz and H H = 0,
// for H = span{e0}. Columns of the constraint matrix are the Leibniz defects
// of each single-constant Jordan product.
Subspace jordan_space(const AlgebraSpec& bracket_only, std::vector<Slot>& unknowns)
{
    const std::size_t n = bracket_only.dim();
    unknowns.clear();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(i == 0 && j == 0))
                    unknowns.push_back({i, j, k});
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i)
        e.push_back(unit_vec(n, i));

    const std::size_t rows = n * n * n * n;
    Matrix m(rows, unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        AlgebraSpec trial = bracket_only;
        trial.set_jordan(unknowns[u].i, unknowns[u].j, unknowns[u].k, 1);
        std::size_t r = 0;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    Vec d = leibniz_defect(trial, e[x], e[y], e[z]);
                    for (std::size_t k = 0; k < n; ++k)
                        m(r++, u) = d[k];
                }
    }
    return kernel(m);
}

bool is_split_by_e0(const AlgebraSpec& a)
{
    Vec h = unit_vec(a.dim(), 0);
    try {
        root_decomposition(a, Subspace::span(a.dim(), std::span<const Vec>(&h, 1)));
        return true;
    } catch (const Error&) {
        return false;
    }
}

} // namespace

JordanProbeResult jordan_probe_search(std::size_t dim, int coeff_bound)
{
    JordanProbeResult result;
    if (dim < 2 || coeff_bound < 1)
        return result;
    const std::size_t roots = dim - 1;

    std::vector<long> weight_values;
    for (long w = -coeff_bound; w <= coeff_bound; ++w)
        if (w != 0)
            weight_values.push_back(w);

    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i)
        names.push_back("e" + std::to_string(i));

    // Nondecreasing weight tuples (w_1 <= ... <= w_{dim-1}).
    std::vector<std::size_t> pick(roots, 0);
    std::function<void(std::size_t, std::size_t)> choose_weights;
    std::vector<long> w(dim, 0);

    auto examine_weights = [&]() {
        std::vector<Slot> slots;
        for (std::size_t i = 1; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k)
                    if (w[i] + w[j] == w[k])
                        slots.push_back({i, j, k});
        const long base = 2 * coeff_bound + 1;
        std::size_t combos = 1;
        for (std::size_t s = 0; s < slots.size(); ++s)
            combos *= static_cast<std::size_t>(base);
        for (std::size_t code = 0; code < combos; ++code) {
            AlgebraSpec a(names);
            for (std::size_t i = 1; i < dim; ++i)
                a.set_bracket(0, i, i, Rational(w[i]));
            std::size_t rest = code;
            for (const auto& s : slots) {
                long c = static_cast<long>(rest % static_cast<std::size_t>(base)) - coeff_bound;
                rest /= static_cast<std::size_t>(base);
                if (c != 0)
                    a.set_bracket(s.i, s.j, s.k, Rational(c));
            }
            ++result.brackets_examined;

            std::vector<Slot> unknowns;
            Subspace space = jordan_space(a, unknowns);
            if (space.is_zero())
                continue;
            ++result.jordan_compatible;
            result.max_jordan_space_dim = std::max(result.max_jordan_space_dim, space.dim());

            // Small integer combinations of the compatible Jordan constants.
            const std::size_t k = std::min<std::size_t>(space.dim(), 6);
            std::size_t tries = 1;
            for (std::size_t t = 0; t < k; ++t)
                tries *= 3;
            for (std::size_t t = 1; t < tries; ++t) {
                Vec coeffs = zero_vec(space.dim());
                std::size_t r = t;
                for (std::size_t q = 0; q < k; ++q, r /= 3)
                    coeffs[q] = Rational(static_cast<long>(r % 3) - 1);
                Vec d = space.combine(coeffs);
                AlgebraSpec cand = a;
                for (std::size_t u = 0; u < unknowns.size(); ++u)
                    if (sgn(d[u]) != 0)
                        cand.set_jordan(unknowns[u].i, unknowns[u].j, unknowns[u].k, d[u]);
                if (cand.jordan_is_zero() || !verify_axioms(cand, {.exec = Exec::serial}).all_pass() ||
                    !is_split_by_e0(cand))
                    continue;
                Vec h = unit_vec(dim, 0);
                result.hit = GeneratedAlgebra{"jordan_probe", std::move(cand),
                                              Subspace::span(dim, std::span<const Vec>(&h, 1))};
                return;
            }
        }
    };

    choose_weights = [&](std::size_t pos, std::size_t from) {
        if (result.hit)
            return;
        if (pos == roots) {
            for (std::size_t i = 0; i < roots; ++i)
                w[i + 1] = weight_values[pick[i]];
            examine_weights();
            return;
        }
        for (std::size_t v = from; v < weight_values.size(); ++v) {
            pick[pos] = v;
            choose_weights(pos + 1, v);
        }
    };
    choose_weights(0, 0);
    return result;
}

GeneratedAlgebra generate(std::string_view family, std::span<const long> params)
{
    auto no_params = [&] {
        if (!params.empty())
            throw UnknownFamily(std::string(family) + " takes no parameters");
    };
    if (family == "lie_sl2") {
        no_params();
        return lie_sl2();
    }
    if (family == "malcev_m7") {
        no_params();
        return malcev_m7();
    }
    if (family == "solvable2") {
        no_params();
        return solvable2();
    }
    if (family == "abelian") {
        if (params.size() != 1 || params[0] < 0)
            throw UnknownFamily("abelian needs one nonnegative dimension parameter");
        return abelian(static_cast<std::size_t>(params[0]));
    }
    if (family == "jordan_probe") {
        no_params();
        for (auto [dim, bound] : {std::pair<std::size_t, int>{3, 2}, {4, 1}}) {
            auto r = jordan_probe_search(dim, bound);
            if (r.hit)
                return *r.hit;
        }
        throw ProbeEmpty("jordan_probe: no split algebra with a nonzero Jordan product in dimensions 3 "
                         "(coefficients in [-2,2]) and 4 (coefficients in [-1,1])");
    }
    throw UnknownFamily("unknown family \"" + std::string(family) + "\"");
}

std::vector<std::string> family_names()
{
    return {"lie_sl2", "abelian", "malcev_m7", "solvable2", "jordan_probe"};
}

} // namespace mpj
