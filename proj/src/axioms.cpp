#include "mpj/axioms.hpp"

#include <array>
#include <random>

namespace mpj {

Vec malcev_linearized(const AlgebraSpec& a, const Vec& x1, const Vec& x2, const Vec& y, const Vec& z)
{
    Vec r = bracket(a, jacobian(a, x1, y, z), x2);
    axpy(r, Rational(1), bracket(a, jacobian(a, x2, y, z), x1));
    axpy(r, Rational(-1), jacobian(a, x1, y, bracket(a, x2, z)));
    axpy(r, Rational(-1), jacobian(a, x2, y, bracket(a, x1, z)));
    return r;
}

Vec jordan_linearized(const AlgebraSpec& a, const Vec& x1, const Vec& x2, const Vec& x3, const Vec& y)
{
    const std::array<const Vec*, 3> x{&x1, &x2, &x3};
    static constexpr std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    Vec r = zero_vec(a.dim());
    for (const auto& p : perms) {
        Vec sq = jordan_prod(a, *x[p[0]], *x[p[1]]);
        axpy(r, Rational(1), jordan_prod(a, jordan_prod(a, sq, y), *x[p[2]]));
        axpy(r, Rational(-1), jordan_prod(a, sq, jordan_prod(a, y, *x[p[2]])));
    }
    return r;
}

Vec leibniz_defect(const AlgebraSpec& a, const Vec& x, const Vec& y, const Vec& z)
{
    Vec r = bracket(a, x, jordan_prod(a, y, z));
    axpy(r, Rational(-1), jordan_prod(a, bracket(a, x, y), z));
    axpy(r, Rational(-1), jordan_prod(a, y, bracket(a, x, z)));
    return r;
}

Vec malcev_defect(const AlgebraSpec& a, const Vec& x, const Vec& y, const Vec& z)
{
    Vec r = bracket(a, jacobian(a, x, y, z), x);
    axpy(r, Rational(-1), jacobian(a, x, y, bracket(a, x, z)));
    return r;
}

Vec jordan_defect(const AlgebraSpec& a, const Vec& x, const Vec& y)
{
    Vec sq = jordan_prod(a, x, x);
    Vec r = jordan_prod(a, jordan_prod(a, sq, y), x);
    axpy(r, Rational(-1), jordan_prod(a, sq, jordan_prod(a, y, x)));
    return r;
}

std::vector<Vec> pseudorandom_vectors(std::size_t n, std::size_t count, std::uint64_t seed)
{
    // mt19937_64 output is fixed by the standard; the modular mapping keeps the
    // entries identical across standard libraries.
    std::mt19937_64 rng(seed);
    std::vector<Vec> out(count, zero_vec(n));
    for (auto& v : out)
        for (auto& q : v) {
            long num = static_cast<long>(rng() % 7) - 3;
            long den = static_cast<long>(rng() % 3) + 1;
            q = Rational(num, den);
            q.canonicalize();
        }
    return out;
}

namespace {

std::string label_list(const AlgebraSpec& a, std::initializer_list<std::pair<const char*, std::size_t>> slots)
{
    std::string s;
    for (const auto& [slot, idx] : slots) {
        if (!s.empty())
            s += ", ";
        s += std::string(slot) + "=" + a.basis_names()[idx];
    }
    return s;
}

Witness make_witness(const AlgebraSpec& a, std::vector<std::size_t> idx, Vec defect, const std::string& where)
{
    std::string text = where + ": defect = " + format_vec(a, defect);
    return Witness{std::move(idx), std::move(defect), std::move(text)};
}

Verdict check_symmetry(const AlgebraSpec& a, bool antisymmetric, Exec exec)
{
    const std::size_t n = a.dim();
    auto defect = [&](std::size_t i, std::size_t j) {
        const Vec& ij = antisymmetric ? a.bracket_basis(i, j) : a.jordan_basis(i, j);
        const Vec& ji = antisymmetric ? a.bracket_basis(j, i) : a.jordan_basis(j, i);
        return antisymmetric ? ij + ji : ij - ji;
    };
    auto fails = [&](std::size_t t) {
        std::size_t i = t / n, j = t % n;
        if (i > j)
            return false;
        return !is_zero(defect(i, j));
    };
    auto hit = first_failure(n * n, fails, exec);
    if (!hit)
        return Verdict::ok();
    std::size_t i = *hit / n, j = *hit % n;
    const char* form = antisymmetric ? "[x,y] + [y,x]" : "xy - yx";
    return Verdict::fail(make_witness(a, {i, j}, defect(i, j), std::string(form) + " at " +
                                                                    label_list(a, {{"x", i}, {"y", j}})));
}

} // namespace

std::optional<Witness> find_jacobian_witness(const AlgebraSpec& a, Exec exec)
{
    const std::size_t n = a.dim();
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i)
        e.push_back(unit_vec(n, i));
    auto fails = [&](std::size_t t) {
        return !is_zero(jacobian(a, e[t / (n * n)], e[(t / n) % n], e[t % n]));
    };
    auto hit = first_failure(n * n * n, fails, exec);
    if (!hit)
        return std::nullopt;
    std::size_t x = *hit / (n * n), y = (*hit / n) % n, z = *hit % n;
    return make_witness(a, {x, y, z}, jacobian(a, e[x], e[y], e[z]),
                        "J(x,y,z) != 0 at " + label_list(a, {{"x", x}, {"y", y}, {"z", z}}));
}

AxiomReport verify_axioms(const AlgebraSpec& a, const AxiomOptions& opts)
{
    const std::size_t n = a.dim();
    const Exec exec = opts.exec;
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i)
        e.push_back(unit_vec(n, i));

    AxiomReport report;
    report.anticommutative = check_symmetry(a, true, exec);
    report.jordan_commutative = check_symmetry(a, false, exec);

    // Malcev: symmetric in (x1, x2), so only x1 <= x2 is scanned.
    {
        const std::size_t n2 = n * n, n3 = n2 * n;
        auto unpack = [&](std::size_t t) {
            return std::array<std::size_t, 4>{t / n3, (t / n2) % n, (t / n) % n, t % n};
        };
        auto fails = [&](std::size_t t) {
            auto [x1, x2, y, z] = unpack(t);
            return x1 <= x2 && !is_zero(malcev_linearized(a, e[x1], e[x2], e[y], e[z]));
        };
        if (auto hit = first_failure(n3 * n, fails, exec)) {
            auto [x1, x2, y, z] = unpack(*hit);
            report.malcev_identity = Verdict::fail(
                make_witness(a, {x1, x2, y, z}, malcev_linearized(a, e[x1], e[x2], e[y], e[z]),
                             "linearized Malcev identity at " +
                                 label_list(a, {{"x1", x1}, {"x2", x2}, {"y", y}, {"z", z}})));
        }
    }

    // Jordan: symmetric in (x1, x2, x3), so only x1 <= x2 <= x3 is scanned.
    {
        const std::size_t n2 = n * n, n3 = n2 * n;
        auto unpack = [&](std::size_t t) {
            return std::array<std::size_t, 4>{t / n3, (t / n2) % n, (t / n) % n, t % n};
        };
        auto fails = [&](std::size_t t) {
            auto [x1, x2, x3, y] = unpack(t);
            return x1 <= x2 && x2 <= x3 && !is_zero(jordan_linearized(a, e[x1], e[x2], e[x3], e[y]));
        };
        if (auto hit = first_failure(n3 * n, fails, exec)) {
            auto [x1, x2, x3, y] = unpack(*hit);
            report.jordan_identity = Verdict::fail(
                make_witness(a, {x1, x2, x3, y}, jordan_linearized(a, e[x1], e[x2], e[x3], e[y]),
                             "linearized Jordan identity at " +
                                 label_list(a, {{"x1", x1}, {"x2", x2}, {"x3", x3}, {"y", y}})));
        }
    }

    {
        auto fails = [&](std::size_t t) {
            return !is_zero(leibniz_defect(a, e[t / (n * n)], e[(t / n) % n], e[t % n]));
        };
        if (auto hit = first_failure(n * n * n, fails, exec)) {
            std::size_t x = *hit / (n * n), y = (*hit / n) % n, z = *hit % n;
            report.leibniz = Verdict::fail(make_witness(a, {x, y, z}, leibniz_defect(a, e[x], e[y], e[z]),
                                                        "[x,yz] - [x,y]z - y[x,z] at " +
                                                            label_list(a, {{"x", x}, {"y", y}, {"z", z}})));
        }
    }

    // Unlinearized identities on cyclic triples of pseudorandom vectors.
    if (n > 0 && opts.smoke_vectors > 0) {
        const auto v = pseudorandom_vectors(n, opts.smoke_vectors, opts.seed);
        const std::size_t m = v.size();
        auto triple = [&](std::size_t t) {
            return std::array<std::size_t, 3>{t % m, (t + 1) % m, (t + 2) % m};
        };
        // Index t < m is a Malcev check, m <= t < 2m a Jordan check.
        auto defect = [&](std::size_t t) {
            auto [x, y, z] = triple(t % m);
            return t < m ? malcev_defect(a, v[x], v[y], v[z]) : jordan_defect(a, v[x], v[y]);
        };
        if (auto hit = first_failure(2 * m, [&](std::size_t t) { return !is_zero(defect(t)); }, exec)) {
            auto [x, y, z] = triple(*hit % m);
            std::string what = *hit < m ? "Malcev identity on random vectors #" : "Jordan identity on random vectors #";
            Vec d = defect(*hit);
            std::string text = what + std::to_string(x) + ", #" + std::to_string(y) +
                               (*hit < m ? ", #" + std::to_string(z) : std::string{}) +
                               " (seed " + std::to_string(opts.seed) + "): defect = " + format_vec(a, d);
            report.random_smoke = Verdict::fail(Witness{{x, y, z}, std::move(d), std::move(text)});
        }
    }

    report.non_lie_certificate = find_jacobian_witness(a, exec);
    return report;
}

} // namespace mpj
