#pragma once

#include "mpj/algebra.hpp"
#include "mpj/parallel.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mpj {

/// Concrete evidence for a failed check: the basis indices (or random vector
/// numbers) involved, the nonzero defect, and a labelled rendering.
struct Witness {
    std::vector<std::size_t> indices;
    Vec defect;
    std::string text;

    bool operator==(const Witness&) const = default;
};

struct Verdict {
    bool pass = true;
    std::optional<Witness> witness;

    static Verdict ok() { return {}; }
    static Verdict fail(Witness w) { return {false, std::move(w)}; }

    bool operator==(const Verdict&) const = default;
};

struct AxiomReport {
    Verdict anticommutative;
    Verdict malcev_identity;
    Verdict jordan_commutative;
    Verdict jordan_identity;
    Verdict leibniz;
    /// Unlinearized Malcev and Jordan identities on pseudorandom vectors.
    Verdict random_smoke;
    /// Basis triple with J(x,y,z) != 0, when the bracket is not Lie.
    std::optional<Witness> non_lie_certificate;

    bool all_pass() const
    {
        return anticommutative.pass && malcev_identity.pass && jordan_commutative.pass && jordan_identity.pass &&
               leibniz.pass && random_smoke.pass;
    }

    bool operator==(const AxiomReport&) const = default;
};

inline constexpr std::uint64_t kDefaultSmokeSeed = 0x4d504a2024ULL;

struct AxiomOptions {
    std::uint64_t seed = kDefaultSmokeSeed;
    std::size_t smoke_vectors = 32;
    Exec exec = Exec::parallel;
};

/// Checks every axiom of a Malcev-Poisson-Jordan algebra. The Malcev and
/// Jordan identities are checked through their full linearizations on all
/// basis 4-tuples, which is complete over a field of characteristic 0.
AxiomReport verify_axioms(const AlgebraSpec& a, const AxiomOptions& opts = {});

/// Linearized Malcev identity
///   [J(x1,y,z),x2] + [J(x2,y,z),x1] - J(x1,y,[x2,z]) - J(x2,y,[x1,z]).
Vec malcev_linearized(const AlgebraSpec& a, const Vec& x1, const Vec& x2, const Vec& y, const Vec& z);
/// Sum over permutations s of ((x_s1 x_s2) y) x_s3 - (x_s1 x_s2)(y x_s3).
Vec jordan_linearized(const AlgebraSpec& a, const Vec& x1, const Vec& x2, const Vec& x3, const Vec& y);
/// [x, yz] - [x,y]z - y[x,z].
Vec leibniz_defect(const AlgebraSpec& a, const Vec& x, const Vec& y, const Vec& z);
/// [J(x,y,z),x] - J(x,y,[x,z]).
Vec malcev_defect(const AlgebraSpec& a, const Vec& x, const Vec& y, const Vec& z);
/// (x^2 y) x - x^2 (y x).
Vec jordan_defect(const AlgebraSpec& a, const Vec& x, const Vec& y);

/// First basis triple (lexicographic) with a nonzero Jacobian.
std::optional<Witness> find_jacobian_witness(const AlgebraSpec& a, Exec exec = Exec::parallel);

/// Deterministic pseudorandom rational vectors with entries p/q, |p| <= 3,
/// 1 <= q <= 3. Platform independent for a given seed.
std::vector<Vec> pseudorandom_vectors(std::size_t n, std::size_t count, std::uint64_t seed);

} // namespace mpj
