#pragma once

#include "mpj/algebra.hpp"
#include "mpj/errors.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mpj {

/// An algebra together with the abelian subalgebra to split it against.
struct GeneratedAlgebra {
    std::string name;
    AlgebraSpec algebra;
    Subspace masa;

    bool operator==(const GeneratedAlgebra&) const = default;
};

/// sl2 with basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h. Jordan zero.
GeneratedAlgebra lie_sl2();
/// n-dimensional algebra with both products zero; the masa is everything.
GeneratedAlgebra abelian(std::size_t n);
/// Commutator algebra of the trace-zero split octonions (Zorn vector-matrix
/// model). Basis h, x1..x3, y1..y3 with h = diag(1, -1); Jordan zero.
GeneratedAlgebra malcev_m7();
/// Two-dimensional solvable algebra [h,x] = x with masa span{h}.
GeneratedAlgebra solvable2();

GeneratedAlgebra direct_sum(const GeneratedAlgebra& a, const GeneratedAlgebra& b);

/// Outcome of the search for a split algebra with a nonzero Jordan product.
struct JordanProbeResult {
    std::optional<GeneratedAlgebra> hit;
    std::size_t brackets_examined = 0;
    /// Brackets admitting a nonzero Jordan product compatible with Leibniz
    /// and with H H = 0.
    std::size_t jordan_compatible = 0;
    std::size_t max_jordan_space_dim = 0;
};

/// Searches algebras of dimension `dim` split by H = span{e0}, with
/// [e0, e_i] = w_i e_i (nonzero integer weights |w_i| <= coeff_bound, sorted)
/// and every weight-compatible bracket [e_i, e_j] -> e_k with coefficients in
/// [-coeff_bound, coeff_bound]. For each bracket, the Jordan constants allowed
/// by the Leibniz identity and H H = 0 form a linear space; nonzero members
/// with small integer coordinates are filtered through verify_axioms.
JordanProbeResult jordan_probe_search(std::size_t dim, int coeff_bound);

/// Thrown by generate("jordan_probe") when the search finds nothing.
class ProbeEmpty : public Error {
public:
    using Error::Error;
};

/// Families: lie_sl2, abelian <n>, malcev_m7, solvable2, jordan_probe.
/// Throws UnknownFamily for unknown names or bad parameters.
GeneratedAlgebra generate(std::string_view family, std::span<const long> params = {});

std::vector<std::string> family_names();

} // namespace mpj
