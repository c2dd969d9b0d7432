#pragma once

#include "mpj/parallel.hpp"
#include "mpj/split.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mpj {

/// Value of the star map: a functional on H, a theta symbol, or zero.
struct StarElement {
    enum class Kind { root, theta, zero };

    Kind kind = Kind::zero;
    Root value;
    /// Cached: value lies in +-Lambda (root kind only).
    bool in_pm_lambda = false;

    static StarElement zero() { return {}; }

    bool operator==(const StarElement& o) const { return kind == o.kind && value == o.value; }
    bool operator<(const StarElement& o) const
    {
        return kind != o.kind ? kind < o.kind : value < o.value;
    }
};

/// Which nonzero-product conditions made theta_alpha * beta = beta.
struct ThetaConditions {
    bool bracket_bracket = false; ///< [[P_a, P_-a], P_b] != 0
    bool jordan_jordan = false;   ///< (P_a P_-a) P_b != 0
    bool bracket_jordan = false;  ///< [P_a P_-a, P_b] != 0
    bool jordan_bracket = false;  ///< [P_a, P_-a] P_b != 0

    bool any() const { return bracket_bracket || jordan_jordan || bracket_jordan || jordan_bracket; }
    std::string describe() const;
};

/// Omega: roots a with [P_a,P_-a] != 0, or P_a P_-a != 0, or
/// [[P_b,P_-b],P_a] != 0 for some root b. Sorted.
std::vector<Root> compute_omega(const RootDecomposition& rd, Exec exec = Exec::parallel);

struct Partition {
    /// Each class sorted; classes ordered by their least member.
    std::vector<std::vector<Root>> classes;
    bool reflexive = true;
    bool symmetric = true;
    bool transitive = true;
};

/// Omega, the theta table and the connection classes of one decomposition.
/// Immutable after construction.
class ConnectionContext {
public:
    explicit ConnectionContext(RootDecomposition rd, Exec exec = Exec::parallel);

    const RootDecomposition& rd() const { return rd_; }
    const std::vector<Root>& omega() const { return omega_; }
    bool in_omega(const Root& r) const;
    bool in_lambda(const Root& r) const { return rd_.has_root(r); }
    bool in_pm_lambda(const Root& r) const;
    /// Lambda u -Lambda, sorted.
    const std::vector<Root>& pm_lambda() const { return pm_lambda_; }

    StarElement root_element(const Root& r) const;
    StarElement theta(const Root& r) const;

    /// a * b for a in +-Lambda u Theta_Omega and b in +-Lambda. Throws
    /// std::invalid_argument outside that domain.
    StarElement star(const StarElement& a, const Root& b) const;
    /// Condition breakdown for theta_alpha * beta; alpha in Omega, beta in +-Lambda.
    const ThetaConditions& theta_conditions(const Root& alpha, const Root& beta) const;

    /// Roots of Lambda connected to alpha (alpha in Lambda).
    std::vector<Root> connection_class(const Root& alpha) const;

    const Partition& partition() const { return partition_; }

private:
    Partition compute_partition(Exec exec) const;

    RootDecomposition rd_;
    std::vector<Root> omega_;
    std::vector<Root> pm_lambda_;
    std::map<std::pair<Root, Root>, ThetaConditions> theta_table_;
    Partition partition_;
};

} // namespace mpj
