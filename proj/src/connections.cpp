#include "mpj/connections.hpp"

#include "mpj/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace mpj {

std::string ThetaConditions::describe() const
{
    std::string s;
    auto add = [&](bool on, const char* what) {
        if (!on)
            return;
        if (!s.empty())
            s += ", ";
        s += what;
    };
    add(bracket_bracket, "[[Pa,P-a],Pb]");
    add(jordan_jordan, "(Pa P-a)Pb");
    add(bracket_jordan, "[Pa P-a,Pb]");
    add(jordan_bracket, "[Pa,P-a]Pb");
    return s.empty() ? "none" : s;
}

std::vector<Root> compute_omega(const RootDecomposition& rd, Exec exec)
{
    const AlgebraSpec& a = rd.algebra();
    const auto roots = rd.root_list();
    // [P_b, P_-b] for every root b; zero when -b is not a root.
    auto pair_brackets = parallel_map<Subspace>(
        roots.size(), [&](std::size_t i) { return bracket_span(a, rd.space(roots[i]), rd.space(-roots[i])); }, exec);

    auto member = parallel_map<char>(
        roots.size(),
        [&](std::size_t i) -> char {
            const Root& r = roots[i];
            const Subspace pa = rd.space(r), pn = rd.space(-r);
            if (!pair_brackets[i].is_zero())
                return 1;
            if (!jordan_span(a, pa, pn).is_zero())
                return 1;
            for (const auto& hb : pair_brackets)
                if (!bracket_span(a, hb, pa).is_zero())
                    return 1;
            return 0;
        },
        exec);
    std::vector<Root> omega;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (member[i])
            omega.push_back(roots[i]);
    return omega;
}

ConnectionContext::ConnectionContext(RootDecomposition rd, Exec exec) : rd_(std::move(rd))
{
    omega_ = compute_omega(rd_, exec);
    std::set<Root> pm;
    for (const auto& r : rd_.root_list()) {
        pm.insert(r);
        pm.insert(-r);
    }
    pm_lambda_.assign(pm.begin(), pm.end());

    // theta_alpha * beta for every alpha in Omega and beta in +-Lambda.
    const AlgebraSpec& a = rd_.algebra();
    const std::size_t nb = pm_lambda_.size();
    auto table = parallel_map<ThetaConditions>(
        omega_.size() * nb,
        [&](std::size_t t) {
            const Root& al = omega_[t / nb];
            const Root& be = pm_lambda_[t % nb];
            const Subspace pa = rd_.space(al), pn = rd_.space(-al), pb = rd_.space(be);
            const Subspace br = bracket_span(a, pa, pn);
            const Subspace jo = jordan_span(a, pa, pn);
            ThetaConditions c;
            c.bracket_bracket = !bracket_span(a, br, pb).is_zero();
            c.jordan_jordan = !jordan_span(a, jo, pb).is_zero();
            c.bracket_jordan = !bracket_span(a, jo, pb).is_zero();
            c.jordan_bracket = !jordan_span(a, br, pb).is_zero();
            return c;
        },
        exec);
    for (std::size_t t = 0; t < table.size(); ++t)
        theta_table_.emplace(std::pair{omega_[t / nb], pm_lambda_[t % nb]}, table[t]);

    partition_ = compute_partition(exec);
}

bool ConnectionContext::in_omega(const Root& r) const
{
    return std::binary_search(omega_.begin(), omega_.end(), r);
}

bool ConnectionContext::in_pm_lambda(const Root& r) const
{
    return std::binary_search(pm_lambda_.begin(), pm_lambda_.end(), r);
}

StarElement ConnectionContext::root_element(const Root& r) const
{
    return {StarElement::Kind::root, r, in_pm_lambda(r)};
}

StarElement ConnectionContext::theta(const Root& r) const
{
    if (!in_omega(r))
        throw std::invalid_argument("theta symbol requested for a root outside Omega: " + format_root(r));
    return {StarElement::Kind::theta, r, false};
}

const ThetaConditions& ConnectionContext::theta_conditions(const Root& alpha, const Root& beta) const
{
    auto it = theta_table_.find({alpha, beta});
    if (it == theta_table_.end())
        throw std::invalid_argument("theta conditions outside Omega x (+-Lambda)");
    return it->second;
}

StarElement ConnectionContext::star(const StarElement& a, const Root& b) const
{
    if (!in_pm_lambda(b))
        throw std::invalid_argument("star: right operand " + format_root(b) + " is not in +-Lambda");
    switch (a.kind) {
    case StarElement::Kind::zero:
        throw std::invalid_argument("star: left operand is zero");
    case StarElement::Kind::theta:
        return theta_conditions(a.value, b).any() ? root_element(b) : StarElement::zero();
    case StarElement::Kind::root:
        break;
    }
    if (!in_pm_lambda(a.value))
        throw std::invalid_argument("star: left operand " + format_root(a.value) + " is not in +-Lambda");
    if (b == -a.value)
        return in_omega(a.value) ? theta(a.value) : StarElement::zero();
    return root_element(a.value + b);
}

std::vector<Root> ConnectionContext::connection_class(const Root& alpha) const
{
    if (!in_lambda(alpha))
        throw std::invalid_argument("connection_class: " + format_root(alpha) + " is not a root");
    // Reachable prefix values; only members of +-Lambda u Theta_Omega expand.
    std::set<StarElement> reached{root_element(alpha)};
    std::deque<StarElement> frontier{root_element(alpha)};
    while (!frontier.empty()) {
        StarElement cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : pm_lambda_) {
            StarElement next = star(cur, g);
            const bool legal = next.kind == StarElement::Kind::theta ||
                               (next.kind == StarElement::Kind::root && next.in_pm_lambda);
            if (legal && reached.insert(next).second)
                frontier.push_back(std::move(next));
        }
    }
    std::vector<Root> out;
    for (const auto& r : rd_.root_list())
        if (reached.count(root_element(r)) || reached.count(root_element(-r)))
            out.push_back(r);
    return out;
}

Partition ConnectionContext::compute_partition(Exec exec) const
{
    const auto roots = rd_.root_list();
    auto classes = parallel_map<std::vector<Root>>(
        roots.size(), [&](std::size_t i) { return connection_class(roots[i]); }, exec);

    Partition p;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const auto& ci = classes[i];
        if (!std::binary_search(ci.begin(), ci.end(), roots[i])) {
            throw EquivalenceViolation("not reflexive: " + format_root(roots[i]) + " is missing from its own class");
        }
        for (std::size_t j = 0; j < roots.size(); ++j) {
            const bool j_in_i = std::binary_search(ci.begin(), ci.end(), roots[j]);
            const bool i_in_j = std::binary_search(classes[j].begin(), classes[j].end(), roots[i]);
            if (j_in_i != i_in_j) {
                throw EquivalenceViolation("not symmetric: " + format_root(roots[i]) + " and " +
                                           format_root(roots[j]));
            }
            if (j_in_i && classes[j] != ci) {
                throw EquivalenceViolation("not transitive: classes of " + format_root(roots[i]) + " and " +
                                           format_root(roots[j]) + " differ although they are connected");
            }
        }
    }
    std::set<std::vector<Root>> distinct(classes.begin(), classes.end());
    p.classes.assign(distinct.begin(), distinct.end());
    // std::set orders lexicographically by sorted members, i.e. by least member first.
    return p;
}

} // namespace mpj
