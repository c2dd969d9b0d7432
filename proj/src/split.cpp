#include "mpj/split.hpp"

#include "mpj/errors.hpp"

#include <algorithm>

namespace mpj {

bool is_zero_root(const Root& r)
{
    return is_zero(r);
}

std::string format_root(const Root& r)
{
    return format_coords(r);
}

RootDecomposition::RootDecomposition(AlgebraSpec algebra, Subspace masa, std::vector<RootSpace> roots,
                                     Subspace zero_space)
    : algebra_(std::move(algebra)), masa_(std::move(masa)), roots_(std::move(roots)),
      zero_space_(std::move(zero_space))
{
    std::sort(roots_.begin(), roots_.end(), [](const RootSpace& x, const RootSpace& y) { return x.root < y.root; });
}

bool RootDecomposition::has_root(const Root& r) const
{
    return std::binary_search(roots_.begin(), roots_.end(), RootSpace{r, Subspace()},
                              [](const RootSpace& x, const RootSpace& y) { return x.root < y.root; });
}

Subspace RootDecomposition::space(const Root& r) const
{
    if (r.size() != masa_.dim())
        throw DimensionMismatch("root length differs from dim H");
    if (is_zero_root(r))
        return masa_;
    auto it = std::lower_bound(roots_.begin(), roots_.end(), r,
                               [](const RootSpace& x, const Root& key) { return x.root < key; });
    if (it != roots_.end() && it->root == r)
        return it->space;
    return Subspace(algebra_.dim());
}

std::vector<Root> RootDecomposition::root_list() const
{
    std::vector<Root> out;
    for (const auto& rs : roots_)
        out.push_back(rs.root);
    return out;
}

bool RootDecomposition::is_symmetric() const
{
    return std::all_of(roots_.begin(), roots_.end(), [&](const RootSpace& rs) { return has_root(-rs.root); });
}

Matrix ad_matrix(const AlgebraSpec& a, const Vec& h)
{
    const std::size_t n = a.dim();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec col = bracket(a, h, unit_vec(n, i));
        for (std::size_t k = 0; k < n; ++k)
            m(k, i) = col[k];
    }
    return m;
}

RootDecomposition root_decomposition(const AlgebraSpec& a, const Subspace& masa)
{
    const std::size_t n = a.dim();
    if (masa.ambient_dim() != n)
        throw DimensionMismatch("masa lives in a different ambient space");
    const auto& hb = masa.basis();
    const std::size_t m = hb.size();

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            Vec b = bracket(a, hb[i], hb[j]);
            if (!is_zero(b))
                throw NotAbelian("[" + format_vec(a, hb[i]) + ", " + format_vec(a, hb[j]) + "] = " + format_vec(a, b));
            Vec p = jordan_prod(a, hb[i], hb[j]);
            if (!is_zero(p))
                throw NotAbelian("(" + format_vec(a, hb[i]) + ")(" + format_vec(a, hb[j]) + ") = " + format_vec(a, p));
        }

    struct Block {
        Root root;
        Subspace space;
    };
    std::vector<Block> blocks{{Root{}, Subspace::full(n)}};
    for (std::size_t i = 0; i < m; ++i) {
        const Matrix ad = ad_matrix(a, hb[i]);
        std::vector<Block> refined;
        for (const auto& blk : blocks) {
            const auto& wb = blk.space.basis();
            const std::size_t r = wb.size();
            Matrix restricted(r, r);
            for (std::size_t j = 0; j < r; ++j) {
                Vec img = ad.apply(wb[j]);
                if (!blk.space.contains(img))
                    throw NotSplit("ad(" + format_vec(a, hb[i]) + ") does not preserve the joint eigenspace for " +
                                   format_root(blk.root));
                Vec c = blk.space.coordinates(img);
                for (std::size_t k = 0; k < r; ++k)
                    restricted(k, j) = c[k];
            }
            std::size_t covered = 0;
            for (auto& [value, eig] : rational_eigen(restricted)) {
                covered += eig.dim();
                std::vector<Vec> lifted;
                for (const auto& c : eig.basis())
                    lifted.push_back(blk.space.combine(c));
                Root root = blk.root;
                root.push_back(value);
                refined.push_back({std::move(root), Subspace::span(n, lifted)});
            }
            if (covered != r)
                throw NotSplit("ad(" + format_vec(a, hb[i]) + ") is not diagonalizable over the rationals on a " +
                               std::to_string(r) + "-dimensional block (eigenspaces cover " +
                               std::to_string(covered) + ")");
        }
        blocks = std::move(refined);
    }

    Subspace zero_space(n);
    std::vector<RootSpace> roots;
    for (auto& blk : blocks) {
        if (is_zero_root(blk.root))
            zero_space = std::move(blk.space);
        else
            roots.push_back({std::move(blk.root), std::move(blk.space)});
    }
    if (zero_space != masa)
        throw NotMasa("P_0 has dimension " + std::to_string(zero_space.dim()) + " but H has dimension " +
                      std::to_string(masa.dim()) + (masa.dim() < zero_space.dim() ? " (H is not maximal)" : ""));
    return RootDecomposition(a, masa, std::move(roots), std::move(zero_space));
}

SplitReport verify_split(const RootDecomposition& rd)
{
    const AlgebraSpec& a = rd.algebra();
    const std::size_t n = a.dim();
    SplitReport rep;

    std::vector<Vec> all = rd.masa().basis();
    for (const auto& rs : rd.roots())
        all.insert(all.end(), rs.space.basis().begin(), rs.space.basis().end());
    Subspace total = Subspace::span(n, all);
    if (all.size() != n || total.dim() != n)
        rep.direct_and_spanning = Verdict::fail(
            {{}, {}, std::to_string(all.size()) + " basis vectors spanning a " + std::to_string(total.dim()) +
                         "-dimensional subspace of a " + std::to_string(n) + "-dimensional algebra"});

    if (rd.zero_space() != rd.masa())
        rep.zero_space_is_masa = Verdict::fail({{}, {}, "P_0 differs from H"});

    const auto& hb = rd.masa().basis();
    for (const auto& rs : rd.roots()) {
        for (std::size_t i = 0; i < hb.size() && rep.joint_eigen.pass; ++i)
            for (const auto& v : rs.space.basis()) {
                Vec d = bracket(a, hb[i], v) - rs.root[i] * v;
                if (!is_zero(d)) {
                    rep.joint_eigen = Verdict::fail({{i}, d,
                                                     "[h" + std::to_string(i + 1) + ", " + format_vec(a, v) +
                                                         "] differs from " + to_string(rs.root[i]) + " times it"});
                    break;
                }
            }
    }
    rep.symmetric = rd.is_symmetric();
    return rep;
}

RootProductReport verify_rootspace_products(const RootDecomposition& rd, Exec exec)
{
    const AlgebraSpec& a = rd.algebra();
    std::vector<Root> roots{zero_vec(rd.masa().dim())};
    for (const auto& r : rd.root_list())
        roots.push_back(r);
    const std::size_t count = roots.size();

    struct PairOutcome {
        std::vector<std::string> verified;
        std::optional<Witness> failure;
    };

    auto check_pair = [&](std::size_t t) {
        const Root& al = roots[t / count];
        const Root& be = roots[t % count];
        const Subspace pa = rd.space(al), pb = rd.space(be);
        const std::string sa = "P" + format_root(al), sb = "P" + format_root(be);
        PairOutcome out;

        auto check = [&](bool use_bracket, const Subspace& target, const std::string& target_name) {
            for (const auto& u : pa.basis())
                for (const auto& v : pb.basis()) {
                    Vec p = use_bracket ? bracket(a, u, v) : jordan_prod(a, u, v);
                    if (!target.contains(p)) {
                        out.failure = Witness{{t / count, t % count},
                                              target.reduce(p),
                                              std::string(use_bracket ? "[" : "(") + format_vec(a, u) + ", " +
                                                  format_vec(a, v) + (use_bracket ? "]" : ")") + " = " +
                                                  format_vec(a, p) + " is not in " + target_name};
                        return;
                    }
                }
            out.verified.push_back((use_bracket ? "[" + sa + ", " + sb + "]" : sa + " " + sb) + " ⊆ " + target_name);
        };

        if (al != be) {
            check(true, rd.space(al + be), "P" + format_root(al + be));
        } else {
            Root twice = al + al;
            Root neg = -al;
            check(true, sum(rd.space(twice), rd.space(neg)), "P" + format_root(twice) + " + P" + format_root(neg));
        }
        if (!out.failure)
            check(false, rd.space(al + be), "P" + format_root(al + be));
        return out;
    };

    auto outcomes = parallel_map<PairOutcome>(count * count, check_pair, exec);
    RootProductReport rep;
    for (auto& o : outcomes) {
        rep.verified.insert(rep.verified.end(), o.verified.begin(), o.verified.end());
        if (o.failure && rep.verdict.pass)
            rep.verdict = Verdict::fail(std::move(*o.failure));
    }
    return rep;
}

} // namespace mpj
