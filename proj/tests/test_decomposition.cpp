#include "support.hpp"

#include "mpj/decomposition.hpp"
#include "mpj/errors.hpp"

#include <doctest.h>

using namespace mpj;

namespace {

ConnectionContext context(const GeneratedAlgebra& g, Exec exec = Exec::parallel)
{
    return ConnectionContext(root_decomposition(g.algebra, g.masa), exec);
}

GeneratedAlgebra sl2_power(int k)
{
    GeneratedAlgebra g = lie_sl2();
    for (int i = 1; i < k; ++i)
        g = direct_sum(g, lie_sl2());
    return g;
}

/// [h,x] = x, [h,y] = 2y, all else zero: 1 + 1 is a root but [P_1, P_1] = 0.
GeneratedAlgebra weights_one_two()
{
    AlgebraSpec a({"h", "x", "y"});
    a.set_bracket(0, 1, 1, 1);
    a.set_bracket(0, 2, 2, 2);
    return {"weights12", a, Subspace::span(3, std::vector<Vec>{unit_vec(3, 0)})};
}

Subspace block(std::size_t n, std::size_t from, std::size_t to)
{
    std::vector<Vec> vs;
    for (std::size_t i = from; i < to; ++i)
        vs.push_back(unit_vec(n, i));
    return Subspace::span(n, vs);
}

} // namespace

TEST_SUITE("decomposition")
{
    TEST_CASE("ideal of sl2 is everything")
    {
        const auto ctx = context(lie_sl2());
        const auto ideals = build_ideals(ctx);
        REQUIRE(ideals.size() == 1);
        CHECK(ideals[0].ideal_h == lie_sl2().masa);
        CHECK(ideals[0].v == block(3, 1, 3));
        CHECK(ideals[0].ideal == Subspace::full(3));
    }

    TEST_CASE("ideals of sl2 + sl2 are the blocks")
    {
        const auto ctx = context(sl2_power(2));
        const auto ideals = build_ideals(ctx);
        REQUIRE(ideals.size() == 2);
        std::vector<Subspace> got{ideals[0].ideal, ideals[1].ideal};
        CHECK(std::count(got.begin(), got.end(), block(6, 0, 3)) == 1);
        CHECK(std::count(got.begin(), got.end(), block(6, 3, 6)) == 1);
    }

    TEST_CASE("a class without -b pairs has I_H = 0")
    {
        const auto ctx = context(solvable2());
        const auto ideals = build_ideals(ctx);
        REQUIRE(ideals.size() == 1);
        CHECK(ideals[0].ideal_h.is_zero());
        CHECK(ideals[0].ideal == ideals[0].v);
        CHECK(ideals[0].ideal == block(2, 1, 2));
    }

    TEST_CASE("ideal family verdicts")
    {
        for (const auto& g : {lie_sl2(), sl2_power(2), direct_sum(lie_sl2(), abelian(1))}) {
            INFO(g.name);
            const auto ctx = context(g);
            const auto rep = verify_ideal_family(ctx, build_ideals(ctx));
            CHECK(rep.ideal_property.pass);
            CHECK(rep.pairwise_annihilation.pass);
        }
    }

    TEST_CASE("tampered ideals produce witnesses")
    {
        const auto ctx = context(sl2_power(2));
        auto ideals = build_ideals(ctx);
        ideals[0].ideal = Subspace::span(6, std::vector<Vec>{ideals[0].v.basis()[0]});
        ideals[1].ideal = Subspace::full(6);
        const auto rep = verify_ideal_family(ctx, ideals);
        CHECK_FALSE(rep.ideal_property.pass);
        REQUIRE(rep.ideal_property.witness);
        CHECK_FALSE(rep.ideal_property.witness->text.empty());
        CHECK_FALSE(rep.pairwise_annihilation.pass);
    }

    TEST_CASE("complement examples")
    {
        {
            const auto ctx = context(lie_sl2());
            const auto r = complement_and_decompose(ctx, build_ideals(ctx));
            CHECK(r.u.is_zero());
            CHECK(r.spans_p.pass);
        }
        {
            const auto ctx = context(abelian(3));
            const auto r = complement_and_decompose(ctx, build_ideals(ctx));
            CHECK(r.u == Subspace::full(3));
            CHECK(r.spans_p.pass);
        }
        {
            const auto ctx = context(direct_sum(lie_sl2(), abelian(1)));
            const auto r = complement_and_decompose(ctx, build_ideals(ctx));
            CHECK(r.u == block(4, 3, 4));
            CHECK(r.spans_p.pass);
        }
    }

    TEST_CASE("direct sum corollary")
    {
        {
            const auto ctx = context(lie_sl2());
            const auto r = check_direct(ctx, build_ideals(ctx));
            CHECK(r.applicable);
            CHECK(r.direct_sum.pass);
        }
        {
            const auto ctx = context(direct_sum(lie_sl2(), abelian(1)));
            const auto r = check_direct(ctx, build_ideals(ctx));
            CHECK_FALSE(r.center_zero.pass);
            CHECK_FALSE(r.applicable);
        }
        {
            const auto ctx = context(sl2_power(2));
            const auto ideals = build_ideals(ctx);
            const auto r = check_direct(ctx, ideals);
            CHECK(r.applicable);
            CHECK(r.direct_sum.pass);
            CHECK(ideals[0].ideal.dim() + ideals[1].ideal.dim() == 6);
        }
    }

    TEST_CASE("maximal length")
    {
        CHECK(is_maximal_length(root_decomposition(lie_sl2().algebra, lie_sl2().masa)));
        CHECK(is_maximal_length(root_decomposition(abelian(3).algebra, abelian(3).masa)));
        const auto m7 = malcev_m7();
        const auto v = maximal_length_verdict(root_decomposition(m7.algebra, m7.masa));
        CHECK_FALSE(v.pass);
        REQUIRE(v.witness);
        CHECK(v.witness->text == "dim P_(-2) = 3");
    }

    TEST_CASE("root multiplicativity")
    {
        CHECK(is_root_multiplicative(context(lie_sl2())));
        CHECK(is_root_multiplicative(context(abelian(2))));
        CHECK(is_root_multiplicative(context(sl2_power(3))));
        // With its true roots +-2 the Malcev algebra has no root sums inside
        // Lambda, and theta_a * b = b always comes with [[P_a,P_-a],P_b] != 0.
        CHECK(is_root_multiplicative(context(malcev_m7())));

        const auto v = root_multiplicative(context(weights_one_two()));
        CHECK_FALSE(v.pass);
        REQUIRE(v.witness);
        CHECK(v.witness->indices == std::vector<std::size_t>{0, 0});
        CHECK(v.witness->text == "((1), (1)): a+b is a root but [P_a, P_b] = 0");
    }

    TEST_CASE("simplicity criterion")
    {
        const auto s = simplicity_criterion(context(lie_sl2()));
        CHECK(s.simple);
        CHECK_FALSE(s.strict_simple);
        const auto two = simplicity_criterion(context(sl2_power(2)));
        CHECK_FALSE(two.simple);
        CHECK_FALSE(two.connected);
        CHECK(two.h_generated);
        CHECK_THROWS_AS(simplicity_criterion(context(malcev_m7())), HypothesesUnmet);
        CHECK_THROWS_AS(simplicity_criterion(context(solvable2())), HypothesesUnmet);
        CHECK_THROWS_AS(simplicity_criterion(context(weights_one_two())), HypothesesUnmet);
        const auto ab = simplicity_criterion(context(direct_sum(lie_sl2(), abelian(1))));
        CHECK_FALSE(ab.simple);
        CHECK_FALSE(ab.h_generated);
    }

    TEST_CASE("oracle")
    {
        auto rd = [](const GeneratedAlgebra& g) { return root_decomposition(g.algebra, g.masa); };
        CHECK(oracle_is_simple(rd(lie_sl2())));
        CHECK_FALSE(oracle_is_simple(rd(sl2_power(2))));
        CHECK_THROWS_AS(oracle_is_simple(rd(malcev_m7())), OraclePreconditionUnmet);
        CHECK_THROWS_AS(oracle_is_simple(rd(direct_sum(lie_sl2(), abelian(1)))), OraclePreconditionUnmet);
        // Each block of sl2 + sl2 on its own.
        const auto two = sl2_power(2);
        const auto blk = subalgebra_on_subspace(two.algebra, block(6, 3, 6));
        CHECK(oracle_is_simple(root_decomposition(blk, block(3, 0, 1))));
    }

    TEST_CASE("simple components")
    {
        for (int k = 1; k <= 3; ++k) {
            const auto ctx = context(sl2_power(k));
            const auto comps = simple_components(ctx, build_ideals(ctx));
            REQUIRE(comps.size() == static_cast<std::size_t>(k));
            for (const auto& c : comps) {
                CHECK(c.certified());
                const auto sl2 = lie_sl2().algebra;
                REQUIRE(c.algebra.dim() == 3);
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j) {
                        CHECK(c.algebra.bracket_basis(i, j) == sl2.bracket_basis(i, j));
                        CHECK(is_zero(c.algebra.jordan_basis(i, j)));
                    }
            }
        }
        const auto m7 = context(malcev_m7());
        CHECK_THROWS_AS(simple_components(m7, build_ideals(m7)), HypothesesUnmet);
        const auto ab = context(direct_sum(lie_sl2(), abelian(1)));
        CHECK_THROWS_AS(simple_components(ab, build_ideals(ab)), HypothesesUnmet);
    }

    TEST_CASE("decompose report")
    {
        const auto rep = decompose(context(sl2_power(2)));
        CHECK(rep.classes.size() == 2);
        CHECK_FALSE(rep.theorem_failure());
        for (const auto& v : rep.verdicts) {
            INFO(v.name);
            CHECK(v.applicable);
            CHECK(v.verdict.pass);
        }
        CHECK(rep.verdicts.size() == 9);
        CHECK(rep.verdict("simple_components").theorem);
        CHECK_FALSE(rep.verdict("center_zero").theorem);
        CHECK_THROWS_AS(rep.verdict("nope"), std::out_of_range);

        const auto m7 = decompose(context(malcev_m7()));
        CHECK_FALSE(m7.verdict("simple_components").applicable);
        CHECK_FALSE(m7.verdict("maximal_length").verdict.pass);
        CHECK_FALSE(m7.theorem_failure());
    }

    TEST_CASE("property: theorems hold on every bundled family")
    {
        for (const auto& g : testing::bundled_families()) {
            INFO(g.name);
            const auto ctx = context(g);
            const auto ideals = build_ideals(ctx);
            for (const auto& d : ideals) {
                CHECK(testing::is_ideal(g.algebra, d.ideal));
                CHECK(d.ideal.dim() == d.ideal_h.dim() + d.v.dim());
                CHECK(g.masa.contains(d.ideal_h));
            }
            for (std::size_t i = 0; i < ideals.size(); ++i)
                for (std::size_t j = i + 1; j < ideals.size(); ++j)
                    for (const auto& u : ideals[i].ideal.basis())
                        for (const auto& v : ideals[j].ideal.basis()) {
                            CHECK(is_zero(bracket(g.algebra, u, v)));
                            CHECK(is_zero(jordan_prod(g.algebra, u, v)));
                        }
            const auto comp = complement_and_decompose(ctx, ideals);
            CHECK(comp.spans_p.pass);
            const auto direct = check_direct(ctx, ideals);
            if (direct.applicable) {
                std::size_t total = 0;
                for (const auto& d : ideals)
                    total += d.ideal.dim();
                CHECK(total == g.algebra.dim());
                CHECK(direct.direct_sum.pass);
            }
            CHECK_FALSE(decompose(ctx).theorem_failure());
        }
    }

    TEST_CASE("property: closures split along root spaces and avoid H")
    {
        std::mt19937_64 rng(31);
        for (const auto& g : testing::bundled_families()) {
            INFO(g.name);
            const auto rd = root_decomposition(g.algebra, g.masa);
            const bool centerless = center(g.algebra).is_zero();
            for (int t = 0; t < 20; ++t) {
                const Subspace seed = testing::random_subspace(rng, g.algebra.dim(), 2);
                const Subspace cl = ideal_closure(g.algebra, seed);
                CHECK(splits_along_roots(rd, cl));
                // A subspace of H as seed.
                std::vector<Vec> hs;
                for (const auto& c : testing::random_vectors(rng, g.masa.dim(), 1))
                    hs.push_back(g.masa.combine(c));
                const Subspace hcl = ideal_closure(g.algebra, Subspace::span(g.algebra.dim(), hs));
                if (centerless)
                    CHECK((hcl.is_zero() || !g.masa.contains(hcl)));
            }
        }
    }

    TEST_CASE("property: criterion and oracle agree where both apply")
    {
        std::vector<GeneratedAlgebra> inputs{lie_sl2(), sl2_power(2), sl2_power(3)};
        for (const auto& g : testing::bundled_families())
            inputs.push_back(g);
        for (const auto& g : inputs) {
            INFO(g.name);
            const auto ctx = context(g);
            if (!criterion_hypothesis_failures(ctx).empty() || !center(g.algebra).is_zero())
                continue;
            CHECK(simplicity_criterion(ctx).simple == oracle_is_simple(ctx.rd()));
        }
    }

    TEST_CASE("serial and parallel pipelines agree")
    {
        for (const auto& g : testing::bundled_families()) {
            const auto s = decompose(context(g, Exec::serial), Exec::serial);
            const auto p = decompose(context(g, Exec::parallel), Exec::parallel);
            CHECK(s.classes == p.classes);
            REQUIRE(s.verdicts.size() == p.verdicts.size());
            for (std::size_t i = 0; i < s.verdicts.size(); ++i)
                CHECK(s.verdicts[i].verdict == p.verdicts[i].verdict);
        }
    }
}
