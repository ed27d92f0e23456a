#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hamcay/constructions.hpp"
#include "hamcay/corpus.hpp"
#include "hamcay/errors.hpp"
#include "instances.hpp"

using namespace hamcay;

namespace {

std::shared_ptr<const Group> shared(const PcPresentation& p) { return std::make_shared<const Group>(make_group(p)); }

void expect_all(const instances::Tally& t, std::size_t at_least) {
    EXPECT_GE(t.checked, at_least);
    EXPECT_EQ(t.matched, t.checked);
    for (const auto& f : t.failures) ADD_FAILURE() << f;
}

} // namespace

TEST(Walks, PowerAndReversal) {
    const Step a{"a", 1}, b{"b", -1};
    EXPECT_EQ(pw(a, -2), (std::vector<Step>{{"a", -1}, {"a", -1}}));
    EXPECT_TRUE(pw(a, 0).empty());
    EXPECT_EQ(reversed_inverse({a, b}), (std::vector<Step>{{"b", 1}, {"a", -1}}));
}

TEST(Identities, CyclicQuotientTwoSymbols) { expect_all(instances::bina_identity(400, 60), 20); }
TEST(Identities, CyclicQuotientThreeSymbols) { expect_all(instances::bandcina_identity(600, 60), 20); }
TEST(Identities, RotatedAlteration) { expect_all(instances::kw43_identity(700, 80), 20); }
TEST(Identities, AlterationEdgeB) { expect_all(instances::alteration_identity(300, 80, AlterationVariant::EdgeB), 20); }
TEST(Identities, AlterationEdgeBInverse) {
    expect_all(instances::alteration_identity(300, 80, AlterationVariant::EdgeBInverse), 20);
}
TEST(Identities, OrderThreePair) { expect_all(instances::ab3_identity(400, 60), 20); }

TEST(Alteration, RejectsMissingPattern) {
    auto g = shared(fixtures::z7_z3(2));
    GenSet s = fixtures::gens(*g, {{"a", g->gen(0)}, {"b", g->mul(g->gen(0), g->gamma())}});
    auto space = derived_quotient(g, s);
    AlterationSpec spec{WalkSpec{std::nullopt, {{"a", 1}, {"a", 1}, {"a", 1}}, 1}, {"a", 1}, {"b", 1}, g->identity(), 1, 1,
                        AlterationVariant::EdgeB};
    try {
        standard_alteration(space, spec);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PatternNotFound);
    }
}

TEST(Triangle, ExactlyOneOfThePairIsHamiltonian) {
    for (i64 p : {7, 13})
        for (i64 pmu : {p, p * p})
            for (i64 r : roots_of_unity(pmu, 3)) {
                if (r % p == 1) continue;
                auto g = shared(PcPresentation{pmu, {3, 3}, {0, 0}, {r * r % pmu, r}, {{0, 0}, {0, 0}}});
                GenSet s = fixtures::gens(*g, {{"a", g->gen(0)}, {"b", g->mul(g->gamma(), g->gen(1))}});
                auto space = make_quotient(g, s, {});
                auto t = triangle_hc(space, {"a", 1}, {"b", 1}, TriangleParams{pmu, r});
                EXPECT_NE(t.c_hamiltonian, t.c_tilde_hamiltonian) << "p^mu=" << pmu << " r=" << r;
                EXPECT_EQ(t.c_hamiltonian, t.k < t.l);
            }
}

TEST(Triangle, SevenWithRTwo) {
    auto [k, l] = triangle_kl(7, 2);
    EXPECT_EQ(k, 16);
    EXPECT_EQ(l, 4);
    std::tie(k, l) = triangle_kl(7, 4);
    EXPECT_EQ(k, 4);
    EXPECT_EQ(l, 16);
}

TEST(NinePq, Order819Instances) {
    for (auto [r, s] : {std::pair<i64, i64>{2, 3}, {4, 9}}) {
        auto g = shared(instances::nine_pq({7, 13, r, s}));
        GenSet gs = fixtures::gens(*g, {{"a", g->gen(0)}, {"b", g->mul(g->gamma(1), g->gen(1))}});
        auto res = nine_pq_hard(g, gs);
        EXPECT_EQ(res.voltage, res.formula);
        EXPECT_NE(res.voltage, g->identity());
        EXPECT_EQ(res.walk.expanded_length(), 819u);
        EXPECT_TRUE(is_hamiltonian_cycle(*g, gs, res.walk).hamiltonian);
    }
}

TEST(NinePq, FormulaAcrossPrimes) { expect_all(instances::nine_pq_identity({7, 13, 19, 31, 37, 49}, 20000, 200), 20); }

TEST(NinePq, RejectsWrongQuotient) {
    auto g = shared(fixtures::z7_z3(2));
    GenSet s = fixtures::gens(*g, {{"a", g->gen(0)}, {"b", g->mul(g->gen(0), g->gamma())}});
    try {
        nine_pq_hard(g, s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::HypothesisViolated);
    }
}

TEST(Abelian, GridCycleIsHamiltonian) {
    for (const auto& p : fixtures::small_groups(300)) {
        auto g = shared(p);
        auto ab = abelianization(*g);
        GenSet s = project_gamma(fixtures::standard_gens(*g), ab.gamma_order);
        auto c = abelian_cycle(*ab.group, s);
        EXPECT_TRUE(is_hamiltonian_cycle(*ab.group, s, WalkSpec{std::nullopt, c, 1}).hamiltonian);
    }
}

TEST(Pairs, DerivedPrimePower) {
    std::size_t found = 0;
    for (const auto& p : fixtures::small_groups(200)) {
        auto g = shared(p);
        if (factorize(derived_order(*g)).size() != 1 || derived_order(*g) == 1) continue;
        GenSet s = fixtures::standard_gens(*g);
        try {
            auto r = g_prime_p_pair(g, s);
            ASSERT_TRUE(r.family.common.has_value());
            EXPECT_TRUE(generates_derived(*g, g->mul(g->inv(r.family.voltages[0]), r.family.voltages[1])));
            ++found;
        } catch (const Error& e) {
            EXPECT_TRUE(e.kind() == ErrorKind::NotApplicable || e.kind() == ErrorKind::BudgetExceeded) << e.what();
        }
    }
    EXPECT_GT(found, 5u);
}
