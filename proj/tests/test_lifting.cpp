#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hamcay/corpus.hpp"
#include "hamcay/errors.hpp"
#include "hamcay/lifting.hpp"
#include "instances.hpp"

using namespace hamcay;

namespace {

std::shared_ptr<const Group> shared(const PcPresentation& p) { return std::make_shared<const Group>(make_group(p)); }

// Every hamiltonian cycle of a quotient graph, based at the identity coset.
std::vector<WalkSpec> all_cycles(const QuotientMap& q, std::size_t cap = 2000) {
    std::vector<WalkSpec> out;
    SearchOptions o;
    enumerate_hamiltonian_cycles(q.graph, o, [&](const std::vector<Step>& steps) {
        out.push_back(WalkSpec{std::nullopt, steps, 1});
        return out.size() >= cap;
    });
    return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::MalformedInput;
}

struct Z7Z3 {
    std::shared_ptr<const Group> g = shared(fixtures::z7_z3(2));
    GenSet s = fixtures::gens(*g, {{"a", g->gen(0)}, {"b", g->mul(g->gen(0), g->gamma())}});
    QuotientMap q = derived_quotient(g, s);
};

} // namespace

TEST(Quotient, Invariants) {
    for (const auto& p : fixtures::small_groups(150)) {
        auto g = shared(p);
        GenSet s = fixtures::standard_gens(*g);
        auto q = derived_quotient(g, s);
        EXPECT_EQ(q.quotient_order() * q.normal.size(), g->order());
        ASSERT_TRUE(q.generator.has_value());
        ASSERT_TRUE(q.quotient.has_value());
        Group quo = make_group(*q.quotient);
        EXPECT_EQ(quo.order(), q.quotient_order());
        EXPECT_TRUE(is_abelian(quo));
        // projection is a homomorphism on generator pairs
        for (const auto& x : s.elems)
            for (const auto& y : s.elems) {
                Element lx = q.lift(q.vertex_of(x));
                EXPECT_EQ(q.vertex_of(g->mul(x, y)), q.vertex_of(g->mul(lx, y)));
            }
        EXPECT_EQ(q.reps[0], 0u);
    }
}

TEST(Quotient, RejectsNonNormal) {
    auto g = shared(fixtures::z7_z3(2));
    GenSet s = fixtures::standard_gens(*g);
    EXPECT_EQ(kind_of([&] { make_quotient(g, s, {g->gen(0)}); }), ErrorKind::NotApplicable);
}

TEST(Voltage, Order21Example) {
    Z7Z3 f;
    EXPECT_EQ(f.q.quotient_order(), 3u);
    // with b = g_1 gamma the product a a b collects to gamma, and b a a to gamma^4
    EXPECT_EQ(voltage(f.q, walk_of({{"a", 2}, {"b", 1}})), f.g->gamma(1));
    EXPECT_EQ(voltage(f.q, walk_of({{"b", 1}, {"a", 2}})), f.g->gamma(4));
    EXPECT_EQ(voltage(f.q, walk_of({{"a", 3}})), f.g->identity());
}

TEST(Voltage, RejectsNonHamiltonian) {
    Z7Z3 f;
    EXPECT_EQ(kind_of([&] { voltage(f.q, walk_of({{"a", 2}})); }), ErrorKind::NotAHamiltonianCycleInQuotient);
    EXPECT_EQ(kind_of([&] { voltage(f.q, walk_of({{"a", 1}, {"a", -1}, {"a", 1}})); }),
              ErrorKind::NotAHamiltonianCycleInQuotient);
}

TEST(Voltage, AbelianZeroSum) {
    auto g = shared(PcPresentation{1, {3, 5}, {0, 0}, {0, 0}, {}});
    GenSet s = fixtures::standard_gens(*g);
    auto q = make_quotient(g, s, {g->gen(1)});
    EXPECT_EQ(voltage(q, walk_of({{s.names[0], 3}})), g->identity());
}

TEST(Voltage, RotationExample) {
    Z7Z3 f;
    WalkSpec c = walk_of({{"b", 1}, {"a", 2}});
    EXPECT_EQ(voltage_conjugate_check(f.q, c, f.g->identity()), f.g->gamma(4));
    // rotating to the coset of a gives (gamma^4)^a = gamma^8 = gamma
    EXPECT_EQ(voltage_conjugate_check(f.q, c, f.g->gen(0)), f.g->gamma(1));
}

TEST(Voltage, RotationLawOnCorpus) {
    std::mt19937_64 rng(11);
    for (const auto& p : fixtures::small_groups(200)) {
        auto g = shared(p);
        GenSet s = fixtures::standard_gens(*g);
        auto q = derived_quotient(g, s);
        auto cycles = all_cycles(q, 6);
        for (const auto& c : cycles) {
            Element pc = voltage(q, c);
            for (int rep = 0; rep < 4; ++rep) {
                Element x = g->element(rng() % g->order());
                EXPECT_EQ(voltage_conjugate_check(q, c, x), g->conj(pc, x));
            }
        }
    }
}

TEST(Fgl, Order21Lift) {
    Z7Z3 f;
    WalkSpec lift = fgl_lift(f.q, walk_of({{"a", 2}, {"b", 1}}));
    EXPECT_EQ(lift.multiplicity, 7);
    EXPECT_TRUE(is_hamiltonian_cycle(*f.g, f.s, lift).hamiltonian);
}

TEST(Fgl, CyclicLift) {
    auto g = shared(PcPresentation{7, {3}, {1}, {1}, {}});  // Z_21 with g^3 = gamma
    GenSet s = fixtures::gens(*g, {{"s", g->gen(0)}});
    auto q = make_quotient(g, s, {g->gamma()});
    WalkSpec lift = fgl_lift(q, walk_of({{"s", 3}}));
    EXPECT_EQ(lift.expanded_length(), 21u);
    EXPECT_TRUE(is_hamiltonian_cycle(*g, s, lift).hamiltonian);
}

TEST(Fgl, IdentityVoltageRejected) {
    Z7Z3 f;
    EXPECT_EQ(kind_of([&] { fgl_lift(f.q, walk_of({{"a", 3}})); }), ErrorKind::VoltageDoesNotGenerate);
}

TEST(Fgl, BothDirectionsOnCorpus) {
    auto t = instances::fgl_bidirectional(300, 8);
    EXPECT_GE(t.generating.checked, 50u);
    EXPECT_GE(t.non_generating.checked, 10u);
    EXPECT_EQ(t.generating.matched, t.generating.checked);
    EXPECT_EQ(t.non_generating.matched, t.non_generating.checked);
    for (const auto& f : t.generating.failures) ADD_FAILURE() << f;
    for (const auto& f : t.non_generating.failures) ADD_FAILURE() << f;
}

TEST(FreeLunch, RadicalOrders) {
    // Z_63 x| Z_3 with a nontrivial action on the 7-part
    auto g = shared(fixtures::metacyclic(63, 3, 37));
    GenSet s = fixtures::standard_gens(*g);
    auto q = make_quotient(g, s, {g->gamma()});
    EXPECT_EQ(q.normal.size(), 63u);
    auto r = free_lunch_reduce(q);
    EXPECT_EQ(r.normal.size(), 21u);
    auto sq = make_quotient(g, s, {g->gamma(3)});
    EXPECT_EQ(free_lunch_reduce(sq).normal.size(), 21u);
}

TEST(FreeLunch, TransferOnPrimeSquare) {
    // Z_49 x| Z_3, the action a cube root of unity mod 49
    i64 r = 0;
    for (i64 x = 2; x < 49; ++x)
        if (powmod(x, 3, 49) == 1) {
            r = x;
            break;
        }
    ASSERT_NE(r, 0);
    auto g = shared(fixtures::metacyclic(49, 3, r));
    GenSet s = fixtures::gens(*g, {{"a", g->gen(0)}, {"b", g->mul(g->gen(0), g->gamma())}});
    auto q = derived_quotient(g, s);
    ASSERT_EQ(q.normal.size(), 49u);
    auto red = free_lunch_reduce(q);
    ASSERT_EQ(red.normal.size(), 7u);
    std::size_t checked = 0;
    for (const auto& c : all_cycles(red, 50)) {
        if (!generates_normal(red, voltage(red, c))) continue;
        ++checked;
        EXPECT_TRUE(generates_normal(q, voltage(q, c)));
        EXPECT_TRUE(is_hamiltonian_cycle(*g, s, fgl_lift(q, c)).hamiltonian);
    }
    EXPECT_GT(checked, 0u);
}

TEST(FreeLunch, MinimalityProjects) {
    // a minimal generating set stays minimal modulo the Frattini part of G'
    CorpusSpec spec;
    spec.max_order = 500;
    spec.max_mu = 2;
    spec.shapes = {{3}, {3, 3}, {9}};
    std::size_t seen = 0;
    for (const auto& p : enumerate_presentations(spec)) {
        auto g = shared(p);
        i64 n = derived_order(*g);
        if (n == radical(n)) continue;
        GenSet s = fixtures::standard_gens(*g);
        auto minimal = [](const Group& gr, const std::vector<Element>& e) {
            if (!generates(gr, e)) return false;
            for (std::size_t i = 0; i < e.size(); ++i) {
                auto f = e;
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
                if (generates(gr, f)) return false;
            }
            return true;
        };
        if (!minimal(*g, s.elems)) continue;
        auto red = free_lunch_reduce(derived_quotient(g, s));
        EXPECT_TRUE(minimal(*red.group, red.symbols.elems));
        ++seen;
    }
    EXPECT_GT(seen, 0u);
}

TEST(Assembly, SelectExamples) {
    Z7Z3 f;
    auto space = std::make_shared<const QuotientMap>(f.q);
    auto fam = make_family(space, {walk_of({{"a", 2}, {"b", 1}})});
    EXPECT_EQ(marusic_select(fam, f.g->identity()), 0u);
    auto dead = make_family(space, {walk_of({{"a", 3}})});
    EXPECT_EQ(kind_of([&] { marusic_select(dead, f.g->identity()); }), ErrorKind::NoCycleWorks);
}

TEST(Assembly, ThreeVariantExamples) {
    // in Z_21 x| Z_3 the voltages e, x, x^2 with x generating G' pass
    auto g = shared(fixtures::g819(2, 3, 4, 3));
    auto space = std::make_shared<const QuotientMap>(derived_quotient(g, fixtures::standard_gens(*g)));
    CycleFamily fam;
    fam.space = space;
    Element x = derived_generator(*g);
    fam.voltages = {g->identity(), x, g->pow(x, 2)};
    fam.cycles.resize(3);
    EXPECT_TRUE(marusic34_check(fam, MarusicVariant::Three));
    EXPECT_TRUE(marusic_condition(fam));
    fam.voltages = {g->identity(), g->identity(), g->identity()};
    EXPECT_FALSE(marusic34_check(fam, MarusicVariant::Three));
    EXPECT_FALSE(marusic_condition(fam));
    EXPECT_EQ(kind_of([&] { marusic34_check(fam, MarusicVariant::Four); }), ErrorKind::WrongFamilySize);
}

TEST(Assembly, CheckImpliesConditionExhaustively) {
    // every triple and quadruple of voltages in G' for a group with |G'| = 91
    auto g = shared(fixtures::g819(2, 3, 4, 3));
    auto space = std::make_shared<const QuotientMap>(derived_quotient(g, fixtures::standard_gens(*g)));
    Element d = derived_generator(*g);
    std::mt19937_64 rng(5);
    std::size_t passed3 = 0, passed4 = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        CycleFamily fam;
        fam.space = space;
        std::size_t k = trial % 2 ? 4 : 3;
        for (std::size_t i = 0; i < k; ++i) fam.voltages.push_back(g->pow(d, static_cast<i64>(rng() % 91)));
        fam.cycles.resize(k);
        bool ok = marusic34_check(fam, k == 3 ? MarusicVariant::Three : MarusicVariant::Four);
        if (ok) {
            (k == 3 ? passed3 : passed4)++;
            EXPECT_TRUE(marusic_condition(fam));
            for (i64 w = 0; w < 91; ++w) EXPECT_NO_THROW(marusic_select(fam, g->pow(d, w)));
        }
    }
    EXPECT_GT(passed3, 100u);
    EXPECT_GT(passed4, 5u);
}

TEST(Assembly, ApplyWithProperSubset) {
    // (Z_7 x| Z_3) x Z_5 with S_0 = {a, b} and an extra generator c of the Z_5 factor
    auto g = shared(PcPresentation{7, {3, 5}, {0, 0}, {2, 1}, {}});
    GenSet s = fixtures::gens(*g, {{"a", g->gen(0)}, {"b", g->mul(g->gen(0), g->gamma())}, {"c", g->gen(1)}});
    GenSet s0 = fixtures::gens(*g, {{"a", g->gen(0)}, {"b", g->mul(g->gen(0), g->gamma())}});
    auto space = std::make_shared<const QuotientMap>(make_quotient(g, s0, {derived_generator(*g)}));
    ASSERT_EQ(space->quotient_order(), 3u);
    auto cycles = all_cycles(*space);
    std::size_t applied = 0;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            for (std::size_t k = j + 1; k < cycles.size(); ++k) {
                auto fam = make_family(space, {cycles[i], cycles[j], cycles[k]});
                if (!fam.common || !marusic_condition(fam)) continue;
                auto res = marusic_apply(g, s, {"a", "b"}, fam);
                EXPECT_TRUE(is_hamiltonian_cycle(*g, s, res.walk).hamiltonian);
                EXPECT_EQ(res.walk.expanded_length(), 105u);
                ++applied;
            }
    EXPECT_GT(applied, 0u);
}

TEST(Assembly, DegenerateAbelian) {
    auto g = shared(PcPresentation{1, {3, 5}, {0, 0}, {0, 0}, {}});
    GenSet s = fixtures::standard_gens(*g);
    auto space = std::make_shared<const QuotientMap>(derived_quotient(g, s));
    auto cycles = all_cycles(*space, 1);
    ASSERT_FALSE(cycles.empty());
    auto fam = make_family(space, {cycles[0]});
    auto res = marusic_apply(g, s, s.names, fam);
    EXPECT_TRUE(is_hamiltonian_cycle(*g, s, res.walk).hamiltonian);
}

TEST(Assembly, FailingFamilyRejected) {
    Z7Z3 f;
    auto space = std::make_shared<const QuotientMap>(f.q);
    auto fam = make_family(space, {walk_of({{"a", 3}})});
    EXPECT_EQ(kind_of([&] { marusic_apply(f.g, f.s, {"a", "b"}, fam); }), ErrorKind::AssemblyFailed);
}

TEST(CosetSweep, GammaGenerator) {
    // S = {a, y} with y = gamma in Z_7 x| Z_3
    auto g = shared(fixtures::z7_z3(2));
    GenSet s = fixtures::gens(*g, {{"a", g->gen(0)}, {"y", g->gamma()}});
    auto w = coset_sweep_lift(*g, s, "y", walk_of({{"a", 3}}).steps);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_hamiltonian_cycle(*g, s, *w).hamiltonian);
}

TEST(CosetSweep, AbelianSweep) {
    auto g = shared(PcPresentation{1, {5, 3}, {0, 0}, {0, 0}, {}});
    GenSet s = fixtures::gens(*g, {{"x", g->gen(0)}, {"y", g->gen(1)}});
    auto w = coset_sweep_lift(*g, s, "y", walk_of({{"x", 5}}).steps);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_hamiltonian_cycle(*g, s, *w).hamiltonian);
    // Z_15 = <3> x <5>: sweeping <3> along (5,5,5) cannot close
    auto c = shared(fixtures::cyclic(15));
    GenSet t = fixtures::gens(*c, {{"u", c->pow(c->gen(0), 3)}, {"v", c->pow(c->gen(0), 5)}});
    EXPECT_FALSE(coset_sweep_lift(*c, t, "u", walk_of({{"v", 3}}).steps).has_value());
}
