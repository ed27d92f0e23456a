#include <algorithm>
#include <map>

#include "detail.hpp"
#include "hamcay/errors.hpp"

namespace hamcay {

using detail::as_walk;
using detail::subset;

namespace detail {

namespace {

std::vector<std::uint64_t> edge_keys(const QuotientMap& space, const std::vector<Step>& c) {
    auto seq = vertex_sequence(space.graph, c, 0);
    const std::uint64_t k = space.graph.symbols();
    std::vector<std::uint64_t> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        out.push_back((seq[i] * k + space.graph.symbol(c[i].sym)) * 2 + (c[i].sign > 0 ? 1 : 0));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::optional<FoundPair> search_pair(const QuotientMap& space, const std::function<bool(const Element&)>& accept,
                                     std::uint64_t budget) {
    const Group& g = *space.group;
    struct Seen {
        std::vector<Step> steps;
        std::vector<std::uint64_t> keys;
    };
    // cycles bucketed by voltage; acceptance depends only on the pair of voltages
    std::map<Element, std::vector<Seen>> buckets;
    std::optional<FoundPair> found;
    SearchOptions opts;
    opts.budget = budget;
    enumerate_hamiltonian_cycles(space.graph, opts, [&](const std::vector<Step>& steps) {
        const Element volt = walk_product(g, space.symbols, steps);
        Seen cur{steps, edge_keys(space, steps)};
        for (const auto& [v, olds] : buckets) {
            const Element diff = g.mul(g.inv(v), volt);
            if (!accept(diff)) continue;
            for (const auto& old : olds) {
                std::vector<std::uint64_t> common;
                std::set_intersection(old.keys.begin(), old.keys.end(), cur.keys.begin(), cur.keys.end(),
                                      std::back_inserter(common));
                if (common.empty()) continue;
                auto seq = vertex_sequence(space.graph, old.steps, 0);
                const std::uint64_t k = space.graph.symbols();
                for (std::size_t i = 0; i < old.steps.size(); ++i) {
                    const auto& st = old.steps[i];
                    if ((seq[i] * k + space.graph.symbol(st.sym)) * 2 + (st.sign > 0 ? 1 : 0) != common[0]) continue;
                    found = FoundPair{old.steps, cur.steps, OrientedEdge{seq[i], st}, diff};
                    return true;
                }
            }
        }
        auto& bucket = buckets[volt];
        if (bucket.size() < 64) bucket.push_back(std::move(cur));
        return false;
    });
    return found;
}

std::vector<Step> end_with(const QuotientMap& space, const std::vector<Step>& c, const OrientedEdge& e) {
    auto seq = vertex_sequence(space.graph, c, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (seq[i] == e.vertex && c[i] == e.step) {
            std::vector<Step> out(c.begin() + static_cast<std::ptrdiff_t>(i + 1), c.end());
            out.insert(out.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i + 1));
            return out;
        }
    throw Error(ErrorKind::PatternNotFound, "oriented edge not on the cycle");
}

} // namespace detail

// ---- abelian groups --------------------------------------------------------------------------

namespace {

// Rows are the cosets of H = <T minus t>; each row runs C_H minus its last vertex, alternating
// direction, and the column left out is swept back at the end.
std::vector<Step> grid(const std::vector<Step>& ch, const Step& t, i64 rows) {
    const std::size_t n = ch.size();
    std::vector<Step> w;
    for (i64 row = 0; row < rows; ++row) {
        if (row % 2 == 0)
            w.insert(w.end(), ch.begin(), ch.begin() + static_cast<std::ptrdiff_t>(n - 2));
        else
            for (std::size_t i = n - 2; i-- > 0;) w.push_back(inv(ch[i]));
        if (row + 1 < rows) w.push_back(t);
    }
    w.push_back(ch[n - 2]);
    append(w, pw(t, -(rows - 1)));
    w.push_back(ch[n - 1]);
    return w;
}

} // namespace

std::vector<Step> abelian_cycle(const Group& a, const GenSet& t) {
    std::vector<std::size_t> keep;
    std::vector<Element> acc;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (subgroup_closure(a, acc).contains(t.elems[i])) continue;
        keep.push_back(i);
        acc.push_back(t.elems[i]);
    }
    if (keep.empty()) return {};
    const std::size_t last = keep.back();
    const Step s{t.names[last], 1};
    const std::size_t whole = subgroup_closure(a, acc).size();
    acc.pop_back();
    const std::size_t h = subgroup_closure(a, acc).size();
    if (h == 1) return pw(s, a.element_order(t.elems[last]));
    GenSet sub;
    for (std::size_t j = 0; j + 1 < keep.size(); ++j) {
        sub.names.push_back(t.names[keep[j]]);
        sub.elems.push_back(t.elems[keep[j]]);
    }
    return grid(abelian_cycle(a, sub), s, static_cast<i64>(whole / h));
}

// ---- cycle pairs ------------------------------------------------------------------------------

namespace {

bool is_27_exponent_3(const Group& g) {
    if (g.order() != 27 || is_abelian(g)) return false;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.element_order(g.element(i)) > 3) return false;
    return true;
}

PairResult pair_result(std::shared_ptr<const QuotientMap> space, const std::vector<Step>& c1,
                       const std::vector<Step>& c2, bool searched) {
    PairResult r;
    r.family = make_family(space, {as_walk(c1), as_walk(c2)});
    r.searched = searched;
    return r;
}

} // namespace

PairResult g_prime_p_pair(std::shared_ptr<const Group> g, const GenSet& s, std::uint64_t budget) {
    const Group& G = *g;
    const i64 n = derived_order(G);
    if (factorize(n).size() != 1) throw Error(ErrorKind::HypothesisViolated, "G' must have prime-power order");
    if (is_27_exponent_3(G)) throw Error(ErrorKind::NotApplicable, "nonabelian group of order 27 and exponent 3");
    const Element d = derived_generator(G);
    auto space = std::make_shared<const QuotientMap>(derived_quotient(g, s));

    // order 27, exponent 9: (a^2, b)^3 and (a^2, b^-1)^3
    if (G.order() == 27 && s.size() == 2) {
        for (int bi = 0; bi < 2; ++bi) {
            const Step a{s.names[1 - bi], 1}, b{s.names[bi], 1};
            if (G.element_order(s.elems[bi]) < 9) continue;
            std::vector<Step> c1, c2;
            for (int i = 0; i < 3; ++i) {
                append(c1, {a, a, b});
                append(c2, {a, a, inv(b)});
            }
            auto r = pair_result(space, c1, c2, false);
            r.transcript.push_back("order-27 pair with |" + b.sym + "| >= 9");
            if (r.family.common && generates_derived(G, G.mul(G.inv(r.family.voltages[0]), r.family.voltages[1])))
                return r;
        }
    }
    auto found = detail::search_pair(*space, [&](const Element& x) { return generates_derived(G, x); }, budget);
    if (!found) throw Error(ErrorKind::BudgetExceeded, "no cycle pair found within budget");
    (void)d;
    auto r = pair_result(space, found->c1, found->c2, true);
    r.transcript.push_back("pair found by bounded search");
    return r;
}

PairResult g_prime_p_z_pair(std::shared_ptr<const Group> g, const GenSet& s, const std::vector<Element>& z,
                            std::uint64_t budget) {
    const Group& G = *g;
    const i64 n = derived_order(G);
    auto f = factorize(n);
    if (f.size() != 1 || f[0].second != 1) throw Error(ErrorKind::HypothesisViolated, "G' must have prime order");
    if (is_nilpotent(G)) throw Error(ErrorKind::HypothesisViolated, "G is nilpotent");
    const Element d = derived_generator(G);
    std::vector<Element> ngens{d};
    ngens.insert(ngens.end(), z.begin(), z.end());
    for (const auto& x : z)
        for (const auto& y : s.elems)
            if (G.commutator(x, y) != G.identity()) throw Error(ErrorKind::HypothesisViolated, "Z is not central");
    auto space = std::make_shared<const QuotientMap>(make_quotient(g, s, ngens));
    for (const auto& x : s.elems)
        if (space->normal.contains(x)) throw Error(ErrorKind::HypothesisViolated, "S meets G'Z");
    auto accept = [&](const Element& x) { return generates_derived(G, x); };

    // b in <a, G', Z>: (b, a^-(i-1), b, a^(n-i-1)) and its rotation by a
    if (s.size() == 2) {
        for (int ai = 0; ai < 2; ++ai) {
            const Step a{s.names[ai], 1}, b{s.names[1 - ai], 1};
            if (derived_action(G, s.elems[ai]) == 1 % n) continue;
            const std::size_t m = space->quotient_order();
            std::size_t v = 0;
            i64 i = -1;
            const std::size_t target = space->graph.step(0, b);
            for (i64 e = 1; e < static_cast<i64>(m); ++e) {
                v = space->graph.step(v, a);
                if (v == target) {
                    i = e;
                    break;
                }
            }
            if (i < 1) continue;
            const i64 mm = static_cast<i64>(m);
            std::vector<Step> c1{b}, c2{b};
            append(c1, pw(a, -(i - 1)));
            c1.push_back(b);
            append(c1, pw(a, mm - i - 1));
            append(c2, pw(a, mm - i - 1));
            c2.push_back(b);
            append(c2, pw(a, -(i - 1)));
            try {
                auto r = pair_result(space, c1, c2, false);
                if (r.family.common && accept(G.mul(G.inv(r.family.voltages[0]), r.family.voltages[1]))) {
                    r.transcript.push_back(b.sym + " lies in <" + a.sym + ", G', Z> with i = " + std::to_string(i));
                    return r;
                }
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NotAHamiltonianCycleInQuotient) throw;
            }
        }
    }
    auto found = detail::search_pair(*space, accept, budget);
    if (!found) throw Error(ErrorKind::BudgetExceeded, "no cycle pair found within budget");
    auto r = pair_result(space, found->c1, found->c2, true);
    r.transcript.push_back("pair found by bounded search");
    return r;
}

// ---- aG' = bG' --------------------------------------------------------------------------------

AgbgResult a_gprime_eq_b_gprime(std::shared_ptr<const Group> g, const GenSet& s, const Step& a, const Step& b) {
    const Group& G = *g;
    AgbgResult res;
    const Element av = step_value(G, s, a), bv = step_value(G, s, b);
    const Element gamma = G.mul(G.inv(av), bv);
    if (a.sym == b.sym || derived_log(G, gamma) < 0) throw Error(ErrorKind::HypothesisViolated, "need a != b with aG' = bG'");
    const i64 n = derived_order(G);
    const Element d = derived_generator(G);
    std::vector<std::string> rest_names;
    for (const auto& nm : s.names)
        if (nm != b.sym) rest_names.push_back(nm);
    const GenSet rest = subset(s, rest_names);
    std::vector<std::string> all = s.names;

    // hamiltonian cycle of the abelian quotient through S minus b
    auto ab = abelianization(G);
    auto swap_edges = [&](const std::vector<Step>& c0, std::size_t i1, std::size_t i2, bool both) {
        std::vector<Step> out = c0;
        auto swap_one = [&](std::size_t i) { out[i] = Step{b.sym, out[i].sign * a.sign * b.sign}; };
        swap_one(i1);
        if (both) swap_one(i2);
        return out;
    };
    auto a_edges = [&](const std::vector<Step>& c) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i].sym == a.sym) out.push_back(i);
        return out;
    };

    const bool full = generates_derived(G, gamma);
    if (full) {
        res.subcase = "gamma-generates";
        auto c0 = abelian_cycle(*ab.group, project_gamma(rest, ab.gamma_order));
        auto space = std::make_shared<const QuotientMap>(derived_quotient(g, s));
        auto idx = a_edges(c0);
        if (idx.size() < 2) throw Error(ErrorKind::AssemblyFailed, "cycle has fewer than two a-edges");
        for (std::size_t x = 0; x < idx.size(); ++x)
            for (std::size_t y = x + 1; y < idx.size(); ++y) {
                auto fam = make_family(space, {as_walk(c0), as_walk(swap_edges(c0, idx[x], idx[y], false)),
                                               as_walk(swap_edges(c0, idx[x], idx[y], true))});
                if (!fam.common || !marusic34_check(fam, MarusicVariant::Three)) continue;
                res.transcript.push_back("a-edges " + std::to_string(idx[x]) + ", " + std::to_string(idx[y]));
                res.walk = marusic_apply(g, s, all, fam).walk;
                return res;
            }
        throw Error(ErrorKind::FamilyCheckFailed, "no pair of a-edges gives a working family");
    }

    // <gamma> = N x Z_q: find the prime q it covers
    auto primes = factorize(n);
    if (primes.size() != 2) throw Error(ErrorKind::HypothesisViolated, "G' must have two prime factors here");
    i64 q = 0, p = 0;
    for (int i = 0; i < 2; ++i)
        if (covers_prime(G, gamma, primes[i].first) && !covers_prime(G, gamma, primes[1 - i].first)) {
            q = primes[i].first;
            p = primes[1 - i].first;
        }
    if (q == 0) throw Error(ErrorKind::HypothesisViolated, "gamma covers no prime of G'");

    // G/(G')^p as the nonabelian group of order 27 and exponent 3?
    bool special27 = false;
    if (p == 3) {
        auto qm = make_quotient(g, s, {G.pow(d, p)});
        if (qm.quotient_order() == 27 && qm.quotient) special27 = is_27_exponent_3(make_group(*qm.quotient));
    }

    if (!special27) {
        res.subcase = "gamma-covers-one-prime";
        auto space = std::make_shared<const QuotientMap>(derived_quotient(g, s));
        auto pair_space = make_quotient(g, rest, {d});
        auto found = detail::search_pair(pair_space, [&](const Element& x) { return covers_prime(G, x, p); }, 2000000);
        if (!found) throw Error(ErrorKind::BudgetExceeded, "no pair covering Z_" + std::to_string(p));
        res.transcript.push_back("pair for Z_" + std::to_string(p) + " found by bounded search");
        auto c1 = found->c1, c2 = found->c2;
        auto seq1 = vertex_sequence(pair_space.graph, c1, 0), seq2 = vertex_sequence(pair_space.graph, c2, 0);
        auto pick = [&](const std::vector<Step>& c, const std::vector<std::size_t>& seq) -> std::size_t {
            for (std::size_t i = 0; i < c.size(); ++i)
                if (c[i].sym == a.sym && !(seq[i] == found->common.vertex && c[i] == found->common.step)) return i;
            throw Error(ErrorKind::AssemblyFailed, "no a-edge off the common edge");
        };
        std::size_t i1 = pick(c1, seq1), i2 = pick(c2, seq2);
        auto fam = make_family(space, {as_walk(c1), as_walk(c2), as_walk(swap_edges(c1, i1, i1, false)),
                                       as_walk(swap_edges(c2, i2, i2, false))});
        if (!fam.common || !marusic34_check(fam, MarusicVariant::Four))
            throw Error(ErrorKind::FamilyCheckFailed, "edge-swap family fails the four-cycle check");
        res.walk = marusic_apply(g, s, all, fam).walk;
        return res;
    }

    // directed hamiltonian cycle of the 3-group G/<gamma>, then the edge swaps over <gamma>
    res.subcase = "order-27-quotient";
    auto space = std::make_shared<const QuotientMap>(make_quotient(g, s, {gamma}));
    auto rest_space = make_quotient(g, rest, {gamma});
    SearchOptions o;
    o.directed = true;
    auto found = brute_force_hamiltonian(rest_space.graph, o);
    auto* w = std::get_if<WalkSpec>(&found);
    if (!w) throw Error(ErrorKind::BudgetExceeded, "no directed cycle in the 3-group quotient");
    res.transcript.push_back("directed cycle of G/<gamma> by search");
    auto c0 = w->steps;
    auto idx = a_edges(c0);
    if (idx.size() < 2) throw Error(ErrorKind::AssemblyFailed, "cycle has fewer than two a-edges");
    for (std::size_t x = 0; x < idx.size(); ++x)
        for (std::size_t y = x + 1; y < idx.size(); ++y) {
            std::vector<WalkSpec> cyc{as_walk(c0), as_walk(swap_edges(c0, idx[x], idx[y], false)),
                                      as_walk(swap_edges(c0, idx[x], idx[y], true))};
            for (const auto& c : cyc) {
                Element v = voltage(*space, c);
                if (generates_normal(*space, v)) {
                    res.walk = fgl_lift(*space, c);
                    return res;
                }
            }
        }
    throw Error(ErrorKind::NoCycleWorks, "no edge swap yields a generating voltage");
}

// ---- the 9pq construction ----------------------------------------------------------------------

NinePqResult nine_pq_hard(std::shared_ptr<const Group> g, const GenSet& s) {
    const Group& G = *g;
    NinePqResult res;
    if (s.size() != 2) throw Error(ErrorKind::HypothesisViolated, "S must have two elements");
    const i64 n = derived_order(G);
    auto primes = factorize(n);
    if (primes.size() != 2 || primes[0].first <= 3 || primes[1].first <= 3)
        throw Error(ErrorKind::HypothesisViolated, "G' must be Z_{p^mu} x Z_{q^nu} with p, q > 3");
    if (G.order() / static_cast<std::size_t>(n) != 9) throw Error(ErrorKind::HypothesisViolated, "G/G' must have order 9");
    auto ab = abelianization(G);
    if (ab.order(s.elems[0]) != 3 || ab.order(s.elems[1]) != 3 || ab.span(s.elems) != 9)
        throw Error(ErrorKind::HypothesisViolated, "G/G' must be Z_3 x Z_3 on a, b");
    auto ppow = [&](std::size_t i) {
        i64 x = 1;
        for (int k = 0; k < primes[i].second; ++k) x *= primes[i].first;
        return x;
    };
    const Element d = derived_generator(G);
    for (const auto& x : s.elems) {
        i64 t = derived_action(G, x);
        for (std::size_t i = 0; i < 2; ++i)
            if (mod(t - 1, primes[i].first) == 0) throw Error(ErrorKind::HypothesisViolated, "a generator centralizes part of G'");
    }

    // labelings (a, b^{+-1}) and prime order with ab centralizing Z_p and ab^-1 centralizing Z_q
    struct Choice {
        Step a, b;
        std::size_t pi;
    };
    std::optional<Choice> ch;
    for (int ai = 0; ai < 2 && !ch; ++ai)
        for (int sign : {1, -1})
            for (std::size_t pi = 0; pi < 2 && !ch; ++pi) {
                Step a{s.names[ai], 1}, b{s.names[1 - ai], sign};
                Element av = step_value(G, s, a), bv = step_value(G, s, b);
                i64 t1 = derived_action(G, G.mul(av, bv)), t2 = derived_action(G, G.mul(av, G.inv(bv)));
                if (mod(t1 - 1, ppow(pi)) == 0 && mod(t2 - 1, ppow(1 - pi)) == 0) ch = Choice{a, b, pi};
            }
    if (!ch) throw Error(ErrorKind::HypothesisViolated, "no labeling with ab centralizing Z_p and ab^-1 centralizing Z_q");
    const i64 pmu = ppow(ch->pi), qnu = ppow(1 - ch->pi);
    res.p = primes[ch->pi].first;
    res.q = primes[1 - ch->pi].first;
    res.transcript.push_back("a = " + ch->a.sym + ", b = " + ch->b.sym + (ch->b.sign < 0 ? "^-1" : "") +
                             ", p = " + std::to_string(res.p) + ", q = " + std::to_string(res.q));

    Element av = step_value(G, s, ch->a);
    const i64 r = mod(derived_action(G, G.inv(av)), pmu);
    auto [k, l] = triangle_kl(pmu, r);
    res.r = r;
    Step ra = ch->a, rb = ch->b;
    if (k > l) {
        std::swap(ra, rb);
        std::swap(k, l);
        res.swapped = true;
        res.transcript.push_back("k > l: roles of a and b interchanged");
    }
    res.cycle = triangle_walk(ra, rb, pmu, k, l);

    // Z_{q^nu} = <d^{p^mu}>
    const Element ygen = G.pow(d, pmu);
    auto space = make_quotient(g, s, {ygen});
    WalkSpec c = as_walk(res.cycle);
    if (!is_hamiltonian_cycle(space.graph, c, 0).hamiltonian)
        throw Error(ErrorKind::HypothesisViolated, "the triangle cycle is not hamiltonian in G/Z_q");
    res.voltage = voltage(space, c);

    // y: Z_q-part of gamma where b = gamma b_0 and b_0 commutes with a
    const Element ar = step_value(G, s, ra), br = step_value(G, s, rb);
    std::optional<Element> gamma;
    for (i64 w = 0; w < n; ++w) {
        Element gm = G.pow(d, w);
        Element b0 = G.mul(G.inv(gm), br);
        if (G.commutator(ar, b0) == G.identity()) {
            gamma = gm;
            break;
        }
    }
    if (!gamma) throw Error(ErrorKind::HypothesisViolated, "no complement element b_0 commuting with a");
    const i64 w = derived_log(G, *gamma);
    // idempotent for the q-part: e = 0 mod p^mu, 1 mod q^nu
    i64 e = 0;
    for (i64 x = 0; x < n; x += pmu)
        if (mod(x, qnu) == 1) {
            e = x;
            break;
        }
    const Element y = G.pow(d, mod(w * e, n));
    const i64 sq = mod(derived_action(G, ar), qnu);
    res.s = sq;
    const i64 expo = mod((sq * sq - 1) * (1 + sq), qnu);
    res.formula = G.pow(y, expo);
    res.transcript.push_back("r = " + std::to_string(r) + ", s = " + std::to_string(sq) + ", k = " + std::to_string(k) +
                             ", l = " + std::to_string(l));
    if (res.voltage != res.formula) throw Error(ErrorKind::FamilyCheckFailed, "voltage differs from y^{(s^2-1)(1+s)}");
    if (!generates_normal(space, res.voltage))
        throw Error(ErrorKind::VoltageDoesNotGenerate, "voltage does not generate Z_q");
    res.walk = fgl_lift(space, c);
    return res;
}

} // namespace hamcay
