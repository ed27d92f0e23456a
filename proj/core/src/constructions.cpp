#include "hamcay/constructions.hpp"

#include <algorithm>

#include "detail.hpp"
#include "hamcay/errors.hpp"

namespace hamcay {

Step inv(Step s) {
    s.sign = -s.sign;
    return s;
}

std::vector<Step> pw(const Step& s, i64 n) {
    return std::vector<Step>(static_cast<std::size_t>(n < 0 ? -n : n), n < 0 ? inv(s) : s);
}

void append(std::vector<Step>& out, const std::vector<Step>& more) { out.insert(out.end(), more.begin(), more.end()); }

std::vector<Step> reversed_inverse(const std::vector<Step>& path) {
    std::vector<Step> out;
    for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(inv(*it));
    return out;
}

Element step_value(const Group& g, const GenSet& s, const Step& st) {
    auto k = s.find(st.sym);
    if (k < 0) throw Error(ErrorKind::UnknownSymbol, st.sym);
    const Element& y = s.elems[static_cast<std::size_t>(k)];
    return st.sign > 0 ? y : g.inv(y);
}

std::size_t Abelianization::span(const std::vector<Element>& xs) const {
    std::vector<Element> im;
    for (const auto& x : xs) im.push_back(of(x));
    return subgroup_closure(*group, im).size();
}

bool Abelianization::in_span(const Element& x, const std::vector<Element>& ys) const {
    std::vector<Element> im;
    for (const auto& y : ys) im.push_back(of(y));
    return subgroup_closure(*group, im).contains(of(x));
}

i64 Abelianization::log(const Element& x, const Element& y) const {
    const Element xb = of(x), yb = of(y);
    Element cur = group->identity();
    const i64 n = group->element_order(yb);
    for (i64 k = 0; k < n; ++k, cur = group->mul(cur, yb))
        if (cur == xb) return k;
    return -1;
}

Abelianization abelianization(const Group& g) {
    Abelianization ab;
    ab.gamma_order = g.gamma_order() / derived_order(g);
    GroupOptions quick;
    quick.assoc_exhaustive_bound = 0;
    quick.assoc_random_triples = 0;
    ab.group = std::make_shared<const Group>(make_group(reduce_gamma(g.presentation(), ab.gamma_order), quick));
    return ab;
}

i64 derived_log(const Group& g, const Element& x) {
    if (!g.in_gamma(x)) return -1;
    const i64 step = g.gamma_order() / derived_order(g);
    if (x.z % step != 0) return -1;
    return x.z / step;
}

bool covers_prime(const Group& g, const Element& x, i64 p) {
    const i64 n = derived_order(g);
    if (n % p != 0) return true;
    const i64 w = derived_log(g, x);
    return w >= 0 && w % p != 0;
}

i64 derived_action(const Group& g, const Element& x) {
    const Element d = derived_generator(g);
    return derived_log(g, g.conj(d, x));
}

// ---- path surgery ----------------------------------------------------------------------------

std::optional<std::size_t> find_pattern(const QuotientMap& space, const std::vector<Step>& cycle,
                                        const Element& at, const std::vector<Step>& pattern) {
    const std::size_t n = cycle.size();
    if (pattern.size() > n) return std::nullopt;
    auto v = space.coset_of[space.group->index(at)];
    if (v == QuotientMap::npos) return std::nullopt;
    auto seq = vertex_sequence(space.graph, cycle, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (seq[i] != v) continue;
        bool ok = true;
        for (std::size_t j = 0; j < pattern.size() && ok; ++j) ok = cycle[(i + j) % n] == pattern[j];
        if (ok) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> find_pattern_anywhere(const QuotientMap&, const std::vector<Step>& cycle,
                                                 const std::vector<Step>& pattern, std::size_t skip) {
    const std::size_t n = cycle.size();
    if (pattern.size() > n) return std::nullopt;
    for (std::size_t i = skip; i < n; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < pattern.size() && ok; ++j) ok = cycle[(i + j) % n] == pattern[j];
        if (ok) return i;
    }
    return std::nullopt;
}

std::vector<Step> rebase(const QuotientMap& space, const std::vector<Step>& cycle, std::size_t from) {
    auto seq = vertex_sequence(space.graph, cycle, from);
    for (std::size_t j = 0; j < cycle.size(); ++j)
        if (seq[j] == 0) {
            std::vector<Step> out(cycle.begin() + static_cast<std::ptrdiff_t>(j), cycle.end());
            out.insert(out.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(j));
            return out;
        }
    throw Error(ErrorKind::AssemblyFailed, "walk misses the identity coset");
}

std::vector<Step> splice(const QuotientMap& space, const std::vector<Step>& cycle, std::size_t i, std::size_t len,
                         const std::vector<Step>& repl) {
    const std::size_t n = cycle.size();
    if (len > n) throw Error(ErrorKind::PatternNotFound, "splice longer than the cycle");
    auto seq = vertex_sequence(space.graph, cycle, 0);
    std::vector<Step> out = repl;
    for (std::size_t j = len; j < n; ++j) out.push_back(cycle[(i + j) % n]);
    return rebase(space, out, seq[i % n]);
}

namespace detail {

GenSet subset(const GenSet& s, const std::vector<std::string>& names) {
    GenSet out;
    for (const auto& n : names) {
        auto k = s.find(n);
        if (k < 0) throw Error(ErrorKind::UnknownSymbol, n);
        out.names.push_back(n);
        out.elems.push_back(s.elems[static_cast<std::size_t>(k)]);
    }
    return out;
}

bool only_prime(const Group& g, const Element& x, i64 p, i64 other) {
    const i64 w = derived_log(g, x);
    return w >= 0 && w % p != 0 && (other == 0 || w % other == 0);
}

// Several non-overlapping replacements at once, rebased at the identity coset.
std::vector<Step> multi_splice(const QuotientMap& space, const std::vector<Step>& cycle, std::vector<Cut> cuts) {
    const std::size_t n = cycle.size();
    if (cuts.empty()) return cycle;
    std::sort(cuts.begin(), cuts.end(), [](const Cut& x, const Cut& y) { return x.at < y.at; });
    const std::size_t base = cuts[0].at;
    std::vector<std::size_t> rel;
    for (const auto& c : cuts) rel.push_back(c.at - base);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
        if (rel[k] + cuts[k].len > rel[k + 1]) throw Error(ErrorKind::PatternNotFound, "replacements overlap");
    if (rel.back() + cuts.back().len > n) throw Error(ErrorKind::PatternNotFound, "replacements overlap");
    auto seq = vertex_sequence(space.graph, cycle, 0);
    std::vector<Step> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < n;) {
        if (k < cuts.size() && j == rel[k]) {
            append(out, cuts[k].repl);
            j += cuts[k].len;
            ++k;
        } else {
            out.push_back(cycle[(base + j) % n]);
            ++j;
        }
    }
    return rebase(space, out, seq[base]);
}

WalkSpec as_walk(std::vector<Step> steps) {
    WalkSpec w;
    w.steps = std::move(steps);
    return w;
}

} // namespace detail

namespace {

using detail::as_walk;
using detail::multi_splice;
using detail::Cut;

std::size_t a_order_in(const QuotientMap& space, const Step& a) {
    std::size_t v = space.graph.step(0, a), k = 1;
    while (v != 0) {
        v = space.graph.step(v, a);
        ++k;
    }
    return k;
}

} // namespace

// ---- StandardAlteration ----------------------------------------------------------------------

namespace {

struct AlterationPlan {
    std::size_t edge, path;
};

std::optional<AlterationPlan> plan_alteration(const QuotientMap& space, const std::vector<Step>& c, const Step& a,
                                              const Step& b, const Element& g, i64 m, i64 k, AlterationVariant v) {
    const Group& G = *space.group;
    const GenSet& S = space.symbols;
    const std::size_t n = c.size();
    std::vector<Step> path = pw(a, m);
    path.push_back(b);
    append(path, pw(a, -m));
    Element start = G.mul(g, G.pow(step_value(G, S, a), -(m + 1)));
    auto pi = find_pattern(space, c, start, path);
    std::optional<std::size_t> ei;
    if (v == AlterationVariant::EdgeB)
        ei = find_pattern(space, c, g, {b});
    else
        ei = find_pattern(space, c, G.mul(g, step_value(G, S, b)), {inv(b)});
    if (!pi || !ei) return std::nullopt;
    const std::size_t sub = (*pi + static_cast<std::size_t>(m - k)) % n;
    const std::size_t len = static_cast<std::size_t>(2 * k + 1);
    // the edge must lie outside the replaced subpath
    if ((*ei + n - sub) % n < len) return std::nullopt;
    return AlterationPlan{*ei, sub};
}

} // namespace

AlterationResult standard_alteration(const QuotientMap& space, const AlterationSpec& spec) {
    const Group& G = *space.group;
    const GenSet& S = space.symbols;
    if (spec.base.multiplicity != 1 || (spec.base.start && space.vertex_of(*spec.base.start) != 0))
        throw Error(ErrorKind::BadParameters, "alteration base must be a single pass from the identity coset");
    if (spec.k < 0 || spec.k > spec.m) throw Error(ErrorKind::BadParameters, "alteration needs 0 <= k <= m");
    const auto& c = spec.base.steps;
    auto plan = plan_alteration(space, c, spec.a, spec.b, spec.g, spec.m, spec.k, spec.variant);
    if (!plan) throw Error(ErrorKind::PatternNotFound, "alteration patterns absent at the anchor");

    std::vector<Step> edge = pw(spec.a, -spec.k);
    edge.push_back(spec.variant == AlterationVariant::EdgeB ? spec.b : inv(spec.b));
    append(edge, pw(spec.a, spec.k));
    std::vector<Cut> cuts{{plan->edge, 1, edge}, {plan->path, static_cast<std::size_t>(2 * spec.k + 1), {spec.b}}};
    std::vector<Step> out = multi_splice(space, c, std::move(cuts));

    AlterationResult res;
    res.cycle = as_walk(std::move(out));
    const Element pi0 = voltage(space, spec.base);
    const Element pik = voltage(space, res.cycle);
    res.computed = G.conj(G.mul(G.inv(pi0), pik), spec.g);
    const Element ak = G.pow(step_value(G, S, spec.a), spec.k);
    const Element av = step_value(G, S, spec.a);
    const Element binv = G.inv(step_value(G, S, spec.b));
    const Element x = G.commutator(ak, binv);
    res.predicted = spec.variant == AlterationVariant::EdgeB ? G.mul(x, G.conj(x, av))
                                                             : G.mul(G.commutator(binv, ak), G.conj(x, av));
    if (res.predicted != res.computed)
        throw Error(ErrorKind::FamilyCheckFailed, "alteration voltage differs from its closed form");
    return res;
}

std::vector<Element> alteration_anchors(const QuotientMap& space, const WalkSpec& base, const Step& a, const Step& b,
                                        i64 m, AlterationVariant variant) {
    const Group& G = *space.group;
    const auto& c = base.steps;
    auto seq = vertex_sequence(space.graph, c, 0);
    std::vector<Element> out;
    const Step edge = variant == AlterationVariant::EdgeB ? b : inv(b);
    const Element bv = step_value(G, space.symbols, b);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != edge) continue;
        Element g = space.lift(seq[i]);
        if (variant == AlterationVariant::EdgeBInverse) g = G.mul(g, G.inv(bv));
        if (plan_alteration(space, c, a, b, g, m, 1, variant)) out.push_back(g);
    }
    return out;
}

// ---- KW43 ------------------------------------------------------------------------------------

std::vector<Step> kw43_walk(const Step& a, i64 A, const std::vector<Step>& s, i64 r, i64 k) {
    const std::size_t d = s.size();
    if (d < 3 || d % 2 == 0) throw Error(ErrorKind::HypothesisViolated, "the quotient cycle must have odd length >= 3");
    if (r < 0 || r > A - 2 || k < 0 || k > A - 3) throw Error(ErrorKind::HypothesisViolated, "need 0 <= r <= A-2, 0 <= k <= A-3");
    // s is 0-based here: s[0] = s_1
    std::vector<Step> w = pw(a, k);
    w.push_back(s[0]);
    append(w, pw(a, -(k + 1)));
    for (std::size_t i = 1; i <= (d - 3) / 2; ++i) {
        w.push_back(s[2 * i - 1]);
        append(w, pw(a, A - 2));
        w.push_back(s[2 * i]);
        append(w, pw(a, -(A - 2)));
    }
    w.push_back(s[d - 2]);
    append(w, pw(a, r));
    w.push_back(s[d - 1]);
    append(w, pw(a, -(A - k - 2)));
    w.push_back(s[0]);
    append(w, pw(a, A - k - 3));
    for (std::size_t i = 1; i + 1 < d; ++i) w.push_back(s[i]);
    append(w, pw(a, -(A - r - 2)));
    w.push_back(s[d - 1]);
    return w;
}

Element kw43_voltage_formula(const Group& g, const GenSet& gens, const Element& pi0, const Step& a, const Step& s1,
                             i64 k) {
    const Element av = step_value(g, gens, a);
    const Element x = g.commutator(g.pow(av, -k), g.inv(step_value(g, gens, s1)));
    return g.mul(pi0, g.mul(x, g.conj(x, g.inv(av))));
}

Kw43Result kw43_family(const QuotientMap& space, const Step& a, const std::vector<Step>& s, i64 r,
                       const std::vector<i64>& ks) {
    const Group& G = *space.group;
    const i64 A = static_cast<i64>(a_order_in(space, a));
    // a^r s_1 ... s_d must lie in the base coset
    std::vector<Step> closing = pw(a, r);
    append(closing, s);
    auto seq = vertex_sequence(space.graph, closing, 0);
    if (seq.back() != 0) throw Error(ErrorKind::HypothesisViolated, "a^r s_1...s_d is not in G'");
    Kw43Result res;
    const Element pi0 = voltage(space, as_walk(kw43_walk(a, A, s, r, 0)));
    for (i64 k : ks) {
        WalkSpec ck = as_walk(kw43_walk(a, A, s, r, k));
        Element got = voltage(space, ck);
        Element want = kw43_voltage_formula(G, space.symbols, pi0, a, s[0], k);
        if (got != want) throw Error(ErrorKind::FamilyCheckFailed, "rotated voltage differs from its closed form");
        res.cycles.push_back(std::move(ck));
        res.predicted.push_back(want);
    }
    return res;
}

// ---- two generators of order 3 --------------------------------------------------------------

std::vector<Step> ab3_pair_walk(const Step& a, const Step& b) {
    std::vector<Step> w = pw(a, -2);
    w.push_back(inv(b));
    w.push_back(a);
    w.push_back(inv(b));
    append(w, pw(a, -2));
    append(w, pw(b, 2));
    return w;
}

// a^-2 b^-1 a b^-1 a^-2 b^2 = [a,b]^a [a,b] [a,b]^b (a^-3)^{b^2} when a^3, b^3 are central mod G'
Element ab3_pair_formula(const Group& g, const Element& a, const Element& b) {
    const Element c = g.commutator(a, b);
    const Element a3 = g.pow(a, -3);
    return g.mul(g.mul(g.conj(c, a), c), g.mul(g.conj(c, b), g.conj(a3, g.pow(b, 2))));
}

// ---- TriangleHC ------------------------------------------------------------------------------

std::pair<i64, i64> triangle_kl(i64 pmu, i64 r) {
    if (pmu % 3 == 0) throw Error(ErrorKind::BadParameters, "p must differ from 3");
    const i64 n = 3 * pmu;
    i64 k = -1;
    for (i64 x = 1; x < n; ++x)
        if (x % 3 == 1 && mod(x - r, pmu) == 0) {
            k = x;
            break;
        }
    if (k < 0 || gcd(k, n) != 1) throw Error(ErrorKind::BadParameters, "no admissible k");
    return {k, modinv(k, n)};
}

std::vector<Step> triangle_walk(const Step& a, const Step& b, i64 pmu, i64 k, i64 l) {
    if (l - k - 1 < 0 || 3 * pmu - l - 1 < 0 || k < 1) return {};
    std::vector<Step> w{a};
    append(w, pw(b, -2));
    for (i64 i = 0; i < k - 1; ++i) {
        w.push_back(inv(a));
        append(w, pw(b, 2));
    }
    append(w, pw(a, -2));
    append(w, pw(b, 2));
    for (i64 i = 0; i < l - k - 1; ++i) {
        w.push_back(a);
        append(w, pw(b, -2));
    }
    append(w, pw(a, -2));
    for (i64 i = 0; i < 3 * pmu - l - 1; ++i) {
        append(w, pw(b, -2));
        w.push_back(a);
    }
    return w;
}

TriangleResult triangle_hc(const QuotientMap& space, const Step& a, const Step& b, const TriangleParams& params) {
    TriangleResult res;
    std::tie(res.k, res.l) = triangle_kl(params.pmu, params.r);
    res.c = triangle_walk(a, b, params.pmu, res.k, res.l);
    res.c_tilde = triangle_walk(b, a, params.pmu, res.l, res.k);
    auto ham = [&](const std::vector<Step>& w) {
        return !w.empty() && is_hamiltonian_cycle(space.graph, as_walk(w), 0).hamiltonian;
    };
    res.c_hamiltonian = ham(res.c);
    res.c_tilde_hamiltonian = ham(res.c_tilde);
    return res;
}

} // namespace hamcay
