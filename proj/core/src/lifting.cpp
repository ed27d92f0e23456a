#include "hamcay/lifting.hpp"

#include <algorithm>
#include <map>

#include "hamcay/errors.hpp"

namespace hamcay {

namespace {

bool is_normal(const Group& g, const Subgroup& n) {
    std::vector<Element> conj_by;
    for (std::size_t i = 0; i < g.rank(); ++i) conj_by.push_back(g.gen(i));
    conj_by.push_back(g.gamma());
    for (const auto& x : n.gens)
        for (const auto& y : conj_by)
            if (!n.contains(g.conj(x, y))) return false;
    return true;
}

GenSet subset(const GenSet& s, const std::vector<std::string>& names, bool keep) {
    GenSet out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        bool listed = std::find(names.begin(), names.end(), s.names[i]) != names.end();
        if (listed == keep) {
            out.names.push_back(s.names[i]);
            out.elems.push_back(s.elems[i]);
        }
    }
    return out;
}

Element step_elem(const Group& g, const GenSet& s, const Step& st) {
    auto k = s.find(st.sym);
    if (k < 0) throw Error(ErrorKind::UnknownSymbol, st.sym);
    const Element& y = s.elems[static_cast<std::size_t>(k)];
    return st.sign > 0 ? y : g.inv(y);
}

std::vector<Step> expanded(const WalkSpec& w) {
    std::vector<Step> out;
    for (i64 r = 0; r < w.multiplicity; ++r) out.insert(out.end(), w.steps.begin(), w.steps.end());
    return out;
}

std::size_t start_vertex(const QuotientMap& q, const WalkSpec& c) { return c.start ? q.vertex_of(*c.start) : 0; }

// exponent w with x = d^w for the generator d of G', or -1 outside G'
i64 derived_exponent(const Group& g, const Element& x) {
    if (!g.in_gamma(x)) return -1;
    const i64 n = derived_order(g);
    const i64 step = g.gamma_order() / n;
    if (x.z % step != 0) return -1;
    return x.z / step;
}

} // namespace

std::size_t QuotientMap::vertex_of(const Element& x) const {
    auto v = coset_of[group->index(x)];
    if (v == npos) throw Error(ErrorKind::NotApplicable, "element outside the quotient's vertex set");
    return v;
}

PcPresentation reduce_gamma(const PcPresentation& p, i64 new_m) {
    if (new_m <= 0 || p.m % new_m != 0) throw Error(ErrorKind::BadParameters, "new gamma order must divide m");
    PcPresentation out = p;
    out.m = new_m;
    for (auto& t : out.t) t = mod(t, new_m);
    for (auto& r : out.r) r = new_m == 1 ? 0 : mod(r, new_m);
    for (auto& row : out.c)
        for (auto& c : row) c = mod(c, new_m);
    return out;
}

Element project_gamma(const Element& x, i64 new_m) { return Element{x.q, mod(x.z, new_m)}; }

GenSet project_gamma(const GenSet& s, i64 new_m) {
    GenSet out = s;
    for (auto& e : out.elems) e = project_gamma(e, new_m);
    return out;
}

QuotientMap make_quotient(std::shared_ptr<const Group> gp, const GenSet& s, const std::vector<Element>& n_gens) {
    const Group& g = *gp;
    QuotientMap q;
    q.group = gp;
    q.symbols = s;
    q.normal = subgroup_closure(g, n_gens);
    if (!is_normal(g, q.normal)) throw Error(ErrorKind::NotApplicable, "subgroup is not normal");
    for (const auto& x : q.normal.gens)
        if (g.element_order(x) == static_cast<i64>(q.normal.size())) {
            q.generator = x;
            break;
        }
    if (!q.generator)
        for (const auto& x : q.normal.members)
            if (g.element_order(x) == static_cast<i64>(q.normal.size())) {
                q.generator = x;
                break;
            }

    // label every coset xN of G, numbering by least member
    const std::size_t n = g.order();
    std::vector<std::uint32_t> label(n, QuotientMap::npos);
    std::vector<std::size_t> first;
    std::vector<std::size_t> ngen_idx;
    for (const auto& x : q.normal.gens) ngen_idx.push_back(g.index(x));
    if (ngen_idx.empty()) ngen_idx.push_back(g.index(g.identity()));
    std::vector<std::size_t> queue;
    for (std::size_t x = 0; x < n; ++x) {
        if (label[x] != QuotientMap::npos) continue;
        const auto id = static_cast<std::uint32_t>(first.size());
        first.push_back(x);
        label[x] = id;
        queue.assign(1, x);
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (std::size_t y : ngen_idx) {
                std::size_t z = g.mul_index(queue[h], y);
                if (label[z] == QuotientMap::npos) {
                    label[z] = id;
                    queue.push_back(z);
                }
            }
    }

    // cosets reachable from N through the symbols
    std::vector<std::size_t> sym_idx, sym_inv;
    for (const auto& e : s.elems) {
        sym_idx.push_back(g.index(e));
        sym_inv.push_back(g.index(g.inv(e)));
    }
    std::vector<char> seen(first.size(), 0);
    std::vector<std::size_t> reach{label[g.index(g.identity())]};
    seen[reach[0]] = 1;
    for (std::size_t h = 0; h < reach.size(); ++h)
        for (std::size_t k = 0; k < s.size(); ++k)
            for (std::size_t y : {sym_idx[k], sym_inv[k]}) {
                std::size_t c = label[g.mul_index(first[reach[h]], y)];
                if (!seen[c]) {
                    seen[c] = 1;
                    reach.push_back(c);
                }
            }
    std::sort(reach.begin(), reach.end());
    std::vector<std::uint32_t> renum(first.size(), QuotientMap::npos);
    for (std::size_t v = 0; v < reach.size(); ++v) {
        renum[reach[v]] = static_cast<std::uint32_t>(v);
        q.reps.push_back(first[reach[v]]);
    }
    q.coset_of.resize(n);
    for (std::size_t x = 0; x < n; ++x) q.coset_of[x] = renum[label[x]];

    std::vector<std::vector<std::uint32_t>> fwd(s.size(), std::vector<std::uint32_t>(reach.size()));
    auto bwd = fwd;
    for (std::size_t k = 0; k < s.size(); ++k)
        for (std::size_t v = 0; v < reach.size(); ++v) {
            fwd[k][v] = q.coset_of[g.mul_index(q.reps[v], sym_idx[k])];
            bwd[k][v] = q.coset_of[g.mul_index(q.reps[v], sym_inv[k])];
        }
    q.graph = CayleyGraph(s.names, std::move(fwd), std::move(bwd), 0, reach.size());

    bool in_gamma = std::all_of(q.normal.gens.begin(), q.normal.gens.end(), [&](const Element& x) { return g.in_gamma(x); });
    if (in_gamma && reach.size() * q.normal.size() == n)
        q.quotient = reduce_gamma(g.presentation(), g.gamma_order() / static_cast<i64>(q.normal.size()));
    return q;
}

QuotientMap make_quotient(const Group& g, const GenSet& s, const std::vector<Element>& n_gens) {
    return make_quotient(std::make_shared<const Group>(g), s, n_gens);
}

QuotientMap derived_quotient(std::shared_ptr<const Group> g, const GenSet& s) {
    Element d = derived_generator(*g);
    return make_quotient(g, s, {d});
}

Element voltage(const QuotientMap& q, const WalkSpec& c) {
    auto tr = is_hamiltonian_cycle(q.graph, c, start_vertex(q, c));
    if (!tr.hamiltonian) throw Error(ErrorKind::NotAHamiltonianCycleInQuotient, to_string(c));
    return q.group->pow(walk_product(*q.group, q.symbols, c.steps), c.multiplicity);
}

Element voltage_conjugate_check(const QuotientMap& q, const WalkSpec& c, const Element& g) {
    voltage(q, c);
    auto steps = expanded(c);
    auto seq = vertex_sequence(q.graph, steps, start_vertex(q, c));
    const std::size_t target = q.vertex_of(g);
    auto it = std::find(seq.begin(), seq.end(), target);
    if (it == seq.end()) throw Error(ErrorKind::NotAHamiltonianCycleInQuotient, "coset not on cycle");
    std::size_t j = static_cast<std::size_t>(it - seq.begin()) % steps.size();
    std::rotate(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(j), steps.end());
    return walk_product(*q.group, q.symbols, steps);
}

bool generates_normal(const QuotientMap& q, const Element& x) {
    return q.normal.contains(x) && q.group->element_order(x) == static_cast<i64>(q.normal.size());
}

WalkSpec fgl_lift(const QuotientMap& q, const WalkSpec& c) {
    Element v = voltage(q, c);
    if (!generates_normal(q, v)) throw Error(ErrorKind::VoltageDoesNotGenerate, "voltage does not generate N");
    WalkSpec out;
    out.start = c.start;
    out.steps = expanded(c);
    out.multiplicity = static_cast<i64>(q.normal.size());
    auto tr = is_hamiltonian_cycle(*q.group, q.symbols, out);
    if (!tr.hamiltonian) throw Error(ErrorKind::AssemblyFailed, "lift is not hamiltonian");
    return out;
}

QuotientMap free_lunch_reduce(const QuotientMap& q) {
    const Group& g = *q.group;
    if (!q.generator || !g.in_gamma(*q.generator))
        throw Error(ErrorKind::NotApplicable, "reduction needs a cyclic N inside <gamma>");
    const i64 n = static_cast<i64>(q.normal.size());
    const i64 phi = n / radical(n);
    if (phi == 1) return q;
    const i64 new_m = g.gamma_order() / phi;
    auto g2 = std::make_shared<const Group>(make_group(reduce_gamma(g.presentation(), new_m)));
    return make_quotient(g2, project_gamma(q.symbols, new_m), {project_gamma(*q.generator, new_m)});
}

std::vector<OrientedEdge> oriented_edges(const QuotientMap& q, const WalkSpec& c) {
    auto steps = expanded(c);
    auto seq = vertex_sequence(q.graph, steps, start_vertex(q, c));
    std::vector<OrientedEdge> out;
    for (std::size_t i = 0; i < steps.size(); ++i) out.push_back({seq[i], steps[i]});
    return out;
}

CycleFamily make_family(std::shared_ptr<const QuotientMap> space, std::vector<WalkSpec> cycles) {
    CycleFamily f;
    f.space = space;
    f.target_order = derived_order(*space->group);
    if (cycles.empty()) throw Error(ErrorKind::WrongFamilySize, "empty family");
    for (const auto& c : cycles) {
        if (c.start != cycles[0].start) throw Error(ErrorKind::FamilyCheckFailed, "family cycles must share a base");
        f.voltages.push_back(voltage(*space, c));
    }
    auto edges0 = oriented_edges(*space, cycles[0]);
    std::vector<std::vector<OrientedEdge>> rest;
    for (std::size_t i = 1; i < cycles.size(); ++i) rest.push_back(oriented_edges(*space, cycles[i]));
    for (const auto& e : edges0) {
        bool all = std::all_of(rest.begin(), rest.end(),
                               [&](const auto& es) { return std::find(es.begin(), es.end(), e) != es.end(); });
        if (all) {
            f.common = e;
            break;
        }
    }
    f.cycles = std::move(cycles);
    return f;
}

bool generates_derived(const Group& g, const Element& x) {
    i64 w = derived_exponent(g, x);
    if (w < 0) return false;
    return gcd(w, derived_order(g)) == 1;
}

std::size_t marusic_select(const CycleFamily& f, const Element& gamma) {
    const Group& g = *f.space->group;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (generates_derived(g, g.mul(gamma, f.voltages[i]))) return i;
    throw Error(ErrorKind::NoCycleWorks, "no family member works for this gamma");
}

bool marusic34_check(const CycleFamily& f, MarusicVariant variant) {
    const Group& g = *f.space->group;
    const std::size_t want = variant == MarusicVariant::Three ? 3 : 4;
    if (f.size() != want) throw Error(ErrorKind::WrongFamilySize, "family has " + std::to_string(f.size()) + " cycles");
    const i64 n = derived_order(g);
    if (n == 1) return true;
    auto primes = factorize(n);
    auto diff = [&](std::size_t i, std::size_t j) {
        return derived_exponent(g, g.mul(g.inv(f.voltages[i]), f.voltages[j]));
    };
    auto nz = [&](i64 w, i64 p) { return w >= 0 && w % p != 0; };
    auto gens = [&](i64 w) {
        if (w < 0) return false;
        for (auto [p, e] : primes)
            if (w % p == 0) return false;
        return true;
    };
    if (variant == MarusicVariant::Three) return gens(diff(0, 1)) && gens(diff(0, 2)) && gens(diff(1, 2));
    const i64 d12 = diff(0, 1), d13 = diff(0, 2), d24 = diff(1, 3);
    if (primes.size() == 1) return nz(d12, primes[0].first);
    for (int swap = 0; swap < 2; ++swap) {
        i64 p = primes[swap].first, q = primes[1 - swap].first;
        if (nz(d12, p) && !nz(d13, p) && nz(d13, q) && !nz(d24, p) && nz(d24, q)) return true;
    }
    return false;
}

bool marusic_condition(const CycleFamily& f) {
    const Group& g = *f.space->group;
    const i64 n = derived_order(g);
    const Element d = derived_generator(g);
    for (i64 w = 0; w < radical(n); ++w) {
        try {
            marusic_select(f, g.pow(d, w));
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

MarusicResult marusic_apply(std::shared_ptr<const Group> gp, const GenSet& s, const std::vector<std::string>& s0,
                            const CycleFamily& f) {
    const Group& g = *gp;
    if (!f.common) throw Error(ErrorKind::AssemblyFailed, "family has no common oriented edge");
    const QuotientMap& space = *f.space;
    const GenSet rest = subset(s, s0, false);

    // hamiltonian path t_1..t_R through the cosets of <S_0, G'>
    std::vector<Element> kgens = subset(s, s0, true).elems;
    kgens.push_back(derived_generator(g));
    auto cosets = make_quotient(gp, rest, kgens);
    const std::size_t M = cosets.quotient_order();
    std::vector<Step> t;
    if (M > 1) {
        auto found = brute_force_hamiltonian(cosets.graph);
        auto* w = std::get_if<WalkSpec>(&found);
        if (!w) throw Error(ErrorKind::AssemblyFailed, "no hamiltonian cycle through the cosets");
        t.assign(w->steps.begin(), w->steps.end() - 1);
    }
    const std::size_t R = t.size();

    // rotate every member to begin just after the common edge
    const OrientedEdge common = *f.common;
    std::vector<std::vector<Step>> paths;
    Element prefix0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto steps = expanded(f.cycles[i]);
        auto seq = vertex_sequence(space.graph, steps, start_vertex(space, f.cycles[i]));
        std::size_t j = 0;
        while (j < steps.size() && !(seq[j] == common.vertex && steps[j] == common.step)) ++j;
        if (j == steps.size()) throw Error(ErrorKind::AssemblyFailed, "common edge missing from a member");
        if (i == 0) prefix0 = walk_product(g, space.symbols, std::vector<Step>(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(j + 1)));
        std::rotate(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(j + 1), steps.end());
        steps.pop_back();
        paths.push_back(std::move(steps));
    }
    const auto& P = paths[0];
    const std::size_t n = P.size() + 1;
    if (R > 0 && n < 2) throw Error(ErrorKind::AssemblyFailed, "subgroup quotient too small for the grid");

    auto inv = [](Step st) {
        st.sign = -st.sign;
        return st;
    };
    std::vector<Step> tail(t.begin(), t.end());
    tail.push_back(common.step);
    if (R > 0) {
        for (std::size_t row = R; row >= 1; --row) {
            bool rightward = (R - row) % 2 == 0 && row >= 2;
            if (rightward)
                tail.insert(tail.end(), P.begin(), P.begin() + static_cast<std::ptrdiff_t>(n - 2));
            else
                for (std::size_t c = n - 2; c-- > 0;) tail.push_back(inv(P[c]));
            tail.push_back(inv(t[row - 1]));
        }
    }

    GenSet full = s;
    const Element delta = g.mul(g.inv(step_elem(g, full, common.step)), walk_product(g, full, tail));
    MarusicResult res;
    res.gamma = g.conj(delta, g.inv(prefix0));
    try {
        res.selected = marusic_select(f, res.gamma);
    } catch (const Error& e) {
        throw Error(ErrorKind::AssemblyFailed, e.what());
    }

    std::vector<Step> cyc = paths[res.selected];
    cyc.insert(cyc.end(), tail.begin(), tail.end());
    auto dq = derived_quotient(gp, s);
    // base the walk at the identity coset
    Element x = space.lift(space.graph.step(common.vertex, common.step));
    auto seq = vertex_sequence(dq.graph, cyc, dq.vertex_of(x));
    auto it = std::find(seq.begin(), seq.end(), std::size_t{0});
    if (it == seq.end()) throw Error(ErrorKind::AssemblyFailed, "assembled walk misses the identity coset");
    std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>((it - seq.begin()) % static_cast<std::ptrdiff_t>(cyc.size())), cyc.end());
    WalkSpec w;
    w.steps = std::move(cyc);
    try {
        res.walk = fgl_lift(dq, w);
    } catch (const Error& e) {
        throw Error(ErrorKind::AssemblyFailed, std::string("assembled cycle: ") + e.what());
    }
    return res;
}

std::optional<WalkSpec> coset_sweep_lift(const Group& g, const GenSet& s, const std::string& sym,
                                         const std::vector<Step>& quotient_cycle) {
    auto k_idx = s.find(sym);
    if (k_idx < 0) throw Error(ErrorKind::UnknownSymbol, sym);
    const Element sg = s.elems[static_cast<std::size_t>(k_idx)];
    const i64 k = g.element_order(sg);
    std::map<Element, i64> power;
    {
        Element x = g.identity();
        for (i64 i = 0; i < k; ++i, x = g.mul(x, sg)) power.emplace(x, i);
    }
    const std::size_t M = quotient_cycle.size();
    std::vector<i64> rho(M);
    Element prefix = g.identity();
    for (std::size_t j = 0; j < M; ++j) {
        auto it = power.find(g.conj(sg, g.inv(prefix)));
        if (it == power.end()) throw Error(ErrorKind::NotApplicable, "<s> is not normal");
        rho[j] = it->second;
        prefix = g.mul(prefix, step_elem(g, s, quotient_cycle[j]));
    }
    auto vit = power.find(prefix);
    if (vit == power.end()) return std::nullopt;
    const i64 v = vit->second;

    // reach[j][r]: some sign choice for the first j blocks sums to r
    std::vector<std::vector<char>> reach(M + 1, std::vector<char>(static_cast<std::size_t>(k), 0));
    reach[0][0] = 1;
    for (std::size_t j = 0; j < M; ++j)
        for (i64 r = 0; r < k; ++r)
            if (reach[j][static_cast<std::size_t>(r)]) {
                reach[j + 1][static_cast<std::size_t>(mod(r + rho[j], k))] = 1;
                reach[j + 1][static_cast<std::size_t>(mod(r - rho[j], k))] = 1;
            }
    if (!reach[M][static_cast<std::size_t>(v)]) return std::nullopt;
    std::vector<int> eps(M);
    i64 r = v;
    for (std::size_t j = M; j-- > 0;) {
        i64 back = mod(r - rho[j], k);
        if (reach[j][static_cast<std::size_t>(back)]) {
            eps[j] = 1;
            r = back;
        } else {
            eps[j] = -1;
            r = mod(r + rho[j], k);
        }
    }
    WalkSpec w;
    for (std::size_t j = 0; j < M; ++j) {
        for (i64 i = 0; i + 1 < k; ++i) w.steps.push_back({sym, eps[j]});
        w.steps.push_back(quotient_cycle[j]);
    }
    if (!is_hamiltonian_cycle(g, s, w).hamiltonian) throw Error(ErrorKind::AssemblyFailed, "coset sweep failed to verify");
    return w;
}

} // namespace hamcay
