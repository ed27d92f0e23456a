#include "hamcay/solver.hpp"

#include <algorithm>

#include "detail.hpp"
#include "hamcay/errors.hpp"

namespace hamcay {

using detail::as_walk;
using detail::subset;

// ---- certificates ------------------------------------------------------------------------------

json to_json(const Certificate& c) {
    return json{{"schema_version", c.schema_version},
                {"presentation", to_json(c.presentation)},
                {"gens", to_json(c.gens)},
                {"walk", to_json(c.walk)},
                {"method", c.method},
                {"reductions", c.reductions},
                {"transcript", c.transcript},
                {"verification", to_json(c.verification)}};
}

Certificate certificate_from_json(const json& j) {
    try {
        Certificate c;
        c.schema_version = j.at("schema_version").get<int>();
        if (c.schema_version != kCertificateSchema)
            throw Error(ErrorKind::MalformedInput, "unsupported schema_version " + std::to_string(c.schema_version));
        c.presentation = presentation_from_json(j.at("presentation"));
        c.gens = genset_from_json(j.at("gens"));
        c.walk = walk_from_json(j.at("walk"));
        c.method = j.at("method").get<std::string>();
        for (const auto& r : j.at("reductions")) c.reductions.push_back(r);
        c.transcript = j.at("transcript").get<std::vector<std::string>>();
        c.verification = transcript_from_json(j.at("verification"));
        return c;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedInput, std::string("certificate: ") + e.what());
    }
}

const std::vector<std::string>& method_tags() {
    static const std::vector<std::string> tags = [] {
        std::vector<std::string> t;
        for (int i = 0; i <= static_cast<int>(CaseTag::Partition); ++i) t.push_back(to_string(static_cast<CaseTag>(i)));
        for (const char* x : {"fgl-direct", "same-coset", "prime-power-pair", "brute-force", "external-fallback"})
            t.emplace_back(x);
        return t;
    }();
    return tags;
}

bool is_constructive(const std::string& method) {
    const auto& t = method_tags();
    return std::find(t.begin(), t.end(), method) != t.end() && method != "brute-force" &&
           method != "external-fallback";
}

// ---- normalization -----------------------------------------------------------------------------

namespace {

GenSet without(const GenSet& s, const std::string& name) {
    GenSet out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.names[i] != name) {
            out.names.push_back(s.names[i]);
            out.elems.push_back(s.elems[i]);
        }
    return out;
}

std::vector<Step> signed_symbols(const GenSet& s) {
    std::vector<Step> out;
    for (const auto& n : s.names) {
        out.push_back({n, 1});
        out.push_back({n, -1});
    }
    return out;
}

std::vector<Step> expand(const WalkSpec& w) {
    std::vector<Step> out;
    out.reserve(w.expanded_length());
    for (i64 k = 0; k < w.multiplicity; ++k) out.insert(out.end(), w.steps.begin(), w.steps.end());
    return out;
}

} // namespace

Normalization normalize(const Group& g, const GenSet& s0) {
    Normalization n;
    n.gens = s0;
    for (std::size_t i = 0; i < s0.size(); ++i) {
        const std::string& name = s0.names[i];
        GenSet rest = without(n.gens, name);
        if (!rest.elems.empty() && generates(g, rest.elems)) {
            n.gens = rest;
            n.dropped.push_back(name);
            n.reductions.push_back({{"kind", "drop-redundant"}, {"symbol", name}});
        }
    }
    const GenSet& s = n.gens;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (derived_log(g, s.elems[i]) >= 0) n.in_derived.push_back(s.names[i]);
    const auto steps = signed_symbols(s);
    for (std::size_t i = 0; i < steps.size() && !n.same_coset; ++i)
        for (std::size_t j = 0; j < steps.size() && !n.same_coset; ++j) {
            if (steps[i].sym == steps[j].sym) continue;
            const Element x = step_value(g, s, steps[i]), y = step_value(g, s, steps[j]);
            if (derived_log(g, g.mul(g.inv(x), y)) >= 0) n.same_coset = std::pair{steps[i], steps[j]};
        }
    const Element d = derived_generator(g);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (derived_order(g) > 1 && subgroup_closure(g, {s.elems[i]}).contains(d)) n.contains_derived.push_back(s.names[i]);
    return n;
}

// ---- dispatch ----------------------------------------------------------------------------------

namespace {

constexpr CaseTag kPriority[] = {CaseTag::Bina,      CaseTag::Bnotina, CaseTag::Ab3,
                                 CaseTag::Bandcina,  CaseTag::Chain,   CaseTag::Acent,
                                 CaseTag::Bcnotina,  CaseTag::Remainder, CaseTag::Partition};

bool two_witnesses(CaseTag t) { return t == CaseTag::Bina || t == CaseTag::Bnotina || t == CaseTag::Ab3; }

} // namespace

std::vector<CaseInstance> dispatch_candidates(const Group& g, const GenSet& s, const std::vector<CaseTag>& allowed) {
    std::vector<CaseInstance> out;
    const auto steps = signed_symbols(s);
    for (CaseTag tag : kPriority) {
        if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), tag) == allowed.end()) continue;
        if (tag == CaseTag::Partition) {
            CaseInstance in;
            in.tag = tag;
            in.a = steps[0];
            if (case_hypotheses(g, s, in)) out.push_back(in);
            continue;
        }
        for (const auto& a : steps)
            for (const auto& b : steps) {
                if (a.sym == b.sym) continue;
                if (two_witnesses(tag)) {
                    CaseInstance in;
                    in.tag = tag;
                    in.a = a;
                    in.b = b;
                    if (case_hypotheses(g, s, in)) out.push_back(in);
                    continue;
                }
                for (const auto& c : steps) {
                    if (c.sym == a.sym || c.sym == b.sym) continue;
                    CaseInstance in;
                    in.tag = tag;
                    in.a = a;
                    in.b = b;
                    in.c = c;
                    in.has_c = true;
                    if (case_hypotheses(g, s, in)) out.push_back(in);
                }
            }
    }
    return out;
}

CaseInstance dispatch(const Group& g, const GenSet& s, const std::vector<CaseTag>& allowed) {
    // stops at the first hit instead of collecting every candidate
    for (CaseTag tag : kPriority) {
        if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), tag) == allowed.end()) continue;
        auto c = dispatch_candidates(g, s, {tag});
        if (!c.empty()) return c.front();
    }
    throw Error(ErrorKind::NoCaseApplies, "no case of the exhaustive list applies");
}

// ---- solving -----------------------------------------------------------------------------------

namespace {

std::string describe(const CaseInstance& in) {
    auto show = [](const Step& s) { return s.sign > 0 ? s.sym : s.sym + "^-1"; };
    std::string w = "a = " + show(in.a);
    if (in.tag != CaseTag::Partition) w += ", b = " + show(in.b);
    if (in.has_c) w += ", c = " + show(in.c);
    return to_string(in.tag) + " (" + w + ")";
}

struct Solver {
    SolveOptions opts;

    struct Result {
        WalkSpec walk;
        std::string method;
        std::vector<Reduction> reductions;
        std::vector<std::string> transcript;
    };

    std::optional<WalkSpec> search(const Group& g, const GenSet& s, bool directed, std::vector<std::string>& log) {
        SearchOptions o;
        o.budget = opts.budget;
        o.directed = directed;
        auto r = brute_force_hamiltonian(g, s, o);
        if (auto* w = std::get_if<WalkSpec>(&r)) return *w;
        if (std::holds_alternative<Exhausted>(r)) log.push_back("search space exhausted without a cycle");
        else
            log.push_back("search budget exhausted");
        return std::nullopt;
    }

    Result fallback(const Group& g, const GenSet& s, const std::string& method, Result r) {
        auto w = search(g, s, opts.directed, r.transcript);
        if (!w) throw Error(ErrorKind::BudgetExceeded, "fallback search found no hamiltonian cycle");
        r.walk = *w;
        r.method = method;
        return r;
    }

    // Hamiltonian cycle of Cay(G/N; S') with N = <s> normal, lifted by sweeping the cosets of <s>.
    std::optional<WalkSpec> sweep_from_quotient(std::shared_ptr<const Group> g, const GenSet& s, const std::string& sym,
                                                std::vector<std::string>& log) {
        const GenSet rest = without(s, sym);
        auto q = make_quotient(g, rest, {s.elems[static_cast<std::size_t>(s.find(sym))]});
        std::optional<WalkSpec> got;
        SearchOptions o;
        o.budget = opts.budget;
        std::size_t tried = 0;
        enumerate_hamiltonian_cycles(q.graph, o, [&](const std::vector<Step>& c) {
            ++tried;
            got = coset_sweep_lift(*g, s, sym, c);
            return got.has_value();
        });
        log.push_back("coset sweep along " + sym + " after " + std::to_string(tried) + " quotient cycle(s)");
        return got;
    }

    Result run(std::shared_ptr<const Group> gp, const GenSet& s_in) {
        const Group& g = *gp;
        Result r;
        if (opts.directed) return fallback(g, s_in, "brute-force", r);
        if (is_abelian(g)) {
            r.walk = as_walk(abelian_cycle(g, s_in));
            r.method = "fgl-direct";
            r.reductions.push_back({{"kind", "abelian"}});
            r.transcript.push_back("abelian: row-by-row grid");
            return r;
        }
        Normalization n = normalize(g, s_in);
        r.reductions = n.reductions;
        const GenSet& s = n.gens;

        if (!n.in_derived.empty()) {
            const std::string& sym = n.in_derived.front();
            const Element x = s.elems[static_cast<std::size_t>(s.find(sym))];
            const i64 new_m = gcd(x.z, g.gamma_order());
            auto qg = std::make_shared<const Group>(reduce_gamma(g.presentation(), new_m));
            const GenSet qs = project_gamma(without(s, sym), new_m);
            r.transcript.push_back(sym + " lies in G'; solving G/<" + sym + ">");
            Result inner = run(qg, qs);
            for (auto& t : inner.transcript) r.transcript.push_back("  " + t);
            r.reductions.push_back(
                {{"kind", "quotient-by-symbol"}, {"symbol", sym}, {"order", qg->order()}, {"inner", inner.reductions}});
            if (auto w = coset_sweep_lift(g, s, sym, expand(inner.walk))) {
                r.walk = *w;
                r.method = inner.method;
                r.transcript.push_back("lifted along <" + sym + "> by coset sweep");
                return r;
            }
            r.transcript.push_back("coset sweep of the quotient cycle failed; trying other quotient cycles");
            if (auto w = sweep_from_quotient(gp, s, sym, r.transcript)) {
                r.walk = *w;
                r.method = inner.method;
                return r;
            }
            return fallback(g, s, "brute-force", r);
        }

        if (n.same_coset) {
            const auto [a, b] = *n.same_coset;
            r.reductions.push_back({{"kind", "same-coset"},
                                    {"a", {a.sym, a.sign}},
                                    {"b", {b.sym, b.sign}}});
            try {
                auto res = a_gprime_eq_b_gprime(gp, s, a, b);
                r.walk = res.walk;
                r.method = "same-coset";
                r.transcript.push_back("aG' = bG' with a = " + a.sym + ", b = " + b.sym + ": " + res.subcase);
                for (auto& t : res.transcript) r.transcript.push_back(t);
                return r;
            } catch (const Error& e) {
                r.transcript.push_back(std::string("same-coset construction failed: ") + e.what());
            }
        }

        if (!n.contains_derived.empty()) {
            const std::string& sym = n.contains_derived.front();
            r.reductions.push_back({{"kind", "derived-in-symbol"}, {"symbol", sym}});
            r.transcript.push_back("G' <= <" + sym + ">: cycle of the abelian quotient, lifted by coset sweep");
            if (auto w = sweep_from_quotient(gp, s, sym, r.transcript)) {
                r.walk = *w;
                r.method = "fgl-direct";
                return r;
            }
        }

        const auto primes = factorize(derived_order(g));
        // a pair of cycles of G/G' whose voltages differ by a generator of G'
        auto prime_power_pair = [&]() -> bool {
            if (primes.size() != 1) return false;
            try {
                auto pr = g_prime_p_pair(gp, s, opts.budget);
                for (auto& t : pr.transcript) r.transcript.push_back(t);
                if (pr.searched) r.transcript.push_back("cycle pair found by bounded search");
                r.walk = marusic_apply(gp, s, s.names, pr.family).walk;
                r.method = "prime-power-pair";
                return true;
            } catch (const Error& e) {
                r.transcript.push_back(std::string("prime-power pair: ") + e.what());
                return false;
            }
        };
        if (is_nilpotent(g) || primes.size() > 2 || g.order() % 2 == 0) {
            if (g.order() % 2 == 1 && prime_power_pair()) return r;
            return fallback(g, s, "external-fallback", r);
        }

        auto candidates = dispatch_candidates(g, s, opts.methods);
        if (candidates.empty()) {
            r.transcript.push_back("no case applies");
            if (!opts.methods.empty()) throw Error(ErrorKind::NoCaseApplies, "no allowed case applies");
        }
        // a failed witness falls through to the next candidate in priority order
        for (const auto& in : candidates) {
            try {
                auto fam = build_case_family(gp, s, in);
                r.transcript.push_back("case " + describe(in) + (fam.subtag.empty() ? "" : ", " + fam.subtag));
                for (auto& t : fam.transcript) r.transcript.push_back(t);
                if (fam.direct) {
                    r.walk = *fam.direct;
                } else {
                    auto m = marusic_apply(gp, s, fam.s0, fam.family);
                    r.walk = m.walk;
                    r.transcript.push_back("family member " + std::to_string(m.selected) + " selected");
                }
                r.method = to_string(in.tag);
                return r;
            } catch (const Error& e) {
                r.transcript.push_back("case " + describe(in) + " failed: " + e.what());
            }
        }
        if (!opts.methods.empty()) throw Error(ErrorKind::NoCycleWorks, "every allowed case failed");
        if (prime_power_pair()) return r;
        return fallback(g, s, "external-fallback", r);
    }
};

} // namespace

Certificate solve(std::shared_ptr<const Group> g, const GenSet& s, const SolveOptions& opts) {
    validate_genset(*g, s);
    if (!generates(*g, s.elems)) throw Error(ErrorKind::MalformedInput, "S does not generate G");
    Solver solver{opts};
    auto r = solver.run(g, s);
    Certificate c;
    c.presentation = g->presentation();
    c.gens = s;
    c.walk = r.walk;
    c.method = r.method;
    c.reductions = std::move(r.reductions);
    c.transcript = std::move(r.transcript);
    c.verification = is_hamiltonian_cycle(*g, s, c.walk);
    if (!c.verification.hamiltonian) throw Error(ErrorKind::AssemblyFailed, "produced walk is not hamiltonian");
    return c;
}

Certificate solve(const PcPresentation& p, const GenSet& s, const SolveOptions& opts) {
    return solve(std::make_shared<const Group>(make_group(p)), s, opts);
}

// ---- verification ------------------------------------------------------------------------------

namespace {

// Re-checks every claim of a reduction chain; quotient steps recurse into the rebuilt quotient.
std::optional<std::string> check_chain(const Group& g, const GenSet& s, const std::vector<Reduction>& chain) {
    auto symbol = [&](const json& red) -> std::optional<Element> {
        const auto i = s.find(red.at("symbol").get<std::string>());
        if (i < 0) return std::nullopt;
        return s.elems[static_cast<std::size_t>(i)];
    };
    for (const auto& red : chain) {
        const std::string kind = red.at("kind").get<std::string>();
        if (kind == "abelian") {
            if (!is_abelian(g)) return "abelian claim is false";
        } else if (kind == "drop-redundant") {
            if (!symbol(red)) return "dropped symbol is unknown";
        } else if (kind == "quotient-by-symbol") {
            auto x = symbol(red);
            if (!x || derived_log(g, *x) < 0) return "quotient symbol is not in G'";
            const i64 new_m = gcd(x->z, g.gamma_order());
            const Group q = make_group(reduce_gamma(g.presentation(), new_m));
            if (static_cast<std::size_t>(red.at("order").get<i64>()) != q.order()) return "quotient order differs";
            std::vector<Reduction> inner;
            for (const auto& r : red.at("inner")) inner.push_back(r);
            if (auto why = check_chain(q, project_gamma(without(s, red.at("symbol").get<std::string>()), new_m), inner))
                return "in G/<" + red.at("symbol").get<std::string>() + ">: " + *why;
        } else if (kind == "same-coset") {
            auto st = [&](const json& j) { return Step{j.at(0).get<std::string>(), j.at(1).get<int>()}; };
            const Step a = st(red.at("a")), b = st(red.at("b"));
            if (s.find(a.sym) < 0 || s.find(b.sym) < 0 || a.sym == b.sym) return "same-coset symbols are invalid";
            const Element x = step_value(g, s, a), y = step_value(g, s, b);
            if (derived_log(g, g.mul(g.inv(x), y)) < 0) return "same-coset claim is false";
        } else if (kind == "derived-in-symbol") {
            auto x = symbol(red);
            if (!x || !subgroup_closure(g, {*x}).contains(derived_generator(g)))
                return "G' is not inside the claimed cyclic subgroup";
        } else {
            return "unknown reduction kind " + kind;
        }
    }
    return std::nullopt;
}

} // namespace

VerifyReport verify(const Certificate& c) {
    VerifyReport rep;
    auto fail = [&](std::string why) {
        rep.ok = false;
        rep.reason = std::move(why);
        return rep;
    };
    if (c.schema_version != kCertificateSchema) return fail("unsupported schema version");
    const auto& tags = method_tags();
    if (std::find(tags.begin(), tags.end(), c.method) == tags.end()) return fail("unknown method tag " + c.method);
    try {
        const Group g = make_group(c.presentation);
        validate_genset(g, c.gens);
        if (!generates(g, c.gens.elems)) return fail("generators do not generate the group");
        rep.transcript = is_hamiltonian_cycle(g, c.gens, c.walk);
        rep.first_divergence = rep.transcript.first_repeat;
        if (!rep.transcript.hamiltonian) {
            std::string why = "walk is not a hamiltonian cycle";
            if (rep.first_divergence) why += " (vertex revisited at step " + std::to_string(*rep.first_divergence) + ")";
            else if (!rep.transcript.closed)
                why += " (does not close)";
            else
                why += " (visits " + std::to_string(rep.transcript.visited) + " of " + std::to_string(g.order()) + ")";
            return fail(why);
        }
        if (!(rep.transcript == c.verification)) return fail("recorded verification transcript differs");
        if (auto why = check_chain(g, c.gens, c.reductions)) return fail(*why);
    } catch (const Error& e) {
        return fail(e.what());
    } catch (const json::exception& e) {
        return fail(std::string("malformed reduction: ") + e.what());
    }
    rep.ok = true;
    return rep;
}

} // namespace hamcay
