#include "hamcay/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hamcay/errors.hpp"

namespace hamcay {

std::vector<i64> roots_of_unity(i64 m, i64 e) {
    std::vector<i64> out;
    if (m == 1) return {0};
    for (i64 r = 1; r < m; ++r)
        if (std::gcd(r, m) == 1 && powmod(r, e, m) == 1) out.push_back(r);
    return out;
}

namespace {

std::vector<i64> odd_primes(i64 lo, i64 hi) {
    std::vector<i64> out;
    for (i64 p = std::max<i64>(lo, 3); p <= hi; ++p)
        if (factorize(p).size() == 1 && factorize(p)[0].second == 1) out.push_back(p);
    return out;
}

std::vector<i64> gamma_orders(const CorpusSpec& spec) {
    std::set<i64> ms{1};
    auto primes = odd_primes(spec.min_prime, spec.max_prime);
    auto ipow = [](i64 b, int e) {
        i64 r = 1;
        while (e-- > 0) r *= b;
        return r;
    };
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (int mu = 1; mu <= std::max(spec.max_mu, spec.max_nu); ++mu) ms.insert(ipow(primes[i], mu));
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            for (int mu = 1; mu <= spec.max_mu; ++mu)
                for (int nu = 1; nu <= spec.max_nu; ++nu) {
                    ms.insert(ipow(primes[i], mu) * ipow(primes[j], nu));
                    ms.insert(ipow(primes[i], nu) * ipow(primes[j], mu));
                }
    }
    return {ms.begin(), ms.end()};
}

std::vector<i64> tail_choices(i64 m, bool nonsplit) {
    std::vector<i64> out{0};
    if (!nonsplit || m == 1) return out;
    for (auto [p, k] : factorize(m)) out.push_back(m / p);
    return out;
}

} // namespace

void enumerate_presentations(const CorpusSpec& spec, const std::function<void(const PcPresentation&)>& emit) {
    if (spec.max_order == 0 || spec.shapes.empty()) return;
    for (i64 m : gamma_orders(spec)) {
        for (const auto& shape : spec.shapes) {
            i64 order = m;
            for (i64 e : shape) order *= e;
            if (order > static_cast<i64>(spec.max_order)) continue;
            const std::size_t k = shape.size();
            std::vector<std::vector<i64>> roots(k);
            for (std::size_t i = 0; i < k; ++i) roots[i] = roots_of_unity(m, shape[i]);
            const auto tails = tail_choices(m, spec.nonsplit_tails);
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
            // odometer over r, t, c choices
            const std::size_t slots = k + k + pairs.size();
            std::vector<std::size_t> radix(slots), digit(slots, 0);
            for (std::size_t i = 0; i < k; ++i) radix[i] = roots[i].size();
            for (std::size_t i = k; i < slots; ++i) radix[i] = tails.size();
            if (std::any_of(radix.begin(), radix.end(), [](std::size_t r) { return r == 0; })) continue;
            for (;;) {
                PcPresentation p;
                p.m = m;
                p.e = shape;
                p.r.resize(k);
                p.t.resize(k);
                p.c.assign(k, std::vector<i64>(k, 0));
                for (std::size_t i = 0; i < k; ++i) {
                    p.r[i] = roots[i][digit[i]];
                    p.t[i] = tails[digit[k + i]];
                }
                for (std::size_t x = 0; x < pairs.size(); ++x) p.c[pairs[x].first][pairs[x].second] = tails[digit[2 * k + x]];
                bool ok = true;
                try {
                    // the relation check alone proves consistency; skip the sampled associativity pass
                    GroupOptions quick;
                    quick.assoc_exhaustive_bound = 0;
                    quick.assoc_random_triples = 0;
                    Group g = make_group(p, quick);
                    (void)g;
                } catch (const Error&) {
                    ok = false;
                }
                if (ok) emit(p);
                std::size_t pos = 0;
                while (pos < slots && ++digit[pos] == radix[pos]) digit[pos++] = 0;
                if (pos == slots) break;
            }
        }
    }
}

std::vector<PcPresentation> enumerate_presentations(const CorpusSpec& spec) {
    std::vector<PcPresentation> out;
    enumerate_presentations(spec, [&](const PcPresentation& p) { out.push_back(p); });
    return out;
}

GenSet standard_generators(const Group& g) {
    static const char* names[] = {"a", "b", "c", "d", "f", "h"};
    GenSet s;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        s.names.push_back(i < 6 ? names[i] : "g" + std::to_string(i + 1));
        s.elems.push_back(g.gen(i));
    }
    if (!generates(g, s.elems)) {
        s.names.push_back("y");
        s.elems.push_back(g.gamma(1));
    }
    return s;
}

namespace {

i64 crt(i64 a, i64 m, i64 b, i64 n) {
    for (i64 x = 0; x < m * n; ++x)
        if (x % m == mod(a, m) && x % n == mod(b, n)) return x;
    throw Error(ErrorKind::BadParameters, "moduli are not coprime");
}

Instance make(const std::string& label, const PcPresentation& p,
              const std::vector<std::pair<std::string, Element>>& gens, std::vector<std::string> methods = {}) {
    Instance inst;
    inst.label = label;
    inst.presentation = p;
    for (const auto& [n, x] : gens) {
        inst.gens.names.push_back(n);
        inst.gens.elems.push_back(x);
    }
    inst.methods = std::move(methods);
    make_group(p);  // consistency
    return inst;
}

Element el(std::vector<i64> q, i64 z) { return Element{std::move(q), z}; }

} // namespace

PcPresentation nine_pq_819(i64 r, i64 s) {
    return PcPresentation{91, {3, 3}, {0, 0}, {crt(r * r, 7, s, 13), crt(r, 7, s, 13)}, {{0, 0}, {0, 0}}};
}

std::vector<Instance> showcase_instances() {
    std::vector<Instance> out;
    const PcPresentation z7z3{7, {3}, {0}, {2}, {{0}}};
    out.push_back(make("order-21 gamma in S", z7z3, {{"a", el({1}, 0)}, {"y", el({0}, 1)}}));
    out.push_back(make("order-21 same coset", z7z3, {{"a", el({1}, 0)}, {"b", el({1}, 1)}}));
    out.push_back(make("order-27 exponent 9", PcPresentation{9, {3}, {0}, {4}, {{0}}},
                       {{"a", el({1}, 0)}, {"y", el({0}, 1)}}));
    out.push_back(make("order-63", PcPresentation{7, {9}, {0}, {2}, {{0}}}, {{"a", el({1}, 0)}, {"b", el({2}, 1)}}));
    out.push_back(make("order-171", PcPresentation{19, {9}, {0}, {7}, {{0}}}, {{"a", el({1}, 0)}, {"b", el({4}, 1)}}));
    out.push_back(make("order-315", PcPresentation{35, {9}, {0}, {16}, {{0}}}, {{"a", el({1}, 0)}, {"b", el({2}, 1)}}));
    out.push_back(make("bina", PcPresentation{91, {9}, {0}, {9}, {{0}}}, {{"a", el({1}, 13)}, {"b", el({2}, 7)}}));
    out.push_back(make("bnotina", PcPresentation{21, {9, 3}, {0, 0}, {1, 4}, {{0, 7}, {0, 0}}},
                       {{"a", el({2, 0}, 3)}, {"b", el({0, 1}, 0)}}));
    out.push_back(make("ab3 three-quotient", PcPresentation{21, {3, 3}, {0, 0}, {4, 1}, {{0, 7}, {0, 0}}},
                       {{"a", el({1, 0}, 0)}, {"b", el({1, 1}, 3)}}));
    for (auto [r, sq] : {std::pair<i64, i64>{2, 3}, {4, 9}})
        out.push_back(make("ab3 nine-pq r=" + std::to_string(r) + " s=" + std::to_string(sq), nine_pq_819(r, sq),
                           {{"a", el({1, 0}, 0)}, {"b", el({0, 1}, 1)}}));
    out.push_back(make("bandcina", PcPresentation{91, {9}, {0}, {9}, {{0}}},
                       {{"a", el({1}, 0)}, {"b", el({3}, 13)}, {"c", el({4}, 7)}}));
    out.push_back(make("chain", PcPresentation{21, {9, 3}, {0, 0}, {1, 4}, {{0, 7}, {0, 0}}},
                       {{"a", el({1, 0}, 7)}, {"b", el({3, 0}, 3)}, {"c", el({0, 1}, 0)}}));
    out.push_back(make("acent", PcPresentation{21, {3, 3, 3}, {3, 0, 0}, {1, 1, 4}, {{0, 7, 3}, {0, 0, 0}, {0, 0, 0}}},
                       {{"a", el({1, 0, 0}, 0)}, {"b", el({0, 1, 0}, 0)}, {"c", el({0, 0, 1}, 0)}}, {"acent"}));
    out.push_back(make("bcnotina", PcPresentation{91, {3, 3}, {0, 0}, {9, 1}, {{0, 0}, {0, 0}}},
                       {{"a", el({1, 0}, 0)}, {"b", el({0, 1}, 13)}, {"c", el({1, 1}, 7)}}));
    out.push_back(make("remainder", PcPresentation{21, {9, 3}, {0, 0}, {4, 1}, {{0, 7}, {0, 0}}},
                       {{"a", el({1, 0}, 7)}, {"b", el({2, 0}, 3)}, {"c", el({0, 1}, 0)}}));
    out.push_back(make("partition", PcPresentation{21, {3, 3, 9}, {0, 0, 0}, {1, 1, 16}, {{0, 7, 0}, {0, 0, 0}, {0, 0, 0}}},
                       {{"x", el({1, 0, 0}, 0)}, {"y", el({0, 1, 0}, 0)}, {"a", el({0, 0, 1}, 0)}, {"b", el({0, 0, 3}, 3)}}));
    return out;
}

std::vector<Instance> acceptance_corpus(std::size_t max_order, std::size_t per_bucket) {
    std::vector<Instance> out;
    for (auto& inst : showcase_instances())
        if (make_group(inst.presentation).order() <= max_order) out.push_back(std::move(inst));
    CorpusSpec rank1;
    rank1.max_order = max_order;
    rank1.max_prime = 37;
    rank1.shapes = {{3}, {5}, {7}, {9}, {15}, {21}, {25}, {27}};
    CorpusSpec rank2;
    rank2.max_order = max_order;
    rank2.max_prime = 13;
    rank2.shapes = {{3, 3}, {5, 3}};
    std::map<std::pair<std::size_t, i64>, std::size_t> bucket;
    for (const auto* spec : {&rank1, &rank2})
        enumerate_presentations(*spec, [&](const PcPresentation& p) {
            const Group g(p);
            if (!main_theorem_hypotheses(g) || is_abelian(g) || is_nilpotent(g)) return;
            auto& used = bucket[{g.order(), derived_order(g)}];
            if (used >= per_bucket) return;
            ++used;
            Instance inst;
            inst.label = "order-" + std::to_string(g.order()) + " #" + std::to_string(used);
            inst.presentation = p;
            inst.gens = standard_generators(g);
            out.push_back(std::move(inst));
        });
    return out;
}

} // namespace hamcay
