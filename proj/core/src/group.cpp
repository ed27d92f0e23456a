#include "hamcay/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hamcay/errors.hpp"

namespace hamcay {

std::string_view to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::InconsistentPresentation: return "InconsistentPresentation";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::NotAHamiltonianCycleInQuotient: return "NotAHamiltonianCycleInQuotient";
    case ErrorKind::VoltageDoesNotGenerate: return "VoltageDoesNotGenerate";
    case ErrorKind::NoCycleWorks: return "NoCycleWorks";
    case ErrorKind::WrongFamilySize: return "WrongFamilySize";
    case ErrorKind::AssemblyFailed: return "AssemblyFailed";
    case ErrorKind::PatternNotFound: return "PatternNotFound";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::FamilyCheckFailed: return "FamilyCheckFailed";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NoCaseApplies: return "NoCaseApplies";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }
i64 lcm(i64 a, i64 b) { return std::lcm(a, b); }

i64 powmod(i64 b, i64 e, i64 m) {
    if (m == 1) return 0;
    i64 result = 1;
    b = mod(b, m);
    while (e > 0) {
        if (e & 1) result = result * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return result;
}

i64 modinv(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1 != 0) {
        i64 q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw Error(ErrorKind::BadParameters, "no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
    return mod(x, m);
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n; ++p) {
        int k = 0;
        while (n % p == 0) { n /= p; ++k; }
        if (k) out.emplace_back(p, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

i64 radical(i64 n) {
    i64 r = 1;
    for (auto [p, k] : factorize(n)) r *= p;
    return r;
}

i64 PcPresentation::comm(std::size_t i, std::size_t j) const {
    if (i == j) return 0;
    if (i < j) return c[i][j];
    return mod(-c[j][i], m);
}

Group::Group(PcPresentation pres, const GroupOptions& opts) : pres_(std::move(pres)) {
    check_ranges();
    const std::size_t k = rank();
    stride_.assign(k, 0);
    std::size_t s = static_cast<std::size_t>(pres_.m);
    for (std::size_t i = k; i-- > 0;) {
        stride_[i] = s;
        s *= static_cast<std::size_t>(pres_.e[i]);
    }
    order_ = s;
    rpow_.resize(k);
    rgeo_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        rpow_[i].assign(pres_.e[i] + 1, 0);
        rgeo_[i].assign(pres_.e[i] + 1, 0);
        i64 p = 1 % pres_.m, g = 0;
        for (i64 b = 0; b <= pres_.e[i]; ++b) {
            rpow_[i][b] = p;
            rgeo_[i][b] = g;
            g = (g + p) % pres_.m;
            p = p * pres_.r[i] % pres_.m;
        }
    }
    check_relations();
    check_associativity(opts);
}

void Group::check_ranges() const {
    const auto& p = pres_;
    auto bad = [](const std::string& msg) { throw Error(ErrorKind::InconsistentPresentation, msg); };
    if (p.m < 1) bad("gamma order must be positive");
    const std::size_t k = p.e.size();
    if (p.t.size() != k || p.r.size() != k) bad("e, t, r must have equal length");
    if (!p.c.empty() && p.c.size() != k) bad("comm_tails must be k x k");
    for (const auto& row : p.c)
        if (row.size() != k) bad("comm_tails must be k x k");
    double total = static_cast<double>(p.m);
    for (std::size_t i = 0; i < k; ++i) {
        if (p.e[i] < 1) bad("relative orders must be positive");
        if (p.t[i] < 0 || p.t[i] >= p.m) bad("power tail out of range");
        if (p.r[i] < 0 || (p.m > 1 && p.r[i] >= p.m)) bad("action out of range");
        if (std::gcd(p.r[i], p.m) != 1 && p.m > 1) bad("action must be a unit mod m");
        if (powmod(p.r[i], p.e[i], p.m) != 1 % p.m)
            bad("r_" + std::to_string(i + 1) + "^e_" + std::to_string(i + 1) + " is not 1 mod m");
        total *= static_cast<double>(p.e[i]);
    }
    if (total > 1e8) bad("group order too large");
    for (std::size_t i = 0; i < k && !p.c.empty(); ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (p.c[i][j] < 0 || p.c[i][j] >= p.m) bad("commutator tail out of range");
}

void Group::right_mul_gen_power(std::vector<i64>& q, i64& z, std::size_t i, i64 beta) const {
    if (beta == 0) return;
    const i64 m = pres_.m;
    const std::size_t k = rank();
    // v r_i^beta from moving gamma^z right past g_i^beta
    i64 v = z * rpow_[i][beta] % m;
    // conjugating the tail g_{i+1}^{q_{i+1}} ... by g_i^beta
    i64 suffix = 1 % m;
    i64 acc = 0;
    for (std::size_t j = k; j-- > i + 1;) {
        if (q[j] != 0 && !pres_.c.empty()) {
            i64 d = mod(-pres_.c[i][j], m);
            i64 u = d * rgeo_[i][beta] % m * rgeo_[j][q[j]] % m;
            acc = (acc + u * suffix) % m;
        }
        suffix = suffix * rpow_[j][q[j]] % m;
    }
    i64 ni = q[i] + beta;
    if (ni >= pres_.e[i]) {
        ni -= pres_.e[i];
        acc = (acc + pres_.t[i] * suffix) % m;
    }
    q[i] = ni;
    z = (acc + v) % m;
}

Element Group::identity() const { return Element{std::vector<i64>(rank(), 0), 0}; }

Element Group::gen(std::size_t i) const {
    Element x = identity();
    if (pres_.e[i] == 1) {
        x.z = pres_.t[i];
        return x;
    }
    x.q[i] = 1;
    return x;
}

Element Group::gamma(i64 power) const {
    Element x = identity();
    x.z = mod(power, pres_.m);
    return x;
}

Element Group::mul(const Element& x, const Element& y) const {
    Element out = x;
    for (std::size_t i = 0; i < rank(); ++i) right_mul_gen_power(out.q, out.z, i, y.q[i]);
    out.z = (out.z + y.z) % pres_.m;
    return out;
}

Element Group::inv(const Element& x) const {
    // x * g^b = gamma^u with b = -a, so x^-1 = g^b gamma^-u
    std::vector<i64> b(rank());
    for (std::size_t i = 0; i < rank(); ++i) b[i] = mod(-x.q[i], pres_.e[i]);
    Element y{b, 0};
    Element p = mul(x, y);
    y.z = mod(-p.z, pres_.m);
    return y;
}

Element Group::pow(const Element& x, i64 n) const {
    Element base = n < 0 ? inv(x) : x;
    if (n < 0) n = -n;
    Element result = identity();
    while (n > 0) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

Element Group::conj(const Element& x, const Element& g) const { return mul(mul(inv(g), x), g); }

Element Group::commutator(const Element& x, const Element& y) const {
    return mul(mul(inv(x), inv(y)), mul(x, y));
}

i64 Group::element_order(const Element& x) const {
    i64 o1 = 1;
    for (std::size_t i = 0; i < rank(); ++i) o1 = std::lcm(o1, pres_.e[i] / std::gcd(x.q[i], pres_.e[i]));
    Element y = pow(x, o1);
    return o1 * (pres_.m / std::gcd(y.z, pres_.m));
}

bool Group::valid(const Element& x) const {
    if (x.q.size() != rank() || x.z < 0 || x.z >= pres_.m) return false;
    for (std::size_t i = 0; i < rank(); ++i)
        if (x.q[i] < 0 || x.q[i] >= pres_.e[i]) return false;
    return true;
}

bool Group::in_gamma(const Element& x) const {
    return std::all_of(x.q.begin(), x.q.end(), [](i64 a) { return a == 0; });
}

Element Group::normalize(std::vector<i64> q, i64 z) const {
    // interpret as the word g_1^{q_1} ... g_k^{q_k} gamma^z with arbitrary integer exponents
    Element out = gamma(z);
    Element acc = identity();
    for (std::size_t i = 0; i < rank(); ++i) acc = mul(acc, pow(gen(i), q[i]));
    return mul(acc, out);
}

std::size_t Group::index(const Element& x) const {
    std::size_t idx = static_cast<std::size_t>(x.z);
    for (std::size_t i = 0; i < rank(); ++i) idx += static_cast<std::size_t>(x.q[i]) * stride_[i];
    return idx;
}

Element Group::element(std::size_t idx) const {
    Element x = identity();
    for (std::size_t i = 0; i < rank(); ++i) {
        x.q[i] = static_cast<i64>(idx / stride_[i]);
        idx %= stride_[i];
    }
    x.z = static_cast<i64>(idx);
    return x;
}

std::size_t Group::mul_index(std::size_t x, std::size_t y) const { return index(mul(element(x), element(y))); }

void Group::check_relations() const {
    // Right-multiplication permutations by g_i and gamma on the |G| normal forms.  If every
    // defining relation holds as a permutation identity and the normal-form words map the
    // identity to distinct points, the presented group acts regularly on the normal forms,
    // hence has exactly |G| elements and the collection formula is its multiplication.
    const std::size_t n = order_;
    const std::size_t k = rank();
    const i64 m = pres_.m;
    auto bad = [](const std::string& msg) { throw Error(ErrorKind::InconsistentPresentation, msg); };

    std::vector<std::vector<std::size_t>> pg(k, std::vector<std::size_t>(n));
    std::vector<std::size_t> pz(n);
    for (std::size_t v = 0; v < n; ++v) {
        Element x = element(v);
        pz[v] = index(Element{x.q, (x.z + 1) % m});
        for (std::size_t i = 0; i < k; ++i) {
            Element y = x;
            right_mul_gen_power(y.q, y.z, i, 1 % pres_.e[i]);
            if (pres_.e[i] == 1) y.z = (y.z + pres_.t[i]) % m;
            pg[i][v] = index(y);
        }
    }
    auto apply = [&](std::size_t v, const std::vector<std::size_t>& p, i64 times) {
        for (i64 s = 0; s < times; ++s) v = p[v];
        return v;
    };
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t i = 0; i < k; ++i) {
            if (apply(v, pg[i], pres_.e[i]) != apply(v, pz, pres_.t[i]))
                bad("power relation for g_" + std::to_string(i + 1) + " fails");
            if (pg[i][pz[v]] != apply(pg[i][v], pz, pres_.r[i]))
                bad("action relation for g_" + std::to_string(i + 1) + " fails");
            for (std::size_t j = i + 1; j < k; ++j) {
                std::size_t lhs = pg[i][pg[j][v]];
                std::size_t rhs = apply(pg[j][pg[i][v]], pz, mod(-pres_.comm(i, j), m));
                if (lhs != rhs)
                    bad("commutator relation for (g_" + std::to_string(i + 1) + ", g_" + std::to_string(j + 1) + ") fails");
            }
        }
    }
    // normal-form words applied to the identity must reproduce each normal form
    for (std::size_t v = 0; v < n; ++v) {
        Element x = element(v);
        std::size_t w = 0;
        for (std::size_t i = 0; i < k; ++i) w = apply(w, pg[i], x.q[i]);
        w = apply(w, pz, x.z);
        if (w != v) bad("normal forms are not distinct under the relations");
    }
    // every power step must agree with iterated single steps
    for (std::size_t v = 0; v < n; ++v) {
        Element x = element(v);
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t w = v;
            for (i64 b = 1; b < pres_.e[i]; ++b) {
                w = pg[i][w];
                Element y = x;
                right_mul_gen_power(y.q, y.z, i, b);
                if (index(y) != w) bad("power step disagrees with iterated generator steps");
            }
        }
    }
}

void Group::check_associativity(const GroupOptions& opts) const {
    const std::size_t n = order_;
    auto bad = [] { throw Error(ErrorKind::InconsistentPresentation, "associativity fails"); };
    if (n <= opts.assoc_exhaustive_bound) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                std::size_t xy = mul_index(x, y);
                for (std::size_t z = 0; z < n; ++z)
                    if (mul_index(xy, z) != mul_index(x, mul_index(y, z))) bad();
            }
        return;
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < opts.assoc_random_triples; ++s) {
        std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
        if (mul_index(mul_index(x, y), z) != mul_index(x, mul_index(y, z))) bad();
    }
}

Group make_group(PcPresentation pres, const GroupOptions& opts) {
    if (pres.c.empty()) pres.c.assign(pres.e.size(), std::vector<i64>(pres.e.size(), 0));
    return Group(std::move(pres), opts);
}

std::ptrdiff_t GenSet::find(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : it - names.begin();
}

bool Subgroup::contains(const Element& x) const { return std::binary_search(members.begin(), members.end(), x); }

Subgroup subgroup_closure(const Group& g, const std::vector<Element>& gens) {
    std::vector<char> seen(g.order(), 0);
    std::vector<std::size_t> queue{g.index(g.identity())};
    seen[queue[0]] = 1;
    std::vector<std::size_t> gi;
    for (const auto& x : gens) gi.push_back(g.index(x));
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (std::size_t s : gi) {
            std::size_t v = g.mul_index(queue[h], s);
            if (!seen[v]) {
                seen[v] = 1;
                queue.push_back(v);
            }
        }
    std::sort(queue.begin(), queue.end());
    Subgroup out;
    out.gens = gens;
    for (std::size_t v : queue) out.members.push_back(g.element(v));
    return out;
}

i64 derived_order(const Group& g) {
    const auto& p = g.presentation();
    i64 d = p.m;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        d = std::gcd(d, mod(p.r[i] - 1, p.m));
        for (std::size_t j = i + 1; j < g.rank(); ++j) d = std::gcd(d, p.c[i][j]);
    }
    return p.m / d;
}

Element derived_generator(const Group& g) { return g.gamma(g.gamma_order() / derived_order(g)); }

Subgroup derived_subgroup(const Group& g) {
    Subgroup s = subgroup_closure(g, {derived_generator(g)});
    return s;
}

bool generates(const Group& g, const std::vector<Element>& gens) {
    return subgroup_closure(g, gens).size() == g.order();
}

void validate_genset(const Group& g, const GenSet& s) {
    if (s.names.size() != s.elems.size()) throw Error(ErrorKind::MalformedInput, "generator names and elements differ in length");
    std::set<std::string> uniq(s.names.begin(), s.names.end());
    if (uniq.size() != s.names.size()) throw Error(ErrorKind::MalformedInput, "duplicate generator name");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!g.valid(s.elems[i])) throw Error(ErrorKind::MalformedInput, "generator " + s.names[i] + " is not a normal form");
        if (s.elems[i] == g.identity()) throw Error(ErrorKind::MalformedInput, "generator " + s.names[i] + " is the identity");
    }
    if (!generates(g, s.elems)) throw Error(ErrorKind::MalformedInput, "connection set does not generate the group");
}

bool is_nilpotent(const Group& g) {
    // lower central series inside <gamma>: [<gamma^d>, G] = <gamma^{d (r_i - 1)}>
    const auto& p = g.presentation();
    i64 d = p.m / derived_order(g);
    for (;;) {
        i64 nd = p.m;
        for (std::size_t i = 0; i < g.rank(); ++i) nd = std::gcd(nd, d * mod(p.r[i] - 1, p.m) % p.m);
        if (nd == d) return d == p.m;
        d = nd;
    }
}

bool is_abelian(const Group& g) { return derived_order(g) == 1; }

bool main_theorem_hypotheses(const Group& g) {
    if (g.order() % 2 == 0) return false;
    return factorize(derived_order(g)).size() <= 2;
}

PredicateReport structural_predicates(const Group& g, const GenSet& s) {
    PredicateReport rep;
    rep.odd_order = g.order() % 2 == 1;
    rep.derived_order = derived_order(g);
    rep.derived_factorization = factorize(rep.derived_order);
    rep.two_primes = rep.derived_factorization.size() <= 2;
    rep.nilpotent = is_nilpotent(g);
    const i64 dord = rep.derived_order;
    const i64 cube_part = dord % 3 == 0 ? dord / 3 : dord;
    rep.quotient27_nonabelian = dord % 3 == 0 && static_cast<i64>(g.order()) / cube_part == 27;
    for (std::size_t v = 0; v < g.order(); ++v) rep.exponent = std::lcm(rep.exponent, g.element_order(g.element(v)));
    const Element dg = derived_generator(g);
    for (std::size_t i = 0; i < s.size(); ++i) {
        SymbolReport sr;
        sr.name = s.names[i];
        const Element& x = s.elems[i];
        Subgroup dsub = subgroup_closure(g, {dg});
        sr.in_derived = dsub.contains(x);
        sr.derived_in_cyclic = subgroup_closure(g, {x}).contains(dg);
        i64 cnt = 0;
        for (const auto& h : dsub.members)
            if (g.conj(h, x) == h) ++cnt;
        sr.centralizer_in_derived = cnt;
        rep.symbols.push_back(sr);
    }
    return rep;
}

} // namespace hamcay
