#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hamcay {

using i64 = std::int64_t;

// Metabelian pc presentation with a distinguished cyclic normal subgroup <gamma>:
//   g_i^{e_i} = gamma^{t_i},  gamma^{g_i} = gamma^{r_i},  [g_i, g_j] = gamma^{c_ij} (i < j).
struct PcPresentation {
    i64 m = 1;
    std::vector<i64> e;
    std::vector<i64> t;
    std::vector<i64> r;
    std::vector<std::vector<i64>> c;  // k x k, entries with i < j are used

    std::size_t rank() const { return e.size(); }
    i64 comm(std::size_t i, std::size_t j) const;
    bool operator==(const PcPresentation&) const = default;
};

// Normal form g_1^{q_1} ... g_k^{q_k} gamma^z.
struct Element {
    std::vector<i64> q;
    i64 z = 0;

    auto operator<=>(const Element&) const = default;
};

struct GroupOptions {
    std::size_t assoc_exhaustive_bound = 27;
    std::size_t assoc_random_triples = 500;
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

class Group {
public:
    explicit Group(PcPresentation pres, const GroupOptions& opts = {});

    const PcPresentation& presentation() const { return pres_; }
    std::size_t order() const { return order_; }
    std::size_t rank() const { return pres_.rank(); }
    i64 gamma_order() const { return pres_.m; }

    Element identity() const;
    Element gen(std::size_t i) const;
    Element gamma(i64 power = 1) const;

    Element mul(const Element& x, const Element& y) const;
    Element inv(const Element& x) const;
    Element pow(const Element& x, i64 n) const;
    Element conj(const Element& x, const Element& g) const;  // g^-1 x g
    Element commutator(const Element& x, const Element& y) const;
    i64 element_order(const Element& x) const;

    bool valid(const Element& x) const;
    bool in_gamma(const Element& x) const;
    Element normalize(std::vector<i64> q, i64 z) const;  // reduce exponents into range

    std::size_t index(const Element& x) const;
    Element element(std::size_t idx) const;
    std::size_t mul_index(std::size_t x, std::size_t y) const;

    // Right multiplication by g_i^beta (0 <= beta < e_i); the primitive every product is built from.
    void right_mul_gen_power(std::vector<i64>& q, i64& z, std::size_t i, i64 beta) const;

private:
    void check_ranges() const;
    void check_relations() const;
    void check_associativity(const GroupOptions& opts) const;

    PcPresentation pres_;
    std::size_t order_ = 1;
    std::vector<std::size_t> stride_;        // mixed radix, gamma least significant
    std::vector<std::vector<i64>> rpow_;    // r_i^beta mod m
    std::vector<std::vector<i64>> rgeo_;    // 1 + r_i + ... + r_i^{beta-1} mod m
};

Group make_group(PcPresentation pres, const GroupOptions& opts = {});

struct GenSet {
    std::vector<std::string> names;
    std::vector<Element> elems;

    std::size_t size() const { return elems.size(); }
    std::ptrdiff_t find(const std::string& name) const;
};

struct Subgroup {
    std::vector<Element> gens;
    std::vector<Element> members;  // sorted in canonical order

    std::size_t size() const { return members.size(); }
    bool contains(const Element& x) const;
};

Subgroup subgroup_closure(const Group& g, const std::vector<Element>& gens);
Subgroup derived_subgroup(const Group& g);
i64 derived_order(const Group& g);
Element derived_generator(const Group& g);  // gamma^{m/|G'|}
bool generates(const Group& g, const std::vector<Element>& gens);
void validate_genset(const Group& g, const GenSet& s);

struct SymbolReport {
    std::string name;
    bool in_derived = false;
    bool derived_in_cyclic = false;   // G' <= <s>
    i64 centralizer_in_derived = 1;   // |C_{G'}(s)|
};

struct PredicateReport {
    bool odd_order = false;
    bool derived_cyclic = true;
    i64 derived_order = 1;
    std::vector<std::pair<i64, int>> derived_factorization;
    bool two_primes = true;           // |G'| = p^mu q^nu
    bool nilpotent = false;
    bool quotient27_nonabelian = false;  // G/(G')^3 nonabelian of order 27
    i64 exponent = 1;
    std::vector<SymbolReport> symbols;
};

PredicateReport structural_predicates(const Group& g, const GenSet& s);
bool is_nilpotent(const Group& g);
bool is_abelian(const Group& g);
bool main_theorem_hypotheses(const Group& g);

// Number theory helpers shared across modules.
i64 mod(i64 a, i64 m);
i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);
i64 powmod(i64 b, i64 e, i64 m);
i64 modinv(i64 a, i64 m);
std::vector<std::pair<i64, int>> factorize(i64 n);
i64 radical(i64 n);

} // namespace hamcay
