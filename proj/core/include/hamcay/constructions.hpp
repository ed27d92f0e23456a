#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hamcay/cayley.hpp"
#include "hamcay/group.hpp"
#include "hamcay/lifting.hpp"

namespace hamcay {

// ---- walk building ---------------------------------------------------------------------------

Step inv(Step s);
// n copies of s, or |n| copies of s^-1 when n < 0
std::vector<Step> pw(const Step& s, i64 n);
void append(std::vector<Step>& out, const std::vector<Step>& more);
std::vector<Step> reversed_inverse(const std::vector<Step>& path);

Element step_value(const Group& g, const GenSet& s, const Step& st);

// ---- G/G' and G' bookkeeping -----------------------------------------------------------------

// G/G' as a group of its own, with the projection.
struct Abelianization {
    std::shared_ptr<const Group> group;
    i64 gamma_order = 1;

    Element of(const Element& x) const { return project_gamma(x, gamma_order); }
    i64 order(const Element& x) const { return group->element_order(of(x)); }
    std::size_t span(const std::vector<Element>& xs) const;  // |<images>|
    bool in_span(const Element& x, const std::vector<Element>& ys) const;
    // least k >= 0 with xbar = ybar^k, or -1
    i64 log(const Element& x, const Element& y) const;
};
Abelianization abelianization(const Group& g);

// exponent w with x = d^w for the generator d of G', or -1 outside G'
i64 derived_log(const Group& g, const Element& x);
// Z_{p^mu} <= <x> for the p-part of G'
bool covers_prime(const Group& g, const Element& x, i64 p);
// exponent t with d^x = d^t
i64 derived_action(const Group& g, const Element& x);

// ---- StandardAlteration and KW43 -------------------------------------------------------------

enum class AlterationVariant { EdgeB, EdgeBInverse };

struct AlterationSpec {
    WalkSpec base;       // hamiltonian in the family space, based at the identity coset
    Step a, b;
    Element g;           // anchor
    i64 m = 1;
    i64 k = 1;
    AlterationVariant variant = AlterationVariant::EdgeB;
};

struct AlterationResult {
    WalkSpec cycle;
    Element predicted;  // the closed form
    Element computed;   // ((Pi C_0)^-1 (Pi C_k))^g from the traced voltages
};

AlterationResult standard_alteration(const QuotientMap& space, const AlterationSpec& spec);
// Every anchor g (as a lift of a coset) at which the alteration's two patterns occur.
std::vector<Element> alteration_anchors(const QuotientMap& space, const WalkSpec& base, const Step& a, const Step& b,
                                        i64 m, AlterationVariant variant);

// The walk C_k for a in S^{+-1}, a hamiltonian cycle (s_i) of the quotient by <a>, and r, k.
std::vector<Step> kw43_walk(const Step& a, i64 a_order, const std::vector<Step>& s, i64 r, i64 k);
// Pi C_0 [a^-k, s_1^-1] [a^-k, s_1^-1]^{a^-1}
Element kw43_voltage_formula(const Group& g, const GenSet& gens, const Element& pi0, const Step& a,
                             const Step& s1, i64 k);

struct Kw43Result {
    std::vector<WalkSpec> cycles;   // C_k for each requested k
    std::vector<Element> predicted;
};
Kw43Result kw43_family(const QuotientMap& space, const Step& a, const std::vector<Step>& s, i64 r,
                       const std::vector<i64>& ks);

// ---- path surgery ----------------------------------------------------------------------------

// Position i of the cyclic walk with vertex_i = coset of at and steps i.. equal to pattern.
std::optional<std::size_t> find_pattern(const QuotientMap& space, const std::vector<Step>& cycle,
                                        const Element& at, const std::vector<Step>& pattern);
std::optional<std::size_t> find_pattern_anywhere(const QuotientMap& space, const std::vector<Step>& cycle,
                                                 const std::vector<Step>& pattern, std::size_t skip = 0);
// Replaces len steps at cyclic position i, then rebases at the identity coset.
std::vector<Step> splice(const QuotientMap& space, const std::vector<Step>& cycle, std::size_t i, std::size_t len,
                         const std::vector<Step>& repl);
// Rotates a closed walk that starts at vertex `from` so that it starts at the identity coset.
std::vector<Step> rebase(const QuotientMap& space, const std::vector<Step>& cycle, std::size_t from);

// ---- case instances --------------------------------------------------------------------------

enum class CaseTag { Bina, Bnotina, Ab3, Bandcina, Chain, Acent, Bcnotina, Remainder, Partition };
std::string to_string(CaseTag t);
std::optional<CaseTag> case_tag_from_string(const std::string& s);

struct CaseInstance {
    CaseTag tag = CaseTag::Bina;
    Step a, b, c;
    bool has_c = false;
    i64 p = 0, q = 0;     // prime labels: Z_p <= <[a,b]>, Z_q <= <[a,c]>
    i64 n = 0, k = 0, l = 0, r = 0, d = 0, A = 0, B = 0, C = 0;
    std::string s_role;   // chain: "b" or "c"
    std::vector<std::string> sp, sq;  // partition
    std::vector<std::string> transcript;
};

struct CaseFamily {
    CycleFamily family;
    MarusicVariant variant = MarusicVariant::Three;
    std::vector<std::string> s0;
    std::vector<std::string> transcript;
    std::optional<WalkSpec> direct;  // set when the case closes without coset assembly
    std::string subtag;
};

// Checks the hypotheses of inst.tag for the given witnesses; fills the derived integers.
bool case_hypotheses(const Group& g, const GenSet& s, CaseInstance& inst);
// Applies the "we may assume" normalizations and builds the family for coset assembly.
CaseFamily build_case_family(std::shared_ptr<const Group> g, const GenSet& s, CaseInstance inst);

// Two generators of order 3 mod G': C = (a^-2, b^-1, a, b^-1, a^-2, b^2), and its closed-form voltage.
std::vector<Step> ab3_pair_walk(const Step& a, const Step& b);
Element ab3_pair_formula(const Group& g, const Element& a, const Element& b);

// Hamiltonian cycle of Cay(A; T) for an abelian group A, by the row-by-row grid over <T minus t>.
std::vector<Step> abelian_cycle(const Group& a, const GenSet& t);

// ---- cycle pairs and the special constructions -----------------------------------------------

struct PairResult {
    CycleFamily family;  // two cycles with a common oriented edge
    bool searched = false;
    std::vector<std::string> transcript;
};

// Cycles in Cay(G/G'; S) whose voltage difference generates G' (|G'| a prime power).
PairResult g_prime_p_pair(std::shared_ptr<const Group> g, const GenSet& s, std::uint64_t budget = 200000);
// Cycles in Cay(G/(G'Z); S) whose voltage difference generates G' (|G'| prime, Z central).
PairResult g_prime_p_z_pair(std::shared_ptr<const Group> g, const GenSet& s, const std::vector<Element>& z,
                            std::uint64_t budget = 200000);

struct AgbgResult {
    WalkSpec walk;
    std::string subcase;
    std::vector<std::string> transcript;
};
AgbgResult a_gprime_eq_b_gprime(std::shared_ptr<const Group> g, const GenSet& s, const Step& a, const Step& b);

struct TriangleParams {
    i64 pmu = 0;  // |x|
    i64 r = 0;    // x^{a^-1} = x^b = x^r
};
struct TriangleResult {
    i64 k = 0, l = 0;
    std::vector<Step> c, c_tilde;
    bool c_hamiltonian = false, c_tilde_hamiltonian = false;
};
// C and C~ for the lemma's parameters, each checked in the given space.
TriangleResult triangle_hc(const QuotientMap& space, const Step& a, const Step& b, const TriangleParams& params);
std::pair<i64, i64> triangle_kl(i64 pmu, i64 r);
std::vector<Step> triangle_walk(const Step& a, const Step& b, i64 pmu, i64 k, i64 l);

struct NinePqResult {
    WalkSpec walk;             // hamiltonian in Cay(G;S)
    std::vector<Step> cycle;   // hamiltonian in Cay(G/Z_{q^nu}; S)
    Element voltage;
    Element formula;           // y^{(s^2-1)(1+s)}
    i64 p = 0, q = 0, r = 0, s = 0;
    bool swapped = false;      // roles of a and b interchanged
    std::vector<std::string> transcript;
};
NinePqResult nine_pq_hard(std::shared_ptr<const Group> g, const GenSet& s);

} // namespace hamcay
