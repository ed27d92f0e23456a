#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hamcay/cayley.hpp"
#include "hamcay/group.hpp"

namespace hamcay {

// G together with a normal subgroup N and the Cayley graph on the cosets gN reachable from N
// through the chosen symbols.  When the symbols generate G modulo N this is Cay(G/N; S); with a
// smaller symbol set it is the Cayley graph of the subgroup <S_0, N>/N.
struct QuotientMap {
    std::shared_ptr<const Group> group;
    GenSet symbols;
    Subgroup normal;                    // N, members in canonical order
    std::optional<Element> generator;   // set when N is cyclic
    std::vector<std::uint32_t> coset_of;  // G index -> quotient vertex, npos outside <S, N>
    std::vector<std::size_t> reps;        // quotient vertex -> least G index in the coset
    CayleyGraph graph;
    std::optional<PcPresentation> quotient;  // G/N as a presentation when N <= <gamma>

    static constexpr std::uint32_t npos = 0xffffffffu;

    std::size_t quotient_order() const { return reps.size(); }
    std::size_t vertex_of(const Element& x) const;  // coset vertex; throws NotApplicable outside
    Element lift(std::size_t vertex) const { return group->element(reps[vertex]); }
};

// N is the normal closure-free subgroup generated by n_gens; it must be normal in G.
QuotientMap make_quotient(std::shared_ptr<const Group> g, const GenSet& s, const std::vector<Element>& n_gens);
QuotientMap make_quotient(const Group& g, const GenSet& s, const std::vector<Element>& n_gens);
// Shorthand for N = G'.
QuotientMap derived_quotient(std::shared_ptr<const Group> g, const GenSet& s);

// G/<gamma^{new_m}> as a presentation, and the projection of elements into it.
PcPresentation reduce_gamma(const PcPresentation& p, i64 new_m);
Element project_gamma(const Element& x, i64 new_m);
GenSet project_gamma(const GenSet& s, i64 new_m);

// Product of the steps of a quotient hamiltonian cycle, computed in G.
Element voltage(const QuotientMap& q, const WalkSpec& c);
// Product along c rotated to begin at the first visit of the coset of g.
Element voltage_conjugate_check(const QuotientMap& q, const WalkSpec& c, const Element& g);

bool generates_normal(const QuotientMap& q, const Element& x);

// (s_1, ..., s_m)^{|N|}, verified hamiltonian in Cay(G;S).
WalkSpec fgl_lift(const QuotientMap& q, const WalkSpec& c);

// Passes to G/Phi where N/Phi is the largest quotient of N of square-free order.
QuotientMap free_lunch_reduce(const QuotientMap& q);

// An oriented edge of a quotient cycle: the arc leaving `vertex` along sym^sign.
struct OrientedEdge {
    std::size_t vertex = 0;
    Step step;

    bool operator==(const OrientedEdge&) const = default;
};

struct CycleFamily {
    std::shared_ptr<const QuotientMap> space;  // the quotient the cycles live in
    std::vector<WalkSpec> cycles;              // all based at the same vertex
    std::vector<Element> voltages;
    std::optional<OrientedEdge> common;
    i64 target_order = 1;                      // |G'|; generation is tested against G'
    std::vector<std::string> notes;

    std::size_t size() const { return cycles.size(); }
};

// Verifies each cycle, computes voltages and locates a shared oriented edge.
CycleFamily make_family(std::shared_ptr<const QuotientMap> space, std::vector<WalkSpec> cycles);
std::vector<OrientedEdge> oriented_edges(const QuotientMap& q, const WalkSpec& c);

bool generates_derived(const Group& g, const Element& x);
std::size_t marusic_select(const CycleFamily& f, const Element& gamma);

enum class MarusicVariant { Three, Four };
bool marusic34_check(const CycleFamily& f, MarusicVariant variant);
// Condition (*) over every gamma in G' modulo its Frattini part.
bool marusic_condition(const CycleFamily& f);

// Assembles a hamiltonian cycle of Cay(G/G'; S) from a family in Cay(<S_0>/G'; S_0) and lifts it.
struct MarusicResult {
    WalkSpec walk;
    std::size_t selected = 0;
    Element gamma;
};
MarusicResult marusic_apply(std::shared_ptr<const Group> g, const GenSet& s, const std::vector<std::string>& s0,
                            const CycleFamily& f);

// Lift of a hamiltonian cycle in Cay(G/<s>; S) along the cyclic normal subgroup <s>, s in S, by
// sweeping each coset with s^{+-(k-1)}.  Returns nullopt when no choice of sweep directions closes.
std::optional<WalkSpec> coset_sweep_lift(const Group& g, const GenSet& s, const std::string& sym,
                                         const std::vector<Step>& quotient_cycle);

} // namespace hamcay
