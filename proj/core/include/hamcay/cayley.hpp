#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hamcay/group.hpp"

namespace hamcay {

struct Step {
    std::string sym;
    int sign = 1;

    bool operator==(const Step&) const = default;
    auto operator<=>(const Step&) const = default;
};

// A walk [start](s_1, ..., s_n)^multiplicity.
struct WalkSpec {
    std::optional<Element> start;
    std::vector<Step> steps;
    i64 multiplicity = 1;

    std::size_t expanded_length() const { return steps.size() * static_cast<std::size_t>(multiplicity); }
    bool operator==(const WalkSpec&) const = default;
};

// Shorthand: "a", "A" for a^-1; repeated with a count, e.g. walk_of({{"a", 3}, {"b", -1}}).
WalkSpec walk_of(const std::vector<std::pair<std::string, int>>& runs);
WalkSpec concat(const WalkSpec& a, const WalkSpec& b);
WalkSpec inverse_walk(const WalkSpec& w);
WalkSpec rotate(const WalkSpec& w, std::size_t shift);
WalkSpec canonical_rotation(const WalkSpec& w);
std::string to_string(const WalkSpec& w);

// Vertices are 0..n-1 with 0 the identity; arcs exist for each symbol and sign.
class CayleyGraph {
public:
    CayleyGraph() = default;
    CayleyGraph(std::vector<std::string> names, std::vector<std::vector<std::uint32_t>> fwd,
                std::vector<std::vector<std::uint32_t>> bwd, std::size_t identity = 0, std::size_t order = 0);

    static CayleyGraph of_group(const Group& g, const GenSet& s);

    std::size_t order() const { return order_; }
    std::size_t identity() const { return identity_; }
    std::size_t symbols() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t symbol(const std::string& name) const;  // throws UnknownSymbol
    std::size_t step(std::size_t v, std::size_t sym, int sign) const {
        return sign > 0 ? fwd_[sym][v] : bwd_[sym][v];
    }
    std::size_t step(std::size_t v, const Step& s) const { return step(v, symbol(s.sym), s.sign); }
    bool connected() const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::uint32_t>> fwd_, bwd_;
    std::size_t order_ = 0;
    std::size_t identity_ = 0;
};

struct VerificationTranscript {
    std::size_t visited = 0;
    std::optional<std::size_t> first_repeat;  // step position at which a vertex was revisited early
    std::size_t endpoint = 0;                 // vertex index reached at the end
    bool closed = false;
    bool hamiltonian = false;
    std::size_t length = 0;

    bool operator==(const VerificationTranscript&) const = default;
};

Element trace(const Group& g, const GenSet& s, const WalkSpec& w);
Element trace_from(const Group& g, const GenSet& s, const Element& start, const WalkSpec& w);
Element walk_product(const Group& g, const GenSet& s, const std::vector<Step>& steps);

VerificationTranscript is_hamiltonian_cycle(const CayleyGraph& graph, const WalkSpec& w, std::size_t start_vertex);
VerificationTranscript is_hamiltonian_cycle(const Group& g, const GenSet& s, const WalkSpec& w);
VerificationTranscript is_hamiltonian_cycle(const Group& g, const GenSet& s, const CayleyGraph& graph, const WalkSpec& w);
// vertex sequence of one pass over the steps, starting at start_vertex (length steps+1)
std::vector<std::size_t> vertex_sequence(const CayleyGraph& graph, const std::vector<Step>& steps, std::size_t start_vertex);

struct Exhausted {
    std::uint64_t nodes = 0;
};
struct BudgetExceeded {
    std::uint64_t nodes = 0;
};
using SearchResult = std::variant<WalkSpec, Exhausted, BudgetExceeded>;

struct SearchOptions {
    std::uint64_t budget = 10'000'000;
    bool directed = false;
    std::vector<Step> prefix;  // forced opening steps
    std::uint64_t seed = 0;    // nonzero: randomized tie-breaking among equal-degree moves
};

// Calls visit on every hamiltonian cycle starting at the identity (up to the budget) until it
// returns true.  Returns the node count and whether the search space was fully explored.
struct EnumerationStats {
    std::uint64_t nodes = 0;
    bool complete = false;
    bool stopped = false;
};
EnumerationStats enumerate_hamiltonian_cycles(const CayleyGraph& graph, const SearchOptions& opts,
                                              const std::function<bool(const std::vector<Step>&)>& visit);

// Restarts with doubling node slices and varied tie-breaking until the budget is spent; any
// complete pass proves exhaustion.
SearchResult brute_force_hamiltonian(const CayleyGraph& graph, const SearchOptions& opts = {});
SearchResult brute_force_hamiltonian(const Group& g, const GenSet& s, const SearchOptions& opts = {});

} // namespace hamcay
