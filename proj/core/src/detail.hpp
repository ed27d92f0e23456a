#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hamcay/constructions.hpp"

namespace hamcay::detail {

GenSet subset(const GenSet& s, const std::vector<std::string>& names);
WalkSpec as_walk(std::vector<Step> steps);

struct Cut {
    std::size_t at, len;
    std::vector<Step> repl;
};
std::vector<Step> multi_splice(const QuotientMap& space, const std::vector<Step>& cycle, std::vector<Cut> cuts);

// Two hamiltonian cycles of space.graph from the identity coset with a shared oriented edge whose
// voltage difference passes accept.
struct FoundPair {
    std::vector<Step> c1, c2;
    OrientedEdge common;
    Element diff;
};
std::optional<FoundPair> search_pair(const QuotientMap& space, const std::function<bool(const Element&)>& accept,
                                     std::uint64_t budget);
// Rotates a cycle from the identity coset so that it ends with the given oriented edge.
std::vector<Step> end_with(const QuotientMap& space, const std::vector<Step>& c, const OrientedEdge& e);

// x lies in G' with nonzero p-part and trivial part at `other`
bool only_prime(const Group& g, const Element& x, i64 p, i64 other);

} // namespace hamcay::detail
