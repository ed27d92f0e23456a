#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hamcay/cayley.hpp"
#include "hamcay/group.hpp"

namespace fixtures {

using hamcay::Element;
using hamcay::GenSet;
using hamcay::Group;
using hamcay::i64;
using hamcay::PcPresentation;

PcPresentation cyclic(i64 n);
PcPresentation z7_z3(i64 r);                 // Z_7 x| Z_3, gamma^{g_1} = gamma^r
PcPresentation heisenberg27();
PcPresentation m27();                        // Z_9 x| Z_3, exponent 9
PcPresentation metacyclic(i64 m, i64 e, i64 r);  // Z_m x| Z_e
PcPresentation g819(i64 ra7, i64 ra13, i64 rb7, i64 rb13);  // Z_91 x| (Z_3 x Z_3)

GenSet gens(const Group& g, const std::vector<std::pair<std::string, Element>>& named);
GenSet standard_gens(const Group& g);  // g_1, ..., g_k, plus gamma if needed

// Small deterministic family of consistent presentations used across property tests.
std::vector<PcPresentation> small_groups(std::size_t max_order);

} // namespace fixtures
