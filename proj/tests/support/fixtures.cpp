#include "fixtures.hpp"

#include "hamcay/corpus.hpp"

namespace fixtures {

PcPresentation cyclic(i64 n) { return PcPresentation{1, {n}, {0}, {0}, {{0}}}; }

PcPresentation z7_z3(i64 r) { return PcPresentation{7, {3}, {0}, {r}, {{0}}}; }

PcPresentation heisenberg27() { return PcPresentation{3, {3, 3}, {0, 0}, {1, 1}, {{0, 1}, {0, 0}}}; }

PcPresentation m27() { return PcPresentation{9, {3}, {0}, {4}, {{0}}}; }

PcPresentation metacyclic(i64 m, i64 e, i64 r) { return PcPresentation{m, {e}, {0}, {r}, {{0}}}; }

PcPresentation g819(i64 ra7, i64 ra13, i64 rb7, i64 rb13) {
    auto crt = [](i64 a7, i64 a13) {
        for (i64 x = 0; x < 91; ++x)
            if (x % 7 == a7 && x % 13 == a13) return x;
        return i64{-1};
    };
    return PcPresentation{91, {3, 3}, {0, 0}, {crt(ra7, ra13), crt(rb7, rb13)}, {{0, 0}, {0, 0}}};
}

GenSet gens(const Group&, const std::vector<std::pair<std::string, Element>>& named) {
    GenSet s;
    for (const auto& [n, x] : named) {
        s.names.push_back(n);
        s.elems.push_back(x);
    }
    return s;
}

GenSet standard_gens(const Group& g) { return hamcay::standard_generators(g); }

std::vector<PcPresentation> small_groups(std::size_t max_order) {
    hamcay::CorpusSpec spec;
    spec.max_order = max_order;
    return hamcay::enumerate_presentations(spec);
}

} // namespace fixtures
