#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hamcay/group.hpp"
#include "hamcay/json_io.hpp"

namespace hamcay {

struct CorpusSpec {
    i64 min_prime = 3;
    i64 max_prime = 13;
    int max_mu = 2;  // exponent bound on the smaller prime
    int max_nu = 1;  // exponent bound on the larger prime
    std::vector<std::vector<i64>> shapes = {{3}, {5}, {7}, {9}, {11}, {13}, {15}, {21}, {25}, {27}, {3, 3}, {9, 3}, {5, 5}, {3, 3, 3}};
    std::size_t max_order = 200;
    bool nonsplit_tails = true;  // also try power and commutator tails of prime order
    std::uint64_t seed = 1;
};

// Deterministic stream of consistent presentations, ordered by gamma order, shape, then data.
void enumerate_presentations(const CorpusSpec& spec, const std::function<void(const PcPresentation&)>& emit);
std::vector<PcPresentation> enumerate_presentations(const CorpusSpec& spec);

// Units r mod m with r^e = 1, ascending.
std::vector<i64> roots_of_unity(i64 m, i64 e);

// g_1, ..., g_k named a, b, c, ..., plus y = gamma when they do not generate.
GenSet standard_generators(const Group& g);

// Hand-built instances: one per case of the dispatcher, the orders the acceptance corpus must
// contain, and the order-819 groups Z_91 x| (Z_3 x Z_3) with (r, s) = (2, 3) and (4, 9).
std::vector<Instance> showcase_instances();

// The order-819 group for the 9pq construction: a acts by r^2 on Z_7 and s on Z_13, b by r and s.
PcPresentation nine_pq_819(i64 r, i64 s);

// Showcase instances followed by non-nilpotent in-scope groups from two fast enumerations
// (rank 1 with primes up to 37, rank 2 with primes up to 13), at most per_bucket groups for each
// pair (|G|, |G'|).
std::vector<Instance> acceptance_corpus(std::size_t max_order = 2000, std::size_t per_bucket = 2);

} // namespace hamcay
