#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hamcay/constructions.hpp"
#include "hamcay/json_io.hpp"

namespace hamcay {

inline constexpr int kCertificateSchema = 1;

// One step of the reduction chain, e.g. {"kind": "quotient-by-symbol", "symbol": "y"}.
using Reduction = json;

struct Certificate {
    PcPresentation presentation;
    GenSet gens;
    WalkSpec walk;
    std::string method;  // case tag, fgl-direct, same-coset, prime-power-pair, brute-force, external-fallback
    std::vector<Reduction> reductions;
    std::vector<std::string> transcript;
    VerificationTranscript verification;
    int schema_version = kCertificateSchema;
};

json to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

// Every method tag solve can emit.
const std::vector<std::string>& method_tags();
bool is_constructive(const std::string& method);

// Findings of the standing assumptions on (G, S), in the order solve acts on them.
struct Normalization {
    GenSet gens;                             // minimal, greedy removal in canonical order
    std::vector<std::string> dropped;
    std::vector<std::string> in_derived;     // s in S with s in G'
    std::optional<std::pair<Step, Step>> same_coset;  // a != b in S^{+-1} with aG' = bG'
    std::vector<std::string> contains_derived;        // G' <= <s>
    std::vector<Reduction> reductions;
};
Normalization normalize(const Group& g, const GenSet& s);

// Every instance whose hypotheses hold, in case priority order and canonical witness order.
std::vector<CaseInstance> dispatch_candidates(const Group& g, const GenSet& s, const std::vector<CaseTag>& allowed = {});
// The first of them; throws NoCaseApplies.
CaseInstance dispatch(const Group& g, const GenSet& s, const std::vector<CaseTag>& allowed = {});

struct SolveOptions {
    std::uint64_t budget = 10'000'000;  // backtracking nodes for any search
    std::vector<CaseTag> methods;       // empty: every case
    bool directed = false;              // oracle mode: directed brute force only
};

Certificate solve(std::shared_ptr<const Group> g, const GenSet& s, const SolveOptions& opts = {});
Certificate solve(const PcPresentation& p, const GenSet& s, const SolveOptions& opts = {});

struct VerifyReport {
    bool ok = false;
    std::string reason;
    std::optional<std::size_t> first_divergence;  // step position of the first early revisit
    VerificationTranscript transcript;
};
VerifyReport verify(const Certificate& c);

} // namespace hamcay
