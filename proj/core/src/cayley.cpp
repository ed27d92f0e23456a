#include "hamcay/cayley.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hamcay/errors.hpp"

namespace hamcay {

WalkSpec walk_of(const std::vector<std::pair<std::string, int>>& runs) {
    WalkSpec w;
    for (const auto& [sym, count] : runs) {
        int sign = count < 0 ? -1 : 1;
        for (int i = 0; i < std::abs(count); ++i) w.steps.push_back({sym, sign});
    }
    return w;
}

WalkSpec concat(const WalkSpec& a, const WalkSpec& b) {
    WalkSpec out = a;
    out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
    return out;
}

WalkSpec inverse_walk(const WalkSpec& w) {
    WalkSpec out;
    out.multiplicity = w.multiplicity;
    for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) out.steps.push_back({it->sym, -it->sign});
    return out;
}

WalkSpec rotate(const WalkSpec& w, std::size_t shift) {
    WalkSpec out = w;
    if (w.steps.empty()) return out;
    shift %= w.steps.size();
    std::rotate(out.steps.begin(), out.steps.begin() + static_cast<std::ptrdiff_t>(shift), out.steps.end());
    return out;
}

WalkSpec canonical_rotation(const WalkSpec& w) {
    WalkSpec best = w;
    for (std::size_t s = 1; s < w.steps.size(); ++s) {
        WalkSpec cand = rotate(w, s);
        if (cand.steps < best.steps) best = std::move(cand);
    }
    return best;
}

std::string to_string(const WalkSpec& w) {
    std::ostringstream os;
    os << "(";
    std::size_t i = 0;
    while (i < w.steps.size()) {
        std::size_t j = i;
        while (j < w.steps.size() && w.steps[j] == w.steps[i]) ++j;
        if (i) os << ", ";
        os << w.steps[i].sym;
        long n = static_cast<long>(j - i) * w.steps[i].sign;
        if (n != 1) os << "^" << n;
        i = j;
    }
    os << ")";
    if (w.multiplicity != 1) os << "^" << w.multiplicity;
    return os.str();
}

CayleyGraph::CayleyGraph(std::vector<std::string> names, std::vector<std::vector<std::uint32_t>> fwd,
                         std::vector<std::vector<std::uint32_t>> bwd, std::size_t identity, std::size_t order)
    : names_(std::move(names)), fwd_(std::move(fwd)), bwd_(std::move(bwd)), identity_(identity) {
    order_ = fwd_.empty() ? order : fwd_[0].size();
}

CayleyGraph CayleyGraph::of_group(const Group& g, const GenSet& s) {
    const std::size_t n = g.order();
    std::vector<std::vector<std::uint32_t>> fwd(s.size(), std::vector<std::uint32_t>(n));
    std::vector<std::vector<std::uint32_t>> bwd(s.size(), std::vector<std::uint32_t>(n));
    for (std::size_t k = 0; k < s.size(); ++k) {
        const Element inv = g.inv(s.elems[k]);
        for (std::size_t v = 0; v < n; ++v) {
            const Element x = g.element(v);
            fwd[k][v] = static_cast<std::uint32_t>(g.index(g.mul(x, s.elems[k])));
            bwd[k][v] = static_cast<std::uint32_t>(g.index(g.mul(x, inv)));
        }
    }
    CayleyGraph out(s.names, std::move(fwd), std::move(bwd), g.index(g.identity()));
    out.order_ = n;
    return out;
}

std::size_t CayleyGraph::symbol(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw Error(ErrorKind::UnknownSymbol, name);
}

bool CayleyGraph::connected() const {
    if (order_ == 0) return true;
    std::vector<char> seen(order_, 0);
    std::vector<std::size_t> queue{identity_};
    seen[identity_] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (std::size_t k = 0; k < symbols(); ++k)
            for (int sign : {1, -1}) {
                std::size_t v = step(queue[h], k, sign);
                if (!seen[v]) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
            }
    return queue.size() == order_;
}

Element walk_product(const Group& g, const GenSet& s, const std::vector<Step>& steps) {
    Element x = g.identity();
    for (const auto& st : steps) {
        auto k = s.find(st.sym);
        if (k < 0) throw Error(ErrorKind::UnknownSymbol, st.sym);
        const Element& y = s.elems[static_cast<std::size_t>(k)];
        x = g.mul(x, st.sign > 0 ? y : g.inv(y));
    }
    return x;
}

Element trace_from(const Group& g, const GenSet& s, const Element& start, const WalkSpec& w) {
    Element p = walk_product(g, s, w.steps);
    return g.mul(start, g.pow(p, w.multiplicity));
}

Element trace(const Group& g, const GenSet& s, const WalkSpec& w) {
    return trace_from(g, s, w.start.value_or(g.identity()), w);
}

std::vector<std::size_t> vertex_sequence(const CayleyGraph& graph, const std::vector<Step>& steps, std::size_t start_vertex) {
    std::vector<std::size_t> seq{start_vertex};
    std::size_t v = start_vertex;
    for (const auto& st : steps) {
        v = graph.step(v, st);
        seq.push_back(v);
    }
    return seq;
}

VerificationTranscript is_hamiltonian_cycle(const CayleyGraph& graph, const WalkSpec& w, std::size_t start_vertex) {
    VerificationTranscript tr;
    std::vector<std::size_t> syms;
    syms.reserve(w.steps.size());
    for (const auto& st : w.steps) syms.push_back(graph.symbol(st.sym));
    tr.length = w.expanded_length();
    std::vector<char> seen(graph.order(), 0);
    std::size_t v = start_vertex;
    seen[v] = 1;
    tr.visited = 1;
    std::size_t pos = 0;
    for (i64 rep = 0; rep < w.multiplicity; ++rep)
        for (std::size_t i = 0; i < w.steps.size(); ++i, ++pos) {
            v = graph.step(v, syms[i], w.steps[i].sign);
            bool last = pos + 1 == tr.length;
            if (seen[v]) {
                if (!(last && v == start_vertex) && !tr.first_repeat) tr.first_repeat = pos;
            } else {
                seen[v] = 1;
                ++tr.visited;
            }
        }
    tr.endpoint = v;
    tr.closed = v == start_vertex && tr.length > 0;
    tr.hamiltonian = tr.closed && !tr.first_repeat && tr.visited == graph.order() && tr.length == graph.order();
    return tr;
}

VerificationTranscript is_hamiltonian_cycle(const Group& g, const GenSet&, const CayleyGraph& graph, const WalkSpec& w) {
    return is_hamiltonian_cycle(graph, w, g.index(w.start.value_or(g.identity())));
}

VerificationTranscript is_hamiltonian_cycle(const Group& g, const GenSet& s, const WalkSpec& w) {
    return is_hamiltonian_cycle(g, s, CayleyGraph::of_group(g, s), w);
}

namespace {

struct Arc {
    std::uint32_t to;
    std::uint16_t sym;
    std::int8_t sign;
};

class Searcher {
public:
    Searcher(const CayleyGraph& g, const SearchOptions& o, const std::function<bool(const std::vector<Step>&)>& visit)
        : graph_(g), opts_(o), visit_(visit), n_(g.order()) {
        arcs_.resize(n_);
        for (std::size_t v = 0; v < n_; ++v)
            for (std::size_t k = 0; k < g.symbols(); ++k)
                for (int sign : {1, -1}) {
                    if (o.directed && sign < 0) continue;
                    arcs_[v].push_back({static_cast<std::uint32_t>(g.step(v, k, sign)), static_cast<std::uint16_t>(k),
                                        static_cast<std::int8_t>(sign)});
                }
        if (!o.directed) {
            // undirected graph: in-neighbours equal out-neighbours
            in_ = arcs_;
        } else {
            in_.resize(n_);
            for (std::size_t v = 0; v < n_; ++v)
                for (const auto& a : arcs_[v]) in_[a.to].push_back({static_cast<std::uint32_t>(v), a.sym, a.sign});
        }
        visited_.assign(n_, 0);
        rng_.seed(o.seed);
    }

    EnumerationStats run() {
        EnumerationStats st;
        const std::size_t s = graph_.identity();
        visited_[s] = 1;
        unvisited_ = n_ - 1;
        std::size_t v = s;
        std::size_t count = 1;
        for (const auto& p : opts_.prefix) {
            std::size_t w = graph_.step(v, p);
            path_.push_back(p);
            if (visited_[w]) {
                if (count == n_ && w == s) {
                    path_.pop_back();
                    break;
                }
                st.complete = true;
                return st;
            }
            visited_[w] = 1;
            --unvisited_;
            ++count;
            v = w;
        }
        dfs(v, count);
        st.nodes = nodes_;
        st.stopped = stopped_;
        st.complete = !stopped_ && !over_budget_;
        return st;
    }

private:
    std::size_t free_degree(std::size_t u) const {
        std::size_t d = 0;
        for (const auto& a : arcs_[u])
            if (!visited_[a.to]) ++d;
        return d;
    }

    bool dead_end_after(std::size_t interior, std::size_t cur) const {
        // an unvisited neighbour of a vertex that just became interior must still have two usable sides
        if (opts_.directed) return false;
        const std::size_t s = graph_.identity();
        for (const auto& a : arcs_[interior]) {
            std::size_t u = a.to;
            if (visited_[u]) continue;
            std::size_t usable = 0;
            for (const auto& b : arcs_[u])
                if (!visited_[b.to] || b.to == cur || b.to == s) {
                    if (++usable >= 2) break;
                }
            if (usable < 2) return true;
        }
        return false;
    }

    void dfs(std::size_t v, std::size_t count) {
        if (stopped_ || over_budget_) return;
        if (++nodes_ > opts_.budget) {
            over_budget_ = true;
            return;
        }
        const std::size_t s = graph_.identity();
        if (count == n_) {
            for (const auto& a : arcs_[v]) {
                if (a.to != s) continue;
                path_.push_back({graph_.names()[a.sym], a.sign});
                if (visit_(path_)) stopped_ = true;
                path_.pop_back();
                if (stopped_) return;
            }
            return;
        }
        if (!rest_connected(v)) return;
        std::vector<std::pair<std::size_t, const Arc*>> cand;
        for (const auto& a : arcs_[v])
            if (!visited_[a.to]) cand.emplace_back(free_degree(a.to) * 64 + (opts_.seed ? rng_() % 64 : 0), &a);
        std::stable_sort(cand.begin(), cand.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (const auto& [deg, a] : cand) {
            if (visited_[a->to]) continue;
            visited_[a->to] = 1;
            --unvisited_;
            path_.push_back({graph_.names()[a->sym], a->sign});
            if (!dead_end_after(v, a->to) && start_reachable(a->to, count + 1)) dfs(a->to, count + 1);
            path_.pop_back();
            visited_[a->to] = 0;
            ++unvisited_;
            if (stopped_ || over_budget_) return;
        }
    }

    // the unvisited vertices must all be reachable from the current end
    bool rest_connected(std::size_t cur) {
        if (opts_.directed) return true;
        ++stamp_;
        if (mark_.size() != n_) mark_.assign(n_, 0);
        stack_.assign(1, cur);
        mark_[cur] = stamp_;
        std::size_t reached = 0;
        while (!stack_.empty()) {
            std::size_t u = stack_.back();
            stack_.pop_back();
            for (const auto& a : arcs_[u])
                if (!visited_[a.to] && mark_[a.to] != stamp_) {
                    mark_[a.to] = stamp_;
                    ++reached;
                    stack_.push_back(a.to);
                }
        }
        return reached == unvisited_;
    }

    bool start_reachable(std::size_t cur, std::size_t count) const {
        if (count == n_) return true;
        const std::size_t s = graph_.identity();
        // the start needs an unvisited in-neighbour to close the cycle later
        for (const auto& a : in_[s])
            if (!visited_[a.to] || a.to == cur) return true;
        return false;
    }

    const CayleyGraph& graph_;
    const SearchOptions& opts_;
    const std::function<bool(const std::vector<Step>&)>& visit_;
    std::size_t n_;
    std::vector<std::vector<Arc>> arcs_, in_;
    std::vector<char> visited_;
    std::vector<std::uint32_t> mark_;
    std::vector<std::size_t> stack_;
    std::uint32_t stamp_ = 0;
    std::size_t unvisited_ = 0;
    std::mt19937_64 rng_;
    std::vector<Step> path_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
    bool over_budget_ = false;
};

} // namespace

EnumerationStats enumerate_hamiltonian_cycles(const CayleyGraph& graph, const SearchOptions& opts,
                                              const std::function<bool(const std::vector<Step>&)>& visit) {
    Searcher s(graph, opts, visit);
    return s.run();
}

SearchResult brute_force_hamiltonian(const CayleyGraph& graph, const SearchOptions& opts) {
    WalkSpec found;
    bool ok = false;
    std::uint64_t spent = 0;
    std::uint64_t slice = 20'000;
    for (std::uint64_t round = 0; spent < opts.budget; ++round, slice *= 2) {
        SearchOptions o = opts;
        o.budget = std::min(slice, opts.budget - spent);
        o.seed = round == 0 ? opts.seed : opts.seed * 0x9e3779b97f4a7c15ULL + round;
        auto stats = enumerate_hamiltonian_cycles(graph, o, [&](const std::vector<Step>& steps) {
            found.steps = steps;
            ok = true;
            return true;
        });
        spent += std::max<std::uint64_t>(stats.nodes, 1);
        if (ok) return found;
        if (stats.complete) return Exhausted{spent};
    }
    return BudgetExceeded{spent};
}

SearchResult brute_force_hamiltonian(const Group& g, const GenSet& s, const SearchOptions& opts) {
    return brute_force_hamiltonian(CayleyGraph::of_group(g, s), opts);
}

} // namespace hamcay
