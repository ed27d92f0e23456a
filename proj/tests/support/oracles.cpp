#include "oracles.hpp"

#include <set>
#include <stdexcept>

namespace oracle {

Rewriter::Word Rewriter::word_of(const Element& x) const {
    Word w;
    for (std::size_t i = 0; i < x.q.size(); ++i)
        if (x.q[i]) w.emplace_back(i, x.q[i]);
    if (x.z) w.emplace_back(p_.rank(), x.z);
    return w;
}

Element Rewriter::collect(Word w) const {
    const std::size_t k = p_.rank();
    const i64 m = p_.m;
    for (std::size_t guard = 0; guard < 50'000'000; ++guard) {
        // tidy: merge equal neighbours, reduce powers, drop empties, until stable
        for (bool changed = true; changed;) {
            changed = false;
            Word t;
            for (auto [l, e] : w) {
                if (e == 0) {
                    changed = true;
                    continue;
                }
                if (!t.empty() && t.back().first == l) {
                    t.back().second += e;
                    changed = true;
                } else {
                    t.emplace_back(l, e);
                }
                auto& b = t.back();
                if (b.first == k) {
                    if (b.second >= m) { b.second %= m; changed = true; }
                } else if (b.second >= p_.e[b.first]) {
                    b.second -= p_.e[b.first];
                    i64 tail = p_.t[b.first];
                    if (tail) t.emplace_back(k, tail);
                    changed = true;
                }
            }
            w.swap(t);
        }
        std::size_t p = 0;
        while (p + 1 < w.size() && w[p].first < w[p + 1].first) ++p;
        if (p + 1 >= w.size()) {
            Element out{std::vector<i64>(k, 0), 0};
            for (auto [l, e] : w) {
                if (l == k)
                    out.z = e % m;
                else
                    out.q[l] = e;
            }
            return out;
        }
        auto [hl, he] = w[p];
        auto [gl, ge] = w[p + 1];
        Word repl;
        if (hl == k) {
            // gamma^u g_i -> g_i gamma^{u r_i}
            repl.emplace_back(gl, 1);
            repl.emplace_back(k, he * p_.r[gl] % m);
        } else {
            // g_j g_i -> g_i g_j gamma^{-c_ij}
            if (he > 1) repl.emplace_back(hl, he - 1);
            repl.emplace_back(gl, 1);
            repl.emplace_back(hl, 1);
            i64 c = ((-p_.c[gl][hl]) % m + m) % m;
            if (c) repl.emplace_back(k, c);
        }
        if (ge > 1) repl.emplace_back(gl, ge - 1);
        Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        next.insert(next.end(), repl.begin(), repl.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
        w.swap(next);
    }
    throw std::runtime_error("rewriting did not terminate");
}

Element Rewriter::multiply(const Element& x, const Element& y) const {
    Word w = word_of(x);
    Word wy = word_of(y);
    w.insert(w.end(), wy.begin(), wy.end());
    return collect(w);
}

Element step_product(const hamcay::Group& g, const Element& x, const Element& y) {
    Element cur = x;
    for (std::size_t i = 0; i < y.q.size(); ++i)
        for (i64 b = 0; b < y.q[i]; ++b) g.right_mul_gen_power(cur.q, cur.z, i, 1);
    cur.z = (cur.z + y.z) % g.gamma_order();
    return cur;
}

std::size_t commutator_closure_order(const hamcay::Group& g) {
    std::set<std::size_t> comms;
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t y = 0; y < g.order(); ++y) comms.insert(g.index(g.commutator(g.element(x), g.element(y))));
    std::vector<Element> gens;
    for (auto c : comms) gens.push_back(g.element(c));
    return hamcay::subgroup_closure(g, gens).size();
}

i64 iterate_order(const hamcay::Group& g, const Element& x) {
    Element y = x;
    i64 n = 1;
    while (!(y == g.identity())) {
        y = g.mul(y, x);
        ++n;
    }
    return n;
}

Element rewrite_walk_product(const Rewriter& rw, const hamcay::Group& g, const hamcay::GenSet& s,
                             const std::vector<hamcay::Step>& steps) {
    Element x = g.identity();
    for (const auto& st : steps) {
        const Element& y = s.elems[static_cast<std::size_t>(s.find(st.sym))];
        if (st.sign > 0) {
            x = rw.multiply(x, y);
        } else {
            // y^-1 = y^{ord-1}
            i64 o = iterate_order(g, y);
            for (i64 i = 1; i < o; ++i) x = rw.multiply(x, y);
        }
    }
    return x;
}

} // namespace oracle
