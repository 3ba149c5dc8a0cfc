#include "prolong/consistency.hpp"

#include <algorithm>
#include <deque>

namespace prolong::consistency {

using lattice::AntichainSequence;
using lattice::IndexedMonomial;
using lattice::Monomial;

namespace {

// Per-index view of the elements of degree <= p.
struct Level {
    std::vector<std::vector<Monomial>> by_index;  // [index-1] -> monomials

    Level(const AntichainSequence& seq, std::uint64_t p) : by_index(seq.n()) {
        for (const auto& e : seq)
            if (e.degree() <= p) by_index[e.index - 1].push_back(e.xi);
    }
};

bool some_below(const std::vector<Monomial>& pool, const Monomial& bound) {
    for (const auto& b : pool)
        if (b.leq(bound)) return true;
    return false;
}

// Chain search below tau within one index: vertices are pool members
// componentwise <= tau; edges join pairs whose lub has degree <= p. A
// source must be able to stand at tau - e_i (coordinate i strictly below),
// a target at tau - e_j. Returns a connecting vertex path when one exists.
std::optional<std::vector<Monomial>> find_chain(const std::vector<Monomial>& pool,
                                                const Monomial& tau, std::size_t i,
                                                std::size_t j, std::uint64_t p) {
    std::vector<Monomial> verts;
    for (const auto& v : pool)
        if (v.leq(tau) && v != tau) verts.push_back(v);
    std::sort(verts.begin(), verts.end(), [](const auto& a, const auto& b) {
        return lattice::orderly_less(a, b);
    });

    std::vector<std::size_t> parent(verts.size(), SIZE_MAX);
    std::vector<char> seen(verts.size(), 0);
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < verts.size(); ++v)
        if (verts[v][i - 1] < tau[i - 1]) {
            seen[v] = 1;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        if (verts[cur][j - 1] < tau[j - 1]) {
            std::vector<Monomial> chain;
            for (std::size_t v = cur; v != SIZE_MAX; v = parent[v])
                chain.push_back(verts[v]);
            std::reverse(chain.begin(), chain.end());
            return chain;
        }
        for (std::size_t other = 0; other < verts.size(); ++other) {
            if (seen[other]) continue;
            if (lattice::lub(verts[cur], verts[other]).degree() <= p) {
                seen[other] = 1;
                parent[other] = cur;
                queue.push_back(other);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

bool consistent_at(const AntichainSequence& seq, std::uint64_t p, Obligation* first_failure,
                   std::vector<Obligation>* chains_out) {
    std::size_t m = seq.m();
    Level level(seq, p);
    for (std::uint32_t idx = 1; idx <= seq.n(); ++idx) {
        const auto& pool = level.by_index[idx - 1];
        // Deduplicated lubs of distinct pairs, in orderly order for
        // deterministic certificates.
        std::vector<Monomial> lubs;
        for (std::size_t a = 0; a < pool.size(); ++a)
            for (std::size_t b = a + 1; b < pool.size(); ++b) {
                Monomial t = lattice::lub(pool[a], pool[b]);
                if (t.degree() <= p) continue;
                if (std::find(lubs.begin(), lubs.end(), t) == lubs.end())
                    lubs.push_back(std::move(t));
            }
        std::sort(lubs.begin(), lubs.end(), [](const auto& a, const auto& b) {
            return lattice::orderly_less(a, b);
        });
        for (const auto& tau : lubs) {
            for (std::size_t i = 1; i < m; ++i) {
                if (tau[i - 1] == 0) continue;
                for (std::size_t j = i + 1; j <= m; ++j) {
                    if (tau[j - 1] == 0) continue;
                    if (!some_below(pool, tau.minus_unit(i)) ||
                        !some_below(pool, tau.minus_unit(j)))
                        continue;
                    auto chain = find_chain(pool, tau, i, j, p);
                    if (!chain) {
                        if (first_failure) *first_failure = {tau, idx, i, j, {}};
                        return false;
                    }
                    if (chains_out)
                        chains_out->push_back({tau, idx, i, j, std::move(*chain)});
                }
            }
        }
    }
    return true;
}

ConsistencyResult min_consistent_level(const AntichainSequence& seq, std::uint64_t start) {
    std::uint64_t h = std::max(start, seq.max_degree());
    ConsistencyResult result;
    result.start = start;
    Obligation failure;
    for (std::uint64_t p = start;; ++p) {
        std::vector<Obligation> chains;
        if (consistent_at(seq, p, &failure, &chains)) {
            result.level = p;
            result.obligations = std::move(chains);
            if (p > start)
                result.failure_witness = FailureWitness{p - 1, failure};
            return result;
        }
        if (p >= 2 * h)
            throw std::logic_error("min_consistent_level: search passed the 2h bound");
    }
}

bool leaders_consistent(const AntichainSequence& minimal_leaders, std::uint64_t r) {
    if (minimal_leaders.max_degree() > r)
        throw std::invalid_argument("leaders_consistent: leader of degree above the length");
    return consistent_at(minimal_leaders, r);
}

}  // namespace prolong::consistency
