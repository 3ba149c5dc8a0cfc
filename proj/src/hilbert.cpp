#include "prolong/hilbert.hpp"

#include <algorithm>
#include <deque>

#include "prolong/macaulay.hpp"

namespace prolong::hilbert {

using lattice::AntichainSequence;
using lattice::Monomial;

StaircaseSet StaircaseSet::validate(std::size_t m, std::vector<Monomial> generators) {
    if (m < 1) throw std::invalid_argument("StaircaseSet: m must be >= 1");
    for (const auto& g : generators)
        if (g.dim() != m) throw DimensionMismatch("StaircaseSet generator");
    return StaircaseSet{m, std::move(generators)};
}

bool StaircaseSet::dominates(const Monomial& xi) const {
    for (const auto& g : generators)
        if (g.leq(xi)) return true;
    return false;
}

BigCount hilbert_samuel(const StaircaseSet& M, std::uint64_t d, std::uint64_t limit) {
    BigCount count = 0;
    for (const auto& xi : lattice::degree_slice(M.m, d, limit))
        if (!M.dominates(xi)) ++count;
    return count;
}

BigCount dominated_count(const StaircaseSet& M, std::uint64_t d, std::uint64_t limit) {
    BigCount count = 0;
    for (const auto& xi : lattice::degree_slice(M.m, d, limit))
        if (M.dominates(xi)) ++count;
    return count;
}

BigCount hilbert_samuel_prefix(const AntichainSequence& seq, std::size_t i,
                               std::uint64_t d, std::uint64_t limit) {
    std::size_t take = std::min(i, seq.size());
    BigCount total = 0;
    for (std::uint32_t l = 1; l <= seq.n(); ++l) {
        std::vector<Monomial> gens;
        for (std::size_t j = 0; j < take; ++j)
            if (seq[j].index == l) gens.push_back(seq[j].xi);
        total += hilbert_samuel(StaircaseSet{seq.m(), std::move(gens)}, d, limit);
    }
    return total;
}

bool connected_below(const Monomial& x, const Monomial& z, const Monomial& tau,
                     std::uint64_t d, const StaircaseSet& M) {
    if (x == z) throw std::invalid_argument("connected_below: points must be distinct");
    if (!x.lt(tau) || !z.lt(tau))
        throw std::invalid_argument("connected_below: points must be strictly below tau");
    if (tau.degree() <= d + 1)
        throw std::invalid_argument("connected_below: deg tau must exceed d+1");
    auto member = [&](const Monomial& v) {
        return std::find(M.generators.begin(), M.generators.end(), v) != M.generators.end();
    };
    if (x.degree() > d || z.degree() > d || !member(x) || !member(z))
        throw std::invalid_argument("connected_below: points must lie in M within degree d");

    // Reachability over members of M of degree <= d strictly below tau,
    // stepping only across pairs whose least upper bound has degree <= d+1.
    std::vector<Monomial> verts;
    for (const auto& g : M.generators)
        if (g.degree() <= d && g.lt(tau) &&
            std::find(verts.begin(), verts.end(), g) == verts.end())
            verts.push_back(g);
    auto vid = [&](const Monomial& v) {
        return std::find(verts.begin(), verts.end(), v) - verts.begin();
    };
    std::vector<char> seen(verts.size(), 0);
    std::deque<std::size_t> queue{static_cast<std::size_t>(vid(x))};
    seen[vid(x)] = 1;
    std::size_t target = vid(z);
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        if (cur == target) return true;
        for (std::size_t other = 0; other < verts.size(); ++other) {
            if (seen[other]) continue;
            if (lattice::lub(verts[cur], verts[other]).degree() <= d + 1) {
                seen[other] = 1;
                queue.push_back(other);
            }
        }
    }
    return false;
}

std::optional<std::pair<Monomial, Monomial>> find_disconnected_pair(const StaircaseSet& M,
                                                                    std::uint64_t d,
                                                                    std::uint64_t limit) {
    std::vector<Monomial> members;
    for (const auto& g : M.generators)
        if (g.degree() <= d &&
            std::find(members.begin(), members.end(), g) == members.end())
            members.push_back(g);
    if (members.size() > limit) throw EnumerationLimit("find_disconnected_pair");
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
        return lattice::orderly_less(b, a);
    });
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const Monomial& xi = members[i];
            const Monomial& zeta = members[j];
            if (xi.leq(zeta) || zeta.leq(xi)) continue;  // comparable pairs never witness
            Monomial tau = lattice::lub(xi, zeta);
            if (tau.degree() <= d + 1) continue;  // direct edge
            if (!connected_below(xi, zeta, tau, d, M)) return std::make_pair(xi, zeta);
        }
    }
    return std::nullopt;
}

std::pair<BigCount, BigCount> growth_gap(const StaircaseSet& M, std::uint64_t d,
                                         std::uint64_t limit) {
    if (d < 1) throw std::invalid_argument("growth_gap: d must be >= 1");
    BigCount next = hilbert_samuel(M, d + 1, limit);
    BigCount ceiling = macaulay::upper_shadow(hilbert_samuel(M, d, limit), d);
    return {next, ceiling};
}

}  // namespace prolong::hilbert
