#ifndef PROLONG_HILBERT_HPP
#define PROLONG_HILBERT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "prolong/bigint.hpp"
#include "prolong/lattice.hpp"

namespace prolong::hilbert {

/// A monomial staircase given by its generating set.
struct StaircaseSet {
    std::size_t m = 1;
    std::vector<lattice::Monomial> generators;

    static StaircaseSet validate(std::size_t m, std::vector<lattice::Monomial> generators);
    bool dominates(const lattice::Monomial& xi) const;  // xi >= some generator
};

/// H_M(d): degree-d monomials not above any generator.
BigCount hilbert_samuel(const StaircaseSet& M, std::uint64_t d,
                        std::uint64_t limit = 1u << 22);

/// S_M(d): degree-d monomials above some generator; complementary to
/// hilbert_samuel within the slice.
BigCount dominated_count(const StaircaseSet& M, std::uint64_t d,
                         std::uint64_t limit = 1u << 22);

/// H^i of an antichain sequence over N^m x {1..n}: degree-d indexed
/// monomials not above any of the first i elements. i past the end means
/// the whole sequence.
BigCount hilbert_samuel_prefix(const lattice::AntichainSequence& seq, std::size_t i,
                               std::uint64_t d, std::uint64_t limit = 1u << 22);

/// Whether x and z (distinct members of M of degree <= d, both strictly
/// below tau, deg tau > d+1) are joined by a chain inside M-below-tau whose
/// consecutive least upper bounds stay in degree <= d+1.
bool connected_below(const lattice::Monomial& x, const lattice::Monomial& z,
                     const lattice::Monomial& tau, std::uint64_t d,
                     const StaircaseSet& M);

/// First (in descending orderly ranking) pair of members of M of degree
/// <= d that fails to be connected below its own least upper bound; such a
/// pair forces strictly submaximal Hilbert-Samuel growth at d+1.
std::optional<std::pair<lattice::Monomial, lattice::Monomial>> find_disconnected_pair(
    const StaircaseSet& M, std::uint64_t d, std::uint64_t limit = 100000);

/// (H_M(d+1), H_M(d)^<d>): actual growth next to the Macaulay ceiling.
std::pair<BigCount, BigCount> growth_gap(const StaircaseSet& M, std::uint64_t d,
                                         std::uint64_t limit = 1u << 22);

}  // namespace prolong::hilbert

#endif
