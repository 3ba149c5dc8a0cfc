#ifndef PROLONG_MACAULAY_HPP
#define PROLONG_MACAULAY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "prolong/bigint.hpp"
#include "prolong/lattice.hpp"

namespace prolong::macaulay {

/// The d-th Macaulay (binomial) representation of a positive integer:
/// a = C(k_d,d) + C(k_{d-1},d-1) + ... + C(k_j,j) with
/// k_d > k_{d-1} > ... > k_j >= j >= 1.
struct BinomialRep {
    std::uint64_t d = 0;
    std::vector<BigCount> ks;  // k_d, k_{d-1}, ..., k_j

    std::uint64_t trailing_index() const { return d + 1 - ks.size(); }
    BigCount reconstruct() const;
};

/// Unique greedy representation; requires a >= 1, d >= 1. Representations
/// longer than `term_limit` raise EnumerationLimit (the tail of unit terms
/// can be as long as a itself).
BinomialRep binomial_rep(const BigCount& a, std::uint64_t d,
                         std::uint64_t term_limit = 1u << 20);

/// The growth operator a^<d>: replace each C(k,t) of the representation by
/// C(k+1,t+1). 0^<d> = 0. Works at any scale (does not materialize unit
/// tails).
BigCount upper_shadow(const BigCount& a, std::uint64_t d);

/// The a largest degree-d monomials of N^m in the orderly ranking.
std::vector<lattice::Monomial> segment(const BigCount& a, std::uint64_t d, std::size_t m,
                                       std::uint64_t limit = 1u << 22);

/// The dual growth operator a^(m): the size of the degree-(d+1) shadow of a
/// segment of a degree-d slice. Computed arithmetically via
/// b^<d> = C(m+d,d+1) - a^(m) with b the co-size of the segment; the
/// enumerated shadow is kept in the oracle as a cross-check. When d is
/// omitted the least admissible degree is used; the value is independent of
/// the choice.
BigCount macaulay_growth(const BigCount& a, std::size_t m,
                         std::optional<std::uint64_t> d = std::nullopt);

/// Whether equal-degree gaps of M are always filled from above: for
/// xi in M and xi orderly-below eta of the same degree, eta dominates some
/// member of M.
bool is_compressed(const std::vector<lattice::Monomial>& M, std::uint64_t limit = 100000);

/// Whether M is exactly an upward orderly-closed subset of the degree-d
/// slice.
bool is_d_segment(const std::vector<lattice::Monomial>& M, std::uint64_t d,
                  std::uint64_t limit = 100000);

}  // namespace prolong::macaulay

#endif
