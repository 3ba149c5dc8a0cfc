#ifndef PROLONG_LATTICE_HPP
#define PROLONG_LATTICE_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "prolong/bigint.hpp"

namespace prolong::lattice {

/// A point of N^m: the exponent vector of a derivative multi-index.
/// Entries are machine integers; everything at this level is desk scale.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> entries);
    static Monomial zero(std::size_t m);
    /// Unit vector with a 1 in (1-based) coordinate k.
    static Monomial unit(std::size_t m, std::size_t k);

    std::size_t dim() const { return entries_.size(); }
    std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::uint32_t>& entries() const { return entries_; }

    std::uint64_t degree() const;

    bool operator==(const Monomial&) const = default;
    /// Product (componentwise) order; distinct dimensions never compare.
    bool leq(const Monomial& other) const;
    bool lt(const Monomial& other) const { return leq(other) && *this != other; }

    Monomial plus_unit(std::size_t k) const;
    /// Componentwise decrement in coordinate k; requires entry > 0.
    Monomial minus_unit(std::size_t k) const;

private:
    std::vector<std::uint32_t> entries_;
};

/// Componentwise maximum.
Monomial lub(const Monomial& a, const Monomial& b);

/// Total (degree, entries) left-lex comparison: the canonical orderly
/// ranking restricted to one copy of N^m.
std::strong_ordering orderly_cmp(const Monomial& a, const Monomial& b);

/// A monomial tagged with which of the n indeterminates it differentiates.
struct IndexedMonomial {
    Monomial xi;
    std::uint32_t index = 1;  // in 1..n

    std::uint64_t degree() const { return xi.degree(); }
    bool operator==(const IndexedMonomial&) const = default;
};

/// Product order: comparable only within the same index.
bool leq(const IndexedMonomial& a, const IndexedMonomial& b);

/// Canonical orderly ranking on N^m x {1..n}: left-lex on
/// (degree, index, entries).
std::strong_ordering orderly_cmp(const IndexedMonomial& a, const IndexedMonomial& b);

inline bool orderly_less(const IndexedMonomial& a, const IndexedMonomial& b) {
    return orderly_cmp(a, b) == std::strong_ordering::less;
}
inline bool orderly_less(const Monomial& a, const Monomial& b) {
    return orderly_cmp(a, b) == std::strong_ordering::less;
}

/// All degree-d monomials of N^m, sorted descending in the orderly ranking
/// so that the a largest ("segments") are prefixes. Count is
/// binomial(m-1+d, d); exceeding `limit` raises EnumerationLimit.
std::vector<Monomial> degree_slice(std::size_t m, std::uint64_t d,
                                   std::uint64_t limit = 1u << 22);

/// An ordered list of pairwise incomparable indexed monomials.
class AntichainSequence {
public:
    /// Validates pairwise incomparability and uniform dimensions; throws
    /// ComparablePair / DimensionMismatch.
    static AntichainSequence validate(std::vector<IndexedMonomial> elements,
                                      std::size_t m, std::uint32_t n);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const IndexedMonomial& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<IndexedMonomial>& elements() const { return elements_; }
    std::size_t m() const { return m_; }
    std::uint32_t n() const { return n_; }

    std::uint64_t max_degree() const;  // 0 when empty

    /// Subsequence of elements of degree <= p, order preserved.
    AntichainSequence truncate(std::uint64_t p) const;

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

private:
    AntichainSequence(std::vector<IndexedMonomial> elements, std::size_t m, std::uint32_t n)
        : elements_(std::move(elements)), m_(m), n_(n) {}
    std::vector<IndexedMonomial> elements_;
    std::size_t m_ = 0;
    std::uint32_t n_ = 1;
};

/// All least upper bounds of distinct same-index pairs, deduplicated and
/// sorted ascending in the orderly ranking.
std::vector<IndexedMonomial> pairwise_lubs(const AntichainSequence& seq);

}  // namespace prolong::lattice

#endif
