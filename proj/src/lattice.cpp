#include "prolong/lattice.hpp"

#include <algorithm>
#include <limits>

namespace prolong::lattice {

Monomial::Monomial(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("Monomial: m must be >= 1");
}

Monomial Monomial::zero(std::size_t m) {
    return Monomial(std::vector<std::uint32_t>(m, 0));
}

Monomial Monomial::unit(std::size_t m, std::size_t k) {
    if (k < 1 || k > m) throw std::invalid_argument("Monomial::unit: coordinate out of range");
    std::vector<std::uint32_t> e(m, 0);
    e[k - 1] = 1;
    return Monomial(std::move(e));
}

std::uint64_t Monomial::degree() const {
    std::uint64_t sum = 0;
    for (std::uint32_t u : entries_) {
        if (sum > std::numeric_limits<std::uint64_t>::max() - u)
            throw std::overflow_error("Monomial::degree overflow");
        sum += u;
    }
    return sum;
}

bool Monomial::leq(const Monomial& other) const {
    if (dim() != other.dim()) throw DimensionMismatch("Monomial::leq");
    for (std::size_t i = 0; i < dim(); ++i)
        if (entries_[i] > other.entries_[i]) return false;
    return true;
}

Monomial Monomial::plus_unit(std::size_t k) const {
    Monomial r = *this;
    if (r.entries_[k - 1] == std::numeric_limits<std::uint32_t>::max())
        throw std::overflow_error("Monomial::plus_unit overflow");
    ++r.entries_[k - 1];
    return r;
}

Monomial Monomial::minus_unit(std::size_t k) const {
    Monomial r = *this;
    if (r.entries_[k - 1] == 0)
        throw std::invalid_argument("Monomial::minus_unit: zero coordinate");
    --r.entries_[k - 1];
    return r;
}

Monomial lub(const Monomial& a, const Monomial& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("lub");
    std::vector<std::uint32_t> e(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

std::strong_ordering orderly_cmp(const Monomial& a, const Monomial& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("orderly_cmp");
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

bool leq(const IndexedMonomial& a, const IndexedMonomial& b) {
    return a.index == b.index && a.xi.leq(b.xi);
}

std::strong_ordering orderly_cmp(const IndexedMonomial& a, const IndexedMonomial& b) {
    if (a.xi.dim() != b.xi.dim()) throw DimensionMismatch("orderly_cmp");
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.index <=> b.index; c != 0) return c;
    for (std::size_t i = 0; i < a.xi.dim(); ++i)
        if (auto c = a.xi[i] <=> b.xi[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

namespace {
void emit_slice(std::vector<std::uint32_t>& buf, std::size_t pos, std::uint64_t rem,
                std::vector<Monomial>& out) {
    if (pos + 1 == buf.size()) {
        buf[pos] = static_cast<std::uint32_t>(rem);
        out.emplace_back(buf);
        return;
    }
    // Descending first entry gives descending orderly ranking overall.
    for (std::uint64_t u = rem + 1; u-- > 0;) {
        buf[pos] = static_cast<std::uint32_t>(u);
        emit_slice(buf, pos + 1, rem - u, out);
    }
}
}  // namespace

std::vector<Monomial> degree_slice(std::size_t m, std::uint64_t d, std::uint64_t limit) {
    if (m < 1) throw std::invalid_argument("degree_slice: m must be >= 1");
    if (d > std::numeric_limits<std::uint32_t>::max())
        throw EnumerationLimit("degree_slice: degree too large");
    BigCount count = binomial(BigCount(m) - 1 + d, BigCount(d));
    if (count > limit) throw EnumerationLimit("degree_slice");
    std::vector<Monomial> out;
    out.reserve(count.get_ui());
    std::vector<std::uint32_t> buf(m, 0);
    emit_slice(buf, 0, d, out);
    return out;
}

AntichainSequence AntichainSequence::validate(std::vector<IndexedMonomial> elements,
                                              std::size_t m, std::uint32_t n) {
    if (m < 1 || n < 1) throw std::invalid_argument("AntichainSequence: m, n must be >= 1");
    for (const auto& e : elements) {
        if (e.xi.dim() != m) throw DimensionMismatch("AntichainSequence element");
        if (e.index < 1 || e.index > n)
            throw std::invalid_argument("AntichainSequence: index out of range");
    }
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j)
            if (leq(elements[i], elements[j]) || leq(elements[j], elements[i]))
                throw ComparablePair(i, j);
    return AntichainSequence(std::move(elements), m, n);
}

std::uint64_t AntichainSequence::max_degree() const {
    std::uint64_t d = 0;
    for (const auto& e : elements_) d = std::max(d, e.degree());
    return d;
}

AntichainSequence AntichainSequence::truncate(std::uint64_t p) const {
    std::vector<IndexedMonomial> kept;
    for (const auto& e : elements_)
        if (e.degree() <= p) kept.push_back(e);
    return AntichainSequence(std::move(kept), m_, n_);
}

std::vector<IndexedMonomial> pairwise_lubs(const AntichainSequence& seq) {
    std::vector<IndexedMonomial> out;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i].index != seq[j].index || seq[i].xi == seq[j].xi) continue;
            out.push_back({lub(seq[i].xi, seq[j].xi), seq[i].index});
        }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return orderly_less(a, b);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace prolong::lattice
