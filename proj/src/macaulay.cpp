#include "prolong/macaulay.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace prolong::macaulay {

using lattice::Monomial;

BigCount BinomialRep::reconstruct() const {
    BigCount sum = 0;
    std::uint64_t t = d;
    for (const auto& k : ks) sum += binomial(k, BigCount(t--));
    return sum;
}

namespace {

// C(n, k) <= bound, decided with early exit and the symmetric reduction so
// probes stay cheap even for huge n.
bool binomial_le(const BigCount& n, const BigCount& k, const BigCount& bound) {
    if (k > n) return true;  // value 0
    BigCount kk = std::min(k, BigCount(n - k));
    if (!kk.fits_ulong_p()) return false;  // astronomically large
    std::uint64_t ku = kk.get_ui();
    BigCount r = 1;
    for (std::uint64_t i = 1; i <= ku; ++i) {
        r *= n - static_cast<unsigned long>(ku - i);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
        if (r > bound) return false;  // stepwise values only grow
    }
    return r <= bound;
}

// Largest k >= t with C(k, t) <= rem, for rem >= 1.
BigCount find_max_k(const BigCount& rem, std::uint64_t t) {
    BigCount base = t;
    BigCount off = 1;
    while (binomial_le(base + off, base, rem)) off <<= 1;
    // Invariant: C(t + off/2, t) <= rem < C(t + off, t).
    BigCount lo = off >> 1, hi = off;
    while (hi - lo > 1) {
        BigCount mid = (lo + hi) >> 1;
        if (binomial_le(base + mid, base, rem))
            lo = mid;
        else
            hi = mid;
    }
    return base + lo;
}

}  // namespace

BinomialRep binomial_rep(const BigCount& a, std::uint64_t d, std::uint64_t term_limit) {
    if (sgn(a) <= 0) throw std::invalid_argument("binomial_rep: a must be >= 1");
    if (d < 1) throw std::invalid_argument("binomial_rep: d must be >= 1");
    BinomialRep rep;
    rep.d = d;
    BigCount rem = a;
    std::uint64_t t = d;
    while (sgn(rem) > 0) {
        if (rep.ks.size() >= term_limit) throw EnumerationLimit("binomial_rep");
        BigCount k = find_max_k(rem, t);
        rem -= binomial(k, BigCount(t));
        rep.ks.push_back(std::move(k));
        if (t == 0) throw std::logic_error("binomial_rep: ran past index 1");
        --t;
    }
    return rep;
}

BigCount upper_shadow(const BigCount& a, std::uint64_t d) {
    if (sgn(a) < 0) throw std::invalid_argument("upper_shadow: a must be >= 0");
    if (sgn(a) == 0) return 0;
    if (d < 1) throw std::invalid_argument("upper_shadow: d must be >= 1");
    BigCount shadow = 0;
    BigCount rem = a;
    std::uint64_t t = d;
    while (sgn(rem) > 0) {
        // A remainder of at most t yields a run of unit terms C(t',t'),
        // each of which shifts to C(t'+1,t'+1) = 1.
        if (rem <= t) {
            shadow += rem;
            break;
        }
        BigCount k = find_max_k(rem, t);
        shadow += binomial(k + 1, BigCount(t + 1));
        rem -= binomial(k, BigCount(t));
        --t;
    }
    return shadow;
}

std::vector<Monomial> segment(const BigCount& a, std::uint64_t d, std::size_t m,
                              std::uint64_t limit) {
    if (sgn(a) < 0) throw std::invalid_argument("segment: a must be >= 0");
    BigCount slice_size = binomial(BigCount(m) - 1 + d, BigCount(m) - 1);
    if (a > slice_size) throw std::invalid_argument("segment: a exceeds slice size");
    auto slice = lattice::degree_slice(m, d, limit);
    slice.resize(a.get_ui());
    return slice;
}

BigCount macaulay_growth(const BigCount& a, std::size_t m, std::optional<std::uint64_t> d_opt) {
    if (sgn(a) < 0) throw std::invalid_argument("macaulay_growth: a must be >= 0");
    if (m < 1) throw std::invalid_argument("macaulay_growth: m must be >= 1");
    if (sgn(a) == 0) return 0;
    if (m == 1) {
        if (a > 1) throw std::invalid_argument("macaulay_growth: a exceeds every slice of N^1");
        return 1;
    }
    std::uint64_t d;
    if (d_opt) {
        d = *d_opt;
        if (d < 1) throw std::invalid_argument("macaulay_growth: d must be >= 1");
        if (a > binomial(BigCount(m) - 1 + d, BigCount(m) - 1))
            throw std::invalid_argument("macaulay_growth: a exceeds slice size at d");
    } else {
        // Least admissible degree: slice sizes are strictly increasing in d
        // for m >= 2.
        auto too_small = [&](const BigCount& dd) {
            return binomial_le(BigCount(m) - 1 + dd, BigCount(m) - 1, a - 1);
        };
        BigCount lo = 0, hi = 1;
        while (too_small(hi)) { lo = hi; hi <<= 1; }
        while (hi - lo > 1) {
            BigCount mid = (lo + hi) >> 1;
            if (too_small(mid)) lo = mid; else hi = mid;
        }
        d = to_u64(hi, "macaulay_growth: admissible degree");
    }
    BigCount b = binomial(BigCount(m) - 1 + d, BigCount(m) - 1) - a;
    return binomial(BigCount(m) + d, BigCount(m) - 1) - upper_shadow(b, d);
}

namespace {
bool dominates_some(const Monomial& eta, const std::vector<Monomial>& M) {
    for (const auto& zeta : M)
        if (zeta.leq(eta)) return true;
    return false;
}
}  // namespace

bool is_compressed(const std::vector<Monomial>& M, std::uint64_t limit) {
    if (M.empty()) return true;
    if (M.size() > limit) throw EnumerationLimit("is_compressed");
    std::size_t m = M.front().dim();
    std::set<std::uint64_t> degrees;
    for (const auto& xi : M) {
        if (xi.dim() != m) throw DimensionMismatch("is_compressed");
        degrees.insert(xi.degree());
    }
    for (std::uint64_t d : degrees) {
        auto slice = lattice::degree_slice(m, d, limit);
        for (const auto& xi : M) {
            if (xi.degree() != d) continue;
            for (const auto& eta : slice) {
                if (!lattice::orderly_less(xi, eta)) continue;
                if (!dominates_some(eta, M)) return false;
            }
        }
    }
    return true;
}

bool is_d_segment(const std::vector<Monomial>& M, std::uint64_t d, std::uint64_t limit) {
    if (M.empty()) return true;
    if (M.size() > limit) throw EnumerationLimit("is_d_segment");
    std::size_t m = M.front().dim();
    for (const auto& xi : M) {
        if (xi.dim() != m) throw DimensionMismatch("is_d_segment");
        if (xi.degree() != d) return false;
    }
    auto slice = lattice::degree_slice(m, d, limit);
    auto in_M = [&](const Monomial& eta) {
        return std::find(M.begin(), M.end(), eta) != M.end();
    };
    for (const auto& xi : M)
        for (const auto& eta : slice)
            if (lattice::orderly_less(xi, eta) && !in_M(eta)) return false;
    return true;
}

}  // namespace prolong::macaulay
