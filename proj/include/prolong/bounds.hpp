#ifndef PROLONG_BOUNDS_HPP
#define PROLONG_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prolong/bigint.hpp"
#include "prolong/growth.hpp"
#include "prolong/lattice.hpp"

namespace prolong::bounds {

/// Ackermann function A(x, y) with the standard double recursion; closed
/// forms for x <= 3, memoized recursion above.
BigCount ackermann(const BigCount& x, const BigCount& y);

/// The n-fold iterate A_n(x, y): A(x, y-1) - 1 for n = 1, then
/// A(x, A_{n-1}(x, y) - 1) - 1. Requires n >= 1, y >= 1.
BigCount ackermann_iterated(std::uint32_t n, const BigCount& x, const BigCount& y);

/// Successor of one element of the greedy maximal antichain: decrement the
/// last nonzero coordinate before the final one, deposit gap + u_m + 1 just
/// after it, clear the rest. Returns nothing when prev is terminal
/// (0,...,0,u_m).
std::optional<lattice::Monomial> greedy_next(const lattice::Monomial& prev,
                                             std::uint64_t gap);

struct PsiOptions {
    bool allow_fast_paths = true;      // run skipping and closed forms
    std::uint64_t step_budget = 1u << 22;  // loop iterations, not skipped steps
};

/// Length of the greedy maximal antichain of one copy of N^m whose degree
/// growth is i -> f(shift + i). Iterative with two accelerations: a whole
/// countdown of the (m-1)-st coordinate collapses to one step, and for
/// m = 3 with eventually-unit gaps the remaining trajectory has a closed
/// form. Lengths are Ackermann-sized, hence the BigCount result.
BigCount greedy_length(const GrowthFunction& f, const BigCount& shift, std::size_t m,
                       const PsiOptions& options = {});

/// Maximal length of an antichain sequence of N^m x {1..n} with degree
/// growth bounded by f: copies are consumed from index n downward, each
/// contributing a greedy run of the shifted growth function.
BigCount max_antichain_length(const GrowthFunction& f, std::size_t m, std::uint32_t n,
                              const PsiOptions& options = {});

/// The spliced growth function g_n driving the n-indeterminate greedy
/// antichain: stage j restarts at r_j = (cumulative length so far) + r - (j-1).
GrowthFunction staged_growth(const BigCount& r, std::size_t m, std::uint32_t n,
                             const PsiOptions& options = {});

/// The greedy maximal antichain itself, copy by copy, at desk scale.
lattice::AntichainSequence greedy_antichain(const GrowthFunction& f, std::size_t m,
                                            std::uint32_t n,
                                            std::uint64_t length_limit = 100000);

/// Structured result of a bound computation: the value, the identity used
/// to obtain it, and named intermediate quantities.
struct BoundReport {
    BigCount value;
    std::string formula_path;
    std::vector<std::pair<std::string, BigCount>> intermediates;

    const BigCount* find(const std::string& name) const;
};

/// C_{r,m}^n, the least prolongation length guaranteeing regular
/// realizations: base cases C_{0,m}^n = 0 and C_{r,1}^n = r, the
/// single-indeterminate recursion C_{r,m}^1 = A(m-1, C_{r-1,m}^1), and
/// composition in the length for n > 1.
BoundReport prolongation_bound(const BigCount& r, std::size_t m, const BigCount& n);

/// The older doubling-growth bound 2^(L+1) r with L the maximal antichain
/// length for growth 2^i r.
BoundReport legacy_doubling_bound(const BigCount& r, std::size_t m, std::uint32_t n);

/// The older two-derivation recursion: 2^(b_n+1) r with b_0 = 0 and
/// b_{i+1} = 2^(b_i+1) r + b_i + 1.
BoundReport legacy_recursive_bound_m2(const BigCount& r, std::uint32_t n);

/// The older Ackermann-shaped bound 2 A(m+3, 4r-1) (one indeterminate) or
/// ceil((2/n) A(m+5, 4nr-1)); astronomically large for every input.
BoundReport legacy_ackermann_bound(const BigCount& r, std::size_t m, std::uint32_t n);

/// Order bound for characteristic sets of minimal prime differential
/// ideals: equals the prolongation bound.
BoundReport characteristic_set_order_bound(const BigCount& r, std::size_t m,
                                           const BigCount& n);

/// Order bound n * C^m for finite-order components of a differential
/// algebraic variety.
BoundReport component_order_bound(const BigCount& r, std::size_t m, std::uint32_t n);

/// The order input T of the effective differential Nullstellensatz bound
/// (r+1 for one derivation, else the prolongation bound), with the slice
/// counts alpha_{T-1} and alpha_T.
BoundReport nullstellensatz_order_bound(const BigCount& r, std::size_t m, std::uint32_t n);

/// Exponents (e_V, e_W) of the Bezout-type degree estimate for the Zariski
/// closure of a differential algebraic variety. value = e_V; e_W and the
/// auxiliary quantities are reported as intermediates.
BoundReport bezout_exponents(std::uint32_t n, const BigCount& r, std::size_t m,
                             const BigCount& dim_v);

}  // namespace prolong::bounds

#endif
