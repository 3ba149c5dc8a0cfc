#include "prolong/bounds.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>

namespace prolong::bounds {

using lattice::AntichainSequence;
using lattice::IndexedMonomial;
using lattice::Monomial;

namespace {
std::mutex g_ack_mutex;
std::map<std::pair<std::uint64_t, BigCount>, BigCount> g_ack_memo;
}  // namespace

BigCount ackermann(const BigCount& x, const BigCount& y) {
    if (sgn(x) < 0 || sgn(y) < 0) throw std::invalid_argument("ackermann: negative input");
    check_cap(y, "ackermann second argument");
    if (x == 0) return y + 1;
    if (x == 1) return y + 2;
    if (x == 2) {
        BigCount v = 2 * y + 3;
        check_cap(v, "ackermann(2, y) = 2y + 3");
        return v;
    }
    if (x == 3) return pow2_checked(y + 3, "ackermann(3, y) = 2^(y+3) - 3") - 3;
    std::uint64_t xu = to_u64(x, "ackermann first argument");

    BigCount v;
    BigCount k = -1;
    {
        std::lock_guard<std::mutex> lock(g_ack_mutex);
        // Resume from the largest memoized second argument not above y.
        auto it = g_ack_memo.upper_bound({xu, y});
        if (it != g_ack_memo.begin()) {
            --it;
            if (it->first.first == xu) {
                k = it->first.second;
                v = it->second;
            }
        }
    }
    if (k < 0) {
        v = ackermann(x - 1, 1);  // A(x, 0)
        k = 0;
        std::lock_guard<std::mutex> lock(g_ack_mutex);
        g_ack_memo.insert({{xu, k}, v});
    }
    while (k < y) {
        v = ackermann(x - 1, v);
        ++k;
        std::lock_guard<std::mutex> lock(g_ack_mutex);
        g_ack_memo.insert({{xu, k}, v});
    }
    return v;
}

BigCount ackermann_iterated(std::uint32_t n, const BigCount& x, const BigCount& y) {
    if (n < 1) throw std::invalid_argument("ackermann_iterated: n must be >= 1");
    if (y < 1) throw std::invalid_argument("ackermann_iterated: y must be >= 1");
    BigCount v = ackermann(x, y - 1) - 1;
    for (std::uint32_t k = 2; k <= n; ++k) v = ackermann(x, v - 1) - 1;
    return v;
}

std::optional<Monomial> greedy_next(const Monomial& prev, std::uint64_t gap) {
    std::size_t m = prev.dim();
    std::size_t s = 0;
    for (std::size_t t = m - 1; t-- > 0;)
        if (prev[t] > 0) {
            s = t + 1;
            break;
        }
    if (s == 0) return std::nullopt;  // (0,...,0,u_m) is terminal
    std::vector<std::uint32_t> u(prev.entries());
    std::uint64_t deposit = gap + u[m - 1] + 1;
    if (deposit > std::numeric_limits<std::uint32_t>::max())
        throw ValueExceedsLimit("greedy_next coordinate");
    u[s - 1] -= 1;
    u[s] = static_cast<std::uint32_t>(deposit);
    for (std::size_t t = s + 1; t < m; ++t) u[t] = 0;
    return Monomial(std::move(u));
}

BigCount greedy_length(const GrowthFunction& f, const BigCount& shift, std::size_t m,
                       const PsiOptions& options) {
    if (m < 1) throw std::invalid_argument("greedy_length: m must be >= 1");
    if (m == 1) return 1;  // (f(1)) has no coordinate left of the last
    BigCount i = 1;
    std::vector<BigCount> u(m, 0);
    u[0] = f(shift + 1);
    std::uint64_t steps = 0;
    for (;;) {
        std::size_t s = 0;
        for (std::size_t t = m - 1; t-- > 0;)
            if (sgn(u[t]) > 0) {
                s = t + 1;
                break;
            }
        if (s == 0) return i;
        if (++steps > options.step_budget)
            throw ValueExceedsLimit("greedy_length step budget");
        check_cap(u[m - 1], "greedy_length coordinate");
        check_cap(i, "greedy_length index");

        if (options.allow_fast_paths && m == 3 && s == 1) {
            // With unit gaps from here on, each countdown of the first
            // coordinate evolves (t, 0, w) -> (t-1, 0, 2w+4) over w+3
            // steps, so the whole remainder telescopes.
            auto from = f.unit_gap_from();
            if (from && shift + i >= *from) {
                BigCount t = u[0], w = u[2];
                BigCount p2 = pow2_checked(t, "greedy_length closed form 2^t");
                i += (w + 4) * (p2 - 1) - t;
                u[0] = 0;
                u[2] = (w + 4) * p2 - 4;
                continue;
            }
        }
        if (options.allow_fast_paths && s == m - 1) {
            // Whole countdown of the pre-final coordinate in one step: the
            // final coordinate absorbs one unit plus one gap per step.
            BigCount k = u[m - 2];
            u[m - 1] += f(shift + i + k) - f(shift + i) + k;
            u[m - 2] = 0;
            i += k;
            continue;
        }
        BigCount gap = f(shift + i + 1) - f(shift + i);
        BigCount deposit = gap + u[m - 1] + 1;
        u[s - 1] -= 1;
        u[s] = deposit;
        for (std::size_t t = s + 1; t < m; ++t) u[t] = 0;
        i += 1;
    }
}

BigCount max_antichain_length(const GrowthFunction& f, std::size_t m, std::uint32_t n,
                              const PsiOptions& options) {
    if (n < 1) throw std::invalid_argument("max_antichain_length: n must be >= 1");
    BigCount total = 0;
    for (std::uint32_t j = 1; j <= n; ++j)
        total += greedy_length(f, total, m, options);
    return total;
}

GrowthFunction staged_growth(const BigCount& r, std::size_t m, std::uint32_t n,
                             const PsiOptions& options) {
    if (n < 1) throw std::invalid_argument("staged_growth: n must be >= 1");
    std::vector<BigCount> starts, boundaries;
    BigCount cum = 0;
    BigCount rj = r;
    for (std::uint32_t j = 1; j <= n; ++j) {
        starts.push_back(rj);
        cum += greedy_length(GrowthFunction::flat_then_arithmetic(rj), 0, m, options);
        if (j < n) boundaries.push_back(cum);
        rj = cum + r - j;
    }
    return GrowthFunction::staged(std::move(boundaries), std::move(starts));
}

AntichainSequence greedy_antichain(const GrowthFunction& f, std::size_t m, std::uint32_t n,
                                   std::uint64_t length_limit) {
    std::vector<IndexedMonomial> elements;
    BigCount shift = 0;
    for (std::uint32_t copy = 1; copy <= n; ++copy) {
        std::uint32_t index = n - copy + 1;
        BigCount i = 1;
        std::uint64_t first =
            to_u64(f(shift + 1), "greedy_antichain initial degree");
        if (first > std::numeric_limits<std::uint32_t>::max())
            throw ValueExceedsLimit("greedy_antichain initial degree");
        std::vector<std::uint32_t> e(m, 0);
        e[0] = static_cast<std::uint32_t>(first);
        Monomial cur(std::move(e));
        elements.push_back({cur, index});
        if (elements.size() > length_limit) throw EnumerationLimit("greedy_antichain");
        // The successor rule needs the gap only for non-terminal elements,
        // so probe with gap 0 first.
        while (greedy_next(cur, 0)) {
            std::uint64_t gap =
                to_u64(f(shift + i + 1) - f(shift + i), "greedy_antichain gap");
            cur = *greedy_next(cur, gap);
            i += 1;
            elements.push_back({cur, index});
            if (elements.size() > length_limit) throw EnumerationLimit("greedy_antichain");
        }
        shift += i;
    }
    return AntichainSequence::validate(std::move(elements), m, n);
}

const BigCount* BoundReport::find(const std::string& name) const {
    for (const auto& [k, v] : intermediates)
        if (k == name) return &v;
    return nullptr;
}

namespace {

constexpr std::uint64_t kIterationThreshold = 65536;

// C_{R,m}^1 for m >= 2: R-fold iteration of A(m-1, .) starting from 0.
// Above the iteration threshold the telescoped forms for m = 2, 3 are used
// (the iteration is plain doubling resp. 2c+3 at every step).
BigCount single_bound(const BigCount& R, std::size_t m, std::string* path) {
    if (sgn(R) == 0) return 0;
    if (R <= kIterationThreshold) {
        if (path) *path = "ackermann_iteration";
        BigCount c = 0;
        for (BigCount k = 0; k < R; ++k) c = ackermann(BigCount(m) - 1, c);
        return c;
    }
    if (m == 2) {
        if (path) *path = "ackermann_iteration_telescoped";
        BigCount v = 2 * R;
        check_cap(v, "prolongation bound 2r");
        return v;
    }
    if (m == 3) {
        if (path) *path = "ackermann_iteration_telescoped";
        return 3 * (pow2_checked(R, "prolongation bound 3(2^r - 1)") - 1);
    }
    // m >= 4 blows past the bit cap within a few iterations regardless.
    if (path) *path = "ackermann_iteration";
    BigCount c = 0;
    for (BigCount k = 0; k < R; ++k) c = ackermann(BigCount(m) - 1, c);
    return c;
}

}  // namespace

BoundReport prolongation_bound(const BigCount& r, std::size_t m, const BigCount& n) {
    if (sgn(r) < 0) throw std::invalid_argument("prolongation_bound: r must be >= 0");
    if (m < 1 || n < 1) throw std::invalid_argument("prolongation_bound: m, n must be >= 1");
    BoundReport report;
    if (sgn(r) == 0) {
        report.value = 0;
        report.formula_path = "zero_length";
        return report;
    }
    if (m == 1) {
        report.value = r;
        report.formula_path = "single_derivation";
        return report;
    }
    if (m == 2 && n > kIterationThreshold) {
        report.value = pow2_checked(n, "prolongation bound 2^n r") * r;
        report.formula_path = "composition_telescoped";
        return report;
    }
    std::string path;
    BigCount v = r;
    for (BigCount k = 0; k < n; ++k) {
        v = single_bound(v, m, &path);
        if (n > 1 && report.intermediates.size() < 16)
            report.intermediates.emplace_back(
                "C_" + BigCount(k + 1).get_str(), v);
    }
    report.value = std::move(v);
    report.formula_path = n == 1 ? path : "composition";
    return report;
}

BoundReport legacy_doubling_bound(const BigCount& r, std::size_t m, std::uint32_t n) {
    if (r < 1) throw std::invalid_argument("legacy_doubling_bound: r must be >= 1");
    BoundReport report;
    BigCount len = max_antichain_length(GrowthFunction::doubling(r), m, n);
    report.value = pow2_checked(len + 1, "legacy doubling bound 2^(L+1) r") * r;
    report.formula_path = "doubling_growth";
    report.intermediates.emplace_back("max_length", std::move(len));
    return report;
}

BoundReport legacy_recursive_bound_m2(const BigCount& r, std::uint32_t n) {
    if (r < 1 || n < 1)
        throw std::invalid_argument("legacy_recursive_bound_m2: r, n must be >= 1");
    BoundReport report;
    BigCount b = 0;
    for (std::uint32_t i = 1; i <= n; ++i) {
        b = pow2_checked(b + 1, "legacy recursion 2^(b+1) r") * r + b + 1;
        if (report.intermediates.size() < 16)
            report.intermediates.emplace_back("b_" + std::to_string(i), b);
    }
    report.value = pow2_checked(b + 1, "legacy recursion 2^(b_n+1) r") * r;
    report.formula_path = "recursive_m2";
    return report;
}

BoundReport legacy_ackermann_bound(const BigCount& r, std::size_t m, std::uint32_t n) {
    if (r < 1 || n < 1)
        throw std::invalid_argument("legacy_ackermann_bound: r, n must be >= 1");
    BoundReport report;
    report.formula_path = "legacy_ackermann";
    if (n == 1) {
        report.value = 2 * ackermann(BigCount(m) + 3, 4 * r - 1);
        return report;
    }
    BigCount t = 2 * ackermann(BigCount(m) + 5, 4 * n * r - 1);
    BigCount q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), BigCount(n).get_mpz_t());
    report.intermediates.emplace_back("exact_division", sgn(rem) == 0 ? 1 : 0);
    report.value = sgn(rem) == 0 ? q : BigCount(q + 1);
    return report;
}

BoundReport characteristic_set_order_bound(const BigCount& r, std::size_t m,
                                           const BigCount& n) {
    BoundReport report = prolongation_bound(r, m, n);
    report.formula_path = "characteristic_set:" + report.formula_path;
    return report;
}

BoundReport component_order_bound(const BigCount& r, std::size_t m, std::uint32_t n) {
    BoundReport report;
    BigCount c = prolongation_bound(r, m, n).value;
    BigCount power;
    if (c <= 1)
        power = c;  // 0^m or 1^m
    else
        power = pow_checked(c, BigCount(m), "component order bound C^m");
    report.value = n * power;
    report.formula_path = "component_order";
    report.intermediates.emplace_back("prolongation_bound", std::move(c));
    return report;
}

BoundReport nullstellensatz_order_bound(const BigCount& r, std::size_t m, std::uint32_t n) {
    BoundReport report;
    BigCount T = m == 1 ? BigCount(r + 1) : prolongation_bound(r, m, n).value;
    report.value = T;
    report.formula_path = m == 1 ? "nullstellensatz_single_derivation" : "nullstellensatz";
    report.intermediates.emplace_back("alpha_T_minus_1", binomial(T - 1 + m, BigCount(m)));
    report.intermediates.emplace_back("alpha_T", binomial(T + m, BigCount(m)));
    return report;
}

BoundReport bezout_exponents(std::uint32_t n, const BigCount& r, std::size_t m,
                             const BigCount& dim_v) {
    if (r < 1) throw std::invalid_argument("bezout_exponents: r must be >= 1");
    if (sgn(dim_v) < 0) throw std::invalid_argument("bezout_exponents: dim_v must be >= 0");
    BoundReport report;
    report.formula_path = "bezout";
    BigCount alpha_r1 = binomial(r - 1 + m, BigCount(m));
    BigCount t_prime = prolongation_bound(1, m, n * alpha_r1).value;
    BigCount alpha_t = binomial(t_prime + m, BigCount(m));
    BigCount alpha_t1 = binomial(t_prime - 1 + m, BigCount(m));
    BigCount d_prime = alpha_r1 * dim_v;
    BigCount expo = d_prime * alpha_t1;

    BigCount base = BigCount(m) + 1;
    BigCount e_v, rem_v = 0;
    if (sgn(expo) == 0) {
        // The exponent expo - 1 is formally -1; the product cancels one
        // factor of m+1 exactly in every known case.
        mpz_fdiv_qr(e_v.get_mpz_t(), rem_v.get_mpz_t(),
                    BigCount(alpha_r1 * alpha_t).get_mpz_t(), base.get_mpz_t());
        if (sgn(rem_v) != 0) e_v += 1;
    } else {
        e_v = alpha_r1 * alpha_t *
              pow_checked(base, expo - 1, "bezout exponent (m+1)^(d' a - 1)");
    }
    BigCount full = sgn(expo) == 0
                        ? BigCount(0)
                        : BigCount(pow_checked(base, expo, "bezout exponent (m+1)^(d' a)") - 1);
    // m | (m+1)^k - 1 since m+1 = 1 mod m.
    BigCount e_w;
    mpz_divexact(e_w.get_mpz_t(), full.get_mpz_t(), BigCount(m).get_mpz_t());
    e_w *= alpha_t1;

    report.value = e_v;
    report.intermediates.emplace_back("e_V", e_v);
    report.intermediates.emplace_back("e_W", std::move(e_w));
    report.intermediates.emplace_back("T_prime", std::move(t_prime));
    report.intermediates.emplace_back("alpha_r_minus_1", std::move(alpha_r1));
    report.intermediates.emplace_back("alpha_T_prime", std::move(alpha_t));
    report.intermediates.emplace_back("alpha_T_prime_minus_1", std::move(alpha_t1));
    report.intermediates.emplace_back("exact_division_e_V", sgn(rem_v) == 0 ? 1 : 0);
    return report;
}

}  // namespace prolong::bounds
