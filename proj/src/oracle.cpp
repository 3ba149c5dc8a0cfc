#include "prolong/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "prolong/macaulay.hpp"

namespace prolong::oracle {

using lattice::AntichainSequence;
using lattice::IndexedMonomial;
using lattice::Monomial;

namespace {

std::string show(const Monomial& xi) {
    std::string s = "(";
    for (std::size_t i = 0; i < xi.dim(); ++i)
        s += (i ? "," : "") + std::to_string(xi[i]);
    return s + ")";
}

std::string show(const std::vector<Monomial>& M) {
    std::string s = "{";
    for (std::size_t i = 0; i < M.size(); ++i) s += (i ? " " : "") + show(M[i]);
    return s + "}";
}

std::string show(const std::vector<IndexedMonomial>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + show(v[i].xi) + "@" + std::to_string(v[i].index);
    return s + "}";
}

// All elements of N^m of degree in [0, window], ascending orderly order.
std::vector<Monomial> ball(std::size_t m, std::uint64_t window) {
    std::vector<Monomial> out;
    for (std::uint64_t d = 0; d <= window; ++d) {
        auto slice = lattice::degree_slice(m, d);
        out.insert(out.end(), slice.rbegin(), slice.rend());
    }
    return out;
}

// Enumerates every antichain subset of `pool` (as index lists into pool),
// including the empty one. Pool order is the visit order.
void enumerate_antichains(const std::vector<Monomial>& pool,
                          std::vector<std::size_t>& chosen, std::size_t next,
                          std::uint64_t len_cap, std::uint64_t budget, std::uint64_t& count,
                          const std::function<void(const std::vector<std::size_t>&)>& emit) {
    emit(chosen);
    if (++count > budget) throw EnumerationLimit("antichain enumeration");
    if (len_cap && chosen.size() >= len_cap) return;
    for (std::size_t c = next; c < pool.size(); ++c) {
        bool ok = true;
        for (std::size_t idx : chosen) {
            if (pool[idx].leq(pool[c]) || pool[c].leq(pool[idx])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(c);
        enumerate_antichains(pool, chosen, c + 1, len_cap, budget, count, emit);
        chosen.pop_back();
    }
}

// Levels at which the chain condition fails, packed as bits p = 0..width-1.
std::uint64_t failure_mask(const std::vector<Monomial>& set, std::size_t m,
                           std::uint64_t width) {
    std::vector<IndexedMonomial> elems;
    for (const auto& xi : set) elems.push_back({xi, 1});
    auto seq = AntichainSequence::validate(std::move(elems), m, 1);
    std::uint64_t mask = 0;
    for (std::uint64_t p = 0; p < width; ++p)
        if (!consistency::consistent_at(seq, p)) mask |= std::uint64_t{1} << p;
    return mask;
}

}  // namespace

BruteMaxResult brute_force_max_level(std::uint64_t r, std::size_t m, std::uint32_t n,
                                     std::uint64_t window, const BruteMaxOptions& options) {
    BruteMaxResult result;
    auto& report = result.report;
    report.claim = "max minimal-consistent-level over antichain sets equals the prolongation bound";
    report.params = {{"r", std::to_string(r)},
                     {"m", std::to_string(m)},
                     {"n", std::to_string(n)},
                     {"window", std::to_string(window)},
                     {"len_cap", std::to_string(options.len_cap)}};
    std::uint64_t width = 2 * std::max(r, window) + 1;
    if (width > 64) throw EnumerationLimit("brute_force_max_level: window too wide");

    // Distinct indices never compare, and the chain condition splits by
    // index, so an n-index antichain is any n-tuple of one-index antichains
    // and its failure levels are the union of theirs.
    auto pool = ball(m, window);
    std::vector<std::vector<std::size_t>> families;
    std::uint64_t count = 0;
    std::vector<std::size_t> chosen;
    enumerate_antichains(pool, chosen, 0, options.len_cap, options.budget, count,
                         [&](const std::vector<std::size_t>& sel) { families.push_back(sel); });

    std::vector<std::uint64_t> masks(families.size());
    unsigned workers = std::max(1u, options.jobs);
    auto compute_masks = [&](unsigned w) {
        for (std::size_t f = w; f < families.size(); f += workers) {
            std::vector<Monomial> set;
            for (auto idx : families[f]) set.push_back(pool[idx]);
            masks[f] = failure_mask(set, m, width);
        }
    };
    if (workers == 1) {
        compute_masks(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(compute_masks, w);
        for (auto& t : threads) t.join();
    }

    auto level_of = [&](std::uint64_t mask) {
        for (std::uint64_t p = r; p < width; ++p)
            if (!(mask & (std::uint64_t{1} << p))) return p;
        throw std::logic_error("brute_force_max_level: no consistent level in window");
    };

    result.max_level = 0;
    std::vector<std::size_t> best(n, 0);
    // Odometer over n independent family choices.
    std::vector<std::size_t> pick(n, 0);
    std::uint64_t combos = 0;
    for (;;) {
        std::uint64_t mask = 0;
        std::uint64_t total_len = 0;
        for (std::uint32_t l = 0; l < n; ++l) {
            mask |= masks[pick[l]];
            total_len += families[pick[l]].size();
        }
        if (!options.len_cap || total_len <= options.len_cap) {
            if (++combos > options.budget) throw EnumerationLimit("brute_force_max_level");
            std::uint64_t level = level_of(mask);
            if (level > result.max_level) {
                result.max_level = level;
                best = pick;
            }
        }
        std::size_t t = 0;
        while (t < n && ++pick[t] == families.size()) pick[t++] = 0;
        if (t == n) break;
    }
    report.instances_checked = combos;
    for (std::uint32_t l = 0; l < n; ++l)
        for (auto idx : families[best[l]])
            result.argmax.push_back({pool[idx], l + 1});

    // Randomized extension beyond the enumeration cap.
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t s = 0; s < options.random_samples; ++s) {
        std::vector<IndexedMonomial> set;
        for (std::uint32_t l = 1; l <= n; ++l) {
            std::vector<std::size_t> order(pool.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<Monomial> acc;
            for (std::size_t idx : order) {
                if (rng() % 2) continue;
                bool ok = true;
                for (const auto& v : acc)
                    if (v.leq(pool[idx]) || pool[idx].leq(v)) {
                        ok = false;
                        break;
                    }
                if (ok) acc.push_back(pool[idx]);
            }
            for (const auto& v : acc) set.push_back({v, l});
        }
        auto seq = AntichainSequence::validate(set, m, n);
        std::uint64_t level = consistency::min_consistent_level(seq, r).level;
        ++report.instances_checked;
        if (level > result.max_level) {
            result.max_level = level;
            result.argmax = set;
        }
    }

    // The greedy antichain is itself a candidate and must attain the max.
    auto mu = bounds::greedy_antichain(bounds::staged_growth(r, m, n), m, n);
    result.mu_level = consistency::min_consistent_level(mu, r).level;
    if (result.mu_level > result.max_level) {
        result.max_level = result.mu_level;
        result.argmax = mu.elements();
    }
    result.mu_attains_max = result.mu_level == result.max_level;
    if (!result.mu_attains_max)
        report.failures.push_back("greedy antichain level " + std::to_string(result.mu_level) +
                                  " below observed max " + std::to_string(result.max_level) +
                                  " at " + show(result.argmax));
    report.complete = options.len_cap == 0 && options.random_samples == 0;
    report.coverage = "antichain sets within degree " + std::to_string(window) +
                      (options.len_cap ? " of size <= " + std::to_string(options.len_cap) : "") +
                      (options.random_samples
                           ? " plus " + std::to_string(options.random_samples) + " random sets"
                           : "");
    return result;
}

namespace {

// Chain decision by exhaustive simple-path search, written separately from
// the reachability version on purpose.
bool naive_chain_exists(const std::vector<Monomial>& pool, const Monomial& tau,
                        std::size_t i, std::size_t j, std::uint64_t p) {
    std::vector<Monomial> verts;
    for (const auto& v : pool)
        if (v.leq(tau) && v != tau) verts.push_back(v);
    std::vector<char> used(verts.size(), 0);
    std::function<bool(std::size_t)> extend = [&](std::size_t cur) -> bool {
        if (verts[cur][j - 1] < tau[j - 1]) return true;
        for (std::size_t nx = 0; nx < verts.size(); ++nx) {
            if (used[nx]) continue;
            if (lattice::lub(verts[cur], verts[nx]).degree() > p) continue;
            used[nx] = 1;
            if (extend(nx)) return true;
            used[nx] = 0;
        }
        return false;
    };
    for (std::size_t s0 = 0; s0 < verts.size(); ++s0) {
        if (verts[s0][i - 1] >= tau[i - 1]) continue;
        std::fill(used.begin(), used.end(), 0);
        used[s0] = 1;
        if (extend(s0)) return true;
    }
    return false;
}

bool naive_consistent(const AntichainSequence& seq, std::uint64_t p) {
    for (std::uint32_t idx = 1; idx <= seq.n(); ++idx) {
        std::vector<Monomial> pool;
        for (const auto& e : seq)
            if (e.index == idx && e.degree() <= p) pool.push_back(e.xi);
        for (std::size_t a = 0; a < pool.size(); ++a)
            for (std::size_t b = a + 1; b < pool.size(); ++b) {
                Monomial tau = lattice::lub(pool[a], pool[b]);
                if (tau.degree() <= p) continue;
                for (std::size_t i = 1; i <= seq.m(); ++i)
                    for (std::size_t j = i + 1; j <= seq.m(); ++j) {
                        if (tau[i - 1] == 0 || tau[j - 1] == 0) continue;
                        bool side_i = false, side_j = false;
                        for (const auto& beta : pool) {
                            side_i |= beta.leq(tau.minus_unit(i));
                            side_j |= beta.leq(tau.minus_unit(j));
                        }
                        if (!side_i || !side_j) continue;
                        if (!naive_chain_exists(pool, tau, i, j, p)) return false;
                    }
            }
    }
    return true;
}

}  // namespace

std::uint64_t naive_min_consistent_level(const AntichainSequence& seq, std::uint64_t start) {
    std::uint64_t h = std::max(start, seq.max_degree());
    for (std::uint64_t p = start; p <= 2 * h; ++p)
        if (naive_consistent(seq, p)) return p;
    throw std::logic_error("naive_min_consistent_level: search passed the 2h bound");
}

VerificationReport sweep_strict_macaulay(std::size_t m, std::uint64_t d, unsigned jobs) {
    VerificationReport report;
    report.claim = "a disconnected pair forces strictly submaximal Hilbert-Samuel growth";
    report.params = {{"m", std::to_string(m)}, {"d", std::to_string(d)}};
    auto slice = lattice::degree_slice(m, d);
    if (slice.size() > 18) throw EnumerationLimit("sweep_strict_macaulay: slice too large");
    std::uint64_t total = std::uint64_t{1} << slice.size();

    unsigned workers = std::max(1u, jobs);
    std::vector<std::vector<std::string>> failures(workers);
    std::vector<std::uint64_t> witnesses(workers, 0);
    auto run = [&](unsigned w) {
        for (std::uint64_t bits = w; bits < total; bits += workers) {
            std::vector<Monomial> M;
            for (std::size_t e = 0; e < slice.size(); ++e)
                if (bits & (std::uint64_t{1} << e)) M.push_back(slice[e]);
            hilbert::StaircaseSet S{m, M};
            auto pair = hilbert::find_disconnected_pair(S, d);
            if (!pair) continue;
            ++witnesses[w];
            auto [next, ceiling] = hilbert::growth_gap(S, d);
            if (!(next < ceiling))
                failures[w].push_back("M=" + show(M) + " pair=" + show(pair->first) + "," +
                                      show(pair->second) + " H(d+1)=" + next.get_str() +
                                      " ceiling=" + ceiling.get_str());
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    std::uint64_t found = 0;
    for (unsigned w = 0; w < workers; ++w) {
        found += witnesses[w];
        report.failures.insert(report.failures.end(), failures[w].begin(), failures[w].end());
    }
    std::sort(report.failures.begin(), report.failures.end());
    report.instances_checked = total;
    report.coverage = "all subsets of the degree slice; " + std::to_string(found) +
                      " had a disconnected pair";
    return report;
}

VerificationReport sweep_block_converse_m2(std::uint64_t d) {
    VerificationReport report;
    report.claim = "over N^2, growth is maximal at d+1 exactly for blocks";
    report.params = {{"d", std::to_string(d)}};
    auto slice = lattice::degree_slice(2, d);  // descending first coordinate... ascending u2
    std::uint64_t total = std::uint64_t{1} << slice.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<Monomial> M;
        std::vector<std::size_t> picked;
        for (std::size_t e = 0; e < slice.size(); ++e)
            if (bits & (std::uint64_t{1} << e)) {
                M.push_back(slice[e]);
                picked.push_back(e);
            }
        bool block = true;  // empty and singletons are blocks
        for (std::size_t t = 1; t < picked.size(); ++t)
            if (picked[t] != picked[t - 1] + 1) block = false;
        hilbert::StaircaseSet S{2, M};
        auto [next, ceiling] = hilbert::growth_gap(S, d);
        if ((next == ceiling) != block)
            report.failures.push_back("M=" + show(M) + " H(d+1)=" + next.get_str() +
                                      " ceiling=" + ceiling.get_str() +
                                      (block ? " (block)" : " (not a block)"));
    }
    report.instances_checked = total;
    report.coverage = "all subsets of the degree slice of N^2";
    return report;
}

VerificationReport sweep_sperner_inequality(std::size_t m, std::uint64_t max_a) {
    if (m < 2) throw std::invalid_argument("sweep_sperner_inequality: m must be >= 2");
    VerificationReport report;
    report.claim = "B^(m) + C^(m-1) >= A^(m) under the Sperner hypothesis";
    report.params = {{"m", std::to_string(m)}, {"A<=", std::to_string(max_a)}};
    std::uint64_t skipped = 0;
    for (std::uint64_t a = 1; a <= max_a; ++a) {
        BigCount am = macaulay::macaulay_growth(a, m);
        for (std::uint64_t b = 0; b <= a; ++b) {
            std::uint64_t c = a - b;
            if (m - 1 == 1 && c > 1) {
                ++skipped;  // C^(1) only exists for C <= 1
                continue;
            }
            ++report.instances_checked;
            BigCount cm1 = macaulay::macaulay_growth(c, m - 1);
            if (!(cm1 < am - a)) continue;  // hypothesis fails
            BigCount bm = macaulay::macaulay_growth(b, m);
            if (!(bm + cm1 >= am))
                report.failures.push_back("A=" + std::to_string(a) + " B=" + std::to_string(b) +
                                          " C=" + std::to_string(c));
        }
    }
    report.coverage = "all (A,B,C) with A <= " + std::to_string(max_a) + "; " +
                      std::to_string(skipped) + " skipped (C too large for m-1=1)";
    return report;
}

VerificationReport sweep_shadow_sum_inequality(std::size_t m, std::uint64_t d,
                                               std::uint64_t instances, std::uint64_t seed) {
    VerificationReport report;
    report.claim = "shadow sums respect the capped-majorization inequality";
    report.params = {{"m", std::to_string(m)},
                     {"d", std::to_string(d)},
                     {"instances", std::to_string(instances)}};
    std::uint64_t slice = to_u64(binomial(BigCount(m) - 1 + d, BigCount(d)),
                                 "sweep_shadow_sum_inequality slice");
    std::mt19937_64 rng(seed);
    auto shadow = [&](std::uint64_t a) { return macaulay::upper_shadow(a, d); };
    for (std::uint64_t it = 0; it < instances; ++it) {
        std::uint64_t s = 1 + rng() % 4;
        std::uint64_t t = 1 + rng() % 6;
        std::vector<std::uint64_t> bs(s, slice);
        if (s >= 2) bs[0] = rng() % (slice + 1);
        BigCount sum_b = 0;
        for (auto b : bs) sum_b += b;
        std::vector<std::uint64_t> as;
        BigCount sum_a = 0;
        for (std::uint64_t q = 0; q < t; ++q) {
            std::uint64_t a = rng() % (slice + 1);
            if (sum_a + a > sum_b) break;
            as.push_back(a);
            sum_a += a;
        }
        if (as.empty()) {
            --it;  // resample; an empty left side is vacuous
            continue;
        }
        ++report.instances_checked;
        BigCount lhs = 0, rhs = 0;
        for (auto a : as) lhs += shadow(a);
        for (auto b : bs) rhs += shadow(b);
        if (!(lhs <= rhs)) {
            std::ostringstream os;
            os << "a=[";
            for (auto a : as) os << a << " ";
            os << "] b=[";
            for (auto b : bs) os << b << " ";
            os << "]";
            report.failures.push_back(os.str());
        }
    }
    report.coverage = "random instances, seed " + std::to_string(seed);
    return report;
}

VerificationReport sweep_hilbert_domination(std::uint64_t r, std::size_t m, std::uint32_t n,
                                            std::uint64_t max_sets, std::uint64_t seed) {
    VerificationReport report;
    report.claim =
        "sequences attaining the prolongation bound are dominated by the greedy antichain";
    report.params = {{"r", std::to_string(r)},
                     {"m", std::to_string(m)},
                     {"n", std::to_string(n)}};
    auto mu = bounds::greedy_antichain(bounds::staged_growth(r, m, n), m, n);
    std::uint64_t top_degree = mu.max_degree();
    std::uint64_t c_value = top_degree + 1;

    // Table of the greedy antichain's prefix counts.
    auto mu_prefix = [&](std::size_t i, std::uint64_t d) {
        return hilbert::hilbert_samuel_prefix(mu, i, d);
    };

    std::mt19937_64 rng(seed);
    auto pool = ball(m, top_degree);
    std::uint64_t tested = 0;

    // Prefix counts are compared in the canonical order of a leader
    // sequence: degree ascending, orderly-descending within a degree (the
    // greedy antichain's own construction order). Arbitrary orderings can
    // front-load a high-degree element and inflate early prefixes.
    auto check_sequence = [&](std::vector<IndexedMonomial> elems) {
        std::sort(elems.begin(), elems.end(), [](const auto& a, const auto& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return lattice::orderly_less(b, a);
        });
        auto seq = AntichainSequence::validate(elems, m, n);
        if (consistency::min_consistent_level(seq, r).level < c_value) return;
        ++tested;
        std::size_t horizon = std::max<std::size_t>(seq.size(), mu.size()) + 1;
        for (std::size_t i = 0; i <= horizon; ++i)
            for (std::uint64_t d = 0; d <= top_degree; ++d) {
                BigCount lhs = hilbert::hilbert_samuel_prefix(seq, i, d);
                BigCount rhs = mu_prefix(i, d);
                if (!(lhs <= rhs)) {
                    report.failures.push_back("set=" + show(seq.elements()) +
                                              " i=" + std::to_string(i) +
                                              " d=" + std::to_string(d) + " " + lhs.get_str() +
                                              ">" + rhs.get_str());
                    return;
                }
            }
    };

    // The greedy antichain itself is the equality case.
    check_sequence(mu.elements());
    // Random qualifying sets.
    for (std::uint64_t s = 0; tested < max_sets && s < 40 * max_sets; ++s) {
        std::vector<IndexedMonomial> set;
        for (std::uint32_t l = 1; l <= n; ++l) {
            std::vector<Monomial> acc;
            std::vector<std::size_t> order(pool.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            for (std::size_t idx : order) {
                if (rng() % 3 == 0) continue;
                bool ok = true;
                for (const auto& v : acc)
                    if (v.leq(pool[idx]) || pool[idx].leq(v)) {
                        ok = false;
                        break;
                    }
                if (ok) acc.push_back(pool[idx]);
            }
            for (const auto& v : acc) set.push_back({v, l});
        }
        std::shuffle(set.begin(), set.end(), rng);
        check_sequence(set);
    }
    report.instances_checked = tested;
    report.complete = false;
    report.coverage = "greedy antichain plus random qualifying sets, seed " +
                      std::to_string(seed);
    return report;
}

AntichainSequence greedy_antichain_by_search(const bounds::GrowthFunction& f, std::size_t m,
                                             std::uint32_t n, std::uint64_t length_limit) {
    std::vector<IndexedMonomial> chosen;
    for (std::uint64_t i = 1;; ++i) {
        if (i > length_limit) throw EnumerationLimit("greedy_antichain_by_search");
        std::uint64_t degree = to_u64(f(BigCount(i)), "greedy_antichain_by_search degree");
        auto slice = lattice::degree_slice(m, degree);
        std::optional<IndexedMonomial> best;
        for (std::uint32_t idx = n; idx >= 1 && !best; --idx) {
            for (const auto& xi : slice) {  // descending orderly order
                IndexedMonomial cand{xi, idx};
                bool fresh = true;
                for (const auto& prev : chosen)
                    if (lattice::leq(prev, cand)) {
                        fresh = false;
                        break;
                    }
                if (fresh) {
                    best = cand;
                    break;
                }
            }
        }
        if (!best) break;
        chosen.push_back(*best);
    }
    return AntichainSequence::validate(std::move(chosen), m, n);
}

}  // namespace prolong::oracle
