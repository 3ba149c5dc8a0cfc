#ifndef PROLONG_ORACLE_HPP
#define PROLONG_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prolong/bigint.hpp"
#include "prolong/bounds.hpp"
#include "prolong/consistency.hpp"
#include "prolong/hilbert.hpp"
#include "prolong/lattice.hpp"

namespace prolong::oracle {

/// Outcome of a desk-scale verification sweep. A claim passes when
/// `failures` is empty; `complete` records whether the stated space was
/// swept exhaustively or cut off by a budget.
struct VerificationReport {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t instances_checked = 0;
    std::vector<std::string> failures;
    bool complete = true;
    std::string coverage;

    bool ok() const { return failures.empty(); }
};

struct BruteMaxOptions {
    std::uint64_t budget = 10'000'000;  // candidate antichain sets
    std::uint64_t len_cap = 0;          // 0 = unlimited
    std::uint64_t random_samples = 0;   // extra randomized sets past the cap
    std::uint64_t seed = 20240915;
    unsigned jobs = 1;
};

struct BruteMaxResult {
    VerificationReport report;
    std::uint64_t max_level = 0;
    std::uint64_t mu_level = 0;       // minimal consistent level of the greedy antichain
    bool mu_attains_max = false;
    std::vector<lattice::IndexedMonomial> argmax;  // one witness set
};

/// Enumerates antichain sets with elements in the degree-`window` ball of
/// N^m x {1..n} (up to len_cap elements when set) and maximizes the minimal
/// consistent level over them, comparing against the greedy antichain.
BruteMaxResult brute_force_max_level(std::uint64_t r, std::size_t m, std::uint32_t n,
                                     std::uint64_t window, const BruteMaxOptions& options = {});

/// Second, deliberately naive decision procedure for the chain condition:
/// enumerates candidate chains as simple paths instead of running graph
/// reachability. Cross-checked against min_consistent_level.
std::uint64_t naive_min_consistent_level(const lattice::AntichainSequence& seq,
                                         std::uint64_t start);

/// For every subset of the degree-d slice of N^m: a disconnected pair
/// forces strictly submaximal Hilbert-Samuel growth at d+1.
VerificationReport sweep_strict_macaulay(std::size_t m, std::uint64_t d, unsigned jobs = 1);

/// For every subset of the degree-d slice of N^2: growth is maximal at d+1
/// exactly for blocks (consecutive runs within the slice).
VerificationReport sweep_block_converse_m2(std::uint64_t d);

/// Sperner's inequality: A > 0, A = B + C, C^(m-1) < A^(m) - A imply
/// B^(m) + C^(m-1) >= A^(m). Sweeps all triples with A <= max_a.
VerificationReport sweep_sperner_inequality(std::size_t m, std::uint64_t max_a);

/// Shadow-sum inequality: if b_1 <= b_2 = ... = b_s = slice(m,d), every
/// a_i <= b_s and sum a <= sum b, then sum a^<d> <= sum b^<d>. Random
/// instances plus the degenerate monotonicity case.
VerificationReport sweep_shadow_sum_inequality(std::size_t m, std::uint64_t d,
                                               std::uint64_t instances,
                                               std::uint64_t seed = 20240915);

/// Sampled antichain sequences whose minimal consistent level reaches the
/// prolongation bound are dominated pointwise by the greedy antichain's
/// Hilbert-Samuel prefix functions.
VerificationReport sweep_hilbert_domination(std::uint64_t r, std::size_t m, std::uint32_t n,
                                            std::uint64_t max_sets = 5000,
                                            std::uint64_t seed = 20240915);

/// Greedy maximal antichain built by literal slice search (pick the
/// orderly-largest element of each prescribed degree not above a previous
/// choice); the rule-based construction must coincide with it.
lattice::AntichainSequence greedy_antichain_by_search(const bounds::GrowthFunction& f,
                                                      std::size_t m, std::uint32_t n,
                                                      std::uint64_t length_limit = 4096);

}  // namespace prolong::oracle

#endif
