#ifndef PROLONG_CONSISTENCY_HPP
#define PROLONG_CONSISTENCY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "prolong/lattice.hpp"

namespace prolong::consistency {

/// One formal-consistency obligation: a least upper bound tau (of two
/// same-index antichain elements) outside the current degree window, with a
/// pair of coordinate directions both backed by dominated predecessors.
/// When satisfied, `chain` holds a connecting sequence found for it.
struct Obligation {
    lattice::Monomial tau;
    std::uint32_t index = 1;
    std::size_t i = 1;  // 1-based coordinate directions, i < j
    std::size_t j = 2;
    std::vector<lattice::Monomial> chain;
};

struct FailureWitness {
    std::uint64_t level = 0;  // the level at which the obligation had no chain
    Obligation obligation;    // chain left empty
};

/// Result of the minimal-consistent-level search. `obligations` lists every
/// obligation at the answer together with its connecting chain;
/// `failure_witness` records why the previous level was rejected (absent
/// when the answer equals the starting level).
struct ConsistencyResult {
    std::uint64_t level = 0;
    std::uint64_t start = 0;
    std::vector<Obligation> obligations;
    std::optional<FailureWitness> failure_witness;
};

/// Decides the chain condition at level p: every obligation arising from
/// elements of degree <= p admits a connecting chain whose consecutive
/// least upper bounds stay within degree p. If `first_failure` is given,
/// the first unsatisfiable obligation is stored there; if `chains_out` is
/// given, one chain per obligation is recorded.
bool consistent_at(const lattice::AntichainSequence& seq, std::uint64_t p,
                   Obligation* first_failure = nullptr,
                   std::vector<Obligation>* chains_out = nullptr);

/// Smallest level p >= start at which the chain condition holds. Ascends
/// one level at a time; the search is guaranteed to stop by twice the
/// larger of start and the maximal element degree.
ConsistencyResult min_consistent_level(const lattice::AntichainSequence& seq,
                                       std::uint64_t start);

/// Treating the sequence as the minimal leaders of a differential kernel of
/// length r (so all degrees must be <= r): whether the kernel is already
/// consistent at its own length, i.e. admits a principal realization.
bool leaders_consistent(const lattice::AntichainSequence& minimal_leaders, std::uint64_t r);

}  // namespace prolong::consistency

#endif
