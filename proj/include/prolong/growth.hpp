#ifndef PROLONG_GROWTH_HPP
#define PROLONG_GROWTH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prolong/bigint.hpp"

namespace prolong::bounds {

/// A monotone nondecreasing degree-growth function on {1, 2, ...}.
/// Evaluation is exact at any scale; results wider than the bit cap raise
/// ValueExceedsLimit.
class GrowthFunction {
public:
    /// s + i - 1.
    static GrowthFunction arithmetic(std::uint64_t s);
    /// r, r, r+1, r+2, ...: the degree growth of the greedy maximal
    /// antichain for initial degree r.
    static GrowthFunction flat_then_arithmetic(BigCount r);
    /// 2^i * r.
    static GrowthFunction doubling(BigCount r);
    /// Explicit monotone table; evaluation past the end is an error.
    static GrowthFunction table(std::vector<BigCount> values);
    /// n spliced flat-then-arithmetic stages. `boundaries` holds the
    /// cumulative greedy lengths after stages 1..n-1, `stage_starts` the
    /// initial degree of each stage.
    static GrowthFunction staged(std::vector<BigCount> boundaries,
                                 std::vector<BigCount> stage_starts);

    BigCount operator()(const BigCount& i) const;

    /// Smallest i0 with f(i+1) - f(i) = 1 for every i >= i0, when the
    /// gaps are eventually all 1 (enables closed-form run skipping).
    std::optional<BigCount> unit_gap_from() const;

    std::string describe() const;

private:
    enum class Kind { Arithmetic, FlatArithmetic, Doubling, Table, Staged };
    Kind kind_;
    BigCount param_;                     // s or r
    std::vector<BigCount> values_;       // table, or staged boundaries
    std::vector<BigCount> stage_starts_; // staged only
    explicit GrowthFunction(Kind kind) : kind_(kind) {}
};

}  // namespace prolong::bounds

#endif
