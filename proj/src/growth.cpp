#include "prolong/growth.hpp"

namespace prolong::bounds {

GrowthFunction GrowthFunction::arithmetic(std::uint64_t s) {
    if (s < 1) throw std::invalid_argument("arithmetic growth: s must be >= 1");
    GrowthFunction f(Kind::Arithmetic);
    f.param_ = s;
    return f;
}

GrowthFunction GrowthFunction::flat_then_arithmetic(BigCount r) {
    if (sgn(r) < 0) throw std::invalid_argument("flat_then_arithmetic: r must be >= 0");
    GrowthFunction f(Kind::FlatArithmetic);
    f.param_ = std::move(r);
    return f;
}

GrowthFunction GrowthFunction::doubling(BigCount r) {
    if (sgn(r) <= 0) throw std::invalid_argument("doubling growth: r must be >= 1");
    GrowthFunction f(Kind::Doubling);
    f.param_ = std::move(r);
    return f;
}

GrowthFunction GrowthFunction::table(std::vector<BigCount> values) {
    if (values.empty()) throw std::invalid_argument("table growth: empty");
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] > values[i + 1])
            throw std::invalid_argument("table growth: not monotone");
    if (sgn(values.front()) < 0) throw std::invalid_argument("table growth: negative");
    GrowthFunction f(Kind::Table);
    f.values_ = std::move(values);
    return f;
}

GrowthFunction GrowthFunction::staged(std::vector<BigCount> boundaries,
                                      std::vector<BigCount> stage_starts) {
    if (stage_starts.empty() || boundaries.size() + 1 != stage_starts.size())
        throw std::invalid_argument("staged growth: need one more start than boundary");
    GrowthFunction f(Kind::Staged);
    f.values_ = std::move(boundaries);
    f.stage_starts_ = std::move(stage_starts);
    return f;
}

BigCount GrowthFunction::operator()(const BigCount& i) const {
    if (i < 1) throw std::invalid_argument("growth function: argument must be >= 1");
    switch (kind_) {
        case Kind::Arithmetic:
            return param_ + i - 1;
        case Kind::FlatArithmetic:
            return i == 1 ? param_ : BigCount(i + param_ - 2);
        case Kind::Doubling:
            return pow2_checked(i, "doubling growth 2^i * r") * param_;
        case Kind::Table: {
            std::uint64_t idx = to_u64(i, "table growth argument");
            if (idx > values_.size())
                throw std::invalid_argument("table growth: argument past end of table");
            return values_[idx - 1];
        }
        case Kind::Staged: {
            // Stage j covers boundaries[j-1] < i; within a stage the shape
            // is start, start, start+1, ...
            std::size_t j = 0;
            while (j < values_.size() && i > values_[j]) ++j;
            BigCount base = j == 0 ? BigCount(0) : values_[j - 1];
            BigCount local = i - base;
            return local == 1 ? stage_starts_[j] : BigCount(local + stage_starts_[j] - 2);
        }
    }
    throw std::logic_error("growth function: unreachable");
}

std::optional<BigCount> GrowthFunction::unit_gap_from() const {
    switch (kind_) {
        case Kind::Arithmetic:
            return BigCount(1);
        case Kind::FlatArithmetic:
            return BigCount(2);
        case Kind::Staged:
            return values_.empty() ? BigCount(2) : BigCount(values_.back() + 2);
        case Kind::Doubling:
        case Kind::Table:
            return std::nullopt;
    }
    return std::nullopt;
}

std::string GrowthFunction::describe() const {
    switch (kind_) {
        case Kind::Arithmetic: return "arithmetic(" + param_.get_str() + ")";
        case Kind::FlatArithmetic: return "flat_then_arithmetic(" + param_.get_str() + ")";
        case Kind::Doubling: return "doubling(" + param_.get_str() + ")";
        case Kind::Table: return "table[" + std::to_string(values_.size()) + "]";
        case Kind::Staged: return "staged[" + std::to_string(stage_starts_.size()) + "]";
    }
    return "?";
}

}  // namespace prolong::bounds
