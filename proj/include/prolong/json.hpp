#ifndef PROLONG_JSON_HPP
#define PROLONG_JSON_HPP

#include <json.hpp>

#include "prolong/bounds.hpp"
#include "prolong/consistency.hpp"
#include "prolong/hilbert.hpp"
#include "prolong/lattice.hpp"
#include "prolong/oracle.hpp"

namespace prolong::io {

/// Insertion-ordered JSON so emitted documents are byte-for-byte
/// deterministic for identical inputs.
using json = nlohmann::ordered_json;

// Monomial <-> [u1, ..., um]
json to_json(const lattice::Monomial& xi);
lattice::Monomial monomial_from_json(const json& j);

// IndexedMonomial <-> [[u1, ..., um], i]
json to_json(const lattice::IndexedMonomial& a);
lattice::IndexedMonomial indexed_monomial_from_json(const json& j);

// AntichainSequence <-> {"m":, "n":, "elements": [...]}
json to_json(const lattice::AntichainSequence& seq);
lattice::AntichainSequence antichain_from_json(const json& j);

// StaircaseSet <-> {"m":, "generators": [[...], ...]}
json to_json(const hilbert::StaircaseSet& M);
hilbert::StaircaseSet staircase_from_json(const json& j);

// BigCount <-> decimal string
json to_json(const BigCount& v);
BigCount bigcount_from_json(const json& j);

json to_json(const consistency::ConsistencyResult& result);
consistency::ConsistencyResult consistency_result_from_json(const json& j);

json to_json(const bounds::BoundReport& report);
bounds::BoundReport bound_report_from_json(const json& j);

json to_json(const oracle::VerificationReport& report);
oracle::VerificationReport verification_report_from_json(const json& j);

}  // namespace prolong::io

#endif
