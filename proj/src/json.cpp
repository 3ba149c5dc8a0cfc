#include "prolong/json.hpp"

namespace prolong::io {

json to_json(const lattice::Monomial& xi) {
    json j = json::array();
    for (std::size_t i = 0; i < xi.dim(); ++i) j.push_back(xi[i]);
    return j;
}

lattice::Monomial monomial_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("monomial: expected [u1,...,um]");
    std::vector<std::uint32_t> e;
    for (const auto& v : j) e.push_back(v.get<std::uint32_t>());
    return lattice::Monomial(std::move(e));
}

json to_json(const lattice::IndexedMonomial& a) {
    return json::array({to_json(a.xi), a.index});
}

lattice::IndexedMonomial indexed_monomial_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("indexed monomial: expected [[u1,...,um], i]");
    return {monomial_from_json(j[0]), j[1].get<std::uint32_t>()};
}

json to_json(const lattice::AntichainSequence& seq) {
    json elements = json::array();
    for (const auto& e : seq) elements.push_back(to_json(e));
    return json{{"m", seq.m()}, {"n", seq.n()}, {"elements", std::move(elements)}};
}

lattice::AntichainSequence antichain_from_json(const json& j) {
    std::size_t m = j.at("m").get<std::size_t>();
    std::uint32_t n = j.at("n").get<std::uint32_t>();
    std::vector<lattice::IndexedMonomial> elements;
    for (const auto& e : j.at("elements")) elements.push_back(indexed_monomial_from_json(e));
    return lattice::AntichainSequence::validate(std::move(elements), m, n);
}

json to_json(const hilbert::StaircaseSet& M) {
    json gens = json::array();
    for (const auto& g : M.generators) gens.push_back(to_json(g));
    return json{{"m", M.m}, {"generators", std::move(gens)}};
}

hilbert::StaircaseSet staircase_from_json(const json& j) {
    std::size_t m = j.at("m").get<std::size_t>();
    std::vector<lattice::Monomial> gens;
    for (const auto& g : j.at("generators")) gens.push_back(monomial_from_json(g));
    return hilbert::StaircaseSet::validate(m, std::move(gens));
}

json to_json(const BigCount& v) { return v.get_str(); }

BigCount bigcount_from_json(const json& j) {
    if (j.is_number_integer()) {
        auto v = j.get<std::int64_t>();
        if (v < 0) throw std::invalid_argument("count must be nonnegative");
        return BigCount(static_cast<unsigned long>(v));
    }
    return BigCount(j.get<std::string>());
}

json to_json(const consistency::ConsistencyResult& result) {
    auto obligation_json = [](const consistency::Obligation& ob) {
        json chain = json::array();
        for (const auto& eta : ob.chain) chain.push_back(to_json(eta));
        return json{{"tau", to_json(ob.tau)},
                    {"index", ob.index},
                    {"i", ob.i},
                    {"j", ob.j},
                    {"chain", std::move(chain)}};
    };
    json obligations = json::array();
    for (const auto& ob : result.obligations) obligations.push_back(obligation_json(ob));
    json j{{"D", result.level}, {"r", result.start}, {"obligations", std::move(obligations)}};
    if (result.failure_witness) {
        j["failure_witness"] = json{{"level", result.failure_witness->level},
                                    {"obligation", obligation_json(result.failure_witness->obligation)}};
    } else {
        j["failure_witness"] = nullptr;
    }
    return j;
}

namespace {
consistency::Obligation obligation_from_json(const json& j) {
    consistency::Obligation ob;
    ob.tau = monomial_from_json(j.at("tau"));
    ob.index = j.at("index").get<std::uint32_t>();
    ob.i = j.at("i").get<std::size_t>();
    ob.j = j.at("j").get<std::size_t>();
    for (const auto& eta : j.at("chain")) ob.chain.push_back(monomial_from_json(eta));
    return ob;
}
}  // namespace

consistency::ConsistencyResult consistency_result_from_json(const json& j) {
    consistency::ConsistencyResult result;
    result.level = j.at("D").get<std::uint64_t>();
    result.start = j.at("r").get<std::uint64_t>();
    for (const auto& ob : j.at("obligations"))
        result.obligations.push_back(obligation_from_json(ob));
    const auto& witness = j.at("failure_witness");
    if (!witness.is_null())
        result.failure_witness = consistency::FailureWitness{
            witness.at("level").get<std::uint64_t>(),
            obligation_from_json(witness.at("obligation"))};
    return result;
}

json to_json(const bounds::BoundReport& report) {
    json inter = json::object();
    for (const auto& [k, v] : report.intermediates) inter[k] = v.get_str();
    return json{{"value", report.value.get_str()},
                {"formula_path", report.formula_path},
                {"intermediates", std::move(inter)}};
}

bounds::BoundReport bound_report_from_json(const json& j) {
    bounds::BoundReport report;
    report.value = bigcount_from_json(j.at("value"));
    report.formula_path = j.at("formula_path").get<std::string>();
    for (const auto& [k, v] : j.at("intermediates").items())
        report.intermediates.emplace_back(k, bigcount_from_json(v));
    return report;
}

json to_json(const oracle::VerificationReport& report) {
    json params = json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    return json{{"claim", report.claim},
                {"params", std::move(params)},
                {"instances_checked", report.instances_checked},
                {"failures", report.failures},
                {"complete", report.complete},
                {"coverage", report.coverage}};
}

oracle::VerificationReport verification_report_from_json(const json& j) {
    oracle::VerificationReport report;
    report.claim = j.at("claim").get<std::string>();
    for (const auto& [k, v] : j.at("params").items())
        report.params.emplace_back(k, v.get<std::string>());
    report.instances_checked = j.at("instances_checked").get<std::uint64_t>();
    for (const auto& f : j.at("failures")) report.failures.push_back(f.get<std::string>());
    report.complete = j.at("complete").get<bool>();
    report.coverage = j.at("coverage").get<std::string>();
    return report;
}

}  // namespace prolong::io
