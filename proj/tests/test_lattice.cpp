#include <doctest.h>

#include <random>

#include "prolong/lattice.hpp"

using namespace prolong;
using lattice::AntichainSequence;
using lattice::IndexedMonomial;
using lattice::Monomial;

namespace {
Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }
IndexedMonomial im(std::vector<std::uint32_t> e, std::uint32_t i) {
    return {mono(std::move(e)), i};
}

IndexedMonomial random_element(std::mt19937_64& rng, std::size_t m, std::uint32_t n,
                               std::uint32_t max_entry) {
    std::vector<std::uint32_t> e(m);
    for (auto& u : e) u = rng() % (max_entry + 1);
    return {Monomial(std::move(e)), static_cast<std::uint32_t>(1 + rng() % n)};
}
}  // namespace

TEST_CASE("degree sums entries and ignores the index") {
    CHECK(im({2, 0}, 1).degree() == 2);
    CHECK(im({0, 0, 0}, 3).degree() == 0);
    CHECK(im({5, 0}, 1).degree() == 5);
}

TEST_CASE("product order compares only within one index") {
    CHECK(leq(im({1, 0}, 1), im({2, 0}, 1)));
    CHECK_FALSE(leq(im({1, 0}, 1), im({2, 0}, 2)));
    CHECK_FALSE(leq(im({2, 0}, 1), im({0, 2}, 1)));
    CHECK_FALSE(leq(im({0, 2}, 1), im({2, 0}, 1)));
}

TEST_CASE("orderly ranking: degree, then index, then entries") {
    CHECK(orderly_less(im({1, 0}, 1), im({0, 1}, 2)));
    CHECK(orderly_less(im({0, 2}, 1), im({2, 0}, 1)));
    CHECK(orderly_cmp(im({3, 0}, 1), im({0, 1}, 1)) == std::strong_ordering::greater);
}

TEST_CASE("orderly ranking is a total order") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 3000; ++it) {
        auto a = random_element(rng, 3, 2, 4);
        auto b = random_element(rng, 3, 2, 4);
        auto c = random_element(rng, 3, 2, 4);
        // trichotomy
        int rel = 0;
        if (orderly_less(a, b)) ++rel;
        if (orderly_less(b, a)) ++rel;
        if (a == b) ++rel;
        CHECK(rel == 1);
        // transitivity
        if (orderly_less(a, b) && orderly_less(b, c)) CHECK(orderly_less(a, c));
    }
}

TEST_CASE("product order refines into the orderly ranking on equal indices") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 3000; ++it) {
        auto a = random_element(rng, 3, 1, 4);
        auto b = random_element(rng, 3, 1, 4);
        if (leq(a, b) && !(a == b)) CHECK(orderly_less(a, b));
    }
}

TEST_CASE("least upper bound is the componentwise max") {
    CHECK(lub(mono({2, 0}), mono({0, 2})) == mono({2, 2}));
    CHECK(lub(mono({3, 1}), mono({3, 1})) == mono({3, 1}));
    CHECK(lub(mono({2, 0, 0}), mono({0, 2, 0})) == mono({2, 2, 0}));
    CHECK_THROWS_AS(lub(mono({1}), mono({1, 2})), DimensionMismatch);
}

TEST_CASE("degree slices enumerate descending with binomial cardinality") {
    auto s24 = lattice::degree_slice(2, 4);
    CHECK(s24.size() == 5);
    CHECK(s24.front() == mono({4, 0}));
    CHECK(s24.back() == mono({0, 4}));
    CHECK(lattice::degree_slice(1, 7) == std::vector<Monomial>{mono({7})});
    CHECK(lattice::degree_slice(3, 2).size() == 6);

    for (std::size_t m = 1; m <= 5; ++m)
        for (std::uint64_t d = 0; d <= 12; ++d) {
            auto slice = lattice::degree_slice(m, d);
            CHECK(BigCount(slice.size()) == binomial(BigCount(m) - 1 + d, BigCount(d)));
            for (std::size_t i = 0; i + 1 < slice.size(); ++i)
                CHECK(orderly_less(slice[i + 1], slice[i]));
        }
    CHECK_THROWS_AS(lattice::degree_slice(4, 500), EnumerationLimit);
}

TEST_CASE("pairwise lubs of same-index distinct pairs") {
    auto seq = AntichainSequence::validate({im({3, 0}, 1), im({0, 3}, 1)}, 2, 1);
    auto g = lattice::pairwise_lubs(seq);
    REQUIRE(g.size() == 1);
    CHECK(g[0] == im({3, 3}, 1));

    auto single = AntichainSequence::validate({im({2, 0}, 1)}, 2, 1);
    CHECK(lattice::pairwise_lubs(single).empty());

    auto three = AntichainSequence::validate({im({2, 0}, 1), im({1, 1}, 1), im({0, 2}, 1)}, 2, 1);
    auto g3 = lattice::pairwise_lubs(three);
    REQUIRE(g3.size() == 3);
    CHECK(g3[0] == im({1, 2}, 1));
    CHECK(g3[1] == im({2, 1}, 1));
    CHECK(g3[2] == im({2, 2}, 1));

    // Distinct indices contribute nothing.
    auto mixed = AntichainSequence::validate({im({1, 0}, 1), im({1, 0}, 2)}, 2, 2);
    CHECK(lattice::pairwise_lubs(mixed).empty());
}

TEST_CASE("lubs of a bounded-degree sequence live within twice the degree") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 500; ++it) {
        std::vector<IndexedMonomial> anti;
        for (int k = 0; k < 6; ++k) {
            auto cand = random_element(rng, 3, 2, 3);
            bool ok = true;
            for (const auto& kept : anti)
                if (leq(kept, cand) || leq(cand, kept)) ok = false;
            if (ok) anti.push_back(cand);
        }
        auto seq = AntichainSequence::validate(anti, 3, 2);
        std::uint64_t r = seq.max_degree();
        for (const auto& t : lattice::pairwise_lubs(seq)) CHECK(t.degree() <= 2 * r);
    }
}

TEST_CASE("truncate keeps the low-degree prefix set in order") {
    auto seq = AntichainSequence::validate({im({2, 0}, 1), im({1, 1}, 1), im({0, 2}, 1)}, 2, 1);
    CHECK(seq.truncate(1).empty());
    CHECK(seq.truncate(2).size() == 3);
    CHECK(seq.truncate(99).size() == 3);

    auto two = AntichainSequence::validate({im({2, 0}, 1), im({0, 3}, 1)}, 2, 1);
    auto t = two.truncate(2);
    REQUIRE(t.size() == 1);
    CHECK(t[0] == im({2, 0}, 1));
}

TEST_CASE("antichain validation rejects comparable pairs and bad dimensions") {
    CHECK_NOTHROW(AntichainSequence::validate({im({2, 0}, 1), im({1, 1}, 1)}, 2, 1));
    CHECK_NOTHROW(AntichainSequence::validate({im({1, 0}, 1), im({1, 0}, 2)}, 2, 2));
    try {
        AntichainSequence::validate({im({1, 0}, 1), im({2, 0}, 1)}, 2, 1);
        FAIL("expected ComparablePair");
    } catch (const ComparablePair& e) {
        CHECK(e.first() == 0);
        CHECK(e.second() == 1);
    }
    CHECK_THROWS_AS(AntichainSequence::validate({im({1, 0, 0}, 1)}, 2, 1), DimensionMismatch);
    CHECK_THROWS_AS(AntichainSequence::validate({im({1, 0}, 3)}, 2, 2), std::invalid_argument);
}

TEST_CASE("every validated sequence is pairwise incomparable") {
    std::mt19937_64 rng(10);
    for (int it = 0; it < 300; ++it) {
        std::vector<IndexedMonomial> anti;
        for (int k = 0; k < 8; ++k) {
            auto cand = random_element(rng, 2, 2, 5);
            bool ok = true;
            for (const auto& kept : anti)
                if (leq(kept, cand) || leq(cand, kept)) ok = false;
            if (ok) anti.push_back(cand);
        }
        auto seq = AntichainSequence::validate(anti, 2, 2);
        for (std::size_t i = 0; i < seq.size(); ++i)
            for (std::size_t j = i + 1; j < seq.size(); ++j) {
                CHECK_FALSE(leq(seq[i], seq[j]));
                CHECK_FALSE(leq(seq[j], seq[i]));
            }
    }
}
