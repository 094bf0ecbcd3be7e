#include "doctest.h"

#include "latmeas/enumerate.hpp"
#include "latmeas/errors.hpp"
#include "latmeas/lattice.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace latmeas;
using namespace latmeas_test;

TEST_SUITE("lattice") {

TEST_CASE("two-element chain from a single cover") {
    FiniteLattice lat = build_from_covers({"bot", "top"}, {{0, 1}});
    CHECK(lat.size() == 2);
    CHECK(lat.bottom() == 0);
    CHECK(lat.top() == 1);
    CHECK(lat.meet(0, 1) == 0);
    CHECK(lat.join(0, 1) == 1);
    CHECK(lat.leq(0, 1));
    CHECK_FALSE(lat.leq(1, 0));
}

TEST_CASE("covers of the square reproduce the 2-set powerset tables") {
    FiniteLattice from_covers =
        build_from_covers({"{}", "{p}", "{q}", "{p,q}"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    FiniteLattice powerset = build_powerset({"p", "q"});
    CHECK(from_covers == powerset);
    CHECK(build_from_covers(powerset.names(), powerset.cover_pairs()) == powerset);
}

TEST_CASE("M3 builds as a lattice but is not distributive") {
    FiniteLattice diamond = m3();
    CHECK(check_lattice_laws(diamond).all_ok());
    AxiomVerdict verdict = check_distributive(diamond);
    CHECK_FALSE(verdict.ok);
    REQUIRE(verdict.witness.size() == 3);
    // The witness is a triple of atoms and re-evaluates to a violation.
    for (int w : verdict.witness) {
        CHECK(w != diamond.bottom());
        CHECK(w != diamond.top());
    }
    const int x = verdict.witness[0];
    const int y = verdict.witness[1];
    const int z = verdict.witness[2];
    const bool meet_law = diamond.meet(x, diamond.join(y, z)) ==
                          diamond.join(diamond.meet(x, y), diamond.meet(x, z));
    const bool join_law = diamond.join(x, diamond.meet(y, z)) ==
                          diamond.meet(diamond.join(x, y), diamond.join(x, z));
    CHECK_FALSE((meet_law && join_law));
}

TEST_CASE("N5 is not distributive, powersets are") {
    CHECK_FALSE(check_distributive(n5()).ok);
    CHECK(check_distributive(build_powerset({"p", "q"})).ok);
    CHECK(check_distributive(build_powerset({})).ok);
}

TEST_CASE("construction failures") {
    CHECK_THROWS_AS(build_from_covers({"a", "b"}, {{0, 1}, {1, 0}}), CycleDetected);
    CHECK_THROWS_AS(build_from_covers({"a"}, {{0, 0}}), CycleDetected);
    CHECK_THROWS_AS(build_from_covers({}, {}), MissingBounds);
    CHECK_THROWS_AS(build_from_covers({"a", "b"}, {}), MissingBounds);
    CHECK_THROWS_AS(build_from_covers({"a", "b"}, {{0, 5}}), ReferentialError);
    // Bowtie: (a, b) has two minimal upper bounds.
    CHECK_THROWS_AS(build_from_covers({"bot", "a", "b", "c", "d", "top"},
                                      {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}),
                    NotALattice);
}

TEST_CASE("powerset construction") {
    FiniteLattice empty = build_powerset({});
    CHECK(empty.size() == 1);
    CHECK(empty.bottom() == empty.top());

    FiniteLattice one = build_powerset({"p"});
    CHECK(one.size() == 2);
    CHECK(one.name(1) == "{p}");

    FiniteLattice two = build_powerset({"p", "q"});
    CHECK(two.size() == 4);
    CHECK(two.meet(1, 2) == 0);
    CHECK(two.join(1, 2) == 3);
    CHECK(two.name(3) == "{p,q}");

    std::vector<std::string> too_many;
    for (int i = 0; i < 17; ++i) too_many.push_back("x" + std::to_string(i));
    CHECK_THROWS_AS(build_powerset(too_many), GroundSetTooLarge);
}

TEST_CASE("frame law") {
    CHECK(is_frame(build_powerset({})).ok);
    CHECK(is_frame(build_powerset({"p"})).ok);
    CHECK(is_frame(build_powerset({"p", "q"})).ok);
    CHECK(is_frame(build_powerset({"p", "q", "r"})).ok);
    CHECK_FALSE(is_frame(n5()).ok);
    CHECK_FALSE(is_frame(m3()).ok);

    // Oracle agreement via subset-mask arithmetic.
    for (int k = 0; k <= 3; ++k) CHECK(oracle::frame_powerset(k));

    // Ground size 4 exceeds the exhaustive cutoff; the verdict says so.
    AxiomVerdict big = is_frame(build_powerset({"a", "b", "c", "d"}));
    CHECK(big.ok);
    CHECK(big.note.find("sampled") != std::string::npos);
}

TEST_CASE("frame witness re-evaluates on N5") {
    FiniteLattice pentagon = n5();
    AxiomVerdict verdict = is_frame(pentagon);
    REQUIRE_FALSE(verdict.ok);
    REQUIRE(verdict.witness.size() >= 2);
    const int y = verdict.witness.back();
    std::vector<int> subset(verdict.witness.begin(), verdict.witness.end() - 1);
    int lhs = pentagon.bottom();
    for (int x : subset) lhs = pentagon.join(lhs, pentagon.meet(x, y));
    CHECK(lhs != pentagon.meet(pentagon.join_all(subset), y));
}

TEST_CASE("homomorphism checks") {
    auto diamond = share(m3());
    std::vector<int> identity = all_indices(diamond->size());
    HomomorphismVerdict id_verdict = is_homomorphism({diamond, diamond, identity});
    CHECK(id_verdict.preserves_ops.ok);
    CHECK(id_verdict.bijective);

    std::vector<int> to_bottom(static_cast<size_t>(diamond->size()), diamond->bottom());
    HomomorphismVerdict const_verdict = is_homomorphism({diamond, diamond, to_bottom});
    CHECK(const_verdict.preserves_ops.ok);
    CHECK_FALSE(const_verdict.bijective);

    auto two = share(chain(2));
    HomomorphismVerdict swap_verdict = is_homomorphism({two, two, {1, 0}});
    CHECK_FALSE(swap_verdict.preserves_ops.ok);
    CHECK(swap_verdict.preserves_ops.witness == std::vector<int>{0, 1});
    CHECK(swap_verdict.bijective);

    CHECK_THROWS_AS(is_homomorphism({two, two, {0}}), ReferentialError);
    CHECK_THROWS_AS(is_homomorphism({two, two, {0, 7}}), ReferentialError);
}

TEST_CASE("lattice laws hold across the enumerated corpus") {
    for (const FiniteLattice& lat : enumerate_lattices(5, false)) {
        const LatticeLawsReport laws = check_lattice_laws(lat);
        CHECK(laws.l1_commutative.ok);
        CHECK(laws.l2_associative.ok);
        CHECK(laws.l3_absorption.ok);
        CHECK(laws.bounds.ok);
        CHECK(laws.order_consistency.ok);
    }
}

TEST_CASE("meet and join folds") {
    FiniteLattice two = build_powerset({"p", "q"});
    CHECK(two.join_all({}) == two.bottom());
    CHECK(two.meet_all({}) == two.top());
    CHECK(two.join_all({1, 2}) == 3);
    CHECK(two.meet_all({1, 3}) == 1);
}

} // TEST_SUITE
