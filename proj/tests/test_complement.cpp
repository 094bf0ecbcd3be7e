#include "doctest.h"

#include <random>

#include "latmeas/complement.hpp"
#include "latmeas/enumerate.hpp"
#include "latmeas/errors.hpp"

#include "helpers.hpp"

using namespace latmeas;
using namespace latmeas_test;

TEST_SUITE("complement") {

TEST_CASE("set complement on a powerset satisfies everything") {
    auto lat = share(build_powerset({"p", "q"}));
    ComplementMap comp = make_complement(lat, set_complement_table(2));
    AxiomReport rep = check_axioms(comp);
    CHECK(rep.l5_excluded_middle.ok);
    CHECK(rep.l6_non_contradiction.ok);
    CHECK(rep.l7_contrapositive.ok);
    CHECK(rep.l8_double_negation.ok);
    CHECK(rep.derived_de_morgan.ok);

    ProfileVerdict profile = require_working_profile(rep);
    CHECK(profile.accepted);
    CHECK(profile.l6_holds);
}

TEST_CASE("identity complement on the 2-chain fails excluded middle at bottom") {
    auto two = share(chain(2));
    ComplementMap identity = make_complement(two, {0, 1});
    AxiomReport rep = check_axioms(identity);
    CHECK_FALSE(rep.l5_excluded_middle.ok);
    REQUIRE(rep.l5_excluded_middle.witness.size() == 1);
    CHECK(rep.l5_excluded_middle.witness[0] == two->bottom());
    CHECK(violates_l5(*two, identity, rep.l5_excluded_middle.witness[0]));
    // L7 also fails: the identity is monotone, not antitone.
    CHECK_FALSE(rep.l7_contrapositive.ok);
    CHECK(rep.l8_double_negation.ok);

    CHECK_FALSE(require_working_profile(rep).accepted);
}

TEST_CASE("all-to-top map fails double negation at bottom") {
    auto lat = share(build_powerset({"p", "q"}));
    ComplementMap to_top = make_complement(lat, {3, 3, 3, 3});
    AxiomReport rep = check_axioms(to_top);
    CHECK_FALSE(rep.l8_double_negation.ok);
    REQUIRE(rep.l8_double_negation.witness.size() == 1);
    CHECK(rep.l8_double_negation.witness[0] == lat->bottom());
    CHECK(violates_l8(to_top, rep.l8_double_negation.witness[0]));
}

TEST_CASE("table validation") {
    auto two = share(chain(2));
    CHECK_THROWS_AS(make_complement(two, {0}), ReferentialError);
    CHECK_THROWS_AS(make_complement(two, {0, 5}), ReferentialError);
    CHECK_THROWS_AS(make_complement(nullptr, {}), ReferentialError);
}

TEST_CASE("set complement table is the mask complement") {
    std::vector<int> table = set_complement_table(3);
    for (int mask = 0; mask < 8; ++mask) {
        CHECK(table[static_cast<size_t>(mask)] == (7 ^ mask));
    }
}

TEST_CASE("L7 and L8 together force De Morgan, and all witnesses are sound") {
    // Every complement table on every lattice of size <= 4.
    for (const FiniteLattice& lat_value : enumerate_lattices(4, false)) {
        auto lat = share(lat_value);
        const int n = lat->size();
        std::vector<int> table(static_cast<size_t>(n), 0);
        while (true) {
            ComplementMap comp{lat, table};
            AxiomReport rep = check_axioms(comp);
            if (rep.l7_contrapositive.ok && rep.l8_double_negation.ok) {
                CHECK(rep.derived_de_morgan.ok);
            }
            if (!rep.l5_excluded_middle.ok) {
                CHECK(violates_l5(*lat, comp, rep.l5_excluded_middle.witness.at(0)));
            }
            if (!rep.l6_non_contradiction.ok) {
                CHECK(violates_l6(*lat, comp, rep.l6_non_contradiction.witness.at(0)));
            }
            if (!rep.l7_contrapositive.ok) {
                CHECK(violates_l7(*lat, comp, rep.l7_contrapositive.witness.at(0),
                                  rep.l7_contrapositive.witness.at(1)));
            }
            if (!rep.l8_double_negation.ok) {
                CHECK(violates_l8(comp, rep.l8_double_negation.witness.at(0)));
            }
            if (!rep.derived_de_morgan.ok) {
                CHECK(violates_de_morgan(*lat, comp, rep.derived_de_morgan.witness.at(0),
                                         rep.derived_de_morgan.witness.at(1)));
            }
            int pos = 0;
            while (pos < n && ++table[static_cast<size_t>(pos)] == n) {
                table[static_cast<size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == n) break;
        }
    }
}

TEST_CASE("check_axioms is deterministic") {
    auto pentagon = share(n5());
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, pentagon->size() - 1);
    for (int round = 0; round < 20; ++round) {
        std::vector<int> table(static_cast<size_t>(pentagon->size()));
        for (int& t : table) t = pick(rng);
        ComplementMap comp{pentagon, table};
        AxiomReport first = check_axioms(comp);
        AxiomReport second = check_axioms(comp);
        CHECK(first.l5_excluded_middle.ok == second.l5_excluded_middle.ok);
        CHECK(first.l5_excluded_middle.witness == second.l5_excluded_middle.witness);
        CHECK(first.l7_contrapositive.witness == second.l7_contrapositive.witness);
        CHECK(first.derived_de_morgan.witness == second.derived_de_morgan.witness);
    }
}

} // TEST_SUITE
