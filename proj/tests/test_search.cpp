#include "doctest.h"

#include "json.hpp"

#include "latmeas/errors.hpp"
#include "latmeas/hahn.hpp"
#include "latmeas/model_io.hpp"
#include "latmeas/report.hpp"
#include "latmeas/search.hpp"

#include "helpers.hpp"

using namespace latmeas;
using namespace latmeas_test;
using nlohmann::json;

namespace {

SearchSpec boolean_profile_spec(int max_size) {
    SearchSpec spec;
    spec.max_lattice_size = max_size;
    spec.required_axioms = {Axiom::L5, Axiom::L7, Axiom::L8};
    return spec;
}

} // namespace

TEST_SUITE("search") {

TEST_CASE("axiom names round-trip") {
    CHECK(axiom_from_name("L5") == Axiom::L5);
    CHECK(axiom_from_name("l6") == Axiom::L6);
    CHECK(std::string(axiom_name(Axiom::L8)) == "L8");
    CHECK_THROWS_AS(axiom_from_name("L9"), UsageError);
}

TEST_CASE("the full Boolean profile has a 4-element model with the swap complement") {
    SearchSpec spec;
    spec.max_lattice_size = 4;
    spec.required_axioms = {Axiom::L5, Axiom::L6, Axiom::L7, Axiom::L8};
    std::vector<Finding> findings = search_models(spec);
    REQUIRE(!findings.empty());

    bool found_square = false;
    for (const Finding& f : findings) {
        CHECK(f.kind == FindingKind::ModelFound);
        const LoadedModel model = parse_model_text(f.model_json);
        const json digest = json::parse(f.verdicts_json);
        CHECK(digest["profile_accepted"] == true);
        CHECK(digest["axioms"]["l6"] == true);
        if (model.lattice->size() == 4 && model.complement->table == std::vector<int>{3, 2, 1, 0}) {
            found_square = true;
        }
    }
    CHECK(found_square);
}

TEST_CASE("forbidding non-contradiction empties the profile at small sizes") {
    SearchSpec spec = boolean_profile_spec(4);
    spec.forbidden_axioms = {Axiom::L6};
    std::vector<Finding> findings = search_models(spec);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].kind == FindingKind::NoModelExists);
    CHECK(findings[0].notes.find("size 4") != std::string::npos);
    CHECK(findings[0].notes.find("L5,L7,L8") != std::string::npos);
    CHECK(findings[0].notes.find("L6") != std::string::npos);
}

TEST_CASE("overlapping required and forbidden sets are rejected") {
    SearchSpec spec = boolean_profile_spec(3);
    spec.forbidden_axioms = {Axiom::L5};
    CHECK_THROWS_AS(search_models(spec), PreconditionViolated);
}

TEST_CASE("found measures re-validate from their serialized form") {
    SearchSpec spec = boolean_profile_spec(4);
    spec.measure_value_pool = {Rat(-1), Rat(0), Rat(1), Rat(2)};
    std::vector<Finding> findings = search_models(spec);

    int valid_measures = 0;
    for (const Finding& f : findings) {
        if (f.kind != FindingKind::ValidMeasureFound) continue;
        ++valid_measures;
        const LoadedModel model = parse_model_text(f.model_json);
        REQUIRE(model.measure.has_value());
        CHECK(validate_signed_measure(*model.measure).all_pass());
        CHECK(json::parse(f.verdicts_json) == compute_model_digest(model));
        CHECK(hahn_decompose(*model.measure).findings.empty());
    }
    // Profile models up to size 4: the 1-element lattice, the 2-chain with
    // the swap complement, and the square with the swap complement. Valid
    // valuations over {-1,0,1,2}: one on the point (zero), four on the chain
    // (any top value, antitone covers the negatives), and eight on the
    // square (atom pairs of one sign whose subset sums stay in the pool:
    // six nonnegative, two nonpositive).
    CHECK(valid_measures == 13);
}

TEST_CASE("search is deterministic and the limit truncates the sorted list") {
    SearchSpec spec = boolean_profile_spec(4);
    spec.measure_value_pool = {Rat(-1), Rat(0), Rat(1)};
    std::vector<Finding> all = search_models(spec);
    std::vector<Finding> again = search_models(spec);
    REQUIRE(all.size() == again.size());
    for (size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].model_json == again[i].model_json);
        CHECK(all[i].kind == again[i].kind);
        CHECK(all[i].verdicts_json == again[i].verdicts_json);
    }

    SearchSpec capped = spec;
    capped.limit = 3;
    std::vector<Finding> few = search_models(capped);
    REQUIRE(few.size() == 3);
    for (size_t i = 0; i < few.size(); ++i) {
        CHECK(few[i].model_json == all[i].model_json);
    }
}

TEST_CASE("stress finds no violations over the Boolean-profile corpus") {
    SearchSpec spec = boolean_profile_spec(4);
    spec.measure_value_pool = {Rat(-1), Rat(0), Rat(1), Rat(2)};
    CHECK(stress_theorem(spec).empty());

    SearchSpec zero_pool = boolean_profile_spec(4);
    zero_pool.measure_value_pool = {Rat(0)};
    CHECK(stress_theorem(zero_pool).empty());

    // Nonnegative pool over the whole exhaustive envelope.
    SearchSpec nonneg = boolean_profile_spec(6);
    nonneg.measure_value_pool = {Rat(0), Rat(1), Rat(2)};
    CHECK(stress_theorem(nonneg).empty());
}

TEST_CASE("profile-free search emits one finding per complement table") {
    // On the 1-element lattice every table (there is exactly one) matches an
    // empty profile; on the 2-chain there are four.
    SearchSpec spec;
    spec.max_lattice_size = 2;
    std::vector<Finding> findings = search_models(spec);
    CHECK(findings.size() == 5);
    for (const Finding& f : findings) CHECK(f.kind == FindingKind::ModelFound);
}

} // TEST_SUITE
