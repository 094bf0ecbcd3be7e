#include "latmeas/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "latmeas/enumerate.hpp"
#include "latmeas/errors.hpp"
#include "latmeas/hahn.hpp"
#include "latmeas/model_io.hpp"
#include "latmeas/report.hpp"

namespace latmeas {

Axiom axiom_from_name(const std::string& name) {
    if (name == "L5" || name == "l5") return Axiom::L5;
    if (name == "L6" || name == "l6") return Axiom::L6;
    if (name == "L7" || name == "l7") return Axiom::L7;
    if (name == "L8" || name == "l8") return Axiom::L8;
    throw UsageError("unknown axiom '" + name + "' (expected L5, L6, L7, or L8)");
}

const char* axiom_name(Axiom axiom) {
    switch (axiom) {
        case Axiom::L5: return "L5";
        case Axiom::L6: return "L6";
        case Axiom::L7: return "L7";
        case Axiom::L8: return "L8";
    }
    return "?";
}

const char* finding_kind_name(FindingKind kind) {
    switch (kind) {
        case FindingKind::ModelFound: return "ModelFound";
        case FindingKind::NoModelExists: return "NoModelExists";
        case FindingKind::TheoremViolation: return "TheoremViolation";
        case FindingKind::ValidMeasureFound: return "ValidMeasureFound";
    }
    return "?";
}

namespace {

bool axiom_holds(const AxiomReport& rep, Axiom axiom) {
    switch (axiom) {
        case Axiom::L5: return rep.l5_excluded_middle.ok;
        case Axiom::L6: return rep.l6_non_contradiction.ok;
        case Axiom::L7: return rep.l7_contrapositive.ok;
        case Axiom::L8: return rep.l8_double_negation.ok;
    }
    return false;
}

bool profile_matches(const AxiomReport& rep, const SearchSpec& spec) {
    for (Axiom a : spec.required_axioms) {
        if (!axiom_holds(rep, a)) return false;
    }
    for (Axiom a : spec.forbidden_axioms) {
        if (axiom_holds(rep, a)) return false;
    }
    return true;
}

std::string axiom_list(const std::vector<Axiom>& axioms) {
    if (axioms.empty()) return "(none)";
    std::string out;
    for (size_t i = 0; i < axioms.size(); ++i) {
        if (i) out += ",";
        out += axiom_name(axioms[i]);
    }
    return out;
}

std::string pool_list(const std::vector<Rat>& pool) {
    if (pool.empty()) return "(none)";
    std::string out;
    for (size_t i = 0; i < pool.size(); ++i) {
        if (i) out += ",";
        out += to_string(pool[i]);
    }
    return out;
}

constexpr int kComplementSamples = 20000;
constexpr int kLatticeSamplesPerSize = 20;
constexpr unsigned long long kValuationCap = 500000;
constexpr int kValuationSamples = 100000;

// Enumerates measures over the member set with values from the pool and
// emits a ValidMeasureFound finding per valuation passing the signed
// clauses. The bottom slot is pinned to 0 (clause 1 admits nothing else).
void measure_phase(const LoadedModel& base, const SearchSpec& spec, std::mt19937_64& rng,
                   const std::string& model_note, std::vector<Finding>& out) {
    const auto& pool = spec.measure_value_pool;
    if (pool.empty()) return;
    const auto zero_it = std::find(pool.begin(), pool.end(), Rat(0));
    if (zero_it == pool.end()) return; // no valuation can satisfy clause 1
    const size_t zero_pos = static_cast<size_t>(zero_it - pool.begin());

    const int m = base.algebra->member_count();
    const int bottom_slot = base.algebra->member_position(base.lattice->bottom());

    auto try_valuation = [&](const std::vector<size_t>& choice) {
        SignedMeasure measure;
        measure.algebra = base.algebra;
        measure.kind = MeasureKind::signed_candidate;
        measure.values.reserve(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) measure.values.push_back(pool[choice[static_cast<size_t>(i)]]);
        if (!validate_signed_measure(measure).all_pass()) return;
        LoadedModel with_measure = base;
        with_measure.measure = measure;
        Finding f;
        f.kind = FindingKind::ValidMeasureFound;
        f.model_json = serialize_model_text(with_measure);
        f.notes = model_note;
        f.verdicts_json = compute_model_digest(with_measure).dump();
        out.push_back(std::move(f));
    };

    unsigned long long total = 1;
    for (int i = 0; i < m - 1 && total <= kValuationCap; ++i) total *= pool.size();

    std::vector<size_t> choice(static_cast<size_t>(m), 0);
    choice[static_cast<size_t>(bottom_slot)] = zero_pos;
    if (total <= kValuationCap) {
        // Odometer over every slot except bottom.
        while (true) {
            try_valuation(choice);
            int slot = 0;
            while (slot < m) {
                if (slot == bottom_slot) {
                    ++slot;
                    continue;
                }
                if (++choice[static_cast<size_t>(slot)] < pool.size()) break;
                choice[static_cast<size_t>(slot)] = 0;
                ++slot;
            }
            if (slot >= m) break;
        }
    } else {
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        for (int s = 0; s < kValuationSamples; ++s) {
            for (int i = 0; i < m; ++i) {
                choice[static_cast<size_t>(i)] = (i == bottom_slot) ? zero_pos : pick(rng);
            }
            try_valuation(choice);
        }
    }
}

} // namespace

std::vector<Finding> search_models(const SearchSpec& spec) {
    for (Axiom a : spec.required_axioms) {
        if (std::find(spec.forbidden_axioms.begin(), spec.forbidden_axioms.end(), a) !=
            spec.forbidden_axioms.end()) {
            throw PreconditionViolated(std::string("axiom ") + axiom_name(a) + " is both required and forbidden");
        }
    }

    std::vector<FiniteLattice> lattices = enumerate_lattices(std::min(spec.max_lattice_size, 8),
                                                             spec.require_distributive);
    const bool lattices_sampled = spec.max_lattice_size > 8;
    if (lattices_sampled) {
        std::vector<FiniteLattice> extra = sample_lattices(9, spec.max_lattice_size, kLatticeSamplesPerSize,
                                                           spec.seed, spec.require_distributive);
        for (FiniteLattice& lat : extra) lattices.push_back(std::move(lat));
    }

    std::mt19937_64 rng(spec.seed);
    bool complements_sampled = false;
    std::vector<Finding> found;

    for (FiniteLattice& lat_value : lattices) {
        auto lattice = std::make_shared<const FiniteLattice>(std::move(lat_value));
        const int n = lattice->size();

        std::string note = "profile required=" + axiom_list(spec.required_axioms) +
                           " forbidden=" + axiom_list(spec.forbidden_axioms);
        if (n > 6) note += "; complement tables sampled (" + std::to_string(kComplementSamples) + ")";
        if (lattices_sampled && n > 8) note += "; lattice sampled";

        auto consider = [&](std::vector<int> table) {
            ComplementMap candidate{lattice, std::move(table)};
            const AxiomReport axioms = check_axioms(candidate);
            if (!profile_matches(axioms, spec)) return;

            auto complement = std::make_shared<const ComplementMap>(std::move(candidate));
            std::vector<int> all(static_cast<size_t>(n));
            std::iota(all.begin(), all.end(), 0);
            auto algebra = std::make_shared<const SigmaAlgebra>(generate_algebra(lattice, complement, std::move(all)));

            LoadedModel model{lattice, complement, algebra, std::nullopt};
            Finding f;
            f.kind = FindingKind::ModelFound;
            f.model_json = serialize_model_text(model);
            f.notes = note;
            f.verdicts_json = compute_model_digest(model).dump();
            found.push_back(std::move(f));

            measure_phase(model, spec, rng, note, found);
        };

        if (n <= 6) {
            std::vector<int> table(static_cast<size_t>(n), 0);
            while (true) {
                consider(table);
                int pos = 0;
                while (pos < n && ++table[static_cast<size_t>(pos)] == n) {
                    table[static_cast<size_t>(pos)] = 0;
                    ++pos;
                }
                if (pos == n) break;
            }
        } else {
            complements_sampled = true;
            std::uniform_int_distribution<int> pick(0, n - 1);
            std::set<std::vector<int>> seen;
            for (int s = 0; s < kComplementSamples; ++s) {
                std::vector<int> table(static_cast<size_t>(n));
                for (int& t : table) t = pick(rng);
                if (!seen.insert(table).second) continue;
                consider(table);
            }
        }
    }

    std::sort(found.begin(), found.end(), [](const Finding& a, const Finding& b) {
        if (a.model_json != b.model_json) return a.model_json < b.model_json;
        return a.kind < b.kind;
    });
    if (static_cast<int>(found.size()) > spec.limit) {
        found.resize(static_cast<size_t>(spec.limit));
    }

    if (found.empty() && !lattices_sampled && !complements_sampled) {
        Finding none;
        none.kind = FindingKind::NoModelExists;
        none.notes = "exhausted all bounded lattices up to size " + std::to_string(spec.max_lattice_size) +
                     " (isomorph-free) and every complement table on them; required=" +
                     axiom_list(spec.required_axioms) + " forbidden=" + axiom_list(spec.forbidden_axioms) +
                     (spec.require_distributive ? "; distributive only" : "") +
                     "; pool=" + pool_list(spec.measure_value_pool);
        found.push_back(std::move(none));
    }
    return found;
}

std::vector<Finding> stress_theorem(const SearchSpec& spec) {
    std::vector<Finding> violations;
    for (const Finding& f : search_models(spec)) {
        if (f.kind != FindingKind::ValidMeasureFound) continue;
        const LoadedModel model = parse_model_text(f.model_json);
        const SignedMeasure& measure = *model.measure;

        const HahnDecomposition dec = hahn_decompose(measure);
        const HahnDecomposition oracle = oracle_decompose(measure);

        std::vector<std::string> problems;
        for (const TheoremViolation& v : dec.findings) {
            problems.push_back(v.claim + ": " + v.detail);
        }
        if (!oracle.has_pair()) {
            problems.push_back("oracle scan found no valid pair");
        } else {
            if (dec.a != oracle.a || dec.b != oracle.b) {
                problems.push_back("pair mismatch: decompose picked (" + std::to_string(dec.a) + "," +
                                   std::to_string(dec.b) + "), oracle (" + std::to_string(oracle.a) + "," +
                                   std::to_string(oracle.b) + ")");
            }
            if (dec.lambda != oracle.lambda) {
                problems.push_back("lambda mismatch: " + to_string(dec.lambda) + " vs oracle " +
                                   to_string(oracle.lambda));
            }
        }
        if (problems.empty()) continue;

        Finding violation;
        violation.kind = FindingKind::TheoremViolation;
        violation.model_json = f.model_json;
        violation.verdicts_json = f.verdicts_json;
        for (size_t i = 0; i < problems.size(); ++i) {
            if (i) violation.notes += "; ";
            violation.notes += problems[i];
        }
        violations.push_back(std::move(violation));
    }
    std::sort(violations.begin(), violations.end(),
              [](const Finding& a, const Finding& b) { return a.model_json < b.model_json; });
    return violations;
}

} // namespace latmeas
