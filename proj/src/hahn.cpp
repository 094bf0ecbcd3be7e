#include "latmeas/hahn.hpp"

#include <algorithm>

#include "latmeas/errors.hpp"

namespace latmeas {

PolarityCertificate classify_polarity(const SignedMeasure& measure, int element) {
    const SigmaAlgebra& alg = *measure.algebra;
    const FiniteLattice& lat = alg.lattice();
    if (!alg.is_member(element)) {
        throw NotAMember("element " + std::to_string(element) + " is not an algebra member");
    }

    PolarityCertificate cert;
    cert.element = element;
    cert.positive = true;
    cert.negative = true;
    for (int e : alg.members()) {
        if (lat.meet(e, element) != e) continue; // order test via meet
        cert.checked.push_back(e);
        const Rat& v = measure.value_of(e);
        if (v < Rat(0) && !cert.positive_witness) {
            cert.positive = false;
            cert.positive_witness = e;
        }
        if (v > Rat(0) && !cert.negative_witness) {
            cert.negative = false;
            cert.negative_witness = e;
        }
    }
    return cert;
}

UnionPositiveResult union_positive(const SignedMeasure& measure, const std::vector<int>& elements) {
    const SigmaAlgebra& alg = *measure.algebra;
    const FiniteLattice& lat = alg.lattice();
    for (int e : elements) {
        const PolarityCertificate cert = classify_polarity(measure, e);
        if (!cert.positive) {
            throw PreconditionViolated("input " + lat.name(e) + " is not a positive lattice");
        }
    }

    UnionPositiveResult result;
    const int joined = lat.join_all(elements);
    result.certificate = classify_polarity(measure, joined);
    if (!result.certificate.positive) {
        TheoremViolation violation;
        violation.claim = "a finite union of positive lattices is a positive lattice";
        violation.detail = "join " + lat.name(joined) + " has a sub-member of negative measure";
        if (result.certificate.positive_witness) violation.witness.push_back(*result.certificate.positive_witness);
        result.findings.push_back(std::move(violation));
    }
    return result;
}

namespace {

// Least n >= 1 with value < -1/n, for value < 0: floor(1 / -value) + 1.
long long threshold_rank_for(const Rat& value) {
    const long long num = -value.numerator(); // > 0
    const long long den = value.denominator();
    return den / num + 1;
}

} // namespace

ExtractionTrace extract_positive(const SignedMeasure& measure, int element) {
    const SigmaAlgebra& alg = *measure.algebra;
    const FiniteLattice& lat = alg.lattice();
    if (!alg.is_member(element)) {
        throw NotAMember("element " + std::to_string(element) + " is not an algebra member");
    }
    if (!(measure.value_of(element) > Rat(0))) {
        throw PreconditionViolated("extraction needs a start element with measure > 0, got " +
                                   to_string(measure.value_of(element)));
    }

    ExtractionTrace trace;
    trace.start = element;
    int remainder = element;

    const int step_cap = alg.member_count();
    for (int round = 0; round <= step_cap; ++round) {
        PolarityCertificate cert = classify_polarity(measure, remainder);
        if (cert.positive) {
            trace.result = remainder;
            trace.result_certificate = std::move(cert);
            break;
        }
        if (round == step_cap) {
            trace.result = remainder;
            trace.result_certificate = std::move(cert);
            trace.findings.push_back({"positive extraction terminates within |algebra| rounds",
                                      "remainder " + lat.name(remainder) + " is still not positive",
                                      {remainder}});
            break;
        }

        // Most negative sub-member of the remainder, ties to smallest index.
        int worst = -1;
        Rat worst_value(0);
        for (int g : alg.members()) {
            if (lat.meet(g, remainder) != g) continue;
            const Rat& v = measure.value_of(g);
            if (v < Rat(0) && (worst < 0 || v < worst_value)) {
                worst = g;
                worst_value = v;
            }
        }
        // A non-positive remainder always has such a sub-member.
        trace.steps.push_back({worst, threshold_rank_for(worst_value), worst_value});

        const int next = lat.meet(remainder, alg.complement().of(worst));
        if (next == remainder) {
            trace.result = remainder;
            trace.result_certificate = classify_polarity(measure, remainder);
            trace.findings.push_back({"stripping a negative sub-member shrinks the remainder",
                                      "meeting " + lat.name(remainder) + " with the complement of " +
                                          lat.name(worst) + " changed nothing",
                                      {remainder, worst}});
            break;
        }
        remainder = next;
    }

    if (trace.findings.empty()) {
        if (!(measure.value_of(trace.result) > Rat(0))) {
            trace.findings.push_back({"the extracted positive lattice has measure > 0",
                                      "result " + lat.name(trace.result) + " carries " +
                                          to_string(measure.value_of(trace.result)),
                                      {trace.result}});
        }
        if (!trace.result_certificate.positive) {
            trace.findings.push_back({"the extraction result is a positive lattice",
                                      "result " + lat.name(trace.result) + " failed its certificate",
                                      {trace.result}});
        }
    }
    return trace;
}

HahnDecomposition hahn_decompose(const SignedMeasure& measure) {
    if (measure.kind != MeasureKind::signed_candidate) {
        throw InvalidMeasure("decomposition needs a signed candidate measure");
    }
    const ClauseReport clauses = validate_signed_measure(measure);
    if (!clauses.all_pass()) {
        throw InvalidMeasure("measure does not satisfy the signed clauses");
    }
    const SigmaAlgebra& alg = *measure.algebra;
    const FiniteLattice& lat = alg.lattice();

    HahnDecomposition dec;
    // Bottom is always positive, so the argmax below always lands.
    bool have = false;
    for (int m : alg.members()) {
        const PolarityCertificate cert = classify_polarity(measure, m);
        if (!cert.positive) continue;
        const Rat& v = measure.value_of(m);
        if (!have || v > dec.lambda) {
            have = true;
            dec.lambda = v;
            dec.a = m;
            dec.a_certificate = cert;
        }
    }

    dec.b = alg.complement().of(dec.a);
    dec.b_certificate = classify_polarity(measure, dec.b);
    dec.overlap_value = measure.value_of(lat.meet(dec.a, dec.b));
    dec.cover_ok = lat.join(dec.a, dec.b) == lat.top();

    if (!dec.b_certificate.negative) {
        TheoremViolation v;
        v.claim = "the complement of the maximizing positive lattice is a negative lattice";
        v.detail = "B = " + lat.name(dec.b) + " has a sub-member of positive measure";
        if (dec.b_certificate.negative_witness) v.witness.push_back(*dec.b_certificate.negative_witness);
        dec.findings.push_back(std::move(v));
    }
    if (dec.overlap_value != Rat(0)) {
        dec.findings.push_back({"the overlap A /\\ B carries measure 0",
                                "measure of " + lat.name(lat.meet(dec.a, dec.b)) + " is " + to_string(dec.overlap_value),
                                {dec.a, dec.b}});
    }
    if (!dec.cover_ok) {
        dec.findings.push_back({"A \\/ B covers the whole space",
                                "join is " + lat.name(lat.join(dec.a, dec.b)) + ", not top",
                                {dec.a, dec.b}});
    }
    return dec;
}

HahnDecomposition oracle_decompose(const SignedMeasure& measure) {
    if (measure.kind != MeasureKind::signed_candidate) {
        throw InvalidMeasure("decomposition needs a signed candidate measure");
    }
    const ClauseReport clauses = validate_signed_measure(measure);
    if (!clauses.all_pass()) {
        throw InvalidMeasure("measure does not satisfy the signed clauses");
    }
    const SigmaAlgebra& alg = *measure.algebra;
    const FiniteLattice& lat = alg.lattice();
    const std::vector<int>& members = alg.members();

    // Raw polarity scan on the leq table; deliberately not classify_polarity.
    auto scan = [&](int element) {
        PolarityCertificate cert;
        cert.element = element;
        cert.positive = true;
        cert.negative = true;
        for (int e : members) {
            if (!lat.leq(e, element)) continue;
            cert.checked.push_back(e);
            const Rat& v = measure.value_of(e);
            if (v < Rat(0)) {
                cert.positive = false;
                if (!cert.positive_witness) cert.positive_witness = e;
            }
            if (v > Rat(0)) {
                cert.negative = false;
                if (!cert.negative_witness) cert.negative_witness = e;
            }
        }
        return cert;
    };

    Rat lambda(0);
    bool have = false;
    for (int m : members) {
        bool pos = true;
        for (int e : members) {
            if (lat.leq(e, m) && measure.value_of(e) < Rat(0)) {
                pos = false;
                break;
            }
        }
        if (pos) {
            const Rat& v = measure.value_of(m);
            if (!have || v > lambda) {
                lambda = v;
                have = true;
            }
        }
    }

    for (int a : members) {
        const int b = alg.complement().of(a);
        const PolarityCertificate a_cert = scan(a);
        if (!a_cert.positive) continue;
        const PolarityCertificate b_cert = scan(b);
        if (!b_cert.negative) continue;
        if (lat.join(a, b) != lat.top()) continue;
        const Rat overlap = measure.value_of(lat.meet(a, b));
        if (overlap != Rat(0)) continue;

        HahnDecomposition dec;
        dec.a = a;
        dec.b = b;
        dec.lambda = lambda;
        dec.a_certificate = a_cert;
        dec.b_certificate = b_cert;
        dec.overlap_value = overlap;
        dec.cover_ok = true;
        return dec;
    }

    HahnDecomposition none;
    none.lambda = lambda;
    none.findings.push_back({"some pair (A, A^C) satisfies all decomposition invariants",
                             "no member pair passed the exhaustive scan",
                             {}});
    return none;
}

} // namespace latmeas
