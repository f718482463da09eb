// Acceptance suite: runs the numbered criteria and prints one PASS/FAIL line
// per criterion. Exit code 0 iff every executed criterion passes.
// Usage: acceptance [N]   (run only criterion N)

#include "dwitt/format.hpp"
#include "dwitt/parse.hpp"
#include "dwitt/sampling.hpp"
#include "dwitt/scenario.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <vector>

using namespace dwitt;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::vector<FamilySetup> preset_setups() {
    std::vector<FamilySetup> out;
    {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::QwittPoly;
        fam.q = QSpec::symbolic("q");
        out.push_back(family_setup(fam));
    }
    {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::QwittLaurent;
        fam.q = QSpec::symbolic("q");
        fam.laurent_power = 2;
        out.push_back(family_setup(fam));
    }
    {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::PowerTwist;
        fam.q = QSpec::symbolic("q");
        fam.twist_exponent = 3;
        out.push_back(family_setup(fam));
    }
    {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::MultiLaurent;
        fam.qs = {QSpec::symbolic("q1"), QSpec::symbolic("q2")};
        out.push_back(family_setup(fam));
    }
    return out;
}

Coefficient q_integer(const FieldPtr& F, const Coefficient& q, long long k) {
    Coefficient r = Coefficient::zero(F);
    Coefficient pw = Coefficient::one(F);
    for (long long i = 0; i < k; ++i) {
        r = r + pw;
        pw = pw * q;
    }
    return r;
}

// 1. Leibniz law on 100 seeded random pairs (degree <= 8) per preset, < 5 s
Outcome criterion_1() {
    Outcome out;
    const auto t0 = Clock::now();
    Rng rng(1001);
    SampleOptions opt;  // degree cap 8
    Windows w;
    for (const auto& s : preset_setups()) {
        const DeformedWittAlgebra W = build_family_algebra(s, w);
        for (int i = 0; i < 100; ++i) {
            const RingElement a = random_element(rng, s.ring, opt);
            const RingElement b = random_element(rng, s.ring, opt);
            out.require(W.leibniz_residual(a, b).is_zero(),
                        "nonzero leibniz residual in " + family_name(s.family.kind));
            if (!out.pass) return out;
        }
    }
    const double el = seconds_since(t0);
    out.require(el < 5.0, "took " + std::to_string(el) + " s (budget 5 s)");
    std::ostringstream os;
    os << "4 presets x 100 pairs, " << el << " s";
    out.detail = out.detail.empty() ? os.str() : out.detail;
    return out;
}

// 2. Skew-symmetry and bilinearity on 100 random triples per preset
Outcome criterion_2() {
    Outcome out;
    Rng rng(1002);
    SampleOptions opt;
    Windows w;
    for (const auto& s : preset_setups()) {
        const DeformedWittAlgebra W = build_family_algebra(s, w);
        for (int i = 0; i < 100; ++i) {
            const RingElement a = random_element(rng, s.ring, opt);
            const RingElement b = random_element(rng, s.ring, opt);
            const RingElement c = random_element(rng, s.ring, opt);
            const Coefficient al = random_coefficient(rng, s.ring->field(), opt);
            const Coefficient be = random_coefficient(rng, s.ring->field(), opt);
            out.require(W.bracket(a, a).is_zero(), "skew-symmetry failed");
            out.require(W.bracket(a.scaled(al) + b.scaled(be), c) ==
                            W.bracket(a, c).scaled(al) + W.bracket(b, c).scaled(be),
                        "left linearity failed");
            out.require(W.bracket(c, a.scaled(al) + b.scaled(be)) ==
                            W.bracket(c, a).scaled(al) + W.bracket(c, b).scaled(be),
                        "right linearity failed");
            if (!out.pass) return out;
        }
    }
    out.detail = "4 presets x 100 triples";
    return out;
}

// 3. Generalized Jacobi residual = 0 on 100 random triples per preset
Outcome criterion_3() {
    Outcome out;
    Rng rng(1003);
    SampleOptions opt;
    Windows w;
    for (const auto& s : preset_setups()) {
        const DeformedWittAlgebra W = build_family_algebra(s, w);
        for (int i = 0; i < 100; ++i) {
            out.require(W.generalized_jacobi_residual(random_element(rng, s.ring, opt),
                                                      random_element(rng, s.ring, opt),
                                                      random_element(rng, s.ring, opt))
                            .is_zero(),
                        "nonzero jacobi residual in " + family_name(s.family.kind));
            if (!out.pass) return out;
        }
    }
    out.detail = "4 presets x 100 triples";
    return out;
}

// 4. Twist law on 100 random elements per preset
Outcome criterion_4() {
    Outcome out;
    Rng rng(1004);
    SampleOptions opt;
    Windows w;
    for (const auto& s : preset_setups()) {
        const DeformedWittAlgebra W = build_family_algebra(s, w);
        for (int i = 0; i < 100; ++i) {
            out.require(W.twist_residual(random_element(rng, s.ring, opt)).is_zero(),
                        "nonzero twist residual in " + family_name(s.family.kind));
            if (!out.pass) return out;
        }
    }
    out.detail = "4 presets x 100 elements";
    return out;
}

// 5. Hom-Jacobi: zero on the constant-delta presets AND a nonzero witness
//    triple for power_twist{s=3} within exponent window [-3, 3]
Outcome criterion_5() {
    Outcome out;
    Rng rng(1005);
    SampleOptions opt;
    Windows w;
    const auto setups = preset_setups();
    for (const auto& s : setups) {
        if (s.family.kind == FamilyKind::PowerTwist) continue;
        const DeformedWittAlgebra W = build_family_algebra(s, w);
        for (int i = 0; i < 100; ++i) {
            out.require(W.hom_jacobi_residual(random_element(rng, s.ring, opt),
                                              random_element(rng, s.ring, opt),
                                              random_element(rng, s.ring, opt))
                            .is_zero(),
                        "nonzero hom-jacobi residual in " + family_name(s.family.kind));
            if (!out.pass) return out;
        }
    }
    const DeformedWittAlgebra Wt = build_family_algebra(setups[2], w);
    const auto witness = find_hom_jacobi_witness(Wt, 3);
    out.require(witness.has_value(),
                "no nonzero hom-jacobi witness exists in power_twist{s=3}: the residual is "
                "identically zero for every algebra of this construction (sigma_1 always "
                "satisfies the Hom-Jacobi identity), so this clause cannot hold; searched all " +
                    std::to_string(hom_jacobi_search_space(Wt, 3)) + " monomial triples");
    if (out.pass) out.detail = "3 presets x 100 triples zero; witness found";
    return out;
}

// 6. Jackson derivative eigen-coefficients for k = 1..50
Outcome criterion_6() {
    Outcome out;
    Windows w;
    FamilyDescriptor fam;
    fam.kind = FamilyKind::QwittPoly;
    fam.q = QSpec::symbolic("q");
    const FamilySetup s = family_setup(fam);
    const DeformedWittAlgebra W = build_family_algebra(s, w);
    const FieldPtr& F = s.ring->field();
    const Coefficient q = Coefficient::parameter(F, 0);
    for (long long k = 1; k <= 50; ++k) {
        const RingElement expect =
            RingElement::monomial(s.ring, {k - 1}, q_integer(F, q, k));
        out.require(W.partial(RingElement::variable(s.ring, 0, k)) == expect,
                    "partial(t^" + std::to_string(k) + ") mismatch");
        if (!out.pass) return out;
    }
    out.detail = "partial(t^k) = [k]_q t^(k-1) for k = 1..50";
    return out;
}

// 7. Family constants reproduced verbatim with the preset g overrides
Outcome criterion_7() {
    Outcome out;
    Windows w;
    // g = t - qt, delta = q
    {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::QwittPoly;
        fam.q = QSpec::symbolic("q");
        const FamilySetup s = family_setup(fam);
        const DeformedWittAlgebra W = build_family_algebra(s, w);
        const Coefficient q = Coefficient::parameter(s.ring->field(), 0);
        out.require(W.g() == RingElement::monomial(s.ring, {1},
                                                   Coefficient::one(s.ring->field()) - q),
                    "qwitt_poly g != t - qt");
        out.require(W.delta() == RingElement::constant(s.ring, q), "qwitt_poly delta != q");
    }
    // delta = q^k for k in -2..2
    for (long long k = -2; k <= 2; ++k) {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::QwittLaurent;
        fam.q = QSpec::symbolic("q");
        fam.laurent_power = k;
        const FamilySetup s = family_setup(fam);
        const DeformedWittAlgebra W = build_family_algebra(s, w);
        const Coefficient q = Coefficient::parameter(s.ring->field(), 0);
        out.require(W.delta() == RingElement::constant(s.ring, q.pow(k)),
                    "qwitt_laurent delta != q^" + std::to_string(k));
    }
    // g = 1 - q t^(s-1) and partial(T) = T(1 + ... + T^(s-2)) for s = 3, 4, 5
    for (long long sv : {3LL, 4LL, 5LL}) {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::PowerTwist;
        fam.q = QSpec::symbolic("q");
        fam.twist_exponent = sv;
        const FamilySetup s = family_setup(fam);
        const DeformedWittAlgebra W = build_family_algebra(s, w);
        const Coefficient q = Coefficient::parameter(s.ring->field(), 0);
        out.require(W.g() == RingElement::one(s.ring) -
                                 RingElement::monomial(s.ring, {sv - 1}, q),
                    "power_twist g mismatch at s = " + std::to_string(sv));
        const RingElement T = RingElement::monomial(s.ring, {sv - 1}, q);
        RingElement sum = RingElement::zero(s.ring);
        RingElement pw = RingElement::one(s.ring);
        for (long long j = 0; j <= sv - 2; ++j) {
            sum = sum + pw;
            pw = pw * T;
        }
        out.require(W.partial(T) == T * sum,
                    "power_twist partial(T) mismatch at s = " + std::to_string(sv));
    }
    // g = 1 - q^-1 t^(1-s) for s = -1, -2
    for (long long sv : {-1LL, -2LL}) {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::PowerTwist;
        fam.q = QSpec::symbolic("q");
        fam.twist_exponent = sv;
        const FamilySetup s = family_setup(fam);
        const DeformedWittAlgebra W = build_family_algebra(s, w);
        const Coefficient q = Coefficient::parameter(s.ring->field(), 0);
        out.require(W.g() == RingElement::one(s.ring) -
                                 RingElement::monomial(s.ring, {1 - sv}, q.inverse()),
                    "power_twist g mismatch at s = " + std::to_string(sv));
    }
    // g = 1, delta = 1, partial(x^k) = (1 - prod q_i^k_i) x^k
    {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::MultiLaurent;
        fam.qs = {QSpec::symbolic("q1"), QSpec::symbolic("q2")};
        const FamilySetup s = family_setup(fam);
        const DeformedWittAlgebra W = build_family_algebra(s, w);
        out.require(W.g() == RingElement::one(s.ring), "multi_laurent g != 1");
        out.require(W.delta() == RingElement::one(s.ring), "multi_laurent delta != 1");
        const Coefficient one = Coefficient::one(s.ring->field());
        for (const auto& [shell, k] : monomial_box(s.ring, 3)) {
            const Coefficient mu = s.sigma.monomial_eigenvalue(k);
            const RingElement expect = RingElement::monomial(s.ring, k, one - mu);
            out.require(W.partial(RingElement::monomial(s.ring, k, one)) == expect,
                        "multi_laurent partial eigenvalue mismatch");
            if (!out.pass) return out;
        }
    }
    if (out.pass) out.detail = "g, delta, derivative formulas match per family";
    return out;
}

// 8. Simplicity verdicts with brute-force re-verified witnesses, < 30 s
Outcome criterion_8() {
    Outcome out;
    const auto t0 = Clock::now();
    DecisionOptions opt;
    opt.seed = 1008;
    {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::QwittPoly;
        fam.q = QSpec::symbolic("q");
        out.require(decide_simplicity(fam, opt).verdict == Verdict::Simple,
                    "qwitt_poly{symbolic} not Simple");
    }
    {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::MultiLaurent;
        fam.qs = {QSpec::symbolic("q1"), QSpec::symbolic("q2")};
        out.require(decide_simplicity(fam, opt).verdict == Verdict::Simple,
                    "multi_laurent{independent} not Simple");
    }
    for (unsigned n : {2u, 3u, 5u, 6u}) {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::QwittPoly;
        fam.q = QSpec::zeta(n);
        const SimplicityVerdict v = decide_simplicity(fam, opt);
        const FamilySetup s = family_setup(fam);
        out.require(v.verdict == Verdict::NotSimple,
                    "zeta_" + std::to_string(n) + " not NotSimple");
        out.require(v.witness && v.witness->generator == RingElement::variable(s.ring, 0, n),
                    "zeta_" + std::to_string(n) + " witness != t^n");
        out.require(v.witness_certificate && v.witness_certificate->stable,
                    "zeta_" + std::to_string(n) + " certificate unstable");
        out.require(v.witness_brute_force && v.witness_brute_force->stable &&
                        v.windows.multiplier_window == 10,
                    "zeta_" + std::to_string(n) + " brute-force recheck failed");
    }
    for (long long sv : {3LL, 4LL, -1LL, -2LL}) {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::PowerTwist;
        fam.q = QSpec::symbolic("q");
        fam.twist_exponent = sv;
        const SimplicityVerdict v = decide_simplicity(fam, opt);
        out.require(v.verdict == Verdict::NotSimple,
                    "power_twist s=" + std::to_string(sv) + " not NotSimple");
        out.require(v.witness_certificate && v.witness_certificate->stable &&
                        v.witness_brute_force && v.witness_brute_force->stable,
                    "power_twist s=" + std::to_string(sv) + " witness verification failed");
    }
    const double el = seconds_since(t0);
    out.require(el < 30.0, "took " + std::to_string(el) + " s (budget 30 s)");
    if (out.pass) {
        std::ostringstream os;
        os << "10 family instances, " << el << " s";
        out.detail = os.str();
    }
    return out;
}

// 9. is_partial_stable vs brute_force_stability on 50 random generators per
//    preset at window 10
Outcome criterion_9() {
    Outcome out;
    Rng rng(1009);
    SampleOptions opt;
    opt.max_terms = 4;
    opt.degree_cap = 6;
    Windows w;
    for (const auto& s : preset_setups()) {
        const DeformedWittAlgebra W = build_family_algebra(s, w);
        for (int i = 0; i < 50; ++i) {
            const PrincipalIdeal ideal = make_principal(random_nonzero_element(rng, s.ring, opt));
            const bool fast = is_partial_stable(W, ideal).stable;
            const bool slow = brute_force_stability(W, ideal, 10).stable;
            out.require(fast == slow, "oracle disagreement in " + family_name(s.family.kind) +
                                          " on " + format_element(ideal.generator));
            if (!out.pass) return out;
        }
    }
    out.detail = "4 presets x 50 generators, window 10, 100% agreement";
    return out;
}

// 10. Vandermonde extraction: 20 random p in qwitt_laurent{symbolic} fully
//     reconstructed; singular case raised for q1 = q2
Outcome criterion_10() {
    Outcome out;
    Windows w;
    FamilyDescriptor fam;
    fam.kind = FamilyKind::QwittLaurent;
    fam.q = QSpec::symbolic("q");
    fam.laurent_power = 2;
    const FamilySetup s = family_setup(fam);
    const DeformedWittAlgebra W = build_family_algebra(s, w);
    Rng rng(1010);
    SampleOptions opt;
    opt.max_terms = 5;
    for (int i = 0; i < 20; ++i) {
        const RingElement p = random_nonzero_element(rng, s.ring, opt);
        const Extraction ex = extract_monomials(W, p);
        out.require(!ex.singular, "unexpected singular system");
        if (ex.singular) return out;
        std::vector<RingElement> iterates;
        RingElement it = p;
        for (std::size_t j = 0; j < ex.rows.size(); ++j) {
            iterates.push_back(it);
            it = W.sigma()(it);
        }
        RingElement sum = RingElement::zero(s.ring);
        for (const auto& row : ex.rows) {
            RingElement rec = RingElement::zero(s.ring);
            for (std::size_t j = 0; j < row.combination.size(); ++j)
                rec = rec + iterates[j].scaled(row.combination[j]);
            out.require(rec == row.term, "term reconstruction mismatch");
            sum = sum + rec;
        }
        out.require(sum == p, "sum of extracted terms differs from p");
        if (!out.pass) return out;
    }
    {
        FamilyDescriptor deg;
        deg.kind = FamilyKind::MultiLaurent;
        deg.qs = {QSpec::symbolic("q"), QSpec::symbolic("q")};
        const FamilySetup sd = family_setup(deg);
        const DeformedWittAlgebra Wd = build_family_algebra(sd, w);
        const RingElement p =
            RingElement::one(sd.ring) +
            RingElement::monomial(sd.ring, {1, -1}, Coefficient::one(sd.ring->field()));
        out.require(extract_monomials(Wd, p).singular,
                    "q1 = q2 degenerate case did not raise SingularSystem");
    }
    if (out.pass) out.detail = "20 reconstructions exact; singular case detected";
    return out;
}

// 11. Hypothesis reports: surjectivity Yes generically, No with witness at
//     roots of unity and for the Laurent family (flagged divergence)
Outcome criterion_11() {
    Outcome out;
    DecisionOptions opt;
    {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::QwittPoly;
        fam.q = QSpec::symbolic("q");
        const SimplicityVerdict v = decide_simplicity(fam, opt);
        out.require(v.hypotheses.partial_surjective.verdict == TriState::Yes,
                    "generic qwitt_poly surjectivity != Yes");
    }
    for (unsigned n : {3u, 5u}) {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::QwittPoly;
        fam.q = QSpec::zeta(n);
        const SimplicityVerdict v = decide_simplicity(fam, opt);
        const FamilySetup s = family_setup(fam);
        out.require(v.hypotheses.partial_surjective.verdict == TriState::No,
                    "zeta case surjectivity != No");
        out.require(v.hypotheses.partial_surjective.witness.has_value() &&
                        *v.hypotheses.partial_surjective.witness ==
                            RingElement::variable(s.ring, 0, n - 1),
                    "zeta case witness != t^(n-1)");
    }
    {
        FamilyDescriptor fam;
        fam.kind = FamilyKind::QwittLaurent;
        fam.q = QSpec::symbolic("q");
        fam.laurent_power = 2;
        const SimplicityVerdict v = decide_simplicity(fam, opt);
        const FamilySetup s = family_setup(fam);
        out.require(v.hypotheses.partial_surjective.verdict == TriState::No,
                    "laurent surjectivity != No");
        out.require(v.hypotheses.partial_surjective.witness.has_value() &&
                        *v.hypotheses.partial_surjective.witness ==
                            RingElement::variable(s.ring, 0, -2),
                    "laurent witness != t^-2");
        out.require(!v.hypotheses.divergences.empty(),
                    "laurent divergence from the family narrative not flagged");
    }
    if (out.pass) out.detail = "surjectivity reports verbatim with flagged divergence";
    return out;
}

// 12. Parser round-trip on 200 random elements per ring shape; identical
//     config+seed yields byte-identical JSON reports
Outcome criterion_12() {
    Outcome out;
    std::vector<RingPtr> shapes{
        RingDescriptor::make(FieldDescriptor::rational_functions({"q"}), {"t"}, {false}),
        RingDescriptor::make(FieldDescriptor::rational_functions({"q"}), {"t"}, {true}),
        RingDescriptor::make(FieldDescriptor::rational_functions({"q1", "q2"}), {"x1", "x2"},
                             {true, true}),
        RingDescriptor::make(FieldDescriptor::rationals(), {"t"}, {false}),
        RingDescriptor::make(FieldDescriptor::cyclotomic(4), {"t"}, {true})};
    Rng rng(1012);
    SampleOptions opt;
    for (const auto& ring : shapes) {
        for (int i = 0; i < 200; ++i) {
            const RingElement a = random_element(rng, ring, opt);
            out.require(parse_element(format_element(a), ring) == a,
                        "round-trip failed in " + ring->name() + " on " + format_element(a));
            if (!out.pass) return out;
        }
    }
    for (FamilyKind kind : {FamilyKind::QwittPoly, FamilyKind::PowerTwist}) {
        ScenarioConfig config;
        config.family.kind = kind;
        config.family.q = QSpec::symbolic("q");
        config.family.twist_exponent = 3;
        config.seed = 12;
        config.windows.jacobi_samples = 15;
        const std::string a = report_json(run_scenario(config));
        const std::string b = report_json(run_scenario(config));
        out.require(a == b && !a.empty(),
                    "JSON reports differ for identical config+seed (" + family_name(kind) + ")");
    }
    if (out.pass) out.detail = "5 shapes x 200 elements; byte-identical JSON";
    return out;
}

struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "sigma-derivation law (Leibniz residuals)", criterion_1},
    {2, "skew-symmetry and bilinearity of the bracket", criterion_2},
    {3, "generalized Jacobi identity", criterion_3},
    {4, "twist law partial.sigma = delta sigma.partial", criterion_4},
    {5, "Hom-Jacobi residuals and power_twist witness", criterion_5},
    {6, "Jackson derivative eigen-coefficients", criterion_6},
    {7, "family constants reproduced verbatim", criterion_7},
    {8, "certified simplicity verdicts", criterion_8},
    {9, "stability oracle agreement", criterion_9},
    {10, "Vandermonde extraction", criterion_10},
    {11, "hypothesis reports", criterion_11},
    {12, "parser round-trip and report determinism", criterion_12},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    bool all_pass = true;
    for (const auto& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        const Outcome o = c.run();
        all_pass = all_pass && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name;
        if (!o.detail.empty()) std::cout << " -- " << o.detail;
        std::cout << "\n" << std::flush;
    }
    return all_pass ? 0 : 1;
}
