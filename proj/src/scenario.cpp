#include "dwitt/scenario.hpp"

#include "dwitt/format.hpp"
#include "dwitt/parse.hpp"
#include "dwitt/sampling.hpp"

#include "json.hpp"

#include <chrono>
#include <sstream>

namespace dwitt {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string tri_text(TriState t) {
    switch (t) {
        case TriState::Yes:
            return "Yes";
        case TriState::No:
            return "No";
        case TriState::Unknown:
            return "Unknown";
    }
    return "?";
}

ordered_json family_json(const FamilyDescriptor& fam) {
    ordered_json params = ordered_json::object();
    switch (fam.kind) {
        case FamilyKind::QwittPoly:
            params["q"] = fam.q.to_string();
            break;
        case FamilyKind::QwittLaurent:
            params["q"] = fam.q.to_string();
            params["k"] = fam.laurent_power;
            break;
        case FamilyKind::PowerTwist:
            params["q"] = fam.q.to_string();
            params["s"] = fam.twist_exponent;
            break;
        case FamilyKind::MultiLaurent:
            for (std::size_t i = 0; i < fam.qs.size(); ++i)
                params["q" + std::to_string(i + 1)] = fam.qs[i].to_string();
            break;
    }
    return ordered_json{{"preset", family_name(fam.kind)}, {"params", params}};
}

ordered_json windows_json(const Windows& w) {
    return ordered_json{{"gcd_window", w.gcd_window},
                        {"validation_window", w.validation_window},
                        {"multiplier_window", w.multiplier_window},
                        {"dependence_bound", w.dependence_bound},
                        {"jacobi_samples", w.jacobi_samples},
                        {"surjectivity_window", w.surjectivity_window}};
}

ordered_json verdict_json(const SimplicityVerdict& v) {
    ordered_json j;
    j["verdict"] = verdict_name(v.verdict);
    if (v.witness) j["witness"] = format_element(v.witness->generator);
    ordered_json hyp;
    hyp["epimorphism"] = tri_text(v.hypotheses.epimorphism.verdict);
    if (v.hypotheses.epimorphism.witness)
        hyp["epimorphism_witness"] = format_element(*v.hypotheses.epimorphism.witness);
    hyp["partial_surjective"] = tri_text(v.hypotheses.partial_surjective.verdict);
    if (v.hypotheses.partial_surjective.witness)
        hyp["partial_surjective_witness"] =
            format_element(*v.hypotheses.partial_surjective.witness);
    hyp["partial_surjective_note"] = v.hypotheses.partial_surjective.note;
    hyp["delta_in_F"] = v.hypotheses.delta_in_field;
    if (!v.hypotheses.divergences.empty()) hyp["divergences"] = v.hypotheses.divergences;
    j["hypothesis_report"] = hyp;
    ordered_json evidence = ordered_json::array();
    for (const auto& e : v.evidence) {
        ordered_json item;
        item["kind"] = e.kind;
        for (const auto& [k, val] : e.fields) item[k] = val;
        evidence.push_back(item);
    }
    j["evidence"] = evidence;
    if (v.witness_certificate) {
        ordered_json cert;
        cert["stable"] = v.witness_certificate->stable;
        if (v.witness_certificate->quotient)
            cert["quotient"] = format_element(*v.witness_certificate->quotient);
        cert["justification"] = v.witness_certificate->justification;
        j["witness_certificate"] = cert;
    }
    j["seeds"] = v.seed;
    j["windows"] = windows_json(v.windows);
    return j;
}

}  // namespace

CustomSetup build_custom(const CustomScenario& custom) {
    FieldPtr field;
    if (custom.cyclotomic_order > 0) {
        if (!custom.params.empty())
            throw ConfigError("custom scenario: parameters and cyclotomic order are exclusive");
        field = FieldDescriptor::cyclotomic(custom.cyclotomic_order);
    } else if (!custom.params.empty()) {
        field = FieldDescriptor::rational_functions(custom.params);
    } else {
        field = FieldDescriptor::rationals();
    }
    RingPtr ring = RingDescriptor::make(field, custom.vars, custom.laurent);
    if (custom.sigma_images.size() != custom.vars.size())
        throw ConfigError("custom scenario: one sigma image per variable required");
    std::vector<RingElement> images;
    images.reserve(custom.vars.size());
    for (std::size_t i = 0; i < custom.sigma_images.size(); ++i) {
        const std::string& entry = custom.sigma_images[i];
        const auto arrow = entry.find("->");
        if (arrow == std::string::npos)
            throw ConfigError("sigma entry '" + entry + "' is not of the form 'var -> image'");
        std::string lhs = entry.substr(0, arrow);
        lhs.erase(0, lhs.find_first_not_of(" \t"));
        lhs.erase(lhs.find_last_not_of(" \t") + 1);
        if (lhs != custom.vars[i])
            throw ConfigError("sigma entry '" + entry + "' does not match variable '" +
                              custom.vars[i] + "'");
        images.push_back(parse_element(entry.substr(arrow + 2), ring));
    }
    CustomSetup setup{ring, Endomorphism::from_images(ring, images), std::nullopt};
    if (custom.g_override) setup.g_override = parse_element(*custom.g_override, ring);
    return setup;
}

Report run_scenario(const ScenarioConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    validate_windows(config.windows);
    RingPtr ring_ptr;
    std::optional<DeformedWittAlgebra> algebra;
    if (config.custom) {
        CustomSetup cs = build_custom(*config.custom);
        ring_ptr = cs.ring;
        std::optional<RingElement> g = cs.g_override;
        if (config.g_unit_override) {
            RingElement unit = parse_element(*config.g_unit_override, cs.ring);
            if (!unit.is_unit()) throw ConfigError("g override factor must be a unit");
            if (!g) g = compute_g(cs.ring, cs.sigma, config.windows.gcd_window).g;
            g = *g * unit;
        }
        algebra.emplace(DeformedWittAlgebra::make(cs.ring, cs.sigma, g,
                                                  config.windows.gcd_window,
                                                  config.windows.validation_window));
    } else {
        const FamilySetup setup = family_setup(config.family);
        ring_ptr = setup.ring;
        std::optional<RingElement> unit;
        if (config.g_unit_override) unit = parse_element(*config.g_unit_override, setup.ring);
        algebra.emplace(build_family_algebra(setup, config.windows, unit));
    }
    const DeformedWittAlgebra& W = *algebra;
    const RingPtr& setup_ring = ring_ptr;

    Report rep;
    rep.config = config;
    rep.ring_name = setup_ring->name();
    rep.g_text = format_element(W.g());
    rep.delta_text = format_element(W.delta());
    rep.delta_in_field = W.delta_in_ground_field();
    rep.gcd_report = W.gcd_report();

    Rng rng(config.seed);
    SampleOptions sopt;
    const int samples = config.windows.jacobi_samples;
    const RingPtr& ring = setup_ring;

    auto run_suite = [&](const std::string& name, bool mandatory, auto&& residual_fn) {
        CheckSuiteResult suite;
        suite.name = name;
        suite.mandatory = mandatory;
        for (int i = 0; i < samples; ++i) {
            const RingElement r = residual_fn();
            ++suite.samples;
            if (r.is_zero())
                ++suite.zero_residuals;
            else if (!suite.first_failure)
                suite.first_failure = format_element(r);
        }
        suite.all_zero = suite.zero_residuals == suite.samples;
        if (mandatory) rep.contracts_ok = rep.contracts_ok && suite.all_zero;
        rep.checks.push_back(std::move(suite));
    };

    run_suite("leibniz", true, [&] {
        return W.leibniz_residual(random_element(rng, ring, sopt),
                                  random_element(rng, ring, sopt));
    });
    run_suite("twist", true,
              [&] { return W.twist_residual(random_element(rng, ring, sopt)); });
    run_suite("skew_symmetry", true, [&] {
        const RingElement a = random_element(rng, ring, sopt);
        return W.bracket(a, a);
    });
    run_suite("bilinearity", true, [&] {
        const RingElement a = random_element(rng, ring, sopt);
        const RingElement b = random_element(rng, ring, sopt);
        const RingElement c = random_element(rng, ring, sopt);
        const Coefficient al = random_coefficient(rng, ring->field(), sopt);
        const Coefficient be = random_coefficient(rng, ring->field(), sopt);
        const RingElement left =
            W.bracket(a.scaled(al) + b.scaled(be), c) -
            (W.bracket(a, c).scaled(al) + W.bracket(b, c).scaled(be));
        const RingElement right =
            W.bracket(c, a.scaled(al) + b.scaled(be)) -
            (W.bracket(c, a).scaled(al) + W.bracket(c, b).scaled(be));
        return left + right;
    });
    run_suite("generalized_jacobi", true, [&] {
        return W.generalized_jacobi_residual(random_element(rng, ring, sopt),
                                             random_element(rng, ring, sopt),
                                             random_element(rng, ring, sopt));
    });
    // the Hom-Jacobi contract is mandatory only when delta is constant
    run_suite("hom_jacobi", W.delta_in_ground_field(), [&] {
        return W.hom_jacobi_residual(random_element(rng, ring, sopt),
                                     random_element(rng, ring, sopt),
                                     random_element(rng, ring, sopt));
    });
    if (!W.delta_in_ground_field()) {
        rep.hom_jacobi_witness_searched = true;
        if (const auto w = find_hom_jacobi_witness(W, 3)) {
            std::ostringstream os;
            os << format_element(RingElement::monomial(ring, w->a,
                                                       Coefficient::one(ring->field())))
               << " , "
               << format_element(RingElement::monomial(ring, w->b,
                                                       Coefficient::one(ring->field())))
               << " , "
               << format_element(RingElement::monomial(ring, w->c,
                                                       Coefficient::one(ring->field())));
            rep.hom_jacobi_witness = os.str();
        }
    }

    if (config.custom) {
        rep.verdict_refusal =
            "simplicity is decided only for the preset families; custom scenarios "
            "run the axiom and stability machinery";
    } else {
        DecisionOptions dopt;
        dopt.seed = config.seed;
        dopt.windows = config.windows;
        rep.verdict = decide_simplicity(config.family, dopt);
    }

    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

std::string report_json(const Report& rep) {
    ordered_json j;
    if (rep.config.custom) {
        ordered_json cj;
        if (!rep.config.custom->params.empty()) cj["params"] = rep.config.custom->params;
        if (rep.config.custom->cyclotomic_order)
            cj["cyclotomic"] = rep.config.custom->cyclotomic_order;
        cj["vars"] = rep.config.custom->vars;
        cj["laurent"] = rep.config.custom->laurent;
        cj["sigma"] = rep.config.custom->sigma_images;
        if (rep.config.custom->g_override) cj["g"] = *rep.config.custom->g_override;
        j["config"] = ordered_json{{"custom", cj},
                                   {"seed", rep.config.seed},
                                   {"windows", windows_json(rep.config.windows)}};
    } else {
        j["config"] = ordered_json{{"family", family_json(rep.config.family)},
                                   {"seed", rep.config.seed},
                                   {"windows", windows_json(rep.config.windows)}};
    }
    if (rep.config.g_unit_override) j["config"]["g_unit_override"] = *rep.config.g_unit_override;
    j["algebra"] = ordered_json{{"ring", rep.ring_name},
                                {"g", rep.g_text},
                                {"delta", rep.delta_text},
                                {"delta_in_F", rep.delta_in_field},
                                {"gcd_stabilized_shell", rep.gcd_report.stabilized_shell},
                                {"gcd_window", rep.gcd_report.window},
                                {"gcd_stable_early", rep.gcd_report.stable_early},
                                {"gcd_unit_short_circuit", rep.gcd_report.unit_short_circuit}};
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json item{{"name", c.name},
                          {"samples", c.samples},
                          {"zero_residuals", c.zero_residuals},
                          {"mandatory", c.mandatory},
                          {"all_zero", c.all_zero}};
        if (c.first_failure) item["first_failure"] = *c.first_failure;
        checks.push_back(item);
    }
    j["checks"] = checks;
    if (rep.hom_jacobi_witness_searched) {
        ordered_json hj{{"searched", true}, {"found", rep.hom_jacobi_witness.has_value()}};
        if (rep.hom_jacobi_witness) hj["witness"] = *rep.hom_jacobi_witness;
        j["hom_jacobi_witness"] = hj;
    }
    if (rep.verdict)
        j["verdicts"] = verdict_json(*rep.verdict);
    else if (rep.verdict_refusal)
        j["verdicts"] = ordered_json{{"refused", *rep.verdict_refusal}};
    j["contracts_ok"] = rep.contracts_ok;
    return j.dump(2) + "\n";
}

std::string report_text(const Report& rep) {
    std::ostringstream os;
    os << (rep.config.custom ? std::string("custom scenario")
                             : "family: " + family_name(rep.config.family.kind))
       << "  seed: " << rep.config.seed << "\n";
    os << "ring: " << rep.ring_name << "\n";
    os << "g = " << rep.g_text << "   delta = " << rep.delta_text
       << (rep.delta_in_field ? "   (delta in F)" : "   (delta not in F)") << "\n";
    os << "gcd stabilized at shell " << rep.gcd_report.stabilized_shell << " of "
       << rep.gcd_report.window << (rep.gcd_report.stable_early ? " (early)" : "") << "\n";
    for (const auto& c : rep.checks) {
        os << "  " << (c.all_zero ? "ok  " : "FAIL") << " " << c.name << ": "
           << c.zero_residuals << "/" << c.samples << " residuals zero"
           << (c.mandatory ? "" : " (informational)") << "\n";
        if (c.first_failure) os << "        first failure: " << *c.first_failure << "\n";
    }
    if (rep.hom_jacobi_witness_searched) {
        os << "  hom-jacobi witness search: "
           << (rep.hom_jacobi_witness ? "found " + *rep.hom_jacobi_witness
                                      : "none found (residual is identically zero)")
           << "\n";
    }
    if (rep.verdict)
        os << verdict_text(*rep.verdict, rep.config.family);
    else if (rep.verdict_refusal)
        os << "verdict: refused (" << *rep.verdict_refusal << ")\n";
    os << "contracts: " << (rep.contracts_ok ? "satisfied" : "VIOLATED") << "\n";
    os << "elapsed_ms: " << rep.elapsed_ms << "\n";
    return os.str();
}

int report_exit_code(const Report& rep) { return rep.contracts_ok ? 0 : 1; }

std::string verdict_json_text(const SimplicityVerdict& v, const FamilyDescriptor& family) {
    ordered_json j;
    j["family"] = family_json(family);
    j["certificate"] = verdict_json(v);
    return j.dump(2) + "\n";
}

std::string verdict_text(const SimplicityVerdict& v, const FamilyDescriptor& family) {
    std::ostringstream os;
    os << "verdict: " << verdict_name(v.verdict) << " (" << family_name(family.kind) << ")\n";
    if (v.witness) os << "  witness ideal: (" << format_element(v.witness->generator) << ")\n";
    if (v.witness_certificate && v.witness_certificate->quotient)
        os << "  stability quotient: " << format_element(*v.witness_certificate->quotient)
           << "\n";
    os << "  epimorphism: " << tri_text(v.hypotheses.epimorphism.verdict)
       << "; partial surjective: " << tri_text(v.hypotheses.partial_surjective.verdict);
    if (v.hypotheses.partial_surjective.witness)
        os << " (witness " << format_element(*v.hypotheses.partial_surjective.witness) << ")";
    os << "; delta in F: " << (v.hypotheses.delta_in_field ? "yes" : "no") << "\n";
    for (const auto& d : v.hypotheses.divergences) os << "  divergence: " << d << "\n";
    for (const auto& e : v.evidence) {
        os << "  evidence[" << e.kind << "]";
        for (const auto& [k, val] : e.fields) os << " " << k << "=" << val;
        os << "\n";
    }
    return os.str();
}

}  // namespace dwitt
