#pragma once

#include "dwitt/ideals.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dwitt {

// A non-preset algebra described directly in a config file: a ring plus one
// "var -> coefficient * monomial" image entry per variable.
struct CustomScenario {
    std::vector<std::string> params;      // rational-function parameters, may be empty
    unsigned cyclotomic_order = 0;        // exclusive with params
    std::vector<std::string> vars;
    std::vector<bool> laurent;
    std::vector<std::string> sigma_images;  // "t -> q*t^3" entries
    std::optional<std::string> g_override;  // full g override, element syntax
};

struct ScenarioConfig {
    FamilyDescriptor family;
    std::optional<CustomScenario> custom;  // overrides the preset family when present
    std::uint64_t seed = 1;
    Windows windows;
    bool json_output = false;
    std::optional<std::string> g_unit_override;  // unit factor, element syntax
};

// Ring and endomorphism from a custom scenario block.
struct CustomSetup {
    RingPtr ring;
    Endomorphism sigma;
    std::optional<RingElement> g_override;
};
CustomSetup build_custom(const CustomScenario& custom);

struct CheckSuiteResult {
    std::string name;
    std::size_t samples = 0;
    std::size_t zero_residuals = 0;
    bool mandatory = true;  // nonzero residuals break the contract only when set
    bool all_zero = false;
    std::optional<std::string> first_failure;
};

struct Report {
    ScenarioConfig config;
    std::string ring_name;
    std::string g_text;
    std::string delta_text;
    bool delta_in_field = false;
    StabilizationReport gcd_report;
    std::vector<CheckSuiteResult> checks;
    bool hom_jacobi_witness_searched = false;
    std::optional<std::string> hom_jacobi_witness;
    // absent for custom scenarios, where the simplicity decision is refused
    std::optional<SimplicityVerdict> verdict;
    std::optional<std::string> verdict_refusal;
    bool contracts_ok = true;
    double elapsed_ms = 0;  // text output only; JSON stays byte-deterministic
};

Report run_scenario(const ScenarioConfig& config);

std::string report_json(const Report& report);
std::string report_text(const Report& report);
int report_exit_code(const Report& report);

// the certificate object embedded under "verdicts" and printed by the
// simplicity subcommand
std::string verdict_json_text(const SimplicityVerdict& v, const FamilyDescriptor& family);
std::string verdict_text(const SimplicityVerdict& v, const FamilyDescriptor& family);

}  // namespace dwitt
