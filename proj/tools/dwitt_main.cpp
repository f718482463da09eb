#include "dwitt/format.hpp"
#include "dwitt/parse.hpp"
#include "dwitt/scenario.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace dwitt;
using ordered_json = nlohmann::ordered_json;

QSpec parse_qspec(const std::string& key, const std::string& text) {
    if (text == "symbolic") return QSpec::symbolic(key);
    if (text.rfind("zeta(", 0) == 0) {
        const auto close = text.find(')');
        if (close == std::string::npos) throw ConfigError("malformed zeta spec '" + text + "'");
        const unsigned n = static_cast<unsigned>(std::stoul(text.substr(5, close - 5)));
        long long pow = 1;
        if (close + 1 < text.size()) {
            if (text[close + 1] != '^')
                throw ConfigError("malformed zeta spec '" + text + "'");
            pow = std::stoll(text.substr(close + 2));
        }
        return QSpec::zeta(n, pow);
    }
    const bool numeric = text.find_first_not_of("-0123456789/") == std::string::npos &&
                         !text.empty() && text != "-";
    if (numeric) {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return QSpec::rational(Rat(Int(text)));
        return QSpec::rational(
            Rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1))));
    }
    // bare identifier: a (possibly shared) symbol name
    return QSpec::symbolic(text);
}

FamilyDescriptor make_family(const std::string& name,
                             const std::map<std::string, std::string>& params) {
    const auto kind = family_from_name(name);
    if (!kind) throw ConfigError("unknown family '" + name + "'");
    FamilyDescriptor fam;
    fam.kind = *kind;
    auto get = [&](const std::string& key) -> std::optional<std::string> {
        auto it = params.find(key);
        if (it == params.end()) return std::nullopt;
        return it->second;
    };
    switch (*kind) {
        case FamilyKind::QwittPoly:
            fam.q = parse_qspec("q", get("q").value_or("symbolic"));
            break;
        case FamilyKind::QwittLaurent:
            fam.q = parse_qspec("q", get("q").value_or("symbolic"));
            if (auto k = get("k")) fam.laurent_power = std::stoll(*k);
            break;
        case FamilyKind::PowerTwist:
            fam.q = parse_qspec("q", get("q").value_or("symbolic"));
            if (auto s = get("s")) fam.twist_exponent = std::stoll(*s);
            break;
        case FamilyKind::MultiLaurent: {
            std::size_t n = 0;
            if (auto nv = get("n")) n = std::stoull(*nv);
            for (std::size_t i = 1;; ++i) {
                if (!params.count("q" + std::to_string(i))) break;
                n = std::max(n, i);
            }
            if (n == 0) n = 2;
            for (std::size_t i = 1; i <= n; ++i) {
                const std::string key = "q" + std::to_string(i);
                fam.qs.push_back(parse_qspec(key, get(key).value_or("symbolic")));
            }
            break;
        }
    }
    return fam;
}

struct CommonArgs {
    std::string family = "qwitt_poly";
    std::vector<std::string> params;
    std::string config_path;
    std::uint64_t seed = 1;
    bool json = false;
    Windows windows;
    std::string g_unit;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--family", args.family, "preset family name");
    cmd->add_option("--param", args.params, "family parameter key=value (repeatable)");
    cmd->add_option("--config", args.config_path, "JSON config file; flags override");
    cmd->add_option("--seed", args.seed, "seed for randomized suites");
    cmd->add_flag("--json", args.json, "emit JSON instead of text");
    cmd->add_option("--gcd-window", args.windows.gcd_window, "gcd sampling window");
    cmd->add_option("--multiplier-window", args.windows.multiplier_window,
                    "brute-force multiplier window");
    cmd->add_option("--dependence-bound", args.windows.dependence_bound,
                    "multi_laurent dependence search bound");
    cmd->add_option("--jacobi-samples", args.windows.jacobi_samples,
                    "sample count for residual suites");
    cmd->add_option("--g-unit", args.g_unit, "extra unit factor for the preset g");
}

ScenarioConfig to_config(const CommonArgs& args, const CLI::App* cmd) {
    CommonArgs merged = args;
    std::optional<CustomScenario> custom;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in) throw ConfigError("cannot open config file '" + args.config_path + "'");
        ordered_json j = ordered_json::parse(in);
        if (j.contains("custom")) {
            const auto& cj = j["custom"];
            CustomScenario cs;
            if (cj.contains("params")) cs.params = cj["params"].get<std::vector<std::string>>();
            if (cj.contains("cyclotomic")) cs.cyclotomic_order = cj["cyclotomic"].get<unsigned>();
            cs.vars = cj.at("vars").get<std::vector<std::string>>();
            cs.laurent = cj.at("laurent").get<std::vector<bool>>();
            cs.sigma_images = cj.at("sigma").get<std::vector<std::string>>();
            if (cj.contains("g")) cs.g_override = cj["g"].get<std::string>();
            custom = std::move(cs);
        }
        if (j.contains("family") && cmd->count("--family") == 0)
            merged.family = j["family"].get<std::string>();
        if (j.contains("params") && cmd->count("--param") == 0) {
            merged.params.clear();
            for (const auto& [k, v] : j["params"].items()) {
                const std::string text =
                    v.is_string() ? v.get<std::string>() : ordered_json(v).dump();
                merged.params.push_back(k + "=" + text);
            }
        }
        if (j.contains("seed") && cmd->count("--seed") == 0)
            merged.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("output") && cmd->count("--json") == 0)
            merged.json = j["output"].get<std::string>() == "json";
        if (j.contains("g_unit") && cmd->count("--g-unit") == 0)
            merged.g_unit = j["g_unit"].get<std::string>();
        if (j.contains("windows")) {
            const auto& w = j["windows"];
            auto take = [&](const char* key, int& slot, const char* flag) {
                if (w.contains(key) && cmd->count(flag) == 0) slot = w[key].get<int>();
            };
            take("gcd_window", merged.windows.gcd_window, "--gcd-window");
            take("multiplier_window", merged.windows.multiplier_window, "--multiplier-window");
            take("dependence_bound", merged.windows.dependence_bound, "--dependence-bound");
            take("jacobi_samples", merged.windows.jacobi_samples, "--jacobi-samples");
        }
    }
    std::map<std::string, std::string> kv;
    for (const auto& p : merged.params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos)
            throw ConfigError("parameter '" + p + "' is not of the form key=value");
        kv[p.substr(0, eq)] = p.substr(eq + 1);
    }
    ScenarioConfig config;
    if (custom)
        config.custom = std::move(custom);
    else
        config.family = make_family(merged.family, kv);
    config.seed = merged.seed;
    config.windows = merged.windows;
    config.json_output = merged.json;
    if (!merged.g_unit.empty()) config.g_unit_override = merged.g_unit;
    return config;
}

// builds the algebra for expression-level subcommands
struct AlgebraContext {
    RingPtr ring;
    DeformedWittAlgebra algebra;
};

AlgebraContext make_context(const ScenarioConfig& config) {
    if (config.custom) {
        CustomSetup cs = build_custom(*config.custom);
        DeformedWittAlgebra W =
            DeformedWittAlgebra::make(cs.ring, cs.sigma, cs.g_override,
                                      config.windows.gcd_window,
                                      config.windows.validation_window);
        return {cs.ring, std::move(W)};
    }
    FamilySetup setup = family_setup(config.family);
    std::optional<RingElement> unit;
    if (config.g_unit_override) unit = parse_element(*config.g_unit_override, setup.ring);
    DeformedWittAlgebra W = build_family_algebra(setup, config.windows, unit);
    return {setup.ring, std::move(W)};
}

int cmd_check_axioms(const ScenarioConfig& config) {
    const Report rep = run_scenario(config);
    std::cout << (config.json_output ? report_json(rep) : report_text(rep));
    return report_exit_code(rep);
}

int cmd_simplicity(const ScenarioConfig& config) {
    if (config.custom)
        throw UnsupportedFamily("simplicity is decided only for the preset families");
    DecisionOptions opt;
    opt.seed = config.seed;
    opt.windows = config.windows;
    const SimplicityVerdict v = decide_simplicity(config.family, opt);
    std::cout << (config.json_output ? verdict_json_text(v, config.family)
                                     : verdict_text(v, config.family));
    // a NotSimple without a verified certificate is a contract violation
    for (const auto& e : v.evidence)
        if (e.kind == "certificate_failure") return 1;
    return 0;
}

int cmd_bracket(const ScenarioConfig& config, const std::string& a, const std::string& b) {
    const AlgebraContext ctx = make_context(config);
    const RingElement result = ctx.algebra.bracket(parse_element(a, ctx.ring),
                                                   parse_element(b, ctx.ring));
    if (config.json_output) {
        ordered_json j{{"a", a}, {"b", b}, {"bracket", format_element(result)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << format_element(result) << "\n";
    }
    return 0;
}

int cmd_partial(const ScenarioConfig& config, const std::string& a) {
    const AlgebraContext ctx = make_context(config);
    const RingElement result = ctx.algebra.partial(parse_element(a, ctx.ring));
    if (config.json_output) {
        ordered_json j{{"a", a}, {"partial", format_element(result)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << format_element(result) << "\n";
    }
    return 0;
}

int cmd_ideal_stable(const ScenarioConfig& config, const std::string& gen) {
    const AlgebraContext ctx = make_context(config);
    const PrincipalIdeal ideal = make_principal(parse_element(gen, ctx.ring));
    const StabilityCertificate cert = is_partial_stable(ctx.algebra, ideal);
    const BruteForceResult oracle =
        brute_force_stability(ctx.algebra, ideal, config.windows.multiplier_window);
    const bool agree = cert.stable == oracle.stable;
    if (config.json_output) {
        ordered_json j;
        j["generator"] = format_element(ideal.generator);
        j["stable"] = cert.stable;
        if (cert.quotient) j["quotient"] = format_element(*cert.quotient);
        if (cert.counterexample) {
            j["counterexample"] =
                ordered_json{{"multiplier", format_element(cert.counterexample->multiplier)},
                             {"image", format_element(cert.counterexample->image)}};
        }
        j["justification"] = cert.justification;
        j["brute_force"] = ordered_json{{"window", config.windows.multiplier_window},
                                        {"checked", oracle.checked},
                                        {"stable", oracle.stable},
                                        {"agrees", agree}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "ideal (" << format_element(ideal.generator) << "): "
                  << (cert.stable ? "partial-stable" : "not partial-stable") << "\n";
        if (cert.quotient)
            std::cout << "  quotient partial(p)/p = " << format_element(*cert.quotient) << "\n";
        if (cert.counterexample)
            std::cout << "  counterexample: partial(p * "
                      << format_element(cert.counterexample->multiplier) << ") = "
                      << format_element(cert.counterexample->image)
                      << " is not divisible by p\n";
        std::cout << "  brute force (window " << config.windows.multiplier_window
                  << ", " << oracle.checked << " multipliers): "
                  << (oracle.stable ? "stable" : "not stable")
                  << (agree ? " [agrees]" : " [DISAGREES]") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_extract(const ScenarioConfig& config, const std::string& p_text) {
    const AlgebraContext ctx = make_context(config);
    const RingElement p = parse_element(p_text, ctx.ring);
    const Extraction ex = extract_monomials(ctx.algebra, p);
    if (config.json_output) {
        ordered_json j;
        j["p"] = format_element(p);
        j["singular"] = ex.singular;
        if (ex.singular) {
            j["coinciding_terms"] = ordered_json::array(
                {ex.coinciding->first, ex.coinciding->second});
            j["shared_eigenvalue"] = format_coefficient(*ex.shared_eigenvalue);
        } else {
            ordered_json rows = ordered_json::array();
            for (const auto& row : ex.rows) {
                ordered_json combo = ordered_json::array();
                for (const auto& c : row.combination) combo.push_back(format_coefficient(c));
                rows.push_back(
                    ordered_json{{"term", format_element(row.term)}, {"combination", combo}});
            }
            j["rows"] = rows;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        if (ex.singular) {
            std::cout << "singular system: terms " << ex.coinciding->first << " and "
                      << ex.coinciding->second << " share eigenvalue "
                      << format_coefficient(*ex.shared_eigenvalue) << "\n";
        } else {
            for (const auto& row : ex.rows) {
                std::cout << format_element(row.term) << "  <-  [";
                for (std::size_t j = 0; j < row.combination.size(); ++j)
                    std::cout << (j ? ", " : "") << format_coefficient(row.combination[j]);
                std::cout << "] . (sigma^j p)\n";
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sigma-deformed Witt algebra toolkit"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string expr_a, expr_b, expr_gen, expr_p;

    CLI::App* check = app.add_subcommand("check-axioms", "run the axiom residual suites");
    add_common(check, args);
    CLI::App* simp = app.add_subcommand("simplicity", "certified simplicity verdict");
    add_common(simp, args);
    CLI::App* bracket = app.add_subcommand("bracket", "evaluate [a, b]");
    add_common(bracket, args);
    bracket->add_option("--a", expr_a, "left operand")->required();
    bracket->add_option("--b", expr_b, "right operand")->required();
    CLI::App* partial = app.add_subcommand("partial", "evaluate the sigma-derivation");
    add_common(partial, args);
    partial->add_option("--a", expr_a, "operand")->required();
    CLI::App* stable = app.add_subcommand("ideal-stable", "decide stability of (gen)");
    add_common(stable, args);
    stable->add_option("--gen", expr_gen, "ideal generator")->required();
    CLI::App* extract = app.add_subcommand("extract-monomials",
                                           "Vandermonde extraction of the terms of p");
    add_common(extract, args);
    extract->add_option("--p", expr_p, "element to decompose")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check_axioms(to_config(args, check));
        if (simp->parsed()) return cmd_simplicity(to_config(args, simp));
        if (bracket->parsed()) return cmd_bracket(to_config(args, bracket), expr_a, expr_b);
        if (partial->parsed()) return cmd_partial(to_config(args, partial), expr_a);
        if (stable->parsed()) return cmd_ideal_stable(to_config(args, stable), expr_gen);
        if (extract->parsed()) return cmd_extract(to_config(args, extract), expr_p);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownSymbol& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ExponentDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedFamily& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
