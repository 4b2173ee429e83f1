// ============================================================================
// taut/proof_json.hpp - the proof interchange format
// ============================================================================
//
// A proof file is a JSON array of steps, one object per line of the proof:
//
//   {"formula": "<text>", "rule": {...}}
//
// with "rule" one of
//
//   {"kind": "axiom",    "a": t, "rest": [t...]}
//   {"kind": "perm",     "list": [t...], "sigma": [i...], "premise": i}
//   {"kind": "assoc",    "a": t, "b": t, "rest": [t...], "premise": i}
//   {"kind": "dneg",     "a": t, "rest": [t...], "premise": i}
//   {"kind": "demorgan", "a": t, "b": t, "rest": [t...],
//                        "premiseLeft": i, "premiseRight": i}
//
// where t is formula text and i a 1-based step index.  Formulas are
// written in canonical ASCII; readers accept anything parse() accepts.
// ============================================================================

#pragma once

#include "taut/calculus.hpp"
#include "taut/text.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace taut {

class ProofFormatError : public Error {
public:
    using Error::Error;
};

// ── Writing ─────────────────────────────────────────────────────────────────

namespace detail {

inline nlohmann::ordered_json formula_texts(const DisjunctList& items) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const Formula& f : items) out.push_back(render(f));
    return out;
}

inline nlohmann::ordered_json rule_to_json(const Justification& j) {
    using nlohmann::ordered_json;
    return std::visit(
        overloaded{
            [](const AxiomA& r) {
                return ordered_json{
                    {"kind", "axiom"}, {"a", render(r.a)}, {"rest", formula_texts(r.rest)}};
            },
            [](const Perm& r) {
                return ordered_json{{"kind", "perm"},
                                    {"list", formula_texts(r.list)},
                                    {"sigma", r.sigma},
                                    {"premise", r.premise}};
            },
            [](const Assoc& r) {
                return ordered_json{{"kind", "assoc"},
                                    {"a", render(r.a)},
                                    {"b", render(r.b)},
                                    {"rest", formula_texts(r.rest)},
                                    {"premise", r.premise}};
            },
            [](const DNeg& r) {
                return ordered_json{{"kind", "dneg"},
                                    {"a", render(r.a)},
                                    {"rest", formula_texts(r.rest)},
                                    {"premise", r.premise}};
            },
            [](const DeMorgan& r) {
                return ordered_json{{"kind", "demorgan"},
                                    {"a", render(r.a)},
                                    {"b", render(r.b)},
                                    {"rest", formula_texts(r.rest)},
                                    {"premiseLeft", r.premise_left},
                                    {"premiseRight", r.premise_right}};
            },
        },
        j);
}

}  // namespace detail

inline nlohmann::ordered_json proof_to_json(const Proof& proof) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const ProofStep& step : proof.steps)
        out.push_back(nlohmann::ordered_json{{"formula", render(step.formula)},
                                             {"rule", detail::rule_to_json(step.justification)}});
    return out;
}

inline std::string proof_to_json_text(const Proof& proof) {
    return proof_to_json(proof).dump(2) + "\n";
}

// ── Reading ─────────────────────────────────────────────────────────────────

namespace detail {

[[noreturn]] inline void format_error(std::size_t step, const std::string& message) {
    throw ProofFormatError("step " + std::to_string(step) + ": " + message);
}

inline const nlohmann::json& json_field(const nlohmann::json& obj, const char* key,
                                        std::size_t step) {
    auto it = obj.find(key);
    if (it == obj.end()) format_error(step, std::string("missing field \"") + key + "\"");
    return *it;
}

inline Formula json_formula(const nlohmann::json& value, const char* key, std::size_t step) {
    if (!value.is_string()) format_error(step, std::string("field \"") + key + "\" must be a string");
    try {
        return parse(value.get<std::string>());
    } catch (const SyntaxError& e) {
        format_error(step, std::string("field \"") + key + "\": " + e.what());
    }
}

inline DisjunctList json_formula_list(const nlohmann::json& value, const char* key,
                                      std::size_t step) {
    if (!value.is_array())
        format_error(step, std::string("field \"") + key + "\" must be an array");
    DisjunctList out;
    out.reserve(value.size());
    for (const auto& item : value) out.push_back(json_formula(item, key, step));
    return out;
}

inline std::size_t json_index(const nlohmann::json& value, const char* key, std::size_t step) {
    if (!value.is_number_unsigned() || value.get<std::size_t>() < 1)
        format_error(step, std::string("field \"") + key + "\" must be a step index (1-based)");
    return value.get<std::size_t>();
}

inline std::vector<std::size_t> json_index_list(const nlohmann::json& value, const char* key,
                                                std::size_t step) {
    if (!value.is_array())
        format_error(step, std::string("field \"") + key + "\" must be an array");
    std::vector<std::size_t> out;
    out.reserve(value.size());
    for (const auto& item : value) out.push_back(json_index(item, key, step));
    return out;
}

inline Justification rule_from_json(const nlohmann::json& rule, std::size_t step) {
    if (!rule.is_object()) format_error(step, "\"rule\" must be an object");
    const nlohmann::json& kind_value = json_field(rule, "kind", step);
    if (!kind_value.is_string()) format_error(step, "field \"kind\" must be a string");
    const std::string kind = kind_value.get<std::string>();

    auto formula = [&](const char* key) { return json_formula(json_field(rule, key, step), key, step); };
    auto list = [&](const char* key) { return json_formula_list(json_field(rule, key, step), key, step); };
    auto index = [&](const char* key) { return json_index(json_field(rule, key, step), key, step); };

    if (kind == "axiom") return AxiomA{formula("a"), list("rest")};
    if (kind == "perm")
        return Perm{list("list"), json_index_list(json_field(rule, "sigma", step), "sigma", step),
                    index("premise")};
    if (kind == "assoc") return Assoc{formula("a"), formula("b"), list("rest"), index("premise")};
    if (kind == "dneg") return DNeg{formula("a"), list("rest"), index("premise")};
    if (kind == "demorgan")
        return DeMorgan{formula("a"), formula("b"), list("rest"), index("premiseLeft"),
                        index("premiseRight")};
    format_error(step, "unknown rule kind \"" + kind + "\"");
}

}  // namespace detail

/// Throws ProofFormatError on anything that is not a well-formed proof
/// file, including an empty step array.
inline Proof proof_from_json(const nlohmann::json& doc) {
    if (!doc.is_array()) throw ProofFormatError("a proof must be a JSON array of steps");
    if (doc.empty()) throw ProofFormatError("empty proof");
    Proof proof;
    proof.steps.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const std::size_t step = i + 1;
        const nlohmann::json& entry = doc[i];
        if (!entry.is_object()) detail::format_error(step, "each step must be an object");
        Formula stated = detail::json_formula(detail::json_field(entry, "formula", step),
                                              "formula", step);
        Justification rule =
            detail::rule_from_json(detail::json_field(entry, "rule", step), step);
        proof.steps.push_back(ProofStep{std::move(stated), std::move(rule)});
    }
    return proof;
}

inline Proof proof_from_json_text(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ProofFormatError(std::string("invalid JSON: ") + e.what());
    }
    return proof_from_json(doc);
}

// ── Plain-text rendering ────────────────────────────────────────────────────

namespace detail {

inline std::string joined_texts(const DisjunctList& items, ConnectiveStyle style) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ", ";
        out += render(items[i], style);
    }
    return out + "]";
}

inline std::string rule_to_text(const Justification& j, ConnectiveStyle style) {
    return std::visit(
        overloaded{
            [&](const AxiomA& r) {
                return "axiom  a=" + render(r.a, style) + "  rest=" + joined_texts(r.rest, style);
            },
            [&](const Perm& r) {
                std::string sigma = "[";
                for (std::size_t i = 0; i < r.sigma.size(); ++i) {
                    if (i > 0) sigma += ",";
                    sigma += std::to_string(r.sigma[i]);
                }
                return "perm  list=" + joined_texts(r.list, style) + "  sigma=" + sigma +
                       "]  premise=" + std::to_string(r.premise);
            },
            [&](const Assoc& r) {
                return "assoc  a=" + render(r.a, style) + "  b=" + render(r.b, style) +
                       "  rest=" + joined_texts(r.rest, style) +
                       "  premise=" + std::to_string(r.premise);
            },
            [&](const DNeg& r) {
                return "dneg  a=" + render(r.a, style) + "  rest=" + joined_texts(r.rest, style) +
                       "  premise=" + std::to_string(r.premise);
            },
            [&](const DeMorgan& r) {
                return "demorgan  a=" + render(r.a, style) + "  b=" + render(r.b, style) +
                       "  rest=" + joined_texts(r.rest, style) +
                       "  premises=" + std::to_string(r.premise_left) + "," +
                       std::to_string(r.premise_right);
            },
        },
        j);
}

}  // namespace detail

/// Human-readable numbered listing, one step per line.
inline std::string proof_to_text(const Proof& proof,
                                 ConnectiveStyle style = ConnectiveStyle::Ascii) {
    std::size_t index_width = std::to_string(proof.steps.size()).size();
    std::size_t formula_width = 0;
    std::vector<std::string> formulas;
    formulas.reserve(proof.steps.size());
    for (const ProofStep& step : proof.steps) {
        formulas.push_back(render(step.formula, style));
        formula_width = std::max(formula_width, formulas.back().size());
    }
    std::string out;
    for (std::size_t i = 0; i < proof.steps.size(); ++i) {
        std::string number = std::to_string(i + 1);
        out += std::string(index_width - number.size(), ' ') + number + "  ";
        out += formulas[i] + std::string(formula_width - formulas[i].size(), ' ') + "  ";
        out += detail::rule_to_text(proof.steps[i].justification, style);
        out += '\n';
    }
    return out;
}

}  // namespace taut
