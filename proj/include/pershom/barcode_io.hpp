#pragma once

// Barcode serialization.
//
// Text: a `field: <name>` header, then one line per bar `dim n: [b, d)`
// with `inf` for an essential death.
//
// JSON: {"field": "<name>", "bars": [{"dim", "birth", "death": int|null,
// "rep": [["<coef>", "<simplex tokens>"], ...]}]} - representatives list
// (coefficient, simplex) pairs with the simplex as space-joined vertex
// names.  parse(emit(barcode)) round-trips exactly.

#include <string>
#include <vector>

#include <json.hpp>

#include "pershom/barcode.hpp"

namespace pershom {

template <FieldRing F>
std::string barcode_to_text(const Barcode<F>& bc) {
    std::string out = "field: " + bc.field.name() + "\n";
    for (const auto& b : bc.bars)
        out += "dim " + std::to_string(b.dim) + ": " + interval_to_text(b.interval) + "\n";
    return out;
}

template <FieldRing F>
nlohmann::json barcode_to_json(const Barcode<F>& bc, const VertexOrder& order) {
    nlohmann::json bars = nlohmann::json::array();
    for (const auto& b : bc.bars) {
        nlohmann::json rep = nlohmann::json::array();
        for (const auto& [s, c] : b.representative)
            rep.push_back(nlohmann::json::array({bc.field.to_string(c), simplex_name(order, s)}));
        nlohmann::json jb;
        jb["dim"] = b.dim;
        jb["birth"] = b.interval.birth;
        if (b.interval.death)
            jb["death"] = *b.interval.death;
        else
            jb["death"] = nullptr;
        jb["rep"] = std::move(rep);
        bars.push_back(std::move(jb));
    }
    nlohmann::json out;
    out["field"] = bc.field.name();
    out["bars"] = std::move(bars);
    return out;
}

template <FieldRing F>
Barcode<F> barcode_from_json(const F& field, const nlohmann::json& j, const VertexOrder& order) {
    validate(j.is_object() && j.contains("field") && j.contains("bars"),
             "barcode JSON needs a top-level object with 'field' and 'bars'");
    validate(j["field"].is_string() && j["field"].get<std::string>() == field.name(),
             "barcode JSON field does not match the requested field");
    validate(j["bars"].is_array(), "barcode JSON 'bars' must be an array");

    Barcode<F> out{field, {}};
    for (const auto& jb : j["bars"]) {
        validate(jb.is_object() && jb.contains("dim") && jb.contains("birth") &&
                     jb.contains("death"),
                 "barcode JSON bar needs 'dim', 'birth', 'death'");
        validate(jb["dim"].is_number_unsigned() && jb["birth"].is_number_unsigned(),
                 "barcode JSON dim/birth must be naturals");
        Bar<F> bar;
        bar.dim = jb["dim"].get<std::size_t>();
        bar.interval.birth = jb["birth"].get<unsigned>();
        if (!jb["death"].is_null()) {
            validate(jb["death"].is_number_unsigned(), "barcode JSON death must be null or natural");
            bar.interval.death = jb["death"].get<unsigned>();
        }
        validate_interval(bar.interval);
        if (jb.contains("rep")) {
            validate(jb["rep"].is_array(), "barcode JSON rep must be an array");
            for (const auto& entry : jb["rep"]) {
                validate(entry.is_array() && entry.size() == 2 && entry[0].is_string() &&
                             entry[1].is_string(),
                         "barcode JSON rep entries must be [coefficient, simplex] string pairs");
                auto coef = field.parse(entry[0].get<std::string>());
                validate(coef.has_value(), "barcode JSON rep coefficient does not parse");
                std::vector<std::string> tokens;
                const std::string names = entry[1].get<std::string>();
                std::size_t i = 0;
                while (i < names.size()) {
                    while (i < names.size() && names[i] == ' ') ++i;
                    std::size_t k = i;
                    while (k < names.size() && names[k] != ' ') ++k;
                    if (k > i) tokens.push_back(names.substr(i, k - i));
                    i = k;
                }
                auto s = simplex_from_tokens(order, tokens, 0);
                validate(!field.is_zero(*coef), "barcode JSON rep coefficient is zero");
                auto [it, fresh] = bar.representative.emplace(std::move(s), *coef);
                validate(fresh, "barcode JSON rep lists a simplex twice");
            }
        }
        out.bars.push_back(std::move(bar));
    }
    return out;
}

}  // namespace pershom
