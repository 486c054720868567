#ifndef EPDA_SERIALIZE_HPP
#define EPDA_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "epda/array.hpp"
#include "epda/errors.hpp"

namespace epda {

/// JSON form: {"K":..,"L":..,"F":..,"Z":..,"S":..,"entries":[[..] x F]}
/// with each cell either the string "*" or a positive integer.  Emission is
/// deterministic: keys in the order above, rows in index order.
inline nlohmann::ordered_json to_json(const DeliveryArray& a) {
    nlohmann::ordered_json doc;
    doc["K"] = a.users();
    doc["L"] = a.antennas();
    doc["F"] = a.subfiles();
    doc["Z"] = a.stars_per_column();
    doc["S"] = a.alphabet_size();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int j = 1; j <= a.subfiles(); ++j) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int k = 1; k <= a.users(); ++k) {
            const Entry e = a.at(j, k);
            if (e.is_star())
                row.push_back("*");
            else
                row.push_back(e.label());
        }
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc;
}

inline std::string emit_array(const DeliveryArray& a) { return to_json(a).dump(2) + "\n"; }

namespace detail {

inline int require_int_field(const nlohmann::json& doc, const char* name) {
    if (!doc.contains(name))
        throw FormatError(std::string("missing field \"") + name + "\"");
    const auto& v = doc.at(name);
    if (!v.is_number_integer())
        throw FormatError(std::string("field \"") + name + "\" must be an integer");
    return v.get<int>();
}

}  // namespace detail

inline DeliveryArray array_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw FormatError("top-level value must be an object");
    const int K = detail::require_int_field(doc, "K");
    const int L = detail::require_int_field(doc, "L");
    const int F = detail::require_int_field(doc, "F");
    const int Z = detail::require_int_field(doc, "Z");
    const int S = detail::require_int_field(doc, "S");

    if (!doc.contains("entries") || !doc.at("entries").is_array())
        throw FormatError("missing or non-array field \"entries\"");
    const auto& rows = doc.at("entries");
    if (static_cast<int>(rows.size()) != F)
        throw FormatError("\"entries\" has " + std::to_string(rows.size()) + " rows, declared F=" +
                          std::to_string(F));

    std::vector<Entry> grid;
    grid.reserve(static_cast<std::size_t>(F) * K);
    for (int j = 1; j <= F; ++j) {
        const auto& row = rows.at(j - 1);
        if (!row.is_array() || static_cast<int>(row.size()) != K)
            throw FormatError("row " + std::to_string(j) + " must be an array of K=" +
                              std::to_string(K) + " cells");
        for (int k = 1; k <= K; ++k) {
            const auto& cell = row.at(k - 1);
            const std::string where =
                " at row " + std::to_string(j) + ", column " + std::to_string(k);
            if (cell.is_string()) {
                if (cell.get<std::string>() != "*")
                    throw FormatError("unrecognized cell \"" + cell.get<std::string>() + "\"" +
                                      where);
                grid.push_back(Entry::star());
            } else if (cell.is_number_integer()) {
                const long long v = cell.get<long long>();
                if (v < 1)
                    throw FormatError("labels must be positive integers, got " +
                                      std::to_string(v) + where);
                grid.push_back(Entry::label(static_cast<int>(v)));
            } else {
                throw FormatError("cell must be \"*\" or a positive integer" + where);
            }
        }
    }
    return DeliveryArray(K, L, F, Z, S, std::move(grid));
}

inline DeliveryArray parse_array(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    return array_from_json(doc);
}

}  // namespace epda

#endif
