/**
 * @file io.hpp
 * @brief JSON ingestion and serialization: matrices as {"n", "rows"} and the
 *        code-spec objects the CLI accepts.
 *
 * Matrix rows serialize as 0/1 strings, row-major, with string index 0 the
 * leftmost character and coordinate 0 of the row.
 */
#pragma once

#include <json.hpp>

#include "coinf/code.hpp"
#include "coinf/matrix.hpp"

namespace coinf {

using json = nlohmann::json;

inline json matrix_to_json(const GF2Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.row_count(); ++i) rows.push_back(m.row_word(i).str());
    return json{{"n", m.cols}, {"rows", rows}};
}

inline GF2Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw std::invalid_argument("matrix: expected {\"n\": int, \"rows\": [strings]}");
    const int n = j.at("n").get<int>();
    std::vector<std::string> rows;
    for (const auto& row : j.at("rows")) rows.push_back(row.get<std::string>());
    return GF2Matrix::from_strings(rows, n);
}

/**
 * Build a code from a spec object.  Accepted shapes:
 *   {"type":"matrix","n":9,"rows":[...]}
 *   {"type":"repetition","r":3,"k":5}
 *   {"type":"distinct_weight","r":2,"k":3}
 *   {"type":"hybrid","parts":[[0,1],[2,3,4]]}
 *   {"type":"parity_check","n":10}
 *   {"type":"product","left":<spec>,"right":<spec>}
 */
inline BinaryCode code_from_spec(const json& spec) {
    if (!spec.is_object() || !spec.contains("type"))
        throw std::invalid_argument("code spec: missing \"type\" field");
    const std::string type = spec.at("type").get<std::string>();
    if (type == "matrix") return from_matrix(matrix_from_json(spec));
    if (type == "repetition") {
        if (!spec.contains("r") || !spec.contains("k"))
            throw std::invalid_argument("code spec: repetition needs fields r, k");
        return repetition_code(spec.at("r").get<int>(), spec.at("k").get<int>());
    }
    if (type == "distinct_weight") {
        if (!spec.contains("r") || !spec.contains("k"))
            throw std::invalid_argument("code spec: distinct_weight needs fields r, k");
        return distinct_weight_code(spec.at("r").get<int>(), spec.at("k").get<int>());
    }
    if (type == "hybrid") {
        if (!spec.contains("parts")) throw std::invalid_argument("code spec: hybrid needs field parts");
        std::vector<std::vector<int>> parts;
        for (const auto& part : spec.at("parts")) parts.push_back(part.get<std::vector<int>>());
        return hybrid_code(Partition(std::move(parts)));
    }
    if (type == "parity_check") {
        if (!spec.contains("n")) throw std::invalid_argument("code spec: parity_check needs field n");
        return parity_check_code(spec.at("n").get<int>());
    }
    if (type == "product") {
        if (!spec.contains("left") || !spec.contains("right"))
            throw std::invalid_argument("code spec: product needs fields left, right");
        return product(code_from_spec(spec.at("left")), code_from_spec(spec.at("right")));
    }
    throw std::invalid_argument("code spec: unknown type \"" + type + "\"");
}

inline json family_to_json(const Family& family) {
    json out{{"name", family.name()}};
    switch (family.kind) {
        case Family::Kind::repetition:
        case Family::Kind::distinct_weight:
            out["r"] = family.r;
            out["k"] = family.k;
            break;
        case Family::Kind::hybrid:
            out["parts"] = family.parts;
            break;
        case Family::Kind::parity_check:
            out["n"] = family.n;
            break;
        case Family::Kind::product:
            if (family.left) out["left"] = family_to_json(*family.left);
            if (family.right) out["right"] = family_to_json(*family.right);
            break;
        default:
            break;
    }
    return out;
}

}  // namespace coinf
