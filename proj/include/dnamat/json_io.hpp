#pragma once

// JSON (de)serialization of matrices. One schema covers both symbolic
// and evaluated matrices:
//
//   {
//     "order":    k,
//     "entries":  [[...], ...],   // canonical BiPoly strings, or "num/den"
//     "point":    {"alpha": "p/q", "beta": "p/q"} | null,
//     "symbolic": bool
//   }
//
// Numbers are always carried as exact strings, never as JSON floats;
// parse(emit(M)) must reproduce M bit for bit.

#include <dnamat/bipoly.hpp>
#include <dnamat/matrix.hpp>
#include <dnamat/rational.hpp>

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace dnamat {

struct EvalPoint {
    Rational alpha;
    Rational beta;  // not required to lie on the hyperbola
    friend bool operator==(const EvalPoint&, const EvalPoint&) = default;
};

inline nlohmann::json matrix_to_json(const PolyMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= m.order(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= m.order(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return {{"order", m.order()},
            {"entries", std::move(rows)},
            {"point", nullptr},
            {"symbolic", true}};
}

inline nlohmann::json matrix_to_json(const RatMatrix& m,
                                     const std::optional<EvalPoint>& point) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= m.order(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= m.order(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    nlohmann::json pt = nullptr;
    if (point)
        pt = {{"alpha", point->alpha.to_string()}, {"beta", point->beta.to_string()}};
    return {{"order", m.order()},
            {"entries", std::move(rows)},
            {"point", std::move(pt)},
            {"symbolic", false}};
}

namespace detail {

inline int checked_order(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("order") || !doc.contains("entries") ||
        !doc.contains("symbolic"))
        throw std::invalid_argument("matrix json: missing required fields");
    const int order = doc.at("order").get<int>();
    if (order < 1) throw std::invalid_argument("matrix json: order must be >= 1");
    const auto& entries = doc.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != order)
        throw std::invalid_argument("matrix json: entries shape mismatch");
    for (const auto& row : entries)
        if (!row.is_array() || static_cast<int>(row.size()) != order)
            throw std::invalid_argument("matrix json: entries shape mismatch");
    return order;
}

}  // namespace detail

inline PolyMatrix poly_matrix_from_json(const nlohmann::json& doc) {
    const int order = detail::checked_order(doc);
    if (!doc.at("symbolic").get<bool>())
        throw std::invalid_argument("matrix json: expected a symbolic matrix");
    PolyMatrix m(order);
    for (int i = 1; i <= order; ++i)
        for (int j = 1; j <= order; ++j)
            m(i, j) = BiPoly::parse(doc.at("entries")[i - 1][j - 1].get<std::string>());
    return m;
}

struct RatMatrixDocument {
    RatMatrix matrix;
    std::optional<EvalPoint> point;
};

inline RatMatrixDocument rat_matrix_from_json(const nlohmann::json& doc) {
    const int order = detail::checked_order(doc);
    if (doc.at("symbolic").get<bool>())
        throw std::invalid_argument("matrix json: expected an evaluated matrix");
    RatMatrixDocument out{RatMatrix(order), std::nullopt};
    for (int i = 1; i <= order; ++i)
        for (int j = 1; j <= order; ++j)
            out.matrix(i, j) =
                Rational::parse(doc.at("entries")[i - 1][j - 1].get<std::string>());
    if (doc.contains("point") && !doc.at("point").is_null()) {
        out.point = EvalPoint{
            Rational::parse(doc.at("point").at("alpha").get<std::string>()),
            Rational::parse(doc.at("point").at("beta").get<std::string>())};
    }
    return out;
}

}  // namespace dnamat
