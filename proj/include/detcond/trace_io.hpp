#pragma once

// JSON serialization of condensation traces. The document layout is pinned by
// docs/trace.schema.json. Scalars are written in their canonical text form so
// rational traces round-trip without loss.

#include "detcond/condense.hpp"
#include "detcond/error.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace detcond {

inline constexpr std::string_view trace_format_name = "detcond-trace";
inline constexpr int trace_format_version = 1;

template <Scalar S>
struct TraceDocument {
    std::size_t order = 0;
    PivotStrategy strategy = PivotStrategy::first_nonzero;
    S determinant;
    std::vector<TraceEntry<S>> steps;
};

template <Scalar S>
nlohmann::json matrix_to_json(const Matrix<S>& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& x : m.entries()) entries.push_back(to_text(x));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

template <Scalar S>
nlohmann::json trace_to_json(std::size_t order, PivotStrategy strategy, const DetResult<S>& result) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& entry : result.trace) {
        if (const auto* step = std::get_if<CondensationStep<S>>(&entry)) {
            steps.push_back({{"kind", "condense"},
                             {"source_order", step->source_order()},
                             {"pivot", {step->pivot.k, step->pivot.l}},
                             {"pivot_value", to_text(step->pivot_value)},
                             {"sign", step->sign},
                             {"condensed", matrix_to_json(step->condensed)}});
        } else {
            steps.push_back({{"kind", "zero-first-row"}, {"source_order", std::get<ZeroFirstRow>(entry).order}});
        }
    }
    return {{"format", trace_format_name},
            {"version", trace_format_version},
            {"scalar", to_string(S::kind)},
            {"order", order},
            {"pivot_strategy", to_string(strategy)},
            {"determinant", to_text(result.value)},
            {"steps", std::move(steps)}};
}

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& obj, const char* key, const char* where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw ParseError(std::string("trace: ") + where + " is missing '" + key + "'");
    }
    return obj.at(key);
}

template <Scalar S>
S scalar_from_json(const nlohmann::json& value, const char* where) {
    if (!value.is_string()) throw ParseError(std::string("trace: ") + where + " must be a scalar string");
    return S::parse(value.get<std::string>());
}

inline std::size_t count_from_json(const nlohmann::json& value, const char* where) {
    if (!value.is_number_unsigned()) throw ParseError(std::string("trace: ") + where + " must be a non-negative integer");
    return value.get<std::size_t>();
}

template <Scalar S>
Matrix<S> matrix_from_json(const nlohmann::json& obj) {
    const auto rows = count_from_json(require_field(obj, "rows", "matrix"), "rows");
    const auto cols = count_from_json(require_field(obj, "cols", "matrix"), "cols");
    const auto& entries = require_field(obj, "entries", "matrix");
    if (!entries.is_array() || entries.size() != rows * cols) {
        throw ParseError("trace: matrix entries must be an array of rows*cols scalars");
    }
    std::vector<S> values;
    values.reserve(entries.size());
    for (const auto& e : entries) values.push_back(scalar_from_json<S>(e, "matrix entry"));
    return Matrix<S>(rows, cols, std::move(values));
}

}  // namespace detail

/// Parses and validates a trace document written by trace_to_json(). The
/// scalar kind recorded in the document must match S.
template <Scalar S>
TraceDocument<S> trace_from_json(const nlohmann::json& doc) {
    using detail::require_field;
    if (require_field(doc, "format", "document") != trace_format_name) throw ParseError("trace: unknown format");
    if (require_field(doc, "version", "document") != trace_format_version) {
        throw ParseError("trace: unsupported version");
    }
    if (require_field(doc, "scalar", "document") != to_string(S::kind)) {
        throw ParseError("trace: scalar kind does not match the requested kind");
    }
    const auto& strategy = require_field(doc, "pivot_strategy", "document");
    if (!strategy.is_string()) throw ParseError("trace: pivot_strategy must be a string");

    TraceDocument<S> out;
    out.order = detail::count_from_json(require_field(doc, "order", "document"), "order");
    try {
        out.strategy = parse_pivot_strategy(strategy.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("trace: ") + e.what());
    }
    out.determinant = detail::scalar_from_json<S>(require_field(doc, "determinant", "document"), "determinant");

    const auto& steps = require_field(doc, "steps", "document");
    if (!steps.is_array()) throw ParseError("trace: steps must be an array");
    for (const auto& step : steps) {
        const auto& kind = require_field(step, "kind", "step");
        const auto order = detail::count_from_json(require_field(step, "source_order", "step"), "source_order");
        if (kind == "zero-first-row") {
            out.steps.emplace_back(ZeroFirstRow{order});
            continue;
        }
        if (kind != "condense") throw ParseError("trace: unknown step kind");
        const auto& pivot = require_field(step, "pivot", "step");
        if (!pivot.is_array() || pivot.size() != 2) throw ParseError("trace: pivot must be [k, l]");
        CondensationStep<S> parsed{
            PivotSpec{detail::count_from_json(pivot[0], "pivot k"), detail::count_from_json(pivot[1], "pivot l")},
            detail::scalar_from_json<S>(require_field(step, "pivot_value", "step"), "pivot_value"),
            require_field(step, "sign", "step").get<int>(),
            detail::matrix_from_json<S>(require_field(step, "condensed", "step")),
        };
        if (parsed.sign != 1 && parsed.sign != -1) throw ParseError("trace: sign must be +1 or -1");
        if (parsed.condensed.rows() + 1 != order || !parsed.condensed.is_square()) {
            throw ParseError("trace: condensed matrix order does not match source_order - 1");
        }
        out.steps.emplace_back(std::move(parsed));
    }
    return out;
}

template <Scalar S>
TraceDocument<S> parse_trace(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("trace: malformed JSON: ") + e.what());
    }
    try {
        return trace_from_json<S>(doc);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("trace: ") + e.what());
    }
}

}  // namespace detcond
