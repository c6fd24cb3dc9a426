#pragma once

/**
 * @file report.hpp
 * @brief JSON report envelope shared by every CLI command.
 *
 * Exact values are rendered as strings ("p/q", or "p" for integers) so that
 * no value ever passes through a floating-point type.
 */

#include <json.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rslab/errors.hpp"
#include "rslab/linear_form.hpp"
#include "rslab/rational.hpp"

namespace rslab {

using Json = nlohmann::json;

inline Json to_json(const BigRational& x) { return x.str(); }
inline Json to_json(const BigInt& x) { return x.str(); }

inline Json to_json(const std::vector<BigRational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

inline Json to_json(const LinearForm& f) {
    Json coeffs = Json::object();
    for (const auto& [name, c] : f.coefficients()) coeffs[name] = c.str();
    return {{"formula", f.str()}, {"constant", f.constant_term().str()}, {"coefficients", coeffs}};
}

inline Json to_json(const std::optional<BigRational>& x) { return x ? to_json(*x) : Json(nullptr); }

/// Reads back a value written by to_json(BigRational).
inline BigRational rational_from_json(const Json& j) {
    if (!j.is_string()) throw DomainError("expected a rational string, got " + j.dump());
    return BigRational::parse(j.get<std::string>());
}

struct ReportEnvelope {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    std::vector<std::string> citations;

    [[nodiscard]] Json to_json() const {
        return {{"command", command}, {"inputs", inputs}, {"results", results}, {"citations", citations}};
    }

    static ReportEnvelope from_json(const Json& j) {
        for (const char* key : {"command", "inputs", "results", "citations"})
            if (!j.contains(key)) throw DomainError(std::string("report envelope is missing '") + key + "'");
        ReportEnvelope e;
        e.command = j.at("command").get<std::string>();
        e.inputs = j.at("inputs");
        e.results = j.at("results");
        e.citations = j.at("citations").get<std::vector<std::string>>();
        return e;
    }

    /// Pretty JSON, terminated by a newline. Keys are sorted, so output is byte-stable.
    [[nodiscard]] std::string dump() const { return to_json().dump(2) + "\n"; }

    void cite(const std::string& c) {
        for (const auto& x : citations)
            if (x == c) return;
        citations.push_back(c);
    }

    friend bool operator==(const ReportEnvelope&, const ReportEnvelope&) = default;
};

namespace detail {

inline std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "n/a";
    return j.dump();
}

inline bool is_flat(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& x : j)
        if (x.is_structured()) return false;
    return true;
}

inline std::string flat_text(const Json& v) {
    std::string s = "[";
    bool first = true;
    for (const auto& x : v) {
        s += (first ? "" : ", ") + scalar_text(x);
        first = false;
    }
    return s + "]";
}

inline void render(std::ostream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !is_flat(v)) {
                os << pad << k << ":\n";
                render(os, v, indent + 2);
            } else if (is_flat(v)) {
                os << pad << k << ": " << flat_text(v) << "\n";
            } else {
                os << pad << k << ": " << scalar_text(v) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (is_flat(v)) {
                os << pad << "- " << flat_text(v) << "\n";
            } else if (v.is_structured()) {
                os << pad << "-\n";
                render(os, v, indent + 2);
            } else {
                os << pad << "- " << scalar_text(v) << "\n";
            }
        }
    } else {
        os << pad << scalar_text(j) << "\n";
    }
}

}  // namespace detail

/// Indented plain-text rendering of an envelope.
inline std::string render_text(const ReportEnvelope& e) {
    std::ostringstream os;
    os << "command: " << e.command << "\n";
    if (!e.inputs.empty()) {
        os << "inputs:\n";
        detail::render(os, e.inputs, 2);
    }
    os << "results:\n";
    detail::render(os, e.results, 2);
    if (!e.citations.empty()) {
        os << "citations:\n";
        for (const auto& c : e.citations) os << "  - " << c << "\n";
    }
    return os.str();
}

}  // namespace rslab
