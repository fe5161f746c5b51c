#pragma once

// JSON encoding of points, ellipses, certificates and polygon inputs.
//
// Numbers are rounded to a requested count of significant digits and then
// written in the shortest form that reads back to the same double, so a
// document survives parse -> serialize unchanged.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ellbill/certificate.hpp"
#include "ellbill/conics.hpp"
#include "ellbill/point.hpp"

namespace ellbill::cli {

using Json = nlohmann::ordered_json;

/// Malformed or incomplete input document.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Formatting policy for emitted numbers.
struct NumberFormat {
    int digits = 17;

    double operator()(double v) const {
        if (v == 0.0) return 0.0; // drops the sign of -0.0
        if (digits >= 17 || !std::isfinite(v)) return v;
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.*g", digits, v);
        return std::strtod(buf, nullptr);
    }
};

inline Json to_json(Point2 p, const NumberFormat& fmt) { return Json::array({fmt(p.x), fmt(p.y)}); }

inline Json to_json(std::span<const Point2> pts, const NumberFormat& fmt) {
    Json out = Json::array();
    for (const auto& p : pts) out.push_back(to_json(p, fmt));
    return out;
}

inline Json to_json(const Ellipse& e, const NumberFormat& fmt) {
    const EllipseCanonical c = to_canonical(e);
    return Json{{"focus1", to_json(e.focus1(), fmt)},
                {"focus2", to_json(e.focus2(), fmt)},
                {"rope_length", fmt(e.rope_length())},
                {"center", to_json(c.center, fmt)},
                {"semi_major", fmt(c.semi_major)},
                {"semi_minor", fmt(c.semi_minor)},
                {"rotation", fmt(c.rotation)}};
}

inline Json to_json(const ConfocalConic& c, const NumberFormat& fmt) {
    return Json{{"lambda", fmt(c.lambda)}, {"kind", std::string(to_string(c.kind))}};
}

inline Json to_json(std::span<const VertexCertificate> certs, const NumberFormat& fmt) {
    Json out = Json::array();
    for (const auto& c : certs)
        out.push_back(Json{{"on_ellipse", fmt(c.on_ellipse)}, {"tangency", fmt(c.tangency)}, {"reflection", fmt(c.reflection)}});
    return out;
}

namespace detail {

inline bool has_object(const Json& j) {
    if (j.is_object()) return true;
    if (j.is_array())
        for (const auto& e : j)
            if (has_object(e)) return true;
    return false;
}

inline void write_pretty(const Json& j, int depth, std::string& out) {
    const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
    const std::string close(2 * static_cast<std::size_t>(depth), ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [key, value] : j.items()) {
            out += pad + Json(key).dump() + ": ";
            write_pretty(value, depth + 1, out);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += close + "}";
    } else if (j.is_array() && has_object(j)) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            write_pretty(j[i], depth + 1, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += close + "]";
    } else {
        out += j.dump();
    }
}

} // namespace detail

/// Indented text with objects expanded and arrays of numbers (points,
/// point lists) kept on one line.
inline std::string to_text(const Json& j) {
    std::string out;
    detail::write_pretty(j, 0, out);
    return out + "\n";
}

// --- reading ---------------------------------------------------------------

inline const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline double read_number(const Json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
    return j.get<double>();
}

inline Point2 read_point(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("a point must be an array [x, y]");
    const double x = read_number(j[0], "coordinate"), y = read_number(j[1], "coordinate");
    if (!std::isfinite(x) || !std::isfinite(y)) throw ParseError("coordinates must be finite");
    return {x, y};
}

inline std::vector<Point2> read_points(const Json& j) {
    if (!j.is_array()) throw ParseError("vertices must be an array of points");
    std::vector<Point2> out;
    for (const auto& p : j) out.push_back(read_point(p));
    return out;
}

/// Ellipse from either focal form {focus1, focus2, rope_length} or canonical
/// form {center, semi_major, semi_minor, rotation}; focal form wins when both
/// are present.
inline Ellipse read_ellipse(const Json& j) {
    if (!j.is_object()) throw ParseError("ellipse must be an object");
    if (j.contains("focus1") || j.contains("focus2") || j.contains("rope_length"))
        return Ellipse(read_point(require_field(j, "focus1")), read_point(require_field(j, "focus2")),
                       read_number(require_field(j, "rope_length"), "rope_length"));
    EllipseCanonical c;
    c.center = read_point(require_field(j, "center"));
    c.semi_major = read_number(require_field(j, "semi_major"), "semi_major");
    c.semi_minor = read_number(require_field(j, "semi_minor"), "semi_minor");
    c.rotation = j.contains("rotation") ? read_number(j.at("rotation"), "rotation") : 0.0;
    return from_canonical(c);
}

inline Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace ellbill::cli
