#pragma once

#include <json.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <limits>
#include <string>

namespace cgt {

// ordered_json keeps emitted documents stable key-for-key, which the
// determinism checks on the instance emitters rely on
using json = nlohmann::ordered_json;

using Rational = boost::multiprecision::cpp_rational;

inline const json& require_field(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument("missing field '" + key + "' in JSON object");
    return *it;
}

/// Big integers are emitted as plain numbers while they fit in an int64 and
/// as decimal strings beyond that, so documents stay valid JSON everywhere.
inline json int_to_json(const boost::multiprecision::cpp_int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline boost::multiprecision::cpp_int int_from_json(const json& j) {
    if (j.is_number_integer()) return boost::multiprecision::cpp_int(j.get<std::int64_t>());
    if (j.is_string()) return boost::multiprecision::cpp_int(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(const std::string& s) {
    auto digits = [](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    if (!digits(num)) throw std::invalid_argument("not a rational: '" + s + "'");
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(num));
    std::string den = s.substr(slash + 1);
    if (!digits(den) || boost::multiprecision::cpp_int(den) == 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    return Rational(boost::multiprecision::cpp_int(num), boost::multiprecision::cpp_int(den));
}

}  // namespace cgt
