#include "hyperricci/rational.hpp"

#include <cctype>

namespace hyperricci {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text)) {
            throw Error("malformed rational '" + text +
                        "': expected integer or p/q");
        }
        return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) {
        throw Error("malformed rational '" + text + "': expected p/q");
    }
    Integer q(den);
    if (q <= 0) {
        throw Error("malformed rational '" + text + "': denominator must be positive");
    }
    return Rational(Integer(num), q);
}

std::string format_rational(const Rational& value) {
    const Integer num = numerator(value);
    const Integer den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string decimal_string(const Rational& value, int digits) {
    if (digits < 0) digits = 0;
    Integer num = numerator(value);
    Integer den = denominator(value);
    const bool negative = num < 0;
    if (negative) num = -num;
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const Integer scaled = num * scale / den; // truncation toward zero
    const Integer whole = scaled / scale;
    const Integer frac = scaled % scale;
    std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

} // namespace hyperricci
