#include "meshflow/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace meshflow {

std::string to_fraction(const Rational& x) {
    std::ostringstream out;
    out << numerator(x);
    if (denominator(x) != 1) {
        out << '/' << denominator(x);
    }
    return out.str();
}

std::string format_fixed3(const Rational& x) {
    const bool negative = x < 0;
    const Rational a = negative ? Rational(-x) : x;
    // round(a * 1000), half away from zero
    const BigInt scaled = (numerator(a) * 2000 + denominator(a)) / (denominator(a) * 2);
    const BigInt whole = scaled / 1000;
    const BigInt frac = scaled % 1000;
    std::ostringstream out;
    if (negative) out << '-';
    out << whole << '.';
    std::string f = frac.str();
    out << std::string(3 - f.size(), '0') << f;
    return out.str();
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        return Rational(BigInt(text));
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t places = text.size() - dot - 1;
    if (places == 0) return Rational(BigInt(digits));
    BigInt den = 1;
    for (std::size_t i = 0; i < places; ++i) den *= 10;
    return Rational(BigInt(digits), den);
}

}  // namespace meshflow
