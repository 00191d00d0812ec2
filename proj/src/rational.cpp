#include "permstat/rational.hpp"

#include <cctype>

#include "permstat/errors.hpp"

namespace permstat {

Rational pow_rational(const Rational& base, std::uint64_t exp) {
    Rational result = 1;
    Rational acc = base;
    while (exp != 0) {
        if (exp & 1u) result *= acc;
        exp >>= 1u;
        if (exp != 0) acc *= acc;
    }
    return result;
}

std::string rational_to_string(const Rational& value) {
    const BigInt num = numerator(value);
    const BigInt den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

BigInt parse_bigint(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer in rational literal");
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') i = 1;
    if (i == text.size()) throw ParseError("sign without digits in rational literal");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw ParseError("invalid digit in rational literal: '" + std::string(text) + "'");
    }
    return BigInt(std::string(text));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rational rational_from_string(std::string_view text) {
    const std::string_view body = trim(text);
    if (body.empty()) throw ParseError("empty rational literal");
    const std::size_t slash = body.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_bigint(body));
    }
    if (body.find('/', slash + 1) != std::string_view::npos)
        throw ParseError("multiple '/' in rational literal: '" + std::string(body) + "'");
    const BigInt num = parse_bigint(trim(body.substr(0, slash)));
    const BigInt den = parse_bigint(trim(body.substr(slash + 1)));
    if (den <= 0) throw ParseError("rational denominator must be positive: '" + std::string(body) + "'");
    return Rational(num, den);
}

std::string decimal_string(const Rational& value, unsigned digits) {
    BigInt num = numerator(value);
    const BigInt den = denominator(value);
    const bool negative = num < 0;
    if (negative) num = -num;

    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;

    // Round half away from zero at the last requested digit.
    BigInt scaled = (num * scale * 2 + den) / (den * 2);

    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;

    std::string result = negative && (whole != 0 || frac != 0) ? "-" : "";
    result += whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        result += ".";
        result += std::string(digits - f.size(), '0');
        result += f;
    }
    return result;
}

} // namespace permstat
