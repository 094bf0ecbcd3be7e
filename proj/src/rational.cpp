#include "latmeas/rational.hpp"

#include <cctype>
#include <charconv>

#include "latmeas/errors.hpp"

namespace latmeas {

namespace {

std::string strip(const std::string& s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

long long parse_int(const std::string& s, const std::string& whole) {
    long long value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || s.empty()) {
        throw ParseError("not a rational number: '" + whole + "'");
    }
    return value;
}

} // namespace

Rat parse_rational(const std::string& text) {
    const std::string s = strip(text);
    const size_t slash = s.find('/');
    if (slash == std::string::npos) {
        return Rat(parse_int(s, text), 1);
    }
    const long long num = parse_int(strip(s.substr(0, slash)), text);
    const long long den = parse_int(strip(s.substr(slash + 1)), text);
    if (den == 0) {
        throw ParseError("zero denominator in rational: '" + text + "'");
    }
    return Rat(num, den);
}

std::string to_string(const Rat& value) {
    if (value.denominator() == 1) {
        return std::to_string(value.numerator());
    }
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

} // namespace latmeas
