#include "fuzzcalc/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

namespace fuzzcalc {

namespace {

std::string to_chars_string(double x, std::chars_format fmt, int precision) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, fmt, precision);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string format_number(double x) {
    if (x == 0.0) return "0";
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";

    // 9 significant digits in scientific form; the printed exponent decides
    // the final representation so values that round across a power of ten
    // stay at 9 digits.
    const std::string sci = to_chars_string(x, std::chars_format::scientific, 8);
    const std::size_t epos = sci.find('e');
    const int exp10 = std::atoi(sci.c_str() + epos + 1);
    if (exp10 < -3 || exp10 >= 7) return sci;
    return to_chars_string(x, std::chars_format::fixed, 8 - exp10);
}

}  // namespace fuzzcalc
