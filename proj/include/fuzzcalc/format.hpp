#pragma once

#include <string>

namespace fuzzcalc {

/// Locale-independent numeric formatting for CSV output: 9 significant
/// digits, plain decimal inside [1e-3, 1e7), lowercase scientific outside.
/// Zero prints as "0".
std::string format_number(double x);

}  // namespace fuzzcalc
