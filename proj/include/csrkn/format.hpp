#pragma once

#include <string>

namespace csrkn {

/// Round-trippable decimal: 17 significant digits, '.' separator.
std::string format_double(double x);

}  // namespace csrkn
