#pragma once

#include <string>

namespace platekit {

/// Shortest "%.*g" rendering with `digits` significant digits. -inf prints
/// as "-inf", the file-format spelling of "no signal".
std::string format_number(double value, int digits = 10);

}  // namespace platekit
