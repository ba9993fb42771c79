#ifndef DIVDMT_FORMAT_HPP
#define DIVDMT_FORMAT_HPP

#include <cstdio>
#include <string>

namespace divdmt {

/// Locale-independent shortest-ish decimal for CSV output (15 significant
/// digits, '.' separator). Negative zero prints as 0.
inline std::string format_number(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

}  // namespace divdmt

#endif  // DIVDMT_FORMAT_HPP
