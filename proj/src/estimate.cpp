#include "resistor/estimate.hpp"

#include <string>

#include "resistor/errors.hpp"

namespace resistor {

std::string_view method_tag(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::PowerMethod: return "pm";
    case Method::RandomWalk: return "rw";
    case Method::Lanczos: return "lz";
    case Method::LanczosPush: return "lzpush";
  }
  return "unknown";
}

Method parse_method(std::string_view tag) {
  if (tag == "exact") return Method::Exact;
  if (tag == "pm") return Method::PowerMethod;
  if (tag == "rw") return Method::RandomWalk;
  if (tag == "lz") return Method::Lanczos;
  if (tag == "lzpush") return Method::LanczosPush;
  throw std::invalid_argument("unknown method '" + std::string(tag) + "'");
}

}  // namespace resistor
