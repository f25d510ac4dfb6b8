#pragma once

#include <cstddef>
#include <string_view>

namespace resistor {

enum class Method { Exact, PowerMethod, RandomWalk, Lanczos, LanczosPush };

std::string_view method_tag(Method m);
/// Accepts the CLI tags exact, pm, rw, lz, lzpush.
Method parse_method(std::string_view tag);

struct RDEstimate {
  double value = 0.0;
  std::size_t iterations = 0;
  std::size_t touched_edges = 0;
  double seconds = 0.0;
  Method method = Method::Exact;
};

}  // namespace resistor
