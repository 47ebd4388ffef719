#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace centrax {

  // Carrier elements are always 0..size-1.
  using Element = std::uint32_t;
  using Tuple   = std::vector<Element>;
  using Pair    = std::pair<Element, Element>;

}  // namespace centrax
