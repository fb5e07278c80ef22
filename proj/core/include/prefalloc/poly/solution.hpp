#pragma once

#include <cstdint>

#include "prefalloc/allocation.hpp"

namespace prefalloc::poly {

struct Solution {
  std::int64_t value = 0;
  Allocation allocation;
};

}  // namespace prefalloc::poly
