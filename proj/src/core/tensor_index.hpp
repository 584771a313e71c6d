#pragma once

#include <cstdint>
#include <vector>

#include "core/errors.hpp"

namespace rdmkit {

// Total matrix entries allowed for a dense operator (dim*dim <= kEntryCap).
inline constexpr std::int64_t kEntryCap = std::int64_t{1} << 22;

// d^n with an overflow/cap check against kEntryCap on the entry count.
inline std::int64_t pow_checked(int d, int n) {
  if (d < 1 || n < 0) fail(ErrorCode::InvalidArgument, "pow_checked: d >= 1, n >= 0 required");
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) {
    r *= d;
    if (r * r > kEntryCap)
      fail(ErrorCode::DimensionOverflow,
           "operator dimension " + std::to_string(r) + " exceeds entry cap");
  }
  return r;
}

// Product-basis index <-> factor digits, most significant factor first:
// flat = x_1 * d^{n-1} + x_2 * d^{n-2} + ... + x_n.
struct TensorIndex {
  std::vector<int> factors;
  int d = 0;

  static TensorIndex from_flat(std::int64_t flat, int d, int n) {
    TensorIndex t;
    t.d = d;
    t.factors.assign(n, 0);
    for (int i = n - 1; i >= 0; --i) {
      t.factors[i] = static_cast<int>(flat % d);
      flat /= d;
    }
    return t;
  }

  std::int64_t flat() const {
    std::int64_t f = 0;
    for (int x : factors) f = f * d + x;
    return f;
  }
};

}  // namespace rdmkit
