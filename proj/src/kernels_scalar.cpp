#include <algorithm>

#include "pseudoh/kernels.hpp"

namespace pseudoh::kernels {

void gemm_i32_scalar(const std::int32_t* A, const std::int32_t* B, std::int32_t* C, int m, int k, int n) {
  std::fill(C, C + static_cast<std::size_t>(m) * n, 0);
  for (int i = 0; i < m; ++i) {
    std::int32_t* c = C + static_cast<std::size_t>(i) * n;
    for (int l = 0; l < k; ++l) {
      std::int32_t a = A[static_cast<std::size_t>(i) * k + l];
      if (a == 0) continue;
      const std::int32_t* b = B + static_cast<std::size_t>(l) * n;
      for (int j = 0; j < n; ++j) c[j] += a * b[j];
    }
  }
}

}  // namespace pseudoh::kernels
