#include <immintrin.h>

#include <algorithm>

#include "pseudoh/kernels.hpp"

namespace pseudoh::kernels {

void gemm_i32_avx2(const std::int32_t* A, const std::int32_t* B, std::int32_t* C, int m, int k, int n) {
  std::fill(C, C + static_cast<std::size_t>(m) * n, 0);
  const int n8 = n & ~7;
  for (int i = 0; i < m; ++i) {
    std::int32_t* c = C + static_cast<std::size_t>(i) * n;
    for (int l = 0; l < k; ++l) {
      std::int32_t a = A[static_cast<std::size_t>(i) * k + l];
      if (a == 0) continue;
      const std::int32_t* b = B + static_cast<std::size_t>(l) * n;
      const __m256i va = _mm256_set1_epi32(a);
      int j = 0;
      for (; j < n8; j += 8) {
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
        __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + j));
        vc = _mm256_add_epi32(vc, _mm256_mullo_epi32(va, vb));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(c + j), vc);
      }
      for (; j < n; ++j) c[j] += a * b[j];
    }
  }
}

}  // namespace pseudoh::kernels
