#pragma once

#include <cstdint>
#include <string_view>

namespace pseudoh::kernels {

// C (m x n) = A (m x k) * B (k x n), row-major int32. Callers guarantee no overflow.
using GemmFn = void (*)(const std::int32_t* A, const std::int32_t* B, std::int32_t* C, int m, int k, int n);

void gemm_i32_scalar(const std::int32_t* A, const std::int32_t* B, std::int32_t* C, int m, int k, int n);
#if defined(PSEUDOH_WITH_AVX2)
void gemm_i32_avx2(const std::int32_t* A, const std::int32_t* B, std::int32_t* C, int m, int k, int n);
#endif

bool avx2_available();

// Kernel picked at first use: AVX2 when the CPU has it, scalar otherwise.
// PSEUDOH_KERNEL=scalar forces the reference kernel.
GemmFn gemm_i32();
std::string_view active_variant();

}  // namespace pseudoh::kernels
