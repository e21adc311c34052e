#include <cstdlib>
#include <string>

#include "pseudoh/kernels.hpp"

namespace pseudoh::kernels {

bool avx2_available() {
#if defined(PSEUDOH_WITH_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

struct Choice {
  GemmFn fn;
  std::string_view name;
};

Choice choose() {
  const char* env = std::getenv("PSEUDOH_KERNEL");
  bool force_scalar = env && std::string(env) == "scalar";
#if defined(PSEUDOH_WITH_AVX2)
  if (!force_scalar && avx2_available()) return {gemm_i32_avx2, "avx2"};
#endif
  (void)force_scalar;
  return {gemm_i32_scalar, "scalar"};
}

const Choice& chosen() {
  static const Choice c = choose();
  return c;
}

}  // namespace

GemmFn gemm_i32() { return chosen().fn; }
std::string_view active_variant() { return chosen().name; }

}  // namespace pseudoh::kernels
