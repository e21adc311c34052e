#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>

#include "oracle.hpp"
#include "pseudoh/kernels.hpp"
#include "pseudoh/matrix.hpp"

using namespace pseudoh;

namespace {

std::vector<std::int32_t> random_ints(std::mt19937& rng, std::size_t n, int bound) {
  std::vector<std::int32_t> v(n);
  for (auto& x : v) x = static_cast<std::int32_t>(rng() % (2 * bound + 1)) - bound;
  return v;
}

// Textbook triple loop, independent of both kernels.
std::vector<std::int32_t> naive(const std::vector<std::int32_t>& A, const std::vector<std::int32_t>& B, int m, int k,
                                int n) {
  std::vector<std::int32_t> C(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t acc = 0;
      for (int t = 0; t < k; ++t) acc += std::int64_t{A[i * k + t]} * B[t * n + j];
      C[i * n + j] = static_cast<std::int32_t>(acc);
    }
  return C;
}

}  // namespace

TEST_CASE("scalar kernel matches the triple loop") {
  std::mt19937 rng(4001);
  for (int t = 0; t < 200; ++t) {
    int m = 1 + static_cast<int>(rng() % 40), k = 1 + static_cast<int>(rng() % 40),
        n = 1 + static_cast<int>(rng() % 40);
    auto A = random_ints(rng, static_cast<std::size_t>(m) * k, 100);
    auto B = random_ints(rng, static_cast<std::size_t>(k) * n, 100);
    std::vector<std::int32_t> C(static_cast<std::size_t>(m) * n, 7);
    kernels::gemm_i32_scalar(A.data(), B.data(), C.data(), m, k, n);
    REQUIRE(C == naive(A, B, m, k, n));
  }
}

#if defined(PSEUDOH_WITH_AVX2)
TEST_CASE("AVX2 kernel matches the scalar kernel") {
  if (!kernels::avx2_available()) {
    MESSAGE("AVX2 not available on this CPU; equivalence skipped");
    return;
  }
  std::mt19937 rng(4002);
  for (int t = 0; t < 300; ++t) {
    int m = 1 + static_cast<int>(rng() % 70), k = 1 + static_cast<int>(rng() % 70),
        n = 1 + static_cast<int>(rng() % 70);
    auto A = random_ints(rng, static_cast<std::size_t>(m) * k, 1000);
    auto B = random_ints(rng, static_cast<std::size_t>(k) * n, 1000);
    std::vector<std::int32_t> C1(static_cast<std::size_t>(m) * n, 3), C2(static_cast<std::size_t>(m) * n, -3);
    kernels::gemm_i32_scalar(A.data(), B.data(), C1.data(), m, k, n);
    kernels::gemm_i32_avx2(A.data(), B.data(), C2.data(), m, k, n);
    REQUIRE(C1 == C2);
  }
  // Signed permutation shapes used by certificate checks.
  for (int n : {1, 7, 8, 9, 16, 64, 256}) {
    auto A = random_ints(rng, static_cast<std::size_t>(n) * n, 1);
    auto B = random_ints(rng, static_cast<std::size_t>(n) * n, 1);
    std::vector<std::int32_t> C1(static_cast<std::size_t>(n) * n), C2(static_cast<std::size_t>(n) * n);
    kernels::gemm_i32_scalar(A.data(), B.data(), C1.data(), n, n, n);
    kernels::gemm_i32_avx2(A.data(), B.data(), C2.data(), n, n, n);
    CHECK(C1 == C2);
  }
}
#endif

TEST_CASE("dispatch honours the environment override") {
  const char* env = std::getenv("PSEUDOH_KERNEL");
  if (env && std::string(env) == "scalar") {
    CHECK(kernels::active_variant() == "scalar");
    CHECK(kernels::gemm_i32() == &kernels::gemm_i32_scalar);
  } else if (kernels::avx2_available()) {
    CHECK(kernels::active_variant() == "avx2");
  } else {
    CHECK(kernels::active_variant() == "scalar");
  }
}

TEST_CASE("checked product agrees with rational multiplication") {
  std::mt19937 rng(4003);
  for (int t = 0; t < 50; ++t) {
    int m = 1 + static_cast<int>(rng() % 20), k = 1 + static_cast<int>(rng() % 20),
        n = 1 + static_cast<int>(rng() % 20);
    RatMatrix a(m, k), b(k, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < k; ++j) a(i, j) = static_cast<long>(rng() % 7) - 3;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = static_cast<long>(rng() % 7) - 3;
    auto ia = IntMatrix::from_rational(a), ib = IntMatrix::from_rational(b);
    REQUIRE(ia);
    REQUIRE(ib);
    auto ic = checked_mul(*ia, *ib);
    REQUIRE(ic);
    RatMatrix c = oracle::mat_mul(a, b);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) CHECK((*ic)(i, j) == c(i, j));
  }
}

TEST_CASE("checked product refuses possible overflow") {
  IntMatrix a(2, 2), b(2, 2);
  a(0, 0) = 1 << 20;
  b(0, 0) = 1 << 20;
  CHECK_FALSE(checked_mul(a, b).has_value());
  RatMatrix half(1, 1);
  half(0, 0) = Rational(1, 2);
  CHECK_FALSE(IntMatrix::from_rational(half).has_value());
}
