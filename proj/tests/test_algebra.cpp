#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pseudoh/algebra.hpp"
#include "pseudoh/catalog.hpp"

using namespace pseudoh;

namespace {

HTypeAlgebra algebra_of(Signature sig, int metric = 1, Branch b = Branch::none) {
  if (is_split(sig) && b == Branch::none) b = Branch::plus;
  return build_algebra(build_minimal(make_spec(sig, metric, b)));
}

Rational random_rational(std::mt19937& rng) {
  Rational q(static_cast<long>(rng() % 13) - 6, static_cast<long>(1 + rng() % 5));
  q.canonicalize();
  return q;
}

GroupElement random_element(std::mt19937& rng, const HTypeAlgebra& alg) {
  GroupElement g = zero_element(alg);
  for (auto& v : g.x) v = random_rational(rng);
  for (auto& v : g.z) v = random_rational(rng);
  return g;
}

// z_k coefficient of [a, b] by explicit double sum over the structure tensor oracle.
std::vector<Rational> brute_bracket(const HTypeAlgebra& alg, const GroupElement& a, const GroupElement& b) {
  std::vector<Rational> z(alg.dim_z());
  for (int k = 1; k <= alg.dim_z(); ++k)
    for (int i = 0; i < alg.dim_u(); ++i)
      for (int j = 0; j < alg.dim_u(); ++j)
        z[k - 1] += a.x[i] * b.x[j] * oracle::structure_constant(alg.module(), i, j, k);
  return z;
}

}  // namespace

TEST_CASE("Heisenberg algebra from (1,0)") {
  auto alg = algebra_of({1, 0});
  CHECK(alg.dim_u() == 2);
  CHECK(alg.dim_z() == 1);
  CHECK(alg.c(0, 1, 1) == 1);
  CHECK(alg.c(1, 0, 1) == -1);
  GroupElement x1 = zero_element(alg), x2 = zero_element(alg);
  x1.x[0] = 1;
  x2.x[1] = 1;
  GroupElement br = bracket(alg, x1, x2);
  CHECK(br.z == std::vector<Rational>{1});
  CHECK(br.x == std::vector<Rational>{0, 0});
}

TEST_CASE("diagonal brackets vanish") {
  for (Signature sig : basic_signatures()) {
    auto alg = algebra_of(sig);
    for (int i = 0; i < alg.dim_u(); ++i)
      for (int k = 1; k <= alg.dim_z(); ++k) CHECK(alg.c(i, i, k) == 0);
  }
}

TEST_CASE("bracket table of the (1,2) module") {
  auto alg = algebra_of({1, 2}, 1, Branch::plus);
  REQUIRE(alg.dim_u() == 4);
  // x_0 = v brackets with exactly one basis vector per central direction, with unit coefficient.
  for (int k = 1; k <= 3; ++k) {
    int hits = 0;
    for (int j = 0; j < 4; ++j)
      if (alg.c(0, j, k) != 0) {
        ++hits;
        CHECK((alg.c(0, j, k) == 1 || alg.c(0, j, k) == -1));
      }
    CHECK(hits == 1);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 1; k <= 3; ++k) CHECK(alg.c(i, j, k) == oracle::structure_constant(alg.module(), i, j, k));
}

TEST_CASE("central elements bracket to zero") {
  auto alg = algebra_of({3, 1});
  std::mt19937 rng(3001);
  GroupElement a = random_element(rng, alg), z = zero_element(alg);
  for (auto& v : z.z) v = random_rational(rng);
  CHECK(bracket(alg, a, z) == zero_element(alg));
  CHECK(bracket(alg, z, a) == zero_element(alg));
}

TEST_CASE("dimension mismatch is an input error") {
  auto a = algebra_of({1, 0});
  auto b = algebra_of({2, 0});
  CHECK_THROWS_AS(bracket(a, zero_element(b), zero_element(a)), InputError);
  CHECK_THROWS_AS(group_law(a, zero_element(a), zero_element(b)), InputError);
}

TEST_CASE("property: axioms for every basic algebra") {
  for (Signature sig : basic_signatures())
    for (int m : {1, -1}) {
      auto alg = algebra_of(sig, m);
      INFO(to_string(sig));
      auto chk = check_algebra(alg);
      CHECK(chk.ok);
      const auto& mod = alg.module();
      for (int k = 1; k <= alg.dim_z(); ++k) {
        RatMatrix J = oracle::dense(mod.actions[k - 1]);
        for (int i = 0; i < alg.dim_u(); ++i)
          for (int j = 0; j < alg.dim_u(); ++j) {
            int c = alg.c(i, j, k);
            REQUIRE((c >= -1 && c <= 1));
            REQUIRE(c == -alg.c(j, i, k));
            REQUIRE(J(j, i) * mod.metric[j] * oracle::norm(k, sig.r) == c);
          }
      }
    }
}

TEST_CASE("property: bracket agrees with explicit contraction") {
  std::mt19937 rng(3002);
  auto sigs = basic_signatures();
  for (int t = 0; t < 200; ++t) {
    Signature sig = sigs[rng() % sigs.size()];
    if (sig.n() > 6) continue;
    auto alg = algebra_of(sig);
    GroupElement a = random_element(rng, alg), b = random_element(rng, alg);
    CHECK(bracket(alg, a, b).z == brute_bracket(alg, a, b));
  }
}

TEST_CASE("property: group law") {
  std::mt19937 rng(3003);
  auto alg = algebra_of({3, 1});
  GroupElement e = zero_element(alg);
  for (int t = 0; t < 100; ++t) {
    GroupElement a = random_element(rng, alg), b = random_element(rng, alg), c = random_element(rng, alg);
    CHECK(group_law(alg, a, e) == a);
    CHECK(group_law(alg, e, a) == a);
    CHECK(group_law(alg, a, group_inverse(a)) == e);
    CHECK(group_law(alg, group_law(alg, a, b), c) == group_law(alg, a, group_law(alg, b, c)));
    // Dilations are group automorphisms.
    Rational two(2);
    CHECK(dilation(group_law(alg, a, b), two) == group_law(alg, dilation(a, two), dilation(b, two)));
  }
}

TEST_CASE("property: triple brackets vanish") {
  std::mt19937 rng(3004);
  auto alg = algebra_of({2, 1});
  for (int t = 0; t < 50; ++t) {
    GroupElement a = random_element(rng, alg), b = random_element(rng, alg), c = random_element(rng, alg);
    CHECK(bracket(alg, bracket(alg, a, b), c) == zero_element(alg));
  }
}

TEST_CASE("property: J_z is invertible for non-null generators") {
  for (Signature sig : basic_signatures()) {
    auto alg = algebra_of(sig);
    for (int k = 1; k <= sig.n(); ++k) {
      RatMatrix J = oracle::dense(alg.module().action(k));
      CHECK(oracle::equal(oracle::mat_mul(J, J), RatMatrix::identity(alg.dim_u()).scaled(-sig.norm(k))));
    }
  }
}

TEST_CASE("centre projection") {
  auto alg = algebra_of({3, 1});
  auto proj = center_projection(alg, 3);
  CHECK(proj.homomorphism);
  CHECK(proj.target == Signature{3, 0});
  CHECK(proj.image.dim_z() == 3);
  for (int i = 0; i < alg.dim_u(); ++i)
    for (int j = 0; j < alg.dim_u(); ++j)
      for (int k = 1; k <= 3; ++k) CHECK(proj.image.c(i, j, k) == alg.c(i, j, k));

  auto full = center_projection(alg, 4);
  CHECK(full.homomorphism);
  CHECK(full.image.module().actions == alg.module().actions);

  std::mt19937 rng(3005);
  for (int t = 0; t < 50; ++t) {
    GroupElement a = random_element(rng, alg), b = random_element(rng, alg);
    GroupElement pa = zero_element(proj.image), pb = zero_element(proj.image);
    pa.x = a.x;
    pb.x = b.x;
    auto full_br = bracket(alg, a, b).z;
    full_br.resize(3);
    CHECK(bracket(proj.image, pa, pb).z == full_br);
  }
}

TEST_CASE("restricting generators keeps admissibility") {
  auto mod = build_minimal(make_spec({6, 0}, 1));
  auto sub = restrict_generators(mod, {1, 2, 3, 4, 5});
  CHECK(sub.sig == Signature{5, 0});
  CHECK(check_module(sub).ok);
  CHECK(check_algebra(build_algebra(sub)).ok);
}

TEST_CASE("property: random direct sums satisfy the axioms") {
  std::mt19937 rng(3006);
  auto sigs = basic_signatures();
  for (int t = 0; t < 10; ++t) {
    Signature sig = sigs[rng() % sigs.size()];
    if (sig.n() > 6) sig = {3, 0};
    std::vector<AdmissibleModule> parts;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < count; ++k) {
      int m = rng() % 2 ? 1 : -1;
      Branch b = is_split(sig) ? (rng() % 2 ? Branch::plus : Branch::minus) : Branch::none;
      parts.push_back(build_minimal(make_spec(sig, m, b)));
    }
    auto alg = build_algebra(direct_sum(parts));
    INFO(to_string(sig));
    CHECK(check_algebra(alg).ok);
  }
}
