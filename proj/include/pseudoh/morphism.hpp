#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pseudoh/algebra.hpp"
#include "pseudoh/matrix.hpp"

namespace pseudoh {

// Phi(x, z) = (A x, B x + C z)
struct LieMorphism {
  RatMatrix A;
  RatMatrix C;
  RatMatrix B;  // empty means zero
};

LieMorphism identity_morphism(const HTypeAlgebra& alg);
// (second after first)
LieMorphism compose(const LieMorphism& second, const LieMorphism& first);

RatMatrix adjoint(const RatMatrix& M, const std::vector<int>& G_from, const std::vector<int>& G_to);
std::vector<int> center_metric(Signature sig);

// Phi^tau = A^tau + C^tau, from dst back to src.
LieMorphism adjoint_morphism(const LieMorphism& f, const HTypeAlgebra& src, const HTypeAlgebra& dst);

struct VerifyResult {
  bool ok = false;
  std::string detail;
  explicit operator bool() const { return ok; }
};

// A^tau J~_w A = J_{C^tau w} for every basis vector w of the target centre.
VerifyResult verify_isomorphism_detail(const LieMorphism& f, const HTypeAlgebra& src, const HTypeAlgebra& dst);
bool verify_isomorphism(const LieMorphism& f, const HTypeAlgebra& src, const HTypeAlgebra& dst);

// Id + (-Id): N(U) -> N(U with negated metric)
LieMorphism sign_flip_iso(const HTypeAlgebra& src);

struct RecipeEntry {
  Blade blade;
  int sign = 1;
};

// Vectors sign * J_blade applied to the seed basis vector.
struct BasisRecipe {
  int seed = 0;
  std::vector<RecipeEntry> entries;
};

// Lowest-grade representative per basis vector, ordered by grade then lexicographically.
BasisRecipe graded_recipe(const AdmissibleModule& mod, int seed);
// Same blades with signs (-1)^grade.
BasisRecipe parity_recipe(const BasisRecipe& r);
// First E-vector with the requested metric sign, -1 if none.
int find_seed(const AdmissibleModule& mod, int metric_sign);

LieMorphism basis_matching_iso(const HTypeAlgebra& src, const HTypeAlgebra& dst, const BasisRecipe& src_recipe,
                               const BasisRecipe& dst_recipe);

LieMorphism pin_automorphism(Blade phi, const HTypeAlgebra& alg);

enum class TransferDirection { automorphism_to_isomorphism, isomorphism_to_automorphism };
LieMorphism aut_iso_transfer(const LieMorphism& f, const HTypeAlgebra& alg, TransferDirection dir);

struct ObstructionReport {
  int omega_src = 0, omega_dst = 0;
  int e_sign_src = 0, e_sign_dst = 0;
  bool excluded_det_positive = false;
  bool excluded_det_negative = false;
};

ObstructionReport det_obstruction(const HTypeAlgebra& src, const HTypeAlgebra& dst);
// Exact evaluation of A^tau J~_Omega A == det(C^tau) J_Omega for a given morphism.
bool volume_identity_holds(const LieMorphism& f, const HTypeAlgebra& src, const HTypeAlgebra& dst);
Rational determinant(const RatMatrix& m);

}  // namespace pseudoh
