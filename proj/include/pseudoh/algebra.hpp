#pragma once

#include <string>
#include <vector>

#include "pseudoh/matrix.hpp"
#include "pseudoh/module.hpp"

namespace pseudoh {

// N_{r,s}(U) = U + R^{r,s} with [x_i, x_j] = sum_k c(i,j,k) z_k.
class HTypeAlgebra {
 public:
  HTypeAlgebra() = default;
  explicit HTypeAlgebra(AdmissibleModule mod);

  const Signature& sig() const { return module_.sig; }
  const AdmissibleModule& module() const { return module_; }
  int dim_u() const { return module_.dim(); }
  int dim_z() const { return module_.sig.n(); }

  // k is 1-based
  int c(int i, int j, int k) const;
  // Nonzero structure constants of row i for generator k: [x_i, x_partner] = value z_k.
  int partner(int i, int k) const { return partner_[k - 1][i]; }
  int partner_value(int i, int k) const { return value_[k - 1][i]; }

 private:
  AdmissibleModule module_;
  std::vector<std::vector<int>> partner_;
  std::vector<std::vector<int>> value_;
};

HTypeAlgebra build_algebra(const AdmissibleModule& mod);

struct AlgebraCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

// Antisymmetry, values in {-1,0,1}, metric recovery and vanishing of triple brackets.
AlgebraCheck check_algebra(const HTypeAlgebra& alg);

struct GroupElement {
  std::vector<Rational> x;
  std::vector<Rational> z;
  bool operator==(const GroupElement& o) const { return x == o.x && z == o.z; }
};

GroupElement zero_element(const HTypeAlgebra& alg);
GroupElement bracket(const HTypeAlgebra& alg, const GroupElement& a, const GroupElement& b);
GroupElement group_law(const HTypeAlgebra& alg, const GroupElement& a, const GroupElement& b);
GroupElement group_inverse(const GroupElement& a);
GroupElement dilation(const GroupElement& a, const Rational& t);

// Id + pi where pi keeps the listed centre coordinates (1-based, ascending).
struct CenterProjection {
  Signature target;
  std::vector<int> kept;
  HTypeAlgebra image;
  bool homomorphism = false;
};

CenterProjection center_projection(const HTypeAlgebra& alg, int keep);
CenterProjection center_projection(const HTypeAlgebra& alg, const std::vector<int>& kept);

// Module obtained by forgetting the generators outside `kept`.
AdmissibleModule restrict_generators(const AdmissibleModule& mod, const std::vector<int>& kept);

}  // namespace pseudoh
