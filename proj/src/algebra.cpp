#include "pseudoh/algebra.hpp"

#include <algorithm>

namespace pseudoh {

HTypeAlgebra::HTypeAlgebra(AdmissibleModule mod) : module_(std::move(mod)) {
  const int n = module_.sig.n();
  const int dim = module_.dim();
  partner_.assign(n, std::vector<int>(dim));
  value_.assign(n, std::vector<int>(dim));
  for (int k = 1; k <= n; ++k) {
    const SignedPerm& J = module_.action(k);
    for (int i = 0; i < dim; ++i) {
      // c(i,j,k) = <z_k,z_k> <J_k x_i, x_j>
      int j = J.perm[i];
      partner_[k - 1][i] = j;
      value_[k - 1][i] = module_.sig.norm(k) * module_.metric[j] * J.sign[i];
    }
  }
}

int HTypeAlgebra::c(int i, int j, int k) const {
  return partner_[k - 1][i] == j ? value_[k - 1][i] : 0;
}

HTypeAlgebra build_algebra(const AdmissibleModule& mod) {
  ModuleCheck chk = check_module(mod);
  if (!chk.ok) throw InputError("module is not admissible: " + chk.failures.front());
  return HTypeAlgebra(mod);
}

AlgebraCheck check_algebra(const HTypeAlgebra& alg) {
  AlgebraCheck out;
  auto fail = [&](std::string msg) {
    if (out.failures.size() < 8) out.failures.push_back(std::move(msg));
    out.ok = false;
  };
  const auto& mod = alg.module();
  const int dim = alg.dim_u();
  for (int k = 1; k <= alg.dim_z(); ++k) {
    const SignedPerm& J = mod.action(k);
    for (int i = 0; i < dim; ++i) {
      int j = alg.partner(i, k);
      int v = alg.partner_value(i, k);
      if (v != 1 && v != -1) fail("structure constant outside {-1,0,1}");
      if (alg.c(j, i, k) != -v) fail("antisymmetry fails at k=" + std::to_string(k));
      if (i == j) fail("nonzero diagonal bracket");
      // <J_k x_i, x_j>_U against <z_k, [x_i,x_j]>
      int lhs = J.perm[i] == j ? J.sign[i] * mod.metric[j] : 0;
      int rhs = mod.sig.norm(k) * alg.c(i, j, k);
      if (lhs != rhs) fail("metric recovery fails at k=" + std::to_string(k));
    }
  }
  // [[x,y],w] lands in [z, .] = 0 by construction; the z-part of a bracket has no U component.
  GroupElement a = zero_element(alg), b = zero_element(alg);
  if (dim >= 2) {
    a.x[0] = 1;
    b.x[1] = 1;
    GroupElement ab = bracket(alg, a, b);
    GroupElement triple = bracket(alg, GroupElement{std::vector<Rational>(dim), ab.z}, a);
    bool zero = std::all_of(triple.z.begin(), triple.z.end(), [](const Rational& q) { return sgn(q) == 0; });
    if (!zero) fail("triple bracket does not vanish");
  }
  return out;
}

GroupElement zero_element(const HTypeAlgebra& alg) {
  return GroupElement{std::vector<Rational>(alg.dim_u()), std::vector<Rational>(alg.dim_z())};
}

static void check_dims(const HTypeAlgebra& alg, const GroupElement& a) {
  if (static_cast<int>(a.x.size()) != alg.dim_u() || static_cast<int>(a.z.size()) != alg.dim_z())
    throw InputError("group element dimension mismatch");
}

GroupElement bracket(const HTypeAlgebra& alg, const GroupElement& a, const GroupElement& b) {
  check_dims(alg, a);
  check_dims(alg, b);
  GroupElement out = zero_element(alg);
  for (int k = 1; k <= alg.dim_z(); ++k) {
    Rational acc = 0;
    for (int i = 0; i < alg.dim_u(); ++i) {
      if (sgn(a.x[i]) == 0) continue;
      int j = alg.partner(i, k);
      acc += alg.partner_value(i, k) * a.x[i] * b.x[j];
    }
    out.z[k - 1] = acc;
  }
  return out;
}

GroupElement group_law(const HTypeAlgebra& alg, const GroupElement& a, const GroupElement& b) {
  GroupElement br = bracket(alg, a, b);
  GroupElement out = zero_element(alg);
  for (int i = 0; i < alg.dim_u(); ++i) out.x[i] = a.x[i] + b.x[i];
  for (int k = 0; k < alg.dim_z(); ++k) out.z[k] = a.z[k] + b.z[k] + br.z[k] / 2;
  return out;
}

GroupElement group_inverse(const GroupElement& a) {
  GroupElement out = a;
  for (auto& v : out.x) v = -v;
  for (auto& v : out.z) v = -v;
  return out;
}

GroupElement dilation(const GroupElement& a, const Rational& t) {
  GroupElement out = a;
  for (auto& v : out.x) v *= t;
  Rational t2 = t * t;
  for (auto& v : out.z) v *= t2;
  return out;
}

AdmissibleModule restrict_generators(const AdmissibleModule& mod, const std::vector<int>& kept) {
  std::vector<int> sorted = kept;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("repeated generator in restriction");
  int r = 0, s = 0;
  for (int i : sorted) {
    if (i < 1 || i > mod.sig.n()) throw InputError("generator index out of range");
    (mod.sig.positive(i) ? r : s)++;
  }
  AdmissibleModule out;
  out.sig = make_signature(r, s);
  out.metric = mod.metric;
  for (int i : sorted) out.actions.push_back(mod.action(i));
  // Basis labels are re-expressed on the kept generators.
  for (Mask m : mod.basis) {
    Mask nm = 0;
    for (std::size_t t = 0; t < sorted.size(); ++t)
      if (m & (Mask{1} << (sorted[t] - 1))) nm |= Mask{1} << t;
    out.basis.push_back(nm);
  }
  for (const auto& part : mod.summands) {
    Summand s2;
    s2.spec = ModuleSpec{out.sig, part.spec.metric_sign, Branch::none};
    s2.support = part.support;
    s2.system.sig = out.sig;
    out.summands.push_back(std::move(s2));
  }
  return out;
}

CenterProjection center_projection(const HTypeAlgebra& alg, int keep) {
  if (keep < 1 || keep > alg.dim_z()) throw InputError("projection must keep between 1 and r+s coordinates");
  std::vector<int> kept(keep);
  for (int i = 0; i < keep; ++i) kept[i] = i + 1;
  return center_projection(alg, kept);
}

CenterProjection center_projection(const HTypeAlgebra& alg, const std::vector<int>& kept) {
  CenterProjection out;
  AdmissibleModule restricted = restrict_generators(alg.module(), kept);
  out.target = restricted.sig;
  out.kept = kept;
  std::sort(out.kept.begin(), out.kept.end());
  out.image = HTypeAlgebra(restricted);
  bool hom = check_module(restricted).ok;
  for (std::size_t t = 0; t < out.kept.size() && hom; ++t) {
    int k_src = out.kept[t];
    int k_dst = static_cast<int>(t) + 1;
    for (int i = 0; i < alg.dim_u() && hom; ++i) {
      int j = alg.partner(i, k_src);
      hom = out.image.partner(i, k_dst) == j && out.image.partner_value(i, k_dst) == alg.partner_value(i, k_src);
    }
  }
  out.homomorphism = hom;
  return out;
}

}  // namespace pseudoh
