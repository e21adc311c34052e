#include "pseudoh/morphism.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace pseudoh {

LieMorphism identity_morphism(const HTypeAlgebra& alg) {
  return LieMorphism{RatMatrix::identity(alg.dim_u()), RatMatrix::identity(alg.dim_z()), {}};
}

LieMorphism compose(const LieMorphism& second, const LieMorphism& first) {
  LieMorphism out;
  out.A = second.A * first.A;
  out.C = second.C * first.C;
  bool b1 = first.B.rows() > 0, b2 = second.B.rows() > 0;
  if (b1 || b2) {
    RatMatrix B(out.C.rows(), first.A.cols());
    if (b2) B = B + second.B * first.A;
    if (b1) B = B + second.C * first.B;
    out.B = B;
  }
  return out;
}

RatMatrix adjoint(const RatMatrix& M, const std::vector<int>& G_from, const std::vector<int>& G_to) {
  if (static_cast<int>(G_from.size()) != M.cols() || static_cast<int>(G_to.size()) != M.rows())
    throw InputError("metric sizes do not match the matrix");
  RatMatrix out(M.cols(), M.rows());
  for (int i = 0; i < M.cols(); ++i)
    for (int j = 0; j < M.rows(); ++j)
      if (sgn(M(j, i)) != 0) out(i, j) = M(j, i) * (G_from[i] * G_to[j]);
  return out;
}

std::vector<int> center_metric(Signature sig) {
  std::vector<int> g(sig.n());
  for (int i = 1; i <= sig.n(); ++i) g[i - 1] = sig.norm(i);
  return g;
}

LieMorphism adjoint_morphism(const LieMorphism& f, const HTypeAlgebra& src, const HTypeAlgebra& dst) {
  LieMorphism out;
  out.A = adjoint(f.A, src.module().metric, dst.module().metric);
  out.C = adjoint(f.C, center_metric(src.sig()), center_metric(dst.sig()));
  return out;
}

namespace {

bool shapes_ok(const LieMorphism& f, const HTypeAlgebra& src, const HTypeAlgebra& dst, std::string& why) {
  if (f.A.rows() != dst.dim_u() || f.A.cols() != src.dim_u()) {
    why = "A has the wrong shape";
    return false;
  }
  if (f.C.rows() != dst.dim_z() || f.C.cols() != src.dim_z()) {
    why = "C has the wrong shape";
    return false;
  }
  if (src.dim_u() != dst.dim_u() || src.dim_z() != dst.dim_z()) {
    why = "dimensions differ";
    return false;
  }
  return true;
}

// Integer path: all products run through the dispatched int32 kernel.
std::optional<VerifyResult> verify_integral(const LieMorphism& f, const HTypeAlgebra& src, const HTypeAlgebra& dst,
                                            const RatMatrix& Ctau) {
  auto A = IntMatrix::from_rational(f.A);
  auto Ct = IntMatrix::from_rational(Ctau);
  if (!A || !Ct) return std::nullopt;
  const auto& G = src.module().metric;
  const auto& Gt = dst.module().metric;
  const int du = src.dim_u();
  IntMatrix At(du, du);
  for (int i = 0; i < du; ++i)
    for (int l = 0; l < du; ++l) At(i, l) = G[i] * (*A)(l, i) * Gt[l];
  for (int k = 1; k <= dst.dim_z(); ++k) {
    const SignedPerm& Jt = dst.module().action(k);
    IntMatrix JA(du, du);
    for (int a = 0; a < du; ++a)
      for (int j = 0; j < du; ++j) JA(Jt.perm[a], j) = Jt.sign[a] * (*A)(a, j);
    auto lhs = checked_mul(At, JA);
    if (!lhs) return std::nullopt;
    IntMatrix rhs(du, du);
    for (int j = 1; j <= src.dim_z(); ++j) {
      std::int32_t coeff = (*Ct)(j - 1, k - 1);
      if (coeff == 0) continue;
      const SignedPerm& J = src.module().action(j);
      for (int a = 0; a < du; ++a) rhs(J.perm[a], a) += coeff * J.sign[a];
    }
    if (!(*lhs == rhs)) return VerifyResult{false, "relation fails for w = z" + std::to_string(k)};
  }
  return VerifyResult{true, {}};
}

VerifyResult verify_rational(const LieMorphism& f, const HTypeAlgebra& src, const HTypeAlgebra& dst,
                             const RatMatrix& Ctau) {
  RatMatrix At = adjoint(f.A, src.module().metric, dst.module().metric);
  for (int k = 1; k <= dst.dim_z(); ++k) {
    RatMatrix lhs = At * (RatMatrix::from_signed_perm(dst.module().action(k)) * f.A);
    RatMatrix rhs(src.dim_u(), src.dim_u());
    for (int j = 1; j <= src.dim_z(); ++j)
      if (sgn(Ctau(j - 1, k - 1)) != 0)
        rhs = rhs + RatMatrix::from_signed_perm(src.module().action(j)).scaled(Ctau(j - 1, k - 1));
    if (!(lhs == rhs)) return VerifyResult{false, "relation fails for w = z" + std::to_string(k)};
  }
  return VerifyResult{true, {}};
}

}  // namespace

VerifyResult verify_isomorphism_detail(const LieMorphism& f, const HTypeAlgebra& src, const HTypeAlgebra& dst) {
  std::string why;
  if (!shapes_ok(f, src, dst, why)) return VerifyResult{false, why};
  if (f.C.rank() != f.C.rows()) return VerifyResult{false, "C is singular"};
  RatMatrix Ctau = adjoint(f.C, center_metric(src.sig()), center_metric(dst.sig()));
  if (auto r = verify_integral(f, src, dst, Ctau)) return *r;
  return verify_rational(f, src, dst, Ctau);
}

bool verify_isomorphism(const LieMorphism& f, const HTypeAlgebra& src, const HTypeAlgebra& dst) {
  return verify_isomorphism_detail(f, src, dst).ok;
}

LieMorphism sign_flip_iso(const HTypeAlgebra& src) {
  return LieMorphism{RatMatrix::identity(src.dim_u()), -RatMatrix::identity(src.dim_z()), {}};
}

namespace {

std::pair<int, int> apply_blade(const AdmissibleModule& mod, Blade b, int index) {
  int idx = index, sign = b.sign;
  std::vector<int> gens = indices_of(b.mask);
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    const SignedPerm& J = mod.action(*it);
    sign *= J.sign[idx];
    idx = J.perm[idx];
  }
  return {idx, sign};
}

bool grade_lex_less(Mask a, Mask b) {
  int ga = std::popcount(a), gb = std::popcount(b);
  if (ga != gb) return ga < gb;
  return lex_less(a, b);
}

}  // namespace

BasisRecipe graded_recipe(const AdmissibleModule& mod, int seed) {
  const int n = mod.sig.n();
  std::vector<Mask> masks(std::size_t{1} << n);
  for (std::size_t m = 0; m < masks.size(); ++m) masks[m] = static_cast<Mask>(m);
  std::sort(masks.begin(), masks.end(), grade_lex_less);
  std::vector<char> hit(mod.dim(), 0);
  BasisRecipe out;
  out.seed = seed;
  int remaining = mod.dim();
  for (Mask m : masks) {
    if (remaining == 0) break;
    auto [idx, s] = apply_blade(mod, Blade{1, m}, seed);
    if (hit[idx]) continue;
    hit[idx] = 1;
    --remaining;
    out.entries.push_back({Blade{1, m}, 1});
  }
  if (remaining != 0) throw InputError("module is not cyclic on the seed vector");
  return out;
}

BasisRecipe parity_recipe(const BasisRecipe& r) {
  BasisRecipe out = r;
  for (auto& e : out.entries) e.sign = (e.blade.grade() % 2) ? -e.sign : e.sign;
  return out;
}

int find_seed(const AdmissibleModule& mod, int metric_sign) {
  for (int a : common_one_eigenspace(mod).basis)
    if (mod.metric[a] == metric_sign) return a;
  return -1;
}

LieMorphism basis_matching_iso(const HTypeAlgebra& src, const HTypeAlgebra& dst, const BasisRecipe& src_recipe,
                               const BasisRecipe& dst_recipe) {
  const int du = src.dim_u();
  if (dst.dim_u() != du || !(src.sig() == dst.sig())) throw InputError("basis matching needs equal shapes");
  if (static_cast<int>(src_recipe.entries.size()) != du || static_cast<int>(dst_recipe.entries.size()) != du)
    throw InputError("recipe length differs from the module dimension");
  auto resolve = [](const AdmissibleModule& mod, const BasisRecipe& r) {
    if (r.seed < 0 || r.seed >= mod.dim()) throw InputError("recipe seed outside the module");
    std::vector<std::pair<int, int>> vecs;
    std::vector<char> hit(mod.dim(), 0);
    for (const auto& e : r.entries) {
      auto [idx, s] = apply_blade(mod, e.blade, r.seed);
      if (hit[idx]) throw InputError("recipe vectors do not span the module");
      hit[idx] = 1;
      vecs.push_back({idx, s * e.sign});
    }
    return vecs;
  };
  auto xs = resolve(src.module(), src_recipe);
  auto ys = resolve(dst.module(), dst_recipe);
  LieMorphism f{RatMatrix(du, du), RatMatrix::identity(src.dim_z()), {}};
  for (int i = 0; i < du; ++i) f.A(ys[i].first, xs[i].first) = xs[i].second * ys[i].second;
  VerifyResult v = verify_isomorphism_detail(f, src, dst);
  if (!v) throw VerificationError("basis matching does not give an isomorphism: " + v.detail);
  return f;
}

LieMorphism pin_automorphism(Blade phi, const HTypeAlgebra& alg) {
  const Signature sig = alg.sig();
  if (phi.mask & ~sig.full_mask()) throw InputError("blade outside the signature");
  int positives = 0;
  for (int i : indices_of(phi.mask)) positives += sig.positive(i) ? 1 : 0;
  if (positives % 2) throw InputError("blade has an odd number of positive generators");
  LieMorphism f;
  f.A = RatMatrix::from_signed_perm(blade_action(alg.module(), blade_inverse(phi, sig)));
  std::vector<int> diag(sig.n(), 1);
  for (int i : indices_of(phi.mask)) diag[i - 1] = -1;
  f.C = RatMatrix::diagonal(diag);
  VerifyResult v = verify_isomorphism_detail(f, alg, alg);
  if (!v) throw VerificationError("pin automorphism fails verification: " + v.detail);
  return f;
}

LieMorphism aut_iso_transfer(const LieMorphism& f, const HTypeAlgebra& alg, TransferDirection dir) {
  HTypeAlgebra flipped(negate_metric(alg.module()));
  const int n = alg.dim_z();
  LieMorphism out{f.A, {}, {}};
  if (dir == TransferDirection::automorphism_to_isomorphism) {
    if (!(f.C == -RatMatrix::identity(n))) throw InputError("expected an automorphism of the form A + (-Id)");
    if (!verify_isomorphism(f, alg, alg)) throw VerificationError("input automorphism does not verify");
    out.C = RatMatrix::identity(n);
    if (!verify_isomorphism(out, alg, flipped)) throw VerificationError("transferred isomorphism does not verify");
  } else {
    if (!(f.C == RatMatrix::identity(n))) throw InputError("expected an isomorphism of the form A + Id");
    if (!verify_isomorphism(f, alg, flipped)) throw VerificationError("input isomorphism does not verify");
    out.C = -RatMatrix::identity(n);
    if (!verify_isomorphism(out, alg, alg)) throw VerificationError("transferred automorphism does not verify");
  }
  return out;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  RatMatrix a = m;
  const int n = m.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (sgn(a(r, c)) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

static bool theorem2_signature(Signature sig) { return sig.r % 4 == 3 && sig.s % 4 == 0; }

ObstructionReport det_obstruction(const HTypeAlgebra& src, const HTypeAlgebra& dst) {
  if (!(src.sig() == dst.sig()) || !theorem2_signature(src.sig()))
    throw InputError("det obstruction applies to signatures with r = 3 mod 4 and s = 0 mod 4");
  if (!src.module().minimal() || !dst.module().minimal()) throw InputError("det obstruction compares minimal modules");
  ObstructionReport rep;
  SummandInvariant a = summand_invariant(src.module(), src.module().summands.front());
  SummandInvariant b = summand_invariant(dst.module(), dst.module().summands.front());
  if (!a.e_definite || !b.e_definite || a.omega == 0 || b.omega == 0)
    throw VerificationError("expected a definite E and a scalar volume form");
  rep.omega_src = a.omega;
  rep.omega_dst = b.omega;
  rep.e_sign_src = a.e_sign;
  rep.e_sign_dst = b.e_sign;
  // A^tau A = det(C) omega omega~ Id; restricted to E the forms have signs e, e~.
  int base = a.omega * b.omega * a.e_sign * b.e_sign;
  rep.excluded_det_positive = base < 0;
  rep.excluded_det_negative = -base < 0;
  return rep;
}

bool volume_identity_holds(const LieMorphism& f, const HTypeAlgebra& src, const HTypeAlgebra& dst) {
  const Signature sig = src.sig();
  RatMatrix At = adjoint(f.A, src.module().metric, dst.module().metric);
  RatMatrix Jt = RatMatrix::from_signed_perm(blade_action(dst.module(), volume_form(dst.sig())));
  RatMatrix J = RatMatrix::from_signed_perm(blade_action(src.module(), volume_form(sig)));
  RatMatrix Ctau = adjoint(f.C, center_metric(sig), center_metric(dst.sig()));
  return At * Jt * f.A == J.scaled(determinant(Ctau));
}

}  // namespace pseudoh
