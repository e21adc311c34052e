#include "pseudoh/periodicity.hpp"

#include <algorithm>

namespace pseudoh {

PeriodicityStep make_step(int mu, int nu) {
  bool ok = (mu == 8 && nu == 0) || (mu == 0 && nu == 8) || (mu == 4 && nu == 4);
  if (!ok) throw InputError("periodicity step must be 8,0 or 0,8 or 4,4");
  PeriodicityStep step;
  step.mu = mu;
  step.nu = nu;
  step.T = catalog_lookup(Signature{mu, nu}).involutions;
  return step;
}

std::vector<PeriodicityStep> all_steps() { return {make_step(8, 0), make_step(0, 8), make_step(4, 4)}; }

int map_generator(Signature base, const PeriodicityStep& step, int i) {
  if (i < 1 || i > base.n()) throw InputError("generator index out of range");
  return i <= base.r ? i : i + step.mu;
}

int map_zeta(Signature base, const PeriodicityStep& step, int alpha) {
  if (alpha < 1 || alpha > 8) throw InputError("zeta index out of range");
  return alpha <= step.mu ? base.r + alpha : base.r + step.mu + base.s + (alpha - step.mu);
}

Blade map_blade(Signature base, const PeriodicityStep& step, Blade b) {
  // The map is increasing on the base generators, so the sign is unchanged.
  Blade out{b.sign, 0};
  for (int i : indices_of(b.mask)) out.mask |= Mask{1} << (map_generator(base, step, i) - 1);
  return out;
}

static Blade map_zeta_blade(Signature base, const PeriodicityStep& step, Blade b) {
  Blade out{b.sign, 0};
  for (int a : indices_of(b.mask)) out.mask |= Mask{1} << (map_zeta(base, step, a) - 1);
  return out;
}

static Signature extended_sig(Signature base, const PeriodicityStep& step) {
  return make_signature(base.r + step.mu, base.s + step.nu);
}

InvolutionSystem extend_system(const InvolutionSystem& base, const PeriodicityStep& step) {
  InvolutionSystem out;
  out.sig = extended_sig(base.sig, step);
  out.case_tag = is_split(out.sig) ? CaseTag::split : CaseTag::generic;
  for (const auto& p : base.involutions) out.involutions.push_back(map_blade(base.sig, step, p));
  for (const auto& t : step.T) out.involutions.push_back(map_zeta_blade(base.sig, step, t));
  for (const auto& c : base.complements) out.complements.push_back({map_blade(base.sig, step, c.op), c.isometric});
  for (const auto& c : base.commuting_extras)
    out.commuting_extras.push_back({map_blade(base.sig, step, c.op), c.isometric});
  out.listed_dim_E = base.listed_dim_E;
  return out;
}

InvolutionSystem extended_system(Signature sig) {
  if (is_basic(sig)) return catalog_lookup(sig);
  if (sig.r < 0 || sig.s < 0 || sig.n() < 1) throw InputError("invalid signature " + to_string(sig));
  for (const auto& step : all_steps()) {
    Signature base{sig.r - step.mu, sig.s - step.nu};
    if (base.r < 0 || base.s < 0 || base.n() < 1) continue;
    return extend_system(extended_system(base), step);
  }
  throw InputError("signature " + to_string(sig) + " does not reduce to a basic case");
}

int branch_involution(const InvolutionSystem& sys) {
  for (std::size_t i = 0; i < sys.involutions.size(); ++i)
    if (sys.involutions[i].grade() == 3) return static_cast<int>(i);
  return -1;
}

AdmissibleModule build_extended_minimal(const ModuleSpec& spec) {
  if (is_basic(spec.sig)) return build_minimal(spec);
  InvolutionSystem sys = extended_system(spec.sig);
  return build_from_system(sys, spec, branch_involution(sys));
}

namespace {

// New basis vector b is sign * x_{index}.
AdmissibleModule rebase(const AdmissibleModule& mod, const std::vector<std::pair<int, int>>& nb,
                        const std::vector<Mask>& labels) {
  const int dim = mod.dim();
  if (static_cast<int>(nb.size()) != dim) throw InputError("rebasing needs a full basis");
  std::vector<int> pos(dim, -1);
  for (int b = 0; b < dim; ++b) {
    if (pos[nb[b].first] >= 0) throw InputError("rebasing vectors are not distinct");
    pos[nb[b].first] = b;
  }
  AdmissibleModule out = mod;
  out.basis = labels;
  for (int b = 0; b < dim; ++b) out.metric[b] = mod.metric[nb[b].first];
  for (int i = 1; i <= mod.sig.n(); ++i) {
    const SignedPerm& J = mod.action(i);
    SignedPerm& K = out.actions[i - 1];
    for (int b = 0; b < dim; ++b) {
      auto [idx, s] = nb[b];
      int c = pos[J.perm[idx]];
      K.perm[b] = c;
      K.sign[b] = s * J.sign[idx] * nb[c].second;
    }
  }
  for (auto& part : out.summands)
    for (int& a : part.support) a = pos[a];
  return out;
}

std::pair<int, int> apply(const AdmissibleModule& mod, int generator, std::pair<int, int> v) {
  const SignedPerm& J = mod.action(generator);
  return {J.perm[v.first], v.second * J.sign[v.first]};
}

SignedPerm tensor(const SignedPerm& e, const SignedPerm& v) {
  const int dv = v.size();
  SignedPerm out;
  out.perm.resize(static_cast<std::size_t>(e.size()) * dv);
  out.sign.resize(out.perm.size());
  for (int k = 0; k < e.size(); ++k)
    for (int i = 0; i < dv; ++i) {
      out.perm[k * dv + i] = e.perm[k] * dv + v.perm[i];
      out.sign[k * dv + i] = e.sign[k] * v.sign[i];
    }
  return out;
}

int omega_on(const AdmissibleModule& mod, const std::vector<int>& support) {
  SignedPerm omega = blade_action(mod, volume_form(mod.sig));
  int first = 0;
  for (int a : support) {
    if (omega.perm[a] != a) return 0;
    if (first == 0) first = omega.sign[a];
    if (omega.sign[a] != first) return 0;
  }
  return first;
}

Branch branch_for(Signature sig, int omega) {
  if (!is_split(sig)) return Branch::none;
  if (omega == 0) throw VerificationError("volume form is not scalar on a split summand");
  return omega > 0 ? Branch::plus : Branch::minus;
}

}  // namespace

AdmissibleModule block_module(const PeriodicityStep& step, int metric_sign) {
  AdmissibleModule m = build_minimal(make_spec(step.sig(), metric_sign));
  std::vector<std::pair<int, int>> nb;
  std::vector<Mask> labels;
  const std::pair<int, int> v{0, 1};
  nb.push_back(v);
  labels.push_back(0);
  for (int j = 1; j <= 8; ++j) {
    nb.push_back(apply(m, j, v));
    labels.push_back(Mask{1} << (j - 1));
  }
  for (int j = 2; j <= 8; ++j) {
    nb.push_back(apply(m, 1, apply(m, j, v)));
    labels.push_back(Mask{1} | (Mask{1} << (j - 1)));
  }
  return rebase(m, nb, labels);
}

AdmissibleModule tensor_extend_module(const AdmissibleModule& V, const PeriodicityStep& step) {
  const Signature base = V.sig;
  const Signature ext = extended_sig(base, step);
  AdmissibleModule E = block_module(step);
  // J_Omega is -1 on E_0; -J_Omega keeps the seed block fixed.
  SignedPerm neg_omega = negate(blade_action(E, volume_form(E.sig)));
  if (neg_omega.perm[0] != 0 || neg_omega.sign[0] != 1) throw VerificationError("J_Omega is not -1 on E_0");

  const int dv = V.dim();
  AdmissibleModule W;
  W.sig = ext;
  W.actions.resize(ext.n());
  for (int i = 1; i <= base.n(); ++i) W.actions[map_generator(base, step, i) - 1] = tensor(neg_omega, V.action(i));
  for (int a = 1; a <= 8; ++a)
    W.actions[map_zeta(base, step, a) - 1] = tensor(E.action(a), SignedPerm::identity(dv));
  W.metric.resize(static_cast<std::size_t>(16) * dv);
  W.basis.resize(W.metric.size());
  for (int k = 0; k < 16; ++k)
    for (int i = 0; i < dv; ++i) {
      W.metric[k * dv + i] = E.metric[k] * V.metric[i];
      W.basis[k * dv + i] = map_blade(base, step, Blade{1, V.basis[i]}).mask |
                            map_zeta_blade(base, step, Blade{1, E.basis[k]}).mask;
    }
  for (const auto& part : V.summands) {
    Summand s;
    for (int k = 0; k < 16; ++k)
      for (int a : part.support) s.support.push_back(k * dv + a);
    std::sort(s.support.begin(), s.support.end());
    InvolutionSystem base_sys = part.system;
    base_sys.sig = base;
    s.system = extend_system(base_sys, step);
    s.lambda = part.lambda;
    s.counted = part.counted;
    for (int t = 0; t < 4; ++t) {
      s.lambda.push_back(1);
      s.counted.push_back(true);
    }
    s.spec = ModuleSpec{ext, part.spec.metric_sign, Branch::none};
    W.summands.push_back(std::move(s));
  }
  for (auto& s : W.summands) s.spec.branch = branch_for(ext, omega_on(W, s.support));

  ModuleCheck chk = check_module(W);
  if (!chk.ok) throw VerificationError("tensor extension fails admissibility: " + chk.failures.front());
  return W;
}

AdmissibleModule restrict_module(const AdmissibleModule& W, const PeriodicityStep& step) {
  const Signature base{W.sig.r - step.mu, W.sig.s - step.nu};
  if (base.r < 0 || base.s < 0 || base.n() < 1)
    throw InputError("module signature " + to_string(W.sig) + " does not contain the step");

  std::vector<SignedPerm> ops;
  for (const auto& t : step.T) ops.push_back(blade_action(W, map_zeta_blade(base, step, t)));
  std::vector<int> pos(W.dim(), -1);
  std::vector<int> kept;
  for (int a = 0; a < W.dim(); ++a) {
    bool in = true;
    for (const auto& T : ops) {
      if (T.perm[a] != a) throw VerificationError("T does not act diagonally on the basis");
      in &= T.sign[a] == 1;
    }
    if (!in) continue;
    pos[a] = static_cast<int>(kept.size());
    kept.push_back(a);
  }

  Mask z_image = 0;
  for (int i = 1; i <= base.n(); ++i) z_image |= Mask{1} << (map_generator(base, step, i) - 1);
  auto unmap = [&](Mask m) {
    Mask out = 0;
    for (int i = 1; i <= base.n(); ++i)
      if (m & (Mask{1} << (map_generator(base, step, i) - 1))) out |= Mask{1} << (i - 1);
    return out;
  };

  AdmissibleModule R;
  R.sig = base;
  for (int a : kept) {
    R.basis.push_back(unmap(W.basis[a]));
    R.metric.push_back(W.metric[a]);
  }
  for (int i = 1; i <= base.n(); ++i) {
    const SignedPerm& J = W.action(map_generator(base, step, i));
    SignedPerm K;
    for (int a : kept) {
      int b = pos[J.perm[a]];
      if (b < 0) throw VerificationError("generator does not preserve E_0");
      K.perm.push_back(b);
      K.sign.push_back(J.sign[a]);
    }
    R.actions.push_back(std::move(K));
  }
  for (const auto& part : W.summands) {
    Summand s;
    for (int a : part.support)
      if (pos[a] >= 0) s.support.push_back(pos[a]);
    if (s.support.empty()) throw VerificationError("summand misses E_0");
    s.system.sig = base;
    s.system.case_tag = is_split(base) ? CaseTag::split : CaseTag::generic;
    for (std::size_t i = 0; i < part.system.involutions.size(); ++i) {
      Blade p = part.system.involutions[i];
      if (p.mask & ~z_image) continue;
      s.system.involutions.push_back(Blade{p.sign, unmap(p.mask)});
      s.lambda.push_back(i < part.lambda.size() ? part.lambda[i] : 1);
      s.counted.push_back(i < part.counted.size() ? bool(part.counted[i]) : true);
    }
    for (const auto& c : part.system.complements)
      if (!(c.op.mask & ~z_image)) s.system.complements.push_back({Blade{c.op.sign, unmap(c.op.mask)}, c.isometric});
    s.spec = ModuleSpec{base, part.spec.metric_sign, Branch::none};
    R.summands.push_back(std::move(s));
  }
  for (auto& s : R.summands) s.spec.branch = branch_for(base, omega_on(R, s.support));

  ModuleCheck chk = check_module(R);
  if (!chk.ok) throw VerificationError("restricted module fails admissibility: " + chk.failures.front());
  return R;
}

ExtendedMorphism extend_morphism(const LieMorphism& f, const AdmissibleModule& src, const AdmissibleModule& dst,
                                 const PeriodicityStep& step) {
  if (!(src.sig == dst.sig)) throw InputError("extension needs a same-signature morphism");
  const Signature base = src.sig;
  const int du = src.dim();
  if (f.A.rows() != dst.dim() || f.A.cols() != du || f.C.rows() != base.n() || f.C.cols() != base.n())
    throw InputError("morphism shape does not match the modules");

  // K = A^tau A must be a diagonal sign matrix commuting with every J_z.
  RatMatrix K = adjoint(f.A, src.metric, dst.metric) * f.A;
  std::vector<int> kdiag(du);
  for (int i = 0; i < du; ++i)
    for (int j = 0; j < du; ++j) {
      const Rational& q = K(i, j);
      if (i == j) {
        if (q == 1) kdiag[i] = 1;
        else if (q == -1) kdiag[i] = -1;
        else throw InputError("A^tau A is not a sign matrix");
      } else if (sgn(q) != 0) {
        throw InputError("A^tau A is not diagonal");
      }
    }
  for (int k = 1; k <= base.n(); ++k) {
    const SignedPerm& J = src.action(k);
    for (int a = 0; a < du; ++a)
      if (kdiag[J.perm[a]] != kdiag[a]) throw InputError("A^tau A does not commute with J_z");
  }
  std::vector<int> plus(du), minus(du);
  for (int i = 0; i < du; ++i) {
    plus[i] = kdiag[i] > 0 ? 1 : 0;
    minus[i] = kdiag[i] < 0 ? 1 : 0;
  }

  AdmissibleModule E = block_module(step);
  RatMatrix omega_E = RatMatrix::from_signed_perm(blade_action(E, volume_form(E.sig)));
  LieMorphism out;
  out.A = kronecker(RatMatrix::identity(16), f.A * RatMatrix::diagonal(plus)) +
          kronecker(omega_E, f.A * RatMatrix::diagonal(minus));
  const Signature ext = extended_sig(base, step);
  out.C = RatMatrix(ext.n(), ext.n());
  for (int i = 1; i <= base.n(); ++i)
    for (int j = 1; j <= base.n(); ++j)
      out.C(map_generator(base, step, j) - 1, map_generator(base, step, i) - 1) = f.C(j - 1, i - 1);
  for (int a = 1; a <= 8; ++a) out.C(map_zeta(base, step, a) - 1, map_zeta(base, step, a) - 1) = 1;

  ExtendedMorphism res{out, HTypeAlgebra(tensor_extend_module(src, step)), HTypeAlgebra(tensor_extend_module(dst, step))};
  VerifyResult v = verify_isomorphism_detail(res.morphism, res.src, res.dst);
  if (!v) throw VerificationError("extended morphism fails verification: " + v.detail);
  return res;
}

LieMorphism extend_from_E(const RatMatrix& A1, const AdmissibleModule& src, const AdmissibleModule& dst,
                          const std::vector<int>& zeta) {
  if (zeta.size() != 8) throw InputError("eight zeta generators are required");
  if (src.dim() != dst.dim() || src.dim() % 16 != 0) throw InputError("decomposition blocks missing");
  const int d = src.dim() / 16;
  if (A1.rows() != d || A1.cols() != d) throw InputError("A1 does not match the E_0 block");
  for (int z : zeta)
    if (z < 1 || z > src.sig.n() || z > dst.sig.n()) throw InputError("zeta generator out of range");

  // Block b carries B_b E_0 with B_0 = Id, B_j = J_{zeta_j}, B_{7+j} = J_{zeta_1} J_{zeta_j}.
  auto check_blocks = [&](const AdmissibleModule& m) {
    for (int e = 0; e < d; ++e)
      for (int b = 1; b < 16; ++b) {
        std::pair<int, int> v{e, 1};
        if (b <= 8) {
          v = apply(m, zeta[b - 1], v);
        } else {
          v = apply(m, zeta[b - 7 - 1], v);
          v = apply(m, zeta[0], v);
        }
        if (v.first != b * d + e || v.second != 1) throw InputError("decomposition blocks missing");
      }
  };
  check_blocks(src);
  check_blocks(dst);

  auto inv = A1.inverse();
  if (!inv) throw InputError("A1 is not invertible");
  std::vector<int> g(src.metric.begin(), src.metric.begin() + d);
  std::vector<int> gt(dst.metric.begin(), dst.metric.begin() + d);
  // (A1^{-1})^tau : E_0 -> E~_0
  RatMatrix Ad = adjoint(*inv, gt, g);

  std::vector<RatMatrix> blocks;
  blocks.push_back(A1);
  for (int j = 1; j <= 8; ++j) blocks.push_back(Ad);
  for (int j = 2; j <= 8; ++j) blocks.push_back(A1);
  return LieMorphism{block_diagonal(blocks), RatMatrix::identity(src.sig.n()), {}};
}

}  // namespace pseudoh
