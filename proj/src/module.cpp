#include "pseudoh/module.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace pseudoh {

std::string to_string(Branch b) {
  switch (b) {
    case Branch::plus: return "plus";
    case Branch::minus: return "minus";
    default: return "none";
  }
}

ModuleSpec make_spec(Signature sig, int metric_sign, Branch branch) {
  if (metric_sign != 1 && metric_sign != -1) throw InputError("metric sign must be +1 or -1");
  if (is_split(sig) != (branch != Branch::none))
    throw InputError(is_split(sig) ? "signature " + to_string(sig) + " needs a branch (plus/minus)"
                                   : "signature " + to_string(sig) + " has a single minimal module (branch none)");
  return ModuleSpec{sig, metric_sign, branch};
}

std::string to_string(const ModuleSpec& spec) {
  std::string out = std::to_string(spec.sig.r) + "," + std::to_string(spec.sig.s) + ":" +
                    (spec.metric_sign > 0 ? "+" : "-");
  out += "," + to_string(spec.branch);
  return out;
}

SignedPerm SignedPerm::identity(int n) {
  SignedPerm f;
  f.perm.resize(n);
  std::iota(f.perm.begin(), f.perm.end(), 0);
  f.sign.assign(n, 1);
  return f;
}

SignedPerm compose(const SignedPerm& f, const SignedPerm& g) {
  if (f.size() != g.size()) throw InputError("signed permutation size mismatch");
  SignedPerm h;
  h.perm.resize(g.size());
  h.sign.resize(g.size());
  for (int a = 0; a < g.size(); ++a) {
    int b = g.perm[a];
    h.perm[a] = f.perm[b];
    h.sign[a] = f.sign[b] * g.sign[a];
  }
  return h;
}

SignedPerm negate(const SignedPerm& f) {
  SignedPerm h = f;
  for (int& s : h.sign) s = -s;
  return h;
}

SignedPerm inverse(const SignedPerm& f) {
  SignedPerm h;
  h.perm.resize(f.size());
  h.sign.resize(f.size());
  for (int a = 0; a < f.size(); ++a) {
    h.perm[f.perm[a]] = a;
    h.sign[f.perm[a]] = f.sign[a];
  }
  return h;
}

bool is_valid(const SignedPerm& f) {
  if (f.perm.size() != f.sign.size()) return false;
  std::vector<char> hit(f.perm.size(), 0);
  for (std::size_t a = 0; a < f.perm.size(); ++a) {
    int b = f.perm[a];
    if (b < 0 || b >= f.size() || hit[b]) return false;
    if (f.sign[a] != 1 && f.sign[a] != -1) return false;
    hit[b] = 1;
  }
  return true;
}

SignedPerm blade_action(const AdmissibleModule& mod, Blade b) {
  if (b.mask & ~mod.sig.full_mask()) throw InputError("blade outside module signature");
  SignedPerm out = SignedPerm::identity(mod.dim());
  std::vector<int> idx = indices_of(b.mask);
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) out = compose(mod.action(*it), out);
  if (b.sign < 0) out = negate(out);
  return out;
}

namespace {

struct CosetTable {
  std::vector<Mask> rep_of;    // per mask: transversal representative
  std::vector<int> hsign;      // per mask m: sign s_h of the subgroup element with mask m ^ rep
};

}  // namespace

AdmissibleModule build_minimal(const ModuleSpec& spec) {
  if (!is_basic(spec.sig))
    throw InputError("build_minimal expects a basic signature; " + to_string(spec.sig) +
                     " goes through the periodicity module");
  return build_from_system(catalog_lookup(spec.sig), spec);
}

AdmissibleModule build_from_system(const InvolutionSystem& sys, const ModuleSpec& spec_in, int branch_index) {
  const Signature sig = sys.sig;
  const ModuleSpec spec = make_spec(sig, spec_in.metric_sign, spec_in.branch);
  const int n = sig.n();
  if (n > 24) throw InputError("signature too large for the coset construction");
  const int p = static_cast<int>(sys.involutions.size());
  std::vector<int> lambda(p, 1);
  std::vector<bool> counted(p, true);

  if (spec.branch != Branch::none) {
    if (p == 0) throw InputError("split signature without involutions");
    int bi = branch_index >= 0 ? branch_index : p - 1;
    counted[bi] = false;
    int want = spec.branch == Branch::plus ? 1 : -1;
    bool found = false;
    for (const auto& e : signed_subgroup(sys.involutions, lambda, sig)) {
      if (e.blade.mask != sig.full_mask()) continue;
      if (!((e.word >> bi) & 1u)) throw InputError("volume form does not involve the branch involution");
      // J_Omega v = sign(e) * prod lambda_i v over the word
      lambda[bi] = e.blade.sign * want;
      found = true;
    }
    if (!found) throw InputError("volume form is not a product of the involutions");
  }

  auto H = signed_subgroup(sys.involutions, lambda, sig);
  std::vector<int> hsign_by_mask(std::size_t{1} << n, 0);
  for (const auto& e : H) hsign_by_mask[e.blade.mask] = e.blade.sign;

  const std::size_t total = std::size_t{1} << n;
  CosetTable ct;
  ct.rep_of.assign(total, 0);
  std::vector<char> done(total, 0);
  std::vector<Mask> reps;
  for (std::size_t m = 0; m < total; ++m) {
    if (done[m]) continue;
    Mask best = static_cast<Mask>(m);
    for (const auto& e : H) {
      Mask c = static_cast<Mask>(m) ^ e.blade.mask;
      if (lex_less(c, best)) best = c;
    }
    for (const auto& e : H) {
      Mask c = static_cast<Mask>(m) ^ e.blade.mask;
      ct.rep_of[c] = best;
      done[c] = 1;
    }
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end(), lex_less);
  std::vector<int> index_of(total, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = static_cast<int>(i);

  // J_b v = b.sign * kappa * s_h x_t where (+,t)(+,h) = (kappa, m)
  auto reduce = [&](Blade b) {
    Mask t = ct.rep_of[b.mask];
    Mask h = b.mask ^ t;
    Blade th = blade_mul(Blade{1, t}, Blade{1, h}, sig);
    int s = b.sign * th.sign * hsign_by_mask[h];
    return std::pair<int, int>{index_of[t], s};
  };

  AdmissibleModule mod;
  mod.sig = sig;
  mod.basis = reps;
  const int dim = static_cast<int>(reps.size());
  mod.metric.resize(dim);
  for (int a = 0; a < dim; ++a) mod.metric[a] = spec.metric_sign * mask_norm(reps[a], sig);
  mod.actions.resize(n);
  for (int i = 1; i <= n; ++i) {
    SignedPerm& J = mod.actions[i - 1];
    J.perm.resize(dim);
    J.sign.resize(dim);
    for (int a = 0; a < dim; ++a) {
      auto [b, s] = reduce(blade_mul(Blade{1, Mask{1} << (i - 1)}, Blade{1, reps[a]}, sig));
      J.perm[a] = b;
      J.sign[a] = s;
    }
  }
  Summand part;
  part.spec = spec;
  part.support.resize(dim);
  std::iota(part.support.begin(), part.support.end(), 0);
  part.system = sys;
  part.lambda = lambda;
  part.counted = counted;
  mod.summands.push_back(std::move(part));

  ModuleCheck chk = check_module(mod);
  if (!chk.ok) throw VerificationError("constructed module fails admissibility: " + chk.failures.front());
  return mod;
}

AdmissibleModule direct_sum(const std::vector<AdmissibleModule>& parts) {
  if (parts.empty()) throw InputError("direct sum of no modules");
  AdmissibleModule out;
  out.sig = parts.front().sig;
  out.actions.resize(out.sig.n());
  int offset = 0;
  for (const auto& m : parts) {
    if (!(m.sig == out.sig)) throw InputError("direct sum of modules with different signatures");
    out.basis.insert(out.basis.end(), m.basis.begin(), m.basis.end());
    out.metric.insert(out.metric.end(), m.metric.begin(), m.metric.end());
    for (int i = 0; i < out.sig.n(); ++i) {
      const SignedPerm& J = m.actions[i];
      for (int a = 0; a < J.size(); ++a) {
        out.actions[i].perm.push_back(J.perm[a] + offset);
        out.actions[i].sign.push_back(J.sign[a]);
      }
    }
    for (Summand s : m.summands) {
      for (int& x : s.support) x += offset;
      out.summands.push_back(std::move(s));
    }
    offset += m.dim();
  }
  return out;
}

AdmissibleModule negate_metric(const AdmissibleModule& mod) {
  AdmissibleModule out = mod;
  for (int& g : out.metric) g = -g;
  for (auto& s : out.summands) s.spec.metric_sign = -s.spec.metric_sign;
  return out;
}

ModuleCheck check_module(const AdmissibleModule& mod) {
  ModuleCheck chk;
  auto fail = [&](std::string msg) {
    chk.ok = false;
    chk.failures.push_back(std::move(msg));
  };
  const int n = mod.sig.n();
  const int dim = mod.dim();
  if (static_cast<int>(mod.actions.size()) != n) {
    fail("action count differs from r+s");
    return chk;
  }
  for (int g : mod.metric)
    if (g != 1 && g != -1) fail("metric entry not +-1");
  for (int i = 1; i <= n; ++i) {
    const SignedPerm& J = mod.action(i);
    if (J.size() != dim || !is_valid(J)) {
      fail("J_" + std::to_string(i) + " is not a signed permutation");
      continue;
    }
    SignedPerm sq = compose(J, J);
    SignedPerm want = SignedPerm::identity(dim);
    if (mod.sig.norm(i) > 0) want = negate(want);
    if (!(sq == want)) fail("J_" + std::to_string(i) + " squares incorrectly");
    for (int a = 0; a < dim; ++a) {
      int b = J.perm[a];
      // (G J)_{b,a} = G_b sign, must equal -(G J)_{a,b}
      int back = J.perm[b];
      if (back != a || mod.metric[a] * J.sign[b] != -mod.metric[b] * J.sign[a]) {
        fail("J_" + std::to_string(i) + " is not skew for the metric");
        break;
      }
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      SignedPerm ij = compose(mod.action(i), mod.action(j));
      SignedPerm ji = compose(mod.action(j), mod.action(i));
      if (!(ij == negate(ji))) fail("J_" + std::to_string(i) + " and J_" + std::to_string(j) + " do not anticommute");
    }
  if (mod.sig.s > 0) {
    int plus = static_cast<int>(std::count(mod.metric.begin(), mod.metric.end(), 1));
    if (2 * plus != dim) fail("metric is not neutral");
  }
  return chk;
}

EigenspaceReport summand_eigenspace(const AdmissibleModule& mod, const Summand& part) {
  EigenspaceReport rep;
  std::vector<SignedPerm> ops;
  for (std::size_t i = 0; i < part.system.involutions.size(); ++i)
    if (part.counted[i]) ops.push_back(blade_action(mod, part.system.involutions[i]));
  for (int a : part.support) {
    bool in = true;
    for (const auto& P : ops) {
      if (P.perm[a] != a) throw VerificationError("involution does not act diagonally on the basis");
      if (P.sign[a] != 1) in = false;
    }
    if (!in) continue;
    rep.basis.push_back(a);
    (mod.metric[a] > 0 ? rep.n_plus : rep.n_minus)++;
  }
  rep.dim_E = static_cast<int>(rep.basis.size());
  rep.tag = (rep.n_plus == 0 || rep.n_minus == 0) ? SignTag::definite : SignTag::neutral;
  return rep;
}

EigenspaceReport common_one_eigenspace(const AdmissibleModule& mod) {
  if (!mod.minimal()) throw InputError("common 1-eigenspace is defined for a minimal module");
  return summand_eigenspace(mod, mod.summands.front());
}

static bool volume_splits(Signature sig) {
  return sig.n() % 2 == 1 && blade_square_sign(volume_form(sig), sig) == 1;
}

SummandInvariant summand_invariant(const AdmissibleModule& mod, const Summand& part) {
  SummandInvariant inv;
  if (volume_splits(mod.sig)) {
    SignedPerm omega = blade_action(mod, volume_form(mod.sig));
    int first = 0;
    bool scalar = true;
    for (int a : part.support) {
      if (omega.perm[a] != a) {
        scalar = false;
        break;
      }
      if (first == 0) first = omega.sign[a];
      if (omega.sign[a] != first) scalar = false;
    }
    inv.omega = scalar ? first : 0;
  }
  EigenspaceReport e = summand_eigenspace(mod, part);
  if (e.tag == SignTag::definite && e.dim_E > 0) {
    inv.e_definite = true;
    inv.e_sign = e.n_plus > 0 ? 1 : -1;
  } else {
    inv.e_sign = mod.metric[part.support.front()];
  }
  return inv;
}

InvariantVector module_invariants(const AdmissibleModule& mod) {
  InvariantVector iv;
  iv.dim = mod.dim();
  iv.volume_split = volume_splits(mod.sig);
  if (iv.volume_split) {
    SignedPerm omega = blade_action(mod, volume_form(mod.sig));
    for (int a = 0; a < mod.dim(); ++a) {
      if (omega.perm[a] != a) continue;
      (omega.sign[a] > 0 ? iv.omega_plus : iv.omega_minus)++;
    }
  }
  for (const auto& part : mod.summands) {
    SummandInvariant si = summand_invariant(mod, part);
    iv.parts.push_back(si);
    (si.e_sign > 0 ? iv.p_plus : iv.p_minus)++;
    if (si.omega > 0) (si.e_sign > 0 ? iv.pp : iv.mp)++;
    if (si.omega < 0) (si.e_sign > 0 ? iv.pm : iv.mm)++;
  }
  iv.p = iv.pp + iv.mm;
  iv.q = iv.mp + iv.pm;
  return iv;
}

int minimal_module_count(Signature sig) { return is_split(sig) ? 2 : 1; }

int irreducible_dimension(Signature sig) {
  // Generators squaring to +1 are the negative ones.
  int d = ((sig.s - sig.r) % 8 + 8) % 8;
  static const int field_dim[8] = {1, 1, 1, 2, 4, 4, 4, 2};
  bool pair = d == 1 || d == 5;
  int log_total = sig.n() - (pair ? 1 : 0);
  int k = field_dim[d];
  int log_k = std::countr_zero(static_cast<unsigned>(k));
  // m^2 * k = 2^log_total
  int log_m = (log_total - log_k) / 2;
  return (1 << log_m) * k;
}

}  // namespace pseudoh
