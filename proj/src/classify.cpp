#include "pseudoh/classify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "pseudoh/periodicity.hpp"

namespace pseudoh {

std::string to_string(Relation r) { return r == Relation::isomorphic ? "isomorphic" : "not_isomorphic"; }

std::string to_string(Reason r) {
  switch (r) {
    case Reason::dimension: return "dimension";
    case Reason::multiplicity_pair: return "multiplicity_pair";
    case Reason::pq_swap: return "pq_swap";
    case Reason::det_obstruction: return "det_obstruction";
    case Reason::theorem1: return "theorem1";
    case Reason::cross_table: return "cross_table";
  }
  return "unknown";
}

int governing_theorem(Signature sig) {
  if (sig.r % 4 != 3) return 1;
  return sig.s % 4 == 0 ? 2 : 3;
}

AdmissibleModule extract_summand(const AdmissibleModule& mod, int index) {
  const Summand& part = mod.summands.at(index);
  std::vector<int> pos(mod.dim(), -1);
  for (std::size_t t = 0; t < part.support.size(); ++t) pos[part.support[t]] = static_cast<int>(t);
  AdmissibleModule out;
  out.sig = mod.sig;
  for (int a : part.support) {
    out.basis.push_back(mod.basis[a]);
    out.metric.push_back(mod.metric[a]);
  }
  for (const auto& J : mod.actions) {
    SignedPerm K;
    for (int a : part.support) {
      int b = pos[J.perm[a]];
      if (b < 0) throw VerificationError("summand is not invariant");
      K.perm.push_back(b);
      K.sign.push_back(J.sign[a]);
    }
    out.actions.push_back(std::move(K));
  }
  Summand s = part;
  std::iota(s.support.begin(), s.support.end(), 0);
  out.summands.push_back(std::move(s));
  return out;
}

int summand_class(const AdmissibleModule& mod, int index) {
  SummandInvariant inv = summand_invariant(mod, mod.summands.at(index));
  switch (governing_theorem(mod.sig)) {
    case 1: return 0;
    case 2: return inv.e_sign * inv.omega;
    default: return inv.e_sign;
  }
}

namespace {

std::pair<int, int> apply_blade_to(const AdmissibleModule& mod, Mask m, int index) {
  int idx = index, sign = 1;
  std::vector<int> gens = indices_of(m);
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    const SignedPerm& J = mod.action(*it);
    sign *= J.sign[idx];
    idx = J.perm[idx];
  }
  return {idx, sign};
}

// Necessary condition for A + Id when A^tau A is a scalar kappa: J~_k A = kappa A J_k.
bool quick_reject(const SignedPerm& P, const AdmissibleModule& src, const AdmissibleModule& dst) {
  int kappa = 0;
  for (int a = 0; a < P.size(); ++a) {
    int k = src.metric[a] * dst.metric[P.perm[a]];
    if (kappa == 0) kappa = k;
    if (k != kappa) return false;
  }
  for (int k = 1; k <= src.sig.n(); ++k) {
    SignedPerm lhs = compose(dst.action(k), P);
    SignedPerm rhs = compose(P, src.action(k));
    if (kappa < 0) rhs = negate(rhs);
    if (!(lhs == rhs)) return true;
  }
  return false;
}

std::optional<LieMorphism> seed_search(const AdmissibleModule& X, const AdmissibleModule& Y) {
  if (X.dim() != Y.dim() || !(X.sig == Y.sig)) return std::nullopt;
  EigenspaceReport e = summand_eigenspace(X, X.summands.front());
  int seed = e.basis.empty() ? 0 : e.basis.front();
  BasisRecipe recipe = graded_recipe(X, seed);
  std::vector<std::pair<int, int>> xs;
  for (const auto& entry : recipe.entries) xs.push_back(apply_blade_to(X, entry.blade.mask, seed));
  HTypeAlgebra ax(X), ay(Y);
  const int dim = X.dim();
  for (int t = 0; t < dim; ++t)
    for (int parity = 0; parity < 2; ++parity) {
      SignedPerm P;
      P.perm.assign(dim, -1);
      P.sign.assign(dim, 0);
      bool ok = true;
      for (std::size_t i = 0; i < recipe.entries.size() && ok; ++i) {
        Mask m = recipe.entries[i].blade.mask;
        auto [yi, ys] = apply_blade_to(Y, m, t);
        int eps = parity && (std::popcount(m) % 2) ? -1 : 1;
        P.perm[xs[i].first] = yi;
        P.sign[xs[i].first] = xs[i].second * ys * eps;
      }
      if (!is_valid(P)) continue;
      if (quick_reject(P, X, Y)) continue;
      LieMorphism f{RatMatrix::from_signed_perm(P), RatMatrix::identity(X.sig.n()), {}};
      if (verify_isomorphism(f, ax, ay)) return f;
    }
  return std::nullopt;
}

// Automorphism A + (-Id) of a signature one step up, projected and turned into A + Id between
// opposite metrics.
std::optional<LieMorphism> descent(const AdmissibleModule& X, const AdmissibleModule& Y) {
  const Signature sig = X.sig;
  struct Candidate {
    Signature ext;
    int dropped;
  };
  std::vector<Candidate> cands;
  if ((sig.r + 1) % 2 == 0) cands.push_back({Signature{sig.r + 1, sig.s}, sig.r + 1});
  if (sig.r % 2 == 0) cands.push_back({Signature{sig.r, sig.s + 1}, sig.n() + 1});
  for (const auto& c : cands) {
    if (c.ext.n() > 16) continue;
    ModuleSpec spec = make_spec(c.ext, 1, is_split(c.ext) ? Branch::plus : Branch::none);
    AdmissibleModule M = build_extended_minimal(spec);
    if (M.dim() != X.dim()) continue;
    HTypeAlgebra big(M);
    LieMorphism aut = pin_automorphism(volume_form(c.ext), big);
    std::vector<int> kept;
    for (int i = 1; i <= c.ext.n(); ++i)
      if (i != c.dropped) kept.push_back(i);
    AdmissibleModule R = restrict_generators(M, kept);
    HTypeAlgebra ar(R);
    LieMorphism aut_small{aut.A, -RatMatrix::identity(sig.n()), {}};
    if (!verify_isomorphism(aut_small, ar, ar)) continue;
    LieMorphism mid = aut_iso_transfer(aut_small, ar, TransferDirection::automorphism_to_isomorphism);
    AdmissibleModule Rn = negate_metric(R);
    for (int flip = 0; flip < 2; ++flip) {
      const AdmissibleModule& first = flip ? Rn : R;
      const AdmissibleModule& second = flip ? R : Rn;
      auto f1 = seed_search(X, first);
      if (!f1) continue;
      auto f3 = seed_search(second, Y);
      if (!f3) continue;
      LieMorphism total = compose(*f3, compose(mid, *f1));
      if (verify_isomorphism(total, HTypeAlgebra(X), HTypeAlgebra(Y))) return total;
    }
  }
  return std::nullopt;
}

bool same_module(const AdmissibleModule& a, const AdmissibleModule& b) {
  return a.sig == b.sig && a.metric == b.metric && a.actions == b.actions;
}

}  // namespace

std::optional<LieMorphism> minimal_certificate(const AdmissibleModule& src, const AdmissibleModule& dst) {
  if (!src.minimal() || !dst.minimal()) throw InputError("minimal_certificate expects minimal modules");
  if (auto f = seed_search(src, dst)) return f;
  return descent(src, dst);
}

std::optional<LieMorphism> same_class_certificate(const AdmissibleModule& src, const AdmissibleModule& dst) {
  if (!(src.sig == dst.sig) || src.dim() != dst.dim() || src.summands.size() != dst.summands.size())
    return std::nullopt;
  const int count = static_cast<int>(src.summands.size());
  auto order = [&](const AdmissibleModule& m) {
    std::vector<std::pair<int, int>> keyed;
    for (int i = 0; i < count; ++i) keyed.push_back({summand_class(m, i), i});
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    return keyed;
  };
  auto xs = order(src);
  auto ys = order(dst);
  LieMorphism out{RatMatrix(dst.dim(), src.dim()), RatMatrix::identity(src.sig.n()), {}};
  for (int t = 0; t < count; ++t) {
    if (xs[t].first != ys[t].first) return std::nullopt;
    const Summand& sx = src.summands[xs[t].second];
    const Summand& sy = dst.summands[ys[t].second];
    if (sx.support.size() != sy.support.size()) return std::nullopt;
    auto pair = minimal_certificate(extract_summand(src, xs[t].second), extract_summand(dst, ys[t].second));
    if (!pair) return std::nullopt;
    for (std::size_t a = 0; a < sx.support.size(); ++a)
      for (std::size_t b = 0; b < sy.support.size(); ++b)
        if (sgn(pair->A(b, a)) != 0) out.A(sy.support[b], sx.support[a]) = pair->A(b, a);
  }
  if (!verify_isomorphism(out, HTypeAlgebra(src), HTypeAlgebra(dst)))
    throw VerificationError("assembled block certificate fails verification");
  return out;
}

std::pair<int, int> multiplicity_pair(const AdmissibleModule& mod) {
  InvariantVector iv = module_invariants(mod);
  switch (governing_theorem(mod.sig)) {
    case 1: return {iv.dim, 0};
    case 2: return {iv.p, iv.q};
    default: return {iv.p_plus, iv.p_minus};
  }
}

bool is_isotypic(const AdmissibleModule& mod) {
  auto [p, q] = multiplicity_pair(mod);
  return p == 0 || q == 0;
}

ClassificationVerdict classify(const HTypeAlgebra& src, const HTypeAlgebra& dst) {
  if (!(src.sig() == dst.sig())) throw InputError("classify needs equal signatures; use classify_cross");
  ClassificationVerdict v;
  if (src.dim_u() != dst.dim_u()) {
    v.related = Relation::not_isomorphic;
    v.reason = Reason::dimension;
    return v;
  }
  const AdmissibleModule& X = src.module();
  const AdmissibleModule& Y = dst.module();
  const int th = governing_theorem(src.sig());
  auto identity_or_search = [&]() -> std::optional<LieMorphism> {
    if (same_module(X, Y)) return identity_morphism(src);
    return same_class_certificate(X, Y);
  };
  if (th == 1) {
    v.related = Relation::isomorphic;
    v.reason = Reason::theorem1;
    v.certificate = identity_or_search();
    return v;
  }
  auto a = multiplicity_pair(X);
  auto b = multiplicity_pair(Y);
  if (a == b) {
    v.related = Relation::isomorphic;
    v.reason = Reason::multiplicity_pair;
    v.certificate = identity_or_search();
  } else if (a.first == b.second && a.second == b.first) {
    v.related = Relation::isomorphic;
    v.reason = Reason::pq_swap;
    // Id + (-Id) onto the negated metric swaps the pair, then match classes.
    if (auto g = same_class_certificate(negate_metric(X), Y)) {
      LieMorphism flip = sign_flip_iso(src);
      v.certificate = compose(*g, flip);
    }
  } else {
    v.related = Relation::not_isomorphic;
    v.reason = th == 2 ? Reason::det_obstruction : Reason::multiplicity_pair;
  }
  if (v.certificate && !verify_isomorphism(*v.certificate, src, dst))
    throw VerificationError("classification certificate fails verification");
  return v;
}

CrossRule cross_rule(int r, int s) {
  auto rule3 = [](int a, int b) {
    // Reduce a = 3 mod 4 to 3 with the same a - b mod 8.
    int b3 = ((b - (a - 3)) % 8 + 8) % 8;
    switch (b3) {
      case 0: case 4: case 5: case 6: return CrossRule::isotypic_only;
      default: return CrossRule::never;
    }
  };
  if (r % 4 == 3) return rule3(r, s);
  if (s % 4 == 3) return rule3(s, r);
  return CrossRule::always;
}

ClassificationVerdict classify_cross(const HTypeAlgebra& src, const HTypeAlgebra& dst) {
  const Signature a = src.sig(), b = dst.sig();
  if (a.r != b.s || a.s != b.r) throw InputError("classify_cross needs transposed signatures");
  if (a == b) return classify(src, dst);
  ClassificationVerdict v;
  v.reason = Reason::dimension;
  if (src.dim_u() != dst.dim_u()) return v;
  v.reason = Reason::cross_table;
  switch (cross_rule(a.r, a.s)) {
    case CrossRule::always: v.related = Relation::isomorphic; break;
    case CrossRule::never: v.related = Relation::not_isomorphic; break;
    case CrossRule::isotypic_only: {
      const AdmissibleModule& side = a.r % 4 == 3 ? src.module() : dst.module();
      v.related = is_isotypic(side) ? Relation::isomorphic : Relation::not_isomorphic;
      break;
    }
  }
  return v;
}

std::string render_cross_table() {
  static const char* iso = "≅";
  static const char* non = "≇";
  struct Column {
    int r;
    int kind;  // 0 plain, 1 isotypic, 2 non-isotypic
    const char* label;
  };
  const std::vector<Column> cols = {{0, 0, "0"},    {1, 0, "1"}, {2, 0, "2"}, {3, 1, "3iso"},
                                    {3, 2, "3non"}, {4, 0, "4"}, {5, 0, "5"}, {6, 0, "6"},
                                    {7, 1, "7iso"}, {7, 2, "7non"}, {8, 0, "8"}};
  std::ostringstream out;
  out << "s\\r";
  for (const auto& c : cols) out << ',' << c.label;
  out << '\n';
  for (int s = 8; s >= 0; --s) {
    out << s;
    for (const auto& c : cols) {
      out << ',';
      if (c.r == s) {
        if (s == 0) continue;
        out << (s % 4 == 3 ? "≇↻" : "↻");
        continue;
      }
      CrossRule rule = cross_rule(c.r, s);
      bool ok = c.kind == 1   ? rule != CrossRule::never
                : c.kind == 2 ? rule == CrossRule::always
                              : rule != CrossRule::never;
      out << (ok ? iso : non);
    }
    out << '\n';
  }
  return out.str();
}

Table1Cell table1_cell(Signature sig) {
  Table1Cell cell;
  cell.sig = sig;
  InvolutionSystem sys = extended_system(sig);
  cell.dim = 1 << (sig.n() - static_cast<int>(sys.involutions.size()));
  cell.two_modules = minimal_module_count(sig) == 2;
  AdmissibleModule mod = build_extended_minimal(make_spec(sig, 1, is_split(sig) ? Branch::plus : Branch::none));
  if (mod.dim() != cell.dim) throw VerificationError("module dimension disagrees with the involution count");
  cell.tag = common_one_eigenspace(mod).tag;
  cell.doubled = cell.dim == 2 * irreducible_dimension(sig);
  return cell;
}

std::vector<Table1Cell> table1() {
  std::vector<Table1Cell> out;
  for (int s = 8; s >= 0; --s)
    for (int r = 0; r <= 8; ++r)
      if (r + s > 0) out.push_back(table1_cell(Signature{r, s}));
  return out;
}

std::string render_table1_csv() {
  std::ostringstream out;
  out << "r,s,dim,x2,tag,doubling\n";
  for (const auto& c : table1())
    out << c.sig.r << ',' << c.sig.s << ',' << c.dim << ',' << (c.two_modules ? 1 : 0) << ','
        << (c.tag == SignTag::neutral ? "N" : "±") << ',' << (c.doubled ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace pseudoh
