#include "pseudoh/catalog.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace pseudoh {

bool is_split(Signature sig) {
  int d = ((sig.r - sig.s) % 4 + 4) % 4;
  return d == 3 && sig.s % 2 == 0;
}

bool is_basic(Signature sig) {
  if (sig.r < 0 || sig.s < 0 || sig.r + sig.s < 1) return false;
  if (sig.r <= 7 && sig.s <= 3) return true;
  if (sig.r <= 3 && sig.s >= 4 && sig.s <= 7) return true;
  return sig == Signature{8, 0} || sig == Signature{0, 8} || sig == Signature{4, 4};
}

std::vector<Signature> basic_signatures() {
  std::vector<Signature> out;
  for (int s = 0; s <= 8; ++s)
    for (int r = 0; r <= 8; ++r)
      if (is_basic({r, s})) out.push_back({r, s});
  return out;
}

namespace {

using Idx = std::vector<int>;

struct Row {
  std::vector<Idx> involutions;
  std::vector<std::pair<Idx, bool>> complements;
  std::vector<std::pair<Idx, bool>> extras;
  std::optional<int> dim_E;
};

constexpr bool isom = true;
constexpr bool anti = false;

const std::vector<Idx> T_system = {{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 2, 7, 8}, {1, 3, 5, 7}};

std::map<std::pair<int, int>, Row> build_table() {
  std::map<std::pair<int, int>, Row> t;
  const std::vector<Idx> pi_3 = {{1, 2, 3}};
  t[{3, 0}] = {pi_3, {}, {}, {}};
  t[{1, 2}] = {pi_3, {}, {}, {}};

  t[{4, 0}] = {{{1, 2, 3, 4}}, {{{1}, isom}}, {}, 4};
  // Printed C_2 = z1 commutes with z1z2z3; z1z2z4 meets the complement contract.
  t[{5, 0}] = {{{2, 3, 4, 5}, {1, 2, 3}}, {{{2}, isom}, {{1, 2, 4}, isom}}, {}, 2};
  // Printed C_3 = z2z4 fails against P_2 and P_3; z1z2 is the complement used for (2,4).
  t[{6, 0}] = {{{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 3, 5}}, {{{1}, isom}, {{5}, isom}, {{1, 2}, isom}}, {}, 1};
  t[{7, 0}] = {{{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 3, 5, 7}, {5, 6, 7}},
               {{{1}, isom}, {{1, 3}, isom}, {{1, 2}, isom}}, {}, 1};

  t[{0, 4}] = {{{1, 2, 3, 4}}, {{{2}, anti}}, {}, 4};
  t[{1, 4}] = {{{2, 3, 4, 5}, {1, 2, 3}}, {{{2}, anti}, {{1, 2, 4}, isom}}, {}, 2};
  t[{2, 4}] = {{{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 3, 5}}, {{{1}, isom}, {{5}, anti}, {{1, 2}, isom}}, {}, 1};

  t[{3, 1}] = {{{1, 2, 3}}, {{{4}, anti}}, {}, 4};
  t[{3, 2}] = {{{1, 2, 4, 5}, {1, 2, 3}}, {{{1}, isom}, {{2, 4}, anti}}, {}, 2};
  t[{3, 3}] = {{{1, 2, 4, 5}, {1, 3, 4, 6}, {1, 2, 3}}, {{{1}, isom}, {{3}, isom}, {{3, 6}, anti}}, {}, 1};
  t[{3, 4}] = {{{1, 2, 4, 5}, {1, 3, 5, 7}, {1, 2, 6, 7}, {1, 2, 3}},
               {{{1}, isom}, {{3}, isom}, {{6}, anti}}, {}, 1};
  const std::vector<Idx> pi_35 = {{1, 2, 4, 5}, {1, 2, 6, 7}, {1, 3, 5, 7}, {1, 2, 3}};
  const std::vector<std::pair<Idx, bool>> co_35 = {{{1}, isom}, {{6, 8}, isom}, {{3}, isom}, {{8}, anti}};
  t[{3, 5}] = {pi_35, co_35, {}, 1};
  t[{3, 6}] = {pi_35, co_35, {}, 2};
  t[{3, 7}] = {pi_35, co_35, {}, 4};
  // Printed P_4 = z1z2z3 anticommutes with P_1; z5z6z7 is the P_4 of the (7,0) row.
  const std::vector<Idx> pi_71 = {{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 3, 5, 7}, {5, 6, 7}};
  const std::vector<std::pair<Idx, bool>> co_71 = {{{1}, isom}, {{5}, isom}, {{7}, isom}, {{8}, anti}};
  t[{7, 1}] = {pi_71, co_71, {}, 1};
  t[{7, 2}] = {pi_71, co_71, {}, 2};
  t[{7, 3}] = {pi_71, co_71, {}, 4};

  t[{1, 3}] = {{{1, 2, 3}}, {{{2, 4}, isom}}, {}, 4};
  t[{2, 2}] = {{{1, 2, 3, 4}}, {{{1}, isom}}, {}, 4};
  t[{2, 3}] = {{{1, 2, 3, 4}, {2, 3, 5}}, {{{1}, isom}, {{1, 2}, isom}}, {}, 2};
  const std::vector<Idx> pi_05 = {{1, 2, 3, 4}};
  const std::vector<Idx> pi_06 = {{1, 2, 3, 4}, {1, 2, 5, 6}};
  const std::vector<Idx> pi_07 = {{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 3, 5, 7}};
  t[{0, 5}] = {pi_05, {{{1, 5}, isom}}, {}, 8};
  t[{0, 6}] = {pi_06, {{{1, 5}, isom}, {{2, 3}, isom}}, {}, 4};
  t[{0, 7}] = {pi_07, {{{1, 5}, isom}, {{2, 3}, isom}, {{5, 6}, isom}}, {}, 2};
  const std::vector<Idx> pi_15 = {{2, 3, 4, 5}, {1, 2, 3}};
  const std::vector<Idx> pi_16 = {{2, 3, 4, 5}, {2, 3, 6, 7}, {1, 2, 3}};
  t[{1, 5}] = {pi_15, {{{5, 6}, isom}, {{3, 4}, isom}}, {}, 4};
  t[{1, 6}] = {pi_16, {{{5, 6}, isom}, {{3, 4}, isom}}, {{{2, 4, 6}, anti}}, 4};
  t[{1, 7}] = {pi_16, {{{5, 6}, isom}, {{3, 4}, isom}, {{2, 4, 6, 8}, isom}}, {}, 4};
  const std::vector<Idx> pi_25 = {{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 3, 5}};
  const std::vector<std::pair<Idx, bool>> co_25 = {{{1}, isom}, {{1, 3, 7}, isom}, {{5, 6}, isom}};
  t[{2, 5}] = {pi_25, co_25, {}, 2};
  t[{2, 6}] = {pi_25, co_25, {}, 4};
  t[{2, 7}] = {pi_25, co_25, {}, 8};
  t[{4, 1}] = {pi_05, {{{1}, isom}}, {}, 8};
  t[{4, 2}] = {pi_06, {{{1}, isom}, {{2, 3}, isom}}, {}, 4};
  t[{4, 3}] = {pi_07, {{{1}, isom}, {{2, 3}, isom}, {{5, 6}, isom}}, {}, 2};
  t[{5, 1}] = {pi_15, {{{5}, isom}, {{3, 4}, isom}}, {}, 4};
  t[{5, 2}] = {pi_16, {{{5}, isom}, {{3, 4}, isom}}, {{{2, 4, 6}, anti}}, 4};
  t[{5, 3}] = {pi_16, {{{5}, isom}, {{3, 4}, isom}, {{2, 4, 6, 8}, isom}}, {}, 4};
  const std::vector<std::pair<Idx, bool>> co_61 = {{{1}, isom}, {{1, 3}, isom}, {{5, 6}, isom}};
  t[{6, 1}] = {pi_25, co_61, {}, 2};
  t[{6, 2}] = {pi_25, co_61, {}, 4};
  t[{6, 3}] = {pi_25, co_61, {}, 8};

  // The complements for the third and fourth T are z8 and z3z4 respectively.
  t[{8, 0}] = {T_system, {{{1}, isom}, {{2, 3}, isom}, {{8}, isom}, {{3, 4}, isom}}, {}, 1};
  t[{4, 4}] = {T_system, {{{1}, isom}, {{2, 3}, isom}, {{8}, anti}, {{3, 4}, isom}}, {}, 1};
  t[{0, 8}] = {T_system, {{{4, 5}, isom}, {{2, 3}, isom}, {{8}, anti}, {{3, 4}, isom}}, {}, 1};
  return t;
}

const std::map<std::pair<int, int>, Row>& table() {
  static const auto t = build_table();
  return t;
}

}  // namespace

InvolutionSystem catalog_lookup(Signature sig) {
  if (!is_basic(sig))
    throw InputError("signature " + to_string(sig) + " is not a basic case; use the periodicity module");
  InvolutionSystem sys;
  sys.sig = sig;
  sys.case_tag = is_split(sig) ? CaseTag::split : CaseTag::generic;
  auto it = table().find({sig.r, sig.s});
  if (it == table().end()) return sys;
  const Row& row = it->second;
  for (const auto& p : row.involutions) sys.involutions.push_back(make_blade(p));
  for (const auto& [idx, flag] : row.complements) sys.complements.push_back({make_blade(idx), flag});
  for (const auto& [idx, flag] : row.extras) sys.commuting_extras.push_back({make_blade(idx), flag});
  sys.listed_dim_E = row.dim_E;
  return sys;
}

int count_involutions(Signature sig) { return static_cast<int>(catalog_lookup(sig).involutions.size()); }

std::vector<Complement> printed_periodicity_complements(Signature sig) {
  if (sig == Signature{0, 8})
    return {{make_blade({4, 5}), isom}, {make_blade({2, 3}), isom}, {make_blade({3, 4}), isom}, {make_blade({8}), anti}};
  if (sig == Signature{8, 0})
    return {{make_blade({1}), isom}, {make_blade({2, 3}), isom}, {make_blade({3, 4}), isom}, {make_blade({8}), isom}};
  if (sig == Signature{4, 4})
    return {{make_blade({1}), isom}, {make_blade({2, 3}), isom}, {make_blade({3, 4}), isom}, {make_blade({8}), anti}};
  throw InputError("not a periodicity signature");
}

std::optional<InvolutionSystem> printed_system(Signature sig) {
  if (!is_basic(sig)) return std::nullopt;
  InvolutionSystem sys = catalog_lookup(sig);
  if (sig == Signature{5, 0}) {
    sys.complements[1].op = make_blade({1});
  } else if (sig == Signature{1, 4}) {
    sys.complements[1].op = make_blade({1});
  } else if (sig == Signature{6, 0}) {
    sys.complements[2].op = make_blade({2, 4});
  } else if (sig.r == 7 && sig.s >= 1 && sig.s <= 3) {
    sys.involutions[3] = make_blade({1, 2, 3});
  } else if (sig == Signature{8, 0} || sig == Signature{0, 8} || sig == Signature{4, 4}) {
    sys.complements = printed_periodicity_complements(sig);
  } else {
    return std::nullopt;
  }
  return sys;
}

std::vector<SubgroupElement> signed_subgroup(const std::vector<Blade>& gens, const std::vector<int>& lambdas,
                                             Signature sig) {
  if (gens.size() != lambdas.size()) throw InputError("generator/sign count mismatch");
  if (gens.size() > 20) throw InputError("too many involutions");
  std::size_t count = std::size_t{1} << gens.size();
  std::vector<SubgroupElement> out(count);
  std::unordered_map<Mask, std::size_t> seen;
  out[0] = {Blade{1, 0}, 0};
  seen[0] = 0;
  for (std::size_t w = 1; w < count; ++w) {
    int top = std::bit_width(w) - 1;
    std::size_t prev = w & ~(std::size_t{1} << top);
    Blade g{lambdas[top], gens[top].mask};
    g.sign *= gens[top].sign;
    out[w] = {blade_mul(out[prev].blade, g, sig), static_cast<std::uint32_t>(w)};
    auto [it, fresh] = seen.emplace(out[w].blade.mask, w);
    if (!fresh) {
      const Blade& other = out[it->second].blade;
      if (other.sign != out[w].blade.sign)
        throw InputError("signed involution subgroup contains -1");
      throw InputError("involutions are not independent");
    }
  }
  return out;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<Check> ValidationReport::failures() const {
  std::vector<Check> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c);
  return out;
}

ValidationReport validate_system(const InvolutionSystem& sys) {
  ValidationReport rep;
  rep.sig = sys.sig;
  const Signature sig = sys.sig;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  bool in_range = true;
  for (const auto& p : sys.involutions) in_range &= (p.mask & ~sig.full_mask()) == 0;
  for (const auto& c : sys.complements) in_range &= (c.op.mask & ~sig.full_mask()) == 0;
  for (const auto& c : sys.commuting_extras) in_range &= (c.op.mask & ~sig.full_mask()) == 0;
  add("indices in range", in_range);
  if (!in_range) return rep;

  add("case tag", (sys.case_tag == CaseTag::split) == is_split(sig));

  const std::size_t p = sys.involutions.size();
  for (std::size_t i = 0; i < p; ++i) {
    const Blade& P = sys.involutions[i];
    std::string tag = "P" + std::to_string(i + 1) + "=" + to_string(P);
    add(tag + " squares to +1", blade_square_sign(P, sig) == 1);
    add(tag + " symmetric", blade_is_symmetric(P));
    add(tag + " isometric", blade_is_isometric(P, sig));
    int g = P.grade();
    add(tag + " has three or four generators", g == 3 || g == 4);
    for (std::size_t j = i + 1; j < p; ++j)
      add(tag + " commutes with P" + std::to_string(j + 1),
          blade_commutation_sign(P, sys.involutions[j]) == 1);
  }

  int three_type = 0;
  bool three_last = true;
  for (std::size_t i = 0; i < p; ++i)
    if (sys.involutions[i].grade() == 3) {
      ++three_type;
      if (i + 1 != p) three_last = false;
    }
  add("at most one three-generator involution, placed last", three_type <= 1 && three_last);

  bool independent = true;
  std::string why;
  try {
    signed_subgroup(sys.involutions, std::vector<int>(p, 1), sig);
  } catch (const InputError& e) {
    independent = false;
    why = e.what();
  }
  add("involutions independent, subgroup free of -1", independent, why);

  const std::size_t expected = sys.case_tag == CaseTag::split ? (p == 0 ? 0 : p - 1) : p;
  add("complement count", sys.complements.size() == expected,
      std::to_string(sys.complements.size()) + " vs " + std::to_string(expected));

  for (std::size_t k = 0; k < sys.complements.size(); ++k) {
    const auto& C = sys.complements[k];
    std::string tag = "C" + std::to_string(k + 1) + "=" + to_string(C.op);
    add(tag + " isometry flag", blade_is_isometric(C.op, sig) == C.isometric);
    for (std::size_t i = 0; i < k && i < p; ++i)
      add(tag + " commutes with P" + std::to_string(i + 1),
          blade_commutation_sign(C.op, sys.involutions[i]) == 1);
    if (k < p)
      add(tag + " anticommutes with P" + std::to_string(k + 1),
          blade_commutation_sign(C.op, sys.involutions[k]) == -1);
  }

  for (std::size_t k = 0; k < sys.commuting_extras.size(); ++k) {
    const auto& X = sys.commuting_extras[k];
    std::string tag = "extra " + to_string(X.op);
    add(tag + " isometry flag", blade_is_isometric(X.op, sig) == X.isometric);
    bool commutes = true;
    for (const auto& P : sys.involutions) commutes &= blade_commutation_sign(X.op, P) == 1;
    add(tag + " commutes with every involution", commutes);
  }

  if (sys.case_tag == CaseTag::split && p > 0) {
    add("branch involution has three generators", sys.involutions.back().grade() == 3);
    bool found = false;
    if (independent) {
      for (const auto& e : signed_subgroup(sys.involutions, std::vector<int>(p, 1), sig))
        if (e.blade.mask == sig.full_mask() && (e.word >> (p - 1)) & 1u) found = true;
    }
    add("volume form is a product of involutions including the last", found);
  }
  return rep;
}

}  // namespace pseudoh
