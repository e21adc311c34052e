#include "pseudoh/blade.hpp"

#include <bit>

namespace pseudoh {

Signature make_signature(int r, int s) {
  if (r < 0 || s < 0 || r + s < 1 || r + s > max_generators)
    throw InputError("invalid signature (" + std::to_string(r) + "," + std::to_string(s) + ")");
  return Signature{r, s};
}

std::string to_string(Signature sig) {
  return "(" + std::to_string(sig.r) + "," + std::to_string(sig.s) + ")";
}

int Blade::grade() const { return std::popcount(mask); }

Mask mask_of(std::initializer_list<int> indices) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 1 || i > max_generators) throw InputError("generator index out of range");
    m |= Mask{1} << (i - 1);
  }
  return m;
}

Blade make_blade(std::initializer_list<int> indices, int sign) {
  return Blade{sign, mask_of(indices)};
}

Blade make_blade(const std::vector<int>& indices, int sign) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 1 || i > max_generators) throw InputError("generator index out of range");
    m |= Mask{1} << (i - 1);
  }
  return Blade{sign, m};
}

std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

std::string to_string(Blade b) {
  std::string out = b.sign > 0 ? "+" : "-";
  if (b.mask == 0) return out + "1";
  bool first = true;
  for (int i : indices_of(b.mask)) {
    if (!first) out += "*";
    out += "z" + std::to_string(i);
    first = false;
  }
  return out;
}

static Mask positive_mask(Signature sig) {
  return sig.r >= 32 ? ~Mask{0} : (Mask{1} << sig.r) - 1;
}

static void check_range(Mask m, Signature sig) {
  if (m & ~sig.full_mask()) throw InputError("blade index out of range for " + to_string(sig));
}

int mask_norm(Mask m, Signature sig) {
  Mask neg = m & ~positive_mask(sig);
  return (std::popcount(neg) & 1) ? -1 : 1;
}

Blade blade_mul(Blade a, Blade b, Signature sig) {
  check_range(a.mask, sig);
  check_range(b.mask, sig);
  // Each generator of b moves left past the generators of a with larger index.
  int swaps = 0;
  for (Mask rest = b.mask; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    Mask above = (j >= 31) ? 0 : (a.mask >> (j + 1));
    swaps += std::popcount(above);
  }
  int sign = a.sign * b.sign * ((swaps & 1) ? -1 : 1);
  // z_i^2 = -<z_i,z_i>
  Mask shared = a.mask & b.mask;
  int pos_shared = std::popcount(shared & positive_mask(sig));
  if (pos_shared & 1) sign = -sign;
  return Blade{sign, a.mask ^ b.mask};
}

int blade_square_sign(Blade a, Signature sig) {
  Blade sq = blade_mul(Blade{1, a.mask}, Blade{1, a.mask}, sig);
  return sq.sign;
}

Blade blade_inverse(Blade a, Signature sig) {
  return Blade{a.sign * blade_square_sign(a, sig), a.mask};
}

int blade_commutation_sign(Blade a, Blade b) {
  int ka = std::popcount(a.mask), kb = std::popcount(b.mask);
  int common = std::popcount(a.mask & b.mask);
  return ((ka * kb - common) & 1) ? -1 : 1;
}

Blade volume_form(Signature sig) { return Blade{1, sig.full_mask()}; }

bool blade_is_isometric(Blade a, Signature sig) { return mask_norm(a.mask, sig) == 1; }

bool blade_is_symmetric(Blade a) {
  int k = std::popcount(a.mask) % 4;
  return k == 0 || k == 3;
}

bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  int d = std::countr_zero(a ^ b);
  Mask higher = (d >= 31) ? 0 : ~((Mask{2} << d) - 1);
  if (a & (Mask{1} << d)) return (b & higher) != 0;
  return (a & higher) == 0;
}

}  // namespace pseudoh
