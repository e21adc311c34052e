#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace pseudoh {

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Mask = std::uint32_t;

inline constexpr int max_generators = 32;

// Quadratic space R^{r,s}: generators 1..r are positive, r+1..r+s negative.
struct Signature {
  int r = 0;
  int s = 0;

  int n() const { return r + s; }
  bool positive(int i) const { return i <= r; }
  // <z_i, z_i>
  int norm(int i) const { return i <= r ? 1 : -1; }
  Mask full_mask() const { return n() >= 32 ? ~Mask{0} : (Mask{1} << n()) - 1; }
  bool operator==(const Signature&) const = default;
};

Signature make_signature(int r, int s);
std::string to_string(Signature sig);

// Signed monomial sign * z_{i1} ... z_{ik} with i1 < ... < ik. Bit i-1 of mask is z_i.
struct Blade {
  int sign = 1;
  Mask mask = 0;

  int grade() const;
  bool operator==(const Blade&) const = default;
};

Blade make_blade(std::initializer_list<int> indices, int sign = 1);
Blade make_blade(const std::vector<int>& indices, int sign = 1);
Mask mask_of(std::initializer_list<int> indices);
std::vector<int> indices_of(Mask m);
std::string to_string(Blade b);

Blade blade_mul(Blade a, Blade b, Signature sig);
int blade_square_sign(Blade a, Signature sig);
Blade blade_inverse(Blade a, Signature sig);
int blade_commutation_sign(Blade a, Blade b);
Blade volume_form(Signature sig);
bool blade_is_isometric(Blade a, Signature sig);
bool blade_is_symmetric(Blade a);

// Product of <z_i,z_i> over the mask.
int mask_norm(Mask m, Signature sig);

// Lexicographic order on ascending index sequences.
bool lex_less(Mask a, Mask b);

}  // namespace pseudoh
