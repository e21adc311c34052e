#pragma once

#include <string>
#include <vector>

#include "pseudoh/blade.hpp"
#include "pseudoh/catalog.hpp"

namespace pseudoh {

enum class Branch { none, plus, minus };

std::string to_string(Branch b);

struct ModuleSpec {
  Signature sig;
  int metric_sign = 1;
  Branch branch = Branch::none;
  bool operator==(const ModuleSpec&) const = default;
};

ModuleSpec make_spec(Signature sig, int metric_sign, Branch branch = Branch::none);
std::string to_string(const ModuleSpec& spec);

// e_a -> sign[a] * e_{perm[a]}
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;

  int size() const { return static_cast<int>(perm.size()); }
  static SignedPerm identity(int n);
  bool operator==(const SignedPerm&) const = default;
};

// (f * g)(e) = f(g(e))
SignedPerm compose(const SignedPerm& f, const SignedPerm& g);
SignedPerm negate(const SignedPerm& f);
SignedPerm inverse(const SignedPerm& f);
bool is_valid(const SignedPerm& f);

// One minimal summand of a module, possibly with non-contiguous support.
struct Summand {
  ModuleSpec spec;
  std::vector<int> support;           // basis indices belonging to this summand
  InvolutionSystem system;            // involutions used to cut out E
  std::vector<int> lambda;            // eigenvalue of each involution on the seed
  std::vector<bool> counted;          // involutions defining E
};

struct AdmissibleModule {
  Signature sig;
  std::vector<Mask> basis;            // representative mask of each basis vector
  std::vector<int> metric;            // diagonal entries <x_i, x_i>
  std::vector<SignedPerm> actions;    // J_{z_i}, i = 1..r+s
  std::vector<Summand> summands;

  int dim() const { return static_cast<int>(metric.size()); }
  bool minimal() const { return summands.size() == 1; }
  const SignedPerm& action(int generator) const { return actions.at(generator - 1); }
};

// Action of a blade sign * z_{i1}...z_{ik} as the composite J_{z_i1} ... J_{z_ik}.
SignedPerm blade_action(const AdmissibleModule& mod, Blade b);

AdmissibleModule build_minimal(const ModuleSpec& spec);
// Coset construction from an explicit involution system (basic or periodicity-closed).
AdmissibleModule build_from_system(const InvolutionSystem& sys, const ModuleSpec& spec, int branch_index = -1);

AdmissibleModule direct_sum(const std::vector<AdmissibleModule>& parts);
AdmissibleModule negate_metric(const AdmissibleModule& mod);

struct ModuleCheck {
  bool ok = true;
  std::vector<std::string> failures;
};
ModuleCheck check_module(const AdmissibleModule& mod);

enum class SignTag { neutral, definite };

struct EigenspaceReport {
  int dim_E = 0;
  int n_plus = 0;
  int n_minus = 0;
  SignTag tag = SignTag::definite;
  std::vector<int> basis;             // module indices spanning E
};

EigenspaceReport common_one_eigenspace(const AdmissibleModule& mod);
EigenspaceReport summand_eigenspace(const AdmissibleModule& mod, const Summand& part);

struct SummandInvariant {
  int omega = 0;      // eigenvalue of the volume form on the summand, 0 if not scalar
  int e_sign = 0;     // sign of the metric on E if definite, else the seed metric sign
  bool e_definite = false;
  bool operator==(const SummandInvariant&) const = default;
};

struct InvariantVector {
  int dim = 0;
  bool volume_split = false;          // r+s odd and the volume form squares to +1
  int omega_plus = 0;                 // multiplicity (in dimensions) of volume eigenvalue +1
  int omega_minus = 0;
  int p_plus = 0;                     // summands with positive / negative E-sign
  int p_minus = 0;
  int pp = 0, mp = 0, pm = 0, mm = 0; // p^+_+, p^-_+, p^+_-, p^-_-
  int p = 0, q = 0;                   // p^+_+ + p^-_-, p^-_+ + p^+_-
  std::vector<SummandInvariant> parts;
  bool operator==(const InvariantVector&) const = default;
};

SummandInvariant summand_invariant(const AdmissibleModule& mod, const Summand& part);
InvariantVector module_invariants(const AdmissibleModule& mod);

// Number of pairwise non-isomorphic minimal modules as Clifford modules (1 or 2).
int minimal_module_count(Signature sig);
// Dimension of an irreducible real Cl_{r,s} module.
int irreducible_dimension(Signature sig);

}  // namespace pseudoh
