#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pseudoh/blade.hpp"

namespace pseudoh {

enum class CaseTag { generic, split };

struct Complement {
  Blade op;
  bool isometric = true;
};

struct InvolutionSystem {
  Signature sig;
  std::vector<Blade> involutions;
  std::vector<Complement> complements;
  // Operators listed beside the complements that commute with every involution
  // (they exhibit neutrality of E but are not complements).
  std::vector<Complement> commuting_extras;
  CaseTag case_tag = CaseTag::generic;
  // Dimension of E printed next to the system, when the tables give one.
  std::optional<int> listed_dim_E;
};

bool is_split(Signature sig);
bool is_basic(Signature sig);
std::vector<Signature> basic_signatures();

// Systems for the basic cases. Non-basic signatures go through the periodicity module.
InvolutionSystem catalog_lookup(Signature sig);
int count_involutions(Signature sig);

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct ValidationReport {
  Signature sig;
  std::vector<Check> checks;
  bool ok() const;
  std::vector<Check> failures() const;
};

ValidationReport validate_system(const InvolutionSystem& sys);

// Element of the signed subgroup generated by (lambda_i, P_i); `word` records which generators.
struct SubgroupElement {
  Blade blade;
  std::uint32_t word = 0;
};

// Enumerates the subgroup generated by the signed involutions. Throws if it contains (-1, {}).
std::vector<SubgroupElement> signed_subgroup(const std::vector<Blade>& gens, const std::vector<int>& lambdas,
                                             Signature sig);

// Complement order as printed for the three periodicity signatures, before reordering.
std::vector<Complement> printed_periodicity_complements(Signature sig);

// The system exactly as printed, for the rows where the catalog corrects the tables.
std::optional<InvolutionSystem> printed_system(Signature sig);

}  // namespace pseudoh
