#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pseudoh/algebra.hpp"
#include "pseudoh/morphism.hpp"

namespace pseudoh {

enum class Relation { isomorphic, not_isomorphic };
enum class Reason { dimension, multiplicity_pair, pq_swap, det_obstruction, theorem1, cross_table };

std::string to_string(Relation r);
std::string to_string(Reason r);

struct ClassificationVerdict {
  Relation related = Relation::not_isomorphic;
  Reason reason = Reason::dimension;
  std::optional<LieMorphism> certificate;
};

// Which of the three classification theorems governs N_{r,s}: 1 for r = 0,1,2 mod 4,
// 2 for r = 3 mod 4 and s = 0 mod 4, 3 for the remaining r = 3 mod 4 cases.
int governing_theorem(Signature sig);

// Summand `index` of a module as a standalone minimal module.
AdmissibleModule extract_summand(const AdmissibleModule& mod, int index);

// Invariant class of a summand: isomorphic classes share a key under C = Id.
int summand_class(const AdmissibleModule& mod, int index);

// Certificate A + Id between two minimal modules: seed search, then descent from one signature up.
std::optional<LieMorphism> minimal_certificate(const AdmissibleModule& src, const AdmissibleModule& dst);

// Block certificate A + Id matching summands of equal class.
std::optional<LieMorphism> same_class_certificate(const AdmissibleModule& src, const AdmissibleModule& dst);

// The pair (p, q) of the second theorem or (p^+, p^-) of the third; (dim, 0) under the first.
std::pair<int, int> multiplicity_pair(const AdmissibleModule& mod);
bool is_isotypic(const AdmissibleModule& mod);

ClassificationVerdict classify(const HTypeAlgebra& src, const HTypeAlgebra& dst);

enum class CrossRule { always, isotypic_only, never };
// N_{r,s}(U) against N_{s,r}(U~) with equal dimensions.
CrossRule cross_rule(int r, int s);
ClassificationVerdict classify_cross(const HTypeAlgebra& src, const HTypeAlgebra& dst);

// Final classification table for 0 <= r,s <= 8 as CSV, rows s = 8..0.
std::string render_cross_table();

struct Table1Cell {
  Signature sig;
  int dim = 0;
  bool two_modules = false;  // the x2 subscript
  SignTag tag = SignTag::definite;
  bool doubled = false;      // dim V_min = 2 dim V_irr
};

Table1Cell table1_cell(Signature sig);
// All cells with 0 <= r,s <= 8 except (0,0), rows s = 8..0 and r ascending.
std::vector<Table1Cell> table1();
std::string render_table1_csv();

}  // namespace pseudoh
