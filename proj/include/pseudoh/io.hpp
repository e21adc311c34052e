#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "pseudoh/classify.hpp"
#include "pseudoh/periodicity.hpp"

namespace pseudoh {

using Json = nlohmann::ordered_json;

Signature parse_signature(const std::string& text);

struct SpecTerm {
  ModuleSpec spec;
  int multiplicity = 1;
};

// r,s:sign,branch[*k][+more]; "r,s:sign" stands for branch none.
std::vector<SpecTerm> parse_module_spec(const std::string& text);
std::string format_module_spec(const std::vector<SpecTerm>& terms);
AdmissibleModule build_spec_module(const std::vector<SpecTerm>& terms);
AdmissibleModule build_spec_module(const std::string& text);

Json catalog_json(const InvolutionSystem& sys);
Json module_json(const AdmissibleModule& mod);
Json extended_module_json(const AdmissibleModule& mod, Signature base, const PeriodicityStep& step);
Json algebra_json(const HTypeAlgebra& alg);

Json matrix_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

struct Certificate {
  std::string src;
  std::string dst;
  LieMorphism morphism;
  bool verified = false;
};

Json certificate_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);
Json verdict_json(const ClassificationVerdict& v, const std::string& src, const std::string& dst);

}  // namespace pseudoh
