#include "pseudoh/io.hpp"

#include <charconv>

namespace pseudoh {

namespace {

int parse_int(const std::string& text, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw InputError("bad " + what + " '" + text + "'");
  return v;
}

std::vector<std::string> split_terms(const std::string& text) {
  // '+' separates terms unless it is a metric sign right after ':'.
  std::vector<std::string> out(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '+' && i > 0 && text[i - 1] != ':') {
      out.emplace_back();
      continue;
    }
    out.back() += c;
  }
  return out;
}

}  // namespace

Signature parse_signature(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("signature must be r,s: '" + text + "'");
  return make_signature(parse_int(text.substr(0, comma), "r"), parse_int(text.substr(comma + 1), "s"));
}

std::vector<SpecTerm> parse_module_spec(const std::string& text) {
  std::vector<SpecTerm> out;
  for (const std::string& term : split_terms(text)) {
    auto colon = term.find(':');
    if (colon == std::string::npos) throw InputError("module term needs r,s:sign: '" + term + "'");
    Signature sig = parse_signature(term.substr(0, colon));
    std::string rest = term.substr(colon + 1);
    int mult = 1;
    if (auto star = rest.find('*'); star != std::string::npos) {
      mult = parse_int(rest.substr(star + 1), "multiplicity");
      if (mult < 1) throw InputError("multiplicity must be positive");
      rest = rest.substr(0, star);
    }
    if (rest.empty() || (rest[0] != '+' && rest[0] != '-')) throw InputError("metric sign must be + or -");
    int sign = rest[0] == '+' ? 1 : -1;
    Branch branch = Branch::none;
    if (rest.size() > 1) {
      if (rest[1] != ',') throw InputError("expected ',' after the metric sign in '" + term + "'");
      std::string b = rest.substr(2);
      if (b == "plus") branch = Branch::plus;
      else if (b == "minus") branch = Branch::minus;
      else if (b != "none") throw InputError("branch must be plus, minus or none: '" + b + "'");
    }
    out.push_back({make_spec(sig, sign, branch), mult});
  }
  for (const auto& t : out)
    if (!(t.spec.sig == out.front().spec.sig)) throw InputError("all terms must share a signature");
  return out;
}

std::string format_module_spec(const std::vector<SpecTerm>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += "+";
    out += to_string(t.spec);
    if (t.multiplicity != 1) out += "*" + std::to_string(t.multiplicity);
  }
  return out;
}

AdmissibleModule build_spec_module(const std::vector<SpecTerm>& terms) {
  if (terms.empty()) throw InputError("empty module spec");
  std::vector<AdmissibleModule> parts;
  for (const auto& t : terms) {
    AdmissibleModule m = build_extended_minimal(t.spec);
    for (int k = 0; k < t.multiplicity; ++k) parts.push_back(m);
  }
  return parts.size() == 1 ? parts.front() : direct_sum(parts);
}

AdmissibleModule build_spec_module(const std::string& text) { return build_spec_module(parse_module_spec(text)); }

Json catalog_json(const InvolutionSystem& sys) {
  Json j;
  j["r"] = sys.sig.r;
  j["s"] = sys.sig.s;
  Json inv = Json::array();
  for (const auto& p : sys.involutions) inv.push_back(indices_of(p.mask));
  j["involutions"] = inv;
  Json co = Json::array();
  for (const auto& c : sys.complements) co.push_back({{"indices", indices_of(c.op.mask)}, {"isometric", c.isometric}});
  j["complements"] = co;
  j["case_tag"] = sys.case_tag == CaseTag::split ? "split" : "generic";
  return j;
}

Json module_json(const AdmissibleModule& mod) {
  Json j;
  j["r"] = mod.sig.r;
  j["s"] = mod.sig.s;
  if (mod.minimal()) {
    j["metric_sign"] = mod.summands.front().spec.metric_sign;
    j["branch"] = to_string(mod.summands.front().spec.branch);
  } else {
    Json parts = Json::array();
    for (const auto& s : mod.summands) parts.push_back(to_string(s.spec));
    j["summands"] = parts;
  }
  j["dim"] = mod.dim();
  j["basis"] = mod.basis;
  j["metric"] = mod.metric;
  Json actions = Json::array();
  for (const auto& J : mod.actions) actions.push_back({{"perm", J.perm}, {"signs", J.sign}});
  j["actions"] = actions;
  return j;
}

Json extended_module_json(const AdmissibleModule& mod, Signature base, const PeriodicityStep& step) {
  Json j = module_json(mod);
  j["extended_from"] = {{"r", base.r}, {"s", base.s}};
  j["step"] = std::to_string(step.mu) + "," + std::to_string(step.nu);
  return j;
}

Json algebra_json(const HTypeAlgebra& alg) {
  Json j;
  j["r"] = alg.sig().r;
  j["s"] = alg.sig().s;
  j["dimU"] = alg.dim_u();
  Json c = Json::array();
  for (int i = 0; i < alg.dim_u(); ++i)
    for (int k = 1; k <= alg.dim_z(); ++k) {
      int p = alg.partner(i, k);
      if (p > i) c.push_back({i, p, k, alg.partner_value(i, k)});
    }
  j["c"] = c;
  j["module"] = module_json(alg.module());
  return j;
}

Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("matrix must be a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols) throw InputError("ragged matrix");
    for (int k = 0; k < cols; ++k) {
      const Json& e = j[i][k];
      if (e.is_string()) m(i, k) = parse_rational(e.get<std::string>());
      else if (e.is_number_integer()) m(i, k) = e.get<long>();
      else throw InputError("matrix entries must be rational strings");
    }
  }
  return m;
}

Json certificate_json(const Certificate& cert) {
  Json j;
  j["src"] = cert.src;
  j["dst"] = cert.dst;
  j["A"] = matrix_json(cert.morphism.A);
  j["C"] = matrix_json(cert.morphism.C);
  j["verified"] = cert.verified;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  try {
    Certificate c;
    c.src = j.at("src").get<std::string>();
    c.dst = j.at("dst").get<std::string>();
    c.morphism.A = matrix_from_json(j.at("A"));
    c.morphism.C = matrix_from_json(j.at("C"));
    c.verified = j.value("verified", false);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

Json verdict_json(const ClassificationVerdict& v, const std::string& src, const std::string& dst) {
  Json j;
  j["related"] = to_string(v.related);
  j["reason"] = to_string(v.reason);
  if (v.certificate) j["certificate"] = certificate_json(Certificate{src, dst, *v.certificate, true});
  return j;
}

}  // namespace pseudoh
