#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pseudoh/io.hpp"

using namespace pseudoh;

namespace {

int parse_metric(const std::string& text) {
  if (text == "+" || text == "+1" || text == "plus") return 1;
  if (text == "-" || text == "-1" || text == "minus") return -1;
  throw InputError("metric must be + or -");
}

Branch parse_branch(const std::string& text) {
  if (text == "plus" || text == "+") return Branch::plus;
  if (text == "minus" || text == "-") return Branch::minus;
  if (text == "none") return Branch::none;
  throw InputError("branch must be plus, minus or none");
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_dims_table(bool cross) {
  std::cout << (cross ? render_cross_table() : render_table1_csv());
  return 0;
}

int cmd_catalog_verify() {
  bool all = true;
  for (Signature sig : basic_signatures()) {
    ValidationReport rep = validate_system(catalog_lookup(sig));
    std::cout << sig.r << ',' << sig.s << ',' << (rep.ok() ? "ok" : "FAIL");
    for (const auto& c : rep.failures()) std::cout << ',' << c.name << (c.detail.empty() ? "" : ": " + c.detail);
    std::cout << '\n';
    all &= rep.ok();
  }
  return all ? 0 : 1;
}

int cmd_build(const std::vector<int>& rs, const std::string& metric, const std::string& branch,
              const std::string& sum) {
  AdmissibleModule mod;
  if (!sum.empty()) {
    mod = build_spec_module(sum);
  } else {
    if (rs.size() != 2) throw InputError("build needs r s or --sum");
    mod = build_extended_minimal(make_spec(make_signature(rs[0], rs[1]), parse_metric(metric), parse_branch(branch)));
  }
  HTypeAlgebra alg = build_algebra(mod);
  AlgebraCheck chk = check_algebra(alg);
  if (!chk.ok) throw VerificationError("algebra axioms fail: " + chk.failures.front());
  print(algebra_json(alg));
  return 0;
}

int cmd_classify(const std::string& a, const std::string& b) {
  HTypeAlgebra src(build_spec_module(a));
  HTypeAlgebra dst(build_spec_module(b));
  Signature sa = src.sig(), sb = dst.sig();
  ClassificationVerdict v;
  if (sa == sb) v = classify(src, dst);
  else if (sa.r == sb.s && sa.s == sb.r) v = classify_cross(src, dst);
  else throw InputError("signatures must be equal or transposed");
  print(verdict_json(v, a, b));
  return 0;
}

int cmd_verify_iso(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (j.contains("certificate")) j = j["certificate"];
  Certificate cert = certificate_from_json(j);
  HTypeAlgebra src(build_spec_module(cert.src));
  HTypeAlgebra dst(build_spec_module(cert.dst));
  VerifyResult r = verify_isomorphism_detail(cert.morphism, src, dst);
  std::cout << (r.ok ? "verified" : "FAILED: " + r.detail) << '\n';
  return r.ok ? 0 : 1;
}

int cmd_eigen_report() {
  bool all = true;
  std::cout << "r,s,dim_E,n_plus,n_minus,tag,listed_dim_E,match\n";
  for (Signature sig : basic_signatures()) {
    InvolutionSystem sys = catalog_lookup(sig);
    AdmissibleModule mod = build_minimal(make_spec(sig, 1, is_split(sig) ? Branch::plus : Branch::none));
    EigenspaceReport e = common_one_eigenspace(mod);
    std::string listed = sys.listed_dim_E ? std::to_string(*sys.listed_dim_E) : "-";
    std::string match = sys.listed_dim_E ? (*sys.listed_dim_E == e.dim_E ? "yes" : "no") : "-";
    all &= match != "no";
    std::cout << sig.r << ',' << sig.s << ',' << e.dim_E << ',' << e.n_plus << ',' << e.n_minus << ','
              << (e.tag == SignTag::neutral ? "N" : "±") << ',' << listed << ',' << match << '\n';
  }
  return all ? 0 : 1;
}

int cmd_extend(const std::string& spec, const std::string& step_text) {
  Signature st = parse_signature(step_text);
  PeriodicityStep step = make_step(st.r, st.s);
  AdmissibleModule V = build_spec_module(spec);
  AdmissibleModule W = tensor_extend_module(V, step);
  print(extended_module_json(W, V.sig, step));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Admissible Clifford modules and pseudo H-type algebras"};
  app.require_subcommand(1);

  bool cross = false;
  auto* dims = app.add_subcommand("dims-table", "Dimension table as CSV");
  dims->add_flag("--cross", cross, "Emit the final cross-signature classification table instead");

  auto* cat = app.add_subcommand("catalog-verify", "Validate every involution system of the catalog");

  std::vector<int> rs;
  std::string metric = "+", branch = "none", sum;
  auto* build = app.add_subcommand("build", "Build a module and its algebra as JSON");
  build->add_option("rs", rs, "r s")->expected(0, 2);
  build->add_option("--metric", metric, "+ or -");
  build->add_option("--branch", branch, "plus, minus or none");
  build->add_option("--sum", sum, "Module spec such as 3,0:+,plus*2+3,0:-,minus");

  std::string spec_a, spec_b;
  auto* cls = app.add_subcommand("classify", "Decide isomorphism of two algebras");
  cls->add_option("src", spec_a)->required();
  cls->add_option("dst", spec_b)->required();

  std::string cert_path;
  auto* ver = app.add_subcommand("verify-iso", "Re-check a certificate JSON file");
  ver->add_option("certificate", cert_path)->required();

  auto* eig = app.add_subcommand("eigen-report", "Common 1-eigenspaces against the catalog");

  std::string ext_spec, step_text;
  auto* ext = app.add_subcommand("extend", "Tensor a module with a periodicity step");
  ext->add_option("spec", ext_spec)->required();
  ext->add_option("--step", step_text, "8,0 or 0,8 or 4,4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dims) return cmd_dims_table(cross);
    if (*cat) return cmd_catalog_verify();
    if (*build) return cmd_build(rs, metric, branch, sum);
    if (*cls) return cmd_classify(spec_a, spec_b);
    if (*ver) return cmd_verify_iso(cert_path);
    if (*eig) return cmd_eigen_report();
    if (*ext) return cmd_extend(ext_spec, step_text);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
