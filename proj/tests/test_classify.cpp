#include <doctest.h>

#include <map>
#include <sstream>

#include "golden.hpp"
#include "oracle.hpp"
#include "pseudoh/classify.hpp"
#include "pseudoh/io.hpp"

using namespace pseudoh;

namespace {

std::string cell_text(const Table1Cell& c) {
  std::string out = std::to_string(c.dim);
  if (c.two_modules) out += "x2";
  out += c.tag == SignTag::neutral ? "N" : "±";
  if (c.doubled) out += "*";
  return out;
}

ClassificationVerdict run(const std::string& a, const std::string& b) {
  HTypeAlgebra x(build_spec_module(a)), y(build_spec_module(b));
  return x.sig() == y.sig() ? classify(x, y) : classify_cross(x, y);
}

}  // namespace

TEST_CASE("dimension table against the printed table") {
  std::map<std::pair<int, int>, std::string> ours;
  for (const auto& c : table1()) ours[{c.sig.r, c.sig.s}] = cell_text(c);
  CHECK(ours.size() == 80);
  std::vector<std::pair<int, int>> differing;
  for (int s = 0; s <= 8; ++s)
    for (int r = 0; r <= 8; ++r) {
      if (r == 0 && s == 0) continue;
      const std::string& printed = golden::table1[8 - s][r];
      if (ours[{r, s}] != printed) differing.push_back({r, s});
    }
  // The printed tags of (6,5) and (7,5) are swapped against the eigenspace theorem.
  CHECK(differing == std::vector<std::pair<int, int>>{{6, 5}, {7, 5}});
  CHECK(ours[{6, 5}] == "128N*");
  CHECK(ours[{7, 5}] == "128±");
}

TEST_CASE("dimension table cells") {
  CHECK(table1_cell({7, 0}).dim == 8);
  CHECK(table1_cell({7, 0}).two_modules);
  CHECK(table1_cell({5, 1}).dim == 16);
  CHECK(table1_cell({5, 1}).tag == SignTag::neutral);
  CHECK(table1_cell({4, 4}).dim == 16);
  CHECK(table1_cell({8, 8}).dim == 256);
  CHECK_FALSE(table1_cell({1, 0}).doubled);
  CHECK(table1_cell({0, 1}).doubled);
}

TEST_CASE("dimension table CSV") {
  std::string csv = render_table1_csv();
  CHECK(csv.rfind("r,s,dim,x2,tag,doubling\n", 0) == 0);
  CHECK(csv.find("\n5,1,16,0,N,0\n") != std::string::npos);
  CHECK(csv.find("\n3,0,4,1,±,0\n") != std::string::npos);
  CHECK(csv == render_table1_csv());
}

TEST_CASE("cross table against the printed table") {
  std::string ours = render_cross_table();
  std::istringstream in(ours);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.push_back("");
    rows.push_back(cells);
  }
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == std::vector<std::string>{"s\\r", "0", "1", "2", "3iso", "3non", "4", "5", "6", "7iso", "7non", "8"});
  std::vector<std::pair<int, int>> differing;
  for (int i = 0; i < 9; ++i) {
    REQUIRE(rows[i + 1].size() == 12);
    CHECK(rows[i + 1][0] == std::to_string(8 - i));
    for (int c = 0; c < 11; ++c)
      if (rows[i + 1][c + 1] != golden::table6[i][c]) differing.push_back({8 - i, c});
  }
  // Row s = 8 prints the nonisotypic columns as isomorphic; the theorem excludes them.
  CHECK(differing == std::vector<std::pair<int, int>>{{8, 4}, {8, 9}});
  CHECK(rows[1][5] == "≇");
  CHECK(rows[1][10] == "≇");
}

TEST_CASE("cross rule") {
  CHECK(cross_rule(1, 0) == CrossRule::always);
  CHECK(cross_rule(3, 1) == CrossRule::never);
  CHECK(cross_rule(1, 3) == CrossRule::never);
  CHECK(cross_rule(3, 0) == CrossRule::isotypic_only);
  CHECK(cross_rule(0, 3) == CrossRule::isotypic_only);
  CHECK(cross_rule(7, 1) == CrossRule::isotypic_only);
  CHECK(cross_rule(7, 3) == CrossRule::never);
  CHECK(cross_rule(3, 4) == CrossRule::isotypic_only);
  CHECK(cross_rule(3, 7) == CrossRule::never);
}

TEST_CASE("governing theorem") {
  CHECK(governing_theorem({1, 5}) == 1);
  CHECK(governing_theorem({4, 3}) == 1);
  CHECK(governing_theorem({3, 0}) == 2);
  CHECK(governing_theorem({7, 4}) == 2);
  CHECK(governing_theorem({3, 1}) == 3);
  CHECK(governing_theorem({7, 2}) == 3);
}

TEST_CASE("classification examples") {
  auto v = run("5,0:+", "5,0:-");
  CHECK(v.related == Relation::isomorphic);
  CHECK(v.reason == Reason::theorem1);
  REQUIRE(v.certificate);

  v = run("3,0:+,plus*2", "3,0:+,plus+3,0:-,minus");
  CHECK(v.related == Relation::isomorphic);
  v = run("3,0:+,plus*2", "3,0:+,plus+3,0:+,minus");
  CHECK(v.related == Relation::not_isomorphic);
  CHECK(v.reason == Reason::det_obstruction);

  v = run("3,1:+", "3,1:-");
  CHECK(v.related == Relation::isomorphic);
  CHECK(v.reason == Reason::pq_swap);
  REQUIRE(v.certificate);
  CHECK(v.certificate->C == -RatMatrix::identity(4));

  v = run("3,1:+*2", "3,1:++3,1:-");
  CHECK(v.related == Relation::not_isomorphic);
  CHECK(v.reason == Reason::multiplicity_pair);

  // Opposite branches with equal metric are related by C = -Id.
  v = run("3,0:+,plus", "3,0:+,minus");
  CHECK(v.related == Relation::isomorphic);
  CHECK(v.reason == Reason::pq_swap);

  v = run("3,0:+,plus", "3,0:+,plus*2");
  CHECK(v.related == Relation::not_isomorphic);
  CHECK(v.reason == Reason::dimension);
}

TEST_CASE("cross-signature examples") {
  auto v = run("1,0:+", "0,1:+");
  CHECK(v.related == Relation::isomorphic);
  CHECK(v.reason == Reason::cross_table);
  v = run("3,1:+", "1,3:+");
  CHECK(v.related == Relation::not_isomorphic);
  v = run("3,0:+,plus*2", "0,3:+");
  CHECK(v.related == Relation::isomorphic);
  v = run("3,0:+,plus+3,0:+,minus", "0,3:+");
  CHECK(v.related == Relation::not_isomorphic);
  v = run("3,0:+,plus", "0,3:+");
  CHECK(v.related == Relation::not_isomorphic);
  CHECK(v.reason == Reason::dimension);
}

TEST_CASE("property: classify is symmetric and reflexive") {
  std::vector<std::string> specs = {"3,0:+,plus", "3,0:-,plus", "3,0:+,minus", "3,0:-,minus",
                                    "3,0:+,plus*2", "3,0:+,plus+3,0:-,minus", "3,0:+,plus+3,0:+,minus"};
  for (const auto& a : specs)
    for (const auto& b : specs) {
      auto ab = run(a, b), ba = run(b, a);
      INFO(a << " vs " << b);
      CHECK(ab.related == ba.related);
      CHECK(ab.reason == ba.reason);
      if (a == b) {
        REQUIRE(ab.certificate);
        CHECK(ab.certificate->A == RatMatrix::identity(ab.certificate->A.rows()));
        CHECK(ab.certificate->C == RatMatrix::identity(3));
      }
    }
}

TEST_CASE("property: emitted certificates pass the dense oracle") {
  for (Signature sig : {Signature{1, 2}, Signature{3, 0}, Signature{3, 1}, Signature{2, 1}, Signature{5, 0},
                        Signature{0, 3}}) {
    std::vector<ModuleSpec> specs;
    for (int m : {1, -1})
      for (Branch b : {Branch::plus, Branch::minus, Branch::none})
        if (is_split(sig) == (b != Branch::none)) specs.push_back(make_spec(sig, m, b));
    for (const auto& a : specs)
      for (const auto& b : specs)
        for (const auto& c : specs) {
          AdmissibleModule X = direct_sum({build_minimal(a), build_minimal(b)});
          AdmissibleModule Y = direct_sum({build_minimal(c), build_minimal(a)});
          auto v = classify(HTypeAlgebra(X), HTypeAlgebra(Y));
          if (v.certificate) CHECK(oracle::verify(*v.certificate, X, Y));
        }
  }
}

TEST_CASE("multiplicity pairs") {
  CHECK(multiplicity_pair(build_spec_module("3,0:+,plus*2+3,0:-,minus")) == std::make_pair(3, 0));
  CHECK(multiplicity_pair(build_spec_module("3,0:+,plus+3,0:+,minus")) == std::make_pair(1, 1));
  CHECK(multiplicity_pair(build_spec_module("3,1:+*2+3,1:-")) == std::make_pair(2, 1));
  CHECK(is_isotypic(build_spec_module("3,1:-*3")));
  CHECK_FALSE(is_isotypic(build_spec_module("3,1:-+3,1:+")));
}
