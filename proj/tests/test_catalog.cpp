#include <doctest.h>

#include "oracle.hpp"
#include "pseudoh/catalog.hpp"

using namespace pseudoh;

namespace {

std::vector<Mask> masks(const std::vector<Blade>& bs) {
  std::vector<Mask> out;
  for (auto b : bs) out.push_back(b.mask);
  return out;
}

bool has_failure(const ValidationReport& rep, const std::string& fragment) {
  for (const auto& c : rep.failures())
    if (c.name.find(fragment) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("basic signatures") {
  auto all = basic_signatures();
  CHECK(all.size() == 50);
  CHECK(is_basic({7, 3}));
  CHECK(is_basic({3, 7}));
  CHECK(is_basic({4, 4}));
  CHECK_FALSE(is_basic({4, 5}));
  CHECK_FALSE(is_basic({8, 1}));
  CHECK_THROWS_AS(catalog_lookup({9, 0}), InputError);
}

TEST_CASE("table rows") {
  auto s70 = catalog_lookup({7, 0});
  CHECK(masks(s70.involutions) == std::vector<Mask>{mask_of({1, 2, 3, 4}), mask_of({1, 2, 5, 6}),
                                                     mask_of({1, 3, 5, 7}), mask_of({5, 6, 7})});
  REQUIRE(s70.complements.size() == 3);
  CHECK(s70.complements[0].op.mask == mask_of({1}));
  CHECK(s70.complements[1].op.mask == mask_of({1, 3}));
  CHECK(s70.complements[2].op.mask == mask_of({1, 2}));
  for (const auto& c : s70.complements) CHECK(c.isometric);

  auto s30 = catalog_lookup({3, 0});
  CHECK(masks(s30.involutions) == std::vector<Mask>{mask_of({1, 2, 3})});
  CHECK(s30.complements.empty());
  CHECK(s30.case_tag == CaseTag::split);
  auto s12 = catalog_lookup({1, 2});
  CHECK(masks(s12.involutions) == masks(s30.involutions));
  CHECK(s12.case_tag == CaseTag::split);
  CHECK(s12.complements.empty());

  CHECK(catalog_lookup({1, 0}).involutions.empty());
  CHECK(catalog_lookup({0, 1}).involutions.empty());
  CHECK(catalog_lookup({2, 0}).involutions.empty());
}

TEST_CASE("involution counts") {
  CHECK(count_involutions({7, 0}) == 4);
  CHECK(count_involutions({3, 0}) == 1);
  CHECK(count_involutions({2, 0}) == 0);
  CHECK(count_involutions({8, 0}) == 4);
  CHECK(count_involutions({0, 8}) == 4);
  CHECK(count_involutions({4, 4}) == 4);
}

TEST_CASE("listed eigenspace dimensions") {
  CHECK(catalog_lookup({6, 0}).listed_dim_E == 1);
  CHECK(catalog_lookup({1, 6}).listed_dim_E == 4);
  CHECK(catalog_lookup({3, 4}).listed_dim_E == 1);
}

TEST_CASE("every catalog system validates") {
  for (Signature sig : basic_signatures()) {
    auto rep = validate_system(catalog_lookup(sig));
    INFO(to_string(sig));
    for (const auto& f : rep.failures()) INFO(f.name);
    CHECK(rep.ok());
  }
}

TEST_CASE("periodicity system with its complements validates") {
  InvolutionSystem s80 = catalog_lookup({8, 0});
  CHECK(masks(s80.involutions) == std::vector<Mask>{mask_of({1, 2, 3, 4}), mask_of({1, 2, 5, 6}),
                                                     mask_of({1, 2, 7, 8}), mask_of({1, 3, 5, 7})});
  CHECK(validate_system(s80).ok());
}

TEST_CASE("mutating P1 of (7,0) breaks commutation with P3") {
  InvolutionSystem sys = catalog_lookup({7, 0});
  sys.involutions[0] = make_blade({1, 2, 3, 5});
  auto rep = validate_system(sys);
  CHECK_FALSE(rep.ok());
  CHECK(has_failure(rep, "P1=+z1*z2*z3*z5 commutes with P3"));
  CHECK(oracle::mul({1, {1, 2, 3, 5}}, {1, {1, 3, 5, 7}}, 7).sign ==
        -oracle::mul({1, {1, 3, 5, 7}}, {1, {1, 2, 3, 5}}, 7).sign);
}

TEST_CASE("rows as printed fail exactly where the catalog corrects them") {
  int corrected = 0;
  for (Signature sig : basic_signatures()) {
    auto printed = printed_system(sig);
    if (!printed) continue;
    ++corrected;
    INFO(to_string(sig));
    CHECK_FALSE(validate_system(*printed).ok());
    CHECK(validate_system(catalog_lookup(sig)).ok());
  }
  CHECK(corrected == 9);
  CHECK(has_failure(validate_system(*printed_system({7, 1})), "P1=+z1*z2*z3*z4 commutes with P4"));
  CHECK(has_failure(validate_system(*printed_system({5, 0})), "C2=+z1 anticommutes with P2"));
  CHECK(has_failure(validate_system(*printed_system({6, 0})), "C3=+z2*z4"));
  CHECK(has_failure(validate_system(*printed_system({8, 0})), "C3=+z3*z4 anticommutes with P3"));
}

TEST_CASE("the anti-isometric operator of (1,6) commutes with every involution") {
  InvolutionSystem sys = catalog_lookup({1, 6});
  REQUIRE(sys.commuting_extras.size() == 1);
  CHECK(sys.commuting_extras[0].op.mask == mask_of({2, 4, 6}));
  CHECK_FALSE(sys.commuting_extras[0].isometric);
  // Read as a third complement it would break the count of the split case.
  InvolutionSystem as_complement = sys;
  as_complement.complements.push_back(sys.commuting_extras[0]);
  as_complement.commuting_extras.clear();
  CHECK(has_failure(validate_system(as_complement), "complement count"));
}

TEST_CASE("property: involution subgroups have order 2^p and avoid -1") {
  for (Signature sig : basic_signatures()) {
    InvolutionSystem sys = catalog_lookup(sig);
    std::vector<oracle::Word> gens;
    for (auto p : sys.involutions) gens.push_back(oracle::from_blade(p));
    auto H = oracle::subgroup(gens, sig.r);
    INFO(to_string(sig));
    CHECK(H.size() == (std::size_t{1} << sys.involutions.size()));
    for (const auto& h : H) CHECK_FALSE((h.gens.empty() && h.sign == -1));
  }
}

TEST_CASE("property: split cases hold the volume form in the involution group") {
  for (Signature sig : basic_signatures()) {
    if (!is_split(sig) || sig.r + sig.s < 3) continue;
    InvolutionSystem sys = catalog_lookup(sig);
    REQUIRE(!sys.involutions.empty());
    CHECK(sys.involutions.back().grade() == 3);
    std::vector<oracle::Word> gens;
    for (auto p : sys.involutions) gens.push_back(oracle::from_blade(p));
    bool found = false;
    for (const auto& h : oracle::subgroup(gens, sig.r)) found |= static_cast<int>(h.gens.size()) == sig.n();
    INFO(to_string(sig));
    CHECK(found);
  }
}

TEST_CASE("signed subgroup rejects dependent involutions") {
  Signature sig{4, 0};
  std::vector<Blade> gens{make_blade({1, 2, 3, 4}), make_blade({1, 2, 3, 4})};
  CHECK_THROWS_AS(signed_subgroup(gens, {1, 1}, sig), InputError);
  CHECK_THROWS_AS(signed_subgroup(gens, {1, -1}, sig), InputError);
  CHECK(signed_subgroup({make_blade({1, 2, 3, 4})}, {-1}, sig).size() == 2);
}
