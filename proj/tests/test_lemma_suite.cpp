#include "helpers.hpp"

#include "ncng/check.hpp"
#include "ncng/lemma_suite.hpp"

#include <doctest.h>

#include <set>

using namespace ncng;

namespace {

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& name) {
  for (const auto& r : rs) {
    if (r.name == name) return r;
  }
  FAIL("missing check " << name);
  return rs.front();
}

}  // namespace

TEST_SUITE("check") {
  TEST_CASE("status rules") {
    Checker empty("a");
    CHECK(empty.finish().status == CheckStatus::vacuous);

    Checker ok("b");
    ok.expect(true);
    CHECK(ok.finish().status == CheckStatus::pass);

    Checker bad("c");
    bad.expect(true);
    for (int i = 0; i < 10; ++i) bad.expect(false, "note");
    const auto r = bad.finish();
    CHECK(r.status == CheckStatus::fail);
    CHECK(r.failures == 10);
    CHECK(r.configurations == 11);
    CHECK(r.notes.size() == Checker::kMaxNotes);
    CHECK_FALSE(r.ok());

    Checker skip("d");
    skip.skip("too big");
    CHECK(skip.finish().status == CheckStatus::skipped);

    Checker merged("e");
    merged.absorb(r);
    CHECK(merged.finish().failures == 10);
  }

  TEST_CASE("status strings round-trip") {
    for (auto s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::vacuous, CheckStatus::skipped}) {
      CHECK(parse_check_status(to_string(s)) == s);
    }
    CHECK_FALSE(parse_check_status("maybe"));
  }
}

TEST_SUITE("lemma_suite") {
  TEST_CASE("names are unique and reported in order") {
    const auto& names = lemma_suite_names();
    CHECK(names.size() == 37);
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
    GroupContext ctx(test::make("S(4)"));
    const auto rs = lemma_suite(ctx);
    REQUIRE(rs.size() == names.size());
    for (std::size_t i = 0; i < rs.size(); ++i) CHECK(rs[i].name == names[i]);
  }

  TEST_CASE("no failures on the worked examples") {
    for (const char* spec : {"S(4)", "C(2)xC(2)xS(3)", "S(3)xS(3)", "SD(N=C(3),H=S(3),act=h1->[n1^-1])", "D(6)",
                             "C(2)xAGL(1,5)", "SD(N=C(3),H=AGL(1,5),act=h2->[n1^-1])", "S(3)xAGL(1,5)", "SzB(3,7)",
                             "SL23", "Q8", "S(5)"}) {
      CAPTURE(spec);
      GroupContext ctx(test::make(spec));
      for (const auto& r : lemma_suite(ctx)) {
        CAPTURE(r.name);
        CHECK(r.status != CheckStatus::fail);
      }
    }
  }

  TEST_CASE("vacuous checks are distinguished from passes") {
    GroupContext q8(test::make("Q8"));
    const auto rs = lemma_suite(q8);
    CHECK(find(rs, "no_component_of_diameter_one").status == CheckStatus::vacuous);
    CHECK(find(rs, "no_edge_iff_proper_subgroups_abelian").status == CheckStatus::pass);

    GroupContext szb(test::make("SzB(3,7)"));
    const auto sz = lemma_suite(szb);
    CHECK(find(sz, "witness_link_to_normal_centraliser").status == CheckStatus::pass);
    CHECK(find(sz, "component_is_centraliser_minus_centre").status == CheckStatus::pass);
    CHECK(find(sz, "frattini_is_non_generators").status == CheckStatus::skipped);
  }

  TEST_CASE("lattice-dependent checks are skipped above the lattice cap") {
    GroupContext ctx(test::make("S(4)"), 10);
    const auto rs = lemma_suite(ctx);
    CHECK(find(rs, "ore_equivalences").status == CheckStatus::skipped);
    CHECK(find(rs, "no_component_of_diameter_one").status == CheckStatus::pass);
    CHECK(find(rs, "adjacency_oracle_agreement").status != CheckStatus::fail);
  }

  TEST_CASE("size limits are configurable") {
    GroupContext ctx(test::make("S(4)"));
    SuiteOptions opts;
    opts.frattini_order_limit = 10;
    CHECK(find(lemma_suite(ctx, opts), "frattini_is_non_generators").status == CheckStatus::skipped);
    opts.frattini_order_limit = 24;
    CHECK(find(lemma_suite(ctx, opts), "frattini_is_non_generators").status == CheckStatus::pass);
  }
}
