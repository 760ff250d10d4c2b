#include "helpers.hpp"
#include "oracles.hpp"

#include "ncng/errors.hpp"
#include "ncng/subgroups.hpp"

#include <doctest.h>

using namespace ncng;

namespace {

oracle::Members members(const SubgroupSet& h) {
  oracle::Members m(h.ambient_order(), false);
  for (Elem x : h.elements()) m[x] = true;
  return m;
}

}  // namespace

TEST_SUITE("subgroups") {
  TEST_CASE("lattice matches brute-force enumeration") {
    for (const char* spec : {"S(4)", "Q8", "D(6)", "A(4)", "SL23", "AGL(1,5)", "C(2)xD(4)", "S(3)xS(3)",
                             "SD(N=C(3),H=S(3),act=h1->[n1^-1])", "D(8)", "C(2)xC(2)xC(2)", "SzP(3)"}) {
      CAPTURE(spec);
      const auto g = test::make(spec);
      const auto lattice = all_subgroups(g);
      const auto expected = oracle::all_subgroups(g);
      std::set<oracle::Members> got;
      for (const auto& h : lattice.subgroups()) got.insert(members(h));
      CHECK(got.size() == lattice.size());
      CHECK(got == expected);

      const auto md = maximal_data(g, lattice);
      std::set<oracle::Members> got_max, want_max;
      for (const auto& m : md.maximals) got_max.insert(members(m));
      const auto oracle_max = oracle::maximal_subgroups(g, expected);
      for (const auto& m : oracle_max) want_max.insert(m);
      CHECK(got_max == want_max);
      CHECK(members(md.frattini) == oracle::intersection(oracle_max, g.order()));

      std::size_t normal_count = 0;
      for (const auto& h : expected) normal_count += oracle::is_normal(g, h);
      CHECK(normal_subgroups(g, lattice).size() == normal_count);
    }
  }

  TEST_CASE("known subgroup counts") {
    CHECK(all_subgroups(test::make("S(4)")).size() == 30);
    CHECK(all_subgroups(test::make("A(4)")).size() == 10);
    CHECK(all_subgroups(test::make("Q8")).size() == 6);
    CHECK(all_subgroups(test::make("SL23")).size() == 15);
    CHECK(all_subgroups(test::make("D(6)")).size() == 16);
    CHECK(all_subgroups(test::make("A(5)")).size() == 59);
    CHECK(normal_subgroups(test::make("S(4)"), all_subgroups(test::make("S(4)"))).size() == 4);
  }

  TEST_CASE("canonical order is by order then members") {
    const auto lattice = all_subgroups(test::make("S(4)"));
    for (std::size_t i = 1; i < lattice.size(); ++i) CHECK(lattice[i - 1] < lattice[i]);
    CHECK(lattice[0].is_trivial());
    CHECK(lattice[lattice.size() - 1].is_whole());
    for (std::size_t i = 0; i < lattice.size(); ++i) CHECK(lattice.index_of(lattice[i].members()) == i);
  }

  TEST_CASE("maximal classes and cores") {
    const auto g = test::make("S(4)");
    const auto md = maximal_data(g, all_subgroups(g));
    CHECK(md.maximals.size() == 8);  // A4, four S3, three D8
    CHECK(md.classes.size() == 3);
    CHECK(md.frattini.is_trivial());
    for (std::size_t i = 0; i < md.maximals.size(); ++i) {
      CHECK(md.cores[i] == core(g, md.maximals[i]));
      CHECK(is_normal(g, md.cores[i]));
    }
  }

  TEST_CASE("closure, join and generating sets agree with brute force") {
    const auto g = test::make("S(3)xAGL(1,5)");
    for (Elem x = 0; x < g.order(); x += 7) {
      for (Elem y = 0; y < g.order(); y += 11) {
        const std::vector<Elem> seed{x, y};
        const auto h = closure(g, seed);
        CHECK(members(h) == oracle::generated(g, seed));
        const std::vector<Elem> one{x};
        const auto cx = closure(g, one);
        CHECK(join(g, cx, generating_set(g, cx), y) == h);
        CHECK(closure(g, generating_set(g, h)) == h);
      }
    }
  }

  TEST_CASE("Sylow subgroups") {
    const auto g = test::make("S(4)");
    CHECK(sylow(g, 2).order() == 8);
    CHECK(sylow(g, 3).order() == 3);
    CHECK_THROWS_AS(sylow(g, 5), PrimeNotDividing);
    CHECK(sylow(test::make("SzB(3,7)"), 2).order() == 64);
    CHECK(prime_divisors(448) == std::vector<unsigned>{2, 7});
  }

  TEST_CASE("two-generation") {
    CHECK(is_two_generated(test::make("S(4)")).two_generated);
    CHECK(is_two_generated(test::make("SzB(3,7)")).two_generated);
    CHECK_FALSE(is_two_generated(test::make("C(2)xC(2)xC(2)")).two_generated);
    CHECK_FALSE(is_two_generated(test::make("C(2)xC(2)xC(2)xS(3)")).two_generated);
    const auto g = test::make("S(3)xAGL(1,5)");
    const auto t = is_two_generated(g);
    REQUIRE(t.witness);
    CHECK(oracle::generates(g, t.witness->first, t.witness->second));
  }

  TEST_CASE("structure reports") {
    auto report = [](const char* spec) {
      const auto g = test::make(spec);
      const auto lattice = all_subgroups(g);
      return structure_report(g, lattice, maximal_data(g, lattice));
    };
    const auto agl = report("AGL(1,5)");
    CHECK(agl.is_soluble);
    CHECK(agl.is_primitive);
    CHECK(agl.all_proper_quotients_cyclic);
    CHECK_FALSE(agl.is_nilpotent);
    CHECK(agl.minimal_normals.size() == 1);

    const auto s4 = report("S(4)");
    CHECK(s4.is_soluble);
    CHECK(s4.is_primitive);
    CHECK_FALSE(s4.all_proper_quotients_cyclic);

    const auto d4 = report("D(4)");
    CHECK(d4.is_nilpotent);
    CHECK_FALSE(d4.is_primitive);

    const auto s5 = report("S(5)");
    CHECK_FALSE(s5.is_soluble);
    CHECK(s5.is_primitive);
    CHECK(s5.all_proper_quotients_cyclic);

    CHECK_FALSE(is_soluble(test::make("A(5)")));
    CHECK(is_soluble(test::make("SzB(3,7)")));
  }

  TEST_CASE("lattice cap") {
    CHECK_THROWS_AS(all_subgroups(test::make("S(5)"), 100), LatticeCapExceeded);
    GroupContext ctx(test::make("S(5)"), 100);
    CHECK_FALSE(ctx.lattice_available());
    CHECK(ctx.graph().oracle == GenerationOracle::closure);
  }
}
