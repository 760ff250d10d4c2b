#include "helpers.hpp"
#include "oracles.hpp"

#include "ncng/errors.hpp"
#include "ncng/gf2k.hpp"

#include <doctest.h>

using namespace ncng;

TEST_SUITE("group_core") {
  TEST_CASE("atom orders") {
    const std::pair<const char*, std::size_t> cases[] = {
        {"C(7)", 7},      {"D(6)", 12},      {"S(4)", 24},     {"A(5)", 60},          {"Q8", 8},
        {"SL23", 24},     {"AGL(1,5)", 20},  {"AGL(1,7)", 42}, {"SzP(3)", 64},        {"SzB(3,7)", 448},
        {"C(2)xS(3)", 12}, {"S(3)xAGL(1,5)", 120}, {"SD(N=C(3),H=S(3),act=h1->[n1^-1])", 18},
        {"Perm[(1,2,3);(1,2)]", 6},
    };
    for (const auto& [spec, order] : cases) {
      CAPTURE(spec);
      CHECK(test::make(spec).order() == order);
    }
  }

  TEST_CASE("element order histograms match known groups") {
    using H = std::map<std::size_t, std::size_t>;
    CHECK(oracle::order_histogram(test::make("S(4)")) == H{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
    CHECK(oracle::order_histogram(test::make("Q8")) == H{{1, 1}, {2, 1}, {4, 6}});
    CHECK(oracle::order_histogram(test::make("SL23")) == H{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}});
    CHECK(oracle::order_histogram(test::make("A(5)")) == H{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
    CHECK(oracle::order_histogram(test::make("D(6)")) == H{{1, 1}, {2, 7}, {3, 2}, {6, 2}});
    CHECK(oracle::order_histogram(test::make("AGL(1,5)")) == H{{1, 1}, {2, 5}, {4, 10}, {5, 4}});
    CHECK(oracle::order_histogram(test::make("SzP(3)")) == H{{1, 1}, {2, 7}, {4, 56}});
    CHECK(oracle::order_histogram(test::make("SzB(3,7)")) == H{{1, 1}, {2, 7}, {4, 56}, {7, 384}});
  }

  TEST_CASE("centre agrees with brute force") {
    for (const char* spec : {"S(4)", "Q8", "SL23", "D(6)", "SzP(3)", "SzB(3,7)", "C(2)xC(2)xS(3)", "Q8xC(4)"}) {
      CAPTURE(spec);
      const auto g = test::make(spec);
      const auto z = center(g);
      CHECK(z.order() == oracle::count(oracle::center(g)));
      for (Elem x = 0; x < g.order(); ++x) CHECK(z.contains(x) == oracle::center(g)[x]);
    }
    CHECK(center(test::make("SzP(3)")).order() == 8);
    CHECK(center(test::make("SzB(3,7)")).is_trivial());
  }

  TEST_CASE("identity, labels and deterministic numbering") {
    const auto a = test::make("S(3)xAGL(1,5)");
    const auto b = test::make("S(3)xAGL(1,5)");
    CHECK(a.identity() == 0);
    CHECK(a.labels() == b.labels());
    for (Elem x = 0; x < a.order(); ++x) {
      CHECK(a.find(a.label(x)) == x);
      CHECK(a.mul(x, a.inv(x)) == a.identity());
    }
  }

  TEST_CASE("conjugacy classes partition the group") {
    const auto g = test::make("S(4)");
    const auto cc = conjugacy_classes(g);
    CHECK(cc.classes.size() == 5);
    std::size_t total = 0;
    for (const auto& c : cc.classes) total += c.size();
    CHECK(total == 24);
  }

  TEST_CASE("quotients") {
    const auto g = test::make("S(4)");
    const auto cc = conjugacy_classes(g);
    std::vector<Elem> v4{0};
    for (const auto& c : cc.classes) {
      if (c.size() == 3 && g.element_order(c.front()) == 2) v4.insert(v4.end(), c.begin(), c.end());
    }
    const auto n = SubgroupSet(make_set(g.order(), v4));
    const auto q = quotient(g, n);
    CHECK(q.group.order() == 6);
    CHECK_FALSE(q.group.is_abelian());
    for (Elem x = 0; x < g.order(); ++x) {
      for (Elem y = 0; y < g.order(); ++y) {
        CHECK(q.projection[g.mul(x, y)] == q.group.mul(q.projection[x], q.projection[y]));
      }
    }
    std::vector<Elem> transposition{0};
    for (const auto& c : cc.classes) {
      if (c.size() == 6 && g.element_order(c.front()) == 2) transposition.push_back(c.front());
    }
    CHECK_THROWS_AS(quotient(g, SubgroupSet(make_set(g.order(), transposition))), NotNormal);
  }

  TEST_CASE("construction errors") {
    CHECK_THROWS_AS(test::make("S(8)"), OrderCapExceeded);
    CHECK_THROWS_AS(test::make("C(100)", 50), OrderCapExceeded);
    CHECK_THROWS_AS(test::make("AGL(1,6)"), InvalidSpec);
    CHECK_THROWS_AS(test::make("SzB(3,5)"), NotPrimitiveDivisor);
    CHECK_THROWS_AS(test::make("SD(N=C(4),H=C(2),act=h1->[n1^2])"), InvalidAction);
    CHECK_THROWS_AS(test::make("SD(N=C(3),H=C(2),act=h1->[n1])x"), SyntaxError);
  }
}

TEST_SUITE("group_spec") {
  TEST_CASE("parse examples") {
    const auto s4 = parse_spec("S(4)");
    const auto* atom = std::get_if<Atom>(&s4.node);
    REQUIRE(atom);
    CHECK(atom->kind == AtomKind::symmetric);
    CHECK(atom->params == std::vector<unsigned>{4});

    const auto prod = parse_spec("C(2)xC(2)xS(3)");
    const auto* p = std::get_if<Product>(&prod.node);
    REQUIRE(p);
    CHECK(p->factors.size() == 3);

    const auto sz = parse_spec("SzB(3,7)");
    REQUIRE(std::get_if<Atom>(&sz.node));
    CHECK(std::get<Atom>(sz.node).kind == AtomKind::suzuki_borel);
    CHECK(std::get<Atom>(sz.node).params == std::vector<unsigned>{3, 7});
  }

  TEST_CASE("render round-trips") {
    for (const char* spec : {"S(4)", "C(2)xC(2)xS(3)", "SzB(3,7)", "SD(N=C(3),H=AGL(1,5),act=h2->[n1^-1])",
                             "(C(2)xS(3))xQ8", "Perm[(1,2,3,4);(1,2)]", "SD(N=C(3)xC(3),H=C(3),act=h1->[n1,n1*n2])"}) {
      CAPTURE(spec);
      const auto parsed = parse_spec(spec);
      CHECK(parse_spec(render(parsed)) == parsed);
    }
  }

  TEST_CASE("syntax errors carry a position and expected tokens") {
    try {
      parse_spec("S(4");
      FAIL("no error");
    } catch (const SyntaxError& e) {
      CHECK(e.position == 3);
      CHECK_FALSE(e.expected.empty());
    }
    CHECK_THROWS_AS(parse_spec(""), SyntaxError);
    CHECK_THROWS_AS(parse_spec("X(3)"), SyntaxError);
    CHECK_THROWS_AS(parse_spec("C(2)x"), SyntaxError);
  }
}

TEST_SUITE("gf2k") {
  TEST_CASE("field axioms in degree 3, 5 and 7") {
    for (unsigned k : {3u, 5u, 7u}) {
      CAPTURE(k);
      const GF2kField f(k);
      const auto w = f.primitive_element();
      CHECK(f.multiplicative_order(w) == f.size() - 1);
      for (GF2kField::Element a = 1; a < f.size(); ++a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(gf_theta(f, gf_theta(f, a)) == f.mul(a, a));
      }
    }
  }

  TEST_CASE("Suzuki product is associative and the torus acts by automorphisms") {
    const GF2kField f(3);
    const auto kappa = torus_element(f, 7);
    CHECK(f.multiplicative_order(kappa) == 7);
    for (GF2kField::Element a = 0; a < 8; ++a) {
      for (GF2kField::Element c = 0; c < 8; ++c) {
        const SuzukiPoint x{a, 3}, y{c, 5}, z{static_cast<GF2kField::Element>((a + c) % 8), 6};
        CHECK(suzuki_mul(f, suzuki_mul(f, x, y), z) == suzuki_mul(f, x, suzuki_mul(f, y, z)));
        CHECK(suzuki_torus_action(f, kappa, suzuki_mul(f, x, y)) ==
              suzuki_mul(f, suzuki_torus_action(f, kappa, x), suzuki_torus_action(f, kappa, y)));
        CHECK(suzuki_mul(f, x, suzuki_inverse(f, x)) == SuzukiPoint{});
      }
    }
    CHECK_THROWS_AS(gf_theta(GF2kField(4, 0b10011), 3), EvenDegree);
    CHECK_THROWS_AS(torus_element(f, 5), NotPrimitiveDivisor);
  }
}
