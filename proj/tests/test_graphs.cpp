#include "helpers.hpp"
#include "oracles.hpp"

#include "ncng/corpus.hpp"
#include "ncng/errors.hpp"
#include "ncng/graphs.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace ncng;

namespace {

void check_against_oracle(GroupContext& ctx) {
  const auto& g = ctx.group();
  const auto naive = oracle::ncng_graph(g);
  const auto& graph = ctx.graph();
  REQUIRE(graph.vertex_count() == naive.vertices.size());
  std::size_t edges = 0;
  for (std::size_t i = 0; i < naive.vertices.size(); ++i) {
    const Elem x = naive.vertices[i];
    CHECK(graph.is_vertex(x));
    CHECK(graph.degree(x) == naive.adj[i].size());
    for (auto j : naive.adj[i]) CHECK(graph.adjacent(x, naive.vertices[j]));
    edges += naive.adj[i].size();
  }
  CHECK(graph.edge_count() * 2 == edges);

  const auto want = oracle::summarize(naive);
  const auto& sum = ctx.summary();
  CHECK(sum.component_count() == want.components);
  CHECK(sum.isolated_count == want.isolated);
  std::multiset<std::size_t> got_diameters;
  for (std::size_t c = 0; c < sum.components.size(); ++c) {
    if (sum.components[c].count() > 1) got_diameters.insert(sum.diameters[c]);
  }
  CHECK(got_diameters == want.nontrivial_diameters);
  CHECK(sum.diameter() == want.diameter);
  CHECK(sum.nd_diameter() == want.nd_diameter);
}

}  // namespace

TEST_SUITE("graphs") {
  TEST_CASE("ncng graph matches brute force on small groups") {
    for (const char* spec : {"S(4)", "D(6)", "Q8", "SL23", "AGL(1,5)", "C(2)xC(2)xS(3)", "SD(N=C(3),H=S(3),act=h1->[n1^-1])",
                             "S(3)xS(3)", "D(8)", "C(2)xD(4)"}) {
      CAPTURE(spec);
      GroupContext ctx(test::make(spec));
      check_against_oracle(ctx);
    }
  }

  TEST_CASE("other graph kinds follow their definitions") {
    const auto g = test::make("S(4)");
    GroupContext ctx(test::make("S(4)"));
    const auto& c = ctx.graph(GraphKind::commuting);
    const auto& nc = ctx.graph(GraphKind::non_commuting);
    const auto& gen = ctx.graph(GraphKind::generating);
    const auto& ng = ctx.graph(GraphKind::non_generating);
    for (Elem x = 1; x < g.order(); ++x) {
      for (Elem y = 1; y < g.order(); ++y) {
        if (x == y) continue;
        const bool commute = oracle::commute(g, x, y);
        const bool generates = oracle::generates(g, x, y);
        CHECK(c.adjacent(x, y) == commute);
        CHECK(nc.adjacent(x, y) == !commute);
        CHECK(gen.adjacent(x, y) == generates);
        CHECK(ng.adjacent(x, y) == !generates);
      }
    }
    CHECK(parse_graph_kind("non_generating") == GraphKind::non_generating);
    CHECK_FALSE(parse_graph_kind("bogus"));
  }

  TEST_CASE("maximal-membership and closure oracles agree") {
    for (const char* spec : {"S(4)", "SL23", "S(3)xAGL(1,5)", "SzP(3)"}) {
      CAPTURE(spec);
      GroupContext ctx(test::make(spec));
      const auto by_closure = build_graph(ctx.group(), GraphKind::ncng, nullptr);
      CHECK(by_closure.oracle == GenerationOracle::closure);
      CHECK(ctx.graph().oracle == GenerationOracle::maximal_membership);
      CHECK(by_closure.adjacency == ctx.graph().adjacency);
    }
  }

  TEST_CASE("symmetry-reduced BFS equals full BFS") {
    for (const char* spec : {"S(4)", "D(6)", "SD(N=C(3),H=AGL(1,5),act=h2->[n1^-1])", "D(16)", "SzB(3,7)"}) {
      CAPTURE(spec);
      GroupContext reduced(test::make(spec));
      GroupContext full(test::make(spec), kDefaultLatticeCap, true);
      CHECK(reduced.summary().diameters == full.summary().diameters);
      CHECK(reduced.summary().components == full.summary().components);
    }
  }

  TEST_CASE("distances") {
    GroupContext ctx(test::make("S(4)"));
    const auto& graph = ctx.graph();
    const auto& dm = ctx.distances();
    const auto naive = oracle::ncng_graph(ctx.group());
    for (std::size_t i = 0; i < naive.vertices.size(); ++i) {
      const auto d = oracle::bfs(naive, i);
      for (std::size_t j = 0; j < naive.vertices.size(); ++j) {
        CHECK(dm(naive.vertices[i], naive.vertices[j]) == d[j]);
        CHECK(distance(graph, naive.vertices[i], naive.vertices[j]) == static_cast<std::size_t>(d[j]));
      }
    }
    CHECK_THROWS_AS(distance(graph, 0, 1), NotAVertex);

    GroupContext two(test::make("SzB(3,7)"));
    const auto& sum = two.summary();
    REQUIRE(sum.components.size() == 2);
    const Elem a = static_cast<Elem>(sum.components[0].find_first());
    const Elem b = static_cast<Elem>(sum.components[1].find_first());
    CHECK_FALSE(distance(two.graph(), a, b));
    CHECK(two.distances()(a, b) == DistanceMatrix::kUnreachable);
  }

  TEST_CASE("abelian groups give an empty summary") {
    GroupContext ctx(test::make("C(2)xC(6)"));
    CHECK(ctx.graph().vertex_count() == 0);
    CHECK(ctx.summary().component_count() == 0);
    CHECK_FALSE(ctx.summary().diameter());
    CHECK(ctx.summary().nd_diameter() == 0u);
  }

  TEST_CASE("induced and nd subgraphs") {
    GroupContext ctx(test::make("D(6)"));
    const auto nd = nd_subgraph(ctx.graph());
    CHECK(nd.vertex_count() == ctx.graph().vertex_count() - ctx.summary().isolated_count);
    const auto s = component_summary(ctx.group(), nd, true);
    CHECK(s.diameter() == 2u);
  }

  TEST_CASE("DOT and adjacency export") {
    GroupContext ctx(test::make("S(4)"));
    std::ostringstream dot;
    write_dot(dot, ctx.group(), ctx.graph(), ctx.summary());
    const std::string text = dot.str();
    CHECK(text.rfind("graph \"ncng\" {", 0) == 0);
    std::size_t edges = 0;
    for (std::size_t pos = text.find(" -- "); pos != std::string::npos; pos = text.find(" -- ", pos + 1)) ++edges;
    CHECK(edges == ctx.graph().edge_count());

    std::ostringstream bin;
    write_adjacency(bin, ctx.graph());
    const std::string bytes = bin.str();
    const std::size_t v = ctx.graph().vertex_count();
    std::uint64_t count = 0;
    for (int i = 7; i >= 0; --i) count = (count << 8) | static_cast<unsigned char>(bytes[i]);
    CHECK(count == v);
    const std::size_t row = (v + 7) / 8;
    REQUIRE(bytes.size() == 8 + v * row);
    const auto verts = ctx.graph().vertex_list();
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = 0; j < v; ++j) {
        const bool bit = (static_cast<unsigned char>(bytes[8 + i * row + j / 8]) >> (j % 8)) & 1;
        CHECK(bit == ctx.graph().adjacent(verts[i], verts[j]));
      }
    }
  }
}

TEST_SUITE("oracles") {
  TEST_CASE("catalog expectations agree with brute-force graphs") {
    const auto entries = parse_corpus_file(test::corpus_path("catalog.corpus"));
    REQUIRE(entries.size() >= 30);
    for (const auto& e : entries) {
      CAPTURE(e.spec);
      GroupContext ctx(test::make(e.spec));
      check_against_oracle(ctx);
      const auto want = oracle::summarize(oracle::ncng_graph(ctx.group()));
      for (const auto& x : e.expectations) {
        CAPTURE(to_string(x.key));
        switch (x.key) {
          case ExpectationKey::diameter:
            CHECK(x.value == (want.diameter ? std::to_string(*want.diameter) : "inf"));
            break;
          case ExpectationKey::component_count:
            CHECK(x.value == std::to_string(want.components));
            break;
          case ExpectationKey::isolated_count:
            CHECK(x.value == std::to_string(want.isolated));
            break;
          default:
            break;
        }
      }
    }
  }
}
