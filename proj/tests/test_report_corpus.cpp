#include "helpers.hpp"

#include "ncng/corpus.hpp"
#include "ncng/report.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace ncng;

namespace {

std::vector<CorpusEntry> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_corpus(in);
}

std::string deterministic_part(const std::string& report) {
  const auto pos = report.find(std::string(kTimingsMarker));
  REQUIRE(pos != std::string::npos);
  return report.substr(0, pos);
}

std::string report_text(const VerifyResult& r) {
  std::ostringstream out;
  write_report(out, r);
  return out.str();
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("analyze examples") {
    const auto s4 = analyze("S(4)");
    CHECK(s4.case_label == "T12-iii");
    CHECK(s4.graph(GraphKind::ncng)->diameter == 3u);
    CHECK(s4.order == 24);
    CHECK(s4.center_order == 1);
    CHECK(s4.subgroup_count == 30u);
    CHECK(s4.maximal_class_count == 3u);
    CHECK(analyze("Q8").case_label == "no-edge");
    const auto szb = analyze("SzB(3,7)");
    CHECK(szb.is_22group);
    CHECK(szb.assumption_22g);
    CHECK(szb.sumtwo_agree());
  }

  TEST_CASE("spec is recorded canonically") {
    CHECK(analyze(" C(2) x S(3) ", {.run_suite = false}).spec == "C(2)xS(3)");
  }

  TEST_CASE("records round-trip through JSON") {
    AnalysisOptions opts;
    opts.kinds = {GraphKind::ncng, GraphKind::commuting, GraphKind::generating};
    for (const char* spec : {"S(4)", "SzB(3,7)", "Q8", "SL23", "C(2)xC(2)"}) {
      CAPTURE(spec);
      const auto r = analyze(spec, opts);
      const auto j = to_json(r, true);
      const auto back = analysis_record_from_json(nlohmann::ordered_json::parse(j.dump()));
      CHECK(back == r);
      CHECK(back.timings == r.timings);
      CHECK(to_json(back, true) == j);
      CHECK_FALSE(to_json(r).contains("timings"));
    }
  }

  TEST_CASE("analysis is deterministic") {
    const auto a = to_json(analyze("S(3)xAGL(1,5)")).dump();
    const auto b = to_json(analyze("S(3)xAGL(1,5)")).dump();
    CHECK(a == b);
  }

  TEST_CASE("lattice cache") {
    const auto dir = std::filesystem::temp_directory_path() / "ncng-cache-test";
    std::filesystem::remove_all(dir);
    AnalysisOptions opts;
    opts.cache_dir = dir;
    const auto first = analyze("S(4)", opts);
    CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 1);
    const auto second = analyze("S(4)", opts);
    CHECK(first == second);
    const auto lattice = load_cached_lattice(dir, "S(4)", 24);
    REQUIRE(lattice);
    CHECK(lattice->size() == 30);
    CHECK_FALSE(load_cached_lattice(dir, "S(4)", 25));
    CHECK_FALSE(load_cached_lattice(dir, "A(4)", 12));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("errors propagate") {
    CHECK_THROWS_AS(analyze("S(8)"), OrderCapExceeded);
    CHECK_THROWS_AS(analyze("S("), SyntaxError);
  }
}

TEST_SUITE("corpus") {
  TEST_CASE("corpus parsing") {
    const auto entries = parse(
        "# comment\n"
        "\n"
        "S(4) | diameter=3@quoted source; case_label=T12-iii  # trailing\n"
        "Q8\n"
        "SzB(3,7) | component_diameters=2, 2; is_22group=true; nd_diameter=inf\n");
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].line == 3);
    CHECK(entries[0].spec == "S(4)");
    REQUIRE(entries[0].expectations.size() == 2);
    CHECK(entries[0].expectations[0].key == ExpectationKey::diameter);
    CHECK(entries[0].expectations[0].value == "3");
    CHECK(entries[0].expectations[0].note == "quoted source");
    CHECK(entries[0].expectations[1].note == "derived");
    CHECK(entries[1].expectations.empty());
    CHECK(entries[2].expectations[0].value == "2,2");
    CHECK(entries[2].expectations[2].value == "inf");
  }

  TEST_CASE("corpus syntax errors name the line") {
    auto line_of = [](const std::string& text) -> std::size_t {
      try {
        parse(text);
      } catch (const CorpusSyntaxError& e) {
        return e.line;
      }
      return 0;
    };
    CHECK(line_of("S(4)\nS(4) | girth=3\n") == 2);
    CHECK(line_of("S(4) | diameter=three\n") == 1);
    CHECK(line_of("S(4) | diameter=3; diameter=2\n") == 1);
    CHECK(line_of("\n\nS(4 | diameter=3\n") == 3);
    CHECK(line_of(" | diameter=3\n") == 1);
    CHECK(line_of("S(4) | diameter\n") == 1);
    CHECK(line_of("S(4) | case_label=T12-x\n") == 1);
    CHECK(line_of("S(4) | is_22group=yes\n") == 1);
    CHECK_THROWS_AS(parse_corpus_file(test::data_path("malformed.corpus")), CorpusSyntaxError);
    CHECK_THROWS_AS(parse_corpus_file(test::data_path("missing.corpus")), Error);
  }

  TEST_CASE("worked examples corpus passes") {
    const auto r = verify(parse_corpus_file(test::corpus_path("worked_examples.corpus")), {.threads = 4});
    CHECK(r.exit_code == 0);
    CHECK(r.entries.size() == 9);
    for (const auto& e : r.entries) {
      CAPTURE(e.entry.spec);
      CHECK(e.ok());
      CHECK(e.failed == 0);
      CHECK(e.passed + e.vacuous + e.skipped == lemma_suite_names().size());
    }
  }

  TEST_CASE("wrong expectation fails naming the entry") {
    const auto r = verify(parse_corpus_file(test::data_path("wrong_expectation.corpus")));
    CHECK(r.exit_code == 1);
    REQUIRE(r.entries.size() == 2);
    CHECK(r.entries[0].ok());
    CHECK_FALSE(r.entries[1].ok());
    const auto reasons = r.entries[1].failure_reasons();
    REQUIRE(reasons.size() == 1);
    CHECK(reasons[0].find("diameter expected 2 got 3") != std::string::npos);
    std::ostringstream summary;
    write_summary(summary, r);
    CHECK(summary.str().find("FAIL S(4)") != std::string::npos);
  }

  TEST_CASE("empty corpus") {
    const auto r = verify(parse_corpus_file(test::data_path("empty.corpus")));
    CHECK(r.exit_code == 0);
    CHECK(r.entries.empty());
    const auto text = report_text(r);
    CHECK(text.find(R"("entries":0)") != std::string::npos);
  }

  TEST_CASE("construction errors are infrastructure failures") {
    const auto r = verify(parse_corpus_file(test::data_path("over_cap.corpus")));
    CHECK(r.exit_code == 2);
    CHECK(r.entries[0].ok());
    CHECK(r.entries[1].infrastructure_error());
  }

  TEST_CASE("reports are deterministic and independent of the worker count") {
    const auto entries = parse_corpus_file(test::corpus_path("worked_examples.corpus"));
    const auto serial = report_text(verify(entries, {.threads = 1}));
    const auto parallel = report_text(verify(entries, {.threads = 8}));
    CHECK(deterministic_part(serial) == deterministic_part(parallel));

    std::istringstream lines(serial);
    std::string header;
    std::getline(lines, header);
    CHECK(header == R"({"schema":"ncng-report","version":1})");
    std::size_t records = 0;
    for (std::string line; std::getline(lines, line) && line != kTimingsMarker;) {
      const auto j = nlohmann::ordered_json::parse(line);
      if (j.contains("entry")) {
        CHECK(j.at("entry").get<std::size_t>() == records);
        CHECK(j.at("spec") == entries[records].spec);
        CHECK_FALSE(j.at("record").contains("timings"));
        ++records;
      }
    }
    CHECK(records == entries.size());
  }
}
