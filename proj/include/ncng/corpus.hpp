#pragma once

#include "ncng/errors.hpp"
#include "ncng/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncng {

/// Keys a corpus line may pin.
enum class ExpectationKey {
  diameter,
  nd_diameter,
  component_count,
  component_diameters,
  case_label,
  is_22group,
  isolated_count,
};

std::string to_string(ExpectationKey key);
std::optional<ExpectationKey> parse_expectation_key(std::string_view text);

struct Expectation {
  ExpectationKey key{};
  std::string value;  // normalised text form
  std::string note;   // provenance: a citation string or "derived"
};

struct CorpusEntry {
  std::string spec;
  std::vector<Expectation> expectations;
  std::size_t line = 0;
};

/// Malformed corpus text, with a 1-based line number.
class CorpusSyntaxError : public Error {
 public:
  CorpusSyntaxError(std::size_t line, const std::string& detail)
      : Error("corpus line " + std::to_string(line) + ": " + detail), line(line) {}
  std::size_t line;
};

/// One entry per line: `spec | key=value@note; key=value@note`. `#` starts a
/// comment; blank lines are ignored. The note defaults to "derived".
std::vector<CorpusEntry> parse_corpus(std::istream& in);
std::vector<CorpusEntry> parse_corpus_file(const std::string& path);

/// Actual value of `key` in the text form used by corpus files.
std::string actual_value(const AnalysisRecord& r, ExpectationKey key);

struct ExpectationOutcome {
  Expectation expectation;
  std::string actual;
  bool ok = false;
};

struct EntryOutcome {
  CorpusEntry entry;
  std::optional<AnalysisRecord> record;
  std::string error;  // infrastructure failure, empty on success
  std::vector<ExpectationOutcome> expectations;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t vacuous = 0;
  std::size_t skipped = 0;

  bool infrastructure_error() const { return !error.empty(); }
  bool ok() const;
  /// Reasons for failure, empty when ok().
  std::vector<std::string> failure_reasons() const;
};

struct VerifyOptions {
  AnalysisOptions analysis;
  std::size_t threads = 1;
};

struct VerifyResult {
  std::vector<EntryOutcome> entries;  // input order
  int exit_code = 0;
};

/// Runs analysis, expectation comparison and the property suites on every
/// entry with a worker pool. Exit code 0 when all pass, 1 on any expectation
/// or suite failure, 2 on an infrastructure error.
VerifyResult verify(const std::vector<CorpusEntry>& entries, const VerifyOptions& options = {});

/// Line-delimited JSON: a schema header, one record per entry, a summary,
/// then a separate timings section. Everything before the timings marker is
/// deterministic.
void write_report(std::ostream& out, const VerifyResult& result);
inline constexpr std::string_view kTimingsMarker = R"({"section":"timings"})";

/// Human-readable per-entry pass/fail/vacuous counts.
void write_summary(std::ostream& out, const VerifyResult& result);

}  // namespace ncng
