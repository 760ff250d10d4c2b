#include "ncng/corpus.hpp"

#include "ncng/group_spec.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

namespace ncng {

namespace {

constexpr std::pair<ExpectationKey, std::string_view> kKeyNames[] = {
    {ExpectationKey::diameter, "diameter"},
    {ExpectationKey::nd_diameter, "nd_diameter"},
    {ExpectationKey::component_count, "component_count"},
    {ExpectationKey::component_diameters, "component_diameters"},
    {ExpectationKey::case_label, "case_label"},
    {ExpectationKey::is_22group, "is_22group"},
    {ExpectationKey::isolated_count, "isolated_count"},
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool is_count(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string distance_text(const std::optional<std::size_t>& d) { return d ? std::to_string(*d) : "inf"; }

/// Validates a value for `key` and returns its normalised form.
std::string normalise(ExpectationKey key, const std::string& value, std::size_t line) {
  auto fail = [&](const std::string& what) -> std::string {
    throw CorpusSyntaxError(line, "bad value '" + value + "' for " + to_string(key) + ": expected " + what);
  };
  switch (key) {
    case ExpectationKey::diameter:
    case ExpectationKey::nd_diameter:
      if (value == "inf" || is_count(value)) return value == "inf" ? value : std::to_string(std::stoul(value));
      return fail("a count or inf");
    case ExpectationKey::component_count:
    case ExpectationKey::isolated_count:
      if (is_count(value)) return std::to_string(std::stoul(value));
      return fail("a count");
    case ExpectationKey::component_diameters: {
      std::string out;
      for (const auto& part : split(value, ',')) {
        if (!is_count(part)) return fail("comma-separated counts");
        out += (out.empty() ? "" : ",") + std::to_string(std::stoul(part));
      }
      return out;
    }
    case ExpectationKey::case_label:
      if (parse_case_label(value)) return value;
      return fail("a case label");
    case ExpectationKey::is_22group:
      if (value == "true" || value == "false") return value;
      return fail("true or false");
  }
  return value;
}

}  // namespace

std::string to_string(ExpectationKey key) {
  for (const auto& [k, name] : kKeyNames) {
    if (k == key) return std::string(name);
  }
  return "?";
}

std::optional<ExpectationKey> parse_expectation_key(std::string_view text) {
  for (const auto& [k, name] : kKeyNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> entries;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (text.empty()) continue;
    CorpusEntry entry;
    entry.line = line;
    const auto bar = text.find('|');
    entry.spec = trim(std::string_view(text).substr(0, bar));
    if (entry.spec.empty()) throw CorpusSyntaxError(line, "missing group spec");
    try {
      entry.spec = render(parse_spec(entry.spec));
    } catch (const SyntaxError& e) {
      throw CorpusSyntaxError(line, e.what());
    }
    if (bar != std::string::npos) {
      for (const auto& item : split(std::string_view(text).substr(bar + 1), ';')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw CorpusSyntaxError(line, "expected key=value, got '" + item + "'");
        const std::string name = trim(std::string_view(item).substr(0, eq));
        const auto key = parse_expectation_key(name);
        if (!key) throw CorpusSyntaxError(line, "unknown key '" + name + "'");
        std::string rest = item.substr(eq + 1);
        std::string note = "derived";
        if (const auto at = rest.find('@'); at != std::string::npos) {
          note = trim(std::string_view(rest).substr(at + 1));
          rest = rest.substr(0, at);
        }
        const auto duplicate = std::any_of(entry.expectations.begin(), entry.expectations.end(),
                                           [&](const Expectation& e) { return e.key == *key; });
        if (duplicate) throw CorpusSyntaxError(line, "key '" + name + "' given twice");
        entry.expectations.push_back({*key, normalise(*key, trim(rest), line), note});
      }
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<CorpusEntry> parse_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file " + path);
  return parse_corpus(in);
}

std::string actual_value(const AnalysisRecord& r, ExpectationKey key) {
  const GraphRecord* g = r.graph(GraphKind::ncng);
  switch (key) {
    case ExpectationKey::diameter:
      return distance_text(g->diameter);
    case ExpectationKey::nd_diameter:
      return distance_text(g->nd_diameter);
    case ExpectationKey::component_count:
      return std::to_string(g->component_count);
    case ExpectationKey::component_diameters: {
      std::string out;
      for (std::size_t i = 0; i < g->component_count; ++i) {
        if (g->component_sizes[i] < 2) continue;
        out += (out.empty() ? "" : ",") + std::to_string(g->component_diameters[i]);
      }
      return out;
    }
    case ExpectationKey::case_label:
      return r.case_label;
    case ExpectationKey::is_22group:
      return r.is_22group ? "true" : "false";
    case ExpectationKey::isolated_count:
      return std::to_string(g->isolated_count);
  }
  return {};
}

bool EntryOutcome::ok() const { return failure_reasons().empty(); }

std::vector<std::string> EntryOutcome::failure_reasons() const {
  std::vector<std::string> out;
  if (infrastructure_error()) {
    out.push_back("error: " + error);
    return out;
  }
  for (const auto& e : expectations) {
    if (!e.ok) {
      out.push_back(to_string(e.expectation.key) + " expected " + e.expectation.value + " got " + e.actual + " (" +
                    e.expectation.note + ")");
    }
  }
  for (const auto& c : record->suite) {
    if (c.status == CheckStatus::fail) out.push_back("check " + c.name + " failed");
  }
  if (!record->sumtwo_agree()) out.push_back("sumtwo crosscheck disagrees");
  return out;
}

namespace {

EntryOutcome run_entry(const CorpusEntry& entry, const AnalysisOptions& options) {
  EntryOutcome out;
  out.entry = entry;
  try {
    AnalysisOptions opts = options;
    opts.run_suite = true;
    out.record = analyze(entry.spec, opts);
  } catch (const std::exception& e) {
    out.error = e.what();
    return out;
  }
  for (const auto& exp : entry.expectations) {
    std::string actual = actual_value(*out.record, exp.key);
    const bool ok = actual == exp.value;
    out.expectations.push_back({exp, std::move(actual), ok});
  }
  for (const auto& c : out.record->suite) {
    switch (c.status) {
      case CheckStatus::pass: ++out.passed; break;
      case CheckStatus::fail: ++out.failed; break;
      case CheckStatus::vacuous: ++out.vacuous; break;
      case CheckStatus::skipped: ++out.skipped; break;
    }
  }
  return out;
}

}  // namespace

VerifyResult verify(const std::vector<CorpusEntry>& entries, const VerifyOptions& options) {
  VerifyResult result;
  result.entries.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) result.entries[i] = run_entry(entries[i], options.analysis);
  };
  const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(entries.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const auto& e : result.entries) {
    if (e.infrastructure_error()) {
      result.exit_code = 2;
    } else if (!e.ok() && result.exit_code == 0) {
      result.exit_code = 1;
    }
  }
  return result;
}

void write_report(std::ostream& out, const VerifyResult& result) {
  using nlohmann::ordered_json;
  out << ordered_json{{"schema", "ncng-report"}, {"version", 1}}.dump() << '\n';
  std::size_t passed = 0, failed = 0, errors = 0;
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    const auto& e = result.entries[i];
    ordered_json j;
    j["entry"] = i;
    j["line"] = e.entry.line;
    j["spec"] = e.entry.spec;
    j["ok"] = e.ok();
    if (e.infrastructure_error()) {
      j["error"] = e.error;
      ++errors;
    } else {
      e.ok() ? ++passed : ++failed;
      j["expectations"] = ordered_json::array();
      for (const auto& x : e.expectations) {
        j["expectations"].push_back({{"key", to_string(x.expectation.key)},
                                     {"expected", x.expectation.value},
                                     {"actual", x.actual},
                                     {"note", x.expectation.note},
                                     {"ok", x.ok}});
      }
      j["checks"] = {{"pass", e.passed}, {"fail", e.failed}, {"vacuous", e.vacuous}, {"skipped", e.skipped}};
      j["record"] = to_json(*e.record);
    }
    j["failures"] = e.failure_reasons();
    out << j.dump() << '\n';
  }
  out << ordered_json{{"summary",
                       {{"entries", result.entries.size()},
                        {"passed", passed},
                        {"failed", failed},
                        {"errors", errors},
                        {"exit_code", result.exit_code}}}}
             .dump()
      << '\n';
  out << kTimingsMarker << '\n';
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    const auto& e = result.entries[i];
    ordered_json j{{"entry", i}, {"spec", e.entry.spec}};
    j["timings"] = e.record ? ordered_json(e.record->timings) : ordered_json::object();
    out << j.dump() << '\n';
  }
}

void write_summary(std::ostream& out, const VerifyResult& result) {
  std::size_t ok = 0;
  for (const auto& e : result.entries) {
    ok += e.ok();
    out << (e.ok() ? "PASS " : "FAIL ") << e.entry.spec;
    if (!e.infrastructure_error()) {
      out << "  pass=" << e.passed << " fail=" << e.failed << " vacuous=" << e.vacuous << " skipped=" << e.skipped;
      if (e.record) out << " label=" << e.record->case_label;
    }
    out << '\n';
    for (const auto& reason : e.failure_reasons()) out << "    " << reason << '\n';
  }
  out << ok << "/" << result.entries.size() << " entries passed\n";
}

}  // namespace ncng
