#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncng {

/// `vacuous`: the hypotheses never instantiated. `skipped`: the group is
/// outside the check's size limit or the lattice is unavailable.
enum class CheckStatus { pass, fail, vacuous, skipped };

std::string to_string(CheckStatus status);
std::optional<CheckStatus> parse_check_status(std::string_view text);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::vacuous;
  std::size_t configurations = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  bool ok() const { return status != CheckStatus::fail; }
};

/// Accumulates configurations for one named check.
class Checker {
 public:
  static constexpr std::size_t kMaxNotes = 4;

  explicit Checker(std::string name) { result_.name = std::move(name); }

  /// Records one instantiated configuration.
  bool expect(bool ok, const std::string& failure_note = {}) {
    ++result_.configurations;
    if (!ok) {
      ++result_.failures;
      if (!failure_note.empty() && result_.notes.size() < kMaxNotes) result_.notes.push_back(failure_note);
    }
    return ok;
  }
  /// Folds in the configurations and notes of another result.
  void absorb(const CheckResult& other) {
    result_.configurations += other.configurations;
    result_.failures += other.failures;
    for (const auto& n : other.notes) {
      if (result_.notes.size() < kMaxNotes) result_.notes.push_back(n);
    }
  }
  void note(std::string text) { result_.notes.push_back(std::move(text)); }
  void skip(std::string reason) {
    skipped_ = true;
    result_.notes.push_back(std::move(reason));
  }

  CheckResult finish() {
    if (skipped_) {
      result_.status = CheckStatus::skipped;
    } else if (result_.failures > 0) {
      result_.status = CheckStatus::fail;
    } else if (result_.configurations == 0) {
      result_.status = CheckStatus::vacuous;
    } else {
      result_.status = CheckStatus::pass;
    }
    return std::move(result_);
  }

 private:
  CheckResult result_;
  bool skipped_ = false;
};

}  // namespace ncng
