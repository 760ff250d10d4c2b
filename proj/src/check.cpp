#include "ncng/check.hpp"

#include <array>

namespace ncng {

namespace {

constexpr std::array<std::pair<CheckStatus, std::string_view>, 4> kStatusNames{{
    {CheckStatus::pass, "pass"},
    {CheckStatus::fail, "fail"},
    {CheckStatus::vacuous, "vacuous"},
    {CheckStatus::skipped, "skipped"},
}};

}  // namespace

std::string to_string(CheckStatus status) {
  for (const auto& [s, name] : kStatusNames) {
    if (s == status) return std::string(name);
  }
  return "fail";
}

std::optional<CheckStatus> parse_check_status(std::string_view text) {
  for (const auto& [s, name] : kStatusNames) {
    if (name == text) return s;
  }
  return std::nullopt;
}

}  // namespace ncng
