#pragma once

#include "ncng/construct.hpp"
#include "ncng/context.hpp"
#include "ncng/group_spec.hpp"

#include <string>

namespace test {

inline ncng::FiniteGroup make(const std::string& spec, std::size_t max_order = 5000) {
  return ncng::construct(ncng::parse_spec(spec), {.max_order = max_order, .verify_axioms = true});
}

inline std::string corpus_path(const std::string& name) { return std::string(NCNG_SOURCE_DIR) + "/corpus/" + name; }
inline std::string data_path(const std::string& name) { return std::string(NCNG_SOURCE_DIR) + "/tests/data/" + name; }

}  // namespace test
