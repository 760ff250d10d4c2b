#pragma once

#include "ncng/check.hpp"
#include "ncng/classify.hpp"
#include "ncng/context.hpp"
#include "ncng/graphs.hpp"
#include "ncng/lemma_suite.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ncng {

inline constexpr std::size_t kDefaultMaxOrder = 5000;

struct AnalysisOptions {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t lattice_cap = kDefaultLatticeCap;
  bool full_bfs = false;
  bool run_suite = true;
  std::vector<GraphKind> kinds{GraphKind::ncng};
  SuiteOptions suite;
  /// Directory for cached lattices; empty disables caching.
  std::filesystem::path cache_dir;
};

struct GraphRecord {
  GraphKind kind = GraphKind::ncng;
  std::string oracle;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t component_count = 0;
  std::size_t isolated_count = 0;
  std::vector<std::size_t> component_sizes;
  std::vector<std::size_t> component_diameters;
  std::optional<std::size_t> diameter;     // nullopt: disconnected or empty
  std::optional<std::size_t> nd_diameter;  // nullopt: nd disconnected

  friend bool operator==(const GraphRecord&, const GraphRecord&) = default;
};

struct WitnessRecord {
  unsigned p = 0;
  unsigned q = 0;
  std::size_t P_order = 0;
  std::size_t Q_order = 0;
  std::size_t R_order = 0;
  std::size_t phiP_order = 0;
  Witness22Checks checks;

  friend bool operator==(const WitnessRecord& a, const WitnessRecord& b);
};

struct NcWitnessRecord {
  std::size_t N_order = 0;
  std::size_t C_order = 0;
  bool quotient_by_C_cyclic = false;
  bool C_abelian = false;

  friend bool operator==(const NcWitnessRecord&, const NcWitnessRecord&) = default;
};

struct AnalysisRecord {
  std::string spec;  // canonical rendering
  std::size_t order = 0;
  std::size_t center_order = 0;
  bool two_generated = false;
  bool lattice_available = false;
  std::optional<std::size_t> subgroup_count;
  std::optional<std::size_t> maximal_count;
  std::optional<std::size_t> maximal_class_count;
  std::vector<GraphRecord> graphs;
  std::string case_label;
  bool is_22group = false;
  bool consistent = false;
  std::vector<std::string> evidence;
  std::optional<WitnessRecord> witness;
  bool assumption_22g = false;
  bool sumtwo_lhs = false;
  bool sumtwo_rhs = false;
  std::optional<NcWitnessRecord> nc_witness;
  std::vector<CheckResult> suite;
  /// Wall-clock seconds per phase. Not part of equality or the deterministic report.
  std::map<std::string, double> timings;

  const GraphRecord* graph(GraphKind kind) const;
  bool sumtwo_agree() const { return sumtwo_lhs == sumtwo_rhs; }

  friend bool operator==(const AnalysisRecord& a, const AnalysisRecord& b);
};

GraphRecord graph_record(GroupContext& ctx, GraphKind kind);

/// Parses, constructs and analyses one group. Throws the engine's errors.
AnalysisRecord analyze(const std::string& spec, const AnalysisOptions& options = {});
/// Analyses an existing context; `spec` is recorded verbatim.
AnalysisRecord analyze(GroupContext& ctx, const std::string& spec, const AnalysisOptions& options = {});

nlohmann::ordered_json to_json(const GraphRecord& g);
GraphRecord graph_record_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const CheckResult& r);
CheckResult check_result_from_json(const nlohmann::ordered_json& j);

/// Timings are omitted unless `with_timings`.
nlohmann::ordered_json to_json(const AnalysisRecord& r, bool with_timings = false);
AnalysisRecord analysis_record_from_json(const nlohmann::ordered_json& j);

/// Lattice cache keyed by canonical spec. Files hold the member lists of every subgroup.
std::optional<SubgroupLattice> load_cached_lattice(const std::filesystem::path& dir, const std::string& spec,
                                                   std::size_t order);
void store_cached_lattice(const std::filesystem::path& dir, const std::string& spec, std::size_t order,
                          const SubgroupLattice& lattice);

}  // namespace ncng
