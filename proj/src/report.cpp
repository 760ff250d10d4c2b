#include "ncng/report.hpp"

#include "ncng/construct.hpp"
#include "ncng/errors.hpp"
#include "ncng/group_spec.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace ncng {

using nlohmann::ordered_json;

bool operator==(const WitnessRecord& a, const WitnessRecord& b) {
  auto flags = [](const Witness22Checks& c) {
    return std::tuple(c.q_cyclic, c.q_irreducible, c.phiP_eq_ZP, c.ZP_not_central, c.R_normal);
  };
  return std::tie(a.p, a.q, a.P_order, a.Q_order, a.R_order, a.phiP_order) ==
             std::tie(b.p, b.q, b.P_order, b.Q_order, b.R_order, b.phiP_order) &&
         flags(a.checks) == flags(b.checks);
}

bool operator==(const AnalysisRecord& a, const AnalysisRecord& b) {
  auto same_checks = [](const std::vector<CheckResult>& x, const std::vector<CheckResult>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (std::tie(x[i].name, x[i].status, x[i].configurations, x[i].failures, x[i].notes) !=
          std::tie(y[i].name, y[i].status, y[i].configurations, y[i].failures, y[i].notes)) {
        return false;
      }
    }
    return true;
  };
  return std::tie(a.spec, a.order, a.center_order, a.two_generated, a.lattice_available, a.subgroup_count,
                  a.maximal_count, a.maximal_class_count, a.graphs, a.case_label, a.is_22group, a.consistent,
                  a.evidence, a.witness, a.assumption_22g, a.sumtwo_lhs, a.sumtwo_rhs, a.nc_witness) ==
             std::tie(b.spec, b.order, b.center_order, b.two_generated, b.lattice_available, b.subgroup_count,
                      b.maximal_count, b.maximal_class_count, b.graphs, b.case_label, b.is_22group, b.consistent,
                      b.evidence, b.witness, b.assumption_22g, b.sumtwo_lhs, b.sumtwo_rhs, b.nc_witness) &&
         same_checks(a.suite, b.suite);
}

const GraphRecord* AnalysisRecord::graph(GraphKind kind) const {
  for (const auto& g : graphs) {
    if (g.kind == kind) return &g;
  }
  return nullptr;
}

GraphRecord graph_record(GroupContext& ctx, GraphKind kind) {
  const auto& graph = ctx.graph(kind);
  const auto& sum = ctx.summary(kind);
  GraphRecord r;
  r.kind = kind;
  r.oracle = to_string(graph.oracle);
  r.vertex_count = graph.vertex_count();
  r.edge_count = graph.edge_count();
  r.component_count = sum.component_count();
  r.isolated_count = sum.isolated_count;
  for (const auto& c : sum.components) r.component_sizes.push_back(c.count());
  r.component_diameters = sum.diameters;
  r.diameter = sum.diameter();
  r.nd_diameter = sum.nd_diameter();
  return r;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

WitnessRecord witness_record(const Witness22& w) {
  return {w.p, w.q, w.P.order(), w.Q.order(), w.R.order(), w.phiP.order(), w.checks};
}

}  // namespace

AnalysisRecord analyze(GroupContext& ctx, const std::string& spec, const AnalysisOptions& options) {
  AnalysisRecord r;
  r.spec = spec;
  const auto& g = ctx.group();
  r.order = g.order();
  r.center_order = ctx.center().order();
  r.lattice_available = ctx.lattice_available();

  auto t0 = Clock::now();
  if (r.lattice_available) {
    const bool cached = !options.cache_dir.empty() && !ctx.has_lattice();
    if (cached) {
      if (auto hit = load_cached_lattice(options.cache_dir, spec, g.order())) ctx.set_lattice(std::move(*hit));
    }
    const bool fresh = cached && !ctx.has_lattice();
    const auto& md = ctx.maximal();
    if (fresh) store_cached_lattice(options.cache_dir, spec, g.order(), ctx.lattice());
    r.subgroup_count = ctx.lattice().size();
    r.maximal_count = md.maximals.size();
    r.maximal_class_count = md.classes.size();
  }
  r.timings["lattice"] = seconds_since(t0);

  t0 = Clock::now();
  r.two_generated = ctx.two_generation().two_generated;
  for (GraphKind kind : options.kinds) r.graphs.push_back(graph_record(ctx, kind));
  if (!r.graph(GraphKind::ncng)) r.graphs.insert(r.graphs.begin(), graph_record(ctx, GraphKind::ncng));
  r.timings["graphs"] = seconds_since(t0);

  t0 = Clock::now();
  const auto report = classify_main(ctx);
  r.case_label = to_string(report.label);
  r.is_22group = report.is_22group;
  r.consistent = report.consistent;
  r.evidence = report.evidence;
  if (report.witness) r.witness = witness_record(*report.witness);
  r.assumption_22g = report.witness && report.witness->checks.all();
  const auto sumtwo = sumtwo_crosscheck(ctx);
  r.sumtwo_lhs = sumtwo.lhs;
  r.sumtwo_rhs = sumtwo.rhs;
  if (r.lattice_available) {
    if (auto w = assumption_nc_witness(ctx)) {
      r.nc_witness = NcWitnessRecord{w->N.order(), w->C.order(), ctx.quotient_is_cyclic(w->C), is_abelian(g, w->C)};
    }
  }
  r.timings["classify"] = seconds_since(t0);

  if (options.run_suite) {
    t0 = Clock::now();
    r.suite = lemma_suite(ctx, options.suite);
    r.timings["suite"] = seconds_since(t0);
  }
  return r;
}

AnalysisRecord analyze(const std::string& spec, const AnalysisOptions& options) {
  const auto t0 = Clock::now();
  const std::string canonical = render(parse_spec(spec));
  GroupContext ctx(construct(parse_spec(canonical), {.max_order = options.max_order}), options.lattice_cap,
                   options.full_bfs);
  const double construct_seconds = seconds_since(t0);
  AnalysisRecord r = analyze(ctx, canonical, options);
  r.timings["construct"] = construct_seconds;
  r.timings["total"] = seconds_since(t0);
  return r;
}

// JSON.

namespace {

ordered_json optional_json(const std::optional<std::size_t>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

std::optional<std::size_t> optional_size(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::size_t>();
}

ordered_json to_json(const Witness22Checks& c) {
  return {{"q_cyclic", c.q_cyclic},
          {"q_irreducible", c.q_irreducible},
          {"phiP_eq_ZP", c.phiP_eq_ZP},
          {"ZP_not_central", c.ZP_not_central},
          {"R_normal", c.R_normal}};
}

ordered_json to_json(const WitnessRecord& w) {
  return {{"p", w.p},           {"q", w.q},           {"P", w.P_order},       {"Q", w.Q_order},
          {"R", w.R_order},     {"phiP", w.phiP_order}, {"checks", to_json(w.checks)}};
}

WitnessRecord witness_record_from_json(const ordered_json& j) {
  WitnessRecord w;
  w.p = j.at("p").get<unsigned>();
  w.q = j.at("q").get<unsigned>();
  w.P_order = j.at("P").get<std::size_t>();
  w.Q_order = j.at("Q").get<std::size_t>();
  w.R_order = j.at("R").get<std::size_t>();
  w.phiP_order = j.at("phiP").get<std::size_t>();
  const auto& c = j.at("checks");
  w.checks.q_cyclic = c.at("q_cyclic").get<bool>();
  w.checks.q_irreducible = c.at("q_irreducible").get<bool>();
  w.checks.phiP_eq_ZP = c.at("phiP_eq_ZP").get<bool>();
  w.checks.ZP_not_central = c.at("ZP_not_central").get<bool>();
  w.checks.R_normal = c.at("R_normal").get<bool>();
  return w;
}

}  // namespace

ordered_json to_json(const GraphRecord& g) {
  return {{"kind", to_string(g.kind)},
          {"oracle", g.oracle},
          {"vertices", g.vertex_count},
          {"edges", g.edge_count},
          {"components", g.component_count},
          {"isolated", g.isolated_count},
          {"component_sizes", g.component_sizes},
          {"component_diameters", g.component_diameters},
          {"diameter", optional_json(g.diameter)},
          {"nd_diameter", optional_json(g.nd_diameter)}};
}

GraphRecord graph_record_from_json(const ordered_json& j) {
  GraphRecord g;
  const auto kind = parse_graph_kind(j.at("kind").get<std::string>());
  if (!kind) throw Error("unknown graph kind in report: " + j.at("kind").get<std::string>());
  g.kind = *kind;
  g.oracle = j.at("oracle").get<std::string>();
  g.vertex_count = j.at("vertices").get<std::size_t>();
  g.edge_count = j.at("edges").get<std::size_t>();
  g.component_count = j.at("components").get<std::size_t>();
  g.isolated_count = j.at("isolated").get<std::size_t>();
  g.component_sizes = j.at("component_sizes").get<std::vector<std::size_t>>();
  g.component_diameters = j.at("component_diameters").get<std::vector<std::size_t>>();
  g.diameter = optional_size(j.at("diameter"));
  g.nd_diameter = optional_size(j.at("nd_diameter"));
  return g;
}

ordered_json to_json(const CheckResult& r) {
  return {{"name", r.name},
          {"status", to_string(r.status)},
          {"configurations", r.configurations},
          {"failures", r.failures},
          {"notes", r.notes}};
}

CheckResult check_result_from_json(const ordered_json& j) {
  CheckResult r;
  r.name = j.at("name").get<std::string>();
  const auto status = parse_check_status(j.at("status").get<std::string>());
  if (!status) throw Error("unknown check status in report: " + j.at("status").get<std::string>());
  r.status = *status;
  r.configurations = j.at("configurations").get<std::size_t>();
  r.failures = j.at("failures").get<std::size_t>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

ordered_json to_json(const AnalysisRecord& r, bool with_timings) {
  ordered_json j;
  j["spec"] = r.spec;
  j["order"] = r.order;
  j["center_order"] = r.center_order;
  j["two_generated"] = r.two_generated;
  j["lattice"] = {{"available", r.lattice_available},
                  {"subgroups", optional_json(r.subgroup_count)},
                  {"maximals", optional_json(r.maximal_count)},
                  {"maximal_classes", optional_json(r.maximal_class_count)}};
  j["graphs"] = ordered_json::array();
  for (const auto& g : r.graphs) j["graphs"].push_back(to_json(g));
  j["classification"] = {{"case_label", r.case_label},
                         {"is_22group", r.is_22group},
                         {"consistent", r.consistent},
                         {"evidence", r.evidence},
                         {"witness", r.witness ? to_json(*r.witness) : ordered_json(nullptr)},
                         {"assumption_22g", r.assumption_22g}};
  j["sumtwo"] = {{"lhs", r.sumtwo_lhs}, {"rhs", r.sumtwo_rhs}, {"agree", r.sumtwo_agree()}};
  if (r.nc_witness) {
    j["nc_witness"] = {{"N", r.nc_witness->N_order},
                       {"C", r.nc_witness->C_order},
                       {"quotient_by_C_cyclic", r.nc_witness->quotient_by_C_cyclic},
                       {"C_abelian", r.nc_witness->C_abelian}};
  } else {
    j["nc_witness"] = nullptr;
  }
  j["suite"] = ordered_json::array();
  for (const auto& c : r.suite) j["suite"].push_back(to_json(c));
  if (with_timings) j["timings"] = r.timings;
  return j;
}

AnalysisRecord analysis_record_from_json(const ordered_json& j) {
  AnalysisRecord r;
  r.spec = j.at("spec").get<std::string>();
  r.order = j.at("order").get<std::size_t>();
  r.center_order = j.at("center_order").get<std::size_t>();
  r.two_generated = j.at("two_generated").get<bool>();
  const auto& lat = j.at("lattice");
  r.lattice_available = lat.at("available").get<bool>();
  r.subgroup_count = optional_size(lat.at("subgroups"));
  r.maximal_count = optional_size(lat.at("maximals"));
  r.maximal_class_count = optional_size(lat.at("maximal_classes"));
  for (const auto& g : j.at("graphs")) r.graphs.push_back(graph_record_from_json(g));
  const auto& c = j.at("classification");
  r.case_label = c.at("case_label").get<std::string>();
  r.is_22group = c.at("is_22group").get<bool>();
  r.consistent = c.at("consistent").get<bool>();
  r.evidence = c.at("evidence").get<std::vector<std::string>>();
  if (!c.at("witness").is_null()) r.witness = witness_record_from_json(c.at("witness"));
  r.assumption_22g = c.at("assumption_22g").get<bool>();
  r.sumtwo_lhs = j.at("sumtwo").at("lhs").get<bool>();
  r.sumtwo_rhs = j.at("sumtwo").at("rhs").get<bool>();
  if (const auto& nc = j.at("nc_witness"); !nc.is_null()) {
    r.nc_witness = NcWitnessRecord{nc.at("N").get<std::size_t>(), nc.at("C").get<std::size_t>(),
                                   nc.at("quotient_by_C_cyclic").get<bool>(), nc.at("C_abelian").get<bool>()};
  }
  for (const auto& s : j.at("suite")) r.suite.push_back(check_result_from_json(s));
  if (j.contains("timings")) r.timings = j.at("timings").get<std::map<std::string, double>>();
  return r;
}

// Lattice cache.

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& spec) {
  std::ostringstream name;
  name << std::hex << fnv1a(spec) << ".lattice.json";
  return dir / name.str();
}

}  // namespace

std::optional<SubgroupLattice> load_cached_lattice(const std::filesystem::path& dir, const std::string& spec,
                                                   std::size_t order) {
  std::ifstream in(cache_path(dir, spec));
  if (!in) return std::nullopt;
  const auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || j.value("spec", "") != spec || j.value("order", std::size_t{0}) != order) return std::nullopt;
  std::vector<SubgroupSet> subs;
  for (const auto& members : j.at("subgroups")) {
    const auto elems = members.get<std::vector<Elem>>();
    for (Elem e : elems) {
      if (e >= order) return std::nullopt;
    }
    subs.emplace_back(make_set(order, elems));
  }
  return SubgroupLattice(std::move(subs));
}

void store_cached_lattice(const std::filesystem::path& dir, const std::string& spec, std::size_t order,
                          const SubgroupLattice& lattice) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  nlohmann::json j{{"spec", spec}, {"order", order}, {"subgroups", nlohmann::json::array()}};
  for (const auto& h : lattice.subgroups()) j["subgroups"].push_back(h.elements());
  const auto target = cache_path(dir, spec);
  auto tmp = target;
  tmp += ".tmp" + std::to_string(fnv1a(spec + std::to_string(reinterpret_cast<std::uintptr_t>(&lattice))));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace ncng
