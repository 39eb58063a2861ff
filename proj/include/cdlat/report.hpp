#pragma once

#include <cctype>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cdlat/catalog.hpp"
#include "cdlat/chermak_delgado.hpp"
#include "cdlat/density.hpp"
#include "cdlat/group.hpp"
#include "cdlat/lattice.hpp"

namespace cdlat {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

// Lattice position plus order plus members, so a witness can be re-checked
// without access to the lattice that produced it.
struct SubgroupRef {
  SubgroupIndex index = 0;
  std::size_t order = 0;
  std::vector<Element> elements;

  friend bool operator==(const SubgroupRef&, const SubgroupRef&) = default;
};

inline SubgroupRef make_ref(const Lattice& lat, SubgroupIndex i) {
  return {i, lat.order_of(i), lat.subgroup(i).members<Element>()};
}

struct AnalysisReport {
  int schema_version = kReportSchemaVersion;

  std::string spec;
  std::uint64_t order = 0;
  PrimeSignature prime_signature;
  bool is_abelian = false;
  std::optional<std::uint64_t> p_group_prime;
  bool is_solvable = false;
  bool is_nilpotent = false;
  std::size_t center_order = 0;

  std::size_t subgroup_count = 0;

  std::uint64_t m_star = 0;
  std::vector<SubgroupRef> cd_members;
  SubgroupRef min_member;
  SubgroupRef max_member;
  std::vector<std::uint64_t> measure_image;

  PropertyReport properties;

  bool dense = false;
  std::uint64_t pairs_checked = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::pair<SubgroupRef, SubgroupRef>> witnesses;

  std::optional<TheoremReport> p_group_profile;
  std::optional<TheoremReport> pq_classification;
  std::optional<bool> zm_chain;

  std::vector<std::pair<std::string, double>> timings_ms;
};

struct AnalyzeOptions {
  Limits limits;
  std::size_t witness_cap = kDefaultWitnessCap;
};

// Everything an analysis computes, for callers that need more than the report.
struct Analysis {
  GroupTable group;
  Lattice lattice;
  CDResult cd;
  DensityVerdict verdict;
  AnalysisReport report;
};

inline Analysis analyze_group(GroupTable g, std::string spec_text, const AnalyzeOptions& opts,
                              std::vector<std::pair<std::string, double>> timings = {}) {
  using clock = std::chrono::steady_clock;
  auto stage = [&](const char* name, auto&& fn) {
    const auto t0 = clock::now();
    auto result = fn();
    timings.emplace_back(name, std::chrono::duration<double, std::milli>(clock::now() - t0).count());
    return result;
  };

  Lattice lat = stage("lattice", [&] { return enumerate_subgroups(g, opts.limits); });
  CDResult cd = stage("chermak_delgado", [&] { return cd_lattice(g, lat); });
  PropertyReport props = stage("properties", [&] { return verify_cd_properties(g, lat, cd, opts.limits); });
  DensityVerdict verdict = stage("density", [&] { return is_dense_cd(lat, cd, opts.witness_cap); });

  AnalysisReport r;
  const StructureFlags flags = stage("structure", [&] { return structure_flags(g); });
  r.spec = std::move(spec_text);
  r.order = g.order();
  r.prime_signature = flags.prime_signature;
  r.is_abelian = flags.is_abelian;
  r.p_group_prime = flags.p_group_prime;
  r.is_solvable = flags.is_solvable;
  r.is_nilpotent = flags.is_nilpotent;
  r.center_order = lat.order_of(cd.centralizer_of[lat.whole()]);
  r.subgroup_count = lat.size();
  r.m_star = cd.m_star;
  for (auto i : cd.members) r.cd_members.push_back(make_ref(lat, i));
  r.min_member = make_ref(lat, cd.min_member);
  r.max_member = make_ref(lat, cd.max_member);
  r.measure_image = measure_image(cd);
  r.properties = std::move(props);
  r.dense = verdict.dense;
  r.pairs_checked = verdict.pairs_checked;
  r.failure_count = verdict.failure_count;
  for (auto [h, k] : verdict.failures) r.witnesses.emplace_back(make_ref(lat, h), make_ref(lat, k));

  stage("theorems", [&] {
    if (flags.p_group_prime && flags.prime_signature.front().second >= 2 && verdict.dense)
      r.p_group_profile = verify_dense_p_group_profile(g, lat, cd, verdict);
    if (flags.prime_signature.size() >= 2) {
      DensityRecord rec{r.spec, r.order, r.prime_signature, r.is_abelian, r.dense, cd.members.size(), cd.m_star};
      r.pq_classification = verify_pq_classification(std::span<const DensityRecord>(&rec, 1));
    }
    if (has_cyclic_sylows(g)) r.zm_chain = verify_zm_chain(g, cd);
    return 0;
  });
  r.timings_ms = std::move(timings);
  return {std::move(g), std::move(lat), std::move(cd), std::move(verdict), std::move(r)};
}

inline Analysis analyze(const std::string& spec_text, const AnalyzeOptions& opts = {}) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const GroupSpec spec = parse_spec(spec_text);
  GroupTable g = build(spec, opts.limits);
  std::vector<std::pair<std::string, double>> timings{
      {"build", std::chrono::duration<double, std::milli>(clock::now() - t0).count()}};
  return analyze_group(std::move(g), spec.to_string(), opts, std::move(timings));
}

// True when every theorem-backed check in the report holds.
inline bool report_consistent(const AnalysisReport& r) {
  if (!r.properties.all_passed()) return false;
  if (r.p_group_profile && !r.p_group_profile->all_passed()) return false;
  if (r.pq_classification && !r.pq_classification->all_passed()) return false;
  if (r.zm_chain && !*r.zm_chain) return false;
  return true;
}

// ---------------------------------------------------------------------------
// JSON

inline ordered_json to_json(const SubgroupRef& s) {
  return ordered_json{{"index", s.index}, {"order", s.order}, {"elements", s.elements}};
}

inline SubgroupRef subgroup_ref_from_json(const ordered_json& j) {
  return {j.at("index").get<SubgroupIndex>(), j.at("order").get<std::size_t>(),
          j.at("elements").get<std::vector<Element>>()};
}

inline ordered_json signature_json(const PrimeSignature& sig) {
  ordered_json out = ordered_json::array();
  for (auto [p, e] : sig) out.push_back({p, e});
  return out;
}

inline PrimeSignature signature_from_json(const ordered_json& j) {
  PrimeSignature sig;
  for (const auto& pe : j) sig.emplace_back(pe.at(0).get<std::uint64_t>(), pe.at(1).get<unsigned>());
  return sig;
}

inline ordered_json to_json(const TheoremReport& t) {
  ordered_json claims = ordered_json::array();
  for (const auto& c : t.claims)
    claims.push_back({{"id", c.id},
                      {"description", c.description},
                      {"passed", c.passed},
                      {"measured", c.measured},
                      {"offending", c.offending}});
  return {{"name", t.name}, {"passed", t.all_passed()}, {"claims", claims}};
}

inline TheoremReport theorem_from_json(const ordered_json& j) {
  TheoremReport t;
  t.name = j.at("name").get<std::string>();
  for (const auto& c : j.at("claims"))
    t.claims.push_back({c.at("id").get<std::string>(), c.at("description").get<std::string>(),
                        c.at("passed").get<bool>(), c.at("measured").get<std::string>(),
                        c.at("offending").get<std::vector<std::uint64_t>>()});
  return t;
}

inline ordered_json to_json(const AnalysisReport& r, bool include_timings = true) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["group"] = {{"spec", r.spec},
                {"order", r.order},
                {"prime_signature", signature_json(r.prime_signature)},
                {"is_abelian", r.is_abelian},
                {"p_group_prime", r.p_group_prime ? ordered_json(*r.p_group_prime) : ordered_json(nullptr)},
                {"is_solvable", r.is_solvable},
                {"is_nilpotent", r.is_nilpotent},
                {"center_order", r.center_order}};
  j["lattice"] = {{"subgroup_count", r.subgroup_count}};
  ordered_json members = ordered_json::array();
  for (const auto& m : r.cd_members) members.push_back(to_json(m));
  j["chermak_delgado"] = {{"m_star", r.m_star},
                          {"member_count", r.cd_members.size()},
                          {"members", members},
                          {"min_member", to_json(r.min_member)},
                          {"max_member", to_json(r.max_member)},
                          {"measure_image", r.measure_image}};
  ordered_json props = ordered_json::array();
  for (const auto& c : r.properties.checks) {
    ordered_json w = nullptr;
    if (c.witness)
      w = {{"subgroups", c.witness->subgroups},
           {"element", c.witness->element ? ordered_json(*c.witness->element) : ordered_json(nullptr)},
           {"detail", c.witness->detail}};
    props.push_back({{"id", c.id}, {"description", c.description}, {"passed", c.passed}, {"witness", w}});
  }
  j["properties"] = props;
  ordered_json wit = ordered_json::array();
  for (const auto& [h, k] : r.witnesses) wit.push_back({{"lower", to_json(h)}, {"upper", to_json(k)}});
  j["density"] = {{"dense", r.dense},
                  {"pairs_checked", r.pairs_checked},
                  {"failure_count", r.failure_count},
                  {"witnesses", wit}};
  j["theorems"] = {
      {"dense_p_group_profile", r.p_group_profile ? to_json(*r.p_group_profile) : ordered_json(nullptr)},
      {"pq_classification", r.pq_classification ? to_json(*r.pq_classification) : ordered_json(nullptr)},
      {"zm_chain", r.zm_chain ? ordered_json(*r.zm_chain) : ordered_json(nullptr)}};
  if (include_timings) {
    ordered_json t = ordered_json::object();
    for (const auto& [name, ms] : r.timings_ms) t[name] = ms;
    j["timings_ms"] = t;
  }
  return j;
}

inline AnalysisReport report_from_json(const ordered_json& j) {
  AnalysisReport r;
  r.schema_version = j.at("schema_version").get<int>();
  const auto& g = j.at("group");
  r.spec = g.at("spec").get<std::string>();
  r.order = g.at("order").get<std::uint64_t>();
  r.prime_signature = signature_from_json(g.at("prime_signature"));
  r.is_abelian = g.at("is_abelian").get<bool>();
  if (!g.at("p_group_prime").is_null()) r.p_group_prime = g.at("p_group_prime").get<std::uint64_t>();
  r.is_solvable = g.at("is_solvable").get<bool>();
  r.is_nilpotent = g.at("is_nilpotent").get<bool>();
  r.center_order = g.at("center_order").get<std::size_t>();
  r.subgroup_count = j.at("lattice").at("subgroup_count").get<std::size_t>();
  const auto& cd = j.at("chermak_delgado");
  r.m_star = cd.at("m_star").get<std::uint64_t>();
  for (const auto& m : cd.at("members")) r.cd_members.push_back(subgroup_ref_from_json(m));
  r.min_member = subgroup_ref_from_json(cd.at("min_member"));
  r.max_member = subgroup_ref_from_json(cd.at("max_member"));
  r.measure_image = cd.at("measure_image").get<std::vector<std::uint64_t>>();
  for (const auto& p : j.at("properties")) {
    PropertyCheck c;
    c.id = p.at("id").get<std::string>();
    c.description = p.at("description").get<std::string>();
    c.passed = p.at("passed").get<bool>();
    if (const auto& w = p.at("witness"); !w.is_null()) {
      Witness wt;
      wt.subgroups = w.at("subgroups").get<std::vector<SubgroupIndex>>();
      if (!w.at("element").is_null()) wt.element = w.at("element").get<Element>();
      wt.detail = w.at("detail").get<std::string>();
      c.witness = std::move(wt);
    }
    r.properties.checks.push_back(std::move(c));
  }
  const auto& d = j.at("density");
  r.dense = d.at("dense").get<bool>();
  r.pairs_checked = d.at("pairs_checked").get<std::uint64_t>();
  r.failure_count = d.at("failure_count").get<std::uint64_t>();
  for (const auto& w : d.at("witnesses"))
    r.witnesses.emplace_back(subgroup_ref_from_json(w.at("lower")), subgroup_ref_from_json(w.at("upper")));
  const auto& t = j.at("theorems");
  if (!t.at("dense_p_group_profile").is_null()) r.p_group_profile = theorem_from_json(t.at("dense_p_group_profile"));
  if (!t.at("pq_classification").is_null()) r.pq_classification = theorem_from_json(t.at("pq_classification"));
  if (!t.at("zm_chain").is_null()) r.zm_chain = t.at("zm_chain").get<bool>();
  if (j.contains("timings_ms"))
    for (const auto& [name, ms] : j.at("timings_ms").items()) r.timings_ms.emplace_back(name, ms.get<double>());
  return r;
}

// ---------------------------------------------------------------------------
// human-readable output

inline std::string describe(const SubgroupRef& s) {
  return "#" + std::to_string(s.index) + " (order " + std::to_string(s.order) + ")";
}

inline std::string render_text(const AnalysisReport& r, bool include_timings = true) {
  std::ostringstream out;
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  std::string sig;
  for (auto [p, e] : r.prime_signature) sig += (sig.empty() ? "" : " * ") + std::to_string(p) + "^" + std::to_string(e);
  out << "group        " << r.spec << "\n";
  out << "order        " << r.order << (sig.empty() ? "" : "  (" + sig + ")") << "\n";
  out << "abelian      " << yes_no(r.is_abelian) << "\n";
  out << "solvable     " << yes_no(r.is_solvable) << "\n";
  out << "nilpotent    " << yes_no(r.is_nilpotent) << "\n";
  out << "center       order " << r.center_order << "\n";
  out << "subgroups    " << r.subgroup_count << "\n";
  out << "m*           " << r.m_star << "\n";
  out << "CD members   " << r.cd_members.size() << ":";
  for (const auto& m : r.cd_members) out << " " << describe(m);
  out << "\n";
  out << "min member   " << describe(r.min_member) << "\n";
  out << "max member   " << describe(r.max_member) << "\n";
  out << "Im(m)        {";
  for (std::size_t i = 0; i < r.measure_image.size(); ++i) out << (i ? ", " : "") << r.measure_image[i];
  out << "}\n";
  out << "properties  ";
  for (const auto& c : r.properties.checks) out << " " << c.id << (c.passed ? ":ok" : ":FAIL");
  out << "\n";
  for (const auto& c : r.properties.checks)
    if (!c.passed && c.witness) out << "  " << c.id << " witness: " << c.witness->detail << "\n";
  out << "dense        " << yes_no(r.dense) << " (" << r.pairs_checked << " pairs checked, " << r.failure_count
      << " failing)\n";
  for (const auto& [h, k] : r.witnesses) out << "  witness    H = " << describe(h) << ", K = " << describe(k) << "\n";
  auto theorem = [&](const char* label, const std::optional<TheoremReport>& t) {
    if (!t) return;
    out << label << (t->all_passed() ? "holds" : "FAILS") << "\n";
    for (const auto& c : t->claims) out << "  " << c.id << ": " << c.measured << "\n";
  };
  theorem("p-group      ", r.p_group_profile);
  theorem("pq check     ", r.pq_classification);
  if (r.zm_chain) out << "ZM chain     " << (*r.zm_chain ? "holds" : "FAILS") << "\n";
  if (include_timings) {
    out << "timings (ms)";
    for (const auto& [name, ms] : r.timings_ms) out << " " << name << "=" << ms;
    out << "\n";
  }
  return out.str();
}

inline std::string render_density(const AnalysisReport& r) {
  std::ostringstream out;
  out << r.spec << ": " << (r.dense ? "dense" : "not dense") << " (" << r.pairs_checked << " pairs checked, "
      << r.failure_count << " failing)\n";
  for (const auto& [h, k] : r.witnesses) {
    out << "  H = " << describe(h) << " {";
    for (std::size_t i = 0; i < h.elements.size(); ++i) out << (i ? "," : "") << h.elements[i];
    out << "}  K = " << describe(k) << " {";
    for (std::size_t i = 0; i < k.elements.size(); ++i) out << (i ? "," : "") << k.elements[i];
    out << "}\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// DOT

// Hasse diagram of L(G): edges K -> H for covers H < K, labels order:measure,
// CD members filled, smallest and largest member double-bordered.
inline std::string hasse_dot(const Lattice& lat, const CDResult& cd, const std::string& title = "subgroup_lattice") {
  std::ostringstream out;
  std::string name;
  for (char c : title) name += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  out << "digraph " << name << " {\n";
  for (SubgroupIndex i = 0; i < lat.size(); ++i) {
    const bool member = cd.is_member(i);
    const bool extreme = member && (i == cd.min_member || i == cd.max_member);
    out << "  n" << i << " [label=\"" << lat.order_of(i) << ":" << cd.measure_of[i] << "\", shape="
        << (extreme ? "doubleoctagon" : "ellipse") << ", style=" << (member ? "filled" : "solid") << "];\n";
  }
  for (auto [h, k] : lat.covers()) out << "  n" << k << " -> n" << h << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace cdlat
