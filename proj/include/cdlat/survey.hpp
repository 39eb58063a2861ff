#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cdlat/catalog.hpp"
#include "cdlat/chermak_delgado.hpp"
#include "cdlat/density.hpp"
#include "cdlat/lattice.hpp"

namespace cdlat {

struct SurveyRow {
  GroupSpec spec;
  DensityRecord record;
  std::size_t subgroup_count = 0;
  std::vector<std::string> failed_properties;
  std::optional<bool> zm_chain;              // groups with cyclic Sylow subgroups
  std::optional<TheoremReport> p_group_profile;  // dense p-groups of order >= p^2
  std::optional<SubgroupIndex> first_failure_lower, first_failure_upper;
  std::string error;

  bool properties_passed() const { return error.empty() && failed_properties.empty(); }
};

struct SurveyResult {
  std::uint64_t max_order = 0;
  std::vector<SurveyRow> rows;
  TheoremReport pq_classification;
  std::vector<std::size_t> pq_rows;       // rows entering the pq check
  std::vector<std::size_t> profile_rows;  // rows entering the p-group check

  bool properties_passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const SurveyRow& r) { return r.properties_passed(); });
  }
  bool profiles_passed() const {
    return std::all_of(profile_rows.begin(), profile_rows.end(),
                       [&](std::size_t i) { return rows[i].p_group_profile->all_passed(); });
  }
  bool zm_passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const SurveyRow& r) { return r.zm_chain.value_or(true); });
  }
  bool all_passed() const {
    return properties_passed() && profiles_passed() && zm_passed() && pq_classification.all_passed();
  }
};

inline SurveyRow survey_one(const GroupSpec& spec, const Limits& limits) {
  SurveyRow row;
  row.spec = spec;
  row.record.name = spec.to_string();
  try {
    const GroupTable g = build(spec, limits);
    const Lattice lat = enumerate_subgroups(g, limits);
    const CDResult cd = cd_lattice(g, lat);
    const DensityVerdict verdict = is_dense_cd(lat, cd, 1);
    const PropertyReport props = verify_cd_properties(g, lat, cd, limits);
    row.failed_properties = props.failed_ids();
    row.subgroup_count = lat.size();
    row.record.order = g.order();
    row.record.prime_signature = factorize(g.order());
    row.record.is_abelian = is_abelian(g);
    row.record.dense = verdict.dense;
    row.record.cd_size = cd.members.size();
    row.record.m_star = cd.m_star;
    if (!verdict.failures.empty()) {
      row.first_failure_lower = verdict.failures.front().first;
      row.first_failure_upper = verdict.failures.front().second;
    }
    if (has_cyclic_sylows(g)) row.zm_chain = verify_zm_chain(g, cd);
    const auto& sig = row.record.prime_signature;
    if (sig.size() == 1 && sig.front().second >= 2 && verdict.dense)
      row.p_group_profile = verify_dense_p_group_profile(g, lat, cd, verdict);
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

// Rows are computed by `jobs` workers and stored by corpus position, so the
// result is independent of scheduling.
inline SurveyResult run_survey(std::uint64_t max_order, unsigned jobs = 1, const Limits& limits = {}) {
  const std::vector<GroupSpec> corpus = survey_corpus(max_order, limits);
  SurveyResult result;
  result.max_order = max_order;
  result.rows.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) result.rows[i] = survey_one(corpus[i], limits);
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  std::vector<DensityRecord> pq_records;
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const auto& row = result.rows[i];
    if (!row.error.empty()) continue;
    if (row.record.prime_signature.size() >= 2) {
      result.pq_rows.push_back(i);
      pq_records.push_back(row.record);
    }
    if (row.p_group_profile) result.profile_rows.push_back(i);
  }
  result.pq_classification = verify_pq_classification(pq_records);
  return result;
}

// JSON Lines: a header, one line per group, then the two verdict blocks.
inline std::string render_survey(const SurveyResult& s) {
  using json = nlohmann::ordered_json;
  std::ostringstream out;
  out << json{{"kind", "survey"},
              {"schema_version", 1},
              {"max_order", s.max_order},
              {"group_count", s.rows.size()}}
             .dump()
      << "\n";
  for (const auto& row : s.rows) {
    json sig = json::array();
    for (auto [p, e] : row.record.prime_signature) sig.push_back({p, e});
    json j{{"kind", "group"},
           {"spec", row.record.name},
           {"order", row.record.order},
           {"prime_signature", sig},
           {"is_abelian", row.record.is_abelian},
           {"dense", row.record.dense},
           {"cd_size", row.record.cd_size},
           {"m_star", row.record.m_star},
           {"subgroup_count", row.subgroup_count},
           {"properties_passed", row.properties_passed()},
           {"failed_properties", row.failed_properties},
           {"zm_chain", row.zm_chain ? json(*row.zm_chain) : json(nullptr)},
           {"dense_p_group_profile", row.p_group_profile ? json(row.p_group_profile->all_passed()) : json(nullptr)},
           {"first_failure",
            row.first_failure_lower ? json{*row.first_failure_lower, *row.first_failure_upper} : json(nullptr)}};
    if (!row.error.empty()) j["error"] = row.error;
    out << j.dump() << "\n";
  }

  json counter = json::array();
  std::size_t dense = 0;
  for (std::size_t i : s.pq_rows) dense += s.rows[i].record.dense;
  for (auto pos : s.pq_classification.claims.front().offending) counter.push_back(s.rows[s.pq_rows[pos]].record.name);
  out << json{{"kind", "pq_classification"},
              {"groups_checked", s.pq_rows.size()},
              {"dense_groups", dense},
              {"passed", s.pq_classification.all_passed()},
              {"counterexamples", counter}}
             .dump()
      << "\n";

  json groups = json::array(), failures = json::array();
  for (std::size_t i : s.profile_rows) {
    const auto& row = s.rows[i];
    groups.push_back(row.record.name);
    if (!row.p_group_profile->all_passed()) {
      json claims = json::array();
      for (const auto& c : row.p_group_profile->claims)
        if (!c.passed) claims.push_back(c.id);
      failures.push_back({{"spec", row.record.name}, {"failed_claims", claims}});
    }
  }
  out << json{{"kind", "dense_p_group_profile"},
              {"groups_checked", s.profile_rows.size()},
              {"passed", s.profiles_passed()},
              {"groups", groups},
              {"failures", failures}}
             .dump()
      << "\n";
  return out.str();
}

}  // namespace cdlat
