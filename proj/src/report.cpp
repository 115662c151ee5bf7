#include "lorenz/report.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "lorenz/errors.hpp"
#include "lorenz/tlink.hpp"

namespace lorenz {

Report report(const LorenzVector& v, std::string name) {
  Report r;
  r.name = std::move(name);
  r.input = format_vector(v);
  const auto normalized = normalize(v);
  if (normalized.is_unknot()) {
    r.invariants = unknot_report();
    r.torus = TorusVerdict::unknot();
    r.warnings.push_back("<" + r.input + "> destabilizes to the unknot");
    return r;
  }
  const LorenzVector& w = *normalized.vector;
  if (!(w == v)) {
    r.warnings.push_back("<" + r.input + "> destabilized to <" + format_vector(w) + ">");
  }
  r.normalized = format_vector(w);
  r.tparams = format_tparams(vector_to_tparams(w));
  r.triple = tm_triple(w);
  r.invariants = invariant_report(w);
  r.torus = is_torus(w);
  return r;
}

Report report_entry(const CensusEntry& entry) {
  Report r;
  try {
    if (!entry.vector) {
      r.name = entry.name;
      r.input = entry.raw;
      r.known = false;
      r.torus = TorusVerdict::not_torus();
      r.error = "Lorenz vector unknown";
    } else {
      r = report(*entry.vector, entry.name);
      r.input = entry.raw;
    }
  } catch (const std::exception& e) {
    r = Report{};
    r.name = entry.name;
    r.input = entry.raw;
    r.error = e.what();
  }
  r.warnings.insert(r.warnings.begin(), entry.warnings.begin(), entry.warnings.end());
  return r;
}

std::vector<Report> report_all(std::span<const CensusEntry> entries, unsigned threads) {
  std::vector<Report> out(entries.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(entries.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) out[i] = report_entry(entries[i]);
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  return out;
}

namespace {

nlohmann::json milestone_json(const MilestoneEntry& e) {
  return {{"name", e.name}, {"crossings", e.crossings}, {"strands", e.strands}};
}

}  // namespace

nlohmann::json to_json(const InvariantReport& r) {
  nlohmann::json milestones = nlohmann::json::array();
  for (const auto& e : r.milestones) milestones.push_back(milestone_json(e));
  return {
      {"unknot", r.unknot},
      {"trip_number", r.trip},
      {"components", r.components},
      {"genus", r.genus},
      {"unknotting_number", r.unknotting},
      {"excess", r.excess},
      {"milestones", milestones},
      {"min_crossings", r.min_crossings},
      {"predicted_degree", r.predicted_degree},
      {"crossing_bound", r.crossing_bound},
      {"crossing_bound_holds", r.crossing_bound_holds},
  };
}

InvariantReport invariant_report_from_json(const nlohmann::json& j) {
  InvariantReport r;
  r.unknot = j.at("unknot").get<bool>();
  r.trip = j.at("trip_number").get<int>();
  r.components = j.at("components").get<int>();
  r.genus = j.at("genus").get<long long>();
  r.unknotting = j.at("unknotting_number").get<long long>();
  r.excess = j.at("excess").get<long long>();
  const auto& ms = j.at("milestones");
  if (ms.size() != r.milestones.size()) throw ParseError("report needs exactly four milestones");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    r.milestones[i] = {ms[i].at("name").get<std::string>(), ms[i].at("crossings").get<long long>(),
                       ms[i].at("strands").get<int>()};
  }
  r.min_crossings = j.at("min_crossings").get<long long>();
  r.predicted_degree = j.at("predicted_degree").get<long long>();
  r.crossing_bound = j.at("crossing_bound").get<long long>();
  r.crossing_bound_holds = j.at("crossing_bound_holds").get<bool>();
  return r;
}

namespace {

template <typename T>
nlohmann::json optional_json(const std::optional<T>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

nlohmann::json torus_json(const TorusVerdict& v) {
  nlohmann::json j{{"verdict", to_string(v)}};
  if (v.kind == TorusVerdict::Kind::Torus) {
    j["t"] = v.t;
    j["q"] = v.q;
  }
  return j;
}

TorusVerdict torus_from_json(const nlohmann::json& j) {
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict == "Unknot") return TorusVerdict::unknot();
  if (verdict == "NotTorus") return TorusVerdict::not_torus();
  return TorusVerdict::torus(j.at("t").get<int>(), j.at("q").get<int>());
}

}  // namespace

nlohmann::json to_json(const Report& r) {
  nlohmann::json j{
      {"schema", kReportSchema},
      {"name", r.name},
      {"input", r.input},
      {"known", r.known},
      {"normalized", optional_json(r.normalized)},
      {"tparams", optional_json(r.tparams)},
      {"warnings", r.warnings},
      {"error", optional_json(r.error)},
  };
  if (r.triple) {
    j["triple"] = {{"t", r.triple->t}, {"n", r.triple->n}, {"m", r.triple->m}};
  } else {
    j["triple"] = nullptr;
  }
  j["invariants"] = to_json(r.invariants);
  j["torus"] = torus_json(r.torus);
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  if (j.value("schema", std::string{}) != kReportSchema) {
    throw ParseError("unsupported report schema '" + j.value("schema", std::string{}) + "'");
  }
  Report r;
  r.name = j.at("name").get<std::string>();
  r.input = j.at("input").get<std::string>();
  r.known = j.at("known").get<bool>();
  r.normalized = optional_from<std::string>(j, "normalized");
  r.tparams = optional_from<std::string>(j, "tparams");
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.error = optional_from<std::string>(j, "error");
  if (!j.at("triple").is_null()) {
    const auto& t = j.at("triple");
    r.triple = TmTriple{t.at("t").get<int>(), t.at("n").get<std::vector<int>>(), t.at("m").get<std::vector<int>>()};
  }
  r.invariants = invariant_report_from_json(j.at("invariants"));
  r.torus = torus_from_json(j.at("torus"));
  return r;
}

}  // namespace lorenz
