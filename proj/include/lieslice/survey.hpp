#pragma once

// Exhaustive (S,T) surveys and their serialization.
//
// JSON field names of SurveyRecord are a compatibility contract (see README);
// the table layout is for humans and may change.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lieslice/chevalley.hpp"
#include "lieslice/root_system.hpp"
#include "lieslice/seaweed.hpp"
#include "lieslice/simple_set.hpp"
#include "lieslice/slice.hpp"
#include "lieslice/verdict.hpp"

namespace lieslice {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kDefaultMaxSurveyRank = 6;

enum class PairClass { All, Borel, MinimalParabolic, Parabolic };

inline const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::All:
      return "all";
    case PairClass::Borel:
      return "borel";
    case PairClass::MinimalParabolic:
      return "minimal-parabolic";
    case PairClass::Parabolic:
      return "parabolic";
  }
  return "?";
}

inline PairClass parse_pair_class(const std::string& s) {
  if (s == "all") return PairClass::All;
  if (s == "borel") return PairClass::Borel;
  if (s == "minimal-parabolic") return PairClass::MinimalParabolic;
  if (s == "parabolic") return PairClass::Parabolic;
  throw std::invalid_argument("unknown class '" + s + "' (expected all, borel, minimal-parabolic or parabolic)");
}

inline Status parse_status(const std::string& s) {
  for (Status st : {Status::Holds, Status::Fails, Status::NotApplicable, Status::Inconclusive})
    if (s == to_string(st)) return st;
  throw std::invalid_argument("unknown status '" + s + "'");
}

class RankGuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SurveyRecord {
  std::string type;
  std::vector<int> s;  // 1-based
  std::vector<int> t;  // 1-based
  int dim_q = 0;
  int gamma_size = 0;
  int gamma0_size = 0;
  int gamma_rank = 0;
  bool qualifies = false;
  // Verification outcome; all empty when the survey ran without verification.
  std::optional<Status> overall;
  std::optional<Status> r_equals_stabilizer;
  std::optional<Status> transversal;
  std::optional<Status> stabilizer_containment;
  std::optional<Status> dim_count;
  std::optional<Status> torus_levi;
  std::optional<int> dim_w;
  std::optional<int> index_estimate;
  std::optional<int> attempts;
  std::uint64_t seed = 0;
  std::string version = kVersion;

  bool verified() const { return overall.has_value(); }
  friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

inline std::vector<int> one_based(SimpleSet s) {
  std::vector<int> out;
  for (int i : s.indices()) out.push_back(i + 1);
  return out;
}

/// (S,T) pairs of the class in survey order: S ascending as a bitmask, then T.
inline std::vector<std::pair<SimpleSet, SimpleSet>> survey_pairs(int rank, PairClass cls) {
  const SimpleSet pi = SimpleSet::full(rank);
  std::vector<std::pair<SimpleSet, SimpleSet>> out;
  switch (cls) {
    case PairClass::All:
      for (std::uint32_t s = 0; s <= pi.bits(); ++s)
        for (std::uint32_t t = 0; t <= pi.bits(); ++t) out.emplace_back(SimpleSet(s), SimpleSet(t));
      break;
    case PairClass::Borel:
      out.emplace_back(SimpleSet(), pi);
      out.emplace_back(pi, SimpleSet());
      break;
    case PairClass::MinimalParabolic:
      for (int i = 0; i < rank; ++i) out.emplace_back(SimpleSet::from_indices({i}), pi);
      break;
    case PairClass::Parabolic:
      for (std::uint32_t s = 0; s <= pi.bits(); ++s) out.emplace_back(SimpleSet(s), pi);
      break;
  }
  return out;
}

inline SurveyRecord survey_pair(std::shared_ptr<const ChevalleyBasis> cb, SimpleSet s, SimpleSet t, bool verify,
                                std::uint64_t seed) {
  auto sw = std::make_shared<const Seaweed>(std::move(cb), s, t);
  const GammaData gd = gamma_data(*sw);
  SurveyRecord r;
  r.type = sw->root_system().type_spec().to_string();
  r.s = one_based(s);
  r.t = one_based(t);
  r.dim_q = sw->dim();
  r.gamma_size = static_cast<int>(gd.gamma.size());
  r.gamma0_size = static_cast<int>(gd.gamma0.size());
  r.gamma_rank = static_cast<int>(gd.gamma_rank);
  r.qualifies = hypothesis_check(gd).qualifies;
  r.seed = seed;
  if (verify) {
    SliceOptions opt;
    opt.seed = seed;
    const VerificationReport rep = verify_slice(sw, opt);
    r.overall = rep.overall;
    r.r_equals_stabilizer = rep.r_equals_stabilizer;
    r.transversal = rep.transversal;
    r.stabilizer_containment = rep.stabilizer_containment;
    r.dim_count = rep.dim_count_ok;
    r.torus_levi = rep.torus_levi_ok;
    if (rep.dim_w) r.dim_w = static_cast<int>(*rep.dim_w);
    if (rep.index_estimate) r.index_estimate = static_cast<int>(*rep.index_estimate);
    if (rep.qualifies) r.attempts = rep.attempts;
  }
  return r;
}

/// One record per pair of the class. Refuses types above `max_rank` so a
/// typo cannot start a 4^rank enumeration.
inline std::vector<SurveyRecord> survey(const TypeSpec& spec, PairClass cls, bool verify, std::uint64_t seed,
                                        int max_rank = kDefaultMaxSurveyRank) {
  if (spec.rank() > max_rank)
    throw RankGuardError("survey of " + spec.to_string() + " (rank " + std::to_string(spec.rank()) +
                         ") exceeds the rank bound " + std::to_string(max_rank));
  auto cb = std::make_shared<const ChevalleyBasis>(RootSystem(spec));
  std::vector<SurveyRecord> out;
  for (const auto& [s, t] : survey_pairs(spec.rank(), cls)) out.push_back(survey_pair(cb, s, t, verify, seed));
  return out;
}

// ---- serialization

namespace detail {

inline nlohmann::ordered_json status_json(const std::optional<Status>& s) {
  return s ? nlohmann::ordered_json(to_string(*s)) : nlohmann::ordered_json(nullptr);
}

inline nlohmann::ordered_json int_json(const std::optional<int>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

inline std::optional<Status> status_from(const nlohmann::ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return parse_status(j.get<std::string>());
}

inline std::optional<int> int_from(const nlohmann::ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const SurveyRecord& r) {
  using detail::int_json;
  using detail::status_json;
  nlohmann::ordered_json j;
  j["type"] = r.type;
  j["S"] = r.s;
  j["T"] = r.t;
  j["dim_q"] = r.dim_q;
  j["gamma_size"] = r.gamma_size;
  j["gamma0_size"] = r.gamma0_size;
  j["gamma_rank"] = r.gamma_rank;
  j["qualifies"] = r.qualifies;
  j["verified"] = r.verified();
  j["overall"] = status_json(r.overall);
  j["r_equals_stabilizer"] = status_json(r.r_equals_stabilizer);
  j["transversal"] = status_json(r.transversal);
  j["stabilizer_containment"] = status_json(r.stabilizer_containment);
  j["dim_count"] = status_json(r.dim_count);
  j["torus_levi"] = status_json(r.torus_levi);
  j["dim_w"] = int_json(r.dim_w);
  j["index_estimate"] = int_json(r.index_estimate);
  j["attempts"] = int_json(r.attempts);
  j["seed"] = r.seed;
  j["version"] = r.version;
  return j;
}

inline SurveyRecord record_from_json(const nlohmann::ordered_json& j) {
  using detail::int_from;
  using detail::status_from;
  SurveyRecord r;
  r.type = j.at("type").get<std::string>();
  r.s = j.at("S").get<std::vector<int>>();
  r.t = j.at("T").get<std::vector<int>>();
  r.dim_q = j.at("dim_q").get<int>();
  r.gamma_size = j.at("gamma_size").get<int>();
  r.gamma0_size = j.at("gamma0_size").get<int>();
  r.gamma_rank = j.at("gamma_rank").get<int>();
  r.qualifies = j.at("qualifies").get<bool>();
  r.overall = status_from(j.at("overall"));
  r.r_equals_stabilizer = status_from(j.at("r_equals_stabilizer"));
  r.transversal = status_from(j.at("transversal"));
  r.stabilizer_containment = status_from(j.at("stabilizer_containment"));
  r.dim_count = status_from(j.at("dim_count"));
  r.torus_levi = status_from(j.at("torus_levi"));
  r.dim_w = int_from(j.at("dim_w"));
  r.index_estimate = int_from(j.at("index_estimate"));
  r.attempts = int_from(j.at("attempts"));
  r.seed = j.at("seed").get<std::uint64_t>();
  r.version = j.at("version").get<std::string>();
  return r;
}

inline std::vector<SurveyRecord> records_from_json(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("survey report must be a JSON array");
  std::vector<SurveyRecord> out;
  for (const auto& e : j) out.push_back(record_from_json(e));
  return out;
}

enum class ReportFormat { Json, Csv, Table };

inline ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "table") return ReportFormat::Table;
  throw std::invalid_argument("unknown format '" + s + "' (expected json, csv or table)");
}

namespace detail {

inline std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (int x : v) {
    if (!out.empty()) out += sep;
    out += std::to_string(x);
  }
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Flat string cells shared by the CSV and table writers.
inline std::vector<std::string> cells(const SurveyRecord& r) {
  auto st = [](const std::optional<Status>& s) { return s ? std::string(to_string(*s)) : std::string(); };
  auto num = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  return {r.type,
          join(r.s, ','),
          join(r.t, ','),
          std::to_string(r.dim_q),
          std::to_string(r.gamma_size),
          std::to_string(r.gamma0_size),
          std::to_string(r.gamma_rank),
          r.qualifies ? "true" : "false",
          r.verified() ? "true" : "false",
          st(r.overall),
          st(r.r_equals_stabilizer),
          st(r.transversal),
          st(r.stabilizer_containment),
          st(r.dim_count),
          st(r.torus_levi),
          num(r.dim_w),
          num(r.index_estimate),
          num(r.attempts),
          std::to_string(r.seed),
          r.version};
}

inline const std::vector<std::string>& headers() {
  static const std::vector<std::string> h = {"type",
                                             "S",
                                             "T",
                                             "dim_q",
                                             "gamma_size",
                                             "gamma0_size",
                                             "gamma_rank",
                                             "qualifies",
                                             "verified",
                                             "overall",
                                             "r_equals_stabilizer",
                                             "transversal",
                                             "stabilizer_containment",
                                             "dim_count",
                                             "torus_levi",
                                             "dim_w",
                                             "index_estimate",
                                             "attempts",
                                             "seed",
                                             "version"};
  return h;
}

}  // namespace detail

inline void write_report(const std::vector<SurveyRecord>& records, ReportFormat fmt, std::ostream& os) {
  switch (fmt) {
    case ReportFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : records) arr.push_back(to_json(r));
      os << arr.dump(2) << '\n';
      break;
    }
    case ReportFormat::Csv: {
      const auto& h = detail::headers();
      for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
      os << '\n';
      for (const auto& r : records) {
        const auto c = detail::cells(r);
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << detail::csv_field(c[i]);
        os << '\n';
      }
      break;
    }
    case ReportFormat::Table: {
      std::vector<std::vector<std::string>> rows{detail::headers()};
      for (const auto& r : records) rows.push_back(detail::cells(r));
      std::vector<std::size_t> width(rows[0].size(), 0);
      for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) line += "  ";
          line += row[i] + std::string(width[i] - row[i].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
      }
      break;
    }
  }
}

/// Writes to `path`, or to stdout when `path` is empty or "-".
inline void emit_report(const std::vector<SurveyRecord>& records, ReportFormat fmt, const std::string& path) {
  if (path.empty() || path == "-") {
    write_report(records, fmt, std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_report(records, fmt, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

inline std::string report_string(const std::vector<SurveyRecord>& records, ReportFormat fmt) {
  std::ostringstream os;
  write_report(records, fmt, os);
  return os.str();
}

}  // namespace lieslice
