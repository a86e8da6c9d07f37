// lieslice: command-line front end for cascades, seaweed subalgebras and
// affine slices of their coadjoint representations.
//
// Exit codes: 0 every verdict holds or does not apply, 1 a verdict failed,
// 2 usage error, 3 inconclusive (no good slice coefficients found).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "lieslice/lieslice.hpp"

namespace {

using namespace lieslice;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  std::string format = "table";
  std::uint64_t seed = 0;
  std::string out;
};

int exit_code(Status s) {
  switch (s) {
    case Status::Fails:
      return kExitFailed;
    case Status::Inconclusive:
      return kExitInconclusive;
    default:
      return kExitOk;
  }
}

int worst(int a, int b) {
  if (a == kExitFailed || b == kExitFailed) return kExitFailed;
  if (a == kExitInconclusive || b == kExitInconclusive) return kExitInconclusive;
  return kExitOk;
}

// "all", "none"/"" or a 1-based comma list such as "1,3".
SimpleSet parse_subset(const std::string& text, int rank) {
  if (text == "all") return SimpleSet::full(rank);
  if (text == "none" || text.empty()) return {};
  SimpleSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int i = 0;
    try {
      i = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad subset entry '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad subset entry '" + item + "'");
    if (i < 1 || i > rank)
      throw UsageError("simple root index " + std::to_string(i) + " out of range 1.." + std::to_string(rank));
    if (s.contains(i - 1)) throw UsageError("simple root index " + std::to_string(i) + " repeated");
    s.insert(i - 1);
  }
  return s;
}

TypeSpec parse_type(const std::string& text) {
  try {
    return TypeSpec::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void require_format(const Globals& g, bool csv_ok) {
  if (g.format == "json" || g.format == "table" || (csv_ok && g.format == "csv")) return;
  throw UsageError("unsupported --format '" + g.format + "' for this command");
}

void write_output(const Globals& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open '" + g.out + "' for writing");
  f << text;
  if (!f.flush()) throw UsageError("failed writing '" + g.out + "'");
}

Json subset_json(SimpleSet s) { return Json(one_based(s)); }

std::string status_cell(Status s) { return to_string(s); }

// ---- cascade

int run_cascade(const Globals& g, const std::string& type, const std::string& subset) {
  require_format(g, false);
  const RootSystem rs(parse_type(type));
  const SimpleSet s = parse_subset(subset, rs.rank());
  const Cascade c = cascade(rs, s);
  const Verdict v = check_cascade_properties(rs, s);

  std::ostringstream os;
  if (g.format == "json") {
    Json j;
    j["type"] = rs.type_spec().to_string();
    j["subset"] = subset_json(s);
    Json elems = Json::array();
    for (const auto& e : c) {
      Json je;
      je["K"] = subset_json(e.support);
      je["eps"] = e.eps;
      je["eps_label"] = root_label(e.eps);
      je["bullet"] = subset_json(e.bullet);
      elems.push_back(je);
    }
    j["elements"] = elems;
    j["properties"] = to_string(v.status);
    j["note"] = v.note;
    os << j.dump(2) << '\n';
  } else {
    os << rs.type_spec().to_string() << "  S = " << describe(s) << "  |K(S)| = " << c.size() << '\n';
    for (const auto& e : c)
      os << "  K = " << describe(e.support) << "  eps = " << root_label(e.eps) << "  K• = " << describe(e.bullet)
         << '\n';
    os << "properties: " << to_string(v.status) << (v.note.empty() ? "" : "  " + v.note) << '\n';
  }
  write_output(g, os.str());
  return exit_code(v.status);
}

// ---- seaweed

std::vector<std::string> root_labels(const RootSystem& rs, const std::vector<int>& roots) {
  std::vector<std::string> out;
  for (int r : roots) out.push_back(root_label(rs.root(r)));
  return out;
}

std::string join_labels(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ", ") + x;
  return "{" + out + "}";
}

int run_seaweed(const Globals& g, const std::string& type, const std::string& s_text, const std::string& t_text) {
  require_format(g, false);
  auto cb = std::make_shared<const ChevalleyBasis>(RootSystem(parse_type(type)));
  const RootSystem& rs = cb->root_system();
  const Seaweed sw(cb, parse_subset(s_text, rs.rank()), parse_subset(t_text, rs.rank()));
  const GammaData gd = gamma_data(sw);
  const Hypothesis hyp = hypothesis_check(gd);
  const Verdict ident = check_structure_identities(sw, gd);

  std::ostringstream os;
  if (g.format == "json") {
    Json j;
    j["type"] = rs.type_spec().to_string();
    j["S"] = subset_json(sw.s());
    j["T"] = subset_json(sw.t());
    j["dim_q"] = sw.dim();
    j["delta"] = root_labels(rs, sw.delta());
    j["gamma"] = root_labels(rs, gd.gamma);
    j["gamma0"] = root_labels(rs, gd.gamma0);
    j["gamma1"] = root_labels(rs, gd.gamma1);
    j["gamma_rank"] = gd.gamma_rank;
    j["dim_t"] = gd.t_basis.size();
    j["dim_m_roots"] = gd.m_roots.size();
    j["dim_n_roots"] = gd.n_roots.size();
    j["gamma0_empty"] = hyp.gamma0_empty;
    j["gamma_independent"] = hyp.independent;
    j["qualifies"] = hyp.qualifies;
    j["structure_identities"] = to_string(ident.status);
    j["note"] = ident.note;
    os << j.dump(2) << '\n';
  } else {
    os << rs.type_spec().to_string() << "  S = " << describe(sw.s()) << "  T = " << describe(sw.t()) << '\n'
       << "dim q      " << sw.dim() << '\n'
       << "Delta      " << join_labels(root_labels(rs, sw.delta())) << '\n'
       << "Gamma      " << join_labels(root_labels(rs, gd.gamma)) << "  rank " << gd.gamma_rank << '\n'
       << "Gamma0     " << join_labels(root_labels(rs, gd.gamma0)) << '\n'
       << "Gamma1     " << join_labels(root_labels(rs, gd.gamma1)) << '\n'
       << "qualifies  " << (hyp.qualifies ? "yes" : "no") << '\n'
       << "identities " << to_string(ident.status) << (ident.note.empty() ? "" : "  " + ident.note) << '\n';
  }
  write_output(g, os.str());
  return exit_code(ident.status);
}

// ---- slice

struct SliceArgs {
  std::string type, s, t;
  std::string a = "ones";
  int samples = kDefaultSamples;
};

int run_slice(const Globals& g, const SliceArgs& args) {
  require_format(g, false);
  if (args.a != "ones" && args.a != "random") throw UsageError("--a must be ones or random");
  if (args.samples < 0) throw UsageError("--samples must be >= 0");
  auto cb = std::make_shared<const ChevalleyBasis>(RootSystem(parse_type(args.type)));
  const RootSystem& rs = cb->root_system();
  auto sw = std::make_shared<const Seaweed>(cb, parse_subset(args.s, rs.rank()), parse_subset(args.t, rs.rank()));

  SliceOptions opt;
  opt.seed = g.seed;
  opt.samples = args.samples;
  opt.start_random = args.a == "random";
  const VerificationReport rep = verify_slice(sw, opt);

  std::vector<std::string> a_used;
  for (const auto& x : rep.a_used) a_used.push_back(to_string(x));
  auto opt_num = [](const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); };

  std::ostringstream os;
  if (g.format == "json") {
    Json j;
    j["type"] = rs.type_spec().to_string();
    j["S"] = subset_json(sw->s());
    j["T"] = subset_json(sw->t());
    j["dim_q"] = sw->dim();
    j["qualifies"] = rep.qualifies;
    j["overall"] = to_string(rep.overall);
    j["a"] = a_used;
    j["attempts"] = rep.attempts;
    j["stabilizer_dim_at_fa"] = opt_num(rep.stabilizer_dim_at_fa);
    j["dim_w"] = opt_num(rep.dim_w);
    j["r_equals_stabilizer"] = to_string(rep.r_equals_stabilizer);
    j["samples"] = rep.transversality_samples;
    j["transversal"] = to_string(rep.transversal);
    j["stabilizer_containment"] = to_string(rep.stabilizer_containment);
    j["dim_count"] = to_string(rep.dim_count_ok);
    j["torus_levi"] = to_string(rep.torus_levi_ok);
    j["index_estimate"] = opt_num(rep.index_estimate);
    j["seed"] = g.seed;
    j["note"] = rep.note;
    os << j.dump(2) << '\n';
  } else {
    auto num = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
    std::string a_text;
    for (const auto& x : a_used) a_text += (a_text.empty() ? "" : ",") + x;
    os << rs.type_spec().to_string() << "  S = " << describe(sw->s()) << "  T = " << describe(sw->t())
       << "  dim q = " << sw->dim() << '\n'
       << "qualifies               " << (rep.qualifies ? "yes" : "no") << '\n'
       << "a                       " << (a_text.empty() ? "-" : a_text) << "  (attempts " << rep.attempts << ")\n"
       << "dim q^{f_a}             " << num(rep.stabilizer_dim_at_fa) << '\n'
       << "dim W_a                 " << num(rep.dim_w) << '\n'
       << "q^{f_a} = r_a           " << status_cell(rep.r_equals_stabilizer) << '\n'
       << "transversal             " << status_cell(rep.transversal) << "  (" << rep.transversality_samples
       << " random points)\n"
       << "r_a stabilizes V_a      " << status_cell(rep.stabilizer_containment) << '\n'
       << "dimension count         " << status_cell(rep.dim_count_ok) << '\n'
       << "torus/Levi              " << status_cell(rep.torus_levi_ok) << '\n'
       << "index (sampled)         " << num(rep.index_estimate) << '\n'
       << "overall                 " << to_string(rep.overall) << (rep.note.empty() ? "" : "  " + rep.note) << '\n';
  }
  write_output(g, os.str());
  return exit_code(rep.overall);
}

// ---- survey

struct SurveyArgs {
  std::string type;
  std::string cls = "all";
  bool verify = false;
  int max_rank = kDefaultMaxSurveyRank;
};

int run_survey(const Globals& g, const SurveyArgs& args) {
  require_format(g, true);
  const TypeSpec spec = parse_type(args.type);
  std::vector<SurveyRecord> records;
  try {
    records = survey(spec, parse_pair_class(args.cls), args.verify, g.seed, args.max_rank);
  } catch (const RankGuardError& e) {
    throw UsageError(std::string(e.what()) + "; raise --max-rank to override");
  }
  try {
    emit_report(records, parse_report_format(g.format), g.out);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  int code = kExitOk;
  for (const auto& r : records)
    if (r.overall) code = worst(code, exit_code(*r.overall));
  return code;
}

// ---- verify-lemmas

int run_verify_lemmas(const Globals& g, int max_rank) {
  require_format(g, false);
  if (max_rank < 1 || max_rank > 8) throw UsageError("--max-rank must be in 1..8");
  const auto suites = run_lemma_suites(max_rank);
  int code = kExitOk;
  std::ostringstream os;
  if (g.format == "json") {
    Json arr = Json::array();
    for (const auto& s : suites) {
      Json j;
      j["suite"] = s.name;
      j["types"] = s.types;
      j["cases"] = s.cases;
      j["applicable"] = s.applicable;
      j["verdict"] = to_string(s.verdict.status);
      j["note"] = s.verdict.note;
      arr.push_back(j);
    }
    os << arr.dump(2) << '\n';
  } else {
    for (const auto& s : suites)
      os << s.name << ": " << to_string(s.verdict.status) << "  cases " << s.cases << ", applicable " << s.applicable
         << (s.verdict.note.empty() ? "" : "  " + s.verdict.note) << '\n';
  }
  for (const auto& s : suites) code = worst(code, exit_code(s.verdict.status));
  write_output(g, os.str());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cascades, seaweed subalgebras and affine slices of coadjoint representations"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format: json, table (csv for survey)")
      ->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--seed", g.seed, "Seed for every random choice");
  app.add_option("--out", g.out, "Write the report to this file instead of stdout");

  std::string type, subset = "all", s_text = "none", t_text = "all";

  auto* cas = app.add_subcommand("cascade", "Kostant cascade of a subset of simple roots");
  cas->add_option("--type", type, "Type such as A5, B3 or A2xG2")->required();
  cas->add_option("--subset", subset, "Simple roots: all, none or a 1-based list like 1,3");

  auto* sea = app.add_subcommand("seaweed", "Seaweed subalgebra q_{S,T} and its Γ data");
  sea->add_option("--type", type, "Type such as A5, B3 or A2xG2")->required();
  sea->add_option("--s", s_text, "S: all, none or a 1-based list");
  sea->add_option("--t", t_text, "T: all, none or a 1-based list");

  SliceArgs slice_args;
  auto* sli = app.add_subcommand("slice", "Build and verify the affine slice of q_{S,T}");
  sli->add_option("--type", slice_args.type, "Type such as A5, B3 or A2xG2")->required();
  sli->add_option("--s", s_text, "S: all, none or a 1-based list");
  sli->add_option("--t", t_text, "T: all, none or a 1-based list");
  sli->add_option("--a", slice_args.a, "First coefficient choice: ones or random")
      ->check(CLI::IsMember({"ones", "random"}));
  sli->add_option("--samples", slice_args.samples, "Random points of the slice to test");

  SurveyArgs survey_args;
  auto* sur = app.add_subcommand("survey", "Hypothesis (and optionally slice) survey over (S,T) pairs");
  sur->add_option("--type", survey_args.type, "Type such as A5, B3 or A2xG2")->required();
  sur->add_option("--class", survey_args.cls, "all, borel, minimal-parabolic or parabolic")
      ->check(CLI::IsMember({"all", "borel", "minimal-parabolic", "parabolic"}));
  sur->add_flag("--verify", survey_args.verify, "Run the slice verification on qualifying pairs");
  sur->add_option("--max-rank", survey_args.max_rank, "Refuse types of larger rank");

  int lemma_rank = 5;
  auto* lem = app.add_subcommand("verify-lemmas", "Exhaustive cascade suites and the A5 counterexample");
  lem->add_option("--max-rank", lemma_rank, "Largest rank of the simple types examined");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cas) return run_cascade(g, type, subset);
    if (*sea) return run_seaweed(g, type, s_text, t_text);
    if (*sli) {
      slice_args.s = s_text;
      slice_args.t = t_text;
      return run_slice(g, slice_args);
    }
    if (*sur) return run_survey(g, survey_args);
    if (*lem) return run_verify_lemmas(g, lemma_rank);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
