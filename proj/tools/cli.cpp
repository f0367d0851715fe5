#include "cli.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "racg/racg.hpp"

namespace racg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string file;
  std::string format = "text";
  bool timing = false;
  unsigned threads = 1;
};

Json names(const Presentation& p, GeneratorSet s) {
  Json out = Json::array();
  for (Generator g : s) out.push_back(p.name(g));
  return out;
}

std::string word_text(const Presentation& p, std::span<const Generator> w) {
  return p.format(w);
}

Json presentation_json(const Presentation& p) {
  Json pairs = Json::array();
  for (auto [s, t] : p.commuting_pairs()) pairs.push_back(Json::array({p.name(s), p.name(t)}));
  return {{"generators", p.names()},
          {"commuting_pairs", pairs},
          {"digest", presentation_digest(p)}};
}

Json density_json(const Presentation& p, const QuasiDensityVerdict& v) {
  if (v.dense()) return {{"verdict", "dense"}, {"n", v.as_dense().n}};
  const NotWithin& hole = v.as_not_within();
  Json out = {{"verdict", "not_within"},
              {"n_max", hole.n_max},
              {"counterexample", word_text(p, hole.counterexample.letters())}};
  out["target_distance"] =
      hole.target_distance ? Json(*hole.target_distance) : Json(nullptr);
  return out;
}

Json hole_json(const Presentation& p, Generator s, int radius, int n_max,
               const std::optional<NotWithin>& hole) {
  Json out = {{"generator", p.name(s)}, {"radius", radius}, {"n_max", n_max}};
  if (!hole) {
    out["counterexample"] = nullptr;
    return out;
  }
  out["counterexample"] = word_text(p, hole->counterexample.letters());
  out["target_distance"] =
      hole->target_distance ? Json(*hole->target_distance) : Json(nullptr);
  return out;
}

std::string set_text(const Json& arr) {
  std::string out = "{";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ", ";
    out += arr[i].get<std::string>();
  }
  return out + "}";
}

std::string word_or_identity(const Json& w) {
  const std::string s = w.get<std::string>();
  return s.empty() ? "e" : s;
}

// ---- text rendering -------------------------------------------------------

void render_header(const Json& r, std::ostream& out) {
  out << "command:      " << r["command"].get<std::string>() << "\n";
  out << "presentation: " << r["presentation"]["generators"].size()
      << " generators, " << r["presentation"]["commuting_pairs"].size()
      << " commuting pairs, digest " << r["presentation"]["digest"].get<std::string>()
      << "\n";
}

void render_reduce(const Json& r, std::ostream& out) {
  out << "normal form:    " << word_or_identity(r["normal_form"]) << "\n";
  out << "length:         " << r["length"].get<int>() << "\n";
  out << "right descents: " << set_text(r["right_descents"]) << "\n";
  out << "left descents:  " << set_text(r["left_descents"]) << "\n";
}

void render_analyze(const Json& r, std::ostream& out) {
  out << "components:";
  for (const auto& c : r["components"]) out << " " << set_text(c);
  out << "\nS~:          " << set_text(r["s_tilde"]) << "\n";
  out << "finite part: " << set_text(r["finite_part"]) << "\n";
  out << "maximal spherical subsets:";
  for (const auto& c : r["maximal_spherical_subsets"]) out << " " << set_text(c);
  out << "\nminimality:  " << r["minimality"]["verdict"].get<std::string>();
  if (r["minimality"].contains("splitting")) {
    out << " (" << set_text(r["minimality"]["splitting"][0]) << " x "
        << set_text(r["minimality"]["splitting"][1]) << ")";
  }
  out << "\n";
  if (r.contains("orbit_density")) {
    const auto& o = r["orbit_density"];
    out << "subset " << set_text(o["subset"]) << ": infinite="
        << (o["infinite"].get<bool>() ? "yes" : "no")
        << " orbit_dense=" << (o["dense"].get<bool>() ? "true" : "false") << "\n";
  }
}

void render_density(const Json& d, std::ostream& out) {
  if (d["verdict"] == "dense") {
    out << "dense (N=" << d["n"].get<int>() << ")";
  } else {
    out << "not within N=" << d["n_max"].get<int>() << ", counterexample "
        << word_or_identity(d["counterexample"]);
  }
}

void render_hole(const Json& h, std::ostream& out) {
  out << "  " << std::left << std::setw(6) << h["generator"].get<std::string>();
  if (h["counterexample"].is_null()) {
    out << "no hole at R=" << h["radius"].get<int>()
        << ", N_max=" << h["n_max"].get<int>() << "\n";
    return;
  }
  out << "hole " << word_or_identity(h["counterexample"]) << " (distance ";
  if (h["target_distance"].is_null())
    out << "> " << h["n_max"].get<int>() << ", no target in ball";
  else
    out << h["target_distance"].get<std::size_t>();
  out << ")\n";
}

void render_witness(const Json& r, std::ostream& out) {
  const std::string outcome = r["outcome"].get<std::string>();
  out << "outcome: " << outcome << "\n";
  if (outcome == "witness") {
    const auto& w = r["witness"];
    out << "  s0:           " << w["s0"].get<std::string>() << "\n";
    out << "  start clique: " << set_text(w["start_clique"]) << "\n";
    out << "  chain:        " << word_or_identity(w["chain"]) << "\n";
    out << "  trace:       ";
    for (const auto& v : w["trace"]) out << " " << set_text(v);
    out << "\n  bound N:      " << w["bound_n"].get<int>() << "\n";
    const auto& c = r["certification"];
    out << "certification at R=" << c["radius"].get<int>() << ": "
        << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
    out << "  inclusion: " << c["inclusion_cases"].get<std::size_t>()
        << " cases, " << c["inclusion_violations"].size() << " violations\n";
    for (const auto& v : c["inclusion_violations"])
      out << "    violation: " << word_or_identity(v) << "\n";
    out << "  density:   ";
    render_density(c["density"], out);
    out << "\n";
  } else if (outcome == "splitting") {
    out << "  " << set_text(r["splitting"][0]) << " x "
        << set_text(r["splitting"][1]) << "\n";
    out << "holes:\n";
    for (const auto& h : r["holes"]) render_hole(h, out);
  }
}

void render_verify(const Json& r, std::ostream& out) {
  out << "ball radius " << r["radius"].get<int>() << ", "
      << r["ball_size"].get<std::size_t>() << " elements\n";
  for (const auto& s : r["suites"]) {
    out << "  " << (s["violations"].get<std::size_t>() == 0 ? "PASS" : "FAIL")
        << "  " << std::left << std::setw(20) << s["name"].get<std::string>()
        << std::right << std::setw(9) << s["cases"].get<std::size_t>()
        << " cases  " << s["violations"].get<std::size_t>() << " violations\n";
    for (const auto& c : s["counterexamples"])
      out << "        counterexample: " << c.get<std::string>() << "\n";
  }
  out << (r["passed"].get<bool>() ? "all suites passed" : "VIOLATIONS FOUND")
      << "\n";
}

// ---- commands -------------------------------------------------------------

Json cmd_reduce(const Presentation& p, const std::string& word_text_in) {
  Word w = p.parse_word(word_text_in);
  NormalForm nf = reduce(p, w);
  return {{"word", word_text_in},
          {"normal_form", word_text(p, nf.letters())},
          {"length", nf.length()},
          {"right_descents", names(p, right_descents(p, nf))},
          {"left_descents", names(p, left_descents(p, nf))}};
}

Json cmd_analyze(const Presentation& p, const std::optional<std::string>& subset) {
  Decomposition d = irreducible_components(p);
  Json comps = Json::array();
  for (auto c : d.components) comps.push_back(names(p, c));
  Json cliques = Json::array();
  for (auto c : maximal_spherical_subsets(p)) cliques.push_back(names(p, c));
  Json minimality;
  auto verdict = boundary_minimal(p);
  if (std::holds_alternative<Minimal>(verdict)) {
    minimality = {{"verdict", "minimal"}};
  } else if (std::holds_alternative<EmptyBoundary>(verdict)) {
    minimality = {{"verdict", "empty_boundary"}};
  } else {
    const auto& s = std::get<Splitting>(verdict);
    minimality = {{"verdict", "not_minimal"},
                  {"splitting", Json::array({names(p, s.first), names(p, s.rest)})}};
  }
  Json out = {{"components", comps},
              {"s_tilde", names(p, d.s_tilde)},
              {"finite_part", names(p, d.finite_part)},
              {"maximal_spherical_subsets", cliques},
              {"minimality", minimality}};
  if (subset) {
    GeneratorSet t = p.parse_subset(*subset);
    out["orbit_density"] = {{"subset", names(p, t)},
                            {"infinite", is_infinite(p, t)},
                            {"dense", parabolic_orbit_dense(p, t)}};
  }
  return out;
}

struct WitnessFlags {
  int radius = 8;
  int hole_radius = 12;
  int n_max = 4;
};

Json cmd_witness(const Presentation& p, const WitnessFlags& flags,
                 const BallOptions& options, int& exit_code) {
  WitnessOutcome outcome = find_witness(p);
  Json out;
  if (std::holds_alternative<FiniteGroup>(outcome)) {
    out["outcome"] = "finite_group";
    return out;
  }
  if (const auto* split = std::get_if<Splitting>(&outcome)) {
    out["outcome"] = "splitting";
    out["splitting"] = Json::array({names(p, split->first), names(p, split->rest)});
    Ball b = Ball::build(p, flags.hole_radius, options);
    Json holes = Json::array();
    for (Generator s : p.all()) {
      holes.push_back(hole_json(p, s, flags.hole_radius, flags.n_max,
                                find_hole(b, s, flags.n_max)));
    }
    out["holes"] = holes;
    return out;
  }
  const auto& w = std::get<QuasiDensityWitness>(outcome);
  Json trace = Json::array();
  for (auto v : w.trace) trace.push_back(names(p, v));
  out["outcome"] = "witness";
  out["witness"] = {{"s0", p.name(w.s0)},
                    {"start_clique", names(p, w.start_clique)},
                    {"chain", word_text(p, w.chain)},
                    {"trace", trace},
                    {"bound_n", w.bound_n}};
  CertificationReport report = certify_witness(p, w, flags.radius, options);
  Json violations = Json::array();
  for (const auto& v : report.inclusion_violations)
    violations.push_back(word_text(p, v.letters()));
  const bool passed = report.passed(w.bound_n);
  out["certification"] = {{"radius", report.radius},
                          {"inclusion_cases", report.inclusion_cases},
                          {"inclusion_violations", violations},
                          {"density", density_json(p, report.density)},
                          {"passed", passed}};
  if (!passed) exit_code = kCheckFailed;
  return out;
}

Json cmd_verify(const Presentation& p, int radius, const VerifyOptions& vopts,
                const BallOptions& options, int& exit_code) {
  Ball b = Ball::build(p, radius, options);
  auto results = run_suites(b, vopts);
  Json suites = Json::array();
  bool passed = true;
  for (const auto& r : results) {
    passed = passed && r.passed();
    suites.push_back({{"name", r.name},
                      {"statement", r.statement},
                      {"cases", r.cases},
                      {"violations", r.violations},
                      {"counterexamples", r.counterexamples}});
  }
  if (!passed) exit_code = kCheckFailed;
  return {{"radius", radius},
          {"ball_size", b.size()},
          {"sphere_sizes", b.sphere_sizes()},
          {"suites", suites},
          {"passed", passed}};
}

std::string echo(std::span<const std::string> args) {
  std::string out;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (i > 1) out += ' ';
    const std::string& a = args[i];
    bool quote = a.empty() || a.find(' ') != std::string::npos;
    out += quote ? "\"" + a + "\"" : a;
  }
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Right-angled Coxeter systems: normal forms, structure, and "
               "boundary-minimality witnesses"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", common.file, "presentation file")->required();
    sub->add_option("--format", common.format, "report format")
        ->check(CLI::IsMember({"text", "machine"}));
    sub->add_flag("--timing", common.timing, "include elapsed time in the report");
    sub->add_option("--threads", common.threads, "ball construction threads")
        ->check(CLI::Range(1U, 256U));
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "normal form and descent sets of a word");
  add_common(reduce_cmd);
  std::string word_positional;
  std::optional<std::string> word_flag;
  reduce_cmd->add_option("WORD", word_positional, "space-separated generator names");
  reduce_cmd->add_option("--word", word_flag, "space-separated generator names");

  auto* analyze_cmd = app.add_subcommand("analyze", "decomposition and minimality verdict");
  add_common(analyze_cmd);
  std::optional<std::string> subset;
  analyze_cmd->add_option("--subset", subset,
                          "generator subset T for the parabolic orbit-density decision");

  auto* witness_cmd = app.add_subcommand("witness", "quasi-density witness or splitting");
  add_common(witness_cmd);
  WitnessFlags wflags;
  witness_cmd->add_option("--radius", wflags.radius, "certification radius")
      ->check(CLI::NonNegativeNumber);
  witness_cmd->add_option("--hole-radius", wflags.hole_radius,
                          "ball radius for hole search on reducible systems")
      ->check(CLI::NonNegativeNumber);
  witness_cmd->add_option("--n-max", wflags.n_max, "hole distance threshold")
      ->check(CLI::NonNegativeNumber);

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive structural checks on a ball");
  add_common(verify_cmd);
  int verify_radius = 6;
  std::string lemmas;
  std::string fault;
  verify_cmd->add_option("--radius", verify_radius, "ball radius")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--lemmas", lemmas,
                         "comma-separated suites (default all): " + [] {
                           std::string s;
                           for (const auto& n : suite_names()) s += (s.empty() ? "" : ",") + n;
                           return s;
                         }());
  verify_cmd->add_option("--inject-fault", fault, "harness mutation hook")
      ->check(CLI::IsMember({"descent-off-by-one"}))
      ->group("");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const bool machine = common.format == "machine";
  Json report;
  report["command"] = echo(args);
  int exit_code = kSuccess;
  const auto started = std::chrono::steady_clock::now();

  auto fail = [&](const std::string& kind, const std::string& message,
                  Json extra, int code) {
    Json e = {{"kind", kind}, {"message", message}};
    e.update(extra);
    if (machine) {
      report["error"] = e;
      out << report.dump(2) << "\n";
    } else {
      err << "error: " << message << "\n";
    }
    return code;
  };

  try {
    Presentation p = load_presentation(common.file);
    report["presentation"] = presentation_json(p);
    BallOptions ball_options;
    ball_options.threads = common.threads;

    Json body;
    if (*reduce_cmd) {
      body = cmd_reduce(p, word_flag ? *word_flag : word_positional);
    } else if (*analyze_cmd) {
      body = cmd_analyze(p, subset);
    } else if (*witness_cmd) {
      body = cmd_witness(p, wflags, ball_options, exit_code);
    } else {
      VerifyOptions vopts;
      vopts.suites = split_list(lemmas);
      if (fault == "descent-off-by-one") vopts.descents = &descent_off_by_one;
      body = cmd_verify(p, verify_radius, vopts, ball_options, exit_code);
    }
    report.update(body);
  } catch (const ParseError& e) {
    return fail("parse", e.what(), {{"line", e.line()}, {"column", e.column()}},
                kInputError);
  } catch (const UnknownGeneratorError& e) {
    return fail("unknown_generator", e.what(), {{"unknown", e.names()}},
                kInputError);
  } catch (const ResourceLimitError& e) {
    return fail("resource_limit", e.what(),
                {{"limit", e.limit()},
                 {"partial", {{"completed_radius", e.completed_radius()},
                              {"elements", e.elements()}}}},
                kResourceLimit);
  } catch (const Error& e) {
    return fail("input", e.what(), Json::object(), kInputError);
  }

  if (common.timing) {
    report["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - started)
                               .count();
  }

  if (machine) {
    out << report.dump(2) << "\n";
  } else {
    render_header(report, out);
    if (*reduce_cmd) render_reduce(report, out);
    if (*analyze_cmd) render_analyze(report, out);
    if (*witness_cmd) render_witness(report, out);
    if (*verify_cmd) render_verify(report, out);
    if (common.timing)
      out << "elapsed: " << report["elapsed_ms"].get<double>() << " ms\n";
  }
  return exit_code;
}

}  // namespace racg::cli
