// Copyright 2026 The uniperturb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: attack, detect, sanitize, reorder, inspect.
//
// Exit codes: 0 success/clean, 1 suspicious (detect gate), 2 usage error,
// 3 runtime/evaluation error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "uniperturb/defense.hpp"
#include "uniperturb/errors.hpp"
#include "uniperturb/optimizer.hpp"
#include "uniperturb/perturb.hpp"
#include "uniperturb/report.hpp"
#include "uniperturb/targets.hpp"
#include "uniperturb/text.hpp"
#include "uniperturb/unicode_data.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uniperturb {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitSuspicious = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

std::vector<std::string> read_raw_lines(const std::string& path) {
  std::vector<std::string> lines;
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) throw ArgumentError("cannot read input file '" + path + "'");
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    // One trailing CR (CRLF corpora) is framing, not payload; a literal
    // trailing CR is written \u{000D}.
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<Text> read_escaped_lines(const std::string& path) {
  std::vector<Text> out;
  for (const std::string& raw : read_raw_lines(path))
    out.push_back(unescape_text(raw));
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ArgumentError("cannot write output file '" + path + "'");
  file << content;
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) out += " ";
    out += argv[i];
  }
  return out;
}

ConfusablesMap load_confusables(const std::string& path,
                                const std::string& format) {
  if (path.empty()) return builtin_intentional_map();
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw ArgumentError("cannot read confusables file '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  if (format == "confusables") return parse_confusables(buffer.str());
  return parse_intentional(buffer.str());
}

// Averages wall-clock costs over repeated calls; reported cost units pass
// through untouched.
class RepeatTimingModel : public TargetModel {
 public:
  RepeatTimingModel(TargetModel& inner, int repeats)
      : inner_(inner), repeats_(repeats) {}
  ModelResponse evaluate(TextView input) override {
    ModelResponse resp = inner_.evaluate(input);
    if (!resp.wall_clock_cost || repeats_ <= 1) return resp;
    double total = resp.cost;
    for (int i = 1; i < repeats_; ++i) total += inner_.evaluate(input).cost;
    resp.cost = total / repeats_;
    return resp;
  }
  bool concurrent_safe() const override { return inner_.concurrent_safe(); }

 private:
  TargetModel& inner_;
  int repeats_;
};

std::unique_ptr<TargetModel> make_target(const std::string& spec) {
  if (spec == "mock-translate")
    return std::make_unique<DictTranslateModel>(demo_dictionary());
  if (spec == "mock-classify")
    return std::make_unique<KeywordClassifyModel>(demo_lexicon());
  if (spec.rfind("cmd:", 0) == 0)
    return std::make_unique<SubprocessTarget>(spec.substr(4));
  if (spec.rfind("http://", 0) == 0)
    return std::make_unique<HttpTarget>(spec);
  throw ArgumentError("unknown target '" + spec +
                      "' (expected mock-translate, mock-classify, cmd:..., "
                      "or http://...)");
}

struct AttackOptions {
  std::string cls = "invisible";
  std::string objective = "untargeted";
  std::string target_text;
  std::string target_label;
  int budget = -1;
  std::string budget_sweep;
  std::string input = "-";
  std::string target = "mock-translate";
  std::size_t population = 32;
  std::size_t iterations = 10;
  double weight = 0.8;
  double crossover = 0.9;
  std::uint64_t seed = 1;
  std::string out;
  bool parallel = false;
  int time_repeats = 1;
  std::string confusables_path;
  std::string confusables_format = "intentional";
};

PerturbationClass parse_class(const std::string& s) {
  if (s == "invisible") return PerturbationClass::kInvisible;
  if (s == "homoglyph") return PerturbationClass::kHomoglyph;
  if (s == "reorder" || s == "reordering")
    return PerturbationClass::kReordering;
  if (s == "delete" || s == "deletion") return PerturbationClass::kDeletion;
  throw ArgumentError("unknown class '" + s + "'");
}

std::pair<std::size_t, std::size_t> parse_sweep(const std::string& s) {
  const std::size_t dots = s.find("..");
  if (dots == std::string::npos)
    throw ArgumentError("budget sweep must look like LO..HI");
  try {
    const int lo = std::stoi(s.substr(0, dots));
    const int hi = std::stoi(s.substr(dots + 2));
    if (lo < 0 || hi < lo) throw ArgumentError("bad budget sweep bounds");
    return {static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
  } catch (const std::invalid_argument&) {
    throw ArgumentError("budget sweep must look like LO..HI");
  }
}

int cmd_attack(const AttackOptions& opt, const std::string& command_echo) {
  const PerturbationClass cls = parse_class(opt.cls);

  ObjectiveSpec objective;
  if (opt.objective == "untargeted") {
    objective = ObjectiveSpec::untargeted();
  } else if (opt.objective == "targeted") {
    if (!opt.target_text.empty() && !opt.target_label.empty())
      throw ArgumentError("--target-text and --target-label are exclusive");
    if (!opt.target_text.empty())
      objective = ObjectiveSpec::targeted(unescape_text(opt.target_text));
    else if (!opt.target_label.empty())
      objective = ObjectiveSpec::targeted(unescape_text(opt.target_label),
                                          /*label_only=*/true);
    else
      throw ArgumentError(
          "targeted objective needs --target-text or --target-label");
  } else if (opt.objective == "sponge") {
    objective = ObjectiveSpec::availability();
  } else {
    throw ArgumentError("unknown objective '" + opt.objective + "'");
  }

  std::size_t lo, hi;
  if (!opt.budget_sweep.empty()) {
    if (opt.budget >= 0)
      throw ArgumentError("--budget and --budget-sweep are exclusive");
    std::tie(lo, hi) = parse_sweep(opt.budget_sweep);
  } else {
    if (opt.budget < 0) throw ArgumentError("need --budget or --budget-sweep");
    lo = hi = static_cast<std::size_t>(opt.budget);
  }

  const std::vector<Text> inputs = read_escaped_lines(opt.input);
  if (inputs.empty()) throw ArgumentError("no input lines");

  const ConfusablesMap map =
      load_confusables(opt.confusables_path, opt.confusables_format);
  const Alphabets alphabets = default_alphabets();

  std::unique_ptr<TargetModel> owned = make_target(opt.target);
  RepeatTimingModel model(*owned, opt.time_repeats);

  DEParams params;
  params.population_size = opt.population;
  params.iterations = opt.iterations;
  params.differential_weight = opt.weight;
  params.crossover_probability = opt.crossover;
  params.seed = opt.seed;

  RunReport report;
  report.command = command_echo;
  report.seed = opt.seed;
  report.perturbation_class = to_string(cls);
  report.objective = opt.objective;
  report.target_model = opt.target;

  struct Job {
    std::size_t input_index;
    std::size_t budget;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < inputs.size(); ++i)
    for (std::size_t b = lo; b <= hi; ++b) jobs.push_back({i, b});
  report.records.resize(jobs.size());

  const bool sweep_parallel = opt.parallel && model.concurrent_safe();
  std::string failure;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (sweep_parallel)
#endif
  for (std::size_t r = 0; r < jobs.size(); ++r) {
    if (!failure.empty()) continue;
    const Job job = jobs[r];
    DEParams job_params = params;
    job_params.seed = params.seed + r;  // independent stream per record
    RunRecord record;
    record.input_index = job.input_index;
    record.budget = job.budget;
    record.original = inputs[job.input_index];
    const auto start = std::chrono::steady_clock::now();
    try {
      record.result = differential_evolution(
          record.original, cls, objective, job.budget, job_params, model,
          alphabets, map,
          sweep_parallel ? EvalMode::kSequential
                         : (opt.parallel ? EvalMode::kParallel
                                         : EvalMode::kSequential));
    } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (failure.empty()) failure = e.what();
      continue;
    }
    record.wall_time_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    report.records[r] = std::move(record);
  }

  if (!failure.empty()) {
    // Partial report with the error attached, then a runtime-error exit.
    auto j = to_json(report);
    j["error"] = failure;
    write_output(opt.out, j.dump(2) + "\n");
    std::cerr << "attack aborted: " << failure << "\n";
    return kExitRuntime;
  }

  write_output(opt.out, to_json(report).dump(2) + "\n");
  return kExitOk;
}

struct DetectOptions {
  std::string input = "-";
  std::string format = "human";
  bool fail_on_suspicious = false;
  std::string confusables_path;
  std::string confusables_format = "intentional";
};

int cmd_detect(const DetectOptions& opt) {
  DefenseConfig cfg(default_alphabets().invisible,
                    load_confusables(opt.confusables_path,
                                     opt.confusables_format));
  bool any_suspicious = false;
  std::size_t line_no = 0;
  for (const Text& line : read_escaped_lines(opt.input)) {
    ++line_no;
    const DetectionReport report = detect(line, cfg);
    any_suspicious |= report.suspicious();
    if (opt.format == "structured") {
      std::cout << to_json(report, line).dump() << "\n";
    } else {
      if (!report.suspicious()) {
        std::cout << "line " << line_no << ": clean\n";
      } else {
        std::cout << "line " << line_no << ": suspicious (invisible="
                  << report.count(PerturbationClass::kInvisible)
                  << " homoglyph="
                  << report.count(PerturbationClass::kHomoglyph)
                  << " reordering="
                  << report.count(PerturbationClass::kReordering)
                  << " deletion="
                  << report.count(PerturbationClass::kDeletion) << ")\n";
        for (const Finding& f : report.findings) {
          std::cout << "  [" << to_string(f.cls) << "] position "
                    << f.position << ": " << escape_text(f.codepoints);
          if (!f.note.empty()) std::cout << " — " << f.note;
          std::cout << "\n";
        }
      }
    }
  }
  return any_suspicious && opt.fail_on_suspicious ? kExitSuspicious : kExitOk;
}

struct SanitizeOptions {
  std::string input = "-";
  std::string output = "-";
  bool no_bidi = false;
  bool no_deletions = false;
  bool no_invisible = false;
  bool no_homoglyphs = false;
  bool raw = false;
  std::string confusables_path;
  std::string confusables_format = "intentional";
};

int cmd_sanitize(const SanitizeOptions& opt) {
  DefenseConfig cfg(default_alphabets().invisible,
                    load_confusables(opt.confusables_path,
                                     opt.confusables_format));
  cfg.bidi_enabled = !opt.no_bidi;
  cfg.deletions_enabled = !opt.no_deletions;
  cfg.invisible_enabled = !opt.no_invisible;
  cfg.homoglyphs_enabled = !opt.no_homoglyphs;

  std::string out;
  for (const Text& line : read_escaped_lines(opt.input)) {
    const Text clean = visual_normal_form(line, cfg);
    out += opt.raw ? utf8_encode(clean) : escape_text(clean);
    out += "\n";
  }
  write_output(opt.output, out);
  return kExitOk;
}

struct ReorderOptions {
  std::string text;
  bool raw = false;
  bool escape = false;  // escaped output is already the default
};

int cmd_reorder(const ReorderOptions& opt) {
  constexpr std::size_t kMaxLength = 16;
  const Text text = unescape_text(opt.text);
  if (text.empty()) throw ArgumentError("--text must not be empty");
  if (text.size() > kMaxLength)
    throw ArgumentError(
        "--text longer than " + std::to_string(kMaxLength) +
        " codepoints; the output count doubles per character (2^(n-1))");
  const auto members = generate_reorderings(text);
  for (const Text& member : members) {
    std::cout << (opt.raw && !opt.escape ? utf8_encode(member)
                                         : escape_text(member))
              << "\n";
  }
  std::cout << "count " << members.size() << "\n";
  return kExitOk;
}

struct InspectOptions {
  std::string character;
  std::string confusables_path;
  std::string confusables_format = "intentional";
};

int cmd_inspect(const InspectOptions& opt) {
  const ConfusablesMap map =
      load_confusables(opt.confusables_path, opt.confusables_format);

  char32_t cp;
  if (opt.character.rfind("U+", 0) == 0 || opt.character.rfind("u+", 0) == 0) {
    cp = unescape_text("\\u{" + opt.character.substr(2) + "}")[0];
  } else {
    const Text decoded = unescape_text(opt.character);
    if (decoded.size() != 1)
      throw ArgumentError("--char must name exactly one codepoint");
    cp = decoded[0];
  }

  const char* provenance =
      map.source() == ConfusablesSource::kIntentional  ? "intentional"
      : map.source() == ConfusablesSource::kConfusables ? "confusables"
                                                         : "custom";
  const auto candidates = homoglyph_candidates(map, cp);
  std::cout << codepoint_label(cp);
  if (!codepoint_name(cp).empty()) std::cout << " " << codepoint_name(cp);
  std::cout << " '" << escape_text(Text(1, cp)) << "'\n";
  if (candidates.empty()) {
    std::cout << "no confusables\n";
    return kExitOk;
  }
  for (const Text& seq : candidates) {
    std::cout << "  ->";
    for (char32_t c : seq) {
      std::cout << " " << codepoint_label(c);
      if (!codepoint_name(c).empty()) std::cout << " " << codepoint_name(c);
    }
    std::cout << " '" << escape_text(seq) << "' (source: " << provenance
              << ")\n";
  }
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Imperceptible Unicode perturbation toolkit"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  AttackOptions attack;
  auto* attack_cmd = app.add_subcommand(
      "attack", "Search for adversarial perturbations against a target");
  attack_cmd->add_option("--class", attack.cls,
                         "invisible|homoglyph|reorder|delete");
  attack_cmd->add_option("--objective", attack.objective,
                         "untargeted|targeted|sponge");
  attack_cmd->add_option("--target-text", attack.target_text,
                         "Desired output text (targeted, escaped)");
  attack_cmd->add_option("--target-label", attack.target_label,
                         "Desired output label (targeted, label-only)");
  attack_cmd->add_option("--budget", attack.budget, "Perturbation budget");
  attack_cmd->add_option("--budget-sweep", attack.budget_sweep,
                         "Budget range LO..HI, one record per budget");
  attack_cmd->add_option("--input", attack.input,
                         "Input file, one escaped example per line ('-' for "
                         "stdin)");
  attack_cmd->add_option("--target", attack.target,
                         "mock-translate|mock-classify|cmd:...|http://...");
  attack_cmd->add_option("--pop", attack.population, "Population size");
  attack_cmd->add_option("--iters", attack.iterations, "Evolution iterations");
  attack_cmd->add_option("--F", attack.weight, "Differential weight [0,2]");
  attack_cmd->add_option("--CR", attack.crossover,
                         "Crossover probability [0,1]");
  attack_cmd->add_option("--seed", attack.seed, "RNG seed");
  attack_cmd->add_option("--out", attack.out, "Report file (default stdout)");
  attack_cmd->add_flag("--parallel", attack.parallel,
                       "Evaluate concurrently when the target allows it");
  attack_cmd->add_option("--time-repeats", attack.time_repeats,
                         "Wall-clock cost samples per candidate");
  attack_cmd->add_option("--confusables", attack.confusables_path,
                         "Confusables data file (default: bundled "
                         "intentional.txt)");
  attack_cmd->add_option("--confusables-format", attack.confusables_format,
                         "intentional|confusables");

  DetectOptions detect_opt;
  auto* detect_cmd = app.add_subcommand(
      "detect", "Report imperceptible-perturbation findings per input line");
  detect_cmd->add_option("--input", detect_opt.input, "Input file or '-'");
  detect_cmd->add_option("--format", detect_opt.format, "human|structured");
  detect_cmd->add_flag("--fail-on-suspicious", detect_opt.fail_on_suspicious,
                       "Exit 1 when any line is suspicious (CI gate)");
  detect_cmd->add_option("--confusables", detect_opt.confusables_path,
                         "Confusables data file");
  detect_cmd->add_option("--confusables-format",
                         detect_opt.confusables_format,
                         "intentional|confusables");

  SanitizeOptions sanitize;
  auto* sanitize_cmd = app.add_subcommand(
      "sanitize", "Write the visual normal form of each input line");
  sanitize_cmd->add_option("--input", sanitize.input, "Input file or '-'");
  sanitize_cmd->add_option("--output", sanitize.output, "Output file or '-'");
  sanitize_cmd->add_flag("--no-bidi", sanitize.no_bidi,
                         "Skip Bidi resolution");
  sanitize_cmd->add_flag("--no-deletions", sanitize.no_deletions,
                         "Skip deletion resolution");
  sanitize_cmd->add_flag("--no-invisible", sanitize.no_invisible,
                         "Skip invisible-character stripping");
  sanitize_cmd->add_flag("--no-homoglyphs", sanitize.no_homoglyphs,
                         "Skip homoglyph normalization");
  sanitize_cmd->add_flag("--raw", sanitize.raw,
                         "Emit raw bytes instead of escaped text");
  sanitize_cmd->add_option("--confusables", sanitize.confusables_path,
                           "Confusables data file");
  sanitize_cmd->add_option("--confusables-format",
                           sanitize.confusables_format,
                           "intentional|confusables");

  ReorderOptions reorder;
  auto* reorder_cmd = app.add_subcommand(
      "reorder", "Enumerate the visually identical reorderings of a string");
  reorder_cmd->add_option("--text", reorder.text, "Input (escaped, <= 16)")
      ->required();
  reorder_cmd->add_flag("--raw", reorder.raw, "Emit raw bytes");
  reorder_cmd->add_flag("--escape", reorder.escape,
                        "Emit \\u-escaped forms (default)");

  InspectOptions inspect;
  auto* inspect_cmd =
      app.add_subcommand("inspect", "Show confusables for one codepoint");
  inspect_cmd->add_option("--char", inspect.character,
                          "Literal character or U+XXXX")
      ->required();
  inspect_cmd->add_option("--confusables", inspect.confusables_path,
                          "Confusables data file");
  inspect_cmd->add_option("--confusables-format", inspect.confusables_format,
                          "intentional|confusables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (attack_cmd->parsed()) return cmd_attack(attack, join_args(argc, argv));
    if (detect_cmd->parsed()) return cmd_detect(detect_opt);
    if (sanitize_cmd->parsed()) return cmd_sanitize(sanitize);
    if (reorder_cmd->parsed()) return cmd_reorder(reorder);
    if (inspect_cmd->parsed()) return cmd_inspect(inspect);
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace uniperturb

int main(int argc, char** argv) { return uniperturb::run(argc, argv); }
