// Copyright 2026 The readk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "readk/bounds.h"
#include "readk/errors.h"
#include "readk/exact_engine.h"
#include "readk/family.h"
#include "readk/family_io.h"
#include "readk/generators.h"
#include "readk/sampler.h"
#include "readk/shearer_audit.h"

namespace readk::cli {

namespace {

constexpr char kGuardEnv[] = "READK_ENUM_GUARD";

using Value = std::variant<std::nullptr_t, bool, long long, double, std::string,
                           std::vector<double>>;

struct Field {
  std::string key;
  Value value;
};
using Record = std::vector<Field>;

std::string number(double x, bool json) {
  if (std::isnan(x)) return json ? "null" : "nan";
  if (std::isinf(x)) {
    const char* text = x > 0 ? "inf" : "-inf";
    return json ? fmt::format("\"{}\"", text) : std::string(text);
  }
  return fmt::format("{:.17g}", x);
}

std::string render(const Value& value, bool json) {
  struct Visitor {
    bool json;
    std::string operator()(std::nullptr_t) const { return json ? "null" : "-"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return number(v, json); }
    std::string operator()(const std::string& s) const {
      return json ? nlohmann::json(s).dump() : s;
    }
    std::string operator()(const std::vector<double>& xs) const {
      std::string out = "[";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += json ? "," : ", ";
        out += number(xs[i], json);
      }
      return out + "]";
    }
  };
  return std::visit(Visitor{json}, value);
}

// JSON lines by default; aligned text with --pretty.
class Printer {
 public:
  Printer(std::ostream& out, bool pretty) : out_(out), pretty_(pretty) {}

  void record(const Record& rec) {
    if (!pretty_) {
      json_line(rec);
      return;
    }
    std::size_t width = 0;
    for (const auto& f : rec) width = std::max(width, f.key.size());
    for (const auto& f : rec) {
      out_ << f.key << std::string(width - f.key.size() + 2, ' ') << render(f.value, false)
           << '\n';
    }
  }

  void table(const std::vector<Record>& rows) {
    if (!pretty_) {
      for (const auto& r : rows) json_line(r);
      return;
    }
    if (rows.empty()) return;
    std::vector<std::size_t> widths;
    for (const auto& f : rows.front()) widths.push_back(f.key.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
      auto& line = cells.emplace_back();
      for (std::size_t c = 0; c < r.size(); ++c) {
        line.push_back(render(r[c].value, false));
        widths[c] = std::max(widths[c], line.back().size());
      }
    }
    for (std::size_t c = 0; c < widths.size(); ++c) {
      out_ << fmt::format("{:<{}}", rows.front()[c].key, widths[c] + 2);
    }
    out_ << '\n';
    for (const auto& line : cells) {
      for (std::size_t c = 0; c < line.size(); ++c) {
        out_ << fmt::format("{:<{}}", line[c], widths[c] + 2);
      }
      out_ << '\n';
    }
  }

 private:
  void json_line(const Record& rec) {
    out_ << '{';
    for (std::size_t i = 0; i < rec.size(); ++i) {
      if (i > 0) out_ << ',';
      out_ << nlohmann::json(rec[i].key).dump() << ':' << render(rec[i].value, true);
    }
    out_ << "}\n";
  }

  std::ostream& out_;
  bool pretty_;
};

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::uint64_t resolve_guard(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv(kGuardEnv);
  if (env == nullptr) return kDefaultEnumerationGuard;
  const std::string_view text(env);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw ValidationError(std::string(kGuardEnv) + " must be a positive integer, got '" +
                          std::string(text) + "'");
  }
  return value;
}

struct Common {
  bool pretty = false;
  std::optional<std::uint64_t> guard;
  unsigned threads = 0;

  EngineOptions engine() const { return EngineOptions{resolve_guard(guard), threads}; }
};

struct TailArgs {
  double t = 0.0;
  std::string tail = "upper";

  TailQuery query() const { return TailQuery{t, parse_tail(tail)}; }
};

// --- bound -----------------------------------------------------------------

struct BoundArgs {
  long long r = 0;
  long long k = 0;
  double p = 0.0;
  std::optional<double> eps;
  std::optional<double> t;
  std::string tail;
  bool simplified = false;
};

int cmd_bound(const BoundArgs& a, Printer& printer) {
  BoundQuery q{a.r, a.k, a.p, 0.0, parse_tail(a.tail)};
  if (a.eps) {
    q.eps = *a.eps;
  } else if (a.t) {
    if (a.r < 1) throw DomainError("r must be >= 1");
    q.eps = eps_for_threshold(*a.t, a.r, a.p, q.tail);
  } else {
    throw DomainError("bound needs either --eps or --t");
  }
  const BoundResult res = a.simplified ? simplified_tail_bound(q) : read_k_tail_bound(q);
  printer.record({{"log_bound", res.log_bound.value}, {"bound", res.bound}});
  return kExitOk;
}

// --- exact -----------------------------------------------------------------

int cmd_exact(const std::string& file, const std::optional<double>& t, const std::string& tail,
              const Common& common, Printer& printer) {
  const FamilySpec spec = load_family(file);
  const SumPmf pmf = sum_pmf(spec, common.engine());
  Record rec{{"r", static_cast<long long>(spec.num_functions())},
             {"mean", pmf.mean()},
             {"pmf", pmf.probs}};
  if (t) {
    const TailQuery q{*t, parse_tail(tail)};
    rec.push_back({"tail", std::string(to_string(q.tail))});
    rec.push_back({"t", *t});
    rec.push_back({"tail_prob", tail_prob(pmf, q)});
  }
  printer.record(rec);
  return kExitOk;
}

// --- mc --------------------------------------------------------------------

int cmd_mc(const std::string& file, const TailArgs& tail, std::uint64_t samples,
           std::uint64_t seed, const Common& common, Printer& printer) {
  const FamilySpec spec = load_family(file);
  const McEstimate est = estimate_tail(spec, tail.query(), samples, seed, common.threads);
  printer.record({{"estimate", est.estimate},
                  {"samples", static_cast<long long>(est.samples)},
                  {"ci_low", est.ci_low},
                  {"ci_high", est.ci_high},
                  {"seed", static_cast<long long>(est.seed)}});
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const std::string& file, double tol, const Common& common, Printer& printer) {
  const FamilySpec spec = load_family(file);
  const SumPmf pmf = sum_pmf(spec, common.engine());
  const Marginals marginals = function_marginals(spec);
  const auto r = static_cast<long long>(spec.num_functions());
  const long long k = std::max(read_width(spec), 1);
  const double p = marginals.mean;

  std::vector<Record> rows;
  long long violations = 0;
  for (Tail tail : {Tail::kUpper, Tail::kLower}) {
    for (long long t = 0; t <= r; ++t) {
      const double eps = eps_for_threshold(static_cast<double>(t), r, p, tail);
      if (!(eps > 0.0)) continue;
      const double exact = tail_prob(pmf, {static_cast<double>(t), tail});
      const BoundResult bound = read_k_tail_bound({r, k, p, eps, tail});
      const bool ok = exact <= bound.bound * (1.0 + tol);
      violations += ok ? 0 : 1;
      rows.push_back({{"tail", std::string(to_string(tail))},
                      {"t", t},
                      {"exact", exact},
                      {"bound", bound.bound},
                      {"slack", bound.bound - exact},
                      {"status", verdict(ok)}});
    }
  }
  printer.table(rows);
  printer.record({{"result", verdict(violations == 0)},
                  {"r", r},
                  {"k", k},
                  {"p", p},
                  {"checked", static_cast<long long>(rows.size())},
                  {"violations", violations}});
  return violations == 0 ? kExitOk : kExitAssertion;
}

// --- trace -----------------------------------------------------------------

int cmd_trace(const std::string& file, const TailArgs& tail, const Common& common,
              Printer& printer) {
  const FamilySpec spec = load_family(file);
  const ProofTrace tr = proof_trace(spec, tail.query(), common.engine());
  const bool ok = tr.chain_holds();
  printer.record({{"tail", tail.tail},
                  {"t", tail.t},
                  {"r", tr.r},
                  {"k", tr.k},
                  {"p", tr.p},
                  {"q", tr.q},
                  {"eps", tr.eps},
                  {"tail_prob", tr.tail_prob},
                  {"neg_log_tail", tr.neg_log_tail.value},
                  {"shearer_term", tr.shearer_term.value},
                  {"dpi_term", tr.dpi_term.value},
                  {"convexity_term", tr.convexity_term.value},
                  {"final_term", tr.final_term.value},
                  {"first_violation", static_cast<long long>(tr.first_violation())},
                  {"chain", verdict(ok)}});
  return ok ? kExitOk : kExitAssertion;
}

// --- shearer ---------------------------------------------------------------

int cmd_shearer(const std::string& file, const TailArgs& tail, const std::optional<double>& p_flag,
                const Common& common, Printer& printer) {
  const FamilySpec spec = load_family(file);
  const EngineOptions engine = common.engine();
  const Distribution law = tail_conditioned_law(spec, tail.query(), engine);
  bool all_ok = true;
  Record rec{{"tail", tail.tail}, {"t", tail.t}};

  // Lemma on the coordinates the family actually reads, with k the smallest
  // cover multiplicity among them.
  std::vector<int> reads(spec.num_variables(), 0);
  for (const auto& f : spec.functions()) {
    for (std::size_t v : f.vars) ++reads[v];
  }
  std::vector<std::size_t> covered;
  std::vector<std::size_t> position(spec.num_variables(), 0);
  for (std::size_t v = 0; v < reads.size(); ++v) {
    if (reads[v] == 0) continue;
    position[v] = covered.size();
    covered.push_back(v);
  }
  if (covered.empty()) {
    rec.insert(rec.end(), {{"lemma_k", nullptr}, {"lemma_lhs", nullptr},
                           {"lemma_rhs", nullptr}, {"lemma", nullptr}});
  } else {
    std::vector<std::vector<std::size_t>> cover;
    for (const auto& f : spec.functions()) {
      auto& set = cover.emplace_back();
      for (std::size_t v : f.vars) set.push_back(position[v]);
    }
    int lemma_k = reads[covered.front()];
    for (std::size_t v : covered) lemma_k = std::min(lemma_k, reads[v]);
    const Gap gap = shearer_entropy_gap(project(law, covered), cover, lemma_k);
    all_ok = all_ok && gap.holds;
    rec.insert(rec.end(), {{"lemma_k", static_cast<long long>(lemma_k)},
                           {"lemma_lhs", gap.lhs.value},
                           {"lemma_rhs", gap.rhs.value},
                           {"lemma", verdict(gap.holds)}});
  }

  if (spec.all_uniform()) {
    const Gap gap = shearer_kl_gap(spec, law);
    all_ok = all_ok && gap.holds;
    rec.insert(rec.end(), {{"corollary_k", static_cast<long long>(read_width(spec))},
                           {"corollary_lhs", gap.lhs.value},
                           {"corollary_rhs", gap.rhs.value},
                           {"corollary", verdict(gap.holds)}});
  } else {
    rec.insert(rec.end(), {{"corollary_k", nullptr}, {"corollary_lhs", nullptr},
                           {"corollary_rhs", nullptr}, {"corollary", nullptr}});
  }

  // AND-bound: an explicit --p wins; otherwise only equal marginals define p.
  std::optional<double> p = p_flag;
  if (!p) {
    const Marginals m = function_marginals(spec);
    const bool equal = std::all_of(m.per_function.begin(), m.per_function.end(), [&](double x) {
      return std::abs(x - m.per_function.front()) <= kNormalizationTolerance;
    });
    if (equal) p = m.per_function.front();
  }
  if (p) {
    const auto r = static_cast<long long>(spec.num_functions());
    const long long k = std::max(read_width(spec), 1);
    const double exact = sum_pmf(spec, engine).probs.back();
    const BoundResult bound = shearer_and_bound(r, k, *p);
    const bool ok = exact <= bound.bound * (1.0 + kRelativeSlack);
    all_ok = all_ok && ok;
    rec.insert(rec.end(), {{"and_p", *p}, {"and_exact", exact}, {"and_bound", bound.bound},
                           {"and", verdict(ok)}});
  } else {
    rec.insert(rec.end(), {{"and_p", nullptr}, {"and_exact", nullptr}, {"and_bound", nullptr},
                           {"and", nullptr}});
  }
  rec.push_back({"result", verdict(all_ok)});
  printer.record(rec);
  return all_ok ? kExitOk : kExitAssertion;
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::string preset;
  std::optional<int> k;
  std::optional<int> blocks;
  std::optional<std::string> p;
  std::optional<int> m;
  std::optional<int> r;
  std::optional<int> max_arity;
  std::optional<std::uint64_t> seed;
  int max_support = 3;
  bool weighted = false;
  std::string out;
};

template <class T>
T need(const std::optional<T>& value, const char* flag, const std::string& preset) {
  if (!value) throw DomainError("gen --preset " + preset + " requires " + flag);
  return *value;
}

int cmd_gen(const GenArgs& a, std::ostream& out, Printer& printer) {
  std::optional<FamilySpec> spec;
  if (a.preset == "block-tight") {
    spec = gen_block_tight(need(a.k, "--k", a.preset), need(a.blocks, "--blocks", a.preset),
                           Rational::Parse(need(a.p, "--p", a.preset)));
  } else {
    RandomFamilyParams params;
    params.m = need(a.m, "--m", a.preset);
    params.r = need(a.r, "--r", a.preset);
    params.k = need(a.k, "--k", a.preset);
    params.max_arity = need(a.max_arity, "--max-arity", a.preset);
    params.seed = need(a.seed, "--seed", a.preset);
    params.max_support = a.max_support;
    params.weighted = a.weighted;
    spec = gen_random_family(params);
  }
  if (a.out.empty()) {
    out << dump_family(*spec);
    return kExitOk;
  }
  save_family(*spec, a.out);
  printer.record({{"written", a.out},
                  {"m", static_cast<long long>(spec->num_variables())},
                  {"r", static_cast<long long>(spec->num_functions())},
                  {"k", static_cast<long long>(read_width(*spec))}});
  return kExitOk;
}

void add_tail_options(CLI::App* cmd, TailArgs& tail, bool required) {
  auto* t = cmd->add_option("--t", tail.t, "Threshold on the sum Y");
  auto* d = cmd->add_option("--tail", tail.tail, "Tail direction")
                ->check(CLI::IsMember({"upper", "lower"}));
  if (required) {
    t->required();
    d->required();
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tail bounds and exact audits for read-k families of Boolean functions", "readk"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_flag("--pretty", common.pretty, "Aligned human-readable output instead of JSON lines");
  app.add_option("--guard", common.guard,
                 "Enumeration guard (assignments); overrides READK_ENUM_GUARD")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", common.threads, "Worker threads (0 = hardware)");

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Read-k tail bound from (r, k, p, eps)");
  bound_cmd->add_option("--r", bound.r, "Number of functions")->required();
  bound_cmd->add_option("--k", bound.k, "Read width")->required();
  bound_cmd->add_option("--p", bound.p, "Mean marginal probability")->required();
  auto* eps_opt = bound_cmd->add_option("--eps", bound.eps, "Deviation as a fraction of r");
  auto* t_opt = bound_cmd->add_option("--t", bound.t, "Raw threshold; eps = t/r - p");
  eps_opt->excludes(t_opt);
  bound_cmd->add_option("--tail", bound.tail, "Tail direction")
      ->required()
      ->check(CLI::IsMember({"upper", "lower"}));
  bound_cmd->add_flag("--simplified", bound.simplified, "Use exp(-2 eps^2 r / k)");

  std::string file;
  std::optional<double> exact_t;
  std::string exact_tail = "upper";
  auto* exact_cmd = app.add_subcommand("exact", "Exact law of the sum Y");
  exact_cmd->add_option("file", file, "Family file")->required();
  exact_cmd->add_option("--t", exact_t, "Threshold for an exact tail probability");
  exact_cmd->add_option("--tail", exact_tail, "Tail direction")
      ->check(CLI::IsMember({"upper", "lower"}));

  TailArgs mc_tail;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo tail estimate");
  mc_cmd->add_option("file", file, "Family file")->required();
  add_tail_options(mc_cmd, mc_tail, true);
  mc_cmd->add_option("--samples", samples, "Number of samples")
      ->required()
      ->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", seed, "PRNG seed")->required();

  double tol = 1e-9;
  auto* verify_cmd = app.add_subcommand("verify", "Check exact tails against the read-k bound");
  verify_cmd->add_option("file", file, "Family file")->required();
  verify_cmd->add_option("--tol", tol, "Relative tolerance")->capture_default_str();

  TailArgs trace_tail;
  auto* trace_cmd = app.add_subcommand("trace", "Evaluate the chain of entropy inequalities");
  trace_cmd->add_option("file", file, "Family file")->required();
  add_tail_options(trace_cmd, trace_tail, true);

  TailArgs shearer_tail;
  std::optional<double> shearer_p;
  auto* shearer_cmd =
      app.add_subcommand("shearer", "Shearer's lemma, its KL form, and the AND-bound");
  shearer_cmd->add_option("file", file, "Family file")->required();
  add_tail_options(shearer_cmd, shearer_tail, true);
  shearer_cmd->add_option("--p", shearer_p, "Common marginal for the AND-bound");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a family file");
  gen_cmd->add_option("--preset", gen.preset, "block-tight or random")
      ->required()
      ->check(CLI::IsMember({"block-tight", "random"}));
  gen_cmd->add_option("--k", gen.k, "Read width");
  gen_cmd->add_option("--blocks", gen.blocks, "Number of blocks (block-tight)");
  gen_cmd->add_option("--p", gen.p, "Rational a/b marginal (block-tight)");
  gen_cmd->add_option("--m", gen.m, "Number of variables (random)");
  gen_cmd->add_option("--r", gen.r, "Number of functions (random)");
  gen_cmd->add_option("--max-arity", gen.max_arity, "Largest |P_j| (random)");
  gen_cmd->add_option("--seed", gen.seed, "Seed (random)");
  gen_cmd->add_option("--max-support", gen.max_support, "Largest variable support (random)")
      ->capture_default_str();
  gen_cmd->add_flag("--weighted", gen.weighted, "Random rational variable weights (random)");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default: standard output)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "readk: error: " << e.what() << '\n';
    return kExitUsage;
  }

  Printer printer(out, common.pretty);
  try {
    if (*bound_cmd) return cmd_bound(bound, printer);
    if (*exact_cmd) return cmd_exact(file, exact_t, exact_tail, common, printer);
    if (*mc_cmd) return cmd_mc(file, mc_tail, samples, seed, common, printer);
    if (*verify_cmd) return cmd_verify(file, tol, common, printer);
    if (*trace_cmd) return cmd_trace(file, trace_tail, common, printer);
    if (*shearer_cmd) return cmd_shearer(file, shearer_tail, shearer_p, common, printer);
    if (*gen_cmd) return cmd_gen(gen, out, printer);
  } catch (const std::exception& e) {
    err << "readk: error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "readk: error: no command given\n";
  return kExitUsage;
}

}  // namespace readk::cli
