#include "quintic/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "quintic/classify.hpp"
#include "quintic/config.hpp"
#include "quintic/errors.hpp"
#include "quintic/genus.hpp"
#include "quintic/oracle.hpp"
#include "quintic/report.hpp"
#include "quintic/residue.hpp"
#include "quintic/tables.hpp"

namespace quintic {

namespace {

Integer parse_natural(const std::string& text, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorKind::kInvalidInput, std::string(what) + " must be a natural number, got '" + text + "'");
  return Integer(text);
}

struct Options {
  std::optional<std::uint64_t> seed;
  std::optional<long> budget_ms;
  bool timings = false;

  std::string n;
  std::string mode = "theorem";
  std::string beta;
  std::string alpha;
  std::string prime;
  int which = 1;
  std::string format = "json";
  std::string out_path;
  std::string from;
  std::string to;
  std::string form = "any";
  bool derived = false;
  std::string prime_class;
  std::size_t count = 0;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {
    cfg_ = Config::from_env();
    if (opt.seed) cfg_.seed = *opt.seed;
    if (opt.budget_ms) {
      if (*opt.budget_ms <= 0) throw Error(ErrorKind::kInvalidInput, "--rho-budget-ms must be positive");
      cfg_.rho_budget = std::chrono::milliseconds(*opt.budget_ms);
    }
    engine_ = std::make_unique<ResidueEngine>(cfg_);
    analyzer_ = std::make_unique<GenusAnalyzer>(*engine_);
    start_ = std::chrono::steady_clock::now();
  }

  int classify_cmd() {
    auto c = classify(parse_natural(opt_.n, "n"), cfg_);
    Json doc{{"command", "classify"}};
    doc["classification"] = to_json(c);
    return emit(doc);
  }

  int rank_cmd() {
    auto c = supported(opt_.n);
    Json doc = header("rank", c);
    doc["ambiguous"] = to_json(analyzer_->rank_ambiguous(c));
    return emit(doc);
  }

  int matrix_cmd() {
    auto c = supported(opt_.n);
    Json doc = header("matrix", c);
    doc["matrix"] = matrix_json(analyzer_->genus_matrix(c));
    return emit(doc);
  }

  int predict_cmd() {
    if (opt_.mode != "theorem" && opt_.mode != "derived")
      throw Error(ErrorKind::kInvalidInput, "--mode must be theorem or derived");
    auto c = supported(opt_.n);
    Json doc = header("predict", c);
    doc["mode"] = opt_.mode;
    if (opt_.mode == "theorem") {
      doc["prediction_theorem"] = to_json(GenusAnalyzer::predict_theorem(c));
    } else {
      auto rep = analyzer_->analyze(c);
      doc["t"] = rep.ambiguous.t;
      doc["s"] = rep.s;
      doc["prediction_theorem"] = to_json(rep.theorem);
      doc["prediction_derived"] = to_json(rep.derived);
      doc["flags"] = flags_json(rep);
    }
    return emit(doc);
  }

  int audit_cmd() {
    auto c = supported(opt_.n);
    auto rep = analyzer_->analyze(c);
    Json doc{{"command", "audit"}};
    doc["classification"] = to_json(rep.classification);
    doc["ambiguous"] = to_json(rep.ambiguous);
    doc["matrix"] = matrix_json(rep);
    Json steps = Json::array();
    for (const auto& s : rep.derivation) steps.push_back(to_json(s));
    doc["derivation"] = steps;
    doc["plus_rank"] = rep.plus_rank;
    doc["rank_bound_gamma"] = rep.rank_bound_gamma;
    doc["prediction_theorem"] = to_json(rep.theorem);
    doc["prediction_derived"] = to_json(rep.derived);
    doc["flags"] = flags_json(rep);
    return emit(doc);
  }

  int symbol_cmd() {
    const auto beta = CyclotomicInt::parse(opt_.beta);
    const auto alpha = CyclotomicInt::parse(opt_.alpha);
    std::string p_text = opt_.prime;
    std::size_t index = 0;
    if (auto colon = p_text.find(':'); colon != std::string::npos) {
      index = static_cast<std::size_t>(parse_natural(p_text.substr(colon + 1), "prime index").get_ui());
      p_text = p_text.substr(0, colon);
    }
    auto primes = split_prime(parse_natural(p_text, "prime"));
    if (index >= primes.size())
      throw Error(ErrorKind::kInvalidInput, p_text + " has " + std::to_string(primes.size()) + " primes above it");
    const auto& prime = primes[index];
    if (beta.is_zero() || alpha.is_zero()) throw Error(ErrorKind::kInvalidInput, "beta and alpha must be nonzero");

    const auto cond = engine_->conductor(alpha);
    std::string kind = prime.kind == PrimeKind::kLambda ? "lambda" : cond.is_tame(prime) ? "tame" : "unramified";
    auto value = engine_->norm_residue_symbol(beta, alpha, prime);
    Json doc{{"command", "symbol"}};
    doc["beta"] = beta.to_string();
    doc["alpha"] = alpha.to_string();
    doc["prime"] = prime.label();
    doc["residue_degree"] = prime.residue_degree;
    doc["case"] = kind;
    doc["exponent"] = value.value();
    return emit(doc);
  }

  int tables_cmd() {
    auto table = regenerate_table(opt_.which, cfg_);
    std::string text;
    if (opt_.format == "json") {
      Json doc{{"command", "tables"}};
      doc["format"] = "json";
      doc["table"] = to_json(table);
      text = doc.dump(2) + "\n";
    } else if (opt_.format == "csv") {
      text = table_csv(table);
    } else if (opt_.format == "md") {
      text = table_markdown(table);
    } else {
      throw Error(ErrorKind::kInvalidInput, "--format must be json, csv or md");
    }
    if (opt_.out_path.empty()) {
      out_ << text;
    } else {
      std::ofstream f(opt_.out_path, std::ios::binary);
      if (!f) throw Error(ErrorKind::kInvalidInput, "cannot write " + opt_.out_path);
      f << text;
    }
    return 0;
  }

  int scan_cmd() {
    const Integer from = parse_natural(opt_.from, "--from");
    const Integer to = parse_natural(opt_.to, "--to");
    const Integer limit = Integer(1) << 63;
    if (from > limit || to > limit) throw Error(ErrorKind::kInvalidInput, "scan bounds must not exceed 2^63");
    std::optional<Form> filter;
    if (opt_.form == "1") filter = Form::kForm1;
    else if (opt_.form == "2") filter = Form::kForm2;
    else if (opt_.form == "3") filter = Form::kForm3;
    else if (opt_.form != "any") throw Error(ErrorKind::kInvalidInput, "--form must be 1, 2, 3 or any");

    for (Integer n = std::max(from, Integer(2)); n <= to; ++n) {
      Json row;
      try {
        auto c = classify(n, cfg_);
        if (!c.supported() || (filter && c.form != *filter)) continue;
        row["n"] = json_integer(n);
        row["form"] = std::string(to_string(c.form));
        row["q1"] = json_integer(c.q1);
        row["e1"] = c.e1;
        if (c.q2 != 0) row["q2"] = json_integer(c.q2);
        row["prediction_theorem"] = to_json(GenusAnalyzer::predict_theorem(c));
        if (opt_.derived) {
          auto rep = analyzer_->analyze(c);
          row["d"] = rep.ambiguous.d;
          row["q_star"] = rep.ambiguous.q_star;
          row["t"] = rep.ambiguous.t;
          row["x1"] = json_element(rep.x1);
          Json entries = Json::array();
          for (const auto& e : rep.entries) entries.push_back(Json{{"prime", e.label}, {"value", e.engine.value()}});
          row["matrix"] = entries;
          row["s"] = rep.s;
          row["prediction_derived"] = to_json(rep.derived);
          row["flags"] = flags_json(rep);
        }
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kNotFifthPowerFree) continue;
        row = Json{{"n", json_integer(n)}};
        row.update(error_json(e.kind(), e.what()));
      }
      out_ << row.dump() << '\n';
    }
    return 0;
  }

  int primes_cmd() {
    if (opt_.count < 1) throw Error(ErrorKind::kInvalidInput, "--count must be at least 1");
    auto cls = parse_prime_class(opt_.prime_class);
    Json doc{{"command", "primes"}, {"class", std::string(to_string(cls))}};
    doc["primes"] = prime_stream(cls, opt_.count);
    return emit(doc);
  }

 private:
  FormClassification supported(const std::string& text) {
    auto c = classify(parse_natural(text, "n"), cfg_);
    if (!c.supported()) throw Error(ErrorKind::kUnsupportedForm, c.n.get_str() + ": " + c.reason);
    return c;
  }

  Json header(const char* command, const FormClassification& c) {
    Json doc{{"command", command}};
    doc["n"] = json_integer(c.n);
    doc["form"] = std::string(to_string(c.form));
    return doc;
  }

  static Json flags_json(const GenusRankReport& rep) {
    Json flags = Json::array();
    for (const auto& f : rep.flags) flags.push_back(to_json(f));
    return flags;
  }

  int emit(Json& doc) {
    if (opt_.timings)
      doc["timings_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    out_ << doc.dump(2) << '\n';
    return 0;
  }

  const Options& opt_;
  std::ostream& out_;
  Config cfg_;
  std::unique_ptr<ResidueEngine> engine_;
  std::unique_ptr<GenusAnalyzer> analyzer_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Class number predictions and residue symbols for pure quintic fields", "quintic"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--seed", opt.seed, "Random seed (overrides QUINTIC_SEED)");
  app.add_option("--rho-budget-ms", opt.budget_ms, "Factorization budget (overrides QUINTIC_RHO_BUDGET_MS)");
  app.add_flag("--timings", opt.timings, "Add wall time to reports");

  auto* classify_app = app.add_subcommand("classify", "Factor n and detect its form");
  classify_app->add_option("n", opt.n)->required();
  auto* rank_app = app.add_subcommand("rank", "Ramified primes, q* and rank of ambiguous classes");
  rank_app->add_option("n", opt.n)->required();
  auto* matrix_app = app.add_subcommand("matrix", "Genus matrix M by both evaluation routes");
  matrix_app->add_option("n", opt.n)->required();
  auto* predict_app = app.add_subcommand("predict", "5-class number predictions");
  predict_app->add_option("n", opt.n)->required();
  predict_app->add_option("--mode", opt.mode, "theorem or derived");
  auto* audit_app = app.add_subcommand("audit", "Recompute every step of the s = 1 argument");
  audit_app->add_option("n", opt.n)->required();
  auto* symbol_app = app.add_subcommand("symbol", "Norm residue symbol (beta, alpha / P)");
  symbol_app->add_option("--beta", opt.beta, "c0,c1,c2,c3")->required();
  symbol_app->add_option("--alpha", opt.alpha, "c0,c1,c2,c3")->required();
  symbol_app->add_option("--prime", opt.prime, "p or p:index")->required();
  auto* tables_app = app.add_subcommand("tables", "Regenerate a numerical table");
  tables_app->add_option("--which", opt.which)->required()->check(CLI::Range(1, 3));
  tables_app->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv", "md"}));
  tables_app->add_option("--out", opt.out_path);
  auto* scan_app = app.add_subcommand("scan", "Classify and predict over a range of n");
  scan_app->add_option("--from", opt.from)->required();
  scan_app->add_option("--to", opt.to)->required();
  scan_app->add_option("--form", opt.form)->check(CLI::IsMember({"1", "2", "3", "any"}));
  scan_app->add_flag("--derived", opt.derived);
  auto* primes_app = app.add_subcommand("primes", "Primes in a congruence class");
  primes_app->add_option("--class", opt.prime_class)->required();
  primes_app->add_option("--count", opt.count)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(ErrorKind::kInvalidInput);
  }

  try {
    Runner run(opt, out);
    if (*classify_app) return run.classify_cmd();
    if (*rank_app) return run.rank_cmd();
    if (*matrix_app) return run.matrix_cmd();
    if (*predict_app) return run.predict_cmd();
    if (*audit_app) return run.audit_cmd();
    if (*symbol_app) return run.symbol_cmd();
    if (*tables_app) return run.tables_cmd();
    if (*scan_app) return run.scan_cmd();
    if (*primes_app) return run.primes_cmd();
  } catch (const Error& e) {
    out << error_json(e.kind(), e.what()).dump(2) << '\n';
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return exit_code(ErrorKind::kInternal);
}

}  // namespace quintic
