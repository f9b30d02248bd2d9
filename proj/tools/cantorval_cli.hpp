#ifndef CANTORVAL_TOOLS_CLI_HPP
#define CANTORVAL_TOOLS_CLI_HPP

// Command-line front end. run() takes the argument vector (without the
// program name) and two streams so tests can drive it in-process.
//
// Exit codes: 0 ok, 1 verification failed, 2 parse error, 3 hypothesis
// violated, 4 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cantorval/cantorval.hpp"

namespace cantorval::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kParse = 2, kHypothesis = 3, kBudget = 4 };

struct CommandConfig {
  std::string command;
  std::string input;
  std::optional<std::size_t> depth;
  std::string format = "json";
  std::optional<std::uint64_t> budget;
  std::optional<std::size_t> k0;
  std::string root;
  std::string out_path;
  bool cantor = false;
  std::size_t columns = 72;
};

inline std::uint64_t parse_budget(const std::string& text, const char* where) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-' || v < 1)
    throw ParseError(std::string(where) + " must be a positive integer, got \"" + text + "\"");
  return v;
}

inline DepthBudget effective_budget(const CommandConfig& cfg) {
  DepthBudget budget;
  if (const char* env = std::getenv("CANTORVAL_BUDGET"); env && *env) budget.max_parts = parse_budget(env, "CANTORVAL_BUDGET");
  if (cfg.budget) budget.max_parts = *cfg.budget;
  return budget;
}

/// --spec is a path, or inline JSON when it starts with '{'.
inline json::Json load_input(const std::string& input) {
  if (input.empty()) throw ParseError("--spec is required");
  std::size_t first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && input[first] == '{') return json::parse(input);
  std::ifstream in(input);
  if (!in) throw ParseError("cannot read spec file \"" + input + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return json::parse(buf.str());
}

inline std::string dump(const json::Json& j) { return j.dump(2) + "\n"; }

inline void require_format(const CommandConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw ParseError("--format " + cfg.format + " is not supported by " + cfg.command + " (use " + list + ")");
}

inline std::string certificate_text(const TrichotomyCertificate& cert) {
  std::ostringstream o;
  o << "verdict: " << to_string(cert.verdict) << "\n";
  o << "rule:    " << cert.rule << "\n";
  o << "measure: " << (cert.measure ? to_string(*cert.measure) : "unknown") << "\n";
  if (cert.k0) o << "k0:      " << *cert.k0 << "\n";
  if (cert.relation_residuals) {
    std::size_t nonzero = 0;
    for (const auto& r : *cert.relation_residuals) nonzero += sgn(r.residual) != 0;
    o << "relations: " << cert.relation_residuals->size() << " checked, " << nonzero << " violated\n";
  }
  if (cert.stabilization_depth) o << "stable from depth " << *cert.stabilization_depth << "\n";
  if (cert.depth_report)
    for (const auto& r : cert.depth_report->rows)
      o << "  depth " << r.depth << ": measure " << to_string(r.measure) << " (" << to_double(r.measure) << "), "
        << r.parts << " parts, " << r.gap_count << " gaps\n";
  return o.str();
}

inline std::string cmd_classify(const CommandConfig& cfg, const DepthBudget& budget) {
  require_format(cfg, {"json", "text"});
  const LambdaSpec spec = json::decode_lambda(load_input(cfg.input));
  const auto cert = classify(spec, ClassifyOptions{cfg.depth.value_or(8), budget});
  return cfg.format == "json" ? dump(json::encode(cert)) : certificate_text(cert);
}

inline std::string cmd_measure(const CommandConfig& cfg, const DepthBudget& budget) {
  require_format(cfg, {"json", "text"});
  const LambdaSpec spec = json::decode_lambda(load_input(cfg.input));
  const auto cert = classify(spec, ClassifyOptions{cfg.depth.value_or(8), budget});
  if (!cert.measure)
    throw DomainError("no exact measure available: verdict " + to_string(cert.verdict) + " (rule " + cert.rule + ")");
  if (cfg.format == "json") return dump(json::Json{{"measure", json::encode(*cert.measure)}});
  return to_string(*cert.measure) + "\n";
}

inline std::string cmd_approx(const CommandConfig& cfg, const DepthBudget& budget) {
  require_format(cfg, {"json", "text"});
  const LambdaSpec spec = json::decode_lambda(load_input(cfg.input));
  const std::size_t n = cfg.depth.value_or(4);
  const IntervalUnion u = cfg.cantor ? build_C_n(spec, n, budget) : build_diff_n(spec, n, budget);
  if (cfg.format == "json")
    return dump(json::Json{{"depth", n},
                           {"set", cfg.cantor ? "C_n" : "C_n-C_n"},
                           {"measure", json::encode(u.measure())},
                           {"parts", json::encode(u)}});
  std::ostringstream o;
  o << "measure " << to_string(u.measure()) << ", " << u.size() << " parts\n";
  for (const auto& p : u.parts()) o << "[" << to_string(p.lo) << ", " << to_string(p.hi) << "]\n";
  return o.str();
}

inline KIndexView view_for(const CommandConfig& cfg, const LambdaSpec& spec) {
  return cfg.k0 ? KIndexView(spec, *cfg.k0) : KIndexView::least(spec);
}

inline std::string cmd_gaps(const CommandConfig& cfg, const DepthBudget& budget) {
  require_format(cfg, {"json", "text"});
  const LambdaSpec spec = json::decode_lambda(load_input(cfg.input));
  const KIndexView view = view_for(cfg, spec);
  const TernaryCode root = TernaryCode::parse(cfg.root);
  const GapFamily family = gap_family(view, root, cfg.depth.value_or(3), budget);
  if (cfg.format == "json") return dump(json::encode(spec, family));
  std::ostringstream o;
  for (const auto& [level, gaps] : family.levels) {
    o << "level " << level << " (k=" << view.k(level) << "): " << gaps.size() << " gaps\n";
    for (const auto& id : gaps) {
      const OpenInterval g = gap(spec, id);
      o << "  " << (id.code.empty() ? "()" : id.code.str()) << "^" << id.side << "  (" << to_string(g.lo) << ", "
        << to_string(g.hi) << ")\n";
    }
  }
  return o.str();
}

inline std::string cmd_series(const CommandConfig& cfg, const DepthBudget& budget) {
  require_format(cfg, {"json"});
  const json::Json in = load_input(cfg.input);
  json::Json out;
  if (in.contains("lambda")) {
    const LambdaSpec spec = json::decode_lambda(in);
    const SeriesSpec series = lambda_to_series(spec);
    out = json::encode(series);
    out["sum"] = json::encode(series.sum());
  } else if (in.contains("series")) {
    const SeriesSpec series = json::decode_series(in);
    out["sum"] = json::encode(series.sum());
    out["kakeya"] = to_string(kakeya_classify(series));
    out["fast_convergent"] = is_fast_convergent(series);
    if (is_fast_convergent(series)) out["lambda"] = json::encode(series_to_lambda(series))["lambda"];
  } else if (in.contains("k")) {
    const KSequenceSpec kspec = json::decode_k(in);
    const auto result = from_k_sequence(kspec, ClassifyOptions{cfg.depth.value_or(8), budget});
    out = json::encode(result.series);
    out["sum"] = json::encode(result.series.sum());
    out["lambda"] = json::encode(result.lambda)["lambda"];
    out["certificate"] = json::encode(result.certificate);
    out["e_measure_diff"] = json::encode(e_measure_diff(kspec));
    if (kspec.canonical().prefix_size() == 0) {
      const auto form = multigeometric_form(kspec);
      out["multigeometric"] = {{"epsilons", form.epsilons}, {"m", form.m}, {"measure", json::encode(form.measure)}};
    }
  } else {
    throw ParseError("series: expected a \"lambda\", \"series\" or \"k\" object");
  }
  return dump(out);
}

inline int cmd_verify(const CommandConfig& cfg, const DepthBudget& budget, std::string& text) {
  require_format(cfg, {"json", "text"});
  TrichotomyCertificate cert = json::decode_certificate(load_input(cfg.input));
  if (cfg.depth) cert.depth = *cfg.depth;
  const VerifyReport report = verify_certificate(cert, budget);
  if (cfg.format == "json") {
    text = dump(json::encode(report));
  } else {
    std::ostringstream o;
    for (const auto& c : report.checks)
      o << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
    o << (report.ok() ? "certificate verified\n" : "certificate REJECTED\n");
    text = o.str();
  }
  return report.ok() ? kOk : kVerifyFailed;
}

inline std::string cmd_render(const CommandConfig& cfg, const DepthBudget& budget) {
  require_format(cfg, {"svg", "text"});
  const LambdaSpec spec = json::decode_lambda(load_input(cfg.input));
  const std::size_t depth = cfg.depth.value_or(6);
  std::vector<RenderRow> rows;
  std::optional<GapFamily> family;
  std::optional<KIndexView> view;
  if (!cfg.cantor) {
    try {
      view = view_for(cfg, spec);
      if (view->k0() == 0) {
        std::size_t levels = 0;
        while (view->k(levels + 1) <= depth) ++levels;
        family = gap_family(*view, TernaryCode{}, levels, budget);
      }
    } catch (const DomainError&) {
      family.reset();
    }
  }
  for (std::size_t n = 0; n <= depth; ++n) {
    RenderRow row;
    row.depth = n;
    row.parts = cfg.cantor ? build_C_n(spec, n, budget) : build_diff_n(spec, n, budget);
    if (family)
      for (const auto& [level, gaps] : family->levels)
        if (view->k(level) <= n)
          for (const auto& id : gaps) row.highlighted.push_back(gap(spec, id));
    rows.push_back(std::move(row));
  }
  const ClosedInterval window = cfg.cantor ? ClosedInterval{Rational(0), Rational(1)}
                                           : ClosedInterval{Rational(-1), Rational(1)};
  return cfg.format == "svg" ? render_svg(rows, window) : render_ascii(rows, window, cfg.columns);
}

struct ExampleRow {
  const char* k_rule;
  const char* period_bits;
};

inline constexpr ExampleRow kExamples[] = {{"2n", "01"}, {"3n", "001"}, {"(2,3,5,6,...)", "011"}};

inline std::string cmd_examples(const CommandConfig& cfg, const DepthBudget& budget) {
  require_format(cfg, {"json", "text"});
  json::Json rows = json::Json::array();
  std::ostringstream o;
  o << "k rule          lambda period              measure  S*measure\n";
  for (const auto& ex : kExamples) {
    const KSequenceSpec kspec("", ex.period_bits);
    const auto result = from_k_sequence(kspec, ClassifyOptions{cfg.depth.value_or(8), budget});
    const auto form = multigeometric_form(kspec);
    const Rational e = e_measure_diff(kspec);
    std::string period = "(";
    for (std::size_t i = 0; i < result.lambda.period().size(); ++i)
      period += (i ? ", " : "") + to_string(result.lambda.period()[i]);
    period += ")";
    char line[160];
    std::snprintf(line, sizeof line, "%-15s %-26s %-8s %s\n", ex.k_rule, period.c_str(),
                  to_string(*result.certificate.measure).c_str(), to_string(e).c_str());
    o << line;
    rows.push_back({{"k_rule", ex.k_rule},
                    {"k", json::encode(kspec)["k"]},
                    {"lambda", json::encode(result.lambda)["lambda"]},
                    {"measure", json::encode(*result.certificate.measure)},
                    {"multigeometric_measure", json::encode(form.measure)},
                    {"e_measure_diff", json::encode(e)},
                    {"verdict", to_string(result.certificate.verdict)}});
  }
  return cfg.format == "json" ? dump(rows) : o.str();
}

inline int dispatch(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const DepthBudget budget = effective_budget(cfg);
    std::string text;
    int code = kOk;
    if (cfg.command == "classify") text = cmd_classify(cfg, budget);
    else if (cfg.command == "measure") text = cmd_measure(cfg, budget);
    else if (cfg.command == "approx") text = cmd_approx(cfg, budget);
    else if (cfg.command == "gaps") text = cmd_gaps(cfg, budget);
    else if (cfg.command == "series") text = cmd_series(cfg, budget);
    else if (cfg.command == "verify") code = cmd_verify(cfg, budget, text);
    else if (cfg.command == "render") text = cmd_render(cfg, budget);
    else if (cfg.command == "examples") text = cmd_examples(cfg, budget);
    else throw ParseError("unknown command \"" + cfg.command + "\"");

    if (cfg.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw ParseError("cannot write \"" + cfg.out_path + "\"");
      file << text;
    }
    if (code == kVerifyFailed) err << "verification failed\n";
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const DomainError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return kHypothesis;
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact central Cantor sets, their difference sets and the interval/Cantor set/Cantorval trichotomy",
               "cantorval"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto add_common = [&](CLI::App* sub, bool with_spec) {
    if (with_spec) sub->add_option("--spec", cfg.input, "spec file or inline JSON")->required();
    sub->add_option("--depth", cfg.depth, "depth (or level count for gaps)");
    sub->add_option("--budget", cfg.budget, "maximum number of enumerated intervals")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "json, text or svg");
    sub->add_option("--out", cfg.out_path, "write output to FILE");
  };

  add_common(app.add_subcommand("classify", "classify C-C and emit a certificate"), true);
  add_common(app.add_subcommand("measure", "exact measure of C-C"), true);
  auto* approx = app.add_subcommand("approx", "C_n-C_n (or C_n with --cantor) at a depth");
  add_common(approx, true);
  approx->add_flag("--cantor", cfg.cantor, "the Cantor set approximation C_n instead");
  auto* gaps = app.add_subcommand("gaps", "persistent gap family");
  add_common(gaps, true);
  gaps->add_option("--k0", cfg.k0, "start index (default: least valid)");
  gaps->add_option("--root", cfg.root, "root code over 012 (default: empty)");
  add_common(app.add_subcommand("series", "series <-> lambda conversions and k-sequence generators"), true);
  add_common(app.add_subcommand("verify", "re-check a certificate from scratch"), true);
  auto* render = app.add_subcommand("render", "depth-stack picture as SVG or text");
  add_common(render, true);
  render->add_flag("--cantor", cfg.cantor, "draw C_n instead of C_n-C_n");
  render->add_option("--k0", cfg.k0, "start index for highlighted gaps");
  render->add_option("--columns", cfg.columns, "text width")->check(CLI::PositiveNumber);
  add_common(app.add_subcommand("examples", "reproduce the three worked examples"), false);

  std::vector<const char*> argv{"cantorval"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParse;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "render" && cfg.format == "json") cfg.format = "svg";
  if (cfg.command == "examples" && cfg.format == "json" && !app.get_subcommands().front()->count("--format"))
    cfg.format = "text";
  return dispatch(cfg, out, err);
}

}  // namespace cantorval::cli

#endif  // CANTORVAL_TOOLS_CLI_HPP
