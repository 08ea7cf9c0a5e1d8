#include "rhomboid/cli.h"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rhomboid/complexity.h"
#include "rhomboid/crosscheck.h"
#include "rhomboid/equivalence.h"
#include "rhomboid/errors.h"
#include "rhomboid/vdm.h"

namespace rhomboid::cli {
namespace {

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint64_t modulus = kMersenne61;
  int trials = 3;
  std::uint64_t expansion_bound = kDefaultExpansionBound;
  std::string output;
  std::string format;

  // Shared command payload.
  std::string family = "fsr";
  std::string shape = "core";
  std::string method = "2vdm";
  int n = 0;
  std::string sizes;
  std::string expr_file;
  std::string report_file;
  bool randomized = false;
  bool closed_form = false;
  bool check_generator = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int ParseInt(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

Method RequireMethod(const std::string& name) {
  auto m = MethodFromName(name);
  if (!m) throw UsageError("unknown method '" + name + "' (expected 2vdm, 1vdm or combined)");
  return *m;
}

Family RequireSubgraphFamily(const std::string& name) {
  if (name == "fsr") return Family::kFsr;
  if (name == "sr") return Family::kSr;
  throw UsageError("unknown family '" + name + "' (expected fsr or sr)");
}

SubgraphSpec RequireSpec(const RunConfig& cfg) {
  auto shape = ShapeFromName(cfg.shape);
  if (!shape) throw UsageError("unknown shape '" + cfg.shape + "'");
  if (cfg.n < 1) throw InvalidSizeError("invalid size: --n must be >= 1");
  return SubgraphSpec::Canonical(RequireSubgraphFamily(cfg.family), *shape, cfg.n);
}

EquivalenceOptions OptionsFrom(const RunConfig& cfg) {
  EquivalenceOptions opt;
  opt.mode = cfg.randomized ? EquivalenceMode::kRandomized : EquivalenceMode::kExact;
  opt.expansion_bound = cfg.expansion_bound;
  opt.randomized.trials = cfg.trials;
  opt.randomized.seed = cfg.seed;
  opt.randomized.modulus = cfg.modulus;
  return opt;
}

void ValidateConfig(const RunConfig& cfg) {
  if (cfg.trials < 1) throw UsageError("--trials must be >= 1");
  if (cfg.expansion_bound < 1) throw UsageError("--expansion-bound must be >= 1");
  if (cfg.modulus >= (std::uint64_t{1} << 63) || !IsPrime(cfg.modulus)) {
    throw UsageError("--modulus must be a prime below 2^63");
  }
}

std::string GraphJson(const StDag& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (VertexRef v : g.vertices()) vertices.push_back(VertexName(v));
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"label", LabelName(e.label)},
                     {"from", VertexName(e.from)},
                     {"to", VertexName(e.to)}});
  }
  nlohmann::json doc{{"family", FamilyName(g.family())},
                     {"n", g.size()},
                     {"source", VertexName(g.source())},
                     {"sink", VertexName(g.sink())},
                     {"vertices", vertices},
                     {"edges", edges}};
  return doc.dump(2) + "\n";
}

int CmdGraph(const RunConfig& cfg, std::ostream& out) {
  StDag g = [&] {
    if (cfg.family == "fsr") return BuildFsr(cfg.n);
    if (cfg.family == "sr") return BuildSr(cfg.n);
    if (cfg.family == "fibonacci") return BuildFibonacci(cfg.n);
    throw UsageError("unknown family '" + cfg.family + "' (expected fsr, sr or fibonacci)");
  }();
  const std::string format = cfg.format.empty() ? "dot" : cfg.format;
  if (format == "dot") {
    out << ExportDot(g);
  } else if (format == "json") {
    out << GraphJson(g);
  } else if (format == "text") {
    for (const Edge& e : g.edges()) {
      out << LabelName(e.label) << ' ' << VertexName(e.from) << ' ' << VertexName(e.to) << '\n';
    }
  } else {
    throw UsageError("graph supports --format dot, json or text");
  }
  return kExitOk;
}

int CmdExpr(const RunConfig& cfg, std::ostream& out) {
  const SubgraphSpec spec = RequireSpec(cfg);
  const Method method = RequireMethod(cfg.method);
  const Expr e = Generate(spec, method);
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  if (format == "text") {
    out << Render(e) << '\n' << "literals " << Complexity(e) << '\n';
  } else if (format == "json") {
    nlohmann::json doc{{"family", cfg.family},     {"shape", ShapeName(spec.shape())},
                       {"n", spec.size()},         {"method", MethodName(method)},
                       {"literals", Complexity(e)}, {"expression", Render(e)}};
    out << doc.dump(2) << '\n';
  } else {
    throw UsageError("expr supports --format text or json");
  }
  return kExitOk;
}

int CmdVerify(const RunConfig& cfg, std::ostream& out) {
  const SubgraphSpec spec = RequireSpec(cfg);
  const Method method = RequireMethod(cfg.method);
  Expr e;
  std::string source = "generated";
  if (!cfg.expr_file.empty()) {
    std::ifstream in(cfg.expr_file);
    if (!in) throw UsageError("cannot read expression file '" + cfg.expr_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    e = Parse(buf.str());
    source = cfg.expr_file;
  } else {
    e = Generate(spec, method);
  }
  const StDag host = spec.BuildHost();
  const OracleVerdict v = CheckAgainstPaths(e, host, spec.src(), spec.dst(), OptionsFrom(cfg));
  const std::string mode = v.mode == EquivalenceMode::kExact ? "exact" : "randomized";

  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  if (format == "json") {
    nlohmann::json doc{{"family", cfg.family},     {"shape", ShapeName(spec.shape())},
                       {"n", spec.size()},         {"method", MethodName(method)},
                       {"expression", source},     {"literals", Complexity(e)},
                       {"mode", mode},             {"equivalent", v.equivalent},
                       {"seed", cfg.seed},         {"trials", cfg.trials}};
    if (!v.detail.empty()) doc["detail"] = v.detail;
    out << doc.dump(2) << '\n';
  } else if (format == "text") {
    out << "subgraph " << cfg.family << ' ' << ShapeName(spec.shape()) << " n=" << spec.size()
        << '\n'
        << "expression " << source << " (" << MethodName(method) << ")\n"
        << "literals " << Complexity(e) << '\n'
        << "mode " << mode << '\n'
        << "result " << (v.equivalent ? "equivalent" : "NOT equivalent") << '\n';
    if (!v.detail.empty()) out << "detail " << v.detail << '\n';
  } else {
    throw UsageError("verify supports --format text or json");
  }
  return v.equivalent ? kExitOk : kExitFailure;
}

bool IsPowerOfTwo(int n) { return n >= 2 && (n & (n - 1)) == 0; }

int Log2(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

int CmdTable(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Method method = RequireMethod(cfg.method);
  std::vector<int> sizes;
  try {
    sizes = ParseSizes(cfg.sizes);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--sizes: ") + e.what());
  }
  for (int n : sizes) {
    if (n > kMaxPredictSize) throw InvalidSizeError("invalid size: sizes must be <= 4096");
  }
  if (cfg.closed_form) {
    if (method != Method::kTwoVdm) throw UsageError("--closed-form requires --method 2vdm");
    for (int n : sizes) {
      if (!IsPowerOfTwo(n)) throw UsageError("--closed-form needs power-of-two sizes >= 2");
    }
  }

  const MethodTable table = EmitTable(method, sizes);
  std::vector<ComplexityTriple> closed;
  bool closed_ok = true;
  if (cfg.closed_form) {
    for (const auto& [n, t] : table.rows) {
      closed.push_back(ClosedForm2Vdm(Log2(n)));
      closed_ok = closed_ok && closed.back() == t;
    }
  }

  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  if (format == "csv") {
    if (cfg.closed_form) {
      out << "method,shape,n,literals,closed_form\n";
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& [n, t] = table.rows[r];
        for (ShapeClass c : {ShapeClass::kCore, ShapeClass::kLeaf, ShapeClass::kDipterous}) {
          out << MethodName(method) << ',' << ShapeClassName(c) << ',' << n << ',' << t.at(c)
              << ',' << closed[r].at(c) << '\n';
        }
      }
    } else {
      out << TableCsv(table);
    }
  } else if (format == "json") {
    if (cfg.closed_form) {
      nlohmann::json doc = nlohmann::json::parse(TableJson(table));
      for (std::size_t r = 0; r < closed.size(); ++r) {
        doc["rows"][r]["closed_form"] = {{"core", closed[r].core},
                                         {"leaf", closed[r].leaf},
                                         {"dipterous", closed[r].dipterous}};
      }
      out << doc.dump(2) << '\n';
    } else {
      out << TableJson(table);
    }
  } else if (format == "text") {
    out << TableText(table);
    if (cfg.closed_form) {
      out << "closed form\n";
      for (std::size_t r = 0; r < closed.size(); ++r) {
        out << std::setw(6) << table.rows[r].first << std::setw(12) << closed[r].core
            << std::setw(12) << closed[r].leaf << std::setw(12) << closed[r].dipterous << '\n';
      }
    }
  } else {
    throw UsageError("table supports --format csv, json or text");
  }

  int code = kExitOk;
  if (cfg.closed_form && !closed_ok) {
    err << "closed form disagrees with the recurrence\n";
    code = kExitFailure;
  }
  if (cfg.check_generator) {
    CrosscheckOptions opt;
    opt.equivalence = OptionsFrom(cfg);
    const CrosscheckReport report = Crosscheck(method, sizes, opt);
    if (!cfg.report_file.empty()) {
      std::ofstream rep(cfg.report_file);
      if (!rep) throw UsageError("cannot write report file '" + cfg.report_file + "'");
      const bool csv = cfg.report_file.size() >= 4 &&
                       cfg.report_file.compare(cfg.report_file.size() - 4, 4, ".csv") == 0;
      rep << (csv ? report.ToCsv() : report.ToJson());
    }
    std::size_t failures = 0;
    for (const CrosscheckEntry& e : report.entries) {
      if (e.pass) continue;
      ++failures;
      err << "mismatch: " << MethodName(e.method) << " n=" << e.n << ' ' << ShapeName(e.shape)
          << " predicted=" << e.predicted << " generated=" << e.generated
          << " equivalence=" << e.equivalence << '\n';
    }
    err << "crosscheck: " << report.entries.size() << " entries, " << failures << " failed\n";
    if (failures > 0) code = kExitFailure;
  }
  return code;
}

}  // namespace

std::vector<int> ParseSizes(std::string_view text) {
  std::vector<int> sizes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (item.empty()) throw std::invalid_argument("empty size in list");
    std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) {
      sizes.push_back(ParseInt(item));
    } else {
      int lo = ParseInt(item.substr(0, dash));
      int hi = ParseInt(item.substr(dash + 1));
      if (hi < lo) throw std::invalid_argument("descending range '" + std::string(item) + "'");
      for (int n = lo; n <= hi; ++n) sizes.push_back(n);
    }
    if (sizes.back() < 1) throw std::invalid_argument("sizes must be positive");
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return sizes;
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Factored expressions for square rhomboids and full square rhomboids"};
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "Base seed for randomized checks (default 0)");
  app.add_option("--modulus", cfg.modulus, "Prime modulus for randomized checks");
  app.add_option("--trials", cfg.trials, "Randomized trials (default 3)");
  app.add_option("--expansion-bound", cfg.expansion_bound,
                 "Largest exact expansion, in monomial-symbols");
  app.add_option("-o,--output", cfg.output, "Write output to a file instead of stdout");

  auto* graph = app.add_subcommand("graph", "Emit a rhomboid or Fibonacci graph");
  graph->add_option("--family", cfg.family, "fsr, sr or fibonacci")->required();
  graph->add_option("--n", cfg.n, "Size (basic vertices, or vertices for fibonacci)")->required();
  graph->add_option("--format", cfg.format, "dot (default), json or text");

  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("--family", cfg.family, "fsr (default) or sr");
    cmd->add_option("--shape", cfg.shape,
                    "core, leaf, dipterous, or a specific leaf-*/parallelogram/trapezoid");
    cmd->add_option("--n", cfg.n, "Subgraph size in basic vertices")->required();
    cmd->add_option("--method", cfg.method, "2vdm (default), 1vdm or combined");
    cmd->add_option("--format", cfg.format, "text (default) or json");
  };
  auto* expr = app.add_subcommand("expr", "Generate and print a subgraph expression");
  add_spec(expr);
  auto* verify = app.add_subcommand("verify", "Check an expression against the path oracle");
  add_spec(verify);
  verify->add_option("--expr-file", cfg.expr_file, "Verify this expression instead");
  verify->add_flag("--randomized", cfg.randomized, "Force randomized checking");
  verify->add_option("--seed", cfg.seed, "Base seed for randomized checks");
  verify->add_option("--trials", cfg.trials, "Randomized trials");

  auto* table = app.add_subcommand("table", "Predicted complexity table");
  table->add_option("--method", cfg.method, "2vdm, 1vdm or combined")->required();
  table->add_option("--sizes", cfg.sizes, "Sizes, e.g. 1-10,20,30")->required();
  table->add_option("--format", cfg.format, "csv (default), json or text");
  table->add_flag("--closed-form", cfg.closed_form, "Add closed-form values (2vdm, n = 2^k)");
  table->add_flag("--check-generator", cfg.check_generator,
                  "Also generate every expression and cross-check it");
  table->add_option("--report", cfg.report_file, "Write the cross-check report (.json/.csv)");
  table->add_flag("--randomized", cfg.randomized, "Force randomized cross-check verdicts");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    ValidateConfig(cfg);
    if (graph->parsed()) return CmdGraph(cfg, *sink);
    if (expr->parsed()) return CmdExpr(cfg, *sink);
    if (verify->parsed()) return CmdVerify(cfg, *sink);
    return CmdTable(cfg, *sink, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InvalidSizeError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InvalidSpecError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace rhomboid::cli
