#include "rhomboid/crosscheck.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "rhomboid/complexity.h"
#include "rhomboid/vdm.h"

namespace rhomboid {

bool CrosscheckReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

std::string CrosscheckReport::ToJson() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const CrosscheckEntry& e : entries) {
    rows.push_back({{"method", MethodName(e.method)},
                    {"n", e.n},
                    {"shape", ShapeName(e.shape)},
                    {"predicted", e.predicted},
                    {"generated", e.generated},
                    {"equivalence", e.equivalence},
                    {"pass", e.pass}});
  }
  return rows.dump(2) + "\n";
}

std::string CrosscheckReport::ToCsv() const {
  std::ostringstream os;
  os << "method,n,shape,predicted,generated,equivalence,pass\n";
  for (const CrosscheckEntry& e : entries) {
    os << MethodName(e.method) << ',' << e.n << ',' << ShapeName(e.shape) << ',' << e.predicted
       << ',' << e.generated << ',' << e.equivalence << ',' << (e.pass ? "true" : "false")
       << '\n';
  }
  return os.str();
}

CrosscheckReport Crosscheck(Method method, std::span<const int> sizes,
                            const CrosscheckOptions& options) {
  CrosscheckReport report;
  int max_n = 1;
  for (int n : sizes) max_n = std::max(max_n, n);
  const ComplexityModel model(method, max_n);

  for (int n : sizes) {
    for (Shape shape : kAllShapes) {
      CrosscheckEntry entry;
      entry.method = method;
      entry.n = n;
      entry.shape = shape;
      entry.predicted = model.at(n).at(ClassOf(shape));
      const SubgraphSpec spec = SubgraphSpec::Canonical(Family::kFsr, shape, n);
      const Expr e = Generate(spec, method);
      entry.generated = Complexity(e);
      bool equivalent = true;
      if (options.check_equivalence) {
        const StDag host = spec.BuildHost();
        OracleVerdict v = CheckAgainstPaths(e, host, spec.src(), spec.dst(), options.equivalence);
        entry.equivalence = v.mode == EquivalenceMode::kExact ? "exact" : "randomized";
        equivalent = v.equivalent;
      } else {
        entry.equivalence = "skipped";
      }
      entry.pass = equivalent && entry.generated == entry.predicted;
      report.entries.push_back(entry);
    }
  }
  return report;
}

}  // namespace rhomboid
