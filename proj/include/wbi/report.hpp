#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "wbi/config.hpp"

namespace wbi {

/// Per-point residuals of one check for one (n, k) cell.
///
/// `pass` is max(residuals) <= threshold (NaN never passes; an empty grid
/// passes). `detail` carries optional named breakdowns aligned with `grid`.
struct ResidualReport {
  std::string check;
  OrderParams params;
  std::vector<double> grid;
  std::vector<double> residuals;
  double threshold = 0.0;
  bool pass = true;
  std::map<std::string, std::vector<double>> detail;
  std::vector<std::string> notes;

  void add(double x, double residual) {
    grid.push_back(x);
    residuals.push_back(residual);
  }
  /// Recomputes `pass` from residuals and threshold.
  ResidualReport& finalize();
  double max_residual() const noexcept;
};

nlohmann::json to_json(const ResidualReport& report);

/// Deterministic JSON text: keys sorted, floating-point numbers printed with
/// 17 significant digits, non-finite numbers as null, two-space indent.
std::string dump_json(const nlohmann::json& value);

/// One row per grid point: check,n,k,x,residual,threshold,pass.
void write_csv(std::ostream& out, std::span<const ResidualReport> reports);

/// %.17g formatting shared by the JSON and CSV writers.
std::string format_number(double v);

}  // namespace wbi
