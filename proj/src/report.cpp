#include "wbi/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace wbi {

double ResidualReport::max_residual() const noexcept {
  double m = 0.0;
  for (double r : residuals) {
    if (std::isnan(r)) return std::numeric_limits<double>::infinity();
    m = std::max(m, r);
  }
  return m;
}

ResidualReport& ResidualReport::finalize() {
  pass = max_residual() <= threshold;
  return *this;
}

nlohmann::json to_json(const ResidualReport& report) {
  nlohmann::json j;
  j["check"] = report.check;
  j["params"] = {{"n", report.params.n}, {"k", report.params.k}};
  j["grid"] = report.grid;
  j["residuals"] = report.residuals;
  j["threshold"] = report.threshold;
  j["pass"] = report.pass;
  if (!report.detail.empty()) j["detail"] = report.detail;
  if (!report.notes.empty()) j["notes"] = report.notes;
  return j;
}

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void dump_into(const nlohmann::json& v, std::string& out, int indent) {
  const std::string pad(indent + 2, ' ');
  const std::string close_pad(indent, ' ');
  switch (v.type()) {
    case nlohmann::json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      // nlohmann::json objects are std::map backed, so iteration is sorted.
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + nlohmann::json(it.key()).dump() + ": ";
        dump_into(it.value(), out, indent + 2);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump_into(v[i], out, indent + 2);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      out += format_number(v.get<double>());
      return;
    default:
      out += v.dump();
  }
}

}  // namespace

std::string dump_json(const nlohmann::json& value) {
  std::string out;
  dump_into(value, out, 0);
  out += "\n";
  return out;
}

void write_csv(std::ostream& out, std::span<const ResidualReport> reports) {
  out << "check,n,k,x,residual,threshold,pass\n";
  for (const auto& r : reports) {
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
      const double res = i < r.residuals.size() ? r.residuals[i] : std::nan("");
      out << r.check << ',' << r.params.n << ',' << format_number(r.params.k) << ','
          << format_number(r.grid[i]) << ',' << format_number(res) << ','
          << format_number(r.threshold) << ',' << (r.pass ? "true" : "false") << '\n';
    }
  }
}

}  // namespace wbi
