#pragma once

// Grid verification of
//   W_{n+1/2,ik}(2x) = x Lambda(x) K_{1/2+ik}(x) + x conj(Lambda(x)) K_{1/2-ik}(x)
// and the suite that runs every check over a range of (n, k).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wbi/config.hpp"
#include "wbi/report.hpp"

namespace wbi {

/// Residual |W - RHS| / max(|W|, 2x |K_{1/2+ik}| sum |a_m| x^{m-1}) per grid
/// point (W is real with zeros for small x), threshold 1e-6.
/// Grid must lie in [0.25, 8]. k = 0 uses the Laguerre and K_{1/2} closed
/// forms; 0 < k < cfg.small_k_refusal is refused with DomainError.
ResidualReport verify_identity(const OrderParams& p, const std::vector<double>& grid,
                               const EvalConfig& cfg = {});

/// Both sides at 50 digits (no grid restriction beyond x > 0).
ResidualReport verify_identity_oracle(const OrderParams& p, const std::vector<double>& grid);

std::vector<double> default_identity_grid();

struct SuiteRanges {
  unsigned n_max = 8;
  std::vector<double> k_set{0.1, 0.5, 1.0, 2.0};
  std::vector<double> x_grid = default_identity_grid();
  bool oracle_equivalence = true;  ///< collocation fits (50 digits, slow)
  unsigned threads = 0;            ///< 0: hardware concurrency
  void validate() const;
};

/// Checks whose failure is expected from the printed formulas and only
/// feeds the ledger. Everything else is load-bearing.
struct AdvisoryEntry {
  std::string_view check;
  std::string_view reason;
};
const std::vector<AdvisoryEntry>& advisory_checks();
bool is_advisory(std::string_view check);

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t advisory_failed = 0;
  std::size_t load_bearing_failed = 0;
};

struct VerificationSuiteResult {
  SuiteRanges ranges;
  std::vector<ResidualReport> reports;  ///< sorted by (check, n, k)
  std::vector<std::string> ledger;

  SuiteSummary summary() const;
  /// True iff every load-bearing report passes.
  bool pass() const;
};

/// Runs, per (n, k) cell and concurrently across cells: kernel cross-checks,
/// coefficient construction and invariants, oracle equivalence, coupled
/// residual, identity grid, fourth-order basis checks, indicial analysis,
/// constants and reconstruction. A check that throws is recorded as a failed
/// report with the error in its notes; ConvergenceError aborts the suite.
VerificationSuiteResult run_suite(const EvalConfig& cfg, const SuiteRanges& ranges = {});

/// Names of every suite check, in suite order.
std::vector<std::string_view> check_names();

/// Runs one named check for one (n, k). An empty grid selects the check's
/// default grid (collocation points for the oracle check).
ResidualReport run_check(std::string_view name, const OrderParams& p, const EvalConfig& cfg = {},
                         const std::vector<double>& grid = {});

nlohmann::json to_json(const SuiteSummary& s);
nlohmann::json to_json(const VerificationSuiteResult& result);

enum class ExportFormat { Json, Csv };
ExportFormat parse_format(std::string_view name);

/// Writes reports (JSON array document or CSV rows). Throws IoError naming
/// the path when it cannot be written.
void export_reports(const std::vector<ResidualReport>& reports, ExportFormat format,
                    const std::string& path);
/// Writes the whole suite: JSON with summary and ledger, or CSV rows.
void export_suite(const VerificationSuiteResult& result, ExportFormat format,
                  const std::string& path);

/// Serialized text for the same two formats.
std::string render_reports(const std::vector<ResidualReport>& reports, ExportFormat format);
std::string render_suite(const VerificationSuiteResult& result, ExportFormat format);

}  // namespace wbi
