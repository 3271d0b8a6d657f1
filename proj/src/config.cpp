#include "wbi/config.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "wbi/errors.hpp"

namespace wbi {

void OrderParams::validate() const {
  if (!std::isfinite(k)) throw DomainError("OrderParams: k must be finite");
  if (n > kMaxDegreeIndex)
    throw DomainError("OrderParams: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kMaxDegreeIndex));
}

void EvalConfig::validate_tolerances() const {
  const bool positive = series_rel_tol > 0 && quad_step > 0 && quad_rel_tol > 0 &&
                        fd_step > 0 && fd_noise_floor > 0 && near_degenerate_tol > 0 &&
                        collocation_cond_limit > 0 && collocation_residual_tol > 0 &&
                        quad_decay_exponent > 0 && small_k_refusal >= 0 &&
                        k_zero_threshold >= 0;
  if (!positive) throw DomainError("EvalConfig: tolerances must be positive");
}

void EvalConfig::validate() const {
  validate_tolerances();
  if (series_max_terms < 10) throw DomainError("EvalConfig: series_max_terms must be >= 10");
  if (quad_max_levels < 1) throw DomainError("EvalConfig: quad_max_levels must be >= 1");
}

EvalConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("config file '" + path + "': " + e.what());
  }
  EvalConfig c;
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  get("series_rel_tol", c.series_rel_tol);
  get("series_max_terms", c.series_max_terms);
  get("quad_step", c.quad_step);
  get("quad_cutoff", c.quad_cutoff);
  get("quad_decay_exponent", c.quad_decay_exponent);
  get("quad_rel_tol", c.quad_rel_tol);
  get("quad_max_levels", c.quad_max_levels);
  get("fd_step", c.fd_step);
  get("fd_noise_floor", c.fd_noise_floor);
  get("k_zero_threshold", c.k_zero_threshold);
  get("small_k_refusal", c.small_k_refusal);
  get("near_degenerate_tol", c.near_degenerate_tol);
  get("collocation_cond_limit", c.collocation_cond_limit);
  get("collocation_residual_tol", c.collocation_residual_tol);
  c.validate();
  return c;
}

}  // namespace wbi
