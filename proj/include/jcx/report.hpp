#ifndef JCX_REPORT_HPP_
#define JCX_REPORT_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "jcx/asymptotics.hpp"
#include "jcx/measures.hpp"

namespace jcx {

/// 17 significant digits, or "inf"/"-inf"/"nan".
std::string format_double(double v);

/// JSON object with keys n, alpha, beta, variance, fisher, shannon_E,
/// shannon_I, shannon_S, spreading_length, w2, log_lq_norms, c_cr, c_fs,
/// c_lmc, errors. The infinity marker is the string "inf"; a missing w2 or
/// c_lmc is the string "unsupported".
std::string measure_to_json(const MeasureSet& m, int indent = 2);
MeasureSet measure_from_json(std::string_view text);
/// Header line plus one data row; errors are packed as key=value;key=value.
std::string measure_to_csv(const MeasureSet& m);

struct SweepRow {
  double sweep_value;
  double numeric;
  double predicted;
  double ratio;
  double error_estimate;
};

struct SweepReport {
  Regime regime = Regime::Degree;
  std::string measure;
  std::string fixed_params;
  std::vector<SweepRow> rows;
};

struct SweepRequest {
  /// The sweep variable (n or alpha) in `query` is ignored; the grid supplies it.
  PredictionQuery query;
  std::vector<double> grid;
  std::optional<double> tol;
  IntegrationOptions integration;
};

/// Parses "start:stop:factor" into start, start*factor, ... up to stop.
/// With `integer`, values are rounded and duplicates dropped.
std::vector<double> geometric_grid(std::string_view spec, bool integer);

/// Rows in ascending sweep order; ratio = numeric / predicted.
SweepReport run_sweep(const SweepRequest& request);
void write_sweep_csv(const SweepReport& report, std::ostream& out);

struct LmcCompareRow {
  double lambda;
  double beta;
  std::string mapping;
  double alpha;
  std::optional<double> jacobi;      ///< clmc_degree(alpha, beta), empty when unsupported
  std::optional<double> gegenbauer;  ///< clmc_degree(alpha, alpha)
};

/// Degree-regime LMC constants for alpha = lambda - 2 and alpha = lambda - 1/2.
/// Betas default to {lambda - 2, 2, 4, 8}; log-law rows are evaluated at degree n.
std::vector<LmcCompareRow> lmc_compare(const std::vector<double>& lambdas, const std::vector<double>& betas,
                                       int n);
void write_lmc_compare_csv(const std::vector<LmcCompareRow>& rows, std::ostream& out);

/// Gauss-Jacobi rule as CSV with header index,node,weight.
void write_rule_csv(const QuadRule& rule, std::ostream& out);

}  // namespace jcx

#endif  // JCX_REPORT_HPP_
