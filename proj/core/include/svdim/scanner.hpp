#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "svdim/expected.hpp"
#include "svdim/terracini.hpp"

namespace svdim {

enum class CertificationStatus {
  certified_nondefective,
  defect_candidate,
  out_of_theorem_range_certified,
  out_of_theorem_range_candidate,
};

std::string_view to_string(CertificationStatus status);

/// One (n, m, d, s) cell of a sweep. `computed` is a lower bound for the
/// characteristic-0 dimension, so defect = 0 certifies the cell while a
/// positive defect only marks a candidate.
struct SecantRecord {
  int n = 0;
  int m = 0;
  int d = 0;
  int s = 0;
  std::int64_t N = 0;
  std::int64_t expected = 0;
  std::int64_t computed = 0;
  std::int64_t defect = 0;
  int s1 = 0;
  int s2 = 0;
  bool in_theorem_range = false;
  CertificationStatus status = CertificationStatus::defect_candidate;
  std::uint64_t seed = 0;
  int trials = 0;
  std::uint32_t modulus = 0;

  friend bool operator==(const SecantRecord&, const SecantRecord&) = default;
};

enum class SPolicy { theorem_range, all_up_to, explicit_list };

SPolicy s_policy_from_string(std::string_view name);

struct ScanGrid {
  std::vector<SegreVeroneseParams> cells;
  SPolicy policy = SPolicy::theorem_range;
  int extra = 1;              ///< all_up_to covers 1..s2+extra
  std::vector<int> s_values;  ///< explicit_list

  void validate() const;
  /// theorem_range: 1..s2 (every s <= s1, the uncovered values, and s2).
  std::vector<int> s_values_for(const SegreVeroneseParams& params) const;
};

/// Every (n, m, d) in the inclusive ranges.
std::vector<SegreVeroneseParams> grid_cells(int n_min, int n_max, int m_min, int m_max, int d_min,
                                            int d_max);

/// Parses "(1,2,3)" or "(1,2,3);(2,3,2)" (separators ';', ',' or spaces
/// between triples).
std::vector<SegreVeroneseParams> parse_grid(std::string_view text);

/// Computes one record. A candidate defect is escalated once by doubling
/// the trials and then by an exact rank over Q on the best trial's points.
SecantRecord evaluate_cell(const SegreVeroneseParams& params, int s, const SampleConfig& cfg,
                           bool escalate = true);

/// One record per cell, sorted by (n, m, d, s). jobs = 0 uses the hardware
/// concurrency; the result does not depend on it.
std::vector<SecantRecord> scan(const ScanGrid& grid, const SampleConfig& cfg, unsigned jobs = 0);

/// Reads a record as a statement about the (n, s-1)-Grassmann secant variety
/// of the d-uple Veronese embedding of P^m.
std::string grassmann_verdict(const SecantRecord& record);

/// One comparison performed by a verification suite.
struct CheckRecord {
  std::string check;
  int n = 0;
  int m = 0;
  int d = 0;
  int s = 0;
  int q = 0;
  int t = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool passed = false;
  std::uint64_t seed = 0;
  int trials = 0;
  std::uint32_t modulus = 0;
  std::string scheme_json;  ///< offending configuration, set on failure only
};

struct VerificationSummary {
  std::size_t cells_checked = 0;
  std::vector<CheckRecord> checks;

  std::vector<CheckRecord> failures() const;
  bool ok() const;
  void merge(VerificationSummary other);
};

/// Theorem check dim(I_X)_{d+1} == max{...; 0} for q in 1..q_max, t in 0..t_max,
/// plus the dictionary at t = 0 and every proof-machinery check. d >= 3.
VerificationSummary verify_theorem_suite(const std::vector<SegreVeroneseParams>& cells, int q_max,
                                         int t_max, const SampleConfig& cfg);

/// Dictionary equality for every s produced by the grid's policy.
VerificationSummary verify_dictionary_suite(const ScanGrid& grid, const SampleConfig& cfg);

/// Proof machinery on the specialized scheme: semicontinuity, base-locus
/// invariance, Castelnuovo inequality, projection equality, and the closed
/// forms for the residual and trace sides. d >= 3.
VerificationSummary verify_castelnuovo_suite(const std::vector<SegreVeroneseParams>& cells,
                                             int q_max, int t_max, const SampleConfig& cfg);

}  // namespace svdim
