#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "svdim/error.hpp"
#include "svdim/report.hpp"
#include "svdim/scanner.hpp"

using namespace svdim;

namespace {

SampleConfig config(std::uint64_t seed, int trials = 2) {
  SampleConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  return cfg;
}

ScanGrid grid_of(std::vector<SegreVeroneseParams> cells, SPolicy policy = SPolicy::theorem_range) {
  ScanGrid grid;
  grid.cells = std::move(cells);
  grid.policy = policy;
  return grid;
}

}  // namespace

TEST_CASE("grid parsing") {
  const auto one = parse_grid("(1,2,3)");
  REQUIRE(one.size() == 1);
  CHECK(one[0] == SegreVeroneseParams{1, 2, 3});
  const auto two = parse_grid("(1,2,3);(2,3,2)");
  REQUIRE(two.size() == 2);
  CHECK(two[1] == SegreVeroneseParams{2, 3, 2});
  CHECK(parse_grid(" ( 1 , 1 , 3 ) (2,1,3)").size() == 2);
  CHECK_THROWS_AS(parse_grid(""), InvalidParameters);
  CHECK_THROWS_AS(parse_grid("(1,2)"), InvalidParameters);
  CHECK_THROWS_AS(parse_grid("(1,2,x)"), InvalidParameters);
  CHECK_THROWS_AS(parse_grid("(0,2,3)"), InvalidParameters);
  CHECK(grid_cells(1, 2, 1, 3, 3, 4).size() == 12);
  CHECK_THROWS_AS(grid_cells(2, 1, 1, 1, 3, 3), InvalidParameters);
}

TEST_CASE("s policies") {
  ScanGrid grid = grid_of({{1, 2, 3}});
  CHECK(grid.s_values_for({1, 2, 3}) == std::vector<int>{1, 2, 3, 4, 5, 6});
  grid.policy = SPolicy::all_up_to;
  grid.extra = 2;
  CHECK(grid.s_values_for({1, 2, 3}).back() == 8);
  grid.policy = SPolicy::explicit_list;
  grid.s_values = {3, 1};
  CHECK(grid.s_values_for({1, 2, 3}) == std::vector<int>{1, 3});
  grid.s_values = {0};
  CHECK_THROWS_AS(grid.validate(), InvalidParameters);
  CHECK(s_policy_from_string("theorem-range") == SPolicy::theorem_range);
  CHECK(s_policy_from_string("list") == SPolicy::explicit_list);
  CHECK_THROWS_AS(s_policy_from_string("some"), InvalidParameters);
}

TEST_CASE("record for a certified cell") {
  const auto r = evaluate_cell({1, 2, 3}, 4, config(1));
  CHECK(r.N == 19);
  CHECK(r.expected == 15);
  CHECK(r.computed == 15);
  CHECK(r.defect == 0);
  CHECK(r.s1 == 4);
  CHECK(r.s2 == 6);
  CHECK(r.in_theorem_range);
  CHECK(r.status == CertificationStatus::certified_nondefective);
  CHECK(r.trials == 2);
  CHECK(r.modulus == kDefaultModulus);

  // The single uncovered value; the closed forms say nothing, the oracle decides.
  const auto between = evaluate_cell({1, 2, 3}, 5, config(1));
  CHECK_FALSE(between.in_theorem_range);
  const auto ref = static_cast<std::int64_t>(oracle::segre_veronese_span_rank(1, 2, 3, 5, 1234)) - 1;
  CHECK(between.computed == ref);
  CHECK(between.defect == between.expected - ref);
  CHECK(between.status == (between.defect == 0 ? CertificationStatus::out_of_theorem_range_certified
                                               : CertificationStatus::out_of_theorem_range_candidate));
}

TEST_CASE("known defective cell survives escalation") {
  const auto r = evaluate_cell({2, 3, 2}, 5, config(1));
  CHECK(r.expected == 29);
  CHECK(r.computed == 28);
  CHECK(r.defect == 1);
  CHECK(r.trials == 4);
  CHECK(r.status == CertificationStatus::out_of_theorem_range_candidate);
}

TEST_CASE("property: d >= 3 inside the theorem range is never defective") {
  auto grid = grid_of(grid_cells(1, 2, 1, 3, 3, 4));
  for (const auto& r : scan(grid, config(6), 1)) {
    if (r.in_theorem_range) CHECK(r.defect == 0);
    CHECK(r.computed <= r.expected);
  }
}

TEST_CASE("scan output is reproducible and independent of job count") {
  auto grid = grid_of(grid_cells(1, 2, 1, 2, 2, 3), SPolicy::all_up_to);
  const auto a = scan(grid, config(42), 1);
  const auto b = scan(grid, config(42), 1);
  const auto c = scan(grid, config(42), 4);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(format_records(a, ReportFormat::json) == format_records(c, ReportFormat::json));
  CHECK(format_records(a, ReportFormat::csv) == format_records(b, ReportFormat::csv));
  CHECK(std::is_sorted(a.begin(), a.end(), [](const SecantRecord& x, const SecantRecord& y) {
    return std::tie(x.n, x.m, x.d, x.s) < std::tie(y.n, y.m, y.d, y.s);
  }));

  // A cell's record does not depend on the rest of the grid.
  auto lone = grid_of({{2, 2, 3}}, SPolicy::all_up_to);
  const auto alone = scan(lone, config(42), 1);
  for (const auto& r : alone) CHECK(std::find(a.begin(), a.end(), r) != a.end());
}

TEST_CASE("CSV report shape") {
  const auto records = scan(grid_of({{1, 1, 3}}), config(1), 1);
  const auto csv = format_records(records, ReportFormat::csv);
  CHECK(csv.rfind(std::string(kSecantCsvHeader) + "\n", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == records.size() + 1);
}

TEST_CASE("Grassmann verdicts") {
  const auto certified = evaluate_cell({1, 2, 3}, 4, config(1));
  const auto text = grassmann_verdict(certified);
  CHECK(text.find("not") != std::string::npos);
  CHECK(text.find("(1,3)") != std::string::npos);
  const auto candidate = evaluate_cell({2, 3, 2}, 5, config(1));
  CHECK(grassmann_verdict(candidate).find("candidate") != std::string::npos);
  auto outside = certified;
  outside.status = CertificationStatus::out_of_theorem_range_certified;
  CHECK(grassmann_verdict(outside).find("outside") != std::string::npos);
}

TEST_CASE("verification suites pass on small grids") {
  const auto theorem = verify_theorem_suite({{1, 2, 3}}, 2, 2, config(1));
  CHECK(theorem.ok());
  CHECK(theorem.cells_checked == 6);  // one per (q, t)
  CHECK(theorem.checks.size() > 6);
  const auto clamped = verify_theorem_suite({{1, 2, 3}}, 3, 0, config(1));
  CHECK(clamped.ok());
  auto grid = grid_of(grid_cells(1, 2, 1, 2, 3, 4), SPolicy::all_up_to);
  CHECK(verify_dictionary_suite(grid, config(1)).ok());
  CHECK(verify_castelnuovo_suite({{2, 1, 3}}, 1, 1, config(1)).ok());
  CHECK_THROWS_AS(verify_theorem_suite({{1, 2, 2}}, 1, 0, config(1)), InvalidParameters);
}
