#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "svdim/error.hpp"
#include "svdim/expected.hpp"
#include "svdim/report.hpp"
#include "svdim/scanner.hpp"
#include "svdim/schemes.hpp"

namespace svdim::cli {

namespace {

struct GlobalOptions {
  std::uint32_t prime = kDefaultModulus;
  std::uint64_t seed = 1;
  int trials = 2;
  std::string backend = "modular";
  std::string format = "json";
  std::string output;
  unsigned jobs = 0;
};

struct GridOptions {
  std::string grid;
  int n_min = 1, n_max = 2;
  int m_min = 1, m_max = 2;
  int d_min = 3, d_max = 3;
  std::string s_policy;
  int s_extra = 1;
  std::vector<int> s_list;
  int q_max = 2;
  int t_max = 2;
};

SampleConfig sample_config(const GlobalOptions& g) {
  SampleConfig cfg;
  cfg.seed = g.seed;
  cfg.trials = g.trials;
  cfg.field.modulus = g.prime;
  cfg.field.backend = backend_from_string(g.backend);
  return cfg;
}

std::vector<SegreVeroneseParams> cells_of(const GridOptions& o) {
  if (!o.grid.empty()) return parse_grid(o.grid);
  return grid_cells(o.n_min, o.n_max, o.m_min, o.m_max, o.d_min, o.d_max);
}

ScanGrid scan_grid(const GridOptions& o, SPolicy default_policy) {
  ScanGrid grid;
  grid.cells = cells_of(o);
  grid.policy = o.s_policy.empty() ? default_policy : s_policy_from_string(o.s_policy);
  grid.extra = o.s_extra;
  grid.s_values = o.s_list;
  return grid;
}

void add_grid_flags(CLI::App* cmd, GridOptions& o, bool with_s, bool with_qt) {
  cmd->add_option("--grid", o.grid, "Explicit cells, e.g. \"(1,2,3);(2,3,2)\"");
  cmd->add_option("--n-min", o.n_min, "Smallest n")->capture_default_str();
  cmd->add_option("--n-max", o.n_max, "Largest n")->capture_default_str();
  cmd->add_option("--m-min", o.m_min, "Smallest m")->capture_default_str();
  cmd->add_option("--m-max", o.m_max, "Largest m")->capture_default_str();
  cmd->add_option("--d-min", o.d_min, "Smallest d")->capture_default_str();
  cmd->add_option("--d-max", o.d_max, "Largest d")->capture_default_str();
  if (with_s) {
    cmd->add_option("--s-policy", o.s_policy, "theorem-range | all-up-to | list");
    cmd->add_option("--s-extra", o.s_extra, "all-up-to covers s = 1..s2+K")->capture_default_str();
    cmd->add_option("--s-list", o.s_list, "Explicit s values for --s-policy list")->delimiter(',');
  }
  if (with_qt) {
    cmd->add_option("--q-max", o.q_max, "Largest q (s = (n+1)q)")->capture_default_str();
    cmd->add_option("--t-max", o.t_max, "Largest number t of W spaces")->capture_default_str();
  }
}

void emit(const GlobalOptions& g, const std::string& text, std::ostream& out) {
  if (g.output.empty() || g.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(g.output, std::ios::binary);
  if (!file) throw InvalidParameters("cannot open output file '" + g.output + "'");
  file << text;
}

void list_failures(const VerificationSummary& summary, std::ostream& err) {
  for (const auto& f : summary.failures()) {
    err << "FAILED " << f.check << " (n,m,d)=(" << f.n << "," << f.m << "," << f.d << ") s=" << f.s
        << " q=" << f.q << " t=" << f.t << " lhs=" << f.lhs << " rhs=" << f.rhs << " seed=" << f.seed
        << " trials=" << f.trials << " modulus=" << f.modulus << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secant dimensions of P^n x P^m embedded in bidegree (1,d)", "svdim"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--prime", g.prime, "Prime modulus (< 2^31, > d+1)")->capture_default_str();
  app.add_option("--seed", g.seed, "Base RNG seed")->capture_default_str();
  app.add_option("--trials", g.trials, "Independent point draws per cell")->capture_default_str();
  app.add_option("--backend", g.backend, "modular | exact")->capture_default_str();
  app.add_option("--format", g.format, "json | csv")->capture_default_str();
  app.add_option("--output", g.output, "Report file (default: standard output)");
  app.add_option("--jobs", g.jobs, "Worker threads for scan (0 = all cores)")->capture_default_str();

  std::array<int, 4> dim_args{};
  bool grassmann = false;
  auto* dim = app.add_subcommand("dim", "Secant dimension record for one (n, m, d, s)");
  dim->add_option("n", dim_args[0])->required();
  dim->add_option("m", dim_args[1])->required();
  dim->add_option("d", dim_args[2])->required();
  dim->add_option("s", dim_args[3])->required();
  dim->add_flag("--grassmann", grassmann, "Append the Grassmann-defectivity reading");

  std::array<int, 3> th_args{};
  auto* th = app.add_subcommand("thresholds", "Thresholds s1, s2 for (n, m, d)");
  th->add_option("n", th_args[0])->required();
  th->add_option("m", th_args[1])->required();
  th->add_option("d", th_args[2])->required();

  GridOptions scan_opts;
  scan_opts.d_min = 3;
  auto* scan_cmd = app.add_subcommand("scan", "Sweep a grid and report every cell (never fails on defects)");
  add_grid_flags(scan_cmd, scan_opts, true, false);
  scan_cmd->add_flag("--grassmann", grassmann, "Append the Grassmann-defectivity reading");

  GridOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Check the closed forms; exit 1 on any failure");
  verify->require_subcommand(1);
  auto* v_dict = verify->add_subcommand("dictionary", "Bidegree ideal vs. projective scheme ideal");
  auto* v_theorem = verify->add_subcommand("theorem", "Ideal dimension of dH1+H2+2P_i+W_j vs. closed form");
  auto* v_castel = verify->add_subcommand("castelnuovo", "Residual/trace machinery on specialized schemes");
  add_grid_flags(v_dict, verify_opts, true, false);
  add_grid_flags(v_theorem, verify_opts, false, true);
  add_grid_flags(v_castel, verify_opts, false, true);

  std::string scheme_file;
  int degree = 0;
  auto* ideal = app.add_subcommand("ideal", "Ideal dimension of a scheme given as JSON");
  ideal->add_option("--scheme", scheme_file, "SchemeSpec JSON file ('-' for stdin)")->required();
  ideal->add_option("--degree", degree, "Degree of the ideal piece")->required();

  std::vector<const char*> argv{"svdim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "svdim: " << e.what() << '\n';
    return kInvalidParameters;
  }

  try {
    const ReportFormat format = report_format_from_string(g.format);
    const SampleConfig cfg = sample_config(g);
    if (cfg.trials < 1) throw InvalidParameters("trials must be at least 1");

    if (*dim) {
      const SegreVeroneseParams params{dim_args[0], dim_args[1], dim_args[2]};
      const SecantRecord record = evaluate_cell(params, dim_args[3], cfg);
      emit(g, format_record(record, format, grassmann), out);
      return kOk;
    }
    if (*th) {
      const SegreVeroneseParams params{th_args[0], th_args[1], th_args[2]};
      emit(g, format_thresholds(params, thresholds(params), format), out);
      return kOk;
    }
    if (*scan_cmd) {
      const auto records = scan(scan_grid(scan_opts, SPolicy::theorem_range), cfg, g.jobs);
      emit(g, format_records(records, format, grassmann), out);
      return kOk;
    }
    if (*verify) {
      VerificationSummary summary;
      if (*v_dict) {
        summary = verify_dictionary_suite(scan_grid(verify_opts, SPolicy::all_up_to), cfg);
      } else if (*v_theorem) {
        summary = verify_theorem_suite(cells_of(verify_opts), verify_opts.q_max, verify_opts.t_max, cfg);
      } else {
        summary = verify_castelnuovo_suite(cells_of(verify_opts), verify_opts.q_max, verify_opts.t_max, cfg);
      }
      emit(g, format_summary(summary, format), out);
      list_failures(summary, err);
      return summary.ok() ? kOk : kVerificationFailed;
    }
    if (*ideal) {
      std::stringstream text;
      if (scheme_file == "-") {
        text << std::cin.rdbuf();
      } else {
        std::ifstream file(scheme_file);
        if (!file) throw InvalidParameters("cannot read scheme file '" + scheme_file + "'");
        text << file.rdbuf();
      }
      const SchemeSpec spec = scheme_from_json(text.str());
      cfg.field.validate(degree);
      const std::size_t dimension = scheme_ideal_dimension(spec, degree, cfg.field);
      emit(g, "{\"degree\": " + std::to_string(degree) + ", \"dimension\": " + std::to_string(dimension) + "}\n",
           out);
      return kOk;
    }
  } catch (const InvalidParameters& e) {
    err << "svdim: invalid parameters: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const std::exception& e) {
    err << "svdim: error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace svdim::cli
