#include "svdim/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "svdim/error.hpp"
#include "svdim/schemes.hpp"

namespace svdim {

namespace {

constexpr std::uint64_t kProofStream = 0x7e0;

std::string cell_name(const SegreVeroneseParams& p) {
  return "(" + std::to_string(p.n) + "," + std::to_string(p.m) + "," + std::to_string(p.d) + ")";
}

std::vector<SegreVeroneseParams> sorted_unique(std::vector<SegreVeroneseParams> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads. The first exception
// (by index) is rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

CheckRecord make_check(std::string name, const SegreVeroneseParams& p, int s, int q, int t,
                       std::int64_t lhs, std::int64_t rhs, bool passed, const SampleConfig& cfg) {
  CheckRecord c;
  c.check = std::move(name);
  c.n = p.n;
  c.m = p.m;
  c.d = p.d;
  c.s = s;
  c.q = q;
  c.t = t;
  c.lhs = lhs;
  c.rhs = rhs;
  c.passed = passed;
  c.seed = cfg.seed;
  c.trials = cfg.trials;
  c.modulus = cfg.field.modulus;
  return c;
}

void require_theorem_range(const std::vector<SegreVeroneseParams>& cells, int q_max, int t_max) {
  if (cells.empty()) throw InvalidParameters("grid is empty");
  for (const auto& p : cells) {
    p.validate();
    if (p.d < 3) throw InvalidParameters("theorem verification needs d >= 3, got " + cell_name(p));
  }
  if (q_max < 1) throw InvalidParameters("q-max must be at least 1");
  if (t_max < 0) throw InvalidParameters("t-max must be non-negative");
}

int max_degree(const std::vector<SegreVeroneseParams>& cells) {
  int d = 1;
  for (const auto& p : cells) d = std::max(d, p.d);
  return d;
}

struct ProofDims {
  std::size_t generic = 0;      // dim (I_X)_{d+1}
  std::size_t specialized = 0;  // dim (I_X~)_{d+1}
  std::size_t with_spans = 0;   // dim (I_{X~ + V_1 + ... + V_s})_{d+1}
  std::size_t residual = 0;     // dim (I_Res)_d
  std::size_t trace = 0;        // dim (I_Tr)_{d+1}
  std::size_t image = 0;        // dim (I_Y)_d on P^m
  std::string generic_json;
  std::string specialized_json;
};

ProofDims proof_dims(const SegreVeroneseParams& p, int q, int t, const SampleConfig& cfg) {
  const SchemeFrame frame{p.n, p.m, p.d};
  ProofDims best;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    PointSampler sampler(derive_seed(cfg.seed, {kProofStream, static_cast<std::uint64_t>(p.n),
                                                static_cast<std::uint64_t>(p.m),
                                                static_cast<std::uint64_t>(p.d),
                                                static_cast<std::uint64_t>(q),
                                                static_cast<std::uint64_t>(t),
                                                static_cast<std::uint64_t>(trial)}),
                         cfg.field.modulus);
    const SchemeSpec generic = theorem_scheme(frame, q, t, sampler, false);
    const SchemeSpec specialized = theorem_scheme(frame, q, t, sampler, true);
    const SchemeSpec spanned = add_v_spans(specialized);
    const ResidualTracePair rt = residual_trace(spanned, p.d + 1);
    const ProjectionResult proj = project_from_H1(rt.residual, rt.residual_degree, cfg.field);

    ProofDims dims;
    dims.generic = scheme_ideal_dimension(generic, p.d + 1, cfg.field);
    dims.specialized = scheme_ideal_dimension(specialized, p.d + 1, cfg.field);
    dims.with_spans = scheme_ideal_dimension(spanned, p.d + 1, cfg.field);
    dims.residual = proj.residual_dimension;
    dims.image = proj.image_dimension;
    dims.trace = scheme_ideal_dimension(rt.trace, rt.trace_degree, cfg.field);
    if (trial == 0) {
      dims.generic_json = to_json(generic);
      dims.specialized_json = to_json(specialized);
      best = std::move(dims);
      continue;
    }
    best.generic = std::min(best.generic, dims.generic);
    best.specialized = std::min(best.specialized, dims.specialized);
    best.with_spans = std::min(best.with_spans, dims.with_spans);
    best.residual = std::min(best.residual, dims.residual);
    best.image = std::min(best.image, dims.image);
    best.trace = std::min(best.trace, dims.trace);
  }
  return best;
}

void append_proof_checks(std::vector<CheckRecord>& out, const SegreVeroneseParams& p, int q, int t,
                         const ProofDims& dims, const SampleConfig& cfg) {
  const int s = (p.n + 1) * q;
  auto add = [&](std::string name, std::int64_t lhs, std::int64_t rhs, bool passed,
                 const std::string& scheme) {
    CheckRecord c = make_check(std::move(name), p, s, q, t, lhs, rhs, passed, cfg);
    if (!passed) c.scheme_json = scheme;
    out.push_back(std::move(c));
  };
  const auto gen = static_cast<std::int64_t>(dims.generic);
  const auto spec = static_cast<std::int64_t>(dims.specialized);
  const auto spans = static_cast<std::int64_t>(dims.with_spans);
  const auto res = static_cast<std::int64_t>(dims.residual);
  const auto tr = static_cast<std::int64_t>(dims.trace);
  const auto img = static_cast<std::int64_t>(dims.image);
  const std::int64_t binom = static_cast<std::int64_t>(binomial(p.m + p.d, p.d));
  const std::int64_t trace_expected =
      std::max<std::int64_t>(p.n * binom - static_cast<std::int64_t>(p.n) * q * (p.n + p.m) -
                                 static_cast<std::int64_t>(t + q) * p.n,
                             0);

  add("semicontinuity", spec, gen, spec >= gen, dims.specialized_json);
  add("base-locus", spec, spans, spec == spans, dims.specialized_json);
  add("castelnuovo", spans, res + tr, spans <= res + tr, dims.specialized_json);
  add("projection", res, img, res == img, dims.specialized_json);
  add("residual-closed-form", img, ah_expected(p.m, p.d, q, t + p.n * q),
      img == ah_expected(p.m, p.d, q, t + p.n * q), dims.specialized_json);
  add("trace-closed-form", tr, trace_expected, tr == trace_expected, dims.specialized_json);
  add("specialized-expected", spec, theorem_t1_expected(p, q, t), spec == theorem_t1_expected(p, q, t),
      dims.specialized_json);
}

}  // namespace

std::string_view to_string(CertificationStatus status) {
  switch (status) {
    case CertificationStatus::certified_nondefective:
      return "certified-nondefective";
    case CertificationStatus::defect_candidate:
      return "defect-candidate";
    case CertificationStatus::out_of_theorem_range_certified:
      return "out-of-theorem-range-certified";
    case CertificationStatus::out_of_theorem_range_candidate:
      return "out-of-theorem-range-candidate";
  }
  return "defect-candidate";
}

SPolicy s_policy_from_string(std::string_view name) {
  if (name == "theorem-range") return SPolicy::theorem_range;
  if (name == "all-up-to") return SPolicy::all_up_to;
  if (name == "list" || name == "explicit") return SPolicy::explicit_list;
  throw InvalidParameters("unknown s policy '" + std::string(name) + "'");
}

void ScanGrid::validate() const {
  if (cells.empty()) throw InvalidParameters("grid is empty");
  for (const auto& p : cells) p.validate();
  if (policy == SPolicy::all_up_to && extra < 0) throw InvalidParameters("s extra must be non-negative");
  if (policy == SPolicy::explicit_list) {
    if (s_values.empty()) throw InvalidParameters("explicit s list is empty");
    for (int s : s_values)
      if (s < 1) throw InvalidParameters("s values must be at least 1");
  }
}

std::vector<int> ScanGrid::s_values_for(const SegreVeroneseParams& params) const {
  if (policy == SPolicy::explicit_list) {
    std::set<int> unique(s_values.begin(), s_values.end());
    return {unique.begin(), unique.end()};
  }
  const Thresholds th = thresholds(params);
  const int last = policy == SPolicy::theorem_range ? th.s2 : th.s2 + extra;
  std::vector<int> out;
  for (int s = 1; s <= last; ++s) out.push_back(s);
  return out;
}

std::vector<SegreVeroneseParams> grid_cells(int n_min, int n_max, int m_min, int m_max, int d_min,
                                            int d_max) {
  if (n_min > n_max || m_min > m_max || d_min > d_max) throw InvalidParameters("empty parameter range");
  std::vector<SegreVeroneseParams> out;
  for (int n = n_min; n <= n_max; ++n)
    for (int m = m_min; m <= m_max; ++m)
      for (int d = d_min; d <= d_max; ++d) {
        SegreVeroneseParams p{n, m, d};
        p.validate();
        out.push_back(p);
      }
  return out;
}

std::vector<SegreVeroneseParams> parse_grid(std::string_view text) {
  std::vector<SegreVeroneseParams> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ';' || ch == ',') {
      ++pos;
      continue;
    }
    if (ch != '(') throw InvalidParameters("grid must be a list of (n,m,d) triples");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw InvalidParameters("unterminated triple in grid");
    std::string inner(text.substr(pos + 1, close - pos - 1));
    std::replace(inner.begin(), inner.end(), ',', ' ');
    std::istringstream in(inner);
    SegreVeroneseParams p;
    std::string rest;
    if (!(in >> p.n >> p.m >> p.d) || (in >> rest)) {
      throw InvalidParameters("bad grid triple '(" + std::string(text.substr(pos + 1, close - pos - 1)) + ")'");
    }
    p.validate();
    out.push_back(p);
    pos = close + 1;
  }
  if (out.empty()) throw InvalidParameters("grid is empty");
  return out;
}

SecantRecord evaluate_cell(const SegreVeroneseParams& params, int s, const SampleConfig& cfg,
                           bool escalate) {
  params.validate();
  cfg.validate(params.d);
  if (s < 1) throw InvalidParameters("s must be at least 1");

  const Thresholds th = thresholds(params);
  const std::int64_t expected = expected_secant_dim(params, s);
  SampleConfig used = cfg;
  SecantSample sample = best_secant_sample(params, s, used);
  std::int64_t computed = static_cast<std::int64_t>(sample.rank) - 1;

  if (escalate && computed < expected) {
    used.trials = cfg.trials * 2;
    sample = best_secant_sample(params, s, used);
    computed = static_cast<std::int64_t>(sample.rank) - 1;
    if (computed < expected && cfg.field.backend == Backend::modular) {
      const FieldConfig exact{cfg.field.modulus, Backend::exact_rational};
      computed = std::max(computed, static_cast<std::int64_t>(stacked_rank(params, sample.points, exact)) - 1);
    }
  }

  const DefectRecord rec = defect(params, s, computed);
  SecantRecord out;
  out.n = params.n;
  out.m = params.m;
  out.d = params.d;
  out.s = s;
  out.N = params.ambient_dimension();
  out.expected = rec.expected;
  out.computed = rec.computed;
  out.defect = rec.defect;
  out.s1 = th.s1;
  out.s2 = th.s2;
  out.in_theorem_range = params.d >= 3 && (s <= th.s1 || s >= th.s2);
  if (out.in_theorem_range) {
    out.status = rec.defect == 0 ? CertificationStatus::certified_nondefective
                                 : CertificationStatus::defect_candidate;
  } else {
    out.status = rec.defect == 0 ? CertificationStatus::out_of_theorem_range_certified
                                 : CertificationStatus::out_of_theorem_range_candidate;
  }
  out.seed = cfg.seed;
  out.trials = used.trials;
  out.modulus = cfg.field.modulus;
  return out;
}

std::vector<SecantRecord> scan(const ScanGrid& grid, const SampleConfig& cfg, unsigned jobs) {
  grid.validate();
  struct Task {
    SegreVeroneseParams params;
    int s;
  };
  std::vector<Task> tasks;
  for (const auto& p : sorted_unique(grid.cells)) {
    cfg.validate(p.d);
    for (int s : grid.s_values_for(p)) tasks.push_back({p, s});
  }
  std::vector<SecantRecord> records(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    const Task& task = tasks[i];
    try {
      records[i] = evaluate_cell(task.params, task.s, cfg);
    } catch (const InvalidParameters&) {
      throw;
    } catch (const std::exception& e) {
      throw KernelError("scan aborted at cell " + cell_name(task.params) + " s=" + std::to_string(task.s) +
                        ": " + e.what());
    }
  });
  return records;
}

std::string grassmann_verdict(const SecantRecord& r) {
  const std::string subject = "the " + std::to_string(r.d) + "-uple Veronese embedding of P^" +
                              std::to_string(r.m);
  const std::string indices = "(" + std::to_string(r.n) + "," + std::to_string(r.s - 1) + ")";
  switch (r.status) {
    case CertificationStatus::certified_nondefective:
      return subject + " is not " + indices + "-Grassmann defective";
    case CertificationStatus::out_of_theorem_range_certified:
      return subject + " is not " + indices +
             "-Grassmann defective (certified by computation outside the closed-form range)";
    case CertificationStatus::defect_candidate:
    case CertificationStatus::out_of_theorem_range_candidate:
      break;
  }
  return "Grassmann-defectivity candidate: " + subject + " may be " + indices + "-Grassmann defective";
}

std::vector<CheckRecord> VerificationSummary::failures() const {
  std::vector<CheckRecord> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c);
  return out;
}

bool VerificationSummary::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

void VerificationSummary::merge(VerificationSummary other) {
  cells_checked += other.cells_checked;
  checks.insert(checks.end(), std::make_move_iterator(other.checks.begin()),
                std::make_move_iterator(other.checks.end()));
}

VerificationSummary verify_castelnuovo_suite(const std::vector<SegreVeroneseParams>& cells, int q_max,
                                             int t_max, const SampleConfig& cfg) {
  require_theorem_range(cells, q_max, t_max);
  cfg.validate(max_degree(cells) + 1);
  const auto sorted = sorted_unique(cells);
  VerificationSummary out;
  for (const auto& p : sorted)
    for (int q = 1; q <= q_max; ++q)
      for (int t = 0; t <= t_max; ++t) {
        append_proof_checks(out.checks, p, q, t, proof_dims(p, q, t, cfg), cfg);
        ++out.cells_checked;
      }
  return out;
}

VerificationSummary verify_theorem_suite(const std::vector<SegreVeroneseParams>& cells, int q_max,
                                         int t_max, const SampleConfig& cfg) {
  require_theorem_range(cells, q_max, t_max);
  cfg.validate(max_degree(cells) + 1);
  const auto sorted = sorted_unique(cells);
  VerificationSummary out;
  for (const auto& p : sorted) {
    for (int q = 1; q <= q_max; ++q) {
      const int s = (p.n + 1) * q;
      for (int t = 0; t <= t_max; ++t) {
        const ProofDims dims = proof_dims(p, q, t, cfg);
        const auto generic = static_cast<std::int64_t>(dims.generic);
        const std::int64_t expected = theorem_t1_expected(p, q, t);
        CheckRecord c = make_check("theorem", p, s, q, t, generic, expected, generic == expected, cfg);
        if (!c.passed) c.scheme_json = dims.generic_json;
        out.checks.push_back(std::move(c));
        if (t == 0) {
          const DictionaryCheck dict = verify_dictionary(p, s, cfg);
          out.checks.push_back(make_check("dictionary", p, s, q, t, static_cast<std::int64_t>(dict.lhs),
                                          static_cast<std::int64_t>(dict.rhs), dict.equal, cfg));
        }
        append_proof_checks(out.checks, p, q, t, dims, cfg);
        ++out.cells_checked;
      }
    }
  }
  return out;
}

VerificationSummary verify_dictionary_suite(const ScanGrid& grid, const SampleConfig& cfg) {
  grid.validate();
  cfg.validate(max_degree(grid.cells) + 1);
  VerificationSummary out;
  for (const auto& p : sorted_unique(grid.cells)) {
    for (int s : grid.s_values_for(p)) {
      const DictionaryCheck dict = verify_dictionary(p, s, cfg);
      out.checks.push_back(make_check("dictionary", p, s, 0, 0, static_cast<std::int64_t>(dict.lhs),
                                      static_cast<std::int64_t>(dict.rhs), dict.equal, cfg));
      ++out.cells_checked;
    }
  }
  return out;
}

}  // namespace svdim
