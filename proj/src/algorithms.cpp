#include "hadamard/algorithms.hpp"

#include <cmath>
#include <ostream>

#include "hadamard/geometry.hpp"
#include "hadamard/numeric.hpp"

namespace hadamard {

LambdaRule LambdaRule::constant(double c) {
  if (!(c > 0.0)) throw DomainError("lambda must be positive");
  return LambdaRule{Kind::Constant, c, {}};
}

LambdaRule LambdaRule::harmonic(double c) {
  if (!(c > 0.0)) throw DomainError("lambda must be positive");
  return LambdaRule{Kind::Harmonic, c, {}};
}

LambdaRule LambdaRule::linear(double c) {
  if (!(c > 0.0)) throw DomainError("lambda must be positive");
  return LambdaRule{Kind::Linear, c, {}};
}

LambdaRule LambdaRule::explicit_values(std::vector<double> values) {
  if (values.empty()) throw DomainError("explicit lambda list must be nonempty");
  for (double v : values)
    if (!(v > 0.0)) throw DomainError("lambda must be positive");
  return LambdaRule{Kind::Explicit, 0.0, std::move(values)};
}

double LambdaRule::at(long n) const {
  switch (kind) {
    case Kind::Constant:
      return c;
    case Kind::Harmonic:
      return c / static_cast<double>(n);
    case Kind::Linear:
      return c * static_cast<double>(n);
    case Kind::Explicit:
      return values[std::min<size_t>(n - 1, values.size() - 1)];
  }
  return c;
}

AlphaRule AlphaRule::zero() { return AlphaRule{Kind::Zero, 0.0, {}}; }

AlphaRule AlphaRule::constant(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("alpha must lie in [0, 1]");
  return AlphaRule{Kind::Constant, a, {}};
}

AlphaRule AlphaRule::harmonic_shifted() { return AlphaRule{Kind::HarmonicShifted, 0.0, {}}; }

AlphaRule AlphaRule::explicit_values(std::vector<double> values) {
  if (values.empty()) throw DomainError("explicit alpha list must be nonempty");
  for (double v : values)
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError("alpha must lie in [0, 1]");
  return AlphaRule{Kind::Explicit, 0.0, std::move(values)};
}

double AlphaRule::at(long n) const {
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::Constant:
      return a;
    case Kind::HarmonicShifted:
      return 1.0 / static_cast<double>(n + 1);
    case Kind::Explicit:
      return values[std::min<size_t>(n - 1, values.size() - 1)];
  }
  return 0.0;
}

std::string algorithm_name(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::PPA:
      return "ppa";
    case AlgorithmKind::Mann:
      return "mann";
    case AlgorithmKind::Halpern:
      return "halpern";
  }
  return "?";
}

std::string stop_reason_name(StopReason reason) {
  switch (reason) {
    case StopReason::ResidualTol:
      return "residual_tol";
    case StopReason::SmallStep:
      return "small_step";
    case StopReason::MaxIter:
      return "max_iter";
    case StopReason::SolverFailure:
      return "solver_failure";
  }
  return "?";
}

std::string verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Satisfied:
      return "satisfied";
    case Verdict::Violated:
      return "violated";
    case Verdict::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

std::string regime_name(Regime regime) {
  switch (regime) {
    case Regime::PpaBounded:
      return "ppa_bounded";
    case Regime::PpaConvergent:
      return "ppa_convergent";
    case Regime::Mann:
      return "mann";
    case Regime::HalpernGrowing:
      return "halpern_growing_lambda";
    case Regime::HalpernBoundedBelow:
      return "halpern_bounded_lambda";
  }
  return "?";
}

namespace {

IterationTrace run_iteration(AlgorithmKind kind, const Space& s, const VectorField& field,
                             const ScheduleSpec& schedule, const RunConfig& config) {
  if (config.max_iter < 1) throw DomainError("max_iter must be at least 1");
  if (kind == AlgorithmKind::Halpern && !config.anchor)
    throw DomainError("halpern iteration requires an anchor point");

  IterationTrace trace;
  trace.algorithm = kind;
  Point x = config.start;
  trace.final_x = x;
  for (long n = 1; n <= config.max_iter; ++n) {
    const double lambda = schedule.lambda.at(n);
    const double alpha = schedule.alpha.at(n);
    if (!(lambda > 0.0)) throw DomainError("schedule produced a nonpositive lambda");
    if (alpha < 0.0 || alpha > 1.0) throw DomainError("schedule produced alpha outside [0, 1]");

    Point y;
    try {
      y = resolvent(s, field, lambda, x, &config.solver);
    } catch (const SolverError& err) {
      trace.stop = StopReason::SolverFailure;
      trace.error = err.what();
      trace.final_x = x;
      return trace;
    }

    Point next;
    switch (kind) {
      case AlgorithmKind::PPA:
        next = y;
        break;
      case AlgorithmKind::Mann:
        next = convex_combination(s, x, y, 1.0 - alpha);
        break;
      case AlgorithmKind::Halpern:
        next = convex_combination(s, *config.anchor, y, 1.0 - alpha);
        break;
    }

    TraceStep step;
    step.n = n;
    step.x = x;
    step.y = y;
    step.lambda = lambda;
    step.alpha = alpha;
    step.residual = s.distance(y, x) / lambda;
    step.step = s.distance(next, x);
    if (config.reference) step.dist_ref = s.distance(x, *config.reference);
    trace.steps.push_back(std::move(step));

    x = next;
    if (trace.steps.back().residual < config.residual_tol) {
      trace.stop = StopReason::ResidualTol;
      trace.final_x = x;
      return trace;
    }
    if (trace.steps.back().step < s.eps_geom()) {
      trace.stop = StopReason::SmallStep;
      trace.final_x = x;
      return trace;
    }
  }
  trace.stop = StopReason::MaxIter;
  trace.final_x = x;
  return trace;
}

}  // namespace

IterationTrace run_ppa(const Space& s, const VectorField& field, const ScheduleSpec& schedule,
                       const RunConfig& config) {
  if (schedule.alpha.kind != AlphaRule::Kind::Zero)
    throw DomainError("ppa requires the zero alpha rule");
  return run_iteration(AlgorithmKind::PPA, s, field, schedule, config);
}

IterationTrace run_mann(const Space& s, const VectorField& field, const ScheduleSpec& schedule,
                        const RunConfig& config) {
  return run_iteration(AlgorithmKind::Mann, s, field, schedule, config);
}

IterationTrace run_halpern(const Space& s, const VectorField& field,
                           const ScheduleSpec& schedule, const RunConfig& config) {
  const long probe = std::min<long>(std::max<long>(config.max_iter, 1000), 100000);
  const ScheduleReport growing = check_schedule(Regime::HalpernGrowing, schedule, probe);
  const ScheduleReport bounded = check_schedule(Regime::HalpernBoundedBelow, schedule, probe);
  IterationTrace trace;
  if (growing.admissible()) {
    trace = run_iteration(AlgorithmKind::Halpern, s, field, schedule, config);
    trace.regime = regime_name(Regime::HalpernGrowing);
  } else if (bounded.admissible()) {
    trace = run_iteration(AlgorithmKind::Halpern, s, field, schedule, config);
    trace.regime = regime_name(Regime::HalpernBoundedBelow);
  } else if (config.allow_inadmissible) {
    trace = run_iteration(AlgorithmKind::Halpern, s, field, schedule, config);
    trace.regime = "overridden";
  } else {
    throw ConfigError("algorithm.schedule",
                      "halpern schedule satisfies neither theorem regime");
  }
  return trace;
}

void write_trace_csv(const IterationTrace& trace, std::ostream& out) {
  out << "n,lambda,alpha,residual,step,dist_ref\n";
  for (const auto& s : trace.steps) {
    out << s.n << ',' << format_double(s.lambda) << ',' << format_double(s.alpha) << ','
        << format_double(s.residual) << ',' << format_double(s.step) << ',';
    if (s.dist_ref) out << format_double(*s.dist_ref);
    out << '\n';
  }
}

Verdict classify_series(const std::function<double(long)>& term, long horizon,
                        double* observed_ratio) {
  if (horizon < 8) return Verdict::Indeterminate;
  // Dyadic block sums B_k = sum over (2^{k-1}, 2^k]; their growth ratio
  // separates divergent tails (ratio near or above 1) from convergent ones.
  std::vector<double> blocks;
  long block_end = 2;
  double current = term(1) + term(2);
  blocks.push_back(current);
  double total = current;
  while (block_end * 2 <= horizon) {
    double sum = 0.0;
    for (long n = block_end + 1; n <= block_end * 2; ++n) sum += term(n);
    blocks.push_back(sum);
    total += sum;
    block_end *= 2;
  }
  const int k = static_cast<int>(blocks.size());
  if (k < 3) return Verdict::Indeterminate;
  if (blocks[k - 1] < 1e-12 * std::max(1.0, total)) {
    if (observed_ratio) *observed_ratio = 0.0;
    return Verdict::Violated;  // partial sums have plateaued
  }
  double ratio = 1.0;
  int used = 0;
  for (int i = std::max(1, k - 3); i < k; ++i) {
    if (blocks[i - 1] <= 0.0) continue;
    ratio *= blocks[i] / blocks[i - 1];
    ++used;
  }
  if (used == 0) return Verdict::Indeterminate;
  ratio = std::pow(ratio, 1.0 / used);
  if (observed_ratio) *observed_ratio = ratio;
  if (ratio >= 0.95) return Verdict::Satisfied;  // divergent growth trend
  if (ratio <= 0.8) return Verdict::Violated;    // geometric tail decay
  return Verdict::Indeterminate;
}

namespace {

Verdict limit_zero_verdict(const std::function<double(long)>& value, long horizon,
                           double* observed) {
  const double tail = value(horizon);
  const double mid = value(std::max<long>(1, horizon / 2));
  if (observed) *observed = tail;
  if (tail < 0.05 && tail <= mid + 1e-15) return Verdict::Satisfied;
  if (tail > 0.05 && tail >= mid - 1e-15) return Verdict::Violated;
  return Verdict::Indeterminate;
}

Verdict limit_infinity_verdict(const std::function<double(long)>& value, long horizon,
                               double* observed) {
  const double tail = value(horizon);
  const double mid = value(std::max<long>(1, horizon / 2));
  if (observed) *observed = tail;
  if (tail >= 1.5 * mid && tail > 10.0) return Verdict::Satisfied;
  if (tail <= mid * 1.0000001) return Verdict::Violated;
  return Verdict::Indeterminate;
}

Verdict inf_positive_verdict(const std::function<double(long)>& value, long horizon,
                             double* observed) {
  double min_value = std::numeric_limits<double>::infinity();
  for (long n = 1; n <= horizon; ++n) min_value = std::min(min_value, value(n));
  if (observed) *observed = min_value;
  if (!(min_value > 0.0)) return Verdict::Violated;
  const double tail = value(horizon);
  const double mid = value(std::max<long>(1, horizon / 2));
  if (tail < 0.7 * mid) return Verdict::Violated;  // trending toward zero
  return Verdict::Satisfied;
}

Verdict series_divergent_verdict(const std::function<double(long)>& term, long horizon,
                                 double* observed) {
  return classify_series(term, horizon, observed);
}

}  // namespace

bool ScheduleReport::admissible() const {
  for (const auto& check : checks)
    if (check.verdict == Verdict::Violated) return false;
  return true;
}

ScheduleReport check_schedule(Regime regime, const ScheduleSpec& schedule, long horizon) {
  if (horizon < 1) throw DomainError("horizon must be at least 1");
  ScheduleReport report;
  report.regime = regime;
  report.horizon = horizon;

  auto lambda_at = [&](long n) { return schedule.lambda.at(n); };
  auto alpha_at = [&](long n) { return schedule.alpha.at(n); };

  auto add_series = [&](const std::string& name, const std::function<double(long)>& term) {
    HypothesisCheck check;
    check.name = name;
    double ratio = 0.0;
    check.verdict = series_divergent_verdict(term, horizon, &ratio);
    double sum = 0.0;
    for (long n = 1; n <= horizon; ++n) sum += term(n);
    check.observed = sum;
    check.detail = "partial sum at horizon; block growth ratio " + format_double(ratio);
    report.checks.push_back(std::move(check));
  };

  auto add_alpha_range = [&](double lo, bool lo_strict) {
    HypothesisCheck check;
    check.name = lo_strict ? "alpha_in_(0,1]" : "alpha_in_[0,1]";
    check.verdict = Verdict::Satisfied;
    for (long n = 1; n <= horizon; ++n) {
      const double a = alpha_at(n);
      if (a < lo || a > 1.0 || (lo_strict && a <= 0.0)) {
        check.verdict = Verdict::Violated;
        check.observed = a;
        check.detail = "violating value at n = " + std::to_string(n);
        break;
      }
    }
    report.checks.push_back(std::move(check));
  };

  switch (regime) {
    case Regime::PpaBounded:
      add_series("sum_lambda_divergent", lambda_at);
      break;
    case Regime::PpaConvergent:
      add_series("sum_lambda_sq_divergent", [&](long n) { return sq(lambda_at(n)); });
      break;
    case Regime::Mann: {
      HypothesisCheck range;
      range.name = "alpha_in_[0,1)";
      range.verdict = Verdict::Satisfied;
      for (long n = 1; n <= horizon; ++n) {
        const double a = alpha_at(n);
        if (a < 0.0 || a >= 1.0) {
          range.verdict = Verdict::Violated;
          range.observed = a;
          range.detail = "violating value at n = " + std::to_string(n);
          break;
        }
      }
      report.checks.push_back(std::move(range));
      add_series("sum_(1-alpha)lambda_divergent",
                 [&](long n) { return (1.0 - alpha_at(n)) * lambda_at(n); });
      {
        HypothesisCheck sup;
        sup.name = "sup_alpha_below_1";
        double max_alpha = 0.0;
        for (long n = 1; n <= horizon; ++n) max_alpha = std::max(max_alpha, alpha_at(n));
        sup.observed = max_alpha;
        sup.verdict = (max_alpha < 1.0) ? Verdict::Satisfied : Verdict::Violated;
        report.checks.push_back(std::move(sup));
      }
      {
        HypothesisCheck inf;
        inf.name = "inf_lambda_positive";
        double observed = 0.0;
        inf.verdict = inf_positive_verdict(lambda_at, horizon, &observed);
        inf.observed = observed;
        report.checks.push_back(std::move(inf));
      }
      break;
    }
    case Regime::HalpernGrowing: {
      add_alpha_range(0.0, false);
      HypothesisCheck growth;
      growth.name = "lambda_to_infinity";
      double observed = 0.0;
      growth.verdict = limit_infinity_verdict(lambda_at, horizon, &observed);
      growth.observed = observed;
      report.checks.push_back(std::move(growth));
      HypothesisCheck alpha_limit;
      alpha_limit.name = "alpha_to_zero";
      alpha_limit.verdict = limit_zero_verdict(alpha_at, horizon, &observed);
      alpha_limit.observed = observed;
      report.checks.push_back(std::move(alpha_limit));
      add_series("sum_alpha_divergent", alpha_at);
      break;
    }
    case Regime::HalpernBoundedBelow: {
      add_alpha_range(0.0, true);
      HypothesisCheck inf;
      inf.name = "inf_lambda_positive";
      double observed = 0.0;
      inf.verdict = inf_positive_verdict(lambda_at, horizon, &observed);
      inf.observed = observed;
      report.checks.push_back(std::move(inf));
      HypothesisCheck alpha_limit;
      alpha_limit.name = "alpha_to_zero";
      alpha_limit.verdict = limit_zero_verdict(alpha_at, horizon, &observed);
      alpha_limit.observed = observed;
      report.checks.push_back(std::move(alpha_limit));
      add_series("sum_alpha_divergent", alpha_at);
      break;
    }
  }
  return report;
}

double cesaro_objective(const Space& s, const std::vector<Point>& points,
                        const std::vector<double>& weights, const Point& y) {
  if (points.empty() || points.size() != weights.size())
    throw DomainError("cesaro objective needs equal-length nonempty windows");
  double total_weight = 0.0;
  double sum = 0.0;
  for (size_t k = 0; k < points.size(); ++k) {
    if (!(weights[k] > 0.0)) throw DomainError("cesaro weights must be positive");
    total_weight += weights[k];
    sum += weights[k] * sq(s.distance(y, points[k]));
  }
  return sum / total_weight;
}

Point window_asymptotic_center(const Space& s, const std::vector<Point>& points,
                               const std::vector<Point>& candidates) {
  if (points.empty() || candidates.empty())
    throw DomainError("asymptotic-center window and candidates must be nonempty");
  size_t best = 0;
  double best_radius = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < candidates.size(); ++i) {
    double radius = 0.0;
    for (const Point& z : points) radius = std::max(radius, s.distance(candidates[i], z));
    if (radius < best_radius) {
      best_radius = radius;
      best = i;
    }
  }
  return candidates[best];
}

}  // namespace hadamard
