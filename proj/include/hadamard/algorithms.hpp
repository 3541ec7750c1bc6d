#pragma once

#include <iosfwd>
#include <optional>

#include "hadamard/vector_field.hpp"

namespace hadamard {

// Step-size rule lambda_n, 1-based. Explicit lists repeat their final entry
// past the end.
struct LambdaRule {
  enum class Kind { Constant, Harmonic, Linear, Explicit };
  Kind kind = Kind::Constant;
  double c = 1.0;
  std::vector<double> values;

  static LambdaRule constant(double c);
  static LambdaRule harmonic(double c);  // c / n
  static LambdaRule linear(double c);    // c * n
  static LambdaRule explicit_values(std::vector<double> values);
  double at(long n) const;
};

// Averaging weight alpha_n, 1-based.
struct AlphaRule {
  enum class Kind { Zero, Constant, HarmonicShifted, Explicit };
  Kind kind = Kind::Zero;
  double a = 0.0;
  std::vector<double> values;

  static AlphaRule zero();
  static AlphaRule constant(double a);
  static AlphaRule harmonic_shifted();  // 1 / (n + 1)
  static AlphaRule explicit_values(std::vector<double> values);
  double at(long n) const;
};

struct ScheduleSpec {
  LambdaRule lambda;
  AlphaRule alpha;
};

enum class AlgorithmKind { PPA, Mann, Halpern };

std::string algorithm_name(AlgorithmKind kind);

struct RunConfig {
  Point start;
  std::optional<Point> anchor;  // Halpern only
  long max_iter = 1000;
  double residual_tol = 1e-10;
  std::optional<Point> reference;  // known solution or P v, never computed here
  bool allow_inadmissible = false;
  GenericProxOptions solver;
};

enum class StopReason { ResidualTol, SmallStep, MaxIter, SolverFailure };

std::string stop_reason_name(StopReason reason);

struct TraceStep {
  long n = 0;
  Point x;                    // iterate entering step n
  Point y;                    // resolvent point J_{lambda_n} x_n
  double lambda = 0.0;
  double alpha = 0.0;
  double residual = 0.0;      // d(y_n, x_n) / lambda_n
  double step = 0.0;          // d(x_{n+1}, x_n)
  std::optional<double> dist_ref;
};

struct IterationTrace {
  AlgorithmKind algorithm = AlgorithmKind::PPA;
  std::vector<TraceStep> steps;
  Point final_x;
  StopReason stop = StopReason::MaxIter;
  std::string regime;  // Halpern: which theorem's hypotheses were matched
  std::optional<std::string> error;
};

// x_{n+1} = J_{lambda_n} x_n. Requires the zero alpha rule.
IterationTrace run_ppa(const Space& s, const VectorField& field, const ScheduleSpec& schedule,
                       const RunConfig& config);

// x_{n+1} = alpha_n x_n (+) (1 - alpha_n) J_{lambda_n} x_n.
IterationTrace run_mann(const Space& s, const VectorField& field, const ScheduleSpec& schedule,
                        const RunConfig& config);

// x_{n+1} = alpha_n v (+) (1 - alpha_n) J_{lambda_n} x_n with anchor v;
// converges strongly to the projection of v onto the zero set.
IterationTrace run_halpern(const Space& s, const VectorField& field,
                           const ScheduleSpec& schedule, const RunConfig& config);

// CSV schema: n,lambda,alpha,residual,step,dist_ref
void write_trace_csv(const IterationTrace& trace, std::ostream& out);

enum class Verdict { Satisfied, Violated, Indeterminate };

std::string verdict_name(Verdict verdict);

struct HypothesisCheck {
  std::string name;
  Verdict verdict = Verdict::Indeterminate;
  double observed = 0.0;
  std::string detail;
};

// Theorem regimes whose hypotheses check_schedule can examine.
enum class Regime { PpaBounded, PpaConvergent, Mann, HalpernGrowing, HalpernBoundedBelow };

std::string regime_name(Regime regime);

struct ScheduleReport {
  Regime regime = Regime::PpaConvergent;
  long horizon = 0;
  std::vector<HypothesisCheck> checks;
  bool admissible() const;  // no hypothesis observed violated
};

// Finite-horizon examination of the schedule against a theorem's hypotheses.
// Divergence verdicts are partial-sum growth trends, never proofs.
ScheduleReport check_schedule(Regime regime, const ScheduleSpec& schedule, long horizon);

// Growth-trend classification of a positive series via dyadic block sums.
Verdict classify_series(const std::function<double(long)>& term, long horizon,
                        double* observed_ratio = nullptr);

// Weighted average of squared distances over a finite window (the finite
// surrogate of the Cesaro limsup objective).
double cesaro_objective(const Space& s, const std::vector<Point>& points,
                        const std::vector<double>& weights, const Point& y);

// Candidate minimizing the worst-case distance to the window; a finite
// stand-in for the asymptotic center. Ties break to the first candidate.
Point window_asymptotic_center(const Space& s, const std::vector<Point>& points,
                               const std::vector<Point>& candidates);

}  // namespace hadamard
