#pragma once

// Scalar function catalog plus the h-monotonicity and h-synchrony
// predicates, with grid classification over an interval.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opineq/spectral.hpp"

namespace opineq {

class ScalarFunction {
 public:
  enum class Kind { constant, identity, power, log, exp, affine, neg_parabola, tabulated, product, sum };

  static ScalarFunction constant(double c);
  static ScalarFunction identity();
  static ScalarFunction power(double p);
  static ScalarFunction log();
  static ScalarFunction exp();
  /// s -> slope * s + offset
  static ScalarFunction affine(double slope, double offset);
  /// s -> s (1 - s)
  static ScalarFunction neg_parabola();
  /// Piecewise-linear through (knots[i], values[i]); knots strictly increasing.
  static ScalarFunction tabulated(std::vector<double> knots, std::vector<double> values);

  friend ScalarFunction operator*(const ScalarFunction& a, const ScalarFunction& b);
  friend ScalarFunction operator+(const ScalarFunction& a, const ScalarFunction& b);
  ScalarFunction scaled(double c) const;
  ScalarFunction negated() const { return scaled(-1.0); }

  /// Same function with its domain intersected with [lower, upper].
  ScalarFunction restricted_to(const SpectralInterval& domain) const;

  Kind kind() const;
  bool defined_at(double s) const;

  /// Evaluates at s; throws domain_violation outside the domain or on a
  /// non-finite result.
  double operator()(double s) const;

  /// Short human-readable form, e.g. "s^2" or "(s^0.5)*(exp(s))".
  std::string describe() const;

  struct Node;

 private:
  explicit ScalarFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend const Node& node_of(const ScalarFunction& f);
};

const ScalarFunction::Node& node_of(const ScalarFunction& f);

struct ScalarFunction::Node {
  Kind kind;
  double a = 0.0;  // constant c, power p, affine slope
  double b = 0.0;  // affine offset
  std::vector<double> knots;
  std::vector<double> values;
  std::vector<ScalarFunction> children;
  std::optional<SpectralInterval> restriction;
};

/// (h(y) f(x) - h(x) f(y)) (h(y) g(x) - h(x) g(y)).
double sync_product(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h, double x,
                    double y);

/// h(x) f(t) - h(t) f(x) for x <= t; throws argument_order when x > t.
double mono_defect(const ScalarFunction& f, const ScalarFunction& h, double x, double t);

/// n equally spaced points over the interval, both endpoints included.
std::vector<double> uniform_grid(const SpectralInterval& interval, int n);

inline constexpr int default_grid = 128;

enum class Direction { geq, leq };
std::string_view to_string(Direction d);

enum class SyncClass { synchronous, asynchronous, mixed };
std::string_view to_string(SyncClass c);

struct PointPair {
  double x;
  double y;
};

struct SynchronyVerdict {
  SyncClass classification = SyncClass::mixed;
  double min_product = 0.0;
  double max_product = 0.0;
  double tolerance = 0.0;
  std::optional<PointPair> witness_pos;
  std::optional<PointPair> witness_neg;
  int grid_size = 0;
  // h >= 0 at every grid point, as h-synchrony requires.
  bool weight_nonnegative = true;

  /// Whether the grid evidence supports the theorem in the given direction:
  /// >= needs h-synchrony, <= needs h-asynchrony. A triple whose products all
  /// vanish supports both.
  bool supports(Direction d) const;
};

enum class MonoClass { increasing, decreasing, mixed };
std::string_view to_string(MonoClass c);

struct MonotonicityVerdict {
  MonoClass classification = MonoClass::mixed;
  double min_defect = 0.0;
  double max_defect = 0.0;
  double tolerance = 0.0;
  std::optional<PointPair> witness_pos;
  std::optional<PointPair> witness_neg;
  int grid_size = 0;
};

/// Scans sync_product over all grid pairs i < j.
SynchronyVerdict classify_synchrony(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                                    const SpectralInterval& interval, int grid_n = default_grid);

/// Scans mono_defect over all ordered grid pairs; h must be strictly positive.
MonotonicityVerdict classify_monotonicity(const ScalarFunction& f, const ScalarFunction& h,
                                          const SpectralInterval& interval, int grid_n = default_grid);

struct RegionSample {
  double r;
  SynchronyVerdict verdict;
};

/// Classifies (f, g) against h(s) = s^r for each r.
std::vector<RegionSample> scan_tr_regions(const ScalarFunction& f, const ScalarFunction& g,
                                          std::span<const double> r_values, const SpectralInterval& interval,
                                          int grid_n = default_grid);

struct MonoRegionSample {
  double r;
  MonotonicityVerdict verdict;
};

std::vector<MonoRegionSample> scan_tr_monotonicity(const ScalarFunction& f, std::span<const double> r_values,
                                                   const SpectralInterval& interval, int grid_n = default_grid);

}  // namespace opineq
