#include "opineq/functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace opineq {

namespace {

using Kind = ScalarFunction::Kind;

bool is_integer(double p) { return std::floor(p) == p && std::abs(p) < 1e15; }

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

const ScalarFunction::Node& node_of(const ScalarFunction& f) { return *f.node_; }

ScalarFunction ScalarFunction::constant(double c) {
  return ScalarFunction(std::make_shared<const Node>(Node{.kind = Kind::constant, .a = c}));
}
ScalarFunction ScalarFunction::identity() {
  return ScalarFunction(std::make_shared<const Node>(Node{.kind = Kind::identity}));
}
ScalarFunction ScalarFunction::power(double p) {
  if (!std::isfinite(p)) throw Error(ErrorKind::parse_error, "power exponent must be finite");
  return ScalarFunction(std::make_shared<const Node>(Node{.kind = Kind::power, .a = p}));
}
ScalarFunction ScalarFunction::log() { return ScalarFunction(std::make_shared<const Node>(Node{.kind = Kind::log})); }
ScalarFunction ScalarFunction::exp() { return ScalarFunction(std::make_shared<const Node>(Node{.kind = Kind::exp})); }
ScalarFunction ScalarFunction::affine(double slope, double offset) {
  return ScalarFunction(std::make_shared<const Node>(Node{.kind = Kind::affine, .a = slope, .b = offset}));
}
ScalarFunction ScalarFunction::neg_parabola() {
  return ScalarFunction(std::make_shared<const Node>(Node{.kind = Kind::neg_parabola}));
}

ScalarFunction ScalarFunction::tabulated(std::vector<double> knots, std::vector<double> values) {
  if (knots.size() < 2 || knots.size() != values.size())
    throw Error(ErrorKind::parse_error, "tabulated function needs >= 2 knots and one value per knot");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i]) || !std::isfinite(values[i]))
      throw Error(ErrorKind::parse_error, "tabulated knots and values must be finite");
    if (i > 0 && !(knots[i] > knots[i - 1]))
      throw Error(ErrorKind::parse_error, "tabulated knots must be strictly increasing");
  }
  Node n{.kind = Kind::tabulated};
  n.knots = std::move(knots);
  n.values = std::move(values);
  return ScalarFunction(std::make_shared<const Node>(std::move(n)));
}

ScalarFunction operator*(const ScalarFunction& a, const ScalarFunction& b) {
  ScalarFunction::Node n{.kind = Kind::product};
  n.children = {a, b};
  return ScalarFunction(std::make_shared<const ScalarFunction::Node>(std::move(n)));
}

ScalarFunction operator+(const ScalarFunction& a, const ScalarFunction& b) {
  ScalarFunction::Node n{.kind = Kind::sum};
  n.children = {a, b};
  return ScalarFunction(std::make_shared<const ScalarFunction::Node>(std::move(n)));
}

ScalarFunction ScalarFunction::scaled(double c) const { return constant(c) * *this; }

ScalarFunction ScalarFunction::restricted_to(const SpectralInterval& domain) const {
  Node n = *node_;
  if (n.restriction) {
    const double lo = std::max(n.restriction->lower(), domain.lower());
    const double hi = std::min(n.restriction->upper(), domain.upper());
    n.restriction = SpectralInterval(lo, hi);
  } else {
    n.restriction = domain;
  }
  return ScalarFunction(std::make_shared<const Node>(std::move(n)));
}

ScalarFunction::Kind ScalarFunction::kind() const { return node_->kind; }

bool ScalarFunction::defined_at(double s) const {
  const Node& n = *node_;
  if (!std::isfinite(s)) return false;
  if (n.restriction && !n.restriction->contains(s)) return false;
  switch (n.kind) {
    case Kind::constant:
    case Kind::identity:
    case Kind::exp:
    case Kind::affine:
    case Kind::neg_parabola:
      return true;
    case Kind::power:
      if (is_integer(n.a)) return n.a >= 0.0 || s != 0.0;
      return n.a > 0.0 ? s >= 0.0 : s > 0.0;
    case Kind::log:
      return s > 0.0;
    case Kind::tabulated:
      return s >= n.knots.front() && s <= n.knots.back();
    case Kind::product:
    case Kind::sum:
      return n.children[0].defined_at(s) && n.children[1].defined_at(s);
  }
  return false;
}

double ScalarFunction::operator()(double s) const {
  if (!defined_at(s)) {
    std::ostringstream os;
    os.precision(17);
    os << describe() << " is not defined at " << s;
    throw Error(ErrorKind::domain_violation, os.str());
  }
  const Node& n = *node_;
  double v = 0.0;
  switch (n.kind) {
    case Kind::constant: v = n.a; break;
    case Kind::identity: v = s; break;
    case Kind::power: v = n.a == 0.0 ? 1.0 : std::pow(s, n.a); break;
    case Kind::log: v = std::log(s); break;
    case Kind::exp: v = std::exp(s); break;
    case Kind::affine: v = n.a * s + n.b; break;
    case Kind::neg_parabola: v = s * (1.0 - s); break;
    case Kind::tabulated: {
      const auto it = std::upper_bound(n.knots.begin(), n.knots.end(), s);
      if (it == n.knots.end()) {
        v = n.values.back();
      } else {
        const auto i = static_cast<std::size_t>(it - n.knots.begin()) - 1;
        const double w = (s - n.knots[i]) / (n.knots[i + 1] - n.knots[i]);
        v = n.values[i] + w * (n.values[i + 1] - n.values[i]);
      }
      break;
    }
    case Kind::product: v = n.children[0](s) * n.children[1](s); break;
    case Kind::sum: v = n.children[0](s) + n.children[1](s); break;
  }
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << describe() << " is not finite at " << s;
    throw Error(ErrorKind::domain_violation, os.str());
  }
  return v;
}

std::string ScalarFunction::describe() const {
  const Node& n = *node_;
  std::string out;
  switch (n.kind) {
    case Kind::constant: out = num(n.a); break;
    case Kind::identity: out = "s"; break;
    case Kind::power: out = "s^" + num(n.a); break;
    case Kind::log: out = "log(s)"; break;
    case Kind::exp: out = "exp(s)"; break;
    case Kind::affine: out = num(n.a) + "*s+" + num(n.b); break;
    case Kind::neg_parabola: out = "s(1-s)"; break;
    case Kind::tabulated: out = "tab[" + std::to_string(n.knots.size()) + "]"; break;
    case Kind::product: out = "(" + n.children[0].describe() + ")*(" + n.children[1].describe() + ")"; break;
    case Kind::sum: out = "(" + n.children[0].describe() + ")+(" + n.children[1].describe() + ")"; break;
  }
  if (n.restriction) out += " on [" + num(n.restriction->lower()) + "," + num(n.restriction->upper()) + "]";
  return out;
}

double sync_product(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h, double x, double y) {
  const double hx = h(x);
  const double hy = h(y);
  return (hy * f(x) - hx * f(y)) * (hy * g(x) - hx * g(y));
}

double mono_defect(const ScalarFunction& f, const ScalarFunction& h, double x, double t) {
  if (x > t) {
    std::ostringstream os;
    os << "mono_defect needs x <= t, got x=" << x << " t=" << t;
    throw Error(ErrorKind::argument_order, os.str());
  }
  return h(x) * f(t) - h(t) * f(x);
}

std::vector<double> uniform_grid(const SpectralInterval& interval, int n) {
  if (n < 2) throw Error(ErrorKind::config_invalid, "grid needs at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double step = interval.width() / (n - 1);
  for (int i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = interval.lower() + step * i;
  grid.back() = interval.upper();
  return grid;
}

std::string_view to_string(Direction d) { return d == Direction::geq ? ">=" : "<="; }

std::string_view to_string(SyncClass c) {
  switch (c) {
    case SyncClass::synchronous: return "synchronous";
    case SyncClass::asynchronous: return "asynchronous";
    case SyncClass::mixed: return "mixed";
  }
  return "mixed";
}

std::string_view to_string(MonoClass c) {
  switch (c) {
    case MonoClass::increasing: return "h-increasing";
    case MonoClass::decreasing: return "h-decreasing";
    case MonoClass::mixed: return "mixed";
  }
  return "mixed";
}

bool SynchronyVerdict::supports(Direction d) const {
  if (!weight_nonnegative) return false;
  return d == Direction::geq ? min_product >= -tolerance : max_product <= tolerance;
}

namespace {

std::vector<double> tabulate(const ScalarFunction& f, std::span<const double> grid) {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = f(grid[i]);
  return out;
}

// Extremes of a pairwise quantity over i < j with the argmin/argmax pairs.
struct PairScan {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
  std::size_t lo_i = 0, lo_j = 0, hi_i = 0, hi_j = 0;

  void add(double v, std::size_t i, std::size_t j) {
    if (v < lo) { lo = v; lo_i = i; lo_j = j; }
    if (v > hi) { hi = v; hi_i = i; hi_j = j; }
    max_abs = std::max(max_abs, std::abs(v));
  }
};

}  // namespace

SynchronyVerdict classify_synchrony(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                                    const SpectralInterval& interval, int grid_n) {
  const std::vector<double> grid = uniform_grid(interval, grid_n);
  const std::vector<double> fv = tabulate(f, grid);
  const std::vector<double> gv = tabulate(g, grid);
  const std::vector<double> hv = tabulate(h, grid);

  PairScan scan;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      // x = grid[i], y = grid[j]
      const double v = (hv[j] * fv[i] - hv[i] * fv[j]) * (hv[j] * gv[i] - hv[i] * gv[j]);
      scan.add(v, i, j);
    }
  }

  SynchronyVerdict out;
  out.grid_size = grid_n;
  out.min_product = scan.lo;
  out.max_product = scan.hi;
  out.tolerance = 1e-12 * (1.0 + scan.max_abs);
  out.weight_nonnegative = std::all_of(hv.begin(), hv.end(), [](double v) { return v >= 0.0; });
  if (scan.hi > out.tolerance) out.witness_pos = PointPair{grid[scan.hi_i], grid[scan.hi_j]};
  if (scan.lo < -out.tolerance) out.witness_neg = PointPair{grid[scan.lo_i], grid[scan.lo_j]};
  if (scan.lo >= -out.tolerance)
    out.classification = SyncClass::synchronous;
  else if (scan.hi <= out.tolerance)
    out.classification = SyncClass::asynchronous;
  else
    out.classification = SyncClass::mixed;
  return out;
}

MonotonicityVerdict classify_monotonicity(const ScalarFunction& f, const ScalarFunction& h,
                                          const SpectralInterval& interval, int grid_n) {
  const std::vector<double> grid = uniform_grid(interval, grid_n);
  const std::vector<double> fv = tabulate(f, grid);
  const std::vector<double> hv = tabulate(h, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(hv[i] > 0.0)) {
      std::ostringstream os;
      os << "monotonicity weight " << h.describe() << " is not strictly positive at " << grid[i];
      throw Error(ErrorKind::domain_violation, os.str());
    }
  }

  PairScan scan;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i + 1; j < grid.size(); ++j) scan.add(hv[i] * fv[j] - hv[j] * fv[i], i, j);

  MonotonicityVerdict out;
  out.grid_size = grid_n;
  out.min_defect = scan.lo;
  out.max_defect = scan.hi;
  out.tolerance = 1e-12 * (1.0 + scan.max_abs);
  if (scan.hi > out.tolerance) out.witness_pos = PointPair{grid[scan.hi_i], grid[scan.hi_j]};
  if (scan.lo < -out.tolerance) out.witness_neg = PointPair{grid[scan.lo_i], grid[scan.lo_j]};
  if (scan.lo >= -out.tolerance)
    out.classification = MonoClass::increasing;
  else if (scan.hi <= out.tolerance)
    out.classification = MonoClass::decreasing;
  else
    out.classification = MonoClass::mixed;
  return out;
}

namespace {

void require_power_weights_valid(std::span<const double> r_values, const SpectralInterval& interval) {
  for (double r : r_values) {
    const ScalarFunction h = ScalarFunction::power(r);
    if (!h.defined_at(interval.lower()) || !h.defined_at(interval.upper()) || interval.lower() < 0.0) {
      std::ostringstream os;
      os << "weight s^" << r << " is not defined on [" << interval.lower() << ", " << interval.upper() << "]";
      throw Error(ErrorKind::domain_violation, os.str());
    }
  }
}

}  // namespace

std::vector<RegionSample> scan_tr_regions(const ScalarFunction& f, const ScalarFunction& g,
                                          std::span<const double> r_values, const SpectralInterval& interval,
                                          int grid_n) {
  require_power_weights_valid(r_values, interval);
  std::vector<RegionSample> out;
  out.reserve(r_values.size());
  for (double r : r_values)
    out.push_back({r, classify_synchrony(f, g, ScalarFunction::power(r), interval, grid_n)});
  return out;
}

std::vector<MonoRegionSample> scan_tr_monotonicity(const ScalarFunction& f, std::span<const double> r_values,
                                                   const SpectralInterval& interval, int grid_n) {
  require_power_weights_valid(r_values, interval);
  std::vector<MonoRegionSample> out;
  out.reserve(r_values.size());
  for (double r : r_values)
    out.push_back({r, classify_monotonicity(f, ScalarFunction::power(r), interval, grid_n)});
  return out;
}

}  // namespace opineq
