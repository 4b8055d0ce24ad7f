#include "opineq/functionals.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>

namespace opineq {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::hypothesis_not_met: return "hypothesis_not_met";
  }
  return "violated";
}

double inequality_tolerance(double lhs, double rhs) { return 1e-9 * (1.0 + std::abs(lhs) + std::abs(rhs)); }

InequalityReport make_report(std::string theorem_id, Direction direction, double lhs, double rhs,
                             bool hypothesis_met, std::optional<SynchronyVerdict> evidence) {
  InequalityReport r;
  r.theorem_id = std::move(theorem_id);
  r.direction = direction;
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = direction == Direction::geq ? lhs - rhs : rhs - lhs;
  r.tolerance = inequality_tolerance(lhs, rhs);
  if (!hypothesis_met)
    r.verdict = Verdict::hypothesis_not_met;
  else
    r.verdict = r.gap >= -r.tolerance ? Verdict::holds : Verdict::violated;
  r.hypothesis_evidence = std::move(evidence);
  return r;
}

namespace {

// FNV-1a over raw bit patterns.
struct Fnv {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  void add(double v) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }
};

}  // namespace

std::string digest(const HermitianOperator& a, const StateVector& x) {
  Fnv fnv;
  fnv.add(a.interval().lower());
  fnv.add(a.interval().upper());
  for (double l : a.eigenvalues()) fnv.add(l);
  for (Eigen::Index i = 0; i < a.eigenvectors().size(); ++i) {
    fnv.add(a.eigenvectors().data()[i].real());
    fnv.add(a.eigenvectors().data()[i].imag());
  }
  for (Eigen::Index i = 0; i < x.dim(); ++i) {
    fnv.add(x.components()(i).real());
    fnv.add(x.components()(i).imag());
  }
  return fnv.hex();
}

double cebysev(const ScalarFunction& f, const ScalarFunction& g, const HermitianOperator& a, const StateVector& x) {
  x.require_unit();
  return expectation(a, f * g, x) - expectation(a, g, x) * expectation(a, f, x);
}

PompeiuTerms pompeiu_terms(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                           const HermitianOperator& a, const StateVector& x) {
  return {expectation(a, h * h, x), expectation(a, f * g, x), expectation(a, h * g, x), expectation(a, h * f, x)};
}

double pompeiu_cebysev(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                       const HermitianOperator& a, const StateVector& x) {
  x.require_unit();
  const PompeiuTerms t = pompeiu_terms(f, g, h, a, x);
  return t.h2 * t.fg - t.hg * t.hf;
}

std::pair<SynchronyVerdict, bool> synchrony_gate(const ScalarFunction& f, const ScalarFunction& g,
                                                 const ScalarFunction& h, const SpectralInterval& interval,
                                                 Direction direction, int grid_n) {
  SynchronyVerdict v = classify_synchrony(f, g, h, interval, grid_n);
  const bool ok = v.supports(direction);
  return {std::move(v), ok};
}

namespace {

std::string describe_triple(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h) {
  return "f=" + f.describe() + "; g=" + g.describe() + "; h=" + h.describe();
}

}  // namespace

InequalityReport check_pompeiu_sign(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                                    const HermitianOperator& a, const StateVector& x, Direction direction,
                                    const CheckOptions& opts, std::string theorem_id) {
  x.require_unit();
  std::optional<SynchronyVerdict> evidence;
  bool met = true;
  if (opts.enforce_hypotheses) {
    auto [v, ok] = synchrony_gate(f, g, h, a.interval(), direction, opts.grid_n);
    evidence = std::move(v);
    met = ok;
  }
  const PompeiuTerms t = pompeiu_terms(f, g, h, a, x);
  InequalityReport r = make_report(std::move(theorem_id), direction, t.h2 * t.fg, t.hg * t.hf, met, evidence);
  r.inputs_digest = describe_triple(f, g, h) + "; op=" + digest(a, x);
  return r;
}

InequalityReport check_weighted_cauchy(const ScalarFunction& f, const ScalarFunction& h,
                                       const HermitianOperator& a, const StateVector& x, std::string theorem_id) {
  x.require_unit();
  const double hf = expectation(a, h * f, x);
  InequalityReport r = make_report(std::move(theorem_id), Direction::leq, hf * hf,
                                   expectation(a, h * h, x) * expectation(a, f * f, x), true);
  r.inputs_digest = "f=" + f.describe() + "; h=" + h.describe() + "; op=" + digest(a, x);
  return r;
}

double kantorovich_constant(const SpectralInterval& interval) {
  interval.require_positive("Kantorovich constant");
  const double s = interval.lower() + interval.upper();
  return s * s / (4.0 * interval.lower() * interval.upper());
}

KantorovichReports kantorovich_chain(const HermitianOperator& a, const StateVector& x) {
  return kantorovich_chain(a, x, a.interval());
}

KantorovichReports kantorovich_chain(const HermitianOperator& a, const StateVector& x,
                                     const SpectralInterval& declared) {
  x.require_unit();
  a.interval().require_positive("Kantorovich chain");
  declared.require_positive("Kantorovich chain");
  const double product = expectation(a, ScalarFunction::power(-1.0), x) * expectation(a, ScalarFunction::identity(), x);
  const double k = kantorovich_constant(declared);
  KantorovichReports out{make_report("kantorovich_lower", Direction::leq, 1.0, product, true),
                         make_report("kantorovich_upper", Direction::leq, product, k, true), product};
  out.lower.inputs_digest = out.upper.inputs_digest = "op=" + digest(a, x);
  if (!(declared == a.interval())) out.upper.notes.push_back("constant from declared interval, not the operator's");
  return out;
}

InequalityReport check_two_operator(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                                    const HermitianOperator& a, const HermitianOperator& b, const StateVector& x,
                                    const StateVector& y, Direction direction, const CheckOptions& opts,
                                    std::string theorem_id) {
  x.require_unit();
  y.require_unit();
  if (!same_interval(a.interval(), b.interval()))
    throw Error(ErrorKind::interval_mismatch, "both operators must share one spectral interval");
  std::optional<SynchronyVerdict> evidence;
  bool met = true;
  if (opts.enforce_hypotheses) {
    auto [v, ok] = synchrony_gate(f, g, h, a.interval(), direction, opts.grid_n);
    evidence = std::move(v);
    met = ok;
  }
  const PompeiuTerms ta = pompeiu_terms(f, g, h, a, x);
  const PompeiuTerms tb = pompeiu_terms(f, g, h, b, y);
  const double lhs = tb.h2 * ta.fg + ta.h2 * tb.fg;
  const double rhs = tb.hg * ta.hf + ta.hg * tb.hf;
  InequalityReport r = make_report(std::move(theorem_id), direction, lhs, rhs, met, evidence);
  r.inputs_digest = describe_triple(f, g, h) + "; A=" + digest(a, x) + "; B=" + digest(b, y);
  return r;
}

RefinedSides refined_sides(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h, double point,
                           const PompeiuTerms& t) {
  const double hp = h(point);
  const double fp = f(point);
  const double gp = g(point);
  return {hp * hp * t.fg - t.hf * t.hg, (hp * t.hf - t.h2 * fp) * gp + (hp * fp - t.hf) * t.hg};
}

namespace {

constexpr const char* kReverseNote =
    "<= variant evaluated as the full sign reversal of the >= form";

// Keeps <Ax,x> inside the numerical range [min lambda, max lambda].
double numerical_range_point(const HermitianOperator& a, double q) {
  return std::clamp(q, a.min_eigenvalue(), a.max_eigenvalue());
}

}  // namespace

InequalityReport check_pompeiu_refined(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                                       const HermitianOperator& a, const StateVector& x, Direction direction,
                                       const CheckOptions& opts, std::string theorem_id) {
  x.require_unit();
  std::optional<SynchronyVerdict> evidence;
  bool met = true;
  if (opts.enforce_hypotheses) {
    auto [v, ok] = synchrony_gate(f, g, h, a.interval(), direction, opts.grid_n);
    evidence = std::move(v);
    met = ok;
  }
  const double point = numerical_range_point(a, expectation(a, ScalarFunction::identity(), x));
  const RefinedSides s = refined_sides(f, g, h, point, pompeiu_terms(f, g, h, a, x));
  InequalityReport r = make_report(std::move(theorem_id), direction, s.lhs, s.rhs, met, evidence);
  r.inputs_digest = describe_triple(f, g, h) + "; op=" + digest(a, x);
  if (direction == Direction::leq) r.notes.emplace_back(kReverseNote);
  return r;
}

InequalityReport check_inverse_pair(const ScalarFunction& f, const ScalarFunction& g, const ScalarFunction& h,
                                    const HermitianOperator& a, const StateVector& x, Direction direction,
                                    const CheckOptions& opts, std::string theorem_id) {
  x.require_unit();
  a.interval().require_positive("inverse pair");
  const double pa = numerical_range_point(a, expectation(a, ScalarFunction::identity(), x));
  const double pb = std::clamp(expectation(a, ScalarFunction::power(-1.0), x), 1.0 / a.max_eigenvalue(),
                               1.0 / a.min_eigenvalue());
  for (double p : {pa, pb}) {
    for (const ScalarFunction* fn : {&f, &g, &h}) {
      if (!fn->defined_at(p)) {
        std::ostringstream os;
        os.precision(17);
        os << fn->describe() << " is not defined at the scalar argument " << p;
        throw Error(ErrorKind::domain_violation, os.str());
      }
    }
  }
  std::optional<SynchronyVerdict> evidence;
  bool met = true;
  InequalityReport r;
  if (opts.enforce_hypotheses) {
    // b = <A^-1x,x> can leave [γ, Γ]; the hypothesis must cover every point used.
    auto [v, ok] = synchrony_gate(f, g, h, a.interval().hull({pa, pb}), direction, opts.grid_n);
    evidence = std::move(v);
    met = ok;
  }
  const double ha = h(pa);
  const double hb = h(pb);
  const double lhs = ha * ha * f(pb) * g(pb) + hb * hb * f(pa) * g(pa);
  const double rhs = ha * hb * (f(pb) * g(pa) + f(pa) * g(pb));
  r = make_report(std::move(theorem_id), direction, lhs, rhs, met, evidence);
  r.inputs_digest = describe_triple(f, g, h) + "; op=" + digest(a, x);
  if (opts.enforce_hypotheses && !a.interval().contains(pb))
    r.notes.emplace_back("synchrony checked on the hull of the interval and <A^-1x,x>");
  return r;
}

}  // namespace opineq
