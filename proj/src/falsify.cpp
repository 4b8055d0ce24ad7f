#include "opineq/falsify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace opineq {

std::string_view to_string(DropHypothesis d) {
  switch (d) {
    case DropHypothesis::none: return "none";
    case DropHypothesis::synchrony: return "synchrony";
    case DropHypothesis::spectral_containment: return "spectral-containment";
    case DropHypothesis::normalization: return "normalization";
  }
  return "none";
}

DropHypothesis drop_from_string(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), '_', '-');
  for (auto d : {DropHypothesis::none, DropHypothesis::synchrony, DropHypothesis::spectral_containment,
                 DropHypothesis::normalization})
    if (to_string(d) == t) return d;
  throw Error(ErrorKind::config_invalid, "unknown hypothesis '" + s + "'");
}

namespace {

bool has_functions(Family f) {
  return f != Family::kantorovich && f != Family::ensemble_inverse_bound && f != Family::ensemble_kantorovich &&
         f != Family::discrete_chebyshev;
}

void require_droppable(const TheoremInfo& info, DropHypothesis drop) {
  bool ok = true;
  switch (drop) {
    case DropHypothesis::none: break;
    case DropHypothesis::synchrony:
      ok = (has_functions(info.family) && info.family != Family::weighted_cauchy) ||
           info.family == Family::ensemble_kantorovich;
      break;
    case DropHypothesis::spectral_containment:
      ok = info.family == Family::kantorovich ||
           (has_functions(info.family) && info.family != Family::weighted_cauchy);
      break;
    case DropHypothesis::normalization: ok = info.family == Family::ensemble_inverse_bound; break;
  }
  if (!ok)
    throw Error(ErrorKind::config_invalid,
                "theorem '" + info.id + "' has no " + std::string(to_string(drop)) + " hypothesis to drop");
}

// A window around the declared interval that the spectrum may now leave.
SpectralInterval widened(const SpectralInterval& iv) {
  const double w = iv.width() > 0.0 ? iv.width() : std::max(1.0, std::abs(iv.upper())) * 0.5;
  double lo = iv.lower() - w;
  if (iv.lower() > 0.0) lo = std::max(lo, iv.lower() / 2.0);
  return {lo, iv.upper() + w};
}

Matrix orthonormalize(const Matrix& m) {
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const cplx d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

Vector gaussian(Rng& rng, Eigen::Index n) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = cplx(rng.normal(), rng.normal());
  return v;
}

HermitianOperator nudge(const HermitianOperator& a, Rng& rng, double scale) {
  const SpectralInterval& iv = a.interval();
  std::vector<double> eig(a.eigenvalues().begin(), a.eigenvalues().end());
  for (double& e : eig) e = std::clamp(e + scale * iv.width() * rng.normal(), iv.lower(), iv.upper());
  Matrix g(a.dim(), a.dim());
  for (Eigen::Index c = 0; c < a.dim(); ++c) g.col(c) = gaussian(rng, a.dim());
  const Matrix u = orthonormalize(a.eigenvectors() + scale * g);
  return HermitianOperator::from_spectrum(std::move(eig), iv, &u);
}

Vector nudge(const StateVector& x, Rng& rng, double scale) {
  return x.components() + scale * x.norm() * gaussian(rng, x.dim());
}

Inputs perturb(const Inputs& in, Rng& rng, double scale) {
  Inputs out = in;
  if (in.a) out.a = nudge(*in.a, rng, scale);
  if (in.x) out.x = StateVector::normalized(nudge(*in.x, rng, scale));
  if (in.b) out.b = nudge(*in.b, rng, scale);
  if (in.y) out.y = StateVector::normalized(nudge(*in.y, rng, scale));
  if (in.ensemble) {
    std::vector<HermitianOperator> ops;
    std::vector<Vector> raw;
    double total = 0.0;
    for (std::size_t j = 0; j < in.ensemble->size(); ++j) {
      ops.push_back(nudge(in.ensemble->operators()[j], rng, scale));
      raw.push_back(nudge(in.ensemble->states()[j], rng, scale));
      total += raw.back().squaredNorm();
    }
    std::vector<StateVector> states;
    for (auto& v : raw)
      states.emplace_back(in.ensemble->mode() == Normalization::per_vector ? Vector(v / v.norm())
                                                                             : Vector(v / std::sqrt(total)));
    out.ensemble = OperatorEnsemble(std::move(ops), std::move(states), in.ensemble->mode());
  }
  for (double& v : out.tuple_a) v += scale * rng.normal();
  for (double& v : out.tuple_b) v += scale * rng.normal();
  return out;
}

struct Candidate {
  double gap = std::numeric_limits<double>::infinity();
  double tolerance = 0.0;
  std::size_t report = 0;
};

}  // namespace

FalsifyResult falsify(const FalsifyConfig& config) {
  const TheoremInfo& info = theorem_info(config.theorem_id);
  require_droppable(info, config.drop);
  if (config.budget < 1) throw Error(ErrorKind::config_invalid, "budget must be >= 1");
  if (info.needs_positive_interval) config.interval.require_positive(info.id);

  const bool containment = config.drop == DropHypothesis::spectral_containment;
  DrawSettings settings;
  settings.interval = containment ? widened(config.interval) : config.interval;
  settings.dim_min = config.dim_min;
  settings.dim_max = config.dim_max;
  settings.pool = config.pool.empty() ? default_function_pool() : config.pool;

  CheckOptions opts;
  opts.grid_n = config.grid_n;
  opts.enforce_hypotheses = config.drop == DropHypothesis::none || config.drop == DropHypothesis::normalization;

  // Synchrony on the declared interval, cached per triple; used when the
  // spectrum is allowed outside it.
  std::map<std::string, std::optional<Direction>> certified;
  auto certify = [&](const Inputs& in) -> std::optional<Direction> {
    const std::string key = in.f->describe() + "|" + in.g->describe() + "|" + in.h->describe();
    auto it = certified.find(key);
    if (it == certified.end())
      it = certified.emplace(key, supported_direction(*in.f, *in.g, *in.h, config.interval, config.grid_n)).first;
    return it->second;
  };

  Rng rng(splitmix64(config.seed));
  auto draw = [&]() -> std::optional<Inputs> {
    Inputs in = draw_inputs(info, rng, settings);
    if (containment && info.family == Family::kantorovich) in.declared = config.interval;
    if (config.drop == DropHypothesis::normalization) {
      in.ensemble = random_ensemble(rng, rng.uniform_int(2, 4), settings.dim_min, settings.dim_max, settings.interval,
                                    Normalization::sum_of_squares);
    }
    if (has_functions(info.family) && info.family != Family::weighted_cauchy && !info.g_is_f) {
      if (config.drop == DropHypothesis::synchrony) {
        in.direction = Direction::geq;
      } else if (containment) {
        in.direction = certify(in);
        if (!in.direction) return std::nullopt;
      }
    }
    return in;
  };
  auto score = [&](const Inputs& in, std::vector<InequalityReport>* keep) -> Candidate {
    Candidate c;
    std::vector<InequalityReport> reports;
    try {
      reports = evaluate(info, in, opts);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::domain_violation || e.kind() == ErrorKind::not_similarly_ordered ||
          e.kind() == ErrorKind::normalization_violation)
        return c;
      throw;
    }
    for (std::size_t k = 0; k < reports.size(); ++k) {
      const InequalityReport& r = reports[k];
      if (r.verdict == Verdict::hypothesis_not_met && config.drop != DropHypothesis::synchrony) continue;
      if (r.gap < c.gap) c = {r.gap, r.tolerance, k};
    }
    if (keep) *keep = std::move(reports);
    return c;
  };

  // Explore at random, keeping the best instance per function triple, then
  // hill-climb from the most promising distinct starts.
  struct Start {
    Candidate score;
    Inputs inputs;
  };
  std::map<std::string, Start> starts;
  auto key_of = [&](const Inputs& in) {
    return in.f ? in.f->describe() + "|" + in.g->describe() + "|" + in.h->describe() : std::string();
  };
  FalsifyResult out;
  const long explore = std::max(1L, config.budget / 2);
  while (out.evaluations < explore) {
    ++out.evaluations;
    auto in = draw();
    if (!in) continue;
    const Candidate c = score(*in, nullptr);
    if (!std::isfinite(c.gap)) continue;
    const std::string key = key_of(*in);
    auto it = starts.find(key);
    if (it == starts.end())
      starts.emplace(key, Start{c, std::move(*in)});
    else if (c.gap < it->second.score.gap)
      it->second = Start{c, std::move(*in)};
  }
  std::vector<Start> ranked;
  for (auto& [key, st] : starts) ranked.push_back(std::move(st));
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const Start& a, const Start& b) { return a.score.gap < b.score.gap; });
  constexpr std::size_t kStarts = 8;
  if (ranked.size() > kStarts) ranked.resize(kStarts);

  const long climb_budget = config.budget - out.evaluations;
  for (std::size_t s = 0; s < ranked.size(); ++s) {
    Start& cur = ranked[s];
    const long stop = out.evaluations + climb_budget / static_cast<long>(ranked.size()) +
                      (s + 1 == ranked.size() ? climb_budget % static_cast<long>(ranked.size()) : 0);
    double step = 0.1;
    while (out.evaluations < stop) {
      ++out.evaluations;
      Inputs trial;
      try {
        trial = perturb(cur.inputs, rng, step);
      } catch (const Error&) {
        continue;
      }
      const Candidate c = score(trial, nullptr);
      if (c.gap < cur.score.gap) {
        cur = Start{c, std::move(trial)};
        step = std::min(0.5, step * 1.5);
      } else {
        step = std::max(1e-6, step * 0.97);
      }
    }
  }
  std::optional<Inputs> best;
  Candidate best_score;
  for (auto& st : ranked)
    if (st.score.gap < best_score.gap) {
      best_score = st.score;
      best = std::move(st.inputs);
    }
  if (!best || !std::isfinite(best_score.gap)) return out;

  std::vector<InequalityReport> reports;
  score(*best, &reports);
  const InequalityReport& r = reports[best_score.report];
  out.best_gap = r.gap;
  out.best_report = r.theorem_id;
  out.found = r.gap < -10.0 * r.tolerance;
  out.report = r;
  json doc = scenario_from_inputs(info, *best, opts);
  doc["name"] = "falsify_" + info.id + "_" + std::string(to_string(config.drop));
  doc["expect"] = json::array({{{"report", r.theorem_id}, {"verdict", std::string(to_string(r.verdict))},
                                {"gap", r.gap}}});
  out.bundle = std::move(doc);
  return out;
}

json to_json(const FalsifyResult& r) {
  return {{"found", r.found},
          {"best_gap", r.bundle ? json(r.best_gap) : json(nullptr)},
          {"best_report", r.best_report},
          {"evaluations", r.evaluations},
          {"report", r.report ? to_json(*r.report) : json(nullptr)},
          {"bundle", r.bundle ? *r.bundle : json(nullptr)}};
}

}  // namespace opineq
