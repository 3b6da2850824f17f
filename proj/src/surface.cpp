#include "padyn/surface.hpp"

#include <algorithm>
#include <cmath>

#include "padyn/error.hpp"

namespace padyn {

std::vector<Rational> FiberFamily::uniform_grid(int cells) {
  if (cells < 1) fail(ErrorCode::DomainError, "grid needs at least one cell");
  std::vector<Rational> grid;
  for (int k = 0; k <= cells; ++k) {
    Rational t(k, cells);
    t.canonicalize();
    grid.push_back(t);
  }
  return grid;
}

std::string_view gap_reason_name(GapReason r) {
  switch (r) {
    case GapReason::none: return "none";
    case GapReason::singular: return "singular";
    case GapReason::good: return "good";
    case GapReason::additive: return "additive";
  }
  return "unknown";
}

WeierstrassCurve interpolate(const FiberFamily& family, const Rational& t) {
  if (t < 0 || t > 1) fail(ErrorCode::DomainError, "fiber parameter must lie in [0,1]");
  const Rational s = 1 - t;
  const auto& a = family.e1;
  const auto& b = family.e2;
  return {s * a.a1 + t * b.a1, s * a.a2 + t * b.a2, s * a.a3 + t * b.a3, s * a.a4 + t * b.a4, s * a.a6 + t * b.a6};
}

long auto_working_prime(const WeierstrassCurve& e1, const WeierstrassCurve& e2) {
  auto m1 = global_reduction(e1).multiplicative_primes();
  auto m2 = global_reduction(e2).multiplicative_primes();
  for (long p : m1)
    if (std::find(m2.begin(), m2.end(), p) != m2.end()) return p;
  fail(ErrorCode::NoCommonBadPrime, "endpoints share no multiplicative prime");
}

std::vector<FiberRecord> scan(const FiberFamily& family, int n_max, long ap_bound) {
  if (family.grid.empty()) fail(ErrorCode::DomainError, "empty fiber grid");
  if (discriminant(family.e1) == 0 || discriminant(family.e2) == 0)
    fail(ErrorCode::EndpointSingular, "endpoint curves must be non-singular");
  if (!is_prime(Integer(family.working_prime))) fail(ErrorCode::DomainError, "working prime must be prime");
  std::vector<FiberRecord> out;
  out.reserve(family.grid.size());
  for (const auto& t : family.grid) {
    FiberRecord rec;
    rec.t = t;
    rec.curve = interpolate(family, t);
    rec.delta = discriminant(rec.curve);
    if (rec.delta == 0) {
      rec.status = FiberStatus::gap;
      rec.reason = GapReason::singular;
    } else {
      ReductionData rd = tate_reduce(rec.curve, family.working_prime, ap_bound);
      rec.reduction_at_p = rd.kind;
      if (rd.kind == ReductionKind::multiplicative) {
        rec.status = FiberStatus::appropriate;
        rec.reason = GapReason::none;
        rec.coeff_vector = l_coefficients(rec.curve, n_max, ap_bound, false);
      } else {
        rec.status = FiberStatus::gap;
        rec.reason = rd.kind == ReductionKind::good ? GapReason::good : GapReason::additive;
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<GapRun> gap_runs(const std::vector<FiberRecord>& records) {
  std::vector<GapRun> runs;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].status != FiberStatus::gap) continue;
    if (!runs.empty() && runs.back().start_index + static_cast<std::size_t>(runs.back().length) == i) {
      runs.back().end_t = records[i].t;
      ++runs.back().length;
    } else {
      runs.push_back({records[i].t, records[i].t, 1, i});
    }
  }
  return runs;
}

double step_score(const CoefficientVector& from, const CoefficientVector& to, const CoefficientVector& f1,
                  const CoefficientVector& f2, const MetricConfig& metric) {
  return std::abs(distance(to, f1, metric) - distance(from, f1, metric)) +
         std::abs(distance(to, f2, metric) - distance(from, f2, metric));
}

PathSelection select_geodesic(const std::vector<FiberRecord>& records, const GeodesicConfig& cfg) {
  if (records.empty()) fail(ErrorCode::EmptyInput, "no fiber records");
  if (cfg.window < 1) fail(ErrorCode::DomainError, "step window must be positive");
  const std::size_t last = records.size() - 1;
  if (records.front().status != FiberStatus::appropriate || records.back().status != FiberStatus::appropriate)
    fail(ErrorCode::NoAdmissiblePath, "endpoint fibers must be appropriate");
  const auto& f1 = *records.front().coeff_vector;
  const auto& f2 = *records.back().coeff_vector;

  PathSelection path;
  path.gap_runs = gap_runs(records);
  path.steps.push_back(0);
  std::size_t cur = 0;
  while (cur != last) {
    std::optional<std::size_t> best;
    double best_score = 0.0;
    const std::size_t reach = std::min(last, cur + static_cast<std::size_t>(cfg.window));
    for (std::size_t next = cur + 1; next <= reach; ++next) {
      if (records[next].status != FiberStatus::appropriate) continue;
      double score = step_score(*records[cur].coeff_vector, *records[next].coeff_vector, f1, f2, cfg.metric);
      bool better = !best || (cfg.objective == GeodesicObjective::max_variation ? score > best_score
                                                                                 : score < best_score);
      if (better) {
        best = next;
        best_score = score;
      }
    }
    if (!best)
      fail(ErrorCode::NoAdmissiblePath,
           "gap after t=" + records[cur].t.get_str() + " is wider than the step window");
    path.steps.push_back(*best);
    path.objective_trace.push_back(best_score);
    cur = *best;
  }
  return path;
}

PrecursorReport precursor_report(const PathSelection& path, double energy_scale, int threshold) {
  if (threshold < 1) fail(ErrorCode::DomainError, "gap threshold must be positive");
  PrecursorReport rep;
  rep.threshold = threshold;
  for (const auto& run : path.gap_runs) {
    GapEvent ev{run, energy_scale * run.length};
    rep.total_energy += ev.energy;
    (run.length < threshold ? rep.precursors : rep.collapses).push_back(ev);
  }
  return rep;
}

}  // namespace padyn
