#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padyn/elliptic.hpp"
#include "padyn/modular.hpp"

namespace padyn {

// Fibers E_t with a_i(t) = (1 - t) a_{1i} + t a_{2i} over a rational grid in [0, 1].
struct FiberFamily {
  WeierstrassCurve e1, e2;
  std::vector<Rational> grid;  // 0 = t_0 < ... < t_K = 1
  long working_prime = 0;

  static std::vector<Rational> uniform_grid(int cells);
};

WeierstrassCurve interpolate(const FiberFamily& family, const Rational& t);

enum class FiberStatus { appropriate, gap };

enum class GapReason { none, singular, good, additive };
std::string_view gap_reason_name(GapReason r);

struct FiberRecord {
  Rational t;
  WeierstrassCurve curve;
  Rational delta;
  std::optional<ReductionKind> reduction_at_p;  // absent when delta == 0
  FiberStatus status = FiberStatus::gap;
  GapReason reason = GapReason::singular;
  std::optional<CoefficientVector> coeff_vector;  // only for appropriate fibers
};

// Smallest common multiplicative prime of the two endpoints.
long auto_working_prime(const WeierstrassCurve& e1, const WeierstrassCurve& e2);

// EndpointSingular when either endpoint has delta == 0.
std::vector<FiberRecord> scan(const FiberFamily& family, int n_max = 50, long ap_bound = 10000);

struct GapRun {
  Rational start_t, end_t;
  int length = 0;
  std::size_t start_index = 0;
};

std::vector<GapRun> gap_runs(const std::vector<FiberRecord>& records);

enum class GeodesicObjective {
  max_variation,  // step maximizing |d(f_next, f1) - d(f_cur, f1)| + |d(f_next, f2) - d(f_cur, f2)|
  min_variation,  // step minimizing the same quantity
};

struct GeodesicConfig {
  MetricConfig metric;
  int window = 2;  // largest admissible index jump
  GeodesicObjective objective = GeodesicObjective::max_variation;
};

struct PathSelection {
  std::vector<std::size_t> steps;      // grid indices, 0 .. K
  std::vector<double> objective_trace;  // per-step score
  std::vector<GapRun> gap_runs;
};

// Per-step score between two appropriate fibers.
double step_score(const CoefficientVector& from, const CoefficientVector& to, const CoefficientVector& f1,
                  const CoefficientVector& f2, const MetricConfig& metric);

// Greedy forward selection; ties go to the shorter jump. NoAdmissiblePath
// when a gap run severs every window.
PathSelection select_geodesic(const std::vector<FiberRecord>& records, const GeodesicConfig& cfg);

struct GapEvent {
  GapRun run;
  double energy = 0.0;  // energy_scale * length
};

struct PrecursorReport {
  int threshold = 2;
  std::vector<GapEvent> precursors;  // length < threshold
  std::vector<GapEvent> collapses;   // length >= threshold
  double total_energy = 0.0;
};

PrecursorReport precursor_report(const PathSelection& path, double energy_scale, int threshold = 2);

}  // namespace padyn
