#include "padyn/json_io.hpp"

namespace padyn {

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

Json rational_json(const Rational& q) {
  if (q.get_den() == 1) return integer_json(q.get_num());
  return q.get_str();
}

Json to_json(const PadicNumber& x) {
  Json j;
  j["prime"] = x.prime();
  j["zero"] = x.is_zero();
  if (!x.is_zero()) {
    j["valuation"] = x.valuation();
    j["precision"] = x.precision();
    j["digits"] = x.digits();
  }
  j["text"] = x.to_string();
  return j;
}

Json to_json(const OrbitRecord& orbit) {
  Json j;
  j["seed"] = to_json(orbit.seed);
  j["iterates"] = Json::array();
  for (const auto& y : orbit.iterates) j["iterates"].push_back(to_json(y));
  j["valuations"] = Json::array();
  for (int v : orbit.valuations) {
    if (v == kInfiniteValuation) j["valuations"].push_back("inf");
    else j["valuations"].push_back(v);
  }
  return j;
}

Json to_json(const WeierstrassCurve& e) {
  Json j = Json::array();
  for (const auto& a : e.coefficients()) j.push_back(rational_json(a));
  return j;
}

Json to_json(const CurveInvariants& inv) {
  Json j;
  j["b2"] = rational_json(inv.b2);
  j["b4"] = rational_json(inv.b4);
  j["b6"] = rational_json(inv.b6);
  j["b8"] = rational_json(inv.b8);
  j["c4"] = rational_json(inv.c4);
  j["c6"] = rational_json(inv.c6);
  j["delta"] = rational_json(inv.delta);
  if (inv.singular) j["j"] = nullptr;
  else j["j"] = rational_json(inv.j);
  return j;
}

Json to_json(const ReductionData& r) {
  Json j;
  j["p"] = r.prime;
  j["kind"] = std::string(reduction_kind_name(r.kind));
  j["f"] = r.conductor_exponent;
  if (r.kind == ReductionKind::multiplicative) j["split"] = r.ap_or_flag == 1;
  j["ap"] = r.ap_or_flag;
  j["kodaira"] = r.kodaira;
  j["delta_valuation"] = r.discriminant_valuation;
  j["minimal_model"] = to_json(r.minimal_model);
  return j;
}

Json to_json(const CoefficientVector& f) {
  Json j;
  j["level"] = integer_json(f.level);
  j["a"] = Json::array();
  for (const auto& c : f.coeffs) j["a"].push_back(rational_json(c));
  return j;
}

Json to_json(const TateParameter& q) {
  Json j;
  j["p"] = q.prime;
  j["j"] = rational_json(q.j);
  j["h"] = Json::array();
  for (const auto& h : q.h) j["h"].push_back(integer_json(h));
  j["q"] = rational_json(q.q);
  j["valuation"] = q.valuation;
  return j;
}

Json to_json(const TorusData& t) {
  Json j;
  j["curve"] = to_json(t.curve);
  j["j"] = rational_json(t.j);
  j["q_valuation"] = t.q.valuation;
  j["q"] = rational_json(t.q.q);
  j["level"] = integer_json(t.level);
  return j;
}

Json to_json(const FactorizationRecord& f) {
  Json j;
  j["common_prime"] = f.common_prime;
  j["proj1"] = to_json(f.proj1());
  j["proj2"] = to_json(f.proj2());
  return j;
}

Json to_json(const FiberRecord& r) {
  Json j;
  j["t"] = rational_json(r.t);
  j["curve"] = to_json(r.curve);
  j["delta"] = rational_json(r.delta);
  if (r.reduction_at_p) j["reduction"] = std::string(reduction_kind_name(*r.reduction_at_p));
  else j["reduction"] = nullptr;
  j["status"] = r.status == FiberStatus::appropriate ? "appropriate" : "gap";
  j["reason"] = std::string(gap_reason_name(r.reason));
  return j;
}

Json to_json(const GapRun& g) {
  Json j;
  j["start_t"] = rational_json(g.start_t);
  j["end_t"] = rational_json(g.end_t);
  j["length"] = g.length;
  j["start_index"] = g.start_index;
  return j;
}

Json to_json(const PathSelection& p) {
  Json j;
  j["steps"] = p.steps;
  j["objective_trace"] = p.objective_trace;
  j["gap_runs"] = Json::array();
  for (const auto& g : p.gap_runs) j["gap_runs"].push_back(to_json(g));
  return j;
}

Json to_json(const PrecursorReport& r) {
  Json j;
  j["threshold"] = r.threshold;
  auto events = [](const std::vector<GapEvent>& ev) {
    Json a = Json::array();
    for (const auto& e : ev) {
      Json x = to_json(e.run);
      x["energy"] = e.energy;
      a.push_back(x);
    }
    return a;
  };
  j["precursors"] = events(r.precursors);
  j["collapses"] = events(r.collapses);
  j["total_energy"] = r.total_energy;
  return j;
}

Json to_json(const FitReport& r) {
  Json j;
  j["scale"] = r.scale;
  j["translation"] = {r.translation.x, r.translation.y};
  j["residual"] = r.residual;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const HoleSequence& s) {
  Json j;
  j["beach_radius"] = rational_json(s.beach_radius);
  j["outer_radius"] = rational_json(s.outer_radius);
  j["holes"] = Json::array();
  for (const auto& h : s.holes) {
    Json x;
    x["index"] = h.index;
    x["side"] = h.side_id;
    x["radius"] = rational_json(h.radius);
    x["distance_to_beach"] = rational_json(h.distance_to_beach);
    j["holes"].push_back(x);
  }
  return j;
}

Json to_json(const SpecReport& r) {
  Json j;
  j["spec_i"] = r.spec_i;
  j["spec_ii"] = r.spec_ii;
  j["spec_iii"] = r.spec_iii;
  j["spec_iv"] = r.spec_iv;
  j["all"] = r.all();
  j["details"] = r.details;
  return j;
}

Json to_json(const std::vector<RankEntry>& ranking) {
  Json j = Json::array();
  for (const auto& e : ranking) {
    Json x;
    x["candidate_id"] = e.candidate_id;
    x["score"] = e.score;
    j.push_back(x);
  }
  return j;
}

}  // namespace padyn
