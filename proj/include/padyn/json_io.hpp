#pragma once

#include "json.hpp"
#include "padyn/elliptic.hpp"
#include "padyn/field.hpp"
#include "padyn/formation.hpp"
#include "padyn/planar.hpp"
#include "padyn/surface.hpp"
#include "padyn/tfilter.hpp"

namespace padyn {

using Json = nlohmann::ordered_json;

// Integral values that fit in 64 bits become numbers, everything else "a/b".
Json rational_json(const Rational& q);
Json integer_json(const Integer& n);

Json to_json(const PadicNumber& x);
Json to_json(const OrbitRecord& orbit);
Json to_json(const WeierstrassCurve& e);
Json to_json(const CurveInvariants& inv);
Json to_json(const ReductionData& r);
Json to_json(const CoefficientVector& f);
Json to_json(const TateParameter& q);
Json to_json(const TorusData& t);
Json to_json(const FactorizationRecord& f);
Json to_json(const FiberRecord& r);
Json to_json(const GapRun& g);
Json to_json(const PathSelection& p);
Json to_json(const PrecursorReport& r);
Json to_json(const FitReport& r);
Json to_json(const HoleSequence& s);
Json to_json(const SpecReport& r);
Json to_json(const std::vector<RankEntry>& ranking);

}  // namespace padyn
