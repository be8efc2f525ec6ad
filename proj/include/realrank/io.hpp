#pragma once

// JSON readers and writers for every value that crosses the C boundary.

#include "json.hpp"

#include "realrank/binary_forms.hpp"
#include "realrank/certify.hpp"
#include "realrank/decompose.hpp"
#include "realrank/space_curve.hpp"
#include "realrank/veronese.hpp"

namespace realrank::io {

using nlohmann::json;

// Numbers or "num/den" strings.
Rational rational_from_json(const json& j);
double double_from_json(const json& j);
json rational_to_json(const Rational& r);  // integers as numbers, fractions as strings

Tensor tensor_from_json(const json& j);  // {"shape":[...],"entries":[...]}
json tensor_to_json(const Tensor& t);

// {"n":2,"d":4,"coeffs":{"4,0":1}} or, for n = 2, {"n":2,"d":4,"x":[...]}.
SymTensorCoords sym_from_json(const json& j);
json sym_to_json(const SymTensorCoords& f);

json selector_to_json(const SubBlockSelector& s);
json hyperdet_report_to_json(const HyperdetReport& r, bool include_values = true);
json certificate_to_json(const Certificate& c);
json decomposition_to_json(const Rank2Decomposition& d);
json best_rank_one_to_json(const BestRankOne& b);

json quadrics_to_json(const std::vector<QuadricGenerator>& q);
json table1_to_json();
json binary_verdict_to_json(const BinaryFormVerdict& v);
json ideal_report_to_json(const IdealReport& r);

CurveParam curve_from_json(const json& j);  // {"d":4,"F":[[...],...]}
json curve_to_json(const CurveParam& c);
json plucker_to_json(const PluckerMap& pm);

struct PathSpec {
  LinearPath path;
  std::vector<SurfaceFixture> fixtures;
  std::size_t samples = 101;
};
// {"path":[[c0,c1],...4],"interval":[t0,t1],"samples":n,"fixtures":[{"kind":..,"poly":..}]}
PathSpec path_from_json(const json& j);
json path_to_json(const PathSpec& p);

json secant_report_to_json(const SecantReport& r);
json classification_to_json(const PointClassification& c);
json path_report_to_json(const PathReport& r);

}  // namespace realrank::io
