// JSON (de)serialization for every file format the engine speaks: weight
// lists, spline forms, distributions, test functions, linear maps and model
// descriptors. Rationals travel as integers or "p/q" strings.

#ifndef INFDEX_JSONIO_HPP
#define INFDEX_JSONIO_HPP

#include "models.hpp"

#include <json.hpp>

#include <string>

namespace infdex {

using Json = nlohmann::json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json qvec_to_json(const QVec& v);
QVec qvec_from_json(const Json& j);

Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j, int nvars);

Json weights_to_json(const WeightList& X);
WeightList weights_from_json(const Json& j);

Json spline_to_json(const SplineForm& S);
/// Rebuilds walls and triangulations from the stored weights; chamber pieces
/// are taken from the file and cross-checked against the recomputed complex.
SplineForm spline_from_json(const Json& j);

Json matrix_to_json(const QMat& m);
QMat matrix_from_json(const Json& j);

Json prefactor_to_json(const Prefactor& p);
Prefactor prefactor_from_json(const Json& j);

Json distribution_to_json(const Distribution& d);
Distribution distribution_from_json(const Json& j);

Json testfn_to_json(const TestFunction& f);
TestFunction testfn_from_json(const Json& j);

Json model_to_json(const ModelDescriptor& m);
ModelDescriptor model_from_json(const Json& j);

/// Parse a comma-separated rational point like "3/2,-1,0".
QVec point_from_string(const std::string& s);

Json load_json_file(const std::string& path);
Json parse_json(const std::string& text);

}  // namespace infdex

#endif
