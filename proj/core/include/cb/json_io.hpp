#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cb/bernstein.hpp"
#include "cb/cartan.hpp"
#include "cb/poly.hpp"
#include "cb/resultant.hpp"
#include "cb/types.hpp"
#include "cb/weierstrass.hpp"

namespace cb {

using json = nlohmann::json;

/// Shared schema for both polynomial kinds:
///   {"degz": int, "degw": int, "coeffs": [{"i":..,"j":..,"re":..,"im":..}]}
/// Univariate polynomials use degw = 0 and j = 0 throughout. Serialized
/// doubles round-trip exactly.
json to_json(const BivariatePoly& p);
json to_json(const UnivariatePoly& p);
BivariatePoly bivariate_from_json(const json& j);
UnivariatePoly univariate_from_json(const json& j);

/// {"H":float,"K":int,"disks":[{"c":[re,im],"r":float}]}
json to_json(const Car1Cover& c);
Car1Cover car1_from_json(const json& j);

/// {"H":float,"K":int,"balls":[{"c":[re,im,re,im],"r":float}]}
json to_json(const Car20Cover& c);
Car20Cover car20_from_json(const json& j);

json to_json(const ResultantWitnessReport& r);
json to_json(const BernsteinReport& r);
json to_json(const DoublingBoundReport& r);
json to_json(const Frame& f);
json to_json(const WeierstrassFactorization& wf);

json load_json(const std::string& path);
void save_json(const json& j, const std::string& path);

}  // namespace cb
