#pragma once

#include "tf/apolarity.hpp"
#include "tf/cyclotomic.hpp"
#include "tf/epspoly.hpp"
#include "tf/tensor.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace tf {

using Json = nlohmann::json;

// The on-disk tensor format:
//   {"shape":[2,2,2], "scalar":"rational", "entries":[["1",[0,0,0]], ...]}
// "scalar" may be omitted (defaults to rational) or one of
// "rational" | "cyclotomic:m" | "epspoly".  Rational values are "p/q"
// strings; the other kinds use coefficient lists of such strings
// (cyclotomic: zeta-powers 0..phi(m)-1; epspoly: constant term first).
// Unlisted positions are zero.

using AnyTensor = std::variant<Tensor<Rational>, Tensor<Cyclotomic>, Tensor<EpsPoly>>;

AnyTensor parse_tensor(const Json& j);
AnyTensor parse_tensor_text(const std::string& text);
RatTensor parse_rat_tensor_text(const std::string& text);
Json serialize_tensor(const Tensor<Rational>& t);
Json serialize_tensor(const Tensor<Cyclotomic>& t);
Json serialize_tensor(const Tensor<EpsPoly>& t);
Json serialize_tensor(const AnyTensor& t);

// {"shape":[...], "terms":[{"coeff":"p/q","vectors":[[...],[...],[...]]}]}
RatDecomposition parse_decomposition(const Json& j);
RatDecomposition parse_decomposition_text(const std::string& text);
Json serialize_decomposition(const RatDecomposition& d);

// Degeneration witness:
// {"q":1,"shape":[2,2,2],"terms":[{"vectors":[[["1","1"],["0"]], ...]}]}
// with every vector entry an EpsPoly coefficient list.
struct DegenerationWitnessData {
    long q = 0;
    DimTuple shape;
    std::vector<std::vector<std::vector<EpsPoly>>> terms; // term -> leg -> coords
};
DegenerationWitnessData parse_witness(const Json& j);
DegenerationWitnessData parse_witness_text(const std::string& text);
Json serialize_witness(const DegenerationWitnessData& w);

// Homogeneous polynomial:
// {"vars":3,"degree":3,"terms":[{"exp":[1,1,1],"coeff":"1"}]}
HomogPoly parse_poly(const Json& j);
HomogPoly parse_poly_text(const std::string& text);
Json serialize_poly(const HomogPoly& p);

// "p/q" string for rational values, coefficient list otherwise
Json cyclotomic_json(const Cyclotomic& z);

std::string read_file(const std::string& path);

} // namespace tf
