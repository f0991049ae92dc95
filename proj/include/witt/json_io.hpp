#pragma once

#include "witt/gl_module.hpp"
#include "witt/highest_weight.hpp"
#include "witt/loop_algebra.hpp"
#include "witt/tensor_module.hpp"
#include "witt/w_element.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace witt::io {

using nlohmann::json;

// Term encodings, bit-exact round trips. Decoders take (m, n) context since
// the wire format does not carry the algebra dimensions.
//   A term:  {"c": "p/q", "alpha": [...], "xi": [ascending indices]}
//   W term:  A term + {"gen": {"kind": "d"|"del", "index": k}}
//   Tensor:  A term + {"vec": k}

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const AElement& a);
AElement aelement_from_json(const json& j, int m, int n);

json to_json(const WElement& w);
WElement welement_from_json(const json& j, int m, int n);

json to_json(const WTildeElement& w);
WTildeElement wtilde_from_json(const json& j, int m, int n);

json to_json(const TensorVector& v);
TensorVector tensorvector_from_json(const json& j, int m, int n, int vdim);

/// {"dim": d, "parity": [0/1...], "E": {"a,b": [[row-major rationals]]}}
json to_json(const GlModule& V);
GlModule glmodule_from_json(const json& j, int p, int q);

/// Row-major integer matrix as an array of rows.
json to_json(const LatticeMatrix& B);
LatticeMatrix lattice_from_json(const json& j);

json to_json(const PairingReport& rep);

std::vector<Rational> weights_from_json(const json& j);
json weights_to_json(std::span<const Rational> w);

/// Parses "a,b,c" into rationals.
std::vector<Rational> parse_weight_list(const std::string& csv);
/// Parses "a,b,c" into integers.
ExpVec parse_int_list(const std::string& csv);

} // namespace witt::io
