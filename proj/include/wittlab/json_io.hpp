#pragma once

// JSON encodings shared by the command-line tool and the fixture files.
// Integers are decimal strings; polynomial ring elements are objects mapping
// a comma-separated exponent vector to a coefficient ({"1,0": "3"}); series
// are coefficient arrays [c_0, ..., c_m]. Readers also accept JSON numbers
// and bracketed exponent keys ("[1,0]").

#include <json.hpp>

#include "wittlab/chain_complex.hpp"
#include "wittlab/cubical.hpp"
#include "wittlab/cycles.hpp"
#include "wittlab/triangular_ideal.hpp"
#include "wittlab/witt.hpp"

namespace wittlab::json_io {

using nlohmann::json;

mpz_class integer_from_json(const json& j);
json to_json(const mpz_class& v);

json to_json(const RingElement& e);
RingElement element_from_json(const json& j, const RingPtr& ring);

json to_json(const TruncationSet& s);
TruncationSet truncation_from_json(const json& j);

/// {"truncation": [...], "ring": "...", "coords": [...]}
json to_json(const WittVector& x);
WittVector witt_from_json(const json& j);

json to_json(const GhostVector& g);

/// [c_0, ..., c_m]
json to_json(const UPoly& p);
UPoly poly_from_json(const json& j, const RingPtr& ring);

/// {"ring": "...", "modulus": m, "normal_form": [...]}
json to_json(const GammaCycleClass& x);
GammaCycleClass class_from_json(const json& j);

/// {"ring": "...", "modulus": m, "terms": [{"generator": [...], "multiplicity": "n"}]}
json to_json(const GammaChain& c);
GammaChain chain_from_json(const json& j);

json to_json(const TriangularIdeal& i);

json to_json(const IntMatrix& m);
/// Shape is checked against rows x cols; an empty array is any 0 x cols matrix.
IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

/// {"levels": [ranks], "boundaries": [d_1, ..., d_N]}
json to_json(const ChainComplex& c);
ChainComplex complex_from_json(const json& j);

/// {"levels": [...], "faces": [[{"0": M, "inf": M}, ...], ...],
///  "degeneracies": [[M, ...], ...], "extension": [M, ...]}
json to_json(const CubicalGroup& c);
CubicalGroup cubical_from_json(const json& j);

/// ["Z", "Z", "Z/2"]: one entry per free summand, then torsion.
json to_json(const HomologyGroup& h);
/// {"H0": [...], "H1": [...], ...}
json homology_to_json(const std::vector<HomologyGroup>& h);

/// Throws SchemaError naming `key` when it is absent.
const json& field(const json& j, const char* key);

} // namespace wittlab::json_io
