#pragma once

#include <json.hpp>

#include "bpd/bpd.hpp"
#include "bpd/degree.hpp"
#include "bpd/permutation.hpp"
#include "bpd/poly.hpp"
#include "bpd/support.hpp"

namespace bpd {

using Json = nlohmann::json;

// Permutations travel as comma-separated one-line notation, e.g. "2,1,4,3".
Json to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

// { "n": 8, "rows": ["....r---", ...] }
Json to_json(const Bpd& b);
Json to_json(const TileGrid& g);
Bpd bpd_from_json(const Json& j);

// [ { "coeff": 1, "exp": [1, 0] }, ... ] in sorted_terms() order.
Json to_json(const SparsePoly& f);
SparsePoly poly_from_json(const Json& j);

Json to_json(const CheckReport& report);
Json to_json(const FilledShape& shape);

}  // namespace bpd
