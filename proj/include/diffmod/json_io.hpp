#pragma once

#include <json.hpp>

#include "diffmod/birkhoff.hpp"
#include "diffmod/lattice.hpp"
#include "diffmod/restriction.hpp"

namespace diffmod {

using Json = nlohmann::ordered_json;

// --- writers (canonical forms; byte-stable given equal inputs) ---
Json poly_to_json(const Poly& p);
Json ratfunc_to_json(const RatFunc& f);
Json matrix_to_json(const RatFuncMatrix& m);
Json connection_to_json(const DConnection& c);
Json lattice_to_json(const Lattice& l);
Json profile_to_json(const ZeroPoleProfile& p);
Json partition_to_json(const std::vector<long>& parts);
Json laurent_trunc_to_json(const LaurentTrunc& t);
Json laurent_poly_to_json(const LaurentPoly& p);

// --- readers; throw ParseError on malformed data ---
Rat rat_from_json(const Json& j);
Poly poly_from_json(const Json& j);           // coefficient array, lowest first
RatFunc ratfunc_from_json(const Json& j);     // string | number | {"num","den"}
RatFuncMatrix matrix_from_json(const Json& j);
RatMatrix rat_matrix_from_json(const Json& j);
DConnection connection_from_json(const Json& j); // matrix | {"A": matrix}
Lattice lattice_from_json(const Json& j, int expected_rank);
std::vector<long> partition_from_json(const Json& j);

} // namespace diffmod
