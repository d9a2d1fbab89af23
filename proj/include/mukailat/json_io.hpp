#pragma once

// JSON encodings of the file formats consumed and produced by the CLI:
//   lattice      {"name": optional, "gram": [[int,...],...]}
//   sublattice   {"ambient": <lattice>, "basis": [[int,...],...]}
//   charge       {"lattice": <lattice>, "re": ["p/q",...], "im": [...]}
//   action       {"lattice": <lattice>, "generators": [[[int,...],...],...]}
// Numbers must be integers; non-integer numerics are rejected. Integers
// beyond the 64-bit JSON-number range travel as decimal strings. Rationals
// are strings "p/q" in lowest terms with q > 0 (bare integers accepted).

#include <json.hpp>

#include "mukailat/charges.hpp"
#include "mukailat/group_action.hpp"
#include "mukailat/lattice.hpp"

namespace mukailat {

using nlohmann::json;

Int int_from_json(const json& j);
json int_to_json(const Int& v);

Rat rat_from_json(const json& j);
json rat_to_json(const Rat& v);  // string "p/q" (bare "p" when integral)

IntVec vector_from_json(const json& j);
json vector_to_json(const IntVec& v);

IntMatrix matrix_from_json(const json& j);
json matrix_to_json(const IntMatrix& m);

Lattice lattice_from_json(const json& j);
json lattice_to_json(const Lattice& l);

Sublattice sublattice_from_json(const json& j);
json sublattice_to_json(const Sublattice& s);

ChargeVector charge_from_json(const json& j);
json charge_to_json(const ChargeVector& c);

GroupAction action_from_json(const json& j);
json action_to_json(const GroupAction& a);

json invariants_to_json(const LatticeInvariants& inv);

}  // namespace mukailat
