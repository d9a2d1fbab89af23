#pragma once

// Finite group actions on lattices by integer isometries: validation,
// invariant and coinvariant sublattices, the Picard-number lower bound read
// off from the coinvariant rank, and the order gate for finite symplectic
// automorphisms of K3 surfaces.

#include <string>
#include <vector>

#include "mukailat/lattice.hpp"

namespace mukailat {

struct GroupAction {
    Lattice lattice;
    std::vector<IntMatrix> generators;  // act on row vectors by right multiplication
};

GroupAction make_group_action(Lattice lattice, std::vector<IntMatrix> generators);

struct ActionViolation {
    std::size_t generator_index = 0;
    std::string kind;  // "shape" | "not_unimodular" | "not_isometry"
};

struct ActionReport {
    bool valid = true;
    std::vector<ActionViolation> violations;
};

/// Checks every generator: square of the right size, determinant +-1, and
/// g.G.g^T == G.
ActionReport validate_action(const GroupAction& action);

struct InvariantPair {
    Sublattice invariant;    // L^G: saturated fixed sublattice
    Sublattice coinvariant;  // S_G: orthogonal complement of L^G
};

/// L^G as the saturated kernel of the stacked (g - id) maps, and
/// S_G = (L^G)-perp. Requires a valid action and nondegenerate Gram.
InvariantPair invariant_and_coinvariant(const GroupAction& action);

/// rk(S_G), the implied lower bound for the Picard number of the Kuznetsov
/// component. Each listed class must be fixed by every generator; an
/// unfixed class is reported by index together with the offending
/// generator.
Int picard_bound_from_action(const GroupAction& action,
                             const std::vector<IntVec>& invariant_classes);

/// Finite symplectic automorphisms of K3 surfaces have order 1..8.
bool k3_symplectic_order_allowed(const Int& n);

}  // namespace mukailat
