#pragma once

// Arithmetic of special cubic fourfold discriminants: the conditions (*)
// and (**), admissible values, canonical rank-2 labeling Grams, and the
// discriminant-chain check for primitive sublattices of unimodular lattices.

#include <optional>
#include <vector>

#include "mukailat/lattice.hpp"

namespace mukailat {

struct HassettVerdict {
    Int d;
    bool star = false;
    bool star_star = false;
    bool admissible = false;                // star && star_star
    std::optional<Int> witness;             // failing divisor when !star_star
};

/// d > 6 and d = 0 or 2 (mod 6).
bool condition_star(const Int& d);

struct StarStarResult {
    bool ok = false;
    std::optional<Int> witness;  // smallest failing divisor among {4, 9, bad prime}
};

/// d not divisible by 4, 9, or any odd prime p = 2 (mod 3). Requires d >= 1.
StarStarResult condition_star_star(const Int& d);

/// Both conditions at once. Requires d >= 1.
HassettVerdict hassett_check(const Int& d);

/// Ascending list of admissible d <= max.
std::vector<Int> admissible_discriminants(const Int& max);

/// Canonical rank-2 positive definite Gram of determinant d representing 3
/// (the square of the hyperplane class of a cubic fourfold has
/// self-intersection 3): [[3,0],[0,d/3]] for d = 0 (mod 6) and
/// [[3,1],[1,(d+1)/3]] for d = 2 (mod 6). Other residues are rejected.
Lattice labeled_k_gram(const Int& d);

struct DiscChainReport {
    Int abs_det_sublattice;
    Int abs_det_complement;
    bool equal = false;
};

/// For a primitive sublattice of a unimodular lattice with nondegenerate
/// induced form, |det K| must equal |det K-perp|. Non-unimodular ambients
/// and non-primitive sublattices are rejected.
DiscChainReport check_disc_chain(const Sublattice& k);

}  // namespace mukailat
