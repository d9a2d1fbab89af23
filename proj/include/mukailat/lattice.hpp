#pragma once

// Gram-matrix lattices and sublattices: invariants, discriminant groups,
// orthogonal complements, saturation, short-vector enumeration, and the
// standard constructions (U, A2, E8, the rank-24 Mukai lattice).

#include <optional>
#include <string>
#include <vector>

#include "mukailat/enumerate.hpp"
#include "mukailat/int_matrix.hpp"

namespace mukailat {

struct Lattice {
    IntMatrix gram;    // square symmetric bilinear form
    std::string name;  // optional label

    std::size_t rank() const { return gram.rows(); }
    /// v * gram * w^T
    Int pairing(const IntVec& v, const IntVec& w) const;
    Int norm(const IntVec& v) const { return pairing(v, v); }
};

/// Validates squareness and symmetry.
Lattice make_lattice(IntMatrix gram, std::string name = {});

Lattice direct_sum(const Lattice& a, const Lattice& b);
/// L(n): multiplies the form by n.
Lattice twist(const Lattice& l, const Int& n);

struct Sublattice {
    Lattice ambient;
    IntMatrix basis;  // rows = basis vectors in ambient coordinates

    std::size_t rank() const { return basis.rows(); }
    IntMatrix induced_gram() const;
};

/// Validates that the rows are linearly independent over Q.
Sublattice make_sublattice(Lattice ambient, IntMatrix basis);

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

struct LatticeInvariants {
    std::size_t rank = 0;
    Int det;       // exact determinant of the Gram matrix, with sign
    Int abs_det;   // |det|; the classical discriminant for definite forms
    Signature signature;
    bool even = false;
    bool unimodular = false;
};

/// Exact rank/det/signature/parity. Signature by rational Lagrange
/// diagonalization, never floating point.
LatticeInvariants invariants(const Lattice& l);

/// Signature of a symmetric integer matrix.
Signature gram_signature(const IntMatrix& gram);

struct DiscriminantGroup {
    std::vector<Int> invariant_factors;  // each > 1, each dividing the next
};

/// SNF diagonal entries of the Gram that exceed 1. Throws std::domain_error
/// ("degenerate form") when det == 0.
DiscriminantGroup discriminant_group(const Lattice& l);

enum class StandardLattice { U, A2, E8, E8Neg, Rank1, Mukai24 };

/// Named Gram, twisted by `twist`, direct-summed `copies` times.
/// Mukai24 = U + U + U + U + E8(-1) + E8(-1). Rank1 uses `rank1_n` (any
/// nonzero integer). copies == 0 is an invalid argument.
Lattice make_standard(StandardLattice name, const Int& twist = 1, std::size_t copies = 1,
                      const Int& rank1_n = 1);

/// Saturated sublattice { x : x . G . b^T = 0 for all basis rows b of s }.
/// Requires nondegenerate ambient Gram. Basis returned in Hermite normal
/// form, so the result is canonical.
Sublattice orthogonal_complement(const Sublattice& s);

/// Primitive closure: Q-span of s intersected with the ambient lattice.
Sublattice saturate(const Sublattice& s);

/// Index of the row span of `basis` inside its saturation (product of the
/// invariant factors of the basis matrix).
Int saturation_index(const IntMatrix& basis);

bool is_primitive(const Sublattice& s);

struct NormVectors {
    std::vector<IntVec> vectors;  // sorted lexicographically; both signs
    bool complete = false;
};

/// All vectors v with v.G.v^T = n. Complete (and box_bound ignored) when the
/// form is positive or negative definite; otherwise a box search over
/// coordinates in [-box_bound, box_bound], flagged incomplete. Indefinite or
/// degenerate forms with box_bound == 0 throw ("bound required").
NormVectors vectors_of_norm(const Lattice& l, const Int& n, const Int& box_bound = 0);

/// Gram matrix as rationals (helper for the enumeration layer).
RatMat gram_to_rat(const IntMatrix& gram);

}  // namespace mukailat
