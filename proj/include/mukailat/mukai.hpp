#pragma once

// Mukai-lattice constructions: the (r, c, m) pairing, the explicit A2
// sublattice of the rank-24 Mukai lattice, lambda classes and the Fano
// Mukai vector, the rank-3 labeling lattices L_K, Picard numbers of
// Kuznetsov components, and hyperbolic-plane detection.

#include <string>

#include "mukailat/lattice.hpp"

namespace mukailat {

struct MukaiVector {
    Int r;     // H^0 component
    IntVec c;  // coordinates in the NS block
    Int m;     // H^4 component
};

/// (v, w) = c1 . ns_gram . c2^T - r1*m2 - r2*m1.
Int mukai_pairing(const MukaiVector& v, const MukaiVector& w, const IntMatrix& ns_gram);

struct LambdaBasis {
    IntVec lambda1;  // coordinates in the rank-24 Mukai lattice
    IntVec lambda2;
};

struct A2Embedding {
    Sublattice sublattice;  // primitive, induced Gram [[2,-1],[-1,2]]
    LambdaBasis basis;
};

/// The chosen embedding: lambda1 = e1 + f1, lambda2 = -e1 + e2 + f2 in the
/// first two U blocks of Mukai24.
A2Embedding embed_a2_in_mukai();

struct FanoVector {
    IntVec v;  // lambda1 + lambda2 in ambient coordinates
    Int norm;  // self-pairing; always 2
};

/// lambda1 + lambda2 and its self-pairing. The basis must actually have the
/// A2 Gram under the Mukai24 form.
FanoVector fano_mukai_vector(const LambdaBasis& basis);

/// Saturation of span{lambda1, lambda2, kappa} in Mukai24. kappa must be a
/// nonzero vector orthogonal to the standard A2 embedding.
Sublattice build_l_k(const IntVec& kappa);

/// rank of the algebraic Mukai lattice minus 2; requires rank >= 2.
Int kuznetsov_picard_number(const Int& alg_lattice_rank);

struct UPlaneSearch {
    enum class Verdict { Yes, No, Unknown };
    Verdict verdict = Verdict::Unknown;
    IntVec e, f;         // witness for Yes: e^2 = f^2 = 0, e.f = 1 (verified)
    std::string reason;  // certificate for No: "definite" or "content <n>"
};

/// Tri-state search for an embedded hyperbolic plane. No is only returned
/// with a sound certificate (definite form, or bilinear-form content != 1);
/// otherwise isotropic pairs are searched with coordinates bounded by
/// search_bound, standard basis pairs first, then lexicographically.
UPlaneSearch find_hyperbolic_plane(const Lattice& l, const Int& search_bound);

}  // namespace mukailat
