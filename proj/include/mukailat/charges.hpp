#pragma once

// Central charges Z(w) = (Omega, w) for a complexified lattice vector Omega,
// positive-plane and P0 membership checks, the finite set
// Gamma = { w : w^2 >= -2, |(Omega, w)| <= C }, and the genericity bound
// N = max |w0| + 1 read off from it. Everything is exact: |Z| <= C is
// compared as |Z|^2 <= C^2 over the rationals.

#include <string>
#include <vector>

#include "mukailat/lattice.hpp"

namespace mukailat {

struct ChargeVector {
    Lattice lattice;
    RatVec re;
    RatVec im;
};

/// Validates coordinate lengths against the lattice rank.
ChargeVector make_charge_vector(Lattice lattice, RatVec re, RatVec im);

struct GaussianRat {
    Rat re;
    Rat im;
    friend bool operator==(const GaussianRat&, const GaussianRat&) = default;
};

/// Z(w) = (re.G.w^T) + i (im.G.w^T).
GaussianRat central_charge(const ChargeVector& omega, const IntVec& w);

/// True iff the 2x2 Gram of (re, im) under the lattice form is positive
/// definite (exact leading-minor test).
bool positive_plane_check(const ChargeVector& omega);

struct P0Verdict {
    enum class Kind { InP0, Excluded, NotPositivePlane };
    Kind kind = Kind::NotPositivePlane;
    IntVec delta;  // witness (-2)-class orthogonal to Omega when Excluded
};

/// Complete membership test for the plane-of-Omega in P+_0: enumerates all
/// (-2)-classes of the (negative definite) sublattice orthogonal to the
/// plane. Requires lattice signature (2, k, 0).
P0Verdict p_zero_check(const ChargeVector& omega);

struct GammaSet {
    ChargeVector omega;
    Rat c_bound;
    std::vector<IntVec> members;  // sorted lexicographically, includes 0
    bool complete = false;
};

/// All w with w^2 >= -2 and |Z(w)|^2 <= c_bound^2, via Fincke-Pohst on the
/// positive definite majorant 2*||proj_plane(w)||^2 - w^2. Requires a
/// positive plane and lattice signature (2, k, 0); the result is complete.
GammaSet gamma_set(const ChargeVector& omega, const Rat& c_bound);

/// N = max over members |rank_functional . w^T| + 1; requires a complete set.
Int genericity_bound(const GammaSet& gamma, const IntVec& rank_functional);

/// The rank-3 Mukai model of H^0 + Z.h + H^4 for a degree-d polarization:
/// coordinates (r, c, m) with Gram [[0,0,-1],[0,d,0],[-1,0,0]].
Lattice mukai_model_lattice(const Int& d);

/// Omega_n = e^{inh} over mukai_model_lattice(d): re = (1, 0, -n^2 d/2),
/// im = (0, n, 0).
ChargeVector exponential_charge(const Int& d, const Int& n = 1);

}  // namespace mukailat
