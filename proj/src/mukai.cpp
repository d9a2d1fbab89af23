#include "mukailat/mukai.hpp"

#include <algorithm>
#include <stdexcept>

namespace mukailat {

using boost::multiprecision::abs;

Int mukai_pairing(const MukaiVector& v, const MukaiVector& w, const IntMatrix& ns_gram) {
    if (v.c.size() != ns_gram.rows() || w.c.size() != ns_gram.rows())
        throw std::invalid_argument("NS components incompatible with ns_gram");
    Int ns = ns_gram.rows() ? dot(row_times_matrix(v.c, ns_gram), w.c) : Int(0);
    return ns - v.r * w.m - w.r * v.m;
}

A2Embedding embed_a2_in_mukai() {
    Lattice mukai = make_standard(StandardLattice::Mukai24);
    IntVec a(24, Int(0)), b(24, Int(0));
    a[0] = 1;  // e1 + f1
    a[1] = 1;
    b[0] = -1;  // -e1 + e2 + f2
    b[2] = 1;
    b[3] = 1;
    IntMatrix basis(2, 24);
    basis.set_row(0, a);
    basis.set_row(1, b);
    return A2Embedding{Sublattice{std::move(mukai), std::move(basis)}, LambdaBasis{a, b}};
}

FanoVector fano_mukai_vector(const LambdaBasis& basis) {
    const Lattice mukai = make_standard(StandardLattice::Mukai24);
    if (basis.lambda1.size() != 24 || basis.lambda2.size() != 24)
        throw std::invalid_argument("lambda basis must live in the rank-24 Mukai lattice");
    const Int g11 = mukai.pairing(basis.lambda1, basis.lambda1);
    const Int g12 = mukai.pairing(basis.lambda1, basis.lambda2);
    const Int g22 = mukai.pairing(basis.lambda2, basis.lambda2);
    if (g11 != 2 || g22 != 2 || g12 != -1)
        throw std::invalid_argument("basis does not satisfy the A2 Gram");
    FanoVector out;
    out.v.resize(24);
    for (std::size_t i = 0; i < 24; ++i) out.v[i] = basis.lambda1[i] + basis.lambda2[i];
    out.norm = mukai.pairing(out.v, out.v);
    return out;
}

Sublattice build_l_k(const IntVec& kappa) {
    const A2Embedding a2 = embed_a2_in_mukai();
    const Lattice& mukai = a2.sublattice.ambient;
    if (kappa.size() != 24)
        throw std::invalid_argument("kappa must live in the rank-24 Mukai lattice");
    if (std::all_of(kappa.begin(), kappa.end(), [](const Int& x) { return x == 0; }))
        throw std::invalid_argument("kappa must be nonzero");
    if (mukai.pairing(kappa, a2.basis.lambda1) != 0 ||
        mukai.pairing(kappa, a2.basis.lambda2) != 0)
        throw std::invalid_argument("kappa must lie in A2-perp");
    IntMatrix span(3, 24);
    span.set_row(0, a2.basis.lambda1);
    span.set_row(1, a2.basis.lambda2);
    span.set_row(2, kappa);
    return saturate(Sublattice{mukai, std::move(span)});
}

Int kuznetsov_picard_number(const Int& alg_lattice_rank) {
    if (alg_lattice_rank < 2)
        throw std::invalid_argument(
            "algebraic Mukai lattice always contains A2, so rank >= 2");
    return alg_lattice_rank - 2;
}

namespace {

Int vector_content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    return g;
}

void normalize_sign(IntVec& v) {
    for (const Int& x : v) {
        if (x > 0) return;
        if (x < 0) {
            for (Int& y : v) y = -y;
            return;
        }
    }
}

}  // namespace

UPlaneSearch find_hyperbolic_plane(const Lattice& l, const Int& search_bound) {
    if (search_bound < 0) throw std::invalid_argument("search bound must be nonnegative");
    UPlaneSearch out;
    const std::size_t n = l.rank();

    const Signature sig = gram_signature(l.gram);
    if ((sig.negative == 0 && sig.zero == 0) || (sig.positive == 0 && sig.zero == 0)) {
        out.verdict = UPlaneSearch::Verdict::No;
        out.reason = "definite";
        return out;
    }
    Int content = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) content = int_gcd(content, l.gram(i, j));
    if (content != 1) {
        // Every pairing value is a multiple of the content, so no pair can
        // pair to 1.
        out.verdict = UPlaneSearch::Verdict::No;
        out.reason = "content " + content.str();
        return out;
    }

    const auto verified_yes = [&](const IntVec& e, const IntVec& f) {
        return l.norm(e) == 0 && l.norm(f) == 0 && l.pairing(e, f) == 1;
    };
    const auto unit = [&](std::size_t i) {
        IntVec v(n, Int(0));
        v[i] = 1;
        return v;
    };

    // Standard basis pairs first: catches U summands immediately.
    for (std::size_t i = 0; i < n; ++i) {
        if (l.gram(i, i) != 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || l.gram(j, j) != 0 || l.gram(i, j) != 1) continue;
            IntVec e = unit(i), f = unit(j);
            if (verified_yes(e, f)) {
                out.verdict = UPlaneSearch::Verdict::Yes;
                out.e = std::move(e);
                out.f = std::move(f);
                return out;
            }
        }
    }

    // Bounded enumeration of primitive isotropic vectors, sign-normalized,
    // then pair search in lexicographic order.
    std::vector<IntVec> isotropic;
    IntVec v(n, -search_bound);
    for (;;) {
        if (l.norm(v) == 0 && vector_content(v) == 1) {
            IntVec w = v;
            normalize_sign(w);
            isotropic.push_back(std::move(w));
        }
        std::size_t i = n;
        while (i > 0 && v[i - 1] == search_bound) v[--i] = -search_bound;
        if (i == 0) break;
        ++v[i - 1];
    }
    std::sort(isotropic.begin(), isotropic.end());
    isotropic.erase(std::unique(isotropic.begin(), isotropic.end()), isotropic.end());

    for (const IntVec& e : isotropic)
        for (const IntVec& f0 : isotropic) {
            const Int p = l.pairing(e, f0);
            if (p != 1 && p != -1) continue;
            IntVec f = f0;
            if (p == -1)
                for (Int& x : f) x = -x;
            if (verified_yes(e, f)) {
                out.verdict = UPlaneSearch::Verdict::Yes;
                out.e = e;
                out.f = std::move(f);
                return out;
            }
        }

    out.verdict = UPlaneSearch::Verdict::Unknown;
    return out;
}

}  // namespace mukailat
