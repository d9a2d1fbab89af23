#include "mukailat/charges.hpp"

#include <algorithm>
#include <stdexcept>

namespace mukailat {

namespace {

RatVec rat_row_times_gram(const RatVec& v, const IntMatrix& g) {
    RatVec out(g.cols(), Rat(0));
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < g.cols(); ++j) out[j] += v[i] * Rat(g(i, j));
    }
    return out;
}

Rat rat_dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat rat_dot_int(const RatVec& a, const IntVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

void require_signature_2k(const Lattice& l) {
    const Signature sig = gram_signature(l.gram);
    if (sig.positive != 2 || sig.zero != 0)
        throw std::invalid_argument("completeness requires signature (2,k)");
}

// Integer matrix whose kernel is the plane-orthogonal sublattice:
// rows are re.G and im.G with denominators cleared.
IntMatrix plane_pairing_matrix(const ChargeVector& omega) {
    const RatVec a1 = rat_row_times_gram(omega.re, omega.lattice.gram);
    const RatVec a2 = rat_row_times_gram(omega.im, omega.lattice.gram);
    const std::size_t n = omega.lattice.rank();
    IntMatrix m(2, n);
    for (int r = 0; r < 2; ++r) {
        const RatVec& a = r == 0 ? a1 : a2;
        Int lcm = 1;
        for (const Rat& x : a) lcm = lcm / int_gcd(lcm, rat_den(x)) * rat_den(x);
        for (std::size_t j = 0; j < n; ++j)
            m(r, j) = rat_num(a[j]) * (lcm / rat_den(a[j]));
    }
    return m;
}

}  // namespace

ChargeVector make_charge_vector(Lattice lattice, RatVec re, RatVec im) {
    if (re.size() != lattice.rank() || im.size() != lattice.rank())
        throw std::invalid_argument("re/im lengths must equal the lattice rank");
    return ChargeVector{std::move(lattice), std::move(re), std::move(im)};
}

GaussianRat central_charge(const ChargeVector& omega, const IntVec& w) {
    if (w.size() != omega.lattice.rank())
        throw std::invalid_argument("central charge dimension mismatch");
    const RatVec a1 = rat_row_times_gram(omega.re, omega.lattice.gram);
    const RatVec a2 = rat_row_times_gram(omega.im, omega.lattice.gram);
    return GaussianRat{rat_dot_int(a1, w), rat_dot_int(a2, w)};
}

bool positive_plane_check(const ChargeVector& omega) {
    const RatVec a1 = rat_row_times_gram(omega.re, omega.lattice.gram);
    const Rat p11 = rat_dot(a1, omega.re);
    const Rat p12 = rat_dot(a1, omega.im);
    const RatVec a2 = rat_row_times_gram(omega.im, omega.lattice.gram);
    const Rat p22 = rat_dot(a2, omega.im);
    return p11 > 0 && p11 * p22 - p12 * p12 > 0;
}

P0Verdict p_zero_check(const ChargeVector& omega) {
    require_signature_2k(omega.lattice);
    P0Verdict out;
    if (!positive_plane_check(omega)) {
        out.kind = P0Verdict::Kind::NotPositivePlane;
        return out;
    }
    const IntMatrix perp = integer_kernel(plane_pairing_matrix(omega));
    if (perp.rows() == 0) {
        out.kind = P0Verdict::Kind::InP0;
        return out;
    }
    const Sublattice sub{omega.lattice, perp};
    const IntMatrix induced = sub.induced_gram();
    // The plane carries both positive directions, so the orthogonal part is
    // negative definite and the (-2)-class search below is complete.
    const IntMatrix neg = Int(-1) * induced;
    std::vector<IntVec> deltas;
    for (const IntVec& x : enumerate_quadratic_leq(gram_to_rat(neg), Rat(2)))
        if (dot(row_times_matrix(x, neg), x) == 2) {
            IntVec ambient = row_times_matrix(x, perp);
            for (const Int& c : ambient)
                if (c != 0) {
                    if (c < 0)
                        for (Int& y : ambient) y = -y;
                    break;
                }
            deltas.push_back(std::move(ambient));
        }
    if (deltas.empty()) {
        out.kind = P0Verdict::Kind::InP0;
        return out;
    }
    std::sort(deltas.begin(), deltas.end());
    out.kind = P0Verdict::Kind::Excluded;
    out.delta = deltas.front();
    return out;
}

GammaSet gamma_set(const ChargeVector& omega, const Rat& c_bound) {
    if (c_bound < 0) throw std::invalid_argument("c bound must be nonnegative");
    require_signature_2k(omega.lattice);
    if (!positive_plane_check(omega))
        throw std::invalid_argument("gamma set requires a positive definite plane");

    const std::size_t n = omega.lattice.rank();
    const IntMatrix& g = omega.lattice.gram;
    const RatVec a1 = rat_row_times_gram(omega.re, g);
    const RatVec a2 = rat_row_times_gram(omega.im, g);
    const Rat p11 = rat_dot(a1, omega.re);           // <re,re>
    const Rat p12 = rat_dot(a1, omega.im);           // <re,im>
    const Rat p22 = rat_dot(a2, omega.im);           // <im,im>
    const Rat c = p12 / p11;                         // Gram-Schmidt coefficient
    const Rat b22 = p22 - p12 * p12 / p11;           // <u2,u2> after GS

    // Majorant Q(w) = 2*||proj_plane w||^2 - w^2, positive definite for
    // signature (2,k). With z1 = <re,w>, z2 = <im,w>:
    //   ||proj w||^2 = z1^2/p11 + (z2 - c z1)^2/b22.
    RatMat q(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        const Rat g2i = a2[i] - c * a1[i];
        for (std::size_t j = 0; j < n; ++j) {
            const Rat g2j = a2[j] - c * a1[j];
            q[i][j] = 2 * (a1[i] * a1[j] / p11 + g2i * g2j / b22) - Rat(g(i, j));
        }
    }
    // Member bound: |z1|, |z2| <= C gives
    //   ||proj w||^2 <= C^2 (1/p11 + (1+|c|)^2/b22),  Q(w) <= 2*that + 2.
    const Rat cabs = c < 0 ? Rat(-c) : c;
    const Rat c2 = c_bound * c_bound;
    const Rat budget = 2 * c2 * (Rat(1) / p11 + (1 + cabs) * (1 + cabs) / b22) + 2;

    GammaSet out{omega, c_bound, {}, true};
    for (const IntVec& w : enumerate_quadratic_leq(q, budget)) {
        if (omega.lattice.norm(w) < -2) continue;
        const Rat z1 = rat_dot_int(a1, w);
        const Rat z2 = rat_dot_int(a2, w);
        if (z1 * z1 + z2 * z2 > c2) continue;
        out.members.push_back(w);
    }
    return out;  // enumerate output is already sorted
}

Int genericity_bound(const GammaSet& gamma, const IntVec& rank_functional) {
    if (!gamma.complete)
        throw std::invalid_argument("genericity bound requires a complete gamma set");
    if (rank_functional.size() != gamma.omega.lattice.rank())
        throw std::invalid_argument("rank functional dimension mismatch");
    Int best = 0;
    for (const IntVec& w : gamma.members) {
        const Int v = boost::multiprecision::abs(dot(rank_functional, w));
        if (v > best) best = v;
    }
    return best + 1;
}

Lattice mukai_model_lattice(const Int& d) {
    IntMatrix g(3, 3);
    g(0, 2) = -1;
    g(2, 0) = -1;
    g(1, 1) = d;
    return Lattice{std::move(g), "H0+<" + d.str() + ">h+H4"};
}

ChargeVector exponential_charge(const Int& d, const Int& n) {
    if (n < 1) throw std::invalid_argument("exponential charge requires n >= 1");
    Lattice model = mukai_model_lattice(d);
    RatVec re{Rat(1), Rat(0), Rat(-(n * n * d)) / 2};
    RatVec im{Rat(0), Rat(n), Rat(0)};
    return make_charge_vector(std::move(model), std::move(re), std::move(im));
}

}  // namespace mukailat
