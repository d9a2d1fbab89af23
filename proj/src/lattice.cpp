#include "mukailat/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace mukailat {

using boost::multiprecision::abs;

Int Lattice::pairing(const IntVec& v, const IntVec& w) const {
    if (v.size() != rank() || w.size() != rank())
        throw std::invalid_argument("pairing dimension mismatch");
    return dot(row_times_matrix(v, gram), w);
}

Lattice make_lattice(IntMatrix gram, std::string name) {
    if (!gram.is_square()) throw std::invalid_argument("gram must be square");
    if (!gram.is_symmetric()) throw std::invalid_argument("gram must be symmetric");
    return Lattice{std::move(gram), std::move(name)};
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    return Lattice{direct_sum(a.gram, b.gram), {}};
}

Lattice twist(const Lattice& l, const Int& n) {
    return Lattice{n * l.gram, {}};
}

IntMatrix Sublattice::induced_gram() const {
    return basis * ambient.gram * basis.transposed();
}

Sublattice make_sublattice(Lattice ambient, IntMatrix basis) {
    if (basis.cols() != ambient.rank())
        throw std::invalid_argument("basis width must equal ambient rank");
    if (matrix_rank(basis) != basis.rows())
        throw std::invalid_argument("basis rows must be linearly independent");
    return Sublattice{std::move(ambient), std::move(basis)};
}

Signature gram_signature(const IntMatrix& gram) {
    const std::size_t n = gram.rows();
    RatMat a = gram_to_rat(gram);
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;

    Signature sig;
    while (!active.empty()) {
        // Prefer a nonzero diagonal pivot.
        std::size_t pivot = active.size();
        for (std::size_t ai = 0; ai < active.size(); ++ai)
            if (a[active[ai]][active[ai]] != 0) {
                pivot = ai;
                break;
            }
        if (pivot == active.size()) {
            // All diagonal entries vanish; a nonzero off-diagonal pair
            // (i,j) yields the pivot (v_i + v_j)^2 = 2 a_ij.
            std::size_t oi = 0, oj = 0;
            bool found = false;
            for (std::size_t ai = 0; ai < active.size() && !found; ++ai)
                for (std::size_t aj = ai + 1; aj < active.size() && !found; ++aj)
                    if (a[active[ai]][active[aj]] != 0) {
                        oi = active[ai];
                        oj = active[aj];
                        found = true;
                    }
            if (!found) {
                sig.zero += active.size();
                break;
            }
            for (std::size_t k = 0; k < n; ++k) a[oi][k] += a[oj][k];
            for (std::size_t k = 0; k < n; ++k) a[k][oi] += a[k][oj];
            for (std::size_t ai = 0; ai < active.size(); ++ai)
                if (active[ai] == oi) {
                    pivot = ai;
                    break;
                }
        }
        const std::size_t p = active[pivot];
        const Rat d = a[p][p];
        if (d > 0)
            ++sig.positive;
        else
            ++sig.negative;
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot));
        for (const std::size_t i : active)
            for (const std::size_t j : active)
                a[i][j] -= a[i][p] * a[p][j] / d;
        for (const std::size_t i : active) {
            a[i][p] = 0;
            a[p][i] = 0;
        }
    }
    return sig;
}

LatticeInvariants invariants(const Lattice& l) {
    LatticeInvariants inv;
    inv.rank = l.rank();
    inv.det = determinant(l.gram);
    inv.abs_det = abs(inv.det);
    inv.signature = gram_signature(l.gram);
    inv.even = true;
    for (std::size_t i = 0; i < l.rank(); ++i)
        if (l.gram(i, i) % 2 != 0) {
            inv.even = false;
            break;
        }
    inv.unimodular = inv.abs_det == 1;
    return inv;
}

DiscriminantGroup discriminant_group(const Lattice& l) {
    if (determinant(l.gram) == 0) throw std::domain_error("degenerate form");
    const SmithForm f = smith_normal_form(l.gram);
    DiscriminantGroup g;
    for (std::size_t i = 0; i < l.rank(); ++i)
        if (f.s(i, i) > 1) g.invariant_factors.push_back(f.s(i, i));
    return g;
}

namespace {

IntMatrix u_gram() { return IntMatrix{{0, 1}, {1, 0}}; }

IntMatrix a2_gram() { return IntMatrix{{2, -1}, {-1, 2}}; }

IntMatrix e8_gram() {
    return IntMatrix{{2, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0},
                     {0, -1, 2, -1, 0, 0, 0, 0}, {0, 0, -1, 2, -1, 0, 0, 0},
                     {0, 0, 0, -1, 2, -1, 0, -1}, {0, 0, 0, 0, -1, 2, -1, 0},
                     {0, 0, 0, 0, 0, -1, 2, 0},  {0, 0, 0, 0, -1, 0, 0, 2}};
}

}  // namespace

Lattice make_standard(StandardLattice name, const Int& twist_by, std::size_t copies,
                      const Int& rank1_n) {
    if (copies == 0) throw std::invalid_argument("copies must be at least 1");
    IntMatrix block;
    std::string label;
    switch (name) {
        case StandardLattice::U:
            block = u_gram();
            label = "U";
            break;
        case StandardLattice::A2:
            block = a2_gram();
            label = "A2";
            break;
        case StandardLattice::E8:
            block = e8_gram();
            label = "E8";
            break;
        case StandardLattice::E8Neg:
            block = Int(-1) * e8_gram();
            label = "E8(-1)";
            break;
        case StandardLattice::Rank1:
            if (rank1_n == 0) throw std::invalid_argument("rank-1 lattice requires nonzero n");
            block = IntMatrix(1, 1);
            block(0, 0) = rank1_n;
            label = "<" + rank1_n.str() + ">";
            break;
        case StandardLattice::Mukai24: {
            IntMatrix m = u_gram();
            for (int i = 0; i < 3; ++i) m = direct_sum(m, u_gram());
            const IntMatrix e8n = Int(-1) * e8_gram();
            m = direct_sum(direct_sum(m, e8n), e8n);
            block = std::move(m);
            label = "Mukai24";
            break;
        }
    }
    if (twist_by != 1) {
        block = twist_by * block;
        label += "(" + twist_by.str() + ")";
    }
    IntMatrix g = block;
    for (std::size_t i = 1; i < copies; ++i) g = direct_sum(g, block);
    if (copies > 1) label += "^" + std::to_string(copies);
    return Lattice{std::move(g), std::move(label)};
}

Sublattice orthogonal_complement(const Sublattice& s) {
    if (determinant(s.ambient.gram) == 0)
        throw std::domain_error("orthogonal complement requires nondegenerate ambient form");
    // x is orthogonal to the sublattice iff (basis * G) x^T = 0.
    const IntMatrix pairings = s.basis * s.ambient.gram;
    return Sublattice{s.ambient, integer_kernel(pairings)};
}

Sublattice saturate(const Sublattice& s) {
    // Q-span of the rows = orthogonal complement (standard dot product) of
    // the integer kernel of the basis; two kernels give the saturation.
    return Sublattice{s.ambient, integer_kernel(integer_kernel(s.basis))};
}

Int saturation_index(const IntMatrix& basis) {
    const SmithForm f = smith_normal_form(basis);
    Int idx = 1;
    const std::size_t bound = std::min(basis.rows(), basis.cols());
    for (std::size_t i = 0; i < bound; ++i)
        if (f.s(i, i) != 0) idx *= f.s(i, i);
    return idx;
}

bool is_primitive(const Sublattice& s) { return saturation_index(s.basis) == 1; }

RatMat gram_to_rat(const IntMatrix& gram) {
    RatMat q(gram.rows(), RatVec(gram.cols()));
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = 0; j < gram.cols(); ++j) q[i][j] = Rat(gram(i, j));
    return q;
}

NormVectors vectors_of_norm(const Lattice& l, const Int& n, const Int& box_bound) {
    if (box_bound < 0) throw std::invalid_argument("box bound must be nonnegative");
    const Signature sig = gram_signature(l.gram);
    const bool pos_def = sig.negative == 0 && sig.zero == 0;
    const bool neg_def = sig.positive == 0 && sig.zero == 0;

    NormVectors out;
    if (pos_def || neg_def) {
        out.complete = true;
        const Int target = neg_def ? Int(-n) : n;
        if (target < 0) return out;
        IntMatrix g = neg_def ? Int(-1) * l.gram : l.gram;
        for (const IntVec& v : enumerate_quadratic_leq(gram_to_rat(g), Rat(target)))
            if (dot(row_times_matrix(v, g), v) == target) out.vectors.push_back(v);
        return out;
    }

    if (box_bound == 0) throw std::invalid_argument("bound required");
    out.complete = false;
    const std::size_t rank = l.rank();
    IntVec v(rank, -box_bound);
    for (;;) {
        if (l.norm(v) == n) out.vectors.push_back(v);
        std::size_t i = rank;
        while (i > 0 && v[i - 1] == box_bound) v[--i] = -box_bound;
        if (i == 0) break;
        ++v[i - 1];
    }
    std::sort(out.vectors.begin(), out.vectors.end());
    return out;
}

}  // namespace mukailat
