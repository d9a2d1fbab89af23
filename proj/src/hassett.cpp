#include "mukailat/hassett.hpp"

#include <stdexcept>

namespace mukailat {

using boost::multiprecision::abs;

bool condition_star(const Int& d) {
    if (d <= 6) return false;
    const Int r = d % 6;
    return r == 0 || r == 2;
}

StarStarResult condition_star_star(const Int& d) {
    if (d <= 0) throw std::invalid_argument("condition (**) requires d >= 1");
    std::optional<Int> witness;
    const auto consider = [&](const Int& w) {
        if (!witness || w < *witness) witness = w;
    };
    if (d % 4 == 0) consider(Int(4));
    if (d % 9 == 0) consider(Int(9));
    // Smallest odd prime p = 2 (mod 3) dividing d, by trial division.
    Int rest = d;
    while (rest % 2 == 0) rest /= 2;
    for (Int p = 3; p * p <= rest; p += 2) {
        if (rest % p != 0) continue;
        if (p % 3 == 2) {
            consider(p);
            break;
        }
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1 && rest % 3 == 2) consider(rest);  // rest is odd after the 2s
    return StarStarResult{!witness.has_value(), witness};
}

HassettVerdict hassett_check(const Int& d) {
    const StarStarResult ss = condition_star_star(d);
    HassettVerdict v;
    v.d = d;
    v.star = condition_star(d);
    v.star_star = ss.ok;
    v.admissible = v.star && v.star_star;
    v.witness = ss.witness;
    return v;
}

std::vector<Int> admissible_discriminants(const Int& max) {
    if (max < 1) throw std::invalid_argument("max must be at least 1");
    std::vector<Int> out;
    for (Int d = 8; d <= max; d += 2) {  // (*) forces d even and d > 6
        if (!condition_star(d)) continue;
        if (condition_star_star(d).ok) out.push_back(d);
    }
    return out;
}

Lattice labeled_k_gram(const Int& d) {
    if (d <= 0 || (d % 6 != 0 && d % 6 != 2))
        throw std::invalid_argument("no rank-2 label with disc " + d.str() +
                                    " containing h^2 = 3");
    IntMatrix g(2, 2);
    g(0, 0) = 3;
    if (d % 6 == 0) {
        g(0, 1) = 0;
        g(1, 0) = 0;
        g(1, 1) = d / 3;
    } else {
        g(0, 1) = 1;
        g(1, 0) = 1;
        g(1, 1) = (d + 1) / 3;
    }
    return Lattice{std::move(g), "K(" + d.str() + ")"};
}

DiscChainReport check_disc_chain(const Sublattice& k) {
    if (abs(determinant(k.ambient.gram)) != 1)
        throw std::invalid_argument("disc chain requires a unimodular ambient lattice");
    const Int idx = saturation_index(k.basis);
    if (idx != 1)
        throw std::invalid_argument("not primitive, saturation index " + idx.str());
    const Int det_k = determinant(k.induced_gram());
    if (det_k == 0) throw std::domain_error("degenerate induced form");
    const Sublattice comp = orthogonal_complement(k);
    DiscChainReport r;
    r.abs_det_sublattice = abs(det_k);
    r.abs_det_complement = abs(determinant(comp.induced_gram()));
    r.equal = r.abs_det_sublattice == r.abs_det_complement;
    return r;
}

}  // namespace mukailat
