#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mukailat/charges.hpp"
#include "mukailat/group_action.hpp"
#include "mukailat/hassett.hpp"
#include "mukailat/mukai.hpp"

namespace py = pybind11;
using namespace mukailat;

namespace {

// Arbitrary-precision values cross the boundary as decimal strings; python
// ints of any size are accepted.

Int int_from_py(const py::handle& h) {
    return Int(py::str(h).cast<std::string>());
}

py::int_ int_to_py(const Int& v) {
    PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Rat rat_from_py(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rat(int_from_py(h));
    return parse_rational(py::str(h).cast<std::string>());
}

IntVec vec_from_py(const py::sequence& seq) {
    IntVec v;
    v.reserve(seq.size());
    for (const auto& e : seq) v.push_back(int_from_py(e));
    return v;
}

py::list vec_to_py(const IntVec& v) {
    py::list out;
    for (const Int& x : v) out.append(int_to_py(x));
    return out;
}

RatVec rvec_from_py(const py::sequence& seq) {
    RatVec v;
    v.reserve(seq.size());
    for (const auto& e : seq) v.push_back(rat_from_py(e));
    return v;
}

IntMatrix mat_from_py(const py::sequence& seq) {
    std::vector<IntVec> rows;
    std::size_t cols = 0;
    for (const auto& r : seq) {
        IntVec row = vec_from_py(r.cast<py::sequence>());
        if (!rows.empty() && row.size() != cols)
            throw std::invalid_argument("ragged matrix rows");
        cols = row.size();
        rows.push_back(std::move(row));
    }
    return matrix_from_rows(rows, cols);
}

py::list mat_to_py(const IntMatrix& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.append(vec_to_py(m.row(i)));
    return out;
}

Lattice lattice_from_py(const py::sequence& gram) {
    return make_lattice(mat_from_py(gram));
}

py::dict invariants_to_py(const LatticeInvariants& inv) {
    py::dict d;
    d["rank"] = inv.rank;
    d["det"] = int_to_py(inv.det);
    d["abs_det"] = int_to_py(inv.abs_det);
    d["signature"] = py::make_tuple(inv.signature.positive, inv.signature.negative,
                                    inv.signature.zero);
    d["even"] = inv.even;
    d["unimodular"] = inv.unimodular;
    return d;
}

ChargeVector charge_from_py(const py::sequence& gram, const py::sequence& re,
                            const py::sequence& im) {
    return make_charge_vector(lattice_from_py(gram), rvec_from_py(re), rvec_from_py(im));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact integer-lattice computations: Smith/Hermite forms, Mukai "
              "lattices, Hassett discriminants, central charges, coinvariants";

    m.def("smith_normal_form", [](const py::sequence& mat) {
        const SmithForm f = smith_normal_form(mat_from_py(mat));
        return py::make_tuple(mat_to_py(f.s), mat_to_py(f.u), mat_to_py(f.v));
    }, "Returns (s, u, v) with u*m*v == s diagonal, divisibility-ordered");

    m.def("hermite_normal_form",
          [](const py::sequence& mat) { return mat_to_py(hermite_normal_form(mat_from_py(mat))); });

    m.def("integer_kernel",
          [](const py::sequence& mat) { return mat_to_py(integer_kernel(mat_from_py(mat))); },
          "Saturated basis of {x : m x^T = 0}, rows in Hermite normal form");

    m.def("determinant",
          [](const py::sequence& mat) { return int_to_py(determinant(mat_from_py(mat))); });

    m.def("make_standard", [](const std::string& name, const py::handle& twist,
                              std::size_t copies, const py::handle& n) {
        StandardLattice which;
        if (name == "U") which = StandardLattice::U;
        else if (name == "A2") which = StandardLattice::A2;
        else if (name == "E8") which = StandardLattice::E8;
        else if (name == "E8-") which = StandardLattice::E8Neg;
        else if (name == "rank1") which = StandardLattice::Rank1;
        else if (name == "mukai24") which = StandardLattice::Mukai24;
        else throw std::invalid_argument("unknown standard lattice: " + name);
        return mat_to_py(make_standard(which, int_from_py(twist), copies, int_from_py(n)).gram);
    }, py::arg("name"), py::arg("twist") = 1, py::arg("copies") = 1, py::arg("n") = 1);

    m.def("invariants", [](const py::sequence& gram) {
        return invariants_to_py(invariants(lattice_from_py(gram)));
    });

    m.def("discriminant_group", [](const py::sequence& gram) {
        py::list out;
        for (const Int& f : discriminant_group(lattice_from_py(gram)).invariant_factors)
            out.append(int_to_py(f));
        return out;
    });

    m.def("orthogonal_complement", [](const py::sequence& gram, const py::sequence& basis) {
        const Sublattice s = make_sublattice(lattice_from_py(gram), mat_from_py(basis));
        return mat_to_py(orthogonal_complement(s).basis);
    });

    m.def("saturate", [](const py::sequence& gram, const py::sequence& basis) {
        const Sublattice s = make_sublattice(lattice_from_py(gram), mat_from_py(basis));
        return mat_to_py(saturate(s).basis);
    });

    m.def("vectors_of_norm", [](const py::sequence& gram, const py::handle& n,
                                const py::handle& box_bound) {
        const NormVectors r =
            vectors_of_norm(lattice_from_py(gram), int_from_py(n), int_from_py(box_bound));
        py::list vecs;
        for (const IntVec& v : r.vectors) vecs.append(vec_to_py(v));
        return py::make_tuple(vecs, r.complete);
    }, py::arg("gram"), py::arg("n"), py::arg("box_bound") = 0);

    m.def("condition_star", [](const py::handle& d) { return condition_star(int_from_py(d)); });

    m.def("hassett_check", [](const py::handle& d) {
        const HassettVerdict v = hassett_check(int_from_py(d));
        py::dict out;
        out["d"] = int_to_py(v.d);
        out["star"] = v.star;
        out["star_star"] = v.star_star;
        out["admissible"] = v.admissible;
        if (v.witness) out["witness"] = int_to_py(*v.witness);
        return out;
    });

    m.def("admissible_discriminants", [](const py::handle& max) {
        py::list out;
        for (const Int& d : admissible_discriminants(int_from_py(max))) out.append(int_to_py(d));
        return out;
    });

    m.def("labeled_k_gram",
          [](const py::handle& d) { return mat_to_py(labeled_k_gram(int_from_py(d)).gram); });

    m.def("mukai_a2_embedding", [] {
        const A2Embedding e = embed_a2_in_mukai();
        py::dict out;
        out["basis"] = mat_to_py(e.sublattice.basis);
        out["induced_gram"] = mat_to_py(e.sublattice.induced_gram());
        out["lambda1"] = vec_to_py(e.basis.lambda1);
        out["lambda2"] = vec_to_py(e.basis.lambda2);
        return out;
    });

    m.def("build_l_k", [](const py::sequence& kappa) {
        const Sublattice lk = build_l_k(vec_from_py(kappa));
        py::dict out;
        out["basis"] = mat_to_py(lk.basis);
        out["induced_gram"] = mat_to_py(lk.induced_gram());
        return out;
    });

    m.def("kuznetsov_picard_number",
          [](const py::handle& rank) { return int_to_py(kuznetsov_picard_number(int_from_py(rank))); });

    m.def("find_hyperbolic_plane", [](const py::sequence& gram, const py::handle& bound) {
        const UPlaneSearch r = find_hyperbolic_plane(lattice_from_py(gram), int_from_py(bound));
        py::dict out;
        switch (r.verdict) {
            case UPlaneSearch::Verdict::Yes:
                out["verdict"] = "Yes";
                out["e"] = vec_to_py(r.e);
                out["f"] = vec_to_py(r.f);
                break;
            case UPlaneSearch::Verdict::No:
                out["verdict"] = "No";
                out["reason"] = r.reason;
                break;
            case UPlaneSearch::Verdict::Unknown:
                out["verdict"] = "Unknown";
                break;
        }
        return out;
    }, py::arg("gram"), py::arg("bound") = 5);

    m.def("central_charge", [](const py::sequence& gram, const py::sequence& re,
                               const py::sequence& im, const py::sequence& w) {
        const GaussianRat z = central_charge(charge_from_py(gram, re, im), vec_from_py(w));
        return py::make_tuple(rat_to_string(z.re), rat_to_string(z.im));
    });

    m.def("positive_plane_check", [](const py::sequence& gram, const py::sequence& re,
                                     const py::sequence& im) {
        return positive_plane_check(charge_from_py(gram, re, im));
    });

    m.def("p_zero_check", [](const py::sequence& gram, const py::sequence& re,
                             const py::sequence& im) {
        const P0Verdict v = p_zero_check(charge_from_py(gram, re, im));
        py::dict out;
        switch (v.kind) {
            case P0Verdict::Kind::InP0: out["verdict"] = "InP0"; break;
            case P0Verdict::Kind::Excluded:
                out["verdict"] = "Excluded";
                out["delta"] = vec_to_py(v.delta);
                break;
            case P0Verdict::Kind::NotPositivePlane: out["verdict"] = "NotPositivePlane"; break;
        }
        return out;
    });

    m.def("gamma_set", [](const py::sequence& gram, const py::sequence& re,
                          const py::sequence& im, const py::handle& c_bound) {
        const GammaSet g = gamma_set(charge_from_py(gram, re, im), rat_from_py(c_bound));
        py::list members;
        for (const IntVec& w : g.members) members.append(vec_to_py(w));
        return py::make_tuple(members, g.complete);
    });

    m.def("genericity_bound", [](const py::sequence& gram, const py::sequence& re,
                                 const py::sequence& im, const py::handle& c_bound,
                                 const py::sequence& functional) {
        const GammaSet g = gamma_set(charge_from_py(gram, re, im), rat_from_py(c_bound));
        return int_to_py(genericity_bound(g, vec_from_py(functional)));
    });

    m.def("mukai_model_gram",
          [](const py::handle& d) { return mat_to_py(mukai_model_lattice(int_from_py(d)).gram); });

    m.def("exponential_charge", [](const py::handle& d, const py::handle& n) {
        const ChargeVector c = exponential_charge(int_from_py(d), int_from_py(n));
        py::list re, im;
        for (const Rat& x : c.re) re.append(rat_to_string(x));
        for (const Rat& x : c.im) im.append(rat_to_string(x));
        return py::make_tuple(mat_to_py(c.lattice.gram), re, im);
    }, py::arg("d"), py::arg("n") = 1);

    m.def("validate_action", [](const py::sequence& gram, const py::sequence& gens) {
        std::vector<IntMatrix> generators;
        for (const auto& g : gens) generators.push_back(mat_from_py(g.cast<py::sequence>()));
        const ActionReport r =
            validate_action(make_group_action(lattice_from_py(gram), std::move(generators)));
        py::list violations;
        for (const ActionViolation& v : r.violations)
            violations.append(py::make_tuple(v.generator_index, v.kind));
        return py::make_tuple(r.valid, violations);
    });

    m.def("invariant_and_coinvariant", [](const py::sequence& gram, const py::sequence& gens) {
        std::vector<IntMatrix> generators;
        for (const auto& g : gens) generators.push_back(mat_from_py(g.cast<py::sequence>()));
        const InvariantPair p = invariant_and_coinvariant(
            make_group_action(lattice_from_py(gram), std::move(generators)));
        py::dict out;
        out["invariant_basis"] = mat_to_py(p.invariant.basis);
        out["invariant_gram"] = mat_to_py(p.invariant.induced_gram());
        out["coinvariant_basis"] = mat_to_py(p.coinvariant.basis);
        out["coinvariant_gram"] = mat_to_py(p.coinvariant.induced_gram());
        return out;
    });

    m.def("picard_bound_from_action", [](const py::sequence& gram, const py::sequence& gens,
                                         const py::sequence& classes) {
        std::vector<IntMatrix> generators;
        for (const auto& g : gens) generators.push_back(mat_from_py(g.cast<py::sequence>()));
        std::vector<IntVec> fixed;
        for (const auto& c : classes) fixed.push_back(vec_from_py(c.cast<py::sequence>()));
        return int_to_py(picard_bound_from_action(
            make_group_action(lattice_from_py(gram), std::move(generators)), fixed));
    });

    m.def("k3_symplectic_order_allowed",
          [](const py::handle& n) { return k3_symplectic_order_allowed(int_from_py(n)); });
}
