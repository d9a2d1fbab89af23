#include "mukailat/group_action.hpp"

#include <stdexcept>

namespace mukailat {

using boost::multiprecision::abs;

GroupAction make_group_action(Lattice lattice, std::vector<IntMatrix> generators) {
    return GroupAction{std::move(lattice), std::move(generators)};
}

ActionReport validate_action(const GroupAction& action) {
    ActionReport report;
    const std::size_t n = action.lattice.rank();
    for (std::size_t k = 0; k < action.generators.size(); ++k) {
        const IntMatrix& g = action.generators[k];
        if (g.rows() != n || g.cols() != n) {
            report.violations.push_back({k, "shape"});
            continue;
        }
        if (abs(determinant(g)) != 1) report.violations.push_back({k, "not_unimodular"});
        if (g * action.lattice.gram * g.transposed() != action.lattice.gram)
            report.violations.push_back({k, "not_isometry"});
    }
    report.valid = report.violations.empty();
    return report;
}

InvariantPair invariant_and_coinvariant(const GroupAction& action) {
    const ActionReport report = validate_action(action);
    if (!report.valid) {
        const ActionViolation& v = report.violations.front();
        throw std::invalid_argument("invalid action: generator " +
                                    std::to_string(v.generator_index) + " is " + v.kind);
    }
    if (determinant(action.lattice.gram) == 0)
        throw std::domain_error("invariant/coinvariant computation requires a "
                                "nondegenerate form");
    const std::size_t n = action.lattice.rank();
    // v is fixed iff v (g - id) = 0, i.e. (g - id)^T v^T = 0; stack over all
    // generators.
    IntMatrix stacked(action.generators.size() * n, n);
    for (std::size_t k = 0; k < action.generators.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Int e = action.generators[k](j, i);
                if (i == j) e -= 1;
                stacked(k * n + i, j) = e;
            }
    Sublattice invariant{action.lattice, integer_kernel(stacked)};
    Sublattice coinvariant = orthogonal_complement(invariant);
    return InvariantPair{std::move(invariant), std::move(coinvariant)};
}

Int picard_bound_from_action(const GroupAction& action,
                             const std::vector<IntVec>& invariant_classes) {
    for (std::size_t c = 0; c < invariant_classes.size(); ++c) {
        const IntVec& v = invariant_classes[c];
        if (v.size() != action.lattice.rank())
            throw std::invalid_argument("invariant class " + std::to_string(c) +
                                        " has the wrong dimension");
        for (std::size_t k = 0; k < action.generators.size(); ++k)
            if (row_times_matrix(v, action.generators[k]) != v)
                throw std::invalid_argument("class " + std::to_string(c) +
                                            " is not fixed by generator " +
                                            std::to_string(k));
    }
    return Int(invariant_and_coinvariant(action).coinvariant.rank());
}

bool k3_symplectic_order_allowed(const Int& n) {
    if (n < 1) throw std::invalid_argument("order must be at least 1");
    return n <= 8;
}

}  // namespace mukailat
