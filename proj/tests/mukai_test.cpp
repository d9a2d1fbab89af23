#include <doctest.h>

#include "mukailat/mukai.hpp"

using namespace mukailat;
using boost::multiprecision::abs;

TEST_CASE("mukai pairing formula") {
    const IntMatrix empty_ns(0, 0);
    CHECK(mukai_pairing({1, {}, 0}, {0, {}, 1}, empty_ns) == -1);
    CHECK(mukai_pairing({0, {}, 1}, {0, {}, 1}, empty_ns) == 0);

    const IntMatrix ns{{4, 1}, {1, -2}};
    const MukaiVector v{0, {1, 2}, 0};
    const MukaiVector w{0, {3, -1}, 0};
    // Pure NS classes reduce to the NS pairing.
    const Lattice ns_lattice{ns, ""};
    CHECK(mukai_pairing(v, w, ns) == ns_lattice.pairing(v.c, w.c));

    CHECK_THROWS_AS(mukai_pairing({1, {1}, 0}, {0, {}, 1}, empty_ns), std::invalid_argument);
}

TEST_CASE("the A2 embedding in the rank-24 Mukai lattice") {
    const A2Embedding e = embed_a2_in_mukai();
    CHECK(e.sublattice.induced_gram() == IntMatrix{{2, -1}, {-1, 2}});
    CHECK(is_primitive(e.sublattice));
    CHECK(saturate(e.sublattice).basis == hermite_normal_form(e.sublattice.basis));

    const Sublattice comp = orthogonal_complement(e.sublattice);
    CHECK(comp.rank() == 22);
    const Lattice comp_lattice{comp.induced_gram(), ""};
    const LatticeInvariants inv = invariants(comp_lattice);
    CHECK(inv.signature == Signature{2, 20, 0});
    CHECK(inv.abs_det == 3);
}

TEST_CASE("fano mukai vector") {
    const A2Embedding e = embed_a2_in_mukai();
    const FanoVector fano = fano_mukai_vector(e.basis);
    CHECK(fano.norm == 2);

    const Lattice mukai = make_standard(StandardLattice::Mukai24);
    CHECK(mukai.pairing(e.basis.lambda1, e.basis.lambda1) == 2);

    // A pair with Gram diag(2,2) is not an A2 basis.
    LambdaBasis bad = e.basis;
    bad.lambda2 = IntVec(24, Int(0));
    bad.lambda2[4] = 1;  // e3 + f3 has norm 2 but pairs 0 with lambda1
    bad.lambda2[5] = 1;
    CHECK_THROWS_AS(fano_mukai_vector(bad), std::invalid_argument);
}

TEST_CASE("L_K construction") {
    IntVec kappa(24, Int(0));
    kappa[4] = 1;  // e3 + f3, norm 2
    kappa[5] = 1;
    const Sublattice lk = build_l_k(kappa);
    CHECK(lk.rank() == 3);
    CHECK(abs(determinant(lk.induced_gram())) == 6);

    IntVec kappa14(24, Int(0));
    kappa14[4] = 1;  // e3 + 7 f3, norm 14
    kappa14[5] = 7;
    const Sublattice lk14 = build_l_k(kappa14);
    CHECK(lk14.rank() == 3);
    CHECK(abs(determinant(lk14.induced_gram())) == 42);

    // kappa inside A2 violates the orthogonality precondition.
    const A2Embedding e = embed_a2_in_mukai();
    CHECK_THROWS_WITH_AS(build_l_k(e.basis.lambda1), "kappa must lie in A2-perp",
                         std::invalid_argument);
    CHECK_THROWS_AS(build_l_k(IntVec(24, Int(0))), std::invalid_argument);
}

TEST_CASE("|det L_K| * index^2 == 3 * kappa^2 for kappa in A2-perp") {
    const Lattice mukai = make_standard(StandardLattice::Mukai24);
    const A2Embedding a2 = embed_a2_in_mukai();
    // A few handmade kappas orthogonal to A2, including non-primitive spans.
    std::vector<IntVec> kappas;
    for (int t = 1; t <= 4; ++t) {
        IntVec k(24, Int(0));
        k[4] = t;
        k[5] = 2 * t - 1;
        kappas.push_back(k);
        IntVec k2(24, Int(0));
        k2[6] = t;
        k2[7] = -t;
        k2[8] = 1;
        kappas.push_back(k2);
    }
    for (const IntVec& kappa : kappas) {
        const Int norm = mukai.pairing(kappa, kappa);
        if (norm == 0) continue;
        const Sublattice lk = build_l_k(kappa);
        IntMatrix span(3, 24);
        span.set_row(0, a2.basis.lambda1);
        span.set_row(1, a2.basis.lambda2);
        span.set_row(2, kappa);
        const Int idx = saturation_index(span);
        CHECK(abs(determinant(lk.induced_gram())) * idx * idx == 3 * abs(norm));
    }
}

TEST_CASE("kuznetsov picard number") {
    CHECK(kuznetsov_picard_number(2) == 0);
    CHECK(kuznetsov_picard_number(3) == 1);
    CHECK(kuznetsov_picard_number(24) == 22);
    CHECK_THROWS_AS(kuznetsov_picard_number(1), std::invalid_argument);
    // Rank-3 labeling lattices sit exactly at the special threshold.
    IntVec kappa(24, Int(0));
    kappa[4] = 1;
    kappa[5] = 1;
    CHECK(kuznetsov_picard_number(build_l_k(kappa).rank()) == 1);
}

TEST_CASE("hyperbolic plane detection") {
    const Lattice u14 = direct_sum(make_standard(StandardLattice::U),
                                   make_standard(StandardLattice::Rank1, 1, 1, 14));
    const UPlaneSearch yes = find_hyperbolic_plane(u14, 10);
    REQUIRE(yes.verdict == UPlaneSearch::Verdict::Yes);
    CHECK(yes.e == IntVec{1, 0, 0});
    CHECK(yes.f == IntVec{0, 1, 0});
    CHECK(u14.norm(yes.e) == 0);
    CHECK(u14.norm(yes.f) == 0);
    CHECK(u14.pairing(yes.e, yes.f) == 1);

    const UPlaneSearch no_def = find_hyperbolic_plane(make_standard(StandardLattice::A2), 10);
    CHECK(no_def.verdict == UPlaneSearch::Verdict::No);
    CHECK(no_def.reason == "definite");

    const UPlaneSearch no_content = find_hyperbolic_plane(make_standard(StandardLattice::U, 2), 10);
    CHECK(no_content.verdict == UPlaneSearch::Verdict::No);
    CHECK(no_content.reason == "content 2");

    // Indefinite, content 1, but no isotropic pair within a tiny bound:
    // exhausted search stays honest.
    const Lattice odd{IntMatrix{{1, 0}, {0, -3}}, ""};
    const UPlaneSearch unknown = find_hyperbolic_plane(odd, 1);
    CHECK(unknown.verdict == UPlaneSearch::Verdict::Unknown);

    // U in a skewed basis: the standard-pair scan fails, the general
    // isotropic search has to find the witness.
    const Lattice skewed{IntMatrix{{2, 1}, {1, 0}}, ""};
    const UPlaneSearch yes2 = find_hyperbolic_plane(skewed, 4);
    REQUIRE(yes2.verdict == UPlaneSearch::Verdict::Yes);
    CHECK(skewed.norm(yes2.e) == 0);
    CHECK(skewed.norm(yes2.f) == 0);
    CHECK(skewed.pairing(yes2.e, yes2.f) == 1);
}
