#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "semispec/corpus.hpp"
#include "semispec/semidistance.hpp"

using namespace semispec;

TEST_CASE("commutator sequence of a commuting pair collapses") {
    const Mat a = Mat::diagonal({Cx{1, 0}, Cx{2, 0}});
    const CommutatorSequence seq = commutator_sequence(a, a, 50);
    CHECK(seq.hit_zero);
    CHECK(seq.zero_index == 1);
    const DefinitionEstimate est = varrho_definition(seq);
    CHECK(est.estimate == 0.0);
    CHECK(est.uncertainty == 0.0);
}

TEST_CASE("commuting pair: limit equals the spectral radius of the difference") {
    // Same eigenbasis, so C^n 1 = (a-b)^n and the limit is r(a-b) = 3.
    const Mat a = Mat::diagonal({Cx{1, 0}, Cx{3, 0}});
    const Mat b = Mat::diagonal({Cx{2, 0}, Cx{0, 0}});
    const CommutatorSequence seq = commutator_sequence(a, b, 200);
    const DefinitionEstimate est = varrho_definition(seq);
    CHECK(std::abs(est.estimate - 3.0) <= std::max(0.02 * 3.0, est.uncertainty));

    const GeomResult geo = varrho_geometric(a, b);
    CHECK(geo.value == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(geo.breakdown.sup_branch == SupBranch::PairSet);
    REQUIRE(geo.breakdown.active_pairs.size() == 2);
}

TEST_CASE("sequence window bookkeeping") {
    const PairSpec p = free_algebra_pair();
    const CommutatorSequence seq = commutator_sequence(p.a, p.b, 200);
    const DefinitionEstimate est = varrho_definition(seq);
    CHECK(est.window_begin >= 100);
    CHECK(est.window_end == 200);
    CHECK(est.uncertainty > 0.0);
    CHECK(std::abs(est.estimate - est.max_based) <= est.uncertainty);

    CHECK_THROWS_AS(varrho_definition(commutator_sequence(p.a, p.b, 8)), Error);
}

TEST_CASE("asymmetry of the one-sided limit on the two-idempotent pair") {
    const PairSpec p = free_algebra_pair();

    const GeomResult fwd = varrho_geometric(p.a, p.b);
    const GeomResult rev = varrho_geometric(p.b, p.a);
    CHECK(fwd.value == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rev.value == doctest::Approx(1.0).epsilon(1e-10));

    const DefinitionEstimate dfwd = varrho_definition(commutator_sequence(p.a, p.b, 400));
    const DefinitionEstimate drev = varrho_definition(commutator_sequence(p.b, p.a, 400));
    CHECK(std::abs(dfwd.estimate - 0.5) <= std::max(0.01, dfwd.uncertainty));
    CHECK(std::abs(drev.estimate - 1.0) <= std::max(0.02, drev.uncertainty));
}

TEST_CASE("triangular truncation pair: geometric values in both orders") {
    // T = diag(1, 1/2), S with eigenvalues 1 and 1/4 sharing the leading
    // eigenvector of T: the one-sided limits are 1/2 and 3/4.
    const PairSpec p = l1_discretization(2);
    CHECK(varrho_geometric(p.a, p.b).value == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(varrho_geometric(p.b, p.a).value == doctest::Approx(0.75).epsilon(1e-9));

    const DefinitionEstimate d = varrho_definition(commutator_sequence(p.a, p.b, 400));
    CHECK(std::abs(d.estimate - 0.5) <= std::max(0.025, d.uncertainty));
}

TEST_CASE("zero-cluster route agrees with the plain route when nothing is swallowed") {
    const PairSpec p = l1_discretization(4);
    REQUIRE(p.zero_radius.has_value());
    const double plain = varrho_geometric(p.a, p.b).value;
    const GeomResult cf = varrho_charf(p.a, p.b, *p.zero_radius);
    CHECK(cf.value == doctest::Approx(plain).epsilon(1e-9));
    CHECK(plain == doctest::Approx(1.0 - 0.25).epsilon(1e-9));
}

TEST_CASE("zero-cluster route: swallowed moduli enter through the mixed sets") {
    // a has a tiny eigenvalue inside the zero cluster; its pairing with the
    // spectral point of b at modulus 2 must survive as the |beta| branch.
    const Mat a = Mat::diagonal({Cx{1, 0}, Cx{1e-6, 0}});
    const Mat b = Mat::diagonal({Cx{1, 0}, Cx{2, 0}});
    const GeomResult cf = varrho_charf(a, b, 1e-3);
    CHECK(cf.value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(!cf.breakdown.w_beta.empty());
}

TEST_CASE("quasinilpotent perturbation is invisible") {
    // Jordan block vs its semisimple part: equivalent, distance zero.
    const Mat j(2, {Cx{1, 0}, Cx{1, 0}, Cx{0, 0}, Cx{1, 0}});
    const Mat id = Mat::identity(2);
    CHECK(varrho_geometric(j, id).value == doctest::Approx(0.0).epsilon(1e-9));

    const QeResult qe = quasinilpotent_equivalent(j, id, 1e-7);
    CHECK(qe.verdict);
    CHECK(qe.failure_reason.empty());
    CHECK(qe.semisimple_defect < 1e-8);
    REQUIRE(qe.matches.size() == 1);
    CHECK(qe.matches[0].projection_defect < 1e-8);
}

TEST_CASE("equal spectra with different eigenspaces are not equivalent") {
    const Mat a = Mat::diagonal({Cx{1, 0}, Cx{2, 0}});
    const Mat b = Mat::diagonal({Cx{2, 0}, Cx{1, 0}});
    const QeResult qe = quasinilpotent_equivalent(a, b, 1e-7);
    CHECK_FALSE(qe.verdict);
    CHECK(!qe.failure_reason.empty());
    CHECK(qe.witness_distance == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("mismatched spectra fail with the point gap as witness") {
    const Mat a = Mat::diagonal({Cx{1, 0}, Cx{5, 0}});
    const Mat b = Mat::diagonal({Cx{1, 0}, Cx{2, 0}});
    const QeResult qe = quasinilpotent_equivalent(a, b, 1e-7);
    CHECK_FALSE(qe.verdict);
    CHECK(qe.witness_distance == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("definition route respects the norm choice only transiently") {
    // The limit is norm-independent; the three estimates must agree within
    // their combined uncertainties.
    const PairSpec p = free_algebra_pair();
    double est[3], unc[3];
    const NormKind kinds[3] = {NormKind::Frobenius, NormKind::One, NormKind::Inf};
    for (int k = 0; k < 3; ++k) {
        const DefinitionEstimate d = varrho_definition(commutator_sequence(p.b, p.a, 400, kinds[k]));
        est[k] = d.estimate;
        unc[k] = d.uncertainty;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            CHECK(std::abs(est[i] - est[j]) <= unc[i] + unc[j] + 1e-6);
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(commutator_sequence(Mat::identity(2), Mat::identity(3), 10), Error);
    CHECK_THROWS_AS(varrho_geometric(Mat::identity(2), Mat::identity(3)), Error);
}
