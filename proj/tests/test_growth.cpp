#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "semispec/corpus.hpp"
#include "semispec/growth.hpp"

using namespace semispec;

TEST_CASE("commuting pair: order one, type equals the spectral gap") {
    // C^n 1 = (a-b)^n with r(a-b) = 2, so lambda -> e^(lambda a) e^(-lambda b)
    // has order 1 and type 2.
    const Mat a = Mat::diagonal({Cx{2, 0}, Cx{-1, 0}});
    const Mat b = Mat::diagonal({Cx{0, 0}, Cx{-1, 0}});
    const CommutatorSequence seq = commutator_sequence(a, b, 400);
    const GrowthEstimate g = growth_estimate(seq);
    CHECK(!g.degenerate);
    CHECK(g.type_applicable);
    CHECK(std::abs(g.order - 1.0) <= 0.1);
    CHECK(std::abs(g.type - 2.0) <= 0.02 * 2.0);
}

TEST_CASE("two-idempotent pair: type matches the one-sided limits") {
    const PairSpec p = free_algebra_pair();
    const GrowthEstimate fwd = growth_estimate(commutator_sequence(p.a, p.b, 400));
    const GrowthEstimate rev = growth_estimate(commutator_sequence(p.b, p.a, 400));
    CHECK(std::abs(fwd.order - 1.0) <= 0.1);
    CHECK(std::abs(rev.order - 1.0) <= 0.1);
    CHECK(std::abs(fwd.type - 0.5) <= 0.02 * 0.5 + 1e-3);
    CHECK(std::abs(rev.type - 1.0) <= 0.02 * 1.0 + 1e-3);
}

TEST_CASE("identical arguments give the degenerate polynomial case") {
    const Mat a = Mat::diagonal({Cx{1, 0}, Cx{4, 0}});
    const GrowthEstimate g = growth_estimate(commutator_sequence(a, a, 100));
    CHECK(g.degenerate);
    CHECK(g.type == 0.0);
}

TEST_CASE("type is refused away from exponential order") {
    const PairSpec p = free_algebra_pair();
    const CommutatorSequence seq = commutator_sequence(p.a, p.b, 400);
    CHECK_THROWS_AS(type_estimate(seq, 2.0), Error);
    CHECK_NOTHROW(type_estimate(seq, 1.05));
}

TEST_CASE("short sequences are rejected for the order fit") {
    const PairSpec p = free_algebra_pair();
    CHECK_THROWS_AS(order_estimate(commutator_sequence(p.a, p.b, 30)), Error);
}

TEST_CASE("type tracks the definition estimate on random pairs") {
    for (uint64_t seed : {2u, 9u, 14u}) {
        const PairSpec p = random_diagonalizable_pair(5, 0.4, seed);
        const CommutatorSequence seq = commutator_sequence(p.a, p.b, 400);
        const DefinitionEstimate d = varrho_definition(seq);
        const GrowthEstimate g = growth_estimate(seq);
        CHECK(g.type_applicable);
        CHECK(std::abs(g.type - d.estimate) <= 0.05 * d.estimate + d.uncertainty);
    }
}
