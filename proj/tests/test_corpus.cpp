#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "semispec/corpus.hpp"
#include "semispec/eigen.hpp"

using namespace semispec;

namespace {

Mat commutator(const Mat& x, const Mat& y) { return x * y - y * x; }

double min_pairwise_gap(const std::vector<Cx>& v) {
    double g = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) g = std::min(g, std::abs(v[i] - v[j]));
    return g;
}

} // namespace

TEST_CASE("two-idempotent pair realizes the defining relations") {
    const PairSpec p = free_algebra_pair();
    REQUIRE(p.a.dim() == 2);
    // a = x1/2 and b = -x2/2 with x1 x2 = 0 but x2 x1 != 0.
    const Mat x1 = Cx{2, 0} * p.a;
    const Mat x2 = Cx{-2, 0} * p.b;
    CHECK(norm(x1 * x1 - x1) == 0.0);
    CHECK(norm(x2 * x2 - x2) == 0.0);
    CHECK(norm(x1 * x2) == 0.0);
    CHECK(norm(x2 * x1) > 0.5);
    REQUIRE(p.expected.has_value());
    CHECK(p.expected->varrho_ab == 0.5);
    CHECK(p.expected->varrho_ba == 1.0);
}

TEST_CASE("triangular truncation pair entries") {
    const PairSpec p = l1_discretization(4);
    REQUIRE(p.a.dim() == 4);
    for (int k = 0; k < 4; ++k) {
        CHECK(p.a.at(k, k) == Cx{1.0 / (k + 1), 0});
        CHECK(p.b.at(k, k) == Cx{1.0 / ((k + 1.0) * (k + 1.0)), 0});
        if (k > 0) CHECK(p.b.at(k, 0) == p.b.at(k, k));
        for (int j = 1; j < 4; ++j)
            if (j != k) CHECK(p.b.at(k, j) == Cx{0, 0});
    }
    REQUIRE(p.zero_radius.has_value());
    CHECK(*p.zero_radius == doctest::Approx(0.5 / 16.0));
    CHECK_THROWS_AS(l1_discretization(1), Error);
}

TEST_CASE("diagonalizable builds recover their eigenvalue lists") {
    const std::vector<Cx> ea{Cx{2, 0}, Cx{-1, 1}, Cx{0.5, -0.5}};
    const std::vector<Cx> eb{Cx{1, 0}, Cx{0, 2}, Cx{-2, 0}};
    const PairSpec p = diagonalizable_pair(ea, eb, 42);
    std::vector<Cx> got = eigenvalues(p.a);
    for (const Cx& want : ea) {
        const auto it = std::min_element(got.begin(), got.end(), [&](Cx x, Cx y) {
            return std::abs(x - want) < std::abs(y - want);
        });
        CHECK(std::abs(*it - want) < 1e-9);
        got.erase(it);
    }
}

TEST_CASE("shared basis makes the pair commute") {
    const std::vector<Cx> ea{Cx{1, 0}, Cx{3, 0}, Cx{-2, 1}};
    const std::vector<Cx> eb{Cx{0, 0}, Cx{1, 1}, Cx{2, 0}};
    const PairSpec shared = diagonalizable_pair(ea, eb, 7, true);
    CHECK(norm(commutator(shared.a, shared.b)) < 1e-10 * norm(shared.a) * norm(shared.b));
    const PairSpec separate = diagonalizable_pair(ea, eb, 7, false);
    CHECK(norm(commutator(separate.a, separate.b)) > 1e-4);
}

TEST_CASE("seeded random pairs are reproducible and separated") {
    const PairSpec p1 = random_diagonalizable_pair(6, 0.3, 99);
    const PairSpec p2 = random_diagonalizable_pair(6, 0.3, 99);
    CHECK(norm(p1.a - p2.a) == 0.0);
    CHECK(norm(p1.b - p2.b) == 0.0);
    const PairSpec p3 = random_diagonalizable_pair(6, 0.3, 100);
    CHECK(norm(p1.a - p3.a) > 1e-8);
    CHECK(min_pairwise_gap(p1.diag_a) >= 0.3);
    CHECK(min_pairwise_gap(p1.diag_b) >= 0.3);
}

TEST_CASE("nilpotent bump commutes with its host and keeps the spectrum") {
    const PairSpec base =
        diagonalizable_pair({Cx{2, 0}, Cx{2, 0}, Cx{0.5, 0}}, {Cx{1, 0}, Cx{1, 0}, Cx{3, 0}}, 5);
    const PairSpec bumped = jordan_perturb(base, Side::A, 2);
    const Mat q = bumped.a - base.a;
    CHECK(norm(q) > 1e-6);
    CHECK(norm(commutator(base.a, q)) < 1e-8 * norm(base.a) * norm(q));
    CHECK(norm(q * q) < 1e-12);
    // Spectrum (with multiplicity) is unchanged by the nilpotent bump.
    const SpectrumDescription s = cluster_spectrum(eigenvalues(bumped.a), 1e-5, 0.0);
    REQUIRE(s.points.size() == 2);
    CHECK(std::abs(s.points[0].value - Cx{2, 0}) < 1e-5);
    CHECK(s.points[0].multiplicity == 2);
}

TEST_CASE("nilpotent bump refuses a simple spectrum") {
    const PairSpec base =
        diagonalizable_pair({Cx{1, 0}, Cx{2, 0}}, {Cx{3, 0}, Cx{4, 0}}, 8);
    CHECK_THROWS_AS(jordan_perturb(base, Side::A, 2), Error);
}
