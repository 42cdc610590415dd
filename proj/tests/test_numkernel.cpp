#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "semispec/matrix.hpp"

using namespace semispec;

namespace {

Mat random_mat(int n, std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Mat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Cx{u(rng), u(rng)};
    return m;
}

} // namespace

TEST_CASE("identity is a two-sided unit") {
    std::mt19937_64 rng(1);
    const Mat a = random_mat(5, rng);
    const Mat id = Mat::identity(5);
    CHECK(norm(id * a - a) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(norm(a * id - a) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("orthogonal idempotents multiply to zero") {
    const Mat d1 = Mat::diagonal({Cx{1, 0}, Cx{0, 0}});
    const Mat d2 = Mat::diagonal({Cx{0, 0}, Cx{1, 0}});
    CHECK(norm(d1 * d2) == 0.0);
}

TEST_CASE("x2*x1 product of the generator realization") {
    const Mat x1(2, {Cx{1, 0}, Cx{0, 0}, Cx{0, 0}, Cx{0, 0}});
    const Mat x2(2, {Cx{0, 0}, Cx{0, 0}, Cx{1, 0}, Cx{1, 0}});
    const Mat p = x2 * x1;
    CHECK(p.at(0, 0) == Cx{0, 0});
    CHECK(p.at(1, 0) == Cx{1, 0});
    CHECK(p.at(1, 1) == Cx{0, 0});
    CHECK(norm(x1 * x2) == 0.0);
}

TEST_CASE("norm values") {
    CHECK(norm(Mat::identity(2), NormKind::Frobenius) == doctest::Approx(std::sqrt(2.0)));
    CHECK(norm(Mat(3), NormKind::One) == 0.0);
    CHECK(norm(Mat(3), NormKind::Inf) == 0.0);
    const Mat m(2, {Cx{0, 0}, Cx{0, 0}, Cx{1, 0}, Cx{0, 0}});
    CHECK(norm(m, NormKind::One) == doctest::Approx(1.0));   // max column sum
}

TEST_CASE("submultiplicativity for all norm kinds") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        const Mat a = random_mat(6, rng);
        const Mat b = random_mat(6, rng);
        const Mat ab = a * b;
        for (NormKind k : {NormKind::Frobenius, NormKind::One, NormKind::Inf})
            CHECK(norm(ab, k) <= norm(a, k) * norm(b, k) * (1.0 + 1e-12));
    }
}

TEST_CASE("lu_solve examples") {
    const Mat id = Mat::identity(2);
    std::mt19937_64 rng(3);
    const Mat b = random_mat(2, rng);
    CHECK(norm(lu_solve(lu_factor(id), b) - b) < 1e-14);

    const Mat d = Mat::diagonal({Cx{2, 0}, Cx{4, 0}});
    const Mat dinv = lu_solve(lu_factor(d), id);
    CHECK(dinv.at(0, 0).real() == doctest::Approx(0.5));
    CHECK(dinv.at(1, 1).real() == doctest::Approx(0.25));

    // [[2,1],[0,2]]^-1 = [[0.5,-0.25],[0,0.5]]
    const Mat t(2, {Cx{2, 0}, Cx{1, 0}, Cx{0, 0}, Cx{2, 0}});
    const Mat tinv = lu_solve(lu_factor(t), id);
    CHECK(tinv.at(0, 0).real() == doctest::Approx(0.5));
    CHECK(tinv.at(0, 1).real() == doctest::Approx(-0.25));
    CHECK(tinv.at(1, 0).real() == doctest::Approx(0.0));
    CHECK(tinv.at(1, 1).real() == doctest::Approx(0.5));
}

TEST_CASE("lu solve residual on random well-conditioned systems") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Mat a = random_mat(8, rng);
        a += Cx{4.0, 0.0} * Mat::identity(8);   // keep it away from singular
        const Mat rhs = random_mat(8, rng);
        const Mat x = lu_solve(lu_factor(a), rhs);
        CHECK(norm(a * x - rhs) <= 1e-10 * norm(a) * norm(x));
    }
}

TEST_CASE("singular pivot raises") {
    const Mat s(2, {Cx{1, 0}, Cx{2, 0}, Cx{2, 0}, Cx{4, 0}});
    CHECK_THROWS_WITH_AS(lu_factor(s), doctest::Contains("singular pivot"), Error);
}

TEST_CASE("non-finite entries rejected") {
    std::vector<Cx> bad{Cx{1, 0}, Cx{0, 0}, Cx{0, 0}, Cx{std::nan(""), 0}};
    CHECK_THROWS_AS(Mat(2, bad), Error);
}

TEST_CASE("dimension mismatch raises") {
    CHECK_THROWS_AS(Mat::identity(2) * Mat::identity(3), Error);
}
