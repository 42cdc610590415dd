#include "semispec/corpus.hpp"

#include <cmath>
#include <random>

#include "semispec/eigen.hpp"

namespace semispec {

namespace {

void assert_relation(bool ok, const char* what) {
    if (!ok) fail(Errc::BadInput, std::string("free algebra relation violated: ") + what);
}

// Well-conditioned random similarity transform: identity plus a damped
// random perturbation, shrunk until cond <= 100.
Mat random_basis(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    Mat r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = Cx{u(rng), u(rng)};

    double sigma = 1.0 / std::sqrt(static_cast<double>(n));
    for (int tries = 0; tries < 60; ++tries) {
        Mat v = Mat::identity(n) + Cx{sigma, 0.0} * r;
        const double cond = norm(v) * norm(inverse(v));
        if (cond <= 100.0) return v;
        sigma *= 0.5;
    }
    return Mat::identity(n);
}

Mat similarity(const Mat& basis, const std::vector<Cx>& diag) {
    return basis * Mat::diagonal(diag) * inverse(basis);
}

std::vector<Cx> separated_eigenvalues(int n, double gap, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double scale = 1.0;
    for (;;) {
        std::vector<Cx> eigs;
        int attempts = 0;
        while (static_cast<int>(eigs.size()) < n && attempts < 2000) {
            ++attempts;
            const Cx cand{scale * u(rng), scale * u(rng)};
            bool ok = true;
            for (const Cx& e : eigs)
                if (std::abs(e - cand) < gap) { ok = false; break; }
            if (ok) eigs.push_back(cand);
        }
        if (static_cast<int>(eigs.size()) == n) return eigs;
        scale *= 1.5;   // domain too crowded for the requested gap
    }
}

} // namespace

PairSpec free_algebra_pair() {
    const Mat x1(2, {Cx{1, 0}, Cx{0, 0}, Cx{0, 0}, Cx{0, 0}});
    const Mat x2(2, {Cx{0, 0}, Cx{0, 0}, Cx{1, 0}, Cx{1, 0}});

    assert_relation(norm(x1 * x1 - x1) == 0.0, "x1^2 = x1");
    assert_relation(norm(x2 * x2 - x2) == 0.0, "x2^2 = x2");
    assert_relation(norm(x1 * x2) == 0.0, "x1*x2 = 0");
    assert_relation(norm(x2 * x1) > 0.0, "x2*x1 != 0");
    assert_relation(norm(x1 + x2) > 0.0, "x1+x2 != 0");

    PairSpec spec;
    spec.name = "free-algebra";
    spec.a = Cx{0.5, 0.0} * x1;
    spec.b = Cx{-0.5, 0.0} * x2;
    spec.expected = ExpectedValues{0.5, 1.0, "free-algebra asymmetry witness: varrho(a,b)=1/2, varrho(b,a)=1"};
    return spec;
}

PairSpec l1_discretization(int n) {
    if (n < 2) fail(Errc::BadInput, "l1_discretization: N must be >= 2");

    // Each interval [k,k+1) is an invariant fiber on which both operators
    // act by scalars against the first fiber, so the N-level truncation is
    // an exact N x N scalar matrix pair.
    std::vector<Cx> tdiag(static_cast<size_t>(n));
    Mat s(n);
    for (int k = 0; k < n; ++k) {
        tdiag[static_cast<size_t>(k)] = Cx{1.0 / (k + 1), 0.0};
        const double kk = static_cast<double>(k + 1) * (k + 1);
        s.at(k, k) = Cx{1.0 / kk, 0.0};
        if (k > 0) s.at(k, 0) = Cx{1.0 / kk, 0.0};
    }

    PairSpec spec;
    spec.name = "l1";
    spec.a = Mat::diagonal(tdiag);
    spec.b = s;
    spec.zero_radius = 0.5 / (static_cast<double>(n) * n);
    spec.basis_a = Mat::identity(n);
    spec.diag_a = tdiag;
    spec.note =
        "reference value for the untruncated operator pair: rho(T,S) = 1/2, premised on the "
        "leading spectral projections coinciding; recorded for comparison only -- the "
        "truncated pipeline reports the N-dependence instead of asserting that value";
    return spec;
}

PairSpec diagonalizable_pair(const std::vector<Cx>& eigs_a, const std::vector<Cx>& eigs_b,
                             uint64_t seed, bool shared_basis) {
    if (eigs_a.size() != eigs_b.size() || eigs_a.empty())
        fail(Errc::BadInput, "diagonalizable_pair: eigenvalue lists must be nonempty and equal size");
    const int n = static_cast<int>(eigs_a.size());
    std::mt19937_64 rng(seed);

    PairSpec spec;
    spec.name = shared_basis ? "commuting-diagonalizable" : "random-diagonalizable";
    spec.basis_a = random_basis(n, rng);
    spec.basis_b = shared_basis ? spec.basis_a : random_basis(n, rng);
    spec.diag_a = eigs_a;
    spec.diag_b = eigs_b;
    spec.a = similarity(*spec.basis_a, eigs_a);
    spec.b = similarity(*spec.basis_b, eigs_b);
    return spec;
}

PairSpec random_diagonalizable_pair(int n, double gap, uint64_t seed) {
    if (n < 1) fail(Errc::BadInput, "random_diagonalizable_pair: n must be >= 1");
    if (gap <= 0.0) fail(Errc::BadInput, "random_diagonalizable_pair: gap must be positive");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    const std::vector<Cx> ea = separated_eigenvalues(n, gap, rng);
    const std::vector<Cx> eb = separated_eigenvalues(n, gap, rng);
    PairSpec spec = diagonalizable_pair(ea, eb, seed);
    spec.name = "random-diagonalizable";
    return spec;
}

PairSpec jordan_perturb(const PairSpec& spec, Side which, int size) {
    if (size < 2) fail(Errc::BadInput, "jordan_perturb: size must be >= 2");
    const bool on_a = which == Side::A;
    const std::optional<Mat>& basis = on_a ? spec.basis_a : spec.basis_b;
    const std::vector<Cx>& diag = on_a ? spec.diag_a : spec.diag_b;
    if (!basis || diag.empty())
        fail(Errc::NoEligibleEigenspace,
             "jordan_perturb: chosen matrix has no recorded eigenbasis");

    // Find a value repeated at least `size` times (exact repeats by build).
    std::vector<int> idx;
    for (size_t i = 0; i < diag.size() && idx.empty(); ++i) {
        std::vector<int> same;
        for (size_t j = 0; j < diag.size(); ++j)
            if (diag[j] == diag[i]) same.push_back(static_cast<int>(j));
        if (static_cast<int>(same.size()) >= size) idx = std::move(same);
    }
    if (idx.empty())
        fail(Errc::NoEligibleEigenspace,
             "jordan_perturb: no eigenvalue with multiplicity >= " + std::to_string(size));

    const int n = static_cast<int>(diag.size());
    Mat nil(n);
    for (int t = 0; t + 1 < size; ++t)
        nil.at(idx[static_cast<size_t>(t)], idx[static_cast<size_t>(t) + 1]) = Cx{1.0, 0.0};
    const Mat q = (*basis) * nil * inverse(*basis);

    PairSpec out = spec;
    out.name = spec.name + "+jordan";
    if (on_a)
        out.a += q;
    else
        out.b += q;
    return out;
}

} // namespace semispec
