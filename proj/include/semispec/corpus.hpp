#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "semispec/matrix.hpp"

namespace semispec {

struct ExpectedValues {
    double varrho_ab = 0.0;
    double varrho_ba = 0.0;
    std::string provenance;
};

struct PairSpec {
    std::string name;
    Mat a, b;
    std::optional<ExpectedValues> expected;
    std::optional<double> zero_radius;
    std::string note;
    // Construction data for diagonalizable builds: m = basis * diag * basis^-1.
    std::optional<Mat> basis_a, basis_b;
    std::vector<Cx> diag_a, diag_b;
};

// a = x1/2, b = -x2/2 in a 2x2 matrix realization of the relations
// x1^2 = x1, x2^2 = x2, x1*x2 = 0, x2*x1 != 0. The asymmetry witness:
// varrho(a,b) = 1/2 while varrho(b,a) = 1.
PairSpec free_algebra_pair();

// N-level truncation of the weighted-shift pair on L1[1,inf):
// T = diag(1, 1/2, ..., 1/N), S triangular with S[k][k] = 1/k^2 and
// S[k][1] = 1/k^2 (1-based). Carries a zero-radius hint for the tail.
PairSpec l1_discretization(int n);

PairSpec random_diagonalizable_pair(int n, double gap, uint64_t seed);

// Both matrices built from explicit eigenvalue lists; shared_basis makes
// the pair commute.
PairSpec diagonalizable_pair(const std::vector<Cx>& eigs_a, const std::vector<Cx>& eigs_b,
                             uint64_t seed, bool shared_basis = false);

enum class Side { A, B };

// Adds a nilpotent supported on a repeated-eigenvalue eigenspace of the
// chosen matrix; commutes with it, so varrho is unchanged.
PairSpec jordan_perturb(const PairSpec& spec, Side which, int size);

} // namespace semispec
