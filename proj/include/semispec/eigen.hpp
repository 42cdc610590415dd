#pragma once

#include <optional>
#include <vector>

#include "semispec/matrix.hpp"

namespace semispec {

struct SpectralPoint {
    Cx value;
    int multiplicity = 1;
};

struct ZeroCluster {
    double radius = 0.0;
    int swallowed_count = 0;
};

// Clustered distinct spectral points, ordered by descending modulus
// (ties by ascending argument). spectral_radius is taken over the raw
// eigenvalues, including any swallowed by the zero cluster.
struct SpectrumDescription {
    int dim = 0;
    std::vector<SpectralPoint> points;
    std::optional<ZeroCluster> zero_cluster;
    double spectral_radius = 0.0;
};

// All eigenvalues (with multiplicity) via Hessenberg reduction and
// shifted QR in complex arithmetic. max_sweeps <= 0 selects 30*n.
std::vector<Cx> eigenvalues(const Mat& a, int max_sweeps = 0);

SpectrumDescription cluster_spectrum(const std::vector<Cx>& eigs, double cluster_tol,
                                     double zero_radius);

double default_cluster_tol(const Mat& a);
double spectral_radius(const Mat& a);

} // namespace semispec
