#pragma once

#include <vector>

#include "semispec/eigen.hpp"
#include "semispec/matrix.hpp"

namespace semispec {

struct ContourOptions {
    int initial_nodes = 16;
    int node_cap = 512;
    double quad_tol = 1e-11;   // relative change on node doubling
};

// (z1 - a)^(-1); throws Errc::Singular when z is numerically on the spectrum.
Mat resolvent(const Mat& a, Cx z);

struct ContourResult {
    Mat projection;
    int nodes_used = 0;
    double last_defect = 0.0;
};

// Trapezoidal contour quadrature of the resolvent on the circle
// |z - center| = radius, with adaptive node doubling.
ContourResult riesz_projection(const Mat& a, Cx center, double radius,
                               const ContourOptions& opts = {});

// Fixed-node trapezoidal rule on the same circle (no adaptivity).
Mat contour_trapezoid(const Mat& a, Cx center, double radius, int nodes);

struct ProjectionDiagnostics {
    double idempotency_defect = 0.0;
    double commutation_defect = 0.0;
    double orthogonality_defect = 0.0;   // max over the other projections
    Cx trace_value{0.0, 0.0};
    int nodes_used = 0;
    double radius_used = 0.0;
};

struct ProjectionFamily {
    Mat source;
    SpectrumDescription points;
    std::vector<Mat> projections;   // aligned with points.points
    Mat complement;                 // p0 = 1 - sum p_i
    std::vector<ProjectionDiagnostics> diagnostics;
    ProjectionDiagnostics complement_diagnostics;
    double tol_proj = 0.0;
    double max_defect = 0.0;
};

// One contour projection per (nonzero) spectral point, isolating radius
// half the gap to the nearest other point / zero-cluster boundary.
// Validates idempotency, orthogonality, commutation and integer traces;
// violations throw Errc::FamilyInvariant.
ProjectionFamily projection_family(const Mat& a, const SpectrumDescription& spec,
                                   const ContourOptions& opts = {});

struct SemisimpleSplit {
    Mat semisimple;   // sum of lambda_i p_i
    Mat residual;     // a - semisimple
    double residual_spectral_radius = 0.0;
};

SemisimpleSplit semisimple_split(const Mat& a, const ProjectionFamily& fam);

} // namespace semispec
