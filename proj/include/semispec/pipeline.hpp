#pragma once

#include <optional>

#include "semispec/growth.hpp"
#include "semispec/semidistance.hpp"

namespace semispec {

enum class Method { Definition, Geometric, Charf, Growth, All };

struct RhoOptions {
    int n_max = 400;
    NormKind norm_kind = NormKind::Frobenius;
    GeomOptions geom;           // cluster tol, product threshold, contour nodes
    double zero_radius = 0.0;   // > 0 enables the charf route
    bool want_qe = false;
    double qe_tol = 1e-7;
};

// Everything the CLI reports: both argument orders for every method that
// ran, spectra, projection diagnostics and the symmetrized rho.
struct SemidistanceReport {
    Method method = Method::All;
    double varrho_ab = 0.0;
    double varrho_ba = 0.0;
    double rho = 0.0;
    std::optional<SpectrumDescription> spec_a, spec_b;
    std::optional<std::vector<ProjectionDiagnostics>> diag_a, diag_b;
    std::optional<CommutatorSequence> seq_ab, seq_ba;
    std::optional<DefinitionEstimate> def_ab, def_ba;
    std::optional<GeomResult> geo_ab, geo_ba;
    std::optional<GeomResult> charf_ab, charf_ba;
    std::optional<GrowthEstimate> growth_ab, growth_ba;
    std::optional<QeResult> qe;
    bool fragile = false;
    RhoOptions options;
};

SemidistanceReport rho(const Mat& a, const Mat& b, Method method, const RhoOptions& opts = {});

} // namespace semispec
