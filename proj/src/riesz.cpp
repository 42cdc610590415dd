#include "semispec/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace semispec {

namespace {

// Defect against the nearest nonnegative integer; also reports it.
double integer_defect(double x, long long& nearest) {
    nearest = std::llround(std::max(x, 0.0));
    return std::abs(x - static_cast<double>(nearest));
}

} // namespace

Mat resolvent(const Mat& a, Cx z) {
    const int n = a.dim();
    Mat shifted = Mat::identity(n);
    shifted *= z;
    shifted -= a;
    return lu_solve(lu_factor(shifted), Mat::identity(n));
}

Mat contour_trapezoid(const Mat& a, Cx center, double radius, int nodes) {
    if (radius <= 0.0 || nodes < 8) fail(Errc::BadInput, "contour_trapezoid: bad radius or nodes");
    Mat sum(a.dim());
    for (int m = 0; m < nodes; ++m) {
        const Cx w = std::polar(1.0, 2.0 * std::numbers::pi * m / nodes);
        sum += w * resolvent(a, center + radius * w);
    }
    return (Cx{radius / nodes, 0.0}) * sum;
}

ContourResult riesz_projection(const Mat& a, Cx center, double radius, const ContourOptions& opts) {
    if (radius <= 0.0) fail(Errc::BadInput, "riesz_projection: radius must be positive");
    const int n = a.dim();
    int nodes = std::max(opts.initial_nodes, 8);

    auto node_value = [&](double theta) {
        const Cx w = std::polar(1.0, theta);
        return w * resolvent(a, center + radius * w);
    };

    // Running trapezoidal sum; doubling reuses all previously evaluated nodes.
    Mat sum(n);
    for (int m = 0; m < nodes; ++m)
        sum += node_value(2.0 * std::numbers::pi * m / nodes);
    Mat p = (Cx{radius / nodes, 0.0}) * sum;

    double defect = 0.0;
    while (true) {
        const int doubled = 2 * nodes;
        for (int m = 1; m < doubled; m += 2)
            sum += node_value(2.0 * std::numbers::pi * m / doubled);
        Mat refined = (Cx{radius / doubled, 0.0}) * sum;
        defect = norm(refined - p) / (1.0 + norm(refined));
        p = std::move(refined);
        nodes = doubled;
        if (defect < opts.quad_tol) break;
        if (nodes >= opts.node_cap) {
            std::ostringstream os;
            os << "contour quadrature hit the node cap (" << opts.node_cap
               << " nodes) with defect " << defect;
            fail(Errc::NodeCap, os.str());
        }
    }
    return {std::move(p), nodes, defect};
}

ProjectionFamily projection_family(const Mat& a, const SpectrumDescription& spec,
                                   const ContourOptions& opts) {
    const int n = a.dim();
    const double anorm = norm(a);
    const double radius_floor = 1e-10 * (1.0 + anorm);
    const size_t npts = spec.points.size();

    ProjectionFamily fam;
    fam.source = a;
    fam.points = spec;
    fam.projections.reserve(npts);
    fam.diagnostics.resize(npts);

    for (size_t i = 0; i < npts; ++i) {
        const Cx lam = spec.points[i].value;
        double radius = 0.5 * (1.0 + std::abs(lam));   // unconstrained fallback
        for (size_t j = 0; j < npts; ++j) {
            if (j == i) continue;
            radius = std::min(radius, 0.5 * std::abs(lam - spec.points[j].value));
        }
        if (spec.zero_cluster)
            radius = std::min(radius, 0.5 * (std::abs(lam) - spec.zero_cluster->radius));
        if (radius < radius_floor) {
            std::ostringstream os;
            os << "isolating radius " << radius << " for spectral point (" << lam.real() << ","
               << lam.imag() << ") is below the floor " << radius_floor;
            fail(Errc::GapTooSmall, os.str());
        }
        ContourResult res = riesz_projection(a, lam, radius, opts);
        fam.diagnostics[i].nodes_used = res.nodes_used;
        fam.diagnostics[i].radius_used = radius;
        fam.projections.push_back(std::move(res.projection));
    }

    fam.complement = Mat::identity(n);
    for (const Mat& p : fam.projections) fam.complement -= p;

    // Validation: every downstream formula assumes exact projection algebra.
    double worst = 0.0;
    std::string worst_name;
    auto record = [&](double defect, const std::string& name, double tol) {
        if (defect > worst) { worst = defect; worst_name = name; }
        return defect > tol;
    };

    std::vector<const Mat*> all;
    std::vector<ProjectionDiagnostics*> diag;
    for (size_t i = 0; i < npts; ++i) {
        all.push_back(&fam.projections[i]);
        diag.push_back(&fam.diagnostics[i]);
    }
    all.push_back(&fam.complement);
    diag.push_back(&fam.complement_diagnostics);
    fam.complement_diagnostics.radius_used = spec.zero_cluster ? spec.zero_cluster->radius : 0.0;

    bool bad = false;
    double fam_tol = 0.0;
    for (size_t i = 0; i < all.size(); ++i) {
        const Mat& p = *all[i];
        const double pn = norm(p);
        const double tol = 1e-9 * (1.0 + pn * pn);
        fam_tol = std::max(fam_tol, tol);

        diag[i]->idempotency_defect = norm(p * p - p);
        diag[i]->commutation_defect = norm(a * p - p * a);
        diag[i]->trace_value = trace(p);

        bad |= record(diag[i]->idempotency_defect, "idempotency", tol);
        bad |= record(diag[i]->commutation_defect, "commutation", tol * std::max(anorm, 1.0));
        for (size_t j = 0; j < all.size(); ++j) {
            if (j == i) continue;
            const double od = norm(p * (*all[j]));
            diag[i]->orthogonality_defect = std::max(diag[i]->orthogonality_defect, od);
            bad |= record(od, "orthogonality", tol);
        }

        long long nearest = 0;
        const double tr_defect = std::hypot(integer_defect(diag[i]->trace_value.real(), nearest),
                                            diag[i]->trace_value.imag());
        bad |= record(tr_defect, "trace integrality", 1e-6);
        const long long expected = (i < npts)
                                       ? spec.points[i].multiplicity
                                       : n - (spec.dim - (spec.zero_cluster
                                                              ? spec.zero_cluster->swallowed_count
                                                              : 0));
        if (i < npts && nearest != expected) {
            bad = true;
            worst_name = "trace/multiplicity mismatch";
            worst = std::abs(static_cast<double>(nearest - expected));
        }
    }
    fam.tol_proj = fam_tol;
    fam.max_defect = worst;
    if (bad) {
        std::ostringstream os;
        os << "projection family invariant violated: worst defect " << worst << " (" << worst_name
           << ")";
        fail(Errc::FamilyInvariant, os.str());
    }
    return fam;
}

SemisimpleSplit semisimple_split(const Mat& a, const ProjectionFamily& fam) {
    SemisimpleSplit out;
    out.semisimple = Mat(a.dim());
    for (size_t i = 0; i < fam.projections.size(); ++i)
        out.semisimple += fam.points.points[i].value * fam.projections[i];
    out.residual = a - out.semisimple;
    out.residual_spectral_radius = spectral_radius(out.residual);
    return out;
}

} // namespace semispec
