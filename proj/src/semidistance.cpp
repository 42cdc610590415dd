#include "semispec/semidistance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace semispec {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Family {
    SpectrumDescription spec;
    ProjectionFamily fam;
};

Family build_family(const Mat& m, double cluster_tol, double zero_radius,
                    const ContourOptions& contour) {
    const double tol = cluster_tol >= 0.0 ? cluster_tol : default_cluster_tol(m);
    Family f;
    f.spec = cluster_spectrum(eigenvalues(m), tol, zero_radius);
    f.fam = projection_family(m, f.spec, contour);
    return f;
}

// Threshold for treating p*q as nonzero; user-supplied values are absolute.
double pair_threshold(const GeomOptions& opts, double pnorm, double qnorm) {
    if (opts.product_threshold >= 0.0) return opts.product_threshold;
    return 1e-8 * (1.0 + pnorm) * (1.0 + qnorm);
}

bool near_threshold(double value, double threshold) {
    return value > threshold / 10.0 && value < threshold * 10.0;
}

GeomResult evaluate_breakdown(const Mat& a, const Mat& b, const Family& fa, const Family& fb,
                              const GeomOptions& opts, bool with_zero_sets) {
    GeomResult out;
    out.spec_a = fa.spec;
    out.spec_b = fb.spec;
    out.diag_a = fa.fam.diagnostics;
    out.diag_b = fb.fam.diagnostics;
    GeometricBreakdown& br = out.breakdown;

    double sup = 0.0;
    bool any_active = false;

    for (size_t i = 0; i < fa.fam.projections.size(); ++i) {
        const double pn = norm(fa.fam.projections[i]);
        for (size_t j = 0; j < fb.fam.projections.size(); ++j) {
            const double qn = norm(fb.fam.projections[j]);
            const double thr = pair_threshold(opts, pn, qn);
            const double prod = norm(fa.fam.projections[i] * fb.fam.projections[j]);
            br.product_threshold = thr;
            if (near_threshold(prod, thr)) br.fragile = true;
            if (prod <= thr) continue;
            const Cx lam = fa.spec.points[i].value;
            const Cx bet = fb.spec.points[j].value;
            br.active_pairs.push_back({lam, bet, std::abs(lam - bet), prod});
            any_active = true;
            if (br.active_pairs.back().distance >= sup) {
                sup = br.active_pairs.back().distance;
                br.sup_branch = SupBranch::PairSet;
            }
        }
    }
    br.w_empty_branch = !any_active;

    if (with_zero_sets) {
        const double p0n = norm(fa.fam.complement);
        const double q0n = norm(fb.fam.complement);
        for (size_t i = 0; i < fa.fam.projections.size(); ++i) {
            const double thr = pair_threshold(opts, norm(fa.fam.projections[i]), q0n);
            const double prod = norm(fa.fam.projections[i] * fb.fam.complement);
            if (near_threshold(prod, thr)) br.fragile = true;
            if (prod <= thr) continue;
            const Cx lam = fa.spec.points[i].value;
            br.w_lambda.push_back({lam, std::abs(lam), prod});
            if (std::abs(lam) > sup) {
                sup = std::abs(lam);
                br.sup_branch = SupBranch::LambdaModulus;
            }
        }
        for (size_t j = 0; j < fb.fam.projections.size(); ++j) {
            const double thr = pair_threshold(opts, p0n, norm(fb.fam.projections[j]));
            const double prod = norm(fa.fam.complement * fb.fam.projections[j]);
            if (near_threshold(prod, thr)) br.fragile = true;
            if (prod <= thr) continue;
            const Cx bet = fb.spec.points[j].value;
            br.w_beta.push_back({bet, std::abs(bet), prod});
            if (std::abs(bet) > sup) {
                sup = std::abs(bet);
                br.sup_branch = SupBranch::BetaModulus;
            }
        }
        const double thr0 = pair_threshold(opts, p0n, q0n);
        br.zero_pair_active = norm(fa.fam.complement * fb.fam.complement) > thr0;

        // Report-style filtered sets: moduli exceeding sup W.
        double sup_w = 0.0;
        for (const PairEntry& e : br.active_pairs) sup_w = std::max(sup_w, e.distance);
        for (const ModulusEntry& e : br.w_lambda)
            if (e.modulus > sup_w) br.w_lambda_filtered.push_back(e.modulus);
        for (const ModulusEntry& e : br.w_beta)
            if (e.modulus > sup_w) br.w_beta_filtered.push_back(e.modulus);

        br.radius_sup = std::max(fa.spec.spectral_radius, fb.spec.spectral_radius);
    }

    out.value = sup;
    return out;
}

} // namespace

CommutatorSequence commutator_sequence(const Mat& a, const Mat& b, int n_max, NormKind kind) {
    if (a.dim() != b.dim()) fail(Errc::DimensionMismatch, "commutator_sequence: dimension mismatch");
    if (n_max < 1) fail(Errc::BadInput, "commutator_sequence: n_max must be >= 1");

    CommutatorSequence seq;
    seq.n_max = n_max;
    seq.norm_kind = kind;
    seq.log_norms.assign(static_cast<size_t>(n_max) + 1, kNegInf);
    seq.rescale_trace.assign(static_cast<size_t>(n_max) + 1, 0.0);

    Mat c = Mat::identity(a.dim());
    double log_scale = std::log(norm(c, kind));
    seq.log_norms[0] = log_scale;
    seq.rescale_trace[0] = log_scale;
    c *= Cx{1.0 / norm(c, kind), 0.0};

    for (int n = 1; n <= n_max; ++n) {
        Mat next = a * c - c * b;
        const double nn = norm(next, kind);
        if (nn == 0.0) {
            seq.hit_zero = true;
            seq.zero_index = n;
            break;
        }
        seq.log_norms[static_cast<size_t>(n)] = log_scale + std::log(nn);
        log_scale += std::log(nn);
        seq.rescale_trace[static_cast<size_t>(n)] = log_scale;
        next *= Cx{1.0 / nn, 0.0};
        c = std::move(next);
    }
    return seq;
}

DefinitionEstimate varrho_definition(const CommutatorSequence& seq) {
    DefinitionEstimate est;
    if (seq.hit_zero) return est;   // all later powers vanish: varrho = 0 exactly

    const int last = seq.n_max;
    const int begin = std::max(1, last / 2);
    const int count = last - begin + 1;
    if (count < 10)
        fail(Errc::WindowTooShort,
             "varrho_definition: tail window has " + std::to_string(count) +
                 " points; increase n_max (>= 20)");
    est.window_begin = begin;
    est.window_end = last;

    // Least-squares line through (n, log_norms[n]) over the tail window.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int n = begin; n <= last; ++n) {
        sx += n;
        sy += seq.log_norms[static_cast<size_t>(n)];
        sxx += static_cast<double>(n) * n;
        sxy += n * seq.log_norms[static_cast<size_t>(n)];
    }
    const double denom = count * sxx - sx * sx;
    const double slope = (count * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / count;

    double ss_res = 0.0;
    double root_max = kNegInf;
    for (int n = begin; n <= last; ++n) {
        const double r = seq.log_norms[static_cast<size_t>(n)] - (intercept + slope * n);
        ss_res += r * r;
        root_max = std::max(root_max, seq.log_norms[static_cast<size_t>(n)] / n);
    }
    const double slope_se = std::sqrt(ss_res / std::max(count - 2, 1) / (sxx - sx * sx / count));

    est.tail_fit_slope = slope;
    est.estimate = std::exp(slope);
    est.max_based = std::exp(root_max);
    // Resolution floor: an n-th-root estimate cannot resolve constant
    // prefactors below exp(O(1)/n_max).
    const double floor = est.estimate * 4.0 / last;
    est.uncertainty = std::abs(est.estimate - est.max_based) + est.estimate * slope_se + floor;
    return est;
}

GeomResult varrho_geometric(const Mat& a, const Mat& b, const GeomOptions& opts) {
    if (a.dim() != b.dim()) fail(Errc::DimensionMismatch, "varrho_geometric: dimension mismatch");
    const Family fa = build_family(a, opts.cluster_tol, 0.0, opts.contour);
    const Family fb = build_family(b, opts.cluster_tol, 0.0, opts.contour);
    return evaluate_breakdown(a, b, fa, fb, opts, /*with_zero_sets=*/false);
}

GeomResult varrho_charf(const Mat& a, const Mat& b, double zero_radius, const GeomOptions& opts) {
    if (a.dim() != b.dim()) fail(Errc::DimensionMismatch, "varrho_charf: dimension mismatch");
    if (zero_radius <= 0.0) fail(Errc::BadInput, "varrho_charf: zero_radius must be positive");
    const Family fa = build_family(a, opts.cluster_tol, zero_radius, opts.contour);
    const Family fb = build_family(b, opts.cluster_tol, zero_radius, opts.contour);
    return evaluate_breakdown(a, b, fa, fb, opts, /*with_zero_sets=*/true);
}

QeResult quasinilpotent_equivalent(const Mat& a, const Mat& b, double tol, double zero_radius,
                                   const GeomOptions& opts) {
    if (a.dim() != b.dim())
        fail(Errc::DimensionMismatch, "quasinilpotent_equivalent: dimension mismatch");
    if (tol <= 0.0) fail(Errc::BadInput, "quasinilpotent_equivalent: tol must be positive");

    const Family fa = build_family(a, opts.cluster_tol, zero_radius, opts.contour);
    const Family fb = build_family(b, opts.cluster_tol, zero_radius, opts.contour);

    QeResult out;
    auto fail_with_witness = [&](std::string reason) {
        out.verdict = false;
        out.failure_reason = std::move(reason);
        // Lower-bound witness: largest active cross-pair distance.
        const GeomResult w = evaluate_breakdown(a, b, fa, fb, opts, zero_radius > 0.0);
        out.witness_distance = w.value;
        return out;
    };

    if (fa.spec.points.size() != fb.spec.points.size()) {
        std::ostringstream os;
        os << "spectra differ: " << fa.spec.points.size() << " vs " << fb.spec.points.size()
           << " clustered points";
        return fail_with_witness(os.str());
    }

    // Points are sorted deterministically; greedy nearest matching at tol.
    std::vector<bool> used(fb.spec.points.size(), false);
    for (const SpectralPoint& pa : fa.spec.points) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < fb.spec.points.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(pa.value - fb.spec.points[j].value);
            if (d < best_d) { best_d = d; best = static_cast<int>(j); }
        }
        if (best < 0 || best_d > tol) {
            std::ostringstream os;
            os << "unmatched spectral point (" << pa.value.real() << "," << pa.value.imag()
               << ") with nearest distance " << best_d;
            return fail_with_witness(os.str());
        }
        used[static_cast<size_t>(best)] = true;
        out.matches.push_back({pa.value, fb.spec.points[static_cast<size_t>(best)].value, best_d, 0.0});
    }

    for (size_t i = 0; i < out.matches.size(); ++i) {
        // Spectra are sorted the same way, so matched indices coincide.
        size_t jb = 0;
        for (size_t j = 0; j < fb.spec.points.size(); ++j)
            if (fb.spec.points[j].value == out.matches[i].value_b) { jb = j; break; }
        out.matches[i].projection_defect = norm(fa.fam.projections[i] - fb.fam.projections[jb]);
        if (out.matches[i].projection_defect > std::max(tol, fa.fam.tol_proj)) {
            std::ostringstream os;
            os << "Riesz projections differ at point (" << out.matches[i].value_a.real() << ","
               << out.matches[i].value_a.imag() << ") by " << out.matches[i].projection_defect;
            return fail_with_witness(os.str());
        }
    }

    // Cross-check via the finite-spectrum criterion: semisimple parts agree.
    const SemisimpleSplit sa = semisimple_split(a, fa.fam);
    const SemisimpleSplit sb = semisimple_split(b, fb.fam);
    out.semisimple_defect = norm(sa.semisimple - sb.semisimple);
    if (out.semisimple_defect > tol * (1.0 + norm(a) + norm(b))) {
        std::ostringstream os;
        os << "semisimple parts differ by " << out.semisimple_defect;
        return fail_with_witness(os.str());
    }

    out.verdict = true;
    return out;
}

} // namespace semispec
