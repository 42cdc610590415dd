#include "semispec/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace semispec {

namespace {

constexpr double kDeflateTol = 1e-13;

// Reduce to upper Hessenberg form by Householder similarity, in place.
void hessenberg_reduce(Mat& h) {
    const int n = h.dim();
    std::vector<Cx> v(static_cast<size_t>(n));
    for (int k = 0; k < n - 2; ++k) {
        double colnorm = 0.0;
        for (int i = k + 1; i < n; ++i) colnorm += std::norm(h.at(i, k));
        colnorm = std::sqrt(colnorm);
        if (colnorm == 0.0) continue;

        Cx x0 = h.at(k + 1, k);
        Cx phase = (std::abs(x0) == 0.0) ? Cx{1.0, 0.0} : x0 / std::abs(x0);
        Cx alpha = -phase * colnorm;

        double vnorm = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[static_cast<size_t>(i)] = h.at(i, k);
            if (i == k + 1) v[static_cast<size_t>(i)] -= alpha;
            vnorm += std::norm(v[static_cast<size_t>(i)]);
        }
        vnorm = std::sqrt(vnorm);
        if (vnorm < 1e-300) continue;
        for (int i = k + 1; i < n; ++i) v[static_cast<size_t>(i)] /= vnorm;

        // H := (I - 2 v v^H) H
        for (int j = k; j < n; ++j) {
            Cx s{0.0, 0.0};
            for (int i = k + 1; i < n; ++i) s += std::conj(v[static_cast<size_t>(i)]) * h.at(i, j);
            s *= 2.0;
            for (int i = k + 1; i < n; ++i) h.at(i, j) -= s * v[static_cast<size_t>(i)];
        }
        // H := H (I - 2 v v^H)
        for (int i = 0; i < n; ++i) {
            Cx s{0.0, 0.0};
            for (int j = k + 1; j < n; ++j) s += h.at(i, j) * v[static_cast<size_t>(j)];
            s *= 2.0;
            for (int j = k + 1; j < n; ++j) h.at(i, j) -= s * std::conj(v[static_cast<size_t>(j)]);
        }
        for (int i = k + 2; i < n; ++i) h.at(i, k) = Cx{0.0, 0.0};
    }
}

// Eigenvalue of [[a,b],[c,d]] closest to d (Wilkinson shift).
Cx wilkinson_shift(Cx a, Cx b, Cx c, Cx d) {
    const Cx tr = a + d;
    const Cx det = a * d - b * c;
    const Cx disc = std::sqrt(tr * tr - 4.0 * det);
    const Cx r1 = 0.5 * (tr + disc);
    const Cx r2 = 0.5 * (tr - disc);
    return (std::abs(r1 - d) < std::abs(r2 - d)) ? r1 : r2;
}

struct Givens {
    double c = 1.0;
    Cx s{0.0, 0.0};
};

Givens make_givens(Cx f, Cx g) {
    Givens rot;
    const double af = std::abs(f), ag = std::abs(g);
    if (ag == 0.0) return rot;
    if (af == 0.0) {
        rot.c = 0.0;
        rot.s = std::conj(g) / ag;
        return rot;
    }
    const double d = std::hypot(af, ag);
    rot.c = af / d;
    rot.s = (f / af) * std::conj(g) / d;
    return rot;
}

} // namespace

std::vector<Cx> eigenvalues(const Mat& a, int max_sweeps) {
    const int n = a.dim();
    a.check_finite("eigenvalues");
    if (n == 1) return {a.at(0, 0)};
    if (max_sweeps <= 0) max_sweeps = 30 * n;

    Mat h = a;
    hessenberg_reduce(h);
    const double hnorm = std::max(norm(h, NormKind::Frobenius), 1e-300);

    std::vector<Cx> eigs;
    eigs.reserve(static_cast<size_t>(n));

    int hi = n - 1;
    int sweeps = 0;
    int stall = 0;

    auto deflate_scan = [&](int lo_limit) {
        for (int m = hi; m > lo_limit; --m) {
            double scale = std::abs(h.at(m - 1, m - 1)) + std::abs(h.at(m, m));
            if (scale == 0.0) scale = hnorm;
            if (std::abs(h.at(m, m - 1)) <= kDeflateTol * scale) h.at(m, m - 1) = Cx{0.0, 0.0};
        }
    };

    while (hi >= 0) {
        if (hi == 0) {
            eigs.push_back(h.at(0, 0));
            break;
        }
        deflate_scan(0);
        if (h.at(hi, hi - 1) == Cx{0.0, 0.0}) {
            eigs.push_back(h.at(hi, hi));
            --hi;
            stall = 0;
            continue;
        }
        // Active block [lo..hi].
        int lo = hi;
        while (lo > 0 && h.at(lo, lo - 1) != Cx{0.0, 0.0}) --lo;

        if (hi - lo == 1) {
            // Solve the 2x2 block directly.
            const Cx tr = h.at(lo, lo) + h.at(hi, hi);
            const Cx det = h.at(lo, lo) * h.at(hi, hi) - h.at(lo, hi) * h.at(hi, lo);
            const Cx disc = std::sqrt(tr * tr - 4.0 * det);
            eigs.push_back(0.5 * (tr + disc));
            eigs.push_back(0.5 * (tr - disc));
            hi = lo - 1;
            stall = 0;
            continue;
        }

        if (++sweeps > max_sweeps) {
            std::ostringstream os;
            os << "QR iteration did not converge within " << max_sweeps << " sweeps";
            fail(Errc::NonConvergence, os.str());
        }

        Cx shift = wilkinson_shift(h.at(hi - 1, hi - 1), h.at(hi - 1, hi), h.at(hi, hi - 1),
                                   h.at(hi, hi));
        if (++stall % 12 == 0) {
            // Exceptional shift to break rare cycling.
            shift = h.at(hi, hi) + Cx{std::abs(h.at(hi, hi - 1).real()) +
                                          std::abs(h.at(hi - 1, hi - 2).real()),
                                      0.0};
        }

        for (int i = lo; i <= hi; ++i) h.at(i, i) -= shift;

        // QR of the shifted Hessenberg block by Givens rotations, then RQ.
        std::vector<Givens> rots(static_cast<size_t>(hi - lo));
        for (int k = lo; k < hi; ++k) {
            Givens rot = make_givens(h.at(k, k), h.at(k + 1, k));
            rots[static_cast<size_t>(k - lo)] = rot;
            for (int j = k; j <= hi; ++j) {
                const Cx t1 = h.at(k, j);
                const Cx t2 = h.at(k + 1, j);
                h.at(k, j) = rot.c * t1 + rot.s * t2;
                h.at(k + 1, j) = -std::conj(rot.s) * t1 + rot.c * t2;
            }
            h.at(k + 1, k) = Cx{0.0, 0.0};
        }
        for (int k = lo; k < hi; ++k) {
            const Givens& rot = rots[static_cast<size_t>(k - lo)];
            const int top = std::min(k + 1, hi);
            for (int i = lo; i <= top; ++i) {
                const Cx t1 = h.at(i, k);
                const Cx t2 = h.at(i, k + 1);
                h.at(i, k) = rot.c * t1 + std::conj(rot.s) * t2;
                h.at(i, k + 1) = -rot.s * t1 + rot.c * t2;
            }
        }
        for (int i = lo; i <= hi; ++i) h.at(i, i) += shift;
    }

    return eigs;
}

double default_cluster_tol(const Mat& a) { return 1e-8 * (1.0 + norm(a, NormKind::Frobenius)); }

double spectral_radius(const Mat& a) {
    double r = 0.0;
    for (const Cx& v : eigenvalues(a)) r = std::max(r, std::abs(v));
    return r;
}

SpectrumDescription cluster_spectrum(const std::vector<Cx>& eigs, double cluster_tol,
                                     double zero_radius) {
    if (eigs.empty()) fail(Errc::BadInput, "cluster_spectrum: empty eigenvalue list");
    if (cluster_tol < 0.0 || zero_radius < 0.0)
        fail(Errc::BadInput, "cluster_spectrum: tolerances must be nonnegative");

    const int m = static_cast<int>(eigs.size());
    std::vector<int> parent(static_cast<size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[static_cast<size_t>(i)] != i) {
            parent[static_cast<size_t>(i)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(i)])];
            i = parent[static_cast<size_t>(i)];
        }
        return i;
    };
    // Single linkage at tolerance cluster_tol.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (std::abs(eigs[static_cast<size_t>(i)] - eigs[static_cast<size_t>(j)]) <= cluster_tol)
                parent[static_cast<size_t>(find(i))] = find(j);

    SpectrumDescription out;
    out.dim = m;
    for (const Cx& v : eigs) out.spectral_radius = std::max(out.spectral_radius, std::abs(v));

    std::vector<std::vector<int>> groups;
    std::vector<int> root_of(static_cast<size_t>(m), -1);
    for (int i = 0; i < m; ++i) {
        const int r = find(i);
        if (root_of[static_cast<size_t>(r)] < 0) {
            root_of[static_cast<size_t>(r)] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<size_t>(root_of[static_cast<size_t>(r)])].push_back(i);
    }

    int swallowed = 0;
    for (const std::vector<int>& g : groups) {
        int inside = 0;
        Cx mean{0.0, 0.0};
        for (int i : g) {
            if (zero_radius > 0.0 && std::abs(eigs[static_cast<size_t>(i)]) <= zero_radius) ++inside;
            mean += eigs[static_cast<size_t>(i)];
        }
        mean /= static_cast<double>(g.size());
        if (inside == static_cast<int>(g.size()) && zero_radius > 0.0) {
            swallowed += inside;
            continue;
        }
        if (inside != 0) {
            std::ostringstream os;
            os << "cluster straddles the zero radius " << zero_radius << " (" << inside << " of "
               << g.size() << " members inside); adjust --cluster-tol or --zero-radius";
            fail(Errc::ClusterAmbiguity, os.str());
        }
        out.points.push_back({mean, static_cast<int>(g.size())});
    }
    if (zero_radius > 0.0) out.zero_cluster = ZeroCluster{zero_radius, swallowed};

    std::sort(out.points.begin(), out.points.end(), [](const SpectralPoint& x, const SpectralPoint& y) {
        const double ax = std::abs(x.value), ay = std::abs(y.value);
        if (ax != ay) return ax > ay;
        return std::arg(x.value) < std::arg(y.value);
    });
    return out;
}

} // namespace semispec
