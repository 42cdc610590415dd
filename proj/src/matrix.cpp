#include "semispec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace semispec {

namespace {

void require_dim(int n) {
    if (n < 1) fail(Errc::BadInput, "matrix dimension must be >= 1, got " + std::to_string(n));
}

} // namespace

Mat::Mat(int n) : n_(n), data_(static_cast<size_t>(n) * n, Cx{0.0, 0.0}) { require_dim(n); }

Mat::Mat(int n, std::vector<Cx> data) : n_(n), data_(std::move(data)) {
    require_dim(n);
    if (data_.size() != static_cast<size_t>(n) * n)
        fail(Errc::BadInput, "matrix data size does not match dimension " + std::to_string(n));
    check_finite("construction");
}

Mat Mat::identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cx{1.0, 0.0};
    return m;
}

Mat Mat::diagonal(const std::vector<Cx>& d) {
    Mat m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m.at(i, i) = d[static_cast<size_t>(i)];
    m.check_finite("diagonal construction");
    return m;
}

void Mat::check_finite(const char* context) const {
    for (const Cx& v : data_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            fail(Errc::NonFinite, std::string("non-finite matrix entry in ") + context);
    }
}

Mat& Mat::operator+=(const Mat& rhs) {
    if (n_ != rhs.n_) fail(Errc::DimensionMismatch, "matrix add: dimension mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    check_finite("addition");
    return *this;
}

Mat& Mat::operator-=(const Mat& rhs) {
    if (n_ != rhs.n_) fail(Errc::DimensionMismatch, "matrix subtract: dimension mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    check_finite("subtraction");
    return *this;
}

Mat& Mat::operator*=(Cx s) {
    for (Cx& v : data_) v *= s;
    check_finite("scalar multiplication");
    return *this;
}

Mat operator+(Mat lhs, const Mat& rhs) { return lhs += rhs; }
Mat operator-(Mat lhs, const Mat& rhs) { return lhs -= rhs; }
Mat operator*(Cx s, Mat m) { return m *= s; }

Mat operator*(const Mat& lhs, const Mat& rhs) {
    if (lhs.dim() != rhs.dim()) fail(Errc::DimensionMismatch, "matrix multiply: dimension mismatch");
    const int n = lhs.dim();
    Mat out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Cx aik = lhs.at(i, k);
            if (aik == Cx{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) out.at(i, j) += aik * rhs.at(k, j);
        }
    }
    out.check_finite("multiplication");
    return out;
}

double norm(const Mat& m, NormKind kind) {
    const int n = m.dim();
    switch (kind) {
        case NormKind::Frobenius: {
            double s = 0.0;
            for (const Cx& v : m.data()) s += std::norm(v);
            return std::sqrt(s);
        }
        case NormKind::One: {   // max column sum
            double best = 0.0;
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int i = 0; i < n; ++i) s += std::abs(m.at(i, j));
                best = std::max(best, s);
            }
            return best;
        }
        case NormKind::Inf: {   // max row sum
            double best = 0.0;
            for (int i = 0; i < n; ++i) {
                double s = 0.0;
                for (int j = 0; j < n; ++j) s += std::abs(m.at(i, j));
                best = std::max(best, s);
            }
            return best;
        }
    }
    return 0.0;
}

Cx trace(const Mat& m) {
    Cx t{0.0, 0.0};
    for (int i = 0; i < m.dim(); ++i) t += m.at(i, i);
    return t;
}

LuFactors lu_factor(const Mat& a) {
    const int n = a.dim();
    LuFactors f;
    f.n = n;
    f.packed = a.data();
    f.perm.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) f.perm[static_cast<size_t>(i)] = i;
    f.source_norm = norm(a, NormKind::Frobenius);
    f.det = Cx{1.0, 0.0};

    auto entry = [&](int i, int j) -> Cx& { return f.packed[static_cast<size_t>(i) * n + j]; };
    const double pivot_floor = 1e-14 * f.source_norm;

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(entry(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(entry(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (best <= pivot_floor) {
            std::ostringstream os;
            os << "singular pivot at column " << k << " (|pivot| = " << best << ")";
            fail(Errc::Singular, os.str());
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(entry(k, j), entry(piv, j));
            std::swap(f.perm[static_cast<size_t>(k)], f.perm[static_cast<size_t>(piv)]);
            f.det = -f.det;
        }
        const Cx ukk = entry(k, k);
        f.det *= ukk;
        for (int i = k + 1; i < n; ++i) {
            const Cx lik = entry(i, k) / ukk;
            entry(i, k) = lik;
            for (int j = k + 1; j < n; ++j) entry(i, j) -= lik * entry(k, j);
        }
    }
    return f;
}

Mat lu_solve(const LuFactors& f, const Mat& rhs) {
    const int n = f.n;
    if (rhs.dim() != n) fail(Errc::DimensionMismatch, "lu_solve: dimension mismatch");
    auto entry = [&](int i, int j) -> const Cx& { return f.packed[static_cast<size_t>(i) * n + j]; };

    Mat x(n);
    // Apply permutation: solve column blocks of LUX = P*rhs.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x.at(i, j) = rhs.at(f.perm[static_cast<size_t>(i)], j);
    // Forward substitution, L unit lower.
    for (int k = 0; k < n; ++k)
        for (int i = k + 1; i < n; ++i) {
            const Cx lik = entry(i, k);
            if (lik == Cx{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) x.at(i, j) -= lik * x.at(k, j);
        }
    // Back substitution.
    for (int k = n - 1; k >= 0; --k) {
        const Cx ukk = entry(k, k);
        for (int j = 0; j < n; ++j) x.at(k, j) /= ukk;
        for (int i = 0; i < k; ++i) {
            const Cx uik = entry(i, k);
            if (uik == Cx{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) x.at(i, j) -= uik * x.at(k, j);
        }
    }
    x.check_finite("lu_solve");
    return x;
}

Mat inverse(const Mat& a) { return lu_solve(lu_factor(a), Mat::identity(a.dim())); }

} // namespace semispec
