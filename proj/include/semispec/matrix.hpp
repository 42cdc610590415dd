#pragma once

#include <complex>
#include <vector>

#include "semispec/error.hpp"

namespace semispec {

using Cx = std::complex<double>;

enum class NormKind { Frobenius, One, Inf };

// Dense square complex matrix, row-major storage. All entries are kept
// finite; any operation that would produce NaN/Inf throws Errc::NonFinite.
class Mat {
public:
    Mat() = default;
    explicit Mat(int n);                    // n x n zero matrix
    Mat(int n, std::vector<Cx> data);       // row-major, data.size() == n*n

    static Mat identity(int n);
    static Mat diagonal(const std::vector<Cx>& d);

    int dim() const { return n_; }
    Cx& at(int i, int j) { return data_[static_cast<size_t>(i) * n_ + j]; }
    const Cx& at(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<Cx>& data() const { return data_; }

    void check_finite(const char* context) const;

    Mat& operator+=(const Mat& rhs);
    Mat& operator-=(const Mat& rhs);
    Mat& operator*=(Cx s);

private:
    int n_ = 0;
    std::vector<Cx> data_;
};

Mat operator+(Mat lhs, const Mat& rhs);
Mat operator-(Mat lhs, const Mat& rhs);
Mat operator*(const Mat& lhs, const Mat& rhs);   // matrix product
Mat operator*(Cx s, Mat m);

double norm(const Mat& m, NormKind kind = NormKind::Frobenius);
Cx trace(const Mat& m);

// LU factorization with partial pivoting, factors packed in place.
// A pivot below 1e-14*||A|| is reported as singular.
struct LuFactors {
    int n = 0;
    std::vector<Cx> packed;      // L (unit diagonal, below) and U (on/above)
    std::vector<int> perm;       // row i of PA is row perm[i] of A
    Cx det{0.0, 0.0};
    double source_norm = 0.0;    // Frobenius norm of the factored matrix
};

LuFactors lu_factor(const Mat& a);
Mat lu_solve(const LuFactors& f, const Mat& rhs);
Mat inverse(const Mat& a);

} // namespace semispec
