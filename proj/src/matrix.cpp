#include "matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace psdsplit {

namespace {

void check_dim(int n) {
    if (n < 1) throw Error(errc::invalid_argument, "matrix dimension must be at least 1");
}

void check_finite(const std::vector<double>& values, const char* what) {
    for (double x : values) {
        if (!std::isfinite(x))
            throw Error(errc::invalid_argument, std::string(what) + " contains a non-finite value");
    }
}

}  // namespace

SymMatrix::SymMatrix(int n) : n_(n) {
    check_dim(n);
    data_.assign(tri_size(n), 0.0);
}

SymMatrix::SymMatrix(int n, std::vector<double> packed) : n_(n), data_(std::move(packed)) {
    check_dim(n);
    if (data_.size() != tri_size(n))
        throw Error(errc::invalid_argument, "packed data size does not match dimension");
    check_finite(data_, "symmetric matrix");
}

SymMatrix SymMatrix::from_dense(const double* row_major, int n) {
    check_dim(n);
    double max_abs = 0.0;
    for (std::size_t k = 0; k < static_cast<std::size_t>(n) * n; ++k) {
        if (!std::isfinite(row_major[k]))
            throw Error(errc::invalid_argument, "input grid contains a non-finite value");
        max_abs = std::max(max_abs, std::abs(row_major[k]));
    }
    const double tol = kSymTol * std::max(1.0, max_abs);
    SymMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double a = row_major[static_cast<std::size_t>(i) * n + j];
            const double b = row_major[static_cast<std::size_t>(j) * n + i];
            if (std::abs(a - b) > tol)
                throw Error(errc::asymmetric,
                            "entries (" + std::to_string(i) + "," + std::to_string(j) + ")=" +
                                std::to_string(a) + " and (" + std::to_string(j) + "," +
                                std::to_string(i) + ")=" + std::to_string(b) +
                                " differ beyond tolerance",
                            i);
            out.at_lower(i, j) = (a + b) / 2.0;
        }
    }
    return out;
}

SymMatrix SymMatrix::from_dense(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    check_dim(n);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n)
            throw Error(errc::non_square, "input grid is not square");
    }
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return from_dense(flat.data(), n);
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += at_lower(i, i);
    return t;
}

double SymMatrix::frobenius_norm() const {
    double diag = 0.0, off = 0.0;
    for (int i = 0; i < n_; ++i) {
        const double d = at_lower(i, i);
        diag += d * d;
        for (int j = 0; j < i; ++j) {
            const double x = at_lower(i, j);
            off += x * x;
        }
    }
    return std::sqrt(diag + 2.0 * off);
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
}

double SymMatrix::max_diag() const {
    double m = at_lower(0, 0);
    for (int i = 1; i < n_; ++i) m = std::max(m, at_lower(i, i));
    return m;
}

double SymMatrix::max_abs_diag() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i) m = std::max(m, std::abs(at_lower(i, i)));
    return m;
}

Dense SymMatrix::to_dense() const {
    Dense d(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= i; ++j) d(i, j) = d(j, i) = at_lower(i, j);
    return d;
}

SymMatrix SymMatrix::plus_diagonal(double t) const {
    SymMatrix out = *this;
    for (int i = 0; i < n_; ++i) out.at_lower(i, i) += t;
    return out;
}

SymMatrix SymMatrix::shifted_negation(double t) const {
    SymMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= i; ++j) out.at_lower(i, j) = (i == j ? t : 0.0) - at_lower(i, j);
    return out;
}

LowerTriangular::LowerTriangular(int n) : n_(n) {
    check_dim(n);
    data_.assign(tri_size(n), 0.0);
}

LowerTriangular::LowerTriangular(int n, std::vector<double> packed)
    : n_(n), data_(std::move(packed)) {
    check_dim(n);
    if (data_.size() != tri_size(n))
        throw Error(errc::invalid_argument, "packed data size does not match dimension");
    check_finite(data_, "triangular factor");
}

LowerTriangular LowerTriangular::identity(int n) {
    LowerTriangular l(n);
    for (int i = 0; i < n; ++i) l.at(i, i) = 1.0;
    return l;
}

double LowerTriangular::max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
}

double LowerTriangular::frobenius_squared() const {
    double s = 0.0;
    for (double x : data_) s += x * x;
    return s;
}

double LowerTriangular::column_norm_squared(int k) const {
    double s = 0.0;
    for (int i = k; i < n_; ++i) {
        const double x = at(i, k);
        s += x * x;
    }
    return s;
}

Dense LowerTriangular::to_dense() const {
    Dense d(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= i; ++j) d(i, j) = data_[tri_index(i, j)];
    return d;
}

Permutation::Permutation(std::vector<int> perm) : perm_(std::move(perm)) {
    const int n = static_cast<int>(perm_.size());
    check_dim(n);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int p : perm_) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
            throw Error(errc::invalid_argument, "permutation is not a bijection on {0..n-1}");
        seen[static_cast<std::size_t>(p)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    check_dim(n);
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(p));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < dim(); ++i)
        if (perm_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

namespace {

void check_same_dim(int a, int b) {
    if (a != b) throw Error(errc::dimension_mismatch, "matrix dimensions do not match");
}

}  // namespace

SymMatrix reconstruct_difference(const LowerTriangular& l1, const LowerTriangular& l2,
                                 const Permutation& perm) {
    const int n = l1.dim();
    check_same_dim(n, l2.dim());
    check_same_dim(n, perm.dim());
    SymMatrix out(n);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l <= k; ++l) {
            double s = 0.0;
            for (int m = 0; m <= l; ++m) s += l1(k, m) * l1(l, m) - l2(k, m) * l2(l, m);
            const int i = perm[k], j = perm[l];
            out.at_lower(std::max(i, j), std::min(i, j)) = s;
        }
    }
    return out;
}

SymMatrix gram(const LowerTriangular& l, const Permutation& perm) {
    const int n = l.dim();
    check_same_dim(n, perm.dim());
    SymMatrix out(n);
    for (int k = 0; k < n; ++k) {
        for (int m = 0; m <= k; ++m) {
            double s = 0.0;
            for (int c = 0; c <= m; ++c) s += l(k, c) * l(m, c);
            const int i = perm[k], j = perm[m];
            out.at_lower(std::max(i, j), std::min(i, j)) = s;
        }
    }
    return out;
}

SymMatrix gram_ldl(const LowerTriangular& l, const DiagMatrix& d, const Permutation& perm) {
    const int n = l.dim();
    check_same_dim(n, d.dim());
    check_same_dim(n, perm.dim());
    SymMatrix out(n);
    for (int k = 0; k < n; ++k) {
        for (int m = 0; m <= k; ++m) {
            double s = 0.0;
            for (int c = 0; c <= m; ++c) s += l(k, c) * d[c] * l(m, c);
            const int i = perm[k], j = perm[m];
            out.at_lower(std::max(i, j), std::min(i, j)) = s;
        }
    }
    return out;
}

SymMatrix unpermute(const SymMatrix& s_permuted, const Permutation& perm) {
    const int n = s_permuted.dim();
    check_same_dim(n, perm.dim());
    SymMatrix out(n);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l <= k; ++l) {
            const int i = perm[k], j = perm[l];
            out.at_lower(std::max(i, j), std::min(i, j)) = s_permuted.at_lower(k, l);
        }
    }
    return out;
}

SymMatrix subtract(const SymMatrix& a, const SymMatrix& b) {
    check_same_dim(a.dim(), b.dim());
    std::vector<double> packed(a.packed().size());
    for (std::size_t k = 0; k < packed.size(); ++k) packed[k] = a.packed()[k] - b.packed()[k];
    return SymMatrix(a.dim(), std::move(packed));
}

double frobenius_distance(const SymMatrix& a, const SymMatrix& b) {
    check_same_dim(a.dim(), b.dim());
    const int n = a.dim();
    double diag = 0.0, off = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = a.at_lower(i, i) - b.at_lower(i, i);
        diag += d * d;
        for (int j = 0; j < i; ++j) {
            const double x = a.at_lower(i, j) - b.at_lower(i, j);
            off += x * x;
        }
    }
    return std::sqrt(diag + 2.0 * off);
}

}  // namespace psdsplit
