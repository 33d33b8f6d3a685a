// Dense matrix values used throughout: symmetric matrices in packed
// lower-triangle storage, lower-triangular factors, diagonal matrices,
// permutations, and a plain row-major dense helper for scratch work.
//
// All types are immutable in spirit: operations return new values and never
// mutate shared state, so everything here is safe to use across threads.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"

namespace psdsplit {

// Packed row-major lower-triangle index for i >= j.
inline std::size_t tri_index(int i, int j) {
    return static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) + 1) / 2 +
           static_cast<std::size_t>(j);
}

inline std::size_t tri_size(int n) {
    return static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1) / 2;
}

// Plain row-major dense matrix. Scratch type for eigensolvers, Schur
// complements and oracles; not part of the packed value types' invariants.
class Dense {
  public:
    Dense() = default;
    Dense(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    static Dense identity(int n) {
        Dense m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return v_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return v_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<double>& values() const { return v_; }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> v_;
};

// Relative tolerance for accepting (and averaging away) asymmetry in
// nominally symmetric input: |a_ij - a_ji| <= kSymTol * max(1, maxAbsEntry).
inline constexpr double kSymTol = 1e-10;

// Dense n-by-n real symmetric matrix, packed lower triangle, row-major.
// Only one copy of each logical entry is stored, so symmetry cannot break.
class SymMatrix {
  public:
    explicit SymMatrix(int n);
    SymMatrix(int n, std::vector<double> packed);

    // Builds from a full square grid. Entries are averaged with their
    // transpose; asymmetry beyond kSymTol (relative) is rejected.
    static SymMatrix from_dense(const std::vector<std::vector<double>>& rows);
    static SymMatrix from_dense(const double* row_major, int n);

    int dim() const { return n_; }

    double operator()(int i, int j) const {
        return i >= j ? data_[tri_index(i, j)] : data_[tri_index(j, i)];
    }

    // Direct access to the stored triangle, i >= j.
    double& at_lower(int i, int j) { return data_[tri_index(i, j)]; }
    double at_lower(int i, int j) const { return data_[tri_index(i, j)]; }

    const std::vector<double>& packed() const { return data_; }

    double trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    double max_diag() const;
    double max_abs_diag() const;

    Dense to_dense() const;

    // A + t*I
    SymMatrix plus_diagonal(double t) const;
    // t*I - A
    SymMatrix shifted_negation(double t) const;

    bool operator==(const SymMatrix& other) const = default;

  private:
    int n_;
    std::vector<double> data_;
};

// Dense lower-triangular factor, packed like SymMatrix. Entries above the
// diagonal are identically zero and never stored.
class LowerTriangular {
  public:
    explicit LowerTriangular(int n);
    LowerTriangular(int n, std::vector<double> packed);

    static LowerTriangular identity(int n);

    int dim() const { return n_; }

    double operator()(int i, int j) const { return i >= j ? data_[tri_index(i, j)] : 0.0; }

    double& at(int i, int j) { return data_[tri_index(i, j)]; }

    const std::vector<double>& packed() const { return data_; }

    double max_abs() const;
    // sum of squares of all entries, i.e. trace of L L^T
    double frobenius_squared() const;
    // squared Euclidean norm of column k (diagonal included)
    double column_norm_squared(int k) const;

    Dense to_dense() const;

    bool operator==(const LowerTriangular& other) const = default;

  private:
    int n_;
    std::vector<double> data_;
};

class DiagMatrix {
  public:
    explicit DiagMatrix(int n) : d_(static_cast<std::size_t>(n), 0.0) {}
    explicit DiagMatrix(std::vector<double> d) : d_(std::move(d)) {}

    int dim() const { return static_cast<int>(d_.size()); }
    double operator[](int i) const { return d_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return d_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return d_; }

    bool operator==(const DiagMatrix& other) const = default;

  private:
    std::vector<double> d_;
};

// Pivot order: perm[k] is the original index of the row/column that ends up
// in position k of the permuted matrix, i.e. (P A P^T)_{kl} = A_{perm[k],perm[l]}.
class Permutation {
  public:
    explicit Permutation(std::vector<int> perm);

    static Permutation identity(int n);

    int dim() const { return static_cast<int>(perm_.size()); }
    int operator[](int k) const { return perm_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& indices() const { return perm_; }
    bool is_identity() const;

    void swap_positions(int a, int b) { std::swap(perm_[a], perm_[b]); }

  private:
    std::vector<int> perm_;
};

// P^T (L1 L1^T - L2 L2^T) P, i.e. the factored difference mapped back to the
// original row/column order.
SymMatrix reconstruct_difference(const LowerTriangular& l1, const LowerTriangular& l2,
                                 const Permutation& perm);

// P^T (L L^T) P and P^T (L D L^T) P as symmetric matrices.
SymMatrix gram(const LowerTriangular& l, const Permutation& perm);
SymMatrix gram_ldl(const LowerTriangular& l, const DiagMatrix& d, const Permutation& perm);

// S_permuted read back in original order: out(perm[k], perm[l]) = S(k, l).
SymMatrix unpermute(const SymMatrix& s_permuted, const Permutation& perm);

// Entrywise difference a - b.
SymMatrix subtract(const SymMatrix& a, const SymMatrix& b);

// Frobenius norm of a - b; the workhorse of every reconstruction check.
double frobenius_distance(const SymMatrix& a, const SymMatrix& b);

}  // namespace psdsplit
