#pragma once

#include "cobord/poly.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace cobord {

using IntVector = std::vector<Integer>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    void append_row(const IntVector& r);
    IntMatrix transpose() const;
    IntMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    bool is_zero() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    IntVector data_;
};

// Row Hermite normal form: H = U * M with U unimodular. Nonzero rows come
// first, pivots are positive and strictly move right, entries above a pivot
// lie in [0, pivot).
struct HermiteForm {
    IntMatrix H;
    IntMatrix U;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

HermiteForm hnf(const IntMatrix& m);

// Nonzero Smith invariant factors d1 | d2 | ... (units included).
IntVector smith_diagonal(const IntMatrix& m);

// Z^rows / (column span of m).
struct Cokernel {
    std::size_t free_rank = 0;
    IntVector elementary_divisors; // only those > 1
};

Cokernel cokernel(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
Integer determinant(const IntMatrix& m);

// Rows form the HNF basis of {x in Z^cols : m x = 0}; the lattice is saturated.
IntMatrix kernel_basis(const IntMatrix& m);

// HNF basis (nonzero rows only) of the row lattice of m.
IntMatrix row_lattice(const IntMatrix& m);

// HNF basis of the saturation (Q-span intersected with Z^n) of the row lattice.
IntMatrix saturation(const IntMatrix& m);

// Coordinates c with c * basis = v, where basis is in row HNF with the given
// pivots; nullopt when v is outside the rational span.
std::optional<std::vector<Scalar>> solve_hnf(const IntMatrix& basis,
                                             const std::vector<std::size_t>& pivots,
                                             const std::vector<Scalar>& v);

bool divides_power_of(const Integer& d, const Integer& tau);

} // namespace cobord
