#pragma once

#include "perron/numeric.hpp"

#include <vector>

namespace perron {

/// Square matrix of arbitrary-precision nonnegative integers. Immutable after
/// construction; all operations are pure, so values are safe to share across
/// threads. Entry (i, j) counts transitions/arcs from state i to state j.
///
/// C++ indices are 0-based; every serialized form and error message is
/// 1-based.
class NonNegIntMatrix {
  public:
    /// Validating constructor. Throws NonSquare for ragged or non-square
    /// input, NegativeEntry for any entry < 0.
    static NonNegIntMatrix from_rows(const std::vector<std::vector<Int>> &rows);

    static NonNegIntMatrix zero(int n);
    static NonNegIntMatrix identity(int n);

    int dim() const { return n_; }

    /// Bounds-checked access; throws IndexOutOfRange.
    const Int &at(int row, int col) const;

    std::vector<std::vector<Int>> rows() const;

    Int row_sum(int row) const;
    Int column_sum(int col) const;

    NonNegIntMatrix operator*(const NonNegIntMatrix &other) const;
    bool operator==(const NonNegIntMatrix &other) const = default;

  private:
    NonNegIntMatrix(int n, std::vector<Int> entries)
        : n_(n), entries_(std::move(entries)) {}

    const Int &cell(int row, int col) const { return entries_[static_cast<std::size_t>(row) * n_ + col]; }
    Int &cell(int row, int col) { return entries_[static_cast<std::size_t>(row) * n_ + col]; }

    int n_ = 0;
    std::vector<Int> entries_; // row-major, n_ * n_

    friend NonNegIntMatrix mat_pow(const NonNegIntMatrix &, unsigned long);
    friend class MatrixBuilder;
};

/// Row-major builder for code that assembles a matrix entry by entry
/// (incidence matrices, operator families). Validates on build().
class MatrixBuilder {
  public:
    explicit MatrixBuilder(int n);
    Int &entry(int row, int col);
    NonNegIntMatrix build();

  private:
    int n_;
    std::vector<Int> entries_;
};

/// A^m by binary exponentiation, exact; A^0 is the identity.
NonNegIntMatrix mat_pow(const NonNegIntMatrix &base, unsigned long exponent);

/// (A^m)_{from,to}: the number of oriented edge-paths of length m from
/// `from` to `to`, each path weighted by the product of entry multiplicities.
Int path_count(const NonNegIntMatrix &matrix, int from, int to, unsigned long length);

/// Vector in the closed positive cone: all coordinates >= 0, not all zero.
/// Coordinates are exact rationals.
struct ConeVector {
    std::vector<Rat> coords;

    int dim() const { return static_cast<int>(coords.size()); }
    bool operator==(const ConeVector &other) const = default;
};

/// Validating factory; throws InvalidConeVector.
ConeVector cone_vector(std::vector<Rat> coords);

/// Coordinate sum |x|; strictly positive for a valid cone vector.
Rat cone_norm(const ConeVector &x);

/// Matrix-vector product A x (x a column vector). The result is not
/// re-validated: it can be the zero vector when A annihilates x.
ConeVector apply(const NonNegIntMatrix &matrix, const ConeVector &x);

} // namespace perron
