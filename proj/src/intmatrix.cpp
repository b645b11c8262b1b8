#include "perron/intmatrix.hpp"

#include "perron/errors.hpp"

#include <string>
#include <utility>

namespace perron {

namespace {

void check_dim_positive(int n) {
    if (n < 1)
        fail(error_kind::non_square, "matrix dimension must be >= 1, got " + std::to_string(n));
}

void check_index(int value, int n, const char *what) {
    if (value < 0 || value >= n)
        fail(error_kind::index_out_of_range,
             std::string(what) + " index " + std::to_string(value + 1) + " outside 1.." + std::to_string(n));
}

} // namespace

NonNegIntMatrix NonNegIntMatrix::from_rows(const std::vector<std::vector<Int>> &rows) {
    const int n = static_cast<int>(rows.size());
    check_dim_positive(n);
    std::vector<Int> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            fail(error_kind::non_square, "row " + std::to_string(i + 1) + " has " +
                                             std::to_string(rows[i].size()) + " entries, expected " +
                                             std::to_string(n));
        for (int j = 0; j < n; ++j) {
            if (sgn(rows[i][j]) < 0)
                fail(error_kind::negative_entry, "entry (" + std::to_string(i + 1) + ", " +
                                                     std::to_string(j + 1) + ") is negative: " +
                                                     rows[i][j].get_str());
            entries.push_back(rows[i][j]);
        }
    }
    return NonNegIntMatrix(n, std::move(entries));
}

NonNegIntMatrix NonNegIntMatrix::zero(int n) {
    check_dim_positive(n);
    return NonNegIntMatrix(n, std::vector<Int>(static_cast<std::size_t>(n) * n, Int(0)));
}

NonNegIntMatrix NonNegIntMatrix::identity(int n) {
    NonNegIntMatrix result = zero(n);
    for (int i = 0; i < n; ++i)
        result.cell(i, i) = 1;
    return result;
}

const Int &NonNegIntMatrix::at(int row, int col) const {
    check_index(row, n_, "row");
    check_index(col, n_, "column");
    return cell(row, col);
}

std::vector<std::vector<Int>> NonNegIntMatrix::rows() const {
    std::vector<std::vector<Int>> out(n_);
    for (int i = 0; i < n_; ++i)
        out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i) * n_,
                      entries_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_);
    return out;
}

Int NonNegIntMatrix::row_sum(int row) const {
    check_index(row, n_, "row");
    Int sum = 0;
    for (int j = 0; j < n_; ++j)
        sum += cell(row, j);
    return sum;
}

Int NonNegIntMatrix::column_sum(int col) const {
    check_index(col, n_, "column");
    Int sum = 0;
    for (int i = 0; i < n_; ++i)
        sum += cell(i, col);
    return sum;
}

NonNegIntMatrix NonNegIntMatrix::operator*(const NonNegIntMatrix &other) const {
    if (n_ != other.n_)
        fail(error_kind::dimension_mismatch, "cannot multiply " + std::to_string(n_) + "x" +
                                                 std::to_string(n_) + " by " + std::to_string(other.n_) +
                                                 "x" + std::to_string(other.n_));
    NonNegIntMatrix result = zero(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Int &aik = cell(i, k);
            if (sgn(aik) == 0)
                continue;
            for (int j = 0; j < n_; ++j) {
                const Int &bkj = other.cell(k, j);
                if (sgn(bkj) != 0)
                    mpz_addmul(result.cell(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
            }
        }
    return result;
}

MatrixBuilder::MatrixBuilder(int n) : n_(n) {
    check_dim_positive(n);
    entries_.assign(static_cast<std::size_t>(n) * n, Int(0));
}

Int &MatrixBuilder::entry(int row, int col) {
    check_index(row, n_, "row");
    check_index(col, n_, "column");
    return entries_[static_cast<std::size_t>(row) * n_ + col];
}

NonNegIntMatrix MatrixBuilder::build() {
    for (const Int &e : entries_)
        if (sgn(e) < 0)
            fail(error_kind::negative_entry, "builder holds a negative entry");
    return NonNegIntMatrix(n_, entries_);
}

NonNegIntMatrix mat_pow(const NonNegIntMatrix &base, unsigned long exponent) {
    NonNegIntMatrix result = NonNegIntMatrix::identity(base.dim());
    NonNegIntMatrix square = base;
    while (exponent > 0) {
        if (exponent & 1UL)
            result = result * square;
        exponent >>= 1UL;
        if (exponent > 0)
            square = square * square;
    }
    return result;
}

Int path_count(const NonNegIntMatrix &matrix, int from, int to, unsigned long length) {
    check_index(from, matrix.dim(), "source vertex");
    check_index(to, matrix.dim(), "target vertex");
    return mat_pow(matrix, length).at(from, to);
}

ConeVector cone_vector(std::vector<Rat> coords) {
    if (coords.empty())
        fail(error_kind::invalid_cone_vector, "cone vector must have dimension >= 1");
    bool any_positive = false;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const int s = sgn(coords[i]);
        if (s < 0)
            fail(error_kind::invalid_cone_vector,
                 "coordinate " + std::to_string(i + 1) + " is negative: " + coords[i].get_str());
        if (s > 0)
            any_positive = true;
    }
    if (!any_positive)
        fail(error_kind::invalid_cone_vector, "cone vector must not be the zero vector");
    return ConeVector{std::move(coords)};
}

Rat cone_norm(const ConeVector &x) {
    Rat sum = 0;
    for (const Rat &c : x.coords)
        sum += c;
    return sum;
}

ConeVector apply(const NonNegIntMatrix &matrix, const ConeVector &x) {
    const int n = matrix.dim();
    if (x.dim() != n)
        fail(error_kind::dimension_mismatch, "vector of dimension " + std::to_string(x.dim()) +
                                                 " against matrix of dimension " + std::to_string(n));
    std::vector<Rat> out(static_cast<std::size_t>(n), Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Int &aij = matrix.at(i, j);
            if (sgn(aij) != 0)
                out[static_cast<std::size_t>(i)] += Rat(aij) * x.coords[static_cast<std::size_t>(j)];
        }
    return ConeVector{std::move(out)};
}

} // namespace perron
