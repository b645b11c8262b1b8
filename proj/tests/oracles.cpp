#include "oracles.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numeric>

namespace perron::testing {

namespace {

void enumerate_walks(const NonNegIntMatrix &matrix, int vertex, int target, int steps_left,
                     const Int &weight_so_far, Int &total) {
    if (steps_left == 0) {
        if (vertex == target)
            total += weight_so_far;
        return;
    }
    for (int next = 0; next < matrix.dim(); ++next) {
        const Int &w = matrix.at(vertex, next);
        if (sgn(w) != 0)
            enumerate_walks(matrix, next, target, steps_left - 1, weight_so_far * w, total);
    }
}

} // namespace

Int walk_count_bruteforce(const NonNegIntMatrix &matrix, int from, int to, int length) {
    Int total = 0;
    enumerate_walks(matrix, from, to, length, Int(1), total);
    return total;
}

double float_spectral_radius(const NonNegIntMatrix &matrix) {
    const int n = matrix.dim();
    Eigen::MatrixXd dense(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dense(i, j) = matrix.at(i, j).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(dense, /*computeEigenvectors=*/false);
    double radius = 0.0;
    for (int i = 0; i < n; ++i)
        radius = std::max(radius, std::abs(solver.eigenvalues()[i]));
    return radius;
}

bool wielandt_is_pf(const NonNegIntMatrix &matrix) {
    const unsigned long n = static_cast<unsigned long>(matrix.dim());
    const unsigned long wielandt = (n - 1) * (n - 1) + 1;
    const NonNegIntMatrix power = mat_pow(matrix, wielandt);
    for (int i = 0; i < power.dim(); ++i)
        for (int j = 0; j < power.dim(); ++j)
            if (sgn(power.at(i, j)) == 0)
                return false;
    return true;
}

NonNegIntMatrix random_matrix(std::mt19937_64 &rng, int n, int max_entry) {
    std::uniform_int_distribution<int> entry(0, max_entry);
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(n));
    for (auto &row : rows) {
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            row.emplace_back(entry(rng));
    }
    return NonNegIntMatrix::from_rows(rows);
}

NonNegIntMatrix random_permutation_conjugate(std::mt19937_64 &rng, const NonNegIntMatrix &matrix) {
    const int n = matrix.dim();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] = matrix.at(i, j);
    return NonNegIntMatrix::from_rows(rows);
}

} // namespace perron::testing
