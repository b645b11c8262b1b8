#pragma once

#include "perron/intmatrix.hpp"
#include "perron/spectral.hpp"

#include <string>
#include <vector>

namespace perron {

/// A substitution on a finite ordered alphabet: each symbol maps to a finite
/// word over the same alphabet. Words are kept as ordered sequences even
/// though only occurrence counts feed the incidence matrix, preserving the
/// path data. Abstract by construction: callers supply the combinatorics.
class Substitution {
  public:
    /// Builds from (name, image word) rules. Alphabet order is rule order.
    /// Throws DuplicateSymbol for a repeated name, UnknownSymbol when an
    /// image uses a name with no rule.
    static Substitution from_rules(const std::vector<std::pair<std::string, std::vector<std::string>>> &rules);

    int alphabet_size() const { return static_cast<int>(alphabet_.size()); }
    const std::vector<std::string> &alphabet() const { return alphabet_; }

    /// Image words as symbol indices into alphabet().
    const std::vector<std::vector<int>> &images() const { return images_; }

    int index_of(const std::string &symbol) const; // throws UnknownSymbol

    bool operator==(const Substitution &other) const = default;

  private:
    Substitution() = default;

    std::vector<std::string> alphabet_;
    std::vector<std::vector<int>> images_;

    friend Substitution iterate(const Substitution &, unsigned long);
};

/// Entry (i, j) counts occurrences of symbol j in the image word of symbol i
/// (row convention: iteration acts by left multiplication on row count
/// vectors, and the incidence matrix of the n-fold iterate is the n-th
/// power).
NonNegIntMatrix incidence_matrix(const Substitution &substitution);

/// n-fold composition; the 0-fold iterate is the identity substitution.
Substitution iterate(const Substitution &substitution, unsigned long n);

/// Spectral enclosure of the incidence matrix; its log is the enclosure of
/// the topological entropy (the log stays in the presentation layer).
SpectralInterval entropy_interval(const Substitution &substitution, const Rat &gap,
                                  int iteration_cap = default_iteration_cap);

/// True iff the alphabet fits the arc budget of a core with |chi| =
/// chi_abs, i.e. alphabet size <= 3 * chi_abs. Throws NonPositiveChi.
bool arc_count_admissible(const Substitution &substitution, long chi_abs);

} // namespace perron
