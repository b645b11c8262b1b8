#include "perron/substitution.hpp"

#include "perron/errors.hpp"

#include <map>
#include <utility>

namespace perron {

Substitution Substitution::from_rules(
    const std::vector<std::pair<std::string, std::vector<std::string>>> &rules) {
    // The empty substitution (no arcs at all) is allowed; it has no
    // incidence matrix but still passes the arc-count check.
    Substitution sub;
    std::map<std::string, int> index;
    for (const auto &[name, word] : rules) {
        if (index.count(name))
            fail(error_kind::duplicate_symbol, "symbol '" + name + "' has two rules");
        index.emplace(name, static_cast<int>(sub.alphabet_.size()));
        sub.alphabet_.push_back(name);
        (void)word;
    }
    for (const auto &[name, word] : rules) {
        std::vector<int> image;
        image.reserve(word.size());
        for (const std::string &symbol : word) {
            auto it = index.find(symbol);
            if (it == index.end())
                fail(error_kind::unknown_symbol,
                     "image of '" + name + "' uses unknown symbol '" + symbol + "'");
            image.push_back(it->second);
        }
        sub.images_.push_back(std::move(image));
    }
    return sub;
}

int Substitution::index_of(const std::string &symbol) const {
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        if (alphabet_[i] == symbol)
            return static_cast<int>(i);
    fail(error_kind::unknown_symbol, "unknown symbol '" + symbol + "'");
}

NonNegIntMatrix incidence_matrix(const Substitution &substitution) {
    const int n = substitution.alphabet_size();
    if (n == 0)
        fail(error_kind::empty_set, "empty substitution has no incidence matrix");
    MatrixBuilder builder(n);
    for (int i = 0; i < n; ++i)
        for (int j : substitution.images()[static_cast<std::size_t>(i)])
            builder.entry(i, j) += 1;
    return builder.build();
}

Substitution iterate(const Substitution &substitution, unsigned long n) {
    Substitution result;
    result.alphabet_ = substitution.alphabet_;
    result.images_.resize(substitution.images_.size());
    for (std::size_t i = 0; i < result.images_.size(); ++i)
        result.images_[i] = {static_cast<int>(i)};
    for (unsigned long step = 0; step < n; ++step) {
        std::vector<std::vector<int>> next(result.images_.size());
        for (std::size_t i = 0; i < result.images_.size(); ++i)
            for (int symbol : result.images_[i])
                for (int target : substitution.images_[static_cast<std::size_t>(symbol)])
                    next[i].push_back(target);
        result.images_ = std::move(next);
    }
    return result;
}

SpectralInterval entropy_interval(const Substitution &substitution, const Rat &gap, int iteration_cap) {
    return spectral_radius(incidence_matrix(substitution), gap, iteration_cap);
}

bool arc_count_admissible(const Substitution &substitution, long chi_abs) {
    if (chi_abs < 1)
        fail(error_kind::non_positive_chi,
             "core characteristic magnitude must be >= 1, got " + std::to_string(chi_abs));
    return substitution.alphabet_size() <= 3 * chi_abs;
}

} // namespace perron
