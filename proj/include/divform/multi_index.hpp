#pragma once

#include "divform/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace divform {

// Per-direction derivative counts; α = (α₀,…,α_{n−1}) stands for
// ∂₀^{α₀}…∂_{n−1}^{α_{n−1}}. Comparison is lexicographic on the counts.
class multi_index {
  public:
    multi_index() = default;
    explicit multi_index(int dim) : counts_(static_cast<size_t>(dim), 0) {}
    explicit multi_index(std::vector<int> counts) : counts_(std::move(counts)) {}

    static multi_index unit(int dim, int direction) {
        multi_index m(dim);
        m.counts_[static_cast<size_t>(direction)] = 1;
        return m;
    }

    int dim() const { return static_cast<int>(counts_.size()); }
    int operator[](int i) const { return counts_[static_cast<size_t>(i)]; }

    // |α|
    int order() const {
        int s = 0;
        for (int c : counts_)
            s += c;
        return s;
    }

    multi_index plus(int direction) const {
        multi_index m = *this;
        m.counts_[static_cast<size_t>(direction)] += 1;
        return m;
    }

    multi_index plus(const multi_index& o) const {
        multi_index m = *this;
        for (size_t i = 0; i < counts_.size(); ++i)
            m.counts_[i] += o.counts_[i];
        return m;
    }

    // α − e_a, requires α_a ≥ 1
    multi_index minus(int direction) const {
        multi_index m = *this;
        m.counts_[static_cast<size_t>(direction)] -= 1;
        return m;
    }

    const std::vector<int>& counts() const { return counts_; }

    auto operator<=>(const multi_index&) const = default;

    std::string to_string() const;

  private:
    std::vector<int> counts_;
};

// |α|! / Πᵢ αᵢ!  — the number of orderings of the derivative string ∂^α.
bigint multinomial(const multi_index& a);

// All multi-indices of the given total order in `dim` directions,
// lexicographically ascending. Deterministic enumeration order.
std::vector<multi_index> indices_of_order(int dim, int order);

} // namespace divform
