#pragma once

#include "divform/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace divform {

// Exact trigonometric polynomial on the n-torus:
//     f = Σ_k  c_k cos(k·x) + s_k sin(k·x),   k ∈ Zⁿ.
// Frequencies are stored with the first nonzero component positive (the
// sine coefficient flips sign accordingly) so the representation is
// unique; for k = 0 the sine part vanishes identically.
class trig_poly {
  public:
    trig_poly() = default;
    explicit trig_poly(int dim) : dim_(dim) {}

    static trig_poly constant(int dim, const rational& c);
    static trig_poly harmonic(int dim, std::vector<int> freq, const rational& cos_c,
                              const rational& sin_c);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }

    const std::map<std::vector<int>, std::pair<rational, rational>>& terms() const {
        return terms_;
    }

    trig_poly operator+(const trig_poly& o) const;
    trig_poly operator-(const trig_poly& o) const;
    trig_poly operator-() const;
    trig_poly operator*(const trig_poly& o) const; // exact product-to-sum
    trig_poly scaled(const rational& c) const;
    trig_poly& operator+=(const trig_poly& o);

    bool operator==(const trig_poly&) const = default;

    trig_poly derive(int direction) const;

    // ∫ f over the torus in units of (2π)ⁿ: the zero-frequency cosine
    // coefficient
    rational integral() const;

    std::string to_string() const;

  private:
    void add_harmonic(std::vector<int> freq, rational cos_c, rational sin_c);

    int dim_ = 1;
    std::map<std::vector<int>, std::pair<rational, rational>> terms_;
};

} // namespace divform
