#pragma once

#include "divform/scalar_poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace divform {

// Square matrix of scalar polynomials; rank N is the fiber rank of the
// session. Houses the ΨΦ bundle index pair: row = Ψ, column = Φ.
class matrix_poly {
  public:
    matrix_poly() : rank_(1), entries_(1) {}
    explicit matrix_poly(int rank) : rank_(rank), entries_(static_cast<size_t>(rank) * rank) {}

    static matrix_poly identity(int rank);
    // p · Identity
    static matrix_poly scalar(int rank, const scalar_poly& p);

    int rank() const { return rank_; }

    scalar_poly& at(int i, int j) { return entries_[static_cast<size_t>(i) * rank_ + j]; }
    const scalar_poly& at(int i, int j) const {
        return entries_[static_cast<size_t>(i) * rank_ + j];
    }

    bool is_zero() const;

    matrix_poly operator+(const matrix_poly& o) const;
    matrix_poly operator-(const matrix_poly& o) const;
    matrix_poly operator-() const;
    matrix_poly operator*(const matrix_poly& o) const; // matrix product
    matrix_poly scaled(const rational& c) const;
    matrix_poly scaled(const scalar_poly& p) const;

    bool operator==(const matrix_poly&) const = default;

    matrix_poly transpose() const;
    // (½(M+Mᵀ), ½(M−Mᵀ)); parts sum back to M exactly
    std::pair<matrix_poly, matrix_poly> sym_split() const;

    matrix_poly derive(int direction) const; // entrywise

    std::string to_string(const session& s) const;
    static matrix_poly parse(const session& s, std::string_view text);

  private:
    int rank_;
    std::vector<scalar_poly> entries_; // row-major
};

} // namespace divform
