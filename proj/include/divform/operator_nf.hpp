#pragma once

#include "divform/matrix_poly.hpp"
#include "divform/multi_index.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace divform {

// Coefficient storage order: descending total order, then ascending
// lexicographic within an order. Iteration therefore starts at the top
// symbol, which is also the printing order.
struct alpha_order {
    bool operator()(const multi_index& a, const multi_index& b) const {
        const int oa = a.order(), ob = b.order();
        if (oa != ob)
            return oa > ob;
        return a < b;
    }
};

// Right-ordered normal form of a linear differential operator:
//     L = Σ_α C^α ∂^α
// with every derivative to the right of every coefficient. Only nonzero
// coefficient matrices are stored, so equality is structural and the
// representation is canonical.
class operator_nf {
  public:
    using coeff_map = std::map<multi_index, matrix_poly, alpha_order>;

    operator_nf() : dim_(1), rank_(1) {}
    operator_nf(int dim, int rank) : dim_(dim), rank_(rank) {}

    static operator_nf mult(int dim, matrix_poly m);
    static operator_nf mult(int dim, int rank, const scalar_poly& p); // p · Identity
    static operator_nf partial(int dim, int rank, int direction);

    int dim() const { return dim_; }
    int rank() const { return rank_; }

    bool is_zero() const { return coeffs_.empty(); }
    // max stored order; nullopt for the zero operator
    std::optional<int> order() const;

    const coeff_map& coeffs() const { return coeffs_; }
    // zero matrix if absent
    matrix_poly coefficient(const multi_index& a) const;
    void set_coefficient(const multi_index& a, matrix_poly m);
    void add_coefficient(const multi_index& a, const matrix_poly& m);

    // top-order coefficients (empty map for the zero operator)
    std::map<multi_index, matrix_poly> top_symbol() const;

    operator_nf operator+(const operator_nf& o) const;
    operator_nf operator-(const operator_nf& o) const;
    operator_nf operator-() const;
    operator_nf scaled(const rational& c) const;
    bool operator==(const operator_nf&) const = default;

    // ∂_a ∘ L, renormalized by one Leibniz step
    operator_nf d_left(int direction) const;
    // L ∘ ∂^β (derivatives commute, so this is a shift)
    operator_nf shift_right(const multi_index& b) const;
    // mult(M) ∘ L
    operator_nf mult_left(const matrix_poly& m) const;

    // this ∘ o, right-ordered
    operator_nf compose(const operator_nf& o) const;

    scalar_poly apply(const scalar_poly& f) const; // rank 1
    std::vector<scalar_poly> apply(const std::vector<scalar_poly>& f) const;

    // formal adjoint: Σ (−1)^{|α|} ∂^α ∘ mult((C^α)ᵀ), renormalized
    operator_nf adjoint() const;

    // (L₊, L₋) with L₊ = ½(L+L*), L₋ = ½(L−L*)
    std::pair<operator_nf, operator_nf> split_parts() const;
    bool is_self_adjoint() const;
    bool is_skew_adjoint() const;

    std::string to_string(const session& s) const;
    static operator_nf parse(const session& s, std::string_view text);

    // expression form in the surface language; reparses to the same
    // normal form
    std::string to_expression(const session& s) const;

  private:
    void check_compatible(const operator_nf& o) const;

    int dim_;
    int rank_;
    coeff_map coeffs_;
};

} // namespace divform
