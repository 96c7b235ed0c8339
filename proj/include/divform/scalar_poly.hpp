#pragma once

#include "divform/multi_index.hpp"
#include "divform/rational.hpp"
#include "divform/session.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace divform {

// Built-in coordinate symbol x_a. ∂_a x_b = δ_ab, so coordinates never
// carry a jet prefix.
struct coord_var {
    int direction = 0;
    auto operator<=>(const coord_var&) const = default;
};

// Formal jet of a declared coefficient function: ∂^{deriv} SYM[slots].
// For matrix-valued symbols the first two slots are the fiber pair.
struct jet_var {
    int symbol = 0;
    std::vector<int> slots;
    multi_index deriv;
    auto operator<=>(const jet_var&) const = default;
};

// Canonical variable ordering: coordinates first (by direction), then jets
// by (declaration order, slots, deriv). variant<=> compares index() first.
using poly_var = std::variant<coord_var, jet_var>;

// Multiset of variables with positive exponents, kept sorted by variable.
class monomial {
  public:
    monomial() = default;

    int degree() const;
    bool empty() const { return factors_.empty(); }
    const std::vector<std::pair<poly_var, int>>& factors() const { return factors_; }

    monomial times(const monomial& o) const;
    monomial times(const poly_var& v, int exp = 1) const;

    // monomial with one factor removed (exponent decremented)
    monomial without(size_t factor_pos) const;

    bool operator==(const monomial&) const = default;

    // graded lexicographic: total degree first, then lex over the
    // canonical variable ordering (earlier variable with higher exponent
    // compares greater)
    std::strong_ordering grlex(const monomial& o) const;

  private:
    std::vector<std::pair<poly_var, int>> factors_;
};

struct monomial_greater {
    bool operator()(const monomial& a, const monomial& b) const {
        return a.grlex(b) == std::strong_ordering::greater;
    }
};

// Exact-rational polynomial in jet variables and coordinate symbols.
// Terms are stored in descending graded-lex order; zero coefficients are
// never stored, so equality is structural.
class scalar_poly {
  public:
    using term_map = std::map<monomial, rational, monomial_greater>;

    scalar_poly() = default;

    static scalar_poly constant(rational c);
    static scalar_poly coordinate(int direction);
    // sorts the tensor slots of symbols declared symmetric
    static scalar_poly jet(const session& s, int symbol, std::vector<int> slots,
                           multi_index deriv);
    static jet_var make_jet_var(const session& s, int symbol, std::vector<int> slots,
                                multi_index deriv);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    rational constant_value() const; // 0 for the zero polynomial

    const term_map& terms() const { return terms_; }

    scalar_poly operator+(const scalar_poly& o) const;
    scalar_poly operator-(const scalar_poly& o) const;
    scalar_poly operator-() const;
    scalar_poly operator*(const scalar_poly& o) const;
    scalar_poly scaled(const rational& c) const;
    scalar_poly& operator+=(const scalar_poly& o);
    scalar_poly& operator-=(const scalar_poly& o);

    bool operator==(const scalar_poly&) const = default;

    // ∂_a as a Leibniz-linear derivation; jets shift, coordinates reduce
    scalar_poly derive(int direction) const;

    void add_term(const monomial& m, const rational& c);

    std::string to_string(const session& s) const;
    // inverse of to_string; accepts exactly the canonical grammar
    static scalar_poly parse(const session& s, std::string_view text);

  private:
    term_map terms_;
};

std::string var_to_string(const session& s, const poly_var& v);

} // namespace divform
