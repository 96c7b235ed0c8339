#pragma once

#include "divform/operator_nf.hpp"
#include "divform/session.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace divform {

struct parse_error : std::runtime_error {
    parse_error(int line, int col, const std::string& msg)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

// An index in the surface syntax: a concrete digit or an abstract letter.
// Letters repeated exactly twice within a product are summed 0..n−1.
struct index_ref {
    bool concrete = true;
    int value = 0;   // concrete
    char letter = 0; // abstract
    auto operator<=>(const index_ref&) const = default;
};

struct expr_ast;

// factor kinds of the expression grammar
struct fac_partial {
    index_ref idx;
}; // D[i]
struct fac_coord {
    index_ref idx;
}; // x[i]
struct fac_symbol {
    int symbol = 0;
    std::vector<index_ref> indices;
}; // S[a,b] or bare name
struct fac_jet { // d(SYM{i,j}[slots],[counts]) — printed form of a jet variable
    int symbol = 0;
    std::optional<std::pair<int, int>> fiber;
    std::vector<index_ref> slots;
    std::vector<int> deriv_counts;
};
struct fac_paren {
    std::shared_ptr<expr_ast> sub;
};
struct fac_matrix { // [[e00, e01],[e10, e11]]: derivative-free scalar entries
    std::vector<std::vector<std::shared_ptr<expr_ast>>> rows;
};

using factor = std::variant<fac_partial, fac_coord, fac_symbol, fac_jet, fac_paren, fac_matrix>;

struct term_ast {
    int sign = 1;
    rational coef = 1;
    std::vector<factor> factors; // may be empty for a bare rational
};

struct expr_ast {
    std::vector<term_ast> terms;
};

struct program {
    session sess;
    expr_ast expr;
};

// Parses `{decl ";"} expr`; diagnostics carry line and column.
program parse_program(std::string_view text);

// Expands Einstein sums and juxtaposed compositions into normal form.
// The same elaboration is used for re-parsing printed operators, so two
// α-equivalent index namings elaborate identically by construction.
operator_nf elaborate(const session& s, const expr_ast& e);

// Convenience: parse_program + elaborate.
std::pair<session, operator_nf> parse_operator(std::string_view text);

} // namespace divform
