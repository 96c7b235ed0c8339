#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace divform {

// A declared coefficient function. Tensor slots range over 0..dim−1; a
// symbol declared `symmetric` stores one component per sorted slot tuple.
// A `matrix_valued` symbol carries an extra fiber index pair (ΨΦ) realized
// as two leading slots ranging over 0..rank−1, never symmetrized.
struct symbol_decl {
    std::string name;
    int arity = 0;
    bool symmetric = false;
    bool matrix_valued = false;
};

// Session-level configuration: dimension n, fiber rank N, and the symbol
// table. Fixed once built; declaration order defines the canonical
// variable ordering used by the polynomial algebra.
class session {
  public:
    session(int dim, int rank);

    int dim() const { return dim_; }
    int rank() const { return rank_; }

    // returns the symbol id; throws on duplicates and reserved names
    int declare(symbol_decl d);

    const symbol_decl& symbol(int id) const { return symbols_[static_cast<size_t>(id)]; }
    int symbol_count() const { return static_cast<int>(symbols_.size()); }
    std::optional<int> find(std::string_view name) const;

  private:
    int dim_;
    int rank_;
    std::vector<symbol_decl> symbols_;
};

} // namespace divform
