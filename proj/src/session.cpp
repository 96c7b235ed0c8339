#include "divform/session.hpp"

#include <stdexcept>

namespace divform {

session::session(int dim, int rank) : dim_(dim), rank_(rank) {
    if (dim < 1)
        throw std::invalid_argument("dim must be >= 1");
    if (rank < 1)
        throw std::invalid_argument("rank must be >= 1");
}

int session::declare(symbol_decl d) {
    if (d.name.empty())
        throw std::invalid_argument("empty symbol name");
    if (d.name == "D" || d.name == "x" || d.name == "d")
        throw std::invalid_argument("reserved name: " + d.name);
    if (find(d.name))
        throw std::invalid_argument("duplicate symbol: " + d.name);
    if (d.arity < 0)
        throw std::invalid_argument("negative arity");
    symbols_.push_back(std::move(d));
    return static_cast<int>(symbols_.size()) - 1;
}

std::optional<int> session::find(std::string_view name) const {
    for (size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == name)
            return static_cast<int>(i);
    return std::nullopt;
}

} // namespace divform
