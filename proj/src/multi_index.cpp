#include "divform/multi_index.hpp"

#include <sstream>

namespace divform {

std::string multi_index::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < counts_.size(); ++i) {
        if (i)
            os << ',';
        os << counts_[i];
    }
    os << ']';
    return os.str();
}

bigint multinomial(const multi_index& a) {
    bigint result = 1;
    int placed = 0;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 1; j <= a[i]; ++j) {
            ++placed;
            result = result * placed / j; // binomial running product stays integral
        }
    }
    return result;
}

static void enumerate(int dim, int pos, int remaining, std::vector<int>& cur,
                      std::vector<multi_index>& out) {
    if (pos == dim - 1) {
        cur[static_cast<size_t>(pos)] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (int c = 0; c <= remaining; ++c) {
        cur[static_cast<size_t>(pos)] = c;
        enumerate(dim, pos + 1, remaining - c, cur, out);
    }
}

std::vector<multi_index> indices_of_order(int dim, int order) {
    std::vector<multi_index> out;
    std::vector<int> cur(static_cast<size_t>(dim), 0);
    enumerate(dim, 0, order, cur, out);
    return out;
}

} // namespace divform
