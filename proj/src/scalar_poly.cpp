#include "divform/scalar_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace divform {

int monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_)
        d += e;
    return d;
}

monomial monomial::times(const monomial& o) const {
    monomial r;
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first == b->first) {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        } else if (a->first < b->first) {
            r.factors_.push_back(*a++);
        } else {
            r.factors_.push_back(*b++);
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, o.factors_.end());
    return r;
}

monomial monomial::times(const poly_var& v, int exp) const {
    monomial single;
    single.factors_.emplace_back(v, exp);
    return times(single);
}

monomial monomial::without(size_t factor_pos) const {
    monomial r = *this;
    auto& f = r.factors_[factor_pos];
    if (--f.second == 0)
        r.factors_.erase(r.factors_.begin() + static_cast<std::ptrdiff_t>(factor_pos));
    return r;
}

std::strong_ordering monomial::grlex(const monomial& o) const {
    if (int d = degree(), e = o.degree(); d != e)
        return d <=> e;
    // lex tie-break on sorted sparse factor lists: at the first variable
    // where the exponents differ, the higher exponent wins; a variable
    // the other side lacks counts as exponent 0
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first == b->first) {
            if (a->second != b->second)
                return a->second <=> b->second;
            ++a;
            ++b;
        } else {
            return a->first < b->first ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
        }
    }
    if (a != factors_.end())
        return std::strong_ordering::greater;
    if (b != o.factors_.end())
        return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

scalar_poly scalar_poly::constant(rational c) {
    scalar_poly p;
    if (c != 0)
        p.terms_.emplace(monomial{}, std::move(c));
    return p;
}

scalar_poly scalar_poly::coordinate(int direction) {
    scalar_poly p;
    p.terms_.emplace(monomial{}.times(coord_var{direction}), rational(1));
    return p;
}

jet_var scalar_poly::make_jet_var(const session& s, int symbol, std::vector<int> slots,
                                  multi_index deriv) {
    const symbol_decl& decl = s.symbol(symbol);
    const int fiber = decl.matrix_valued ? 2 : 0;
    if (static_cast<int>(slots.size()) != decl.arity + fiber)
        throw std::invalid_argument("arity mismatch for symbol " + decl.name);
    if (deriv.dim() != s.dim())
        throw std::invalid_argument("deriv dimension mismatch");
    for (size_t i = 0; i < slots.size(); ++i) {
        const int bound = static_cast<int>(i) < fiber ? s.rank() : s.dim();
        if (slots[i] < 0 || slots[i] >= bound)
            throw std::invalid_argument("slot out of range for symbol " + decl.name);
    }
    if (decl.symmetric)
        std::sort(slots.begin() + fiber, slots.end());
    return jet_var{symbol, std::move(slots), std::move(deriv)};
}

scalar_poly scalar_poly::jet(const session& s, int symbol, std::vector<int> slots,
                             multi_index deriv) {
    scalar_poly p;
    p.terms_.emplace(
        monomial{}.times(make_jet_var(s, symbol, std::move(slots), std::move(deriv))),
        rational(1));
    return p;
}

bool scalar_poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

rational scalar_poly::constant_value() const {
    auto it = terms_.find(monomial{});
    return it == terms_.end() ? rational(0) : it->second;
}

void scalar_poly::add_term(const monomial& m, const rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

scalar_poly& scalar_poly::operator+=(const scalar_poly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

scalar_poly& scalar_poly::operator-=(const scalar_poly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

scalar_poly scalar_poly::operator+(const scalar_poly& o) const {
    scalar_poly r = *this;
    r += o;
    return r;
}

scalar_poly scalar_poly::operator-(const scalar_poly& o) const {
    scalar_poly r = *this;
    r -= o;
    return r;
}

scalar_poly scalar_poly::operator-() const {
    scalar_poly r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

scalar_poly scalar_poly::operator*(const scalar_poly& o) const {
    scalar_poly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ma.times(mb), ca * cb);
    return r;
}

scalar_poly scalar_poly::scaled(const rational& c) const {
    scalar_poly r;
    if (c == 0)
        return r;
    for (const auto& [m, coef] : terms_)
        r.terms_.emplace(m, coef * c);
    return r;
}

scalar_poly scalar_poly::derive(int direction) const {
    scalar_poly r;
    for (const auto& [m, c] : terms_) {
        const auto& factors = m.factors();
        for (size_t i = 0; i < factors.size(); ++i) {
            const auto& [v, exp] = factors[i];
            if (const auto* cv = std::get_if<coord_var>(&v)) {
                if (cv->direction == direction)
                    r.add_term(m.without(i), c * exp);
            } else {
                const auto& jv = std::get<jet_var>(v);
                jet_var shifted{jv.symbol, jv.slots, jv.deriv.plus(direction)};
                r.add_term(m.without(i).times(poly_var{std::move(shifted)}), c * exp);
            }
        }
    }
    return r;
}

std::string var_to_string(const session& s, const poly_var& v) {
    std::ostringstream os;
    if (const auto* cv = std::get_if<coord_var>(&v)) {
        os << "x[" << cv->direction << ']';
        return os.str();
    }
    const auto& jv = std::get<jet_var>(v);
    const symbol_decl& decl = s.symbol(jv.symbol);
    const bool derived = jv.deriv.order() > 0;
    if (derived)
        os << "d(";
    os << decl.name;
    size_t pos = 0;
    if (decl.matrix_valued) {
        os << '{' << jv.slots[0] << ',' << jv.slots[1] << '}';
        pos = 2;
    }
    if (pos < jv.slots.size()) {
        os << '[';
        for (size_t i = pos; i < jv.slots.size(); ++i) {
            if (i > pos)
                os << ',';
            os << jv.slots[i];
        }
        os << ']';
    }
    if (derived)
        os << ',' << jv.deriv.to_string() << ')';
    return os.str();
}

std::string scalar_poly::to_string(const session& s) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const rational mag = neg ? rational(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        const bool unit = (mag == 1) && !m.empty();
        if (!unit) {
            os << mag.str();
            if (!m.empty())
                os << '*';
        }
        bool firstf = true;
        for (const auto& [v, exp] : m.factors()) {
            if (!firstf)
                os << '*';
            firstf = false;
            os << var_to_string(s, v);
            if (exp > 1)
                os << '^' << exp;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------
// canonical-format parser

namespace {

struct poly_reader {
    const session& sess;
    std::string_view text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("scalar_poly parse: " + msg + " at offset " +
                                    std::to_string(pos));
    }

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            fail(std::string("expected '") + c + "'");
    }

    bool at_end() {
        skip_ws();
        return pos == text.size();
    }

    long integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos == text.size() || !isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer");
        long v = 0;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return neg ? -v : v;
    }

    rational rat() {
        long num = integer();
        if (eat('/'))
            return rational(num, integer());
        return rational(num);
    }

    std::vector<int> int_list(char open, char close) {
        std::vector<int> vals;
        expect(open);
        if (!eat(close)) {
            do {
                vals.push_back(static_cast<int>(integer()));
            } while (eat(','));
            expect(close);
        }
        return vals;
    }

    std::string name() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && (isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        if (start == pos)
            fail("expected symbol name");
        return std::string(text.substr(start, pos - start));
    }

    // SYM | SYM[slots] | SYM{i,j}[slots] | x[a] | d(base,[counts])
    poly_var variable() {
        skip_ws();
        if (pos < text.size() && text[pos] == 'd' && pos + 1 < text.size() &&
            text[pos + 1] == '(') {
            pos += 2;
            poly_var base = variable();
            auto* jv = std::get_if<jet_var>(&base);
            if (!jv)
                fail("d(...) of a coordinate symbol");
            expect(',');
            std::vector<int> counts = int_list('[', ']');
            if (static_cast<int>(counts.size()) != sess.dim())
                fail("deriv counts length mismatch");
            expect(')');
            jv->deriv = multi_index(std::move(counts));
            return base;
        }
        std::string n = name();
        if (n == "x") {
            std::vector<int> idx = int_list('[', ']');
            if (idx.size() != 1)
                fail("coordinate takes one index");
            if (idx[0] < 0 || idx[0] >= sess.dim())
                fail("coordinate index out of range");
            return coord_var{idx[0]};
        }
        auto id = sess.find(n);
        if (!id)
            fail("unknown symbol: " + n);
        std::vector<int> slots;
        skip_ws();
        if (pos < text.size() && text[pos] == '{') {
            std::vector<int> fib = int_list('{', '}');
            if (fib.size() != 2)
                fail("fiber index pair expected");
            slots = std::move(fib);
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '[') {
            std::vector<int> ts = int_list('[', ']');
            slots.insert(slots.end(), ts.begin(), ts.end());
        }
        return scalar_poly::make_jet_var(sess, *id, std::move(slots),
                                         multi_index(sess.dim()));
    }

    scalar_poly poly() {
        scalar_poly out;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos == text.size())
                break;
            int sign = 1;
            if (!first) {
                if (eat('+'))
                    sign = 1;
                else if (eat('-'))
                    sign = -1;
                else
                    break;
            } else if (eat('-')) {
                sign = -1;
            }
            first = false;
            out.add_term_from(*this, sign);
        }
        return out;
    }
};

} // namespace

// one signed term: [rational '*'] var['^'exp] ('*' var['^'exp])*
void scalar_poly_parse_term(poly_reader& r, scalar_poly& out, int sign);

// member hook so the reader can stay in the anonymous namespace
void scalar_poly::add_term_from(void* reader_ptr, int sign) {
    auto& r = *static_cast<poly_reader*>(reader_ptr);
    rational coef(1);
    monomial m;
    r.skip_ws();
    bool have_coef = false;
    if (r.pos < r.text.size() && isdigit(static_cast<unsigned char>(r.text[r.pos]))) {
        coef = r.rat();
        have_coef = true;
    }
    bool expect_var = !have_coef;
    if (have_coef) {
        // optional '*' then factors
        if (r.eat('*'))
            expect_var = true;
    }
    if (expect_var) {
        while (true) {
            poly_var v = r.variable();
            int exp = 1;
            if (r.eat('^'))
                exp = static_cast<int>(r.integer());
            m = m.times(v, exp);
            if (!r.eat('*'))
                break;
        }
    }
    add_term(m, sign < 0 ? rational(-coef) : coef);
}

scalar_poly scalar_poly::parse(const session& s, std::string_view text) {
    poly_reader r{s, text};
    r.skip_ws();
    if (r.pos < text.size() && text[r.pos] == '0' && r.pos + 1 >= text.size()) {
        return scalar_poly{};
    }
    scalar_poly p = r.poly();
    if (!r.at_end())
        r.fail("trailing input");
    return p;
}

} // namespace divform
