#include "polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "simplex_candidates.hpp"

namespace zhouval {

unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error(ErrCode::kInvalidArgument, "empty variable context");
    for (size_t i = 0; i < names_.size(); ++i)
        for (size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw Error(ErrCode::kInvalidArgument, "duplicate variable name '" + names_[i] + "'");
}

std::optional<size_t> VarContext::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

VarContextPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarContext>(std::move(names));
}

Polynomial::Polynomial(VarContextPtr vars) : vars_(std::move(vars)) {
    if (!vars_) throw Error(ErrCode::kInvalidArgument, "null variable context");
}

Polynomial Polynomial::constant(VarContextPtr vars, const Rat& c) {
    Polynomial p(std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
}

Polynomial Polynomial::monomial(VarContextPtr vars, Exponents e, const Rat& c) {
    Polynomial p(std::move(vars));
    if (e.size() != p.nvars()) throw Error(ErrCode::kInvalidArgument, "exponent vector length mismatch");
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::variable(VarContextPtr vars, size_t index, unsigned power) {
    Polynomial p(std::move(vars));
    if (index >= p.nvars()) throw Error(ErrCode::kInvalidArgument, "variable index out of range");
    Exponents e(p.nvars(), 0);
    e[index] = power;
    p.add_term(e, Rat(1));
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rat Polynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<Exponents> Polynomial::support() const {
    std::vector<Exponents> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

unsigned Polynomial::degree() const {
    if (terms_.empty()) return 0;
    return total_degree(terms_.rbegin()->first);
}

void Polynomial::add_term(const Exponents& e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_same_context(const Polynomial& a, const Polynomial& b) {
    if (!(*a.vars_ == *b.vars_))
        throw Error(ErrCode::kInvalidArgument, "variable-context mismatch between polynomials");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial::check_same_context(a, b);
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial::check_same_context(a, b);
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial::check_same_context(a, b);
    Polynomial r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial acc = Polynomial::constant(vars_, Rat(1));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        base = base * base;
        k >>= 1u;
    }
    return acc;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Graded-lex descending, so leading terms come first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat ac = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = total_degree(e) > 0;
        bool unit = (ac == Rat(1));
        if (!unit || !has_vars) os << ac.str();
        bool printed = !unit || !has_vars;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << vars_->names()[i];
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

namespace {

// Recursive-descent parser for the polynomial grammar. Tracks byte
// positions (0-based) for error reporting.
class Parser {
public:
    Parser(const std::string& text, VarContextPtr vars) : text_(text), vars_(std::move(vars)) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrCode::kSyntax, msg + " at position " + std::to_string(pos_), pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (eat('^')) {
            long k = exponent();
            return base.pow(static_cast<unsigned>(k));
        }
        return base;
    }

    Polynomial atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(vars_, number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            std::string name = identifier();
            auto idx = vars_->index_of(name);
            if (!idx) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Polynomial::variable(vars_, *idx);
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string identifier() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Rat number() {
        std::string n = digits();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::string d = digits();
            return Rat::parse(n + "/" + d);
        }
        return Rat::parse(n);
    }

    std::string digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a digit");
        return text_.substr(start, pos_ - start);
    }

    // Exponent after '^': integer, optionally parenthesized and signed, so
    // that "z^(-1)" reports a negative exponent rather than a stray token.
    long exponent() {
        bool paren = eat('(');
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        skip_ws();
        size_t at = pos_;
        std::string n = digits();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            pos_ = at;
            fail("fractional exponent");
        }
        if (paren && !eat(')')) fail("expected ')' after exponent");
        if (neg) {
            pos_ = at;
            fail("negative exponent");
        }
        Rat r = Rat::parse(n);
        if (!r.is_integer() || r > Rat(1000000)) {
            pos_ = at;
            fail("exponent too large");
        }
        return r.to_long();
    }

    const std::string& text_;
    VarContextPtr vars_;
    size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, VarContextPtr vars) {
    return Parser(text, std::move(vars)).run();
}

bool in_newton_polyhedron(const Exponents& point, const std::vector<Exponents>& generators) {
    if (generators.empty()) return false;
    const size_t n = point.size();
    std::vector<RatVec> fam;
    fam.reserve(generators.size());
    for (const auto& g : generators) fam.push_back(to_ratvec(g));
    RatVec p = to_ratvec(point);
    // point lies in conv(G) + orthant iff <w,point> >= min_g <w,g> for every
    // w in the simplex; the gap is piecewise linear, so checking the
    // subdivision vertices is exact.
    for (const RatVec& w : simplex_candidates(n, {fam})) {
        Rat h = dot(w, fam[0]);
        for (size_t j = 1; j < fam.size(); ++j) {
            Rat v = dot(w, fam[j]);
            if (v < h) h = v;
        }
        if (dot(w, p) < h) return false;
    }
    return true;
}

NewtonData newton_data(const Polynomial& p) {
    if (p.is_zero()) throw Error(ErrCode::kInvalidArgument, "newton_data of the zero polynomial");
    NewtonData nd;
    nd.support = p.support();
    for (size_t i = 0; i < nd.support.size(); ++i) {
        std::vector<Exponents> others;
        others.reserve(nd.support.size() - 1);
        for (size_t j = 0; j < nd.support.size(); ++j)
            if (j != i) others.push_back(nd.support[j]);
        if (others.empty() || !in_newton_polyhedron(nd.support[i], others))
            nd.vertices.push_back(nd.support[i]);
    }
    return nd;
}

}  // namespace zhouval
