#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace zhouval {

// Exponent vector of a monomial; length equals the ambient variable count.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

// Graded lexicographic order (degree first, then lex), the canonical term
// order for printing and iteration.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Ordered variable context. Polynomials from different contexts never mix;
// contexts compare by their name lists.
class VarContext {
public:
    explicit VarContext(std::vector<std::string> names);
    size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<size_t> index_of(const std::string& name) const;
    bool operator==(const VarContext& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using VarContextPtr = std::shared_ptr<const VarContext>;

VarContextPtr make_vars(std::vector<std::string> names);

// Exact multivariate polynomial over the rationals. Immutable in spirit:
// all operations return new values. The zero polynomial has an empty term
// map; stored coefficients are never zero.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rat, GradedLexLess>;

    explicit Polynomial(VarContextPtr vars);
    static Polynomial zero(VarContextPtr vars) { return Polynomial(std::move(vars)); }
    static Polynomial constant(VarContextPtr vars, const Rat& c);
    static Polynomial monomial(VarContextPtr vars, Exponents e, const Rat& c);
    static Polynomial variable(VarContextPtr vars, size_t index, unsigned power = 1);

    const VarContextPtr& vars() const { return vars_; }
    size_t nvars() const { return vars_->size(); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Single-term test; the zero polynomial is not a monomial.
    bool is_monomial() const { return terms_.size() == 1; }

    // Coefficient of the given exponent (zero if absent).
    Rat coeff(const Exponents& e) const;
    // Value at the origin = constant coefficient.
    Rat value_at_origin() const { return coeff(Exponents(nvars(), 0)); }
    bool vanishes_at_origin() const { return value_at_origin().is_zero(); }

    std::vector<Exponents> support() const;
    unsigned degree() const;  // total degree; 0 for the zero polynomial

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial pow(unsigned k) const;
    Polynomial scaled(const Rat& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Canonical text form with explicit '*' and '^', graded-lex descending.
    std::string str() const;

    void add_term(const Exponents& e, const Rat& c);  // collects like terms

private:
    static void check_same_context(const Polynomial& a, const Polynomial& b);

    VarContextPtr vars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Parses an arithmetic expression over the declared variables with integer
// or rational literals, +, -, *, ^ (nonnegative integer powers) and
// parentheses. Reports the byte position on error.
Polynomial parse_polynomial(const std::string& text, VarContextPtr vars);

// Newton data: the support and the polytope-extremal subset for
// conv(support) + nonnegative orthant.
struct NewtonData {
    std::vector<Exponents> support;
    std::vector<Exponents> vertices;
};

NewtonData newton_data(const Polynomial& p);

// Membership of `point` in conv(generators) + nonnegative orthant, exact.
bool in_newton_polyhedron(const Exponents& point, const std::vector<Exponents>& generators);

}  // namespace zhouval
