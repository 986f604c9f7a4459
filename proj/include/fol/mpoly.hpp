#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fol/rational.hpp"

namespace fol {

// Exponent vector; length is the variable count of the ambient ring.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Graded lexicographic, x0 > x1 > ... ; fixed globally so printed
// polynomials and matrix row orders are reproducible.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;  // lexicographic on exponent vectors
    }
};

// Sparse multivariate polynomial over Rational. Terms are kept in
// descending grlex order; zero coefficients are never stored.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    explicit MPoly(int vars = 0) : vars_(vars) {}
    MPoly(int vars, const Rational& c);  // constant polynomial

    static MPoly variable(int vars, int index);  // x_index
    static MPoly monomial(int vars, const Monomial& m, const Rational& c);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // -1 for the zero polynomial
    int degree() const;
    int degree_in(int var) const;
    bool is_homogeneous() const;

    Rational coeff(const Monomial& m) const;
    const Monomial& leading_monomial() const;  // grlex; throws on zero
    Rational leading_coeff() const;

    void add_term(const Monomial& m, const Rational& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rational& c) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    bool operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly derivative(int var) const;

    // Exact composition; every image must live in one common ring.
    MPoly substitute(const std::vector<MPoly>& images) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    // Same w-weighted degree on every term, or nullopt.
    std::optional<long> weighted_degree(const std::vector<long>& w) const;

    // Appends k fresh trailing variables.
    MPoly extend(int extra) const;
    // Drops the last variable, which must not occur.
    MPoly project_last() const;

    std::string str() const;

private:
    int vars_;
    TermMap terms_;
};

inline MPoly operator*(const Rational& c, const MPoly& p) { return p * c; }

// Rational content: gcd of numerators over lcm of denominators, with the
// sign of the grlex-leading coefficient. p / content(p) has coprime integer
// coefficients and positive leading coefficient.
Rational content(const MPoly& p);
MPoly normalized(const MPoly& p);  // p / content(p); zero stays zero

// Quotient when q divides p exactly, nullopt otherwise.
std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& q);
inline bool divides(const MPoly& q, const MPoly& p) { return divide_exact(p, q).has_value(); }

// GCD over the rationals, normalized (content 1, positive leading
// coefficient); gcd(p, 0) = normalized(p).
MPoly poly_gcd(const MPoly& p, const MPoly& q);

// All monomials of the given total degree, in descending grlex order.
std::vector<Monomial> monomials_of_degree(int vars, int degree);

// Text form, e.g. "5*x0^2*x2 - 3*x1^3"; parser accepts the aliases
// x, y, z, w for x0..x3 plus parentheses and rational coefficients.
std::string to_string(const MPoly& p);
MPoly parse_poly(const std::string& text, int vars);

}  // namespace fol
