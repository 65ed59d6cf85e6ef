#pragma once

#include <map>
#include <string>
#include <vector>

#include "cylindre/rational.hpp"

namespace cylindre {

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial with exact rational coefficients over an
/// ordered variable list. Canonical: no zero coefficients are stored, so two
/// equal polynomials have identical term maps.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(std::vector<std::string> vars, const Rational& c);
    static Polynomial variable(const std::vector<std::string>& vars, const std::string& name);
    static Polynomial monomial(std::vector<std::string> vars, Exponents exps, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // 0 for the zero polynomial

    std::size_t var_index(const std::string& name) const;  // throws if unknown

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    bool operator==(const Polynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned e) const;

    int degree(std::size_t var) const;  // -1 for the zero polynomial
    int total_degree() const;           // -1 for the zero polynomial

    Rational evaluate(const std::vector<Rational>& point) const;
    Interval evaluate_interval(const std::vector<Interval>& box) const;

    Polynomial derivative(std::size_t var) const;
    Polynomial derivative(const std::string& var) const;

    /// Substitutes an exact value for one variable; the variable is removed
    /// from the list.
    Polynomial substitute(std::size_t var, const Rational& value) const;

    /// Same polynomial over a superset variable list (by name).
    Polynomial embedded(const std::vector<std::string>& superset) const;

    /// Drops variables the polynomial does not use. Throws if a dropped name
    /// actually occurs.
    Polynomial restricted(const std::vector<std::string>& subset) const;

    void add_term(const Exponents& exps, const Rational& c);

    /// Canonical text form: graded-lex descending terms, "^" powers,
    /// "*" products, rational coefficients in lowest terms.
    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

/// Lowest-degree nonzero homogeneous part and its degree.
struct InitialForm {
    unsigned order;
    Polynomial form;
};
InitialForm initial_form(const Polynomial& f);

/// Content-free version of f: integer-coprime coefficients and a positive
/// leading (graded-lex) coefficient. Scaling factor is a positive rational,
/// so signs are preserved everywhere. Zero maps to zero.
Polynomial primitive_normalized(const Polynomial& f);

/// Quotient a/b when division is exact; throws cylindre::error otherwise.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Deterministic order used wherever polynomial lists need sorting.
bool canonical_less(const Polynomial& a, const Polynomial& b);

/// Presentation of a polynomial as a univariate polynomial in one main
/// variable with coefficients over the remaining variables.
struct UnivariateView {
    Polynomial base;
    std::string main_variable;
    std::vector<Polynomial> coefficients;  // index j = coefficient of main^j

    static UnivariateView of(const Polynomial& p, const std::string& main);
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    const Polynomial& leading() const;
    Polynomial reassemble() const;  // equals base exactly
};

// Dense univariate-in-one-variable helpers over a polynomial coefficient
// ring. Index = power of the main variable; invariant: back() is nonzero.
using PolyVec = std::vector<Polynomial>;

PolyVec coeffs_in(const Polynomial& p, std::size_t main_var);
Polynomial assemble(const PolyVec& coeffs, const std::vector<std::string>& vars,
                    std::size_t main_var);

/// Subresultant polynomial remainder sequence of (a, b) with respect to
/// main_var, starting from the two inputs. Members are true subresultants up
/// to nonzero rational factors.
std::vector<PolyVec> subresultant_prs(const Polynomial& a, const Polynomial& b,
                                      std::size_t main_var);

/// Resultant of (a, b) w.r.t. main_var up to a nonzero rational factor;
/// the zero polynomial exactly when the true resultant vanishes.
Polynomial resultant_up_to_factor(const Polynomial& a, const Polynomial& b,
                                  std::size_t main_var);

}  // namespace cylindre
