#include "cylindre/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "cylindre/error.hpp"

namespace cylindre {

Polynomial Polynomial::constant(std::vector<std::string> vars, const Rational& c) {
    Polynomial p(std::move(vars));
    if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = c;
    return p;
}

Polynomial Polynomial::variable(const std::vector<std::string>& vars, const std::string& name) {
    Polynomial p(vars);
    Exponents e(vars.size(), 0);
    e[p.var_index(name)] = 1;
    p.terms_[e] = 1;
    return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> vars, Exponents exps, const Rational& c) {
    Polynomial p(std::move(vars));
    if (exps.size() != p.vars_.size()) throw error("monomial exponent arity mismatch");
    if (c != 0) p.terms_[std::move(exps)] = c;
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

std::size_t Polynomial::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw error("unknown variable: " + name);
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
    if (exps.size() != vars_.size()) throw error("term exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

static void require_same_vars(const Polynomial& a, const Polynomial& b) {
    if (a.vars() != b.vars()) throw error("variable list mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_vars(a, b);
    Polynomial out(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial out = constant(vars_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) out = out * base;
        base = base * base;
        e >>= 1u;
    }
    return out;
}

int Polynomial::degree(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (unsigned x : e) t += static_cast<int>(x);
        d = std::max(d, t);
    }
    return d;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) throw error("evaluation point dimension mismatch");
    Rational out(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t *= pow_rational(point[i], e[i]);
        out += t;
    }
    return out;
}

Interval Polynomial::evaluate_interval(const std::vector<Interval>& box) const {
    if (box.size() != vars_.size()) throw error("evaluation box dimension mismatch");
    Interval out{Rational(0), Rational(0)};
    for (const auto& [e, c] : terms_) {
        Interval t{Rational(1), Rational(1)};
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = interval_mul(t, interval_pow(box[i], e[i]));
        out = interval_add(out, interval_scale(t, c));
    }
    return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= vars_.size()) throw error("unknown variable index");
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        out.add_term(d, c * Rational(e[var]));
    }
    return out;
}

Polynomial Polynomial::derivative(const std::string& var) const {
    return derivative(var_index(var));
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
    if (var >= vars_.size()) throw error("unknown variable index");
    std::vector<std::string> nv = vars_;
    nv.erase(nv.begin() + static_cast<std::ptrdiff_t>(var));
    Polynomial out(nv);
    Exponents d(nv.size());
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0, j = 0; i < e.size(); ++i)
            if (i != var) d[j++] = e[i];
        Rational coef = c;
        if (e[var] > 0) coef *= pow_rational(value, e[var]);
        out.add_term(d, coef);
    }
    return out;
}

Polynomial Polynomial::embedded(const std::vector<std::string>& superset) const {
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(superset.begin(), superset.end(), vars_[i]);
        if (it == superset.end()) throw error("embedded: missing variable " + vars_[i]);
        where[i] = static_cast<std::size_t>(it - superset.begin());
    }
    Polynomial out(superset);
    Exponents d(superset.size());
    for (const auto& [e, c] : terms_) {
        std::fill(d.begin(), d.end(), 0u);
        for (std::size_t i = 0; i < e.size(); ++i) d[where[i]] = e[i];
        out.add_term(d, c);
    }
    return out;
}

Polynomial Polynomial::restricted(const std::vector<std::string>& subset) const {
    std::vector<std::ptrdiff_t> where(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(subset.begin(), subset.end(), vars_[i]);
        if (it != subset.end()) where[i] = it - subset.begin();
    }
    Polynomial out(subset);
    Exponents d(subset.size());
    for (const auto& [e, c] : terms_) {
        std::fill(d.begin(), d.end(), 0u);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0) throw error("restricted: variable in use: " + vars_[i]);
            d[static_cast<std::size_t>(where[i])] = e[i];
        }
        out.add_term(d, c);
    }
    return out;
}

static int term_total_degree(const Exponents& e) {
    int t = 0;
    for (unsigned x : e) t += static_cast<int>(x);
    return t;
}

// graded-lex, used for display order and leading-term selection
static bool grlex_less(const Exponents& a, const Exponents& b) {
    int da = term_total_degree(a), db = term_total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exponents, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* x, auto* y) { return grlex_less(y->first, x->first); });

    std::ostringstream out;
    bool first = true;
    for (auto* t : order) {
        const auto& [e, c] = *t;
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;

        bool any_var = term_total_degree(e) > 0;
        bool coef_shown = !any_var || a != 1;
        if (coef_shown) out << cylindre::to_string(a);
        bool need_star = coef_shown;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << vars_[i];
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

InitialForm initial_form(const Polynomial& f) {
    if (f.is_zero()) throw error("initial form of the zero polynomial");
    int low = -1;
    for (const auto& [e, c] : f.terms()) {
        int t = term_total_degree(e);
        if (low < 0 || t < low) low = t;
    }
    Polynomial form(f.vars());
    for (const auto& [e, c] : f.terms())
        if (term_total_degree(e) == low) form.add_term(e, c);
    return {static_cast<unsigned>(low), form};
}

Polynomial primitive_normalized(const Polynomial& f) {
    if (f.is_zero()) return f;
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : f.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();

    const Exponents* lead = nullptr;
    for (const auto& [e, c] : f.terms())
        if (!lead || grlex_less(*lead, e)) lead = &e;
    if (f.terms().at(*lead) < 0) factor = -factor;

    Polynomial out = f;
    out *= factor;
    return out;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    require_same_vars(a, b);
    if (b.is_zero()) throw error("division by the zero polynomial");
    if (a.is_zero()) return a;

    auto leading = [](const Polynomial& p) {
        const Exponents* best = nullptr;
        for (const auto& [e, c] : p.terms())
            if (!best || *best < e) best = &e;  // plain lex is a monomial order
        return std::pair<const Exponents*, const Rational*>{best, &p.terms().at(*best)};
    };

    Polynomial r = a;
    Polynomial q(a.vars());
    auto [eb, cb] = leading(b);
    Exponents diff(a.vars().size());
    while (!r.is_zero()) {
        auto [er, cr] = leading(r);
        bool divides = true;
        for (std::size_t i = 0; i < diff.size(); ++i) {
            if ((*er)[i] < (*eb)[i]) {
                divides = false;
                break;
            }
            diff[i] = (*er)[i] - (*eb)[i];
        }
        if (!divides) throw error("non-exact polynomial division");
        Rational c = *cr / *cb;
        q.add_term(diff, c);
        r -= Polynomial::monomial(a.vars(), diff, c) * b;
    }
    return q;
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0;
    }
    return false;
}

UnivariateView UnivariateView::of(const Polynomial& p, const std::string& main) {
    UnivariateView v;
    v.base = p;
    v.main_variable = main;
    std::size_t mi = p.var_index(main);
    std::vector<std::string> rest = p.vars();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(mi));

    int d = p.degree(mi);
    if (d < 0) return v;  // zero polynomial: no coefficients
    std::vector<Polynomial> cs(static_cast<std::size_t>(d) + 1, Polynomial(rest));
    Exponents reduced(rest.size());
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0, j = 0; i < e.size(); ++i)
            if (i != mi) reduced[j++] = e[i];
        cs[e[mi]].add_term(reduced, c);
    }
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
    v.coefficients = std::move(cs);
    return v;
}

const Polynomial& UnivariateView::leading() const {
    if (coefficients.empty()) throw error("leading coefficient of the zero polynomial");
    return coefficients.back();
}

Polynomial UnivariateView::reassemble() const {
    Polynomial out(base.vars());
    std::size_t mi = base.var_index(main_variable);
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        Polynomial lifted = coefficients[j].embedded(base.vars());
        Exponents e(base.vars().size(), 0);
        e[mi] = static_cast<unsigned>(j);
        out += lifted * Polynomial::monomial(base.vars(), e, Rational(1));
    }
    return out;
}

PolyVec coeffs_in(const Polynomial& p, std::size_t main_var) {
    int d = p.degree(main_var);
    if (d < 0) return {};
    PolyVec cs(static_cast<std::size_t>(d) + 1, Polynomial(p.vars()));
    for (const auto& [e, c] : p.terms()) {
        Exponents r = e;
        r[main_var] = 0;
        cs[e[main_var]].add_term(r, c);
    }
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
    return cs;
}

Polynomial assemble(const PolyVec& coeffs, const std::vector<std::string>& vars,
                    std::size_t main_var) {
    Polynomial out(vars);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        for (const auto& [e, c] : coeffs[j].terms()) {
            Exponents d = e;
            d[main_var] += static_cast<unsigned>(j);
            out.add_term(d, c);
        }
    }
    return out;
}

namespace {

void vec_normalize(PolyVec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

PolyVec vec_scale(const PolyVec& v, const Polynomial& c) {
    PolyVec out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p * c);
    vec_normalize(out);
    return out;
}

// a - c * x^shift * b
PolyVec vec_sub_shifted(const PolyVec& a, const Polynomial& c, std::size_t shift,
                        const PolyVec& b, const std::vector<std::string>& vars) {
    PolyVec out = a;
    if (out.size() < b.size() + shift) out.resize(b.size() + shift, Polynomial(vars));
    for (std::size_t j = 0; j < b.size(); ++j) out[j + shift] -= c * b[j];
    vec_normalize(out);
    return out;
}

// lc(b)^(deg a - deg b + 1) * a mod b
PolyVec pseudo_remainder(PolyVec a, const PolyVec& b, const std::vector<std::string>& vars) {
    if (b.empty()) throw error("pseudo-division by zero");
    const Polynomial& c = b.back();
    std::size_t db = b.size() - 1;
    long e = static_cast<long>(a.size()) - static_cast<long>(b.size()) + 1;
    while (!a.empty() && a.size() - 1 >= db) {
        Polynomial s = a.back();
        std::size_t shift = a.size() - 1 - db;
        a = vec_sub_shifted(vec_scale(a, c), s, shift, b, vars);
        --e;
    }
    for (; e > 0; --e) a = vec_scale(a, c);
    return a;
}

}  // namespace

std::vector<PolyVec> subresultant_prs(const Polynomial& a, const Polynomial& b,
                                      std::size_t main_var) {
    const auto& vars = a.vars();
    PolyVec A = coeffs_in(a, main_var);
    PolyVec B = coeffs_in(b, main_var);
    if (A.empty() || B.empty()) throw error("subresultant chain of a zero polynomial");
    if (A.size() < B.size()) std::swap(A, B);

    std::vector<PolyVec> chain{A, B};
    Polynomial g = Polynomial::constant(vars, 1);
    Polynomial h = g;
    PolyVec f1 = A;
    PolyVec f2 = B;
    while (true) {
        std::size_t delta = f1.size() - f2.size();  // deg f1 - deg f2
        PolyVec r = pseudo_remainder(f1, f2, vars);
        if (r.empty()) break;
        Polynomial beta = g * h.pow(static_cast<unsigned>(delta));
        PolyVec next;
        next.reserve(r.size());
        for (const auto& p : r) next.push_back(exact_divide(p, beta));
        f1 = std::move(f2);
        f2 = std::move(next);
        g = f1.back();
        if (delta > 0)
            h = exact_divide(g.pow(static_cast<unsigned>(delta)),
                             h.pow(static_cast<unsigned>(delta - 1)));
        chain.push_back(f2);
        if (f2.size() == 1) break;  // reached degree 0
    }
    return chain;
}

Polynomial resultant_up_to_factor(const Polynomial& a, const Polynomial& b,
                                  std::size_t main_var) {
    PolyVec A = coeffs_in(a, main_var);
    PolyVec B = coeffs_in(b, main_var);
    if (A.empty() || B.empty()) return Polynomial(a.vars());  // res(·,0) treated as 0
    if (A.size() == 1) return A[0];
    if (B.size() == 1) return B[0];
    auto chain = subresultant_prs(a, b, main_var);
    const PolyVec& last = chain.back();
    if (last.size() == 1) return last[0];
    return Polynomial(a.vars());  // nontrivial gcd: resultant vanishes identically
}

}  // namespace cylindre
