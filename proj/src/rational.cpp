#include "cylindre/rational.hpp"

#include <algorithm>

#include "cylindre/error.hpp"

namespace cylindre {

Rational pow_rational(const Rational& base, unsigned long exp) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    // base canonical => base^e canonical, no reduction needed
    return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw error("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw error("malformed rational literal: " + text);
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw error("malformed rational literal: " + text);
    if (mpz_sgn(q.get_den_mpz_t()) == 0) throw error("zero denominator in: " + text);
    q.canonicalize();
    return q;
}

Interval interval_add(const Interval& a, const Interval& b) {
    return {a.first + b.first, a.second + b.second};
}

Interval interval_mul(const Interval& a, const Interval& b) {
    Rational p1 = a.first * b.first;
    Rational p2 = a.first * b.second;
    Rational p3 = a.second * b.first;
    Rational p4 = a.second * b.second;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

Interval interval_pow(const Interval& a, unsigned e) {
    if (e == 0) return {Rational(1), Rational(1)};
    Rational lo = pow_rational(a.first, e);
    Rational hi = pow_rational(a.second, e);
    if (e % 2 == 1) return {lo, hi};
    if (a.first >= 0) return {lo, hi};
    if (a.second <= 0) return {hi, lo};
    return {Rational(0), std::max(lo, hi)};
}

Interval interval_scale(const Interval& a, const Rational& c) {
    if (c >= 0) return {a.first * c, a.second * c};
    return {a.second * c, a.first * c};
}

}  // namespace cylindre
