#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace knotmarket {

// Sparse Laurent polynomial in a single variable whose exponents live in
// (1/4)Z. Exponents are stored as integer numerators over the fixed
// denominator 4 ("quarter exponents"), coefficients as arbitrary-precision
// integers. Zero coefficients are never stored, so equality is structural.
//
// The same representation serves polynomials in the bracket variable A
// (quarter powers of t), in t itself (integer and half-integer powers), and
// in the skein variable z (integer powers, quarter exponent multiples of 4).
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(const mpz_class& c);
    static LaurentPoly constant(long c) { return constant(mpz_class(c)); }

    // coeff * x^(quarter_exp / 4)
    static LaurentPoly term(const mpz_class& coeff, int quarter_exp);
    static LaurentPoly term(long coeff, int quarter_exp) {
        return term(mpz_class(coeff), quarter_exp);
    }

    bool is_zero() const { return terms_.empty(); }

    // quarter-exponent -> coefficient, ascending exponent, no zeros
    const std::map<int, mpz_class>& terms() const { return terms_; }

    // Throw std::invalid_argument on the zero polynomial.
    int min_exponent() const;
    int max_exponent() const;

    mpz_class coeff(int quarter_exp) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
        return lhs.terms_ == rhs.terms_;
    }
    friend bool operator!=(const LaurentPoly& lhs, const LaurentPoly& rhs) {
        return !(lhs == rhs);
    }

    // Multiply by x^(quarter_exp / 4).
    LaurentPoly shifted(int quarter_exp) const;

    // x -> x^(-1)
    LaurentPoly mirrored() const;

    // True iff every exponent is an integer multiple of `quarter_multiple`
    // quarter units (e.g. 2 for half-integer powers, 4 for integer powers).
    bool exponents_multiple_of(int quarter_multiple) const;

    // Value at x = 1 (sum of coefficients; valid for any exponents).
    mpz_class evaluate_at_one() const;

    // Value at x = -1. Requires integer exponents only.
    mpz_class evaluate_at_minus_one() const;

    // Terms as (quarter exponent, coefficient) pairs, descending exponent.
    // Canonical exchange form; exact inverse of from_term_list.
    std::vector<std::pair<int, mpz_class>> term_list() const;
    static LaurentPoly from_term_list(
        const std::vector<std::pair<int, mpz_class>>& list);

    // Human-readable rendering, terms by descending exponent, fractional
    // exponents as reduced fractions: "-t^(5/2) - t^(1/2)", "z^2 + 1".
    std::string to_string(const std::string& var = "t") const;

private:
    std::map<int, mpz_class> terms_;

    void prune(int quarter_exp);
};

// Substitute z = t^(1/2) - t^(-1/2) into a polynomial in z. The input must
// have only non-negative integer exponents of z (quarter exponents that are
// multiples of 4); anything else leaves the Laurent ring in t^(1/2) and is
// rejected with std::invalid_argument.
LaurentPoly conway_to_alexander(const LaurentPoly& p);

struct NormalizedAlexander {
    LaurentPoly poly;
    bool palindromic = false;  // coeff(e) == coeff(-e) for all e
};

// Canonical unit-normal form of an Alexander polynomial: multiply by a unit
// +-t^(k/2) so the exponent range is centered on 0 and the coefficient at the
// highest exponent is positive. When no unit of that form can center the
// polynomial, the lowest exponent is shifted to 0 instead, the sign is fixed,
// and the result is flagged non-palindromic. Rejects the zero polynomial.
// Idempotent in both branches.
NormalizedAlexander alexander_normalize_full(const LaurentPoly& p);
LaurentPoly alexander_normalize(const LaurentPoly& p);

}  // namespace knotmarket
