#include "knotmarket/laurent.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace knotmarket {

LaurentPoly LaurentPoly::constant(const mpz_class& c) {
    return term(c, 0);
}

LaurentPoly LaurentPoly::term(const mpz_class& coeff, int quarter_exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[quarter_exp] = coeff;
    return p;
}

int LaurentPoly::min_exponent() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

mpz_class LaurentPoly::coeff(int quarter_exp) const {
    auto it = terms_.find(quarter_exp);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::prune(int quarter_exp) {
    auto it = terms_.find(quarter_exp);
    if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        terms_[e] += c;
        prune(e);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        terms_[e] -= c;
        prune(e);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_) out.terms_[ea + eb] += ca * cb;
    for (auto it = out.terms_.begin(); it != out.terms_.end();) {
        if (it->second == 0)
            it = out.terms_.erase(it);
        else
            ++it;
    }
    return out;
}

LaurentPoly LaurentPoly::shifted(int quarter_exp) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e + quarter_exp] = c;
    return out;
}

LaurentPoly LaurentPoly::mirrored() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[-e] = c;
    return out;
}

bool LaurentPoly::exponents_multiple_of(int quarter_multiple) const {
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (e % quarter_multiple != 0) return false;
    }
    return true;
}

mpz_class LaurentPoly::evaluate_at_one() const {
    mpz_class sum = 0;
    for (const auto& [e, c] : terms_) {
        (void)e;
        sum += c;
    }
    return sum;
}

mpz_class LaurentPoly::evaluate_at_minus_one() const {
    if (!exponents_multiple_of(4))
        throw std::invalid_argument("evaluation at -1 needs integer exponents");
    mpz_class sum = 0;
    for (const auto& [e, c] : terms_) sum += (e / 4) % 2 == 0 ? c : -c;
    return sum;
}

std::vector<std::pair<int, mpz_class>> LaurentPoly::term_list() const {
    std::vector<std::pair<int, mpz_class>> out;
    out.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        out.emplace_back(it->first, it->second);
    return out;
}

LaurentPoly LaurentPoly::from_term_list(
    const std::vector<std::pair<int, mpz_class>>& list) {
    LaurentPoly out;
    for (const auto& [e, c] : list) {
        out.terms_[e] += c;
        out.prune(e);
    }
    return out;
}

namespace {

std::string exponent_string(const std::string& var, int quarter_exp) {
    int g = std::gcd(std::abs(quarter_exp), 4);
    int num = quarter_exp / g;
    int den = 4 / g;
    std::ostringstream os;
    if (den == 1) {
        if (num == 1) return var;
        os << var << '^' << num;
    } else {
        os << var << "^(" << num << '/' << den << ')';
    }
    return os.str();
}

}  // namespace

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        const mpz_class& c = it->second;
        const bool negative = c < 0;
        mpz_class mag = abs(c);
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (e == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            os << exponent_string(var, e);
        }
    }
    return os.str();
}

LaurentPoly conway_to_alexander(const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        if (e % 4 != 0)
            throw std::invalid_argument(
                "conway polynomial has a non-integer exponent of z");
        if (e < 0)
            throw std::invalid_argument(
                "conway polynomial has a negative exponent of z");
    }
    // z -> t^(1/2) - t^(-1/2): quarter exponents +2 and -2
    const LaurentPoly z_t =
        LaurentPoly::term(1, 2) + LaurentPoly::term(-1, -2);
    std::vector<LaurentPoly> powers{LaurentPoly::constant(1)};
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) {
        const int k = e / 4;
        while (static_cast<int>(powers.size()) <= k)
            powers.push_back(powers.back() * z_t);
        out += LaurentPoly::term(c, 0) * powers[k];
    }
    return out;
}

NormalizedAlexander alexander_normalize_full(const LaurentPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("cannot normalize the zero polynomial");
    const int lo = p.min_exponent();
    const int hi = p.max_exponent();
    // Units +-t^(k/2) shift all quarter exponents by the even amount 2k, so
    // (lo + hi) mod 4 is an invariant of the unit orbit: the range can be
    // centered on 0 exactly when it vanishes. Otherwise pick the orbit
    // representative with the lowest exponent in {0, 1}.
    LaurentPoly q;
    if ((((lo + hi) % 4) + 4) % 4 == 0) {
        q = p.shifted(-(lo + hi) / 2);
    } else {
        const int parity = ((lo % 2) + 2) % 2;
        q = p.shifted(parity - lo);
    }
    if (q.coeff(q.max_exponent()) < 0) q = -q;
    bool palindromic = true;
    for (const auto& [e, c] : q.terms()) {
        if (q.coeff(-e) != c) {
            palindromic = false;
            break;
        }
    }
    return {q, palindromic};
}

LaurentPoly alexander_normalize(const LaurentPoly& p) {
    return alexander_normalize_full(p).poly;
}

}  // namespace knotmarket
