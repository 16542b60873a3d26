#include "plim/rational.hpp"

#include <cctype>

#include "plim/error.hpp"

namespace plim {

Rational rat(long p, long q) {
    if (q == 0) {
        throw Error(ErrorCode::precondition, "zero denominator");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool canonical_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return s.size() == 1 || s.front() != '0';
}

} // namespace

std::optional<Rational> parse_canonical_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return std::nullopt;
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = !num.empty() && num.front() == '-';
    if (negative) {
        num.remove_prefix(1);
    }
    if (!canonical_digits(num) || !canonical_digits(den)) {
        return std::nullopt;
    }
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0 || (negative && p == 0)) {
        return std::nullopt;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) {
        return std::nullopt;
    }
    if (negative) {
        p = -p;
    }
    Rational r(p, q);
    return r;
}

std::size_t denominator_bits(const Rational& r) {
    return mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

Rational abs_value(const Rational& r) {
    return sgn(r) < 0 ? Rational(-r) : r;
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
    int c = cmp(a, b);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

UnitRational::UnitRational(Rational value) : value_(std::move(value)) {
    value_.canonicalize();
    if (sgn(value_) < 0 || value_ > 1) {
        throw Error(ErrorCode::value_out_of_range, "value " + to_string(value_) + " outside [0, 1]");
    }
}

UnitRational::UnitRational(long p, long q) : UnitRational(rat(p, q)) {}

} // namespace plim
