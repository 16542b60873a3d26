#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace plim {

/// Arbitrary-precision rational. Always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Builds p/q in canonical form. q must be nonzero.
Rational rat(long p, long q = 1);

/// Text form `p/q`; integers carry an explicit `/1`.
std::string to_string(const Rational& r);

/// Accepts only the canonical `p/q` text form: optional leading `-`,
/// no leading zeros, positive denominator, gcd(p, q) = 1, `/1` for
/// integers. Returns nullopt on anything else.
std::optional<Rational> parse_canonical_rational(std::string_view text);

/// Bit length of the denominator (1 for integers).
std::size_t denominator_bits(const Rational& r);

Rational abs_value(const Rational& r);

std::strong_ordering compare(const Rational& a, const Rational& b);

/// A rational confined to [0, 1].
class UnitRational {
public:
    UnitRational() = default;
    /// Throws Error(value_out_of_range) outside [0, 1].
    explicit UnitRational(Rational value);
    UnitRational(long p, long q);

    [[nodiscard]] const Rational& value() const noexcept { return value_; }

    friend bool operator==(const UnitRational& a, const UnitRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const UnitRational& a, const UnitRational& b) {
        return compare(a.value_, b.value_);
    }

private:
    Rational value_{0};
};

inline std::string to_string(const UnitRational& u) { return to_string(u.value()); }

} // namespace plim
