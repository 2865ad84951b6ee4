#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pars {

/// Signed exact rational, used by the linear-algebra layers.
using Rational = mpq_class;

class WeightError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Non-negative exact rational. Always kept in lowest terms.
class Weight {
public:
    Weight() = default;
    Weight(long num) : Weight(Rational(num)) {}  // NOLINT(google-explicit-constructor)
    Weight(long num, long den);
    explicit Weight(Rational value);

    /// Parses `p/q` or an integer. Throws WeightError on malformed input.
    static Weight parse(std::string_view text);

    const Rational& value() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_positive() const { return sgn(value_) > 0; }

    /// Renders as `num/den`, or `num` when the denominator is 1.
    std::string str() const;

    Weight& operator+=(const Weight& o);
    Weight& operator*=(const Weight& o);
    /// Throws WeightError if the result would be negative.
    Weight& operator-=(const Weight& o);

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator*(Weight a, const Weight& b) { return a *= b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator/(const Weight& a, const Weight& b);

    friend bool operator==(const Weight& a, const Weight& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    std::size_t hash() const;

private:
    Rational value_{0};
};

/// |a - b|
Weight abs_diff(const Weight& a, const Weight& b);

/// 2^-k
Weight inverse_power_of_two(unsigned k);

std::ostream& operator<<(std::ostream& os, const Weight& w);

}  // namespace pars
