#include "pars/weight.hpp"

#include <cctype>
#include <functional>
#include <ostream>

namespace pars {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Weight::Weight(long num, long den) {
    if (den == 0) throw WeightError("zero denominator");
    value_ = Rational(num, den);
    value_.canonicalize();
    if (sgn(value_) < 0) throw WeightError("negative weight");
}

Weight::Weight(Rational value) : value_(std::move(value)) {
    value_.canonicalize();
    if (sgn(value_) < 0) throw WeightError("negative weight");
}

Weight Weight::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw WeightError("malformed weight '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw WeightError("zero denominator in '" + std::string(text) + "'");
    Rational r(mpz_class(std::string(num), 10), d);
    return Weight(std::move(r));
}

std::string Weight::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Weight& Weight::operator+=(const Weight& o) {
    value_ += o.value_;
    return *this;
}

Weight& Weight::operator*=(const Weight& o) {
    value_ *= o.value_;
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    Rational r = value_ - o.value_;
    if (sgn(r) < 0) throw WeightError("weight subtraction went negative");
    value_ = std::move(r);
    return *this;
}

Weight operator/(const Weight& a, const Weight& b) {
    if (b.is_zero()) throw WeightError("division by zero weight");
    return Weight(Rational(a.value_ / b.value_));
}

std::size_t Weight::hash() const {
    std::hash<std::string> h;
    return h(value_.get_num().get_str(16)) * 31 + h(value_.get_den().get_str(16));
}

Weight abs_diff(const Weight& a, const Weight& b) {
    return a >= b ? a - b : b - a;
}

Weight inverse_power_of_two(unsigned k) {
    mpz_class den = 1;
    den <<= k;
    return Weight(Rational(mpz_class(1), den));
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

}  // namespace pars
