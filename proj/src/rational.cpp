#include "tnn/rational.hpp"

#include <limits>
#include <ostream>
#include <regex>

#include "tnn/errors.hpp"

namespace tnn {

namespace {

mpz_class to_mpz(std::int64_t v) {
    // mpz_class has no int64 constructor on every platform; go through text.
    if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
        return mpz_class(static_cast<long>(v));
    }
    return mpz_class(std::to_string(v));
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(to_mpz(n)) {}

Rational::Rational(std::int64_t n, std::int64_t d) : Rational(to_mpz(n), to_mpz(d)) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(n, d);
    value_.canonicalize();
}

Rational::Rational(mpz_class n) : value_(std::move(n)) {}

Rational::Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    static const std::regex fraction(R"(^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$)");
    static const std::regex decimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");

    const std::string s(text);
    std::smatch match;
    if (std::regex_match(s, match, fraction)) {
        std::string num = match[1].str();
        std::string den = match[2].str();
        if (!num.empty() && num[0] == '+') num.erase(0, 1);
        if (!den.empty() && den[0] == '+') den.erase(0, 1);
        return Rational(mpz_class(num), mpz_class(den));
    }
    if (std::regex_match(s, match, decimal)) {
        const std::string whole = match[2].str();
        const std::string frac = match[3].matched ? match[3].str() : std::string();
        if (whole.empty() && frac.empty()) {
            throw ParseError("not a number: '" + s + "'");
        }
        mpz_class digits(whole + frac);
        long exponent = -static_cast<long>(frac.size());
        if (match[4].matched) {
            try {
                exponent += std::stol(match[4].str());
            } catch (const std::exception&) {
                throw ParseError("exponent out of range: '" + s + "'");
            }
        }
        if (exponent > 4096 || exponent < -4096) {
            throw ParseError("exponent out of range: '" + s + "'");
        }
        if (match[1].str() == "-") digits = -digits;
        if (exponent >= 0) {
            return Rational(mpz_class(digits * pow10(static_cast<unsigned long>(exponent))));
        }
        return Rational(digits, pow10(static_cast<unsigned long>(-exponent)));
    }
    throw ParseError("not a rational number: '" + s + "'");
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational rational_normalize(std::int64_t n, std::int64_t d) { return Rational(n, d); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace tnn
