#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars.
 *
 * BigRational wraps boost::multiprecision::cpp_rational. Values are always in
 * lowest terms with a positive denominator; zero is 0/1. Nothing in this
 * library ever converts to floating point.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "rslab/errors.hpp"

namespace rslab {

using BigInt = boost::multiprecision::cpp_int;

class BigRational {
public:
    using value_type = boost::multiprecision::cpp_rational;

    BigRational() = default;
    BigRational(std::int64_t n) : v_(n) {}  // NOLINT: implicit from integers is intended
    BigRational(int n) : v_(n) {}           // NOLINT
    BigRational(const BigInt& n) : v_(n) {} // NOLINT
    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_ = den < 0 ? value_type(-num, -den) : value_type(num, den);
        check();
    }
    BigRational(std::int64_t num, std::int64_t den) : BigRational(BigInt(num), BigInt(den)) {}

    [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    [[nodiscard]] bool is_zero() const { return v_ == 0; }
    [[nodiscard]] bool is_integer() const { return denominator() == 1; }
    [[nodiscard]] int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    /// Integer value; throws DomainError if not integral or out of int64 range.
    [[nodiscard]] std::int64_t to_int64() const {
        if (!is_integer()) throw DomainError("rational " + str() + " is not an integer");
        const BigInt n = numerator();
        if (n > BigInt(INT64_MAX) || n < BigInt(INT64_MIN))
            throw DomainError("integer " + str() + " exceeds 64 bits");
        return static_cast<std::int64_t>(n);
    }

    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    /// Inverse of str(); also accepts "p/q" not in lowest terms.
    static BigRational parse(std::string_view text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) return BigRational(BigInt(std::string(text)));
            return BigRational(BigInt(std::string(text.substr(0, slash))),
                               BigInt(std::string(text.substr(slash + 1))));
        } catch (const DomainError&) {
            throw;
        } catch (const std::exception&) {
            throw DomainError("cannot parse rational '" + std::string(text) + "'");
        }
    }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; check(); return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; check(); return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; check(); return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        v_ /= o.v_;
        check();
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a) { BigRational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

    [[nodiscard]] bool is_canonical() const {
        const BigInt d = denominator();
        return d > 0 && gcd(numerator(), d) == 1;
    }

private:
    void check() const { assert(is_canonical()); }

    value_type v_{0};
};

inline BigRational pow(BigRational base, unsigned exponent) {
    BigRational result(1);
    while (exponent) {
        if (exponent & 1u) result *= base;
        base *= base;
        exponent >>= 1u;
    }
    return result;
}

inline BigRational factorial(unsigned n) {
    BigRational r(1);
    for (unsigned k = 2; k <= n; ++k) r *= BigRational(static_cast<std::int64_t>(k));
    return r;
}

inline BigRational binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return BigRational(0);
    BigRational r(1);
    for (std::int64_t i = 1; i <= k; ++i) r = r * BigRational(n - k + i) / BigRational(i);
    return r;
}

}  // namespace rslab
