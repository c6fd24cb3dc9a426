#pragma once

/// Affine forms c + sum_i a_i x_i over named variables, with exact coefficients.

#include <map>
#include <sstream>
#include <string>

#include "rslab/errors.hpp"
#include "rslab/rational.hpp"

namespace rslab {

class LinearForm {
public:
    LinearForm() = default;
    LinearForm(std::int64_t c) : constant_(c) {}  // NOLINT(google-explicit-constructor)
    LinearForm(BigRational c) : constant_(std::move(c)) {}  // NOLINT(google-explicit-constructor)

    static LinearForm variable(const std::string& name, BigRational coefficient = BigRational(1)) {
        LinearForm f;
        f.add(name, coefficient);
        return f;
    }

    [[nodiscard]] const BigRational& constant_term() const { return constant_; }
    [[nodiscard]] const std::map<std::string, BigRational>& coefficients() const { return coeffs_; }
    [[nodiscard]] BigRational coefficient(const std::string& name) const {
        auto it = coeffs_.find(name);
        return it == coeffs_.end() ? BigRational(0) : it->second;
    }

    void add(const std::string& name, const BigRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(name, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    LinearForm& operator+=(const LinearForm& o) {
        constant_ += o.constant_;
        for (const auto& [n, c] : o.coeffs_) add(n, c);
        return *this;
    }
    LinearForm& operator-=(const LinearForm& o) { return *this += BigRational(-1) * o; }
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(const BigRational& k, const LinearForm& f) {
        LinearForm r(k * f.constant_);
        for (const auto& [n, c] : f.coeffs_) r.add(n, k * c);
        return r;
    }
    friend bool operator==(const LinearForm&, const LinearForm&) = default;

    /// Replaces a variable by a form.
    [[nodiscard]] LinearForm substitute(const std::string& name, const LinearForm& value) const {
        LinearForm r = *this;
        const BigRational c = coefficient(name);
        if (c.is_zero()) return r;
        r.coeffs_.erase(name);
        return r + c * value;
    }

    /// Throws DomainError when a variable with nonzero coefficient has no value.
    [[nodiscard]] BigRational evaluate(const std::map<std::string, BigRational>& values) const {
        BigRational s = constant_;
        for (const auto& [n, c] : coeffs_) {
            auto it = values.find(n);
            if (it == values.end()) throw DomainError("no value for variable " + n);
            s += c * it->second;
        }
        return s;
    }

    [[nodiscard]] std::string str() const {
        std::ostringstream os;
        bool first = true;
        auto term = [&](const BigRational& c, const std::string& name) {
            const bool neg = c < BigRational(0);
            const BigRational a = neg ? -c : c;
            if (first) os << (neg ? "-" : "");
            else os << (neg ? " - " : " + ");
            first = false;
            if (name.empty()) os << a.str();
            else if (a == BigRational(1)) os << name;
            else os << a.str() << " " << name;
        };
        for (const auto& [n, c] : coeffs_) term(c, n);
        if (!constant_.is_zero() || first) term(constant_, "");
        return os.str();
    }

private:
    BigRational constant_{0};
    std::map<std::string, BigRational> coeffs_;
};

}  // namespace rslab
