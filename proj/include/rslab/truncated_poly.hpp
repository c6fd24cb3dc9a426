#pragma once

/**
 * @file truncated_poly.hpp
 * @brief Polynomials in a few formal variables modulo per-variable degree cutoffs.
 *
 * A PolyRing names its variables and fixes, for each one, the largest exponent
 * kept. TruncatedPoly is an element of Q[x_1..x_k]/(x_1^{c_1+1}, ..., x_k^{c_k+1})
 * stored sparsely: zero coefficients are never kept. Every product discards the
 * terms that overflow a cutoff, so the ring axioms hold exactly on what is kept.
 *
 * These rings play two roles. Q[h]/(h^{n+1}) is the part of the cohomology of a
 * complete intersection generated by the hyperplane class, and a product of such
 * rings is the cohomology of a product manifold. An extra variable y (cutoff n)
 * carries the parameter of the chi_y genus.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rslab/errors.hpp"
#include "rslab/rational.hpp"

namespace rslab {

inline constexpr std::size_t kMaxPolyVars = 6;

/// Exponent tuple; unused slots stay zero.
using Exponent = std::array<std::int16_t, kMaxPolyVars>;

class PolyRing {
public:
    PolyRing() = default;
    PolyRing(std::vector<std::string> names, std::vector<int> cutoffs)
        : names_(std::move(names)), cutoffs_(std::move(cutoffs)) {
        if (names_.size() != cutoffs_.size())
            throw StructuralError("PolyRing: one cutoff per variable required");
        if (names_.size() > kMaxPolyVars)
            throw StructuralError("PolyRing: at most " + std::to_string(kMaxPolyVars) + " variables");
        for (int c : cutoffs_)
            if (c < 0) throw StructuralError("PolyRing: negative cutoff");
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw StructuralError("PolyRing: duplicate variable " + names_[i]);
    }

    /// Single-variable ring Q[name]/(name^{cutoff+1}).
    static PolyRing univariate(std::string name, int cutoff) { return PolyRing({std::move(name)}, {cutoff}); }

    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] const std::vector<int>& cutoffs() const { return cutoffs_; }
    [[nodiscard]] int cutoff(std::size_t i) const { return cutoffs_.at(i); }
    [[nodiscard]] const std::string& name(std::size_t i) const { return names_.at(i); }

    [[nodiscard]] std::size_t index_of(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) throw StructuralError("PolyRing: no variable named " + name);
        return static_cast<std::size_t>(it - names_.begin());
    }
    [[nodiscard]] bool has(const std::string& name) const {
        return std::find(names_.begin(), names_.end(), name) != names_.end();
    }

    /// Ring with the variables of `other` appended (names must not clash).
    [[nodiscard]] PolyRing extended(const PolyRing& other) const {
        auto names = names_;
        auto cutoffs = cutoffs_;
        names.insert(names.end(), other.names_.begin(), other.names_.end());
        cutoffs.insert(cutoffs.end(), other.cutoffs_.begin(), other.cutoffs_.end());
        return PolyRing(std::move(names), std::move(cutoffs));
    }

    /// Exponent with every variable at its cutoff.
    [[nodiscard]] Exponent top() const {
        Exponent e{};
        for (std::size_t i = 0; i < size(); ++i) e[i] = static_cast<std::int16_t>(cutoffs_[i]);
        return e;
    }

    friend bool operator==(const PolyRing&, const PolyRing&) = default;

private:
    std::vector<std::string> names_;
    std::vector<int> cutoffs_;
};

template <typename Coeff = BigRational>
class TruncatedPoly {
public:
    using coefficient_type = Coeff;
    using TermMap = std::map<Exponent, Coeff>;

    TruncatedPoly() = default;
    explicit TruncatedPoly(PolyRing ring) : ring_(std::move(ring)) {}

    static TruncatedPoly constant(const PolyRing& ring, const Coeff& c) {
        TruncatedPoly p(ring);
        p.add_term(Exponent{}, c);
        return p;
    }

    /// The monomial coeff * var^power (zero if power exceeds the cutoff).
    static TruncatedPoly monomial(const PolyRing& ring, const std::string& var, int power,
                                  const Coeff& coeff = Coeff(1)) {
        TruncatedPoly p(ring);
        Exponent e{};
        e[ring.index_of(var)] = static_cast<std::int16_t>(power);
        p.add_term(e, coeff);
        return p;
    }

    /// Univariate polynomial from coefficients c[0] + c[1] x + ...
    static TruncatedPoly from_coefficients(const PolyRing& ring, const std::vector<Coeff>& coeffs) {
        if (ring.size() != 1) throw StructuralError("from_coefficients needs a one-variable ring");
        TruncatedPoly p(ring);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            Exponent e{};
            e[0] = static_cast<std::int16_t>(k);
            p.add_term(e, coeffs[k]);
        }
        return p;
    }

    [[nodiscard]] const PolyRing& ring() const { return ring_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] Coeff coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }
    [[nodiscard]] Coeff coefficient(std::initializer_list<int> exps) const {
        Exponent e{};
        std::size_t i = 0;
        for (int x : exps) e.at(i++) = static_cast<std::int16_t>(x);
        return coefficient(e);
    }
    [[nodiscard]] Coeff constant_term() const { return coefficient(Exponent{}); }

    /// Adds c * x^e, silently dropping it if e overflows a cutoff.
    void add_term(const Exponent& e, const Coeff& c) {
        if (c == Coeff(0) || !fits(e)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == Coeff(0)) terms_.erase(it);
        }
    }

    [[nodiscard]] bool fits(const Exponent& e) const {
        for (std::size_t i = 0; i < kMaxPolyVars; ++i) {
            if (i < ring_.size()) {
                if (e[i] < 0 || e[i] > ring_.cutoff(i)) return false;
            } else if (e[i] != 0) {
                return false;
            }
        }
        return true;
    }

    TruncatedPoly& operator+=(const TruncatedPoly& o) {
        require_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    TruncatedPoly& operator-=(const TruncatedPoly& o) {
        require_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    TruncatedPoly& operator*=(const Coeff& s) {
        if (s == Coeff(0)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) { return a += b; }
    friend TruncatedPoly operator-(TruncatedPoly a, const TruncatedPoly& b) { return a -= b; }
    friend TruncatedPoly operator-(TruncatedPoly a) { return a *= Coeff(-1); }
    friend TruncatedPoly operator*(TruncatedPoly a, const Coeff& s) { return a *= s; }
    friend TruncatedPoly operator*(const Coeff& s, TruncatedPoly a) { return a *= s; }

    friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
        a.require_same_ring(b);
        TruncatedPoly r(a.ring_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e{};
                bool ok = true;
                for (std::size_t i = 0; i < a.ring_.size(); ++i) {
                    const int s = ea[i] + eb[i];
                    if (s > a.ring_.cutoff(i)) {
                        ok = false;
                        break;
                    }
                    e[i] = static_cast<std::int16_t>(s);
                }
                if (ok) r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    TruncatedPoly& operator*=(const TruncatedPoly& o) { return *this = *this * o; }

    friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

    /// Re-expresses this polynomial in `target`, matching variables by name.
    /// Variables absent from `target` must not occur; overflowing terms are dropped.
    [[nodiscard]] TruncatedPoly embed(const PolyRing& target) const {
        std::vector<std::size_t> map(ring_.size());
        for (std::size_t i = 0; i < ring_.size(); ++i) map[i] = target.index_of(ring_.name(i));
        TruncatedPoly r(target);
        for (const auto& [e, c] : terms_) {
            Exponent t{};
            for (std::size_t i = 0; i < ring_.size(); ++i) t[map[i]] = e[i];
            r.add_term(t, c);
        }
        return r;
    }

    /// Substitutes a scalar for one variable; the result lives in the ring without it.
    [[nodiscard]] TruncatedPoly substitute(const std::string& var, const Coeff& value) const {
        const std::size_t k = ring_.index_of(var);
        std::vector<std::string> names;
        std::vector<int> cutoffs;
        for (std::size_t i = 0; i < ring_.size(); ++i) {
            if (i == k) continue;
            names.push_back(ring_.name(i));
            cutoffs.push_back(ring_.cutoff(i));
        }
        TruncatedPoly r(PolyRing(std::move(names), std::move(cutoffs)));
        for (const auto& [e, c] : terms_) {
            Exponent t{};
            std::size_t j = 0;
            for (std::size_t i = 0; i < ring_.size(); ++i)
                if (i != k) t[j++] = e[i];
            Coeff v = c;
            for (int p = 0; p < e[k]; ++p) v *= value;
            r.add_term(t, v);
        }
        return r;
    }

    /// Terms whose total degree in the listed variables equals `degree`.
    [[nodiscard]] TruncatedPoly homogeneous_part(int degree, const std::vector<std::string>& vars) const {
        std::vector<std::size_t> idx;
        for (const auto& v : vars) idx.push_back(ring_.index_of(v));
        TruncatedPoly r(ring_);
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (auto i : idx) d += e[i];
            if (d == degree) r.add_term(e, c);
        }
        return r;
    }

    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            for (std::size_t i = 0; i < ring_.size(); ++i) {
                if (e[i] == 0) continue;
                os << "*" << ring_.name(i);
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    void require_same_ring(const TruncatedPoly& o) const {
        if (!(ring_ == o.ring_)) throw StructuralError("TruncatedPoly: operands live in different rings");
    }

    PolyRing ring_;
    TermMap terms_;
};

using Poly = TruncatedPoly<BigRational>;

/// Product with overflow terms discarded; throws StructuralError on mismatched rings.
template <typename C>
TruncatedPoly<C> poly_mul(const TruncatedPoly<C>& f, const TruncatedPoly<C>& g) {
    return f * g;
}

/// exp(f) = sum f^k/k!; requires f(0) = 0 so the sum is finite in the truncated ring.
template <typename C>
TruncatedPoly<C> series_exp(const TruncatedPoly<C>& f) {
    if (f.constant_term() != C(0)) throw DomainError("series_exp: constant term must be 0");
    auto result = TruncatedPoly<C>::constant(f.ring(), C(1));
    auto term = result;
    for (int k = 1; !term.is_zero(); ++k) {
        term = term * f;
        term *= C(1) / C(k);
        result += term;
    }
    return result;
}

/// log(f) = sum (-1)^{k+1} (f-1)^k / k; requires f(0) = 1.
template <typename C>
TruncatedPoly<C> series_log(const TruncatedPoly<C>& f) {
    if (f.constant_term() != C(1)) throw DomainError("series_log: constant term must be 1");
    const auto g = f - TruncatedPoly<C>::constant(f.ring(), C(1));
    TruncatedPoly<C> result(f.ring());
    auto power = g;
    for (int k = 1; !power.is_zero(); ++k) {
        auto t = power;
        t *= C(k % 2 == 1 ? 1 : -1) / C(k);
        result += t;
        power = power * g;
    }
    return result;
}

/// Multiplicative inverse; requires an invertible constant term.
template <typename C>
TruncatedPoly<C> series_inverse(const TruncatedPoly<C>& f) {
    const C c0 = f.constant_term();
    if (c0 == C(0)) throw DomainError("series_inverse: constant term must be nonzero");
    auto g = f;
    g *= C(1) / c0;
    g -= TruncatedPoly<C>::constant(f.ring(), C(1));  // f/c0 = 1 + g
    auto result = TruncatedPoly<C>::constant(f.ring(), C(1));
    auto power = result;
    while (true) {
        power = -(power * g);
        if (power.is_zero()) break;
        result += power;
    }
    result *= C(1) / c0;
    return result;
}

/// f^k in the truncated ring.
template <typename C>
TruncatedPoly<C> power(const TruncatedPoly<C>& f, unsigned k) {
    auto result = TruncatedPoly<C>::constant(f.ring(), C(1));
    auto base = f;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

/**
 * Power series expansion of numerator/denominator in one variable, exact up to
 * `cutoff`. The denominator's constant term must be invertible; the expansion
 * is the unique series e with numerator = denominator * e through degree cutoff.
 */
template <typename C = BigRational>
class RationalFunctionSeries {
public:
    RationalFunctionSeries(TruncatedPoly<C> numerator, TruncatedPoly<C> denominator, int cutoff)
        : ring_(PolyRing::univariate(var_name(numerator, denominator), cutoff)),
          numerator_(numerator.embed(ring_)),
          denominator_(denominator.embed(ring_)),
          expansion_(ring_) {
        if (denominator_.constant_term() == C(0))
            throw DomainError("RationalFunctionSeries: denominator constant term must be invertible");
        const C d0 = denominator_.constant_term();
        std::vector<C> e(static_cast<std::size_t>(cutoff) + 1, C(0));
        for (int k = 0; k <= cutoff; ++k) {
            C acc = numerator_.coefficient({k});
            for (int j = 1; j <= k; ++j) {
                const C dj = denominator_.coefficient({j});
                if (dj != C(0)) acc -= dj * e[static_cast<std::size_t>(k - j)];
            }
            e[static_cast<std::size_t>(k)] = acc / d0;
        }
        expansion_ = TruncatedPoly<C>::from_coefficients(ring_, e);
    }

    [[nodiscard]] int cutoff() const { return ring_.cutoff(0); }
    [[nodiscard]] const TruncatedPoly<C>& expansion() const { return expansion_; }
    [[nodiscard]] const TruncatedPoly<C>& numerator() const { return numerator_; }
    [[nodiscard]] const TruncatedPoly<C>& denominator() const { return denominator_; }

    /// Exact coefficient of z^k; RangeError above the cutoff.
    [[nodiscard]] C coefficient(int k) const {
        if (k < 0 || k > cutoff())
            throw RangeError("series coefficient " + std::to_string(k) + " beyond cutoff " +
                             std::to_string(cutoff()));
        return expansion_.coefficient({k});
    }

private:
    static std::string var_name(const TruncatedPoly<C>& n, const TruncatedPoly<C>& d) {
        if (n.ring().size() != 1 || d.ring().size() != 1 || n.ring().name(0) != d.ring().name(0))
            throw StructuralError("RationalFunctionSeries: numerator and denominator must share one variable");
        return n.ring().name(0);
    }

    PolyRing ring_;
    TruncatedPoly<C> numerator_;
    TruncatedPoly<C> denominator_;
    TruncatedPoly<C> expansion_;
};

template <typename C>
C series_coefficient(const RationalFunctionSeries<C>& s, int k) {
    return s.coefficient(k);
}

}  // namespace rslab
