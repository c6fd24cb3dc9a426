#pragma once

/**
 * @file characteristic_classes.hpp
 * @brief Chern/Pontryagin calculus, multiplicative genera and the
 *        Rarita-Schwinger index  ind Q = <A^(TM) (ch(TM^C) + 1), [M]>.
 *
 * Everything is symmetric-function calculus in formal Chern roots x_i. A genus
 * with characteristic series Q(x) is evaluated as
 *
 *     prod_i Q(x_i) = exp( sum_k a_k s_k ),   log Q(x) = sum_k a_k x^k,
 *
 * where s_k are the power sums of the Chern roots, obtained from the Chern
 * classes through Newton's identities. The characteristic series are written
 * in a Chern root:
 *
 *     A^    : (x/2) / sinh(x/2)
 *     L     : x / tanh(x)
 *     Todd  : x / (1 - e^{-x})
 *     chi_y : x (1 + y e^{-x(1+y)}) / (1 - e^{-x(1+y)})
 *
 * so A^ and L are even and depend only on the Pontryagin classes.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rslab/errors.hpp"
#include "rslab/exact_linear.hpp"
#include "rslab/rational.hpp"
#include "rslab/truncated_poly.hpp"

namespace rslab {

/// Name of the genus parameter variable; cohomology generators must not use it.
inline const std::string kGenusParameter = "y";

/**
 * Chern classes c_1..c_n of a complex n-manifold, as elements of a truncated
 * ring whose top monomial (every generator at its cutoff) has degree n, plus
 * the value of that top monomial on the fundamental class.
 */
class ChernProfile {
public:
    ChernProfile(PolyRing ring, std::vector<Poly> chern, BigRational pairing)
        : ring_(std::move(ring)), chern_(std::move(chern)), pairing_(std::move(pairing)) {
        int top = 0;
        for (int c : ring_.cutoffs()) top += c;
        if (top != static_cast<int>(chern_.size()))
            throw StructuralError("ChernProfile: top monomial degree " + std::to_string(top) +
                                  " differs from complex dimension " + std::to_string(chern_.size()));
        if (ring_.has(kGenusParameter))
            throw StructuralError("ChernProfile: variable name 'y' is reserved");
        for (std::size_t k = 0; k < chern_.size(); ++k) {
            if (!(chern_[k].ring() == ring_)) throw StructuralError("ChernProfile: class in foreign ring");
            if (!(chern_[k].homogeneous_part(static_cast<int>(k + 1), ring_.names()) == chern_[k]))
                throw StructuralError("ChernProfile: c_" + std::to_string(k + 1) + " is not of degree " +
                                      std::to_string(k + 1));
        }
    }

    /// c_k = coeffs[k-1] h^k in Q[h]/(h^{n+1}), n = coeffs.size().
    static ChernProfile from_coefficients(const std::vector<BigRational>& coeffs, BigRational pairing,
                                          const std::string& var = "h") {
        const int n = static_cast<int>(coeffs.size());
        const PolyRing ring = PolyRing::univariate(var, n);
        std::vector<Poly> chern;
        for (int k = 1; k <= n; ++k)
            chern.push_back(Poly::monomial(ring, var, k, coeffs[static_cast<std::size_t>(k - 1)]));
        return ChernProfile(ring, std::move(chern), std::move(pairing));
    }

    /// Profile from a total Chern class 1 + c_1 + ... given as one polynomial.
    static ChernProfile from_total_class(const Poly& total, BigRational pairing) {
        const auto& ring = total.ring();
        int n = 0;
        for (int c : ring.cutoffs()) n += c;
        if (total.constant_term() != BigRational(1))
            throw DomainError("total Chern class must have constant term 1");
        std::vector<Poly> chern;
        for (int k = 1; k <= n; ++k) chern.push_back(total.homogeneous_part(k, ring.names()));
        return ChernProfile(ring, std::move(chern), std::move(pairing));
    }

    [[nodiscard]] int complex_dimension() const { return static_cast<int>(chern_.size()); }
    [[nodiscard]] int real_dimension() const { return 2 * complex_dimension(); }
    [[nodiscard]] const PolyRing& ring() const { return ring_; }
    [[nodiscard]] const std::vector<Poly>& chern() const { return chern_; }
    [[nodiscard]] const Poly& chern(int k) const { return chern_.at(static_cast<std::size_t>(k - 1)); }
    [[nodiscard]] const BigRational& pairing() const { return pairing_; }

    [[nodiscard]] Poly total_chern_class() const {
        Poly t = Poly::constant(ring_, BigRational(1));
        for (const auto& c : chern_) t += c;
        return t;
    }

    /// Coefficient of h^k in c_k for single-generator profiles.
    [[nodiscard]] BigRational chern_coefficient(int k) const {
        require_univariate();
        return chern(k).coefficient({k});
    }

    /// <cls, [M]>: top-monomial coefficient times the pairing.
    [[nodiscard]] BigRational integrate(const Poly& cls) const {
        if (!(cls.ring() == ring_)) throw StructuralError("integrate: class in foreign ring");
        return cls.coefficient(ring_.top()) * pairing_;
    }

    /// Profile of M x N: Chern classes multiply, pairings multiply.
    [[nodiscard]] ChernProfile product(const ChernProfile& other) const {
        // Rename the right factor's generators away from ours.
        std::vector<std::string> names = other.ring_.names();
        for (auto& nm : names)
            while (ring_.has(nm) || std::count(names.begin(), names.end(), nm) > 1) nm += "'";
        const PolyRing right(names, other.ring_.cutoffs());
        const PolyRing joint = ring_.extended(right);
        auto rename = [&](const Poly& p) {
            Poly r(right);
            for (const auto& [e, c] : p.terms()) r.add_term(e, c);
            return r.embed(joint);
        };
        const Poly total = total_chern_class().embed(joint) * rename(other.total_chern_class());
        return from_total_class(total, pairing_ * other.pairing_);
    }

    /// Single-generator profiles keep their Chern data as h^k coefficients.
    [[nodiscard]] bool is_univariate() const { return ring_.size() == 1; }

private:
    void require_univariate() const {
        if (!is_univariate()) throw StructuralError("profile has more than one generator");
    }

    PolyRing ring_;
    std::vector<Poly> chern_;
    BigRational pairing_;
};

// ---------------------------------------------------------------------------
// Newton's identities

/// Power sums s_1..s_n of the Chern roots.
inline std::vector<Poly> chern_to_power_sums(const ChernProfile& c) {
    const int n = c.complex_dimension();
    std::vector<Poly> s;
    for (int k = 1; k <= n; ++k) {
        Poly sk = c.chern(k) * BigRational(k % 2 == 1 ? k : -k);
        for (int i = 1; i < k; ++i) {
            Poly t = c.chern(i) * s[static_cast<std::size_t>(k - i - 1)];
            if (i % 2 == 1) sk += t; else sk -= t;
        }
        s.push_back(std::move(sk));
    }
    return s;
}

/// Coefficients of h^k in s_k for a single-generator profile.
inline std::vector<BigRational> power_sum_coefficients(const ChernProfile& c) {
    const auto s = chern_to_power_sums(c);
    std::vector<BigRational> out;
    for (std::size_t k = 0; k < s.size(); ++k) out.push_back(s[k].coefficient({static_cast<int>(k + 1)}));
    if (!c.is_univariate()) throw StructuralError("power_sum_coefficients: profile has several generators");
    return out;
}

/// Elementary symmetric functions e_1..e_n from power sums p_1..p_n.
inline std::vector<Poly> power_sums_to_elementary(const PolyRing& ring, const std::vector<Poly>& p) {
    std::vector<Poly> e;  // e[k] = e_{k+1}
    const Poly one = Poly::constant(ring, BigRational(1));
    for (std::size_t k = 1; k <= p.size(); ++k) {
        Poly acc(ring);
        for (std::size_t i = 1; i <= k; ++i) {
            const Poly& prev = (k == i) ? one : e[k - i - 1];
            Poly t = prev * p[i - 1];
            if (i % 2 == 1) acc += t; else acc -= t;
        }
        acc *= BigRational(1) / BigRational(static_cast<std::int64_t>(k));
        e.push_back(std::move(acc));
    }
    return e;
}

/// Inverse Newton: Chern classes back from power sums.
inline std::vector<Poly> power_sums_to_chern(const PolyRing& ring, const std::vector<Poly>& s) {
    return power_sums_to_elementary(ring, s);
}

// ---------------------------------------------------------------------------
// Pontryagin data

/// Partitions of m, most parts first: m=3 gives (1,1,1), (1,2), (3).
inline std::vector<std::vector<int>> pontryagin_basis(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int min_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = min_part; p <= remaining; ++p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, 1);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

inline std::string pontryagin_monomial_name(const std::vector<int>& partition) {
    std::string s;
    for (std::size_t i = 0; i < partition.size();) {
        std::size_t j = i;
        while (j < partition.size() && partition[j] == partition[i]) ++j;
        s += "p" + std::to_string(partition[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

/// Pontryagin classes p_k = e_k(x_1^2, ..., x_n^2), k = 1..floor(n/2).
inline std::vector<Poly> pontryagin_classes(const ChernProfile& c) {
    const auto s = chern_to_power_sums(c);
    std::vector<Poly> squared;  // power sums of x_i^2
    for (std::size_t j = 2; j <= s.size(); j += 2) squared.push_back(s[j - 1]);
    return power_sums_to_elementary(c.ring(), squared);
}

/// Pontryagin numbers of a 4m-manifold on the basis of degree-m monomials.
struct PontryaginVector {
    int real_dimension = 0;
    std::vector<std::vector<int>> basis;
    std::vector<BigRational> numbers;

    [[nodiscard]] const BigRational& operator[](const std::string& monomial) const {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (pontryagin_monomial_name(basis[i]) == monomial) return numbers[i];
        throw RangeError("no Pontryagin monomial " + monomial);
    }
};

/// Odd complex dimension gives the empty basis (no top-degree Pontryagin monomials).
inline PontryaginVector chern_to_pontryagin(const ChernProfile& c) {
    PontryaginVector v;
    v.real_dimension = c.real_dimension();
    if (c.complex_dimension() % 2 != 0) return v;
    const int m = c.complex_dimension() / 2;
    const auto p = pontryagin_classes(c);
    v.basis = pontryagin_basis(m);
    for (const auto& part : v.basis) {
        Poly prod = Poly::constant(c.ring(), BigRational(1));
        for (int k : part) prod = prod * p[static_cast<std::size_t>(k - 1)];
        v.numbers.push_back(c.integrate(prod));
    }
    return v;
}

// ---------------------------------------------------------------------------
// Genera

enum class GenusKind { AHat, L, Todd, ChiY };

inline std::string to_string(GenusKind k) {
    switch (k) {
        case GenusKind::AHat: return "AHAT";
        case GenusKind::L: return "L";
        case GenusKind::Todd: return "TODD";
        case GenusKind::ChiY: return "CHI_Y";
    }
    return "?";
}

/// A multiplicative genus given by its characteristic series in a Chern root x
/// (ring "x", or "x","y" for chi_y), kept to degree `degree`.
struct GenusSpec {
    GenusKind kind;
    Poly series;

    [[nodiscard]] int degree() const { return series.ring().cutoff(0); }
};

namespace detail {

inline PolyRing root_ring(int degree) { return PolyRing::univariate("x", degree); }

/// sum_k sign^k x^k / (k + offset)!  over the retained degrees.
inline Poly exp_like(const PolyRing& ring, int offset, int sign) {
    Poly p(ring);
    const int d = ring.cutoff(0);
    for (int k = 0; k <= d; ++k) {
        Exponent e{};
        e[0] = static_cast<std::int16_t>(k);
        BigRational c = BigRational(1) / factorial(static_cast<unsigned>(k + offset));
        if (sign < 0 && k % 2 == 1) c = -c;
        p.add_term(e, c);
    }
    return p;
}

/// sinh(a x)/(a x) = sum (a x)^{2k} / (2k+1)!
inline Poly sinh_over_arg(const PolyRing& ring, const BigRational& a) {
    Poly p(ring);
    for (int k = 0; 2 * k <= ring.cutoff(0); ++k) {
        Exponent e{};
        e[0] = static_cast<std::int16_t>(2 * k);
        p.add_term(e, pow(a, static_cast<unsigned>(2 * k)) / factorial(static_cast<unsigned>(2 * k + 1)));
    }
    return p;
}

inline Poly cosh_series(const PolyRing& ring) {
    Poly p(ring);
    for (int k = 0; 2 * k <= ring.cutoff(0); ++k) {
        Exponent e{};
        e[0] = static_cast<std::int16_t>(2 * k);
        p.add_term(e, BigRational(1) / factorial(static_cast<unsigned>(2 * k)));
    }
    return p;
}

}  // namespace detail

inline GenusSpec ahat_genus(int degree) {
    const auto ring = detail::root_ring(degree);
    return {GenusKind::AHat, series_inverse(detail::sinh_over_arg(ring, BigRational(1, 2)))};
}

inline GenusSpec l_genus(int degree) {
    const auto ring = detail::root_ring(degree);
    return {GenusKind::L, detail::cosh_series(ring) * series_inverse(detail::sinh_over_arg(ring, BigRational(1)))};
}

inline GenusSpec todd_genus(int degree) {
    // (1 - e^{-x})/x = sum (-x)^k/(k+1)!
    const auto ring = detail::root_ring(degree);
    return {GenusKind::Todd, series_inverse(detail::exp_like(ring, 1, -1))};
}

/// x(1 + y e^{-t})/(1 - e^{-t}) with t = x(1+y) equals 1/B(t) - x y, B(t) = (1 - e^{-t})/t.
inline GenusSpec chi_y_genus(int degree) {
    const PolyRing ring({"x", kGenusParameter}, {degree, degree});
    const Poly x = Poly::monomial(ring, "x", 1);
    const Poly y = Poly::monomial(ring, kGenusParameter, 1);
    const Poly t = x * (Poly::constant(ring, BigRational(1)) + y);
    Poly b(ring);
    Poly tk = Poly::constant(ring, BigRational(1));
    for (int k = 0; k <= degree; ++k) {
        BigRational c = BigRational(1) / factorial(static_cast<unsigned>(k + 1));
        if (k % 2 == 1) c = -c;
        b += tk * c;
        tk = tk * t;
    }
    return {GenusKind::ChiY, series_inverse(b) - x * y};
}

inline GenusSpec make_genus(GenusKind kind, int degree) {
    switch (kind) {
        case GenusKind::AHat: return ahat_genus(degree);
        case GenusKind::L: return l_genus(degree);
        case GenusKind::Todd: return todd_genus(degree);
        case GenusKind::ChiY: return chi_y_genus(degree);
    }
    throw DomainError("unknown genus");
}

/// Total genus class prod_i Q(x_i) in the profile's ring (with y appended for chi_y).
inline Poly genus_class(const GenusSpec& g, const ChernProfile& c) {
    const int n = c.complex_dimension();
    if (g.series.constant_term() != BigRational(1)) throw DomainError("genus series must satisfy Q(0) = 1");
    if (g.degree() < n)
        throw RangeError("genus series known to degree " + std::to_string(g.degree()) + " < dimension " +
                         std::to_string(n));
    const bool has_y = g.series.ring().size() == 2;
    PolyRing target = c.ring();
    if (has_y) target = target.extended(PolyRing::univariate(kGenusParameter, n));

    const Poly logq = series_log(g.series);
    const auto s = chern_to_power_sums(c);
    Poly total(target);
    for (int k = 1; k <= n; ++k) {
        // a_k = coefficient of x^k in log Q, a polynomial in y for chi_y.
        Poly ak(target);
        for (const auto& [e, coeff] : logq.terms()) {
            if (e[0] != k) continue;
            if (has_y) ak += Poly::monomial(target, kGenusParameter, e[1], coeff);
            else ak += Poly::constant(target, coeff);
        }
        if (ak.is_zero()) continue;
        total += ak * s[static_cast<std::size_t>(k - 1)].embed(target);
    }
    return series_exp(total);
}

/// Value of a genus: a scalar, or for chi_y the coefficients of y^0..y^n.
struct GenusValue {
    GenusKind kind;
    std::vector<BigRational> coefficients;

    [[nodiscard]] const BigRational& scalar() const {
        if (kind == GenusKind::ChiY) throw DomainError("chi_y genus is a polynomial in y");
        return coefficients.at(0);
    }
    /// chi_y evaluated at a rational y.
    [[nodiscard]] BigRational at(const BigRational& y) const {
        BigRational v(0);
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * y + *it;
        return v;
    }
};

inline GenusValue evaluate_genus(const GenusSpec& g, const ChernProfile& c) {
    const Poly cls = genus_class(g, c);
    const int n = c.complex_dimension();
    GenusValue out{g.kind, {}};
    if (g.kind != GenusKind::ChiY) {
        out.coefficients.push_back(c.integrate(cls));
        return out;
    }
    for (int p = 0; p <= n; ++p) {
        Exponent e = c.ring().top();
        e[c.ring().size()] = static_cast<std::int16_t>(p);
        out.coefficients.push_back(cls.coefficient(e) * c.pairing());
    }
    return out;
}

inline BigRational ahat_genus_value(const ChernProfile& c) {
    return evaluate_genus(ahat_genus(c.complex_dimension()), c).scalar();
}
inline BigRational signature(const ChernProfile& c) {
    return evaluate_genus(l_genus(c.complex_dimension()), c).scalar();
}
inline BigRational todd_genus_value(const ChernProfile& c) {
    return evaluate_genus(todd_genus(c.complex_dimension()), c).scalar();
}

/// chi = c_n[M].
inline BigRational euler_characteristic(const ChernProfile& c) {
    return c.integrate(c.chern(c.complex_dimension()));
}

/// chi_p = sum_q (-1)^q h^{p,q}, read off the chi_y genus, p = 0..n.
inline std::vector<BigRational> hodge_from_chi_y(const ChernProfile& c) {
    return evaluate_genus(chi_y_genus(c.complex_dimension()), c).coefficients;
}

/// ch(TM^C) = sum_i (e^{x_i} + e^{-x_i}) = 2n + 2 sum_{k even} s_k / k!.
inline Poly ch_complexified_tangent(const ChernProfile& c) {
    const int n = c.complex_dimension();
    const auto s = chern_to_power_sums(c);
    Poly ch = Poly::constant(c.ring(), BigRational(2 * n));
    for (int k = 1; k <= n; ++k) {
        // e^{x} and e^{-x} contribute s_k/k! and (-1)^k s_k/k!.
        const BigRational w = (BigRational(1) + BigRational(k % 2 == 0 ? 1 : -1)) / factorial(static_cast<unsigned>(k));
        if (!w.is_zero()) ch += s[static_cast<std::size_t>(k - 1)] * w;
    }
    return ch;
}

struct RSIndex {
    BigRational ind_q;     ///< <A^ (ch(TM^C) + 1), [M]>
    BigRational ind_d_tm;  ///< <A^ ch(TM^C), [M]>
    BigRational ind_d;     ///< A^[M]
};

inline RSIndex rs_index(const ChernProfile& c) {
    const Poly ahat = genus_class(ahat_genus(c.complex_dimension()), c);
    const Poly ch = ch_complexified_tangent(c);
    const Poly one = Poly::constant(c.ring(), BigRational(1));
    RSIndex r;
    r.ind_q = c.integrate(ahat * (ch + one));
    r.ind_d_tm = c.integrate(ahat * ch);
    r.ind_d = c.integrate(ahat);
    return r;
}

// ---------------------------------------------------------------------------
// Product manifolds

struct ProductIndexReport {
    RSIndex left;
    RSIndex right;
    BigRational product_formula;  ///< indQ^M indD^N - indD^M indD^N + indD^M indQ^N
    BigRational direct;           ///< <A^ (ch + 1)> evaluated on the product profile
};

/// Both routes must agree; a mismatch throws ConsistencyError.
inline ProductIndexReport product_rs_index(const ChernProfile& m, const ChernProfile& n) {
    ProductIndexReport rep{rs_index(m), rs_index(n), {}, {}};
    rep.product_formula = rep.left.ind_q * rep.right.ind_d - rep.left.ind_d * rep.right.ind_d +
                          rep.left.ind_d * rep.right.ind_q;
    rep.direct = rs_index(m.product(n)).ind_q;
    if (rep.product_formula != rep.direct)
        throw ConsistencyError("product index mismatch: formula " + rep.product_formula.str() + " vs direct " +
                               rep.direct.str());
    return rep;
}

// ---------------------------------------------------------------------------
// Low-dimensional index identities

/// CP^k: c = (1+h)^{k+1}, <h^k,[CP^k]> = 1.
inline ChernProfile projective_space_profile(int k) {
    const PolyRing ring = PolyRing::univariate("h", k);
    const Poly one_plus_h = Poly::constant(ring, BigRational(1)) + Poly::monomial(ring, "h", 1);
    return ChernProfile::from_total_class(power(one_plus_h, static_cast<unsigned>(k + 1)), BigRational(1));
}

/// A claimed identity  ind Q = alpha * F1 + beta * F2  between linear functionals.
struct IdentityClaim {
    std::string description;
    std::string first;   ///< name of F1
    std::string second;  ///< name of F2
    BigRational alpha;
    BigRational beta;
    bool holds = false;
};

struct DimensionIdentityReport {
    int real_dimension = 0;
    std::vector<std::vector<int>> basis;
    /// Each functional as coefficients on the Pontryagin-number basis.
    RationalVector ind_q, ahat, sigma, chi;
    /// Basis of {(g, a, b) : g indQ = a A^ + b sigma}; a one-parameter family when it has one element.
    std::vector<RationalVector> relation_family;
    /// Coefficients found by exact solve, when unique.
    std::optional<std::pair<BigRational, BigRational>> found;
    std::vector<IdentityClaim> claims;

    [[nodiscard]] bool all_hold() const {
        return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.holds; });
    }
};

namespace detail {

inline RationalVector combine(const RationalVector& a, const BigRational& x, const RationalVector& b,
                              const BigRational& y) {
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = x * a[i] + y * b[i];
    return r;
}

}  // namespace detail

/**
 * Expresses ind Q, A^ and sigma as linear functionals on Pontryagin numbers in
 * real dimension 4, 8 or 12, by exact solve against products of even complex
 * projective spaces (whose Pontryagin vectors form a basis), then checks the
 * known linear relations between them.
 */
inline DimensionIdentityReport verify_dimension_identities(int real_dimension) {
    if (real_dimension != 4 && real_dimension != 8 && real_dimension != 12)
        throw DomainError("verify_dimension_identities: dimension must be 4, 8 or 12");
    const int m = real_dimension / 4;
    DimensionIdentityReport rep;
    rep.real_dimension = real_dimension;
    rep.basis = pontryagin_basis(m);

    RationalMatrix a;
    RationalVector vq, va, vs;
    for (const auto& part : rep.basis) {
        ChernProfile probe = projective_space_profile(2 * part[0]);
        for (std::size_t i = 1; i < part.size(); ++i) probe = probe.product(projective_space_profile(2 * part[i]));
        a.push_back(chern_to_pontryagin(probe).numbers);
        va.push_back(ahat_genus_value(probe));
        vs.push_back(signature(probe));
        vq.push_back(rs_index(probe).ind_q);
    }
    auto functional = [&](const RationalVector& values) {
        auto f = solve(a, values);
        if (!f) throw ConsistencyError("projective-space products do not span the Pontryagin numbers");
        return *f;
    };
    rep.ind_q = functional(vq);
    rep.ahat = functional(va);
    rep.sigma = functional(vs);

    RationalMatrix rel;
    for (std::size_t i = 0; i < rep.basis.size(); ++i) rel.push_back({rep.ind_q[i], -rep.ahat[i], -rep.sigma[i]});
    rep.relation_family = nullspace(rel, 3);

    RationalMatrix cols;
    for (std::size_t i = 0; i < rep.basis.size(); ++i) cols.push_back({rep.ahat[i], rep.sigma[i]});
    if (auto x = solve(cols, rep.ind_q)) rep.found = std::make_pair((*x)[0], (*x)[1]);

    auto claim = [&](std::string desc, std::string f1, const RationalVector& v1, std::string f2,
                     const RationalVector& v2, BigRational alpha, BigRational beta) {
        IdentityClaim c{std::move(desc), std::move(f1), std::move(f2), alpha, beta, false};
        c.holds = detail::combine(v1, alpha, v2, beta) == rep.ind_q;
        rep.claims.push_back(std::move(c));
    };

    if (m == 1) {
        claim("ind Q = -19 A^", "ahat", rep.ahat, "sigma", rep.sigma, BigRational(-19), BigRational(0));
        claim("ind Q = 19/8 sigma", "ahat", rep.ahat, "sigma", rep.sigma, BigRational(0), BigRational(19, 8));
    } else if (m == 2) {
        claim("ind Q = 25 A^ - sigma", "ahat", rep.ahat, "sigma", rep.sigma, BigRational(25), BigRational(-1));
        // chi = -(p1^2 - 4 p2)/8 on 8-manifolds with Sp(1)Sp(2), Spin(7), SU(4) or Sp(2) structure.
        rep.chi = {BigRational(-1, 8), BigRational(1, 2)};
        claim("ind Q = 9 A^ - chi/3 (when chi = -(p1^2 - 4 p2)/8)", "ahat", rep.ahat, "chi", rep.chi,
              BigRational(9), BigRational(-1, 3));
    } else {
        claim("ind Q = 5 A^ + sigma/8", "ahat", rep.ahat, "sigma", rep.sigma, BigRational(5), BigRational(1, 8));
    }
    return rep;
}

}  // namespace rslab
