#pragma once

/**
 * @file complete_intersection.hpp
 * @brief Complete intersections X_n(d_1..d_r) in CP^{n+r}: Chern data,
 *        classification, characteristic numbers, Hodge numbers and the
 *        Rarita-Schwinger kernel report.
 *
 * The tangent bundle satisfies c(TX) = (1+h)^{n+r+1} / prod_j (1 + d_j h),
 * and h^n integrates to d_1 ... d_r.
 */

#include <optional>
#include <numeric>
#include <string>
#include <vector>

#include "rslab/characteristic_classes.hpp"
#include "rslab/errors.hpp"
#include "rslab/rational.hpp"
#include "rslab/truncated_poly.hpp"

namespace rslab {

struct CISpec {
    int n = 0;
    std::vector<int> degrees;

    void validate() const {
        if (n < 1) throw DomainError("complete intersection needs n >= 1");
        if (degrees.empty()) throw DomainError("complete intersection needs at least one degree");
        for (int d : degrees)
            if (d < 1) throw DomainError("degrees must be >= 1");
    }
    [[nodiscard]] int codimension() const { return static_cast<int>(degrees.size()); }
    [[nodiscard]] int total_degree() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

    /// "X_4(4)", "X_2(2,3)"
    [[nodiscard]] std::string name() const {
        std::string s = "X_" + std::to_string(n) + "(";
        for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
        return s + ")";
    }
};

enum class C1Sign { Positive, Zero, Negative };

inline std::string to_string(C1Sign s) {
    switch (s) {
        case C1Sign::Positive: return "POSITIVE";
        case C1Sign::Zero: return "ZERO";
        case C1Sign::Negative: return "NEGATIVE";
    }
    return "?";
}

struct CIManifold {
    CISpec spec;
    ChernProfile profile;
    int total_degree = 0;
    bool spin = false;
    C1Sign c1_sign = C1Sign::Zero;

    /// Coefficient of h in c_1, n + r + 1 - d.
    [[nodiscard]] int c1_coefficient() const { return spec.n + spec.codimension() + 1 - total_degree; }
};

inline CIManifold build_ci(const CISpec& spec) {
    spec.validate();
    const int n = spec.n;
    const int r = spec.codimension();
    const PolyRing ring = PolyRing::univariate("h", n);
    const Poly one = Poly::constant(ring, BigRational(1));
    const Poly h = Poly::monomial(ring, "h", 1);
    Poly total = power(one + h, static_cast<unsigned>(n + r + 1));
    BigRational pairing(1);
    for (int d : spec.degrees) {
        total = total * series_inverse(one + h * BigRational(d));
        pairing *= BigRational(d);
    }
    CIManifold m{spec, ChernProfile::from_total_class(total, pairing), spec.total_degree(), false, C1Sign::Zero};
    const int c1 = m.c1_coefficient();
    m.spin = (n + r - m.total_degree) % 2 != 0;
    m.c1_sign = c1 > 0 ? C1Sign::Positive : (c1 == 0 ? C1Sign::Zero : C1Sign::Negative);
    return m;
}

/// The quadric Q_m = X_m(2).
inline CIManifold quadric(int m) { return build_ci({m, {2}}); }

struct CIInvariants {
    BigRational chi;
    std::optional<BigRational> sigma;  ///< only in real dimension divisible by 4
    BigRational ahat;
    BigRational ind_d;
    BigRational ind_d_tm;
    BigRational ind_q;
};

inline CIInvariants ci_invariants(const CIManifold& m) {
    const auto idx = rs_index(m.profile);
    CIInvariants inv{euler_characteristic(m.profile), std::nullopt, idx.ind_d, idx.ind_d, idx.ind_d_tm, idx.ind_q};
    if (m.spec.n % 2 == 0) inv.sigma = signature(m.profile);
    return inv;
}

/// Coefficient of z^{m+1} in 1/(1-z^2) * ((1+z)^d - (1-z)^d) / ((1+z)^d + (1-z)^d).
inline BigRational fermat_signature(int m, int d) {
    if (m < 1 || d < 1) throw DomainError("fermat_signature needs m >= 1 and d >= 1");
    const int cutoff = m + 1;
    const PolyRing ring = PolyRing::univariate("z", cutoff);
    const Poly one = Poly::constant(ring, BigRational(1));
    const Poly z = Poly::monomial(ring, "z", 1);
    const Poly plus = power(one + z, static_cast<unsigned>(d));
    const Poly minus = power(one - z, static_cast<unsigned>(d));
    const Poly denominator = (one - z * z) * (plus + minus);
    return RationalFunctionSeries<BigRational>(plus - minus, denominator, cutoff).coefficient(cutoff);
}

/// h^{p,q}, 0 <= p,q <= n.
using HodgeTable = std::vector<std::vector<BigInt>>;

/**
 * Off the middle row h^{p,q} = delta_{pq}; on it, h^{p,n-p} is solved from
 * chi_p = sum_q (-1)^q h^{p,q}. Throws ConsistencyError if a middle entry comes
 * out negative, non-integral or breaks the symmetry h^{p,q} = h^{q,p}.
 */
inline HodgeTable hodge_numbers(const CIManifold& m) {
    const int n = m.spec.n;
    const auto chi = hodge_from_chi_y(m.profile);
    HodgeTable t(static_cast<std::size_t>(n + 1), std::vector<BigInt>(static_cast<std::size_t>(n + 1), 0));
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q)
            if (p + q != n && p == q) t[p][q] = 1;
        const BigRational off = (2 * p != n) ? BigRational(p % 2 == 0 ? 1 : -1) : BigRational(0);
        BigRational mid = chi[static_cast<std::size_t>(p)] - off;
        if ((n - p) % 2 != 0) mid = -mid;
        if (!mid.is_integer() || mid.sign() < 0)
            throw ConsistencyError(m.spec.name() + ": h^{" + std::to_string(p) + "," + std::to_string(n - p) +
                                   "} solved as " + mid.str());
        t[p][static_cast<std::size_t>(n - p)] = mid.numerator();
    }
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            if (t[p][q] != t[q][p] || t[p][q] != t[n - p][n - q])
                throw ConsistencyError(m.spec.name() + ": Hodge table not symmetric at (" + std::to_string(p) +
                                       "," + std::to_string(q) + ")");
    return t;
}

/// Which case of the kernel analysis applies.
enum class KernelRegime { CalabiYau, Negative, Positive, NotSpin, NotApplicable };

inline std::string to_string(KernelRegime r) {
    switch (r) {
        case KernelRegime::CalabiYau: return "calabi-yau";
        case KernelRegime::Negative: return "negative-c1";
        case KernelRegime::Positive: return "positive-c1";
        case KernelRegime::NotSpin: return "not-spin";
        case KernelRegime::NotApplicable: return "not-applicable";
    }
    return "?";
}

struct CIKernelReport {
    KernelRegime regime = KernelRegime::NotApplicable;
    /// Exact kernel dimension (Calabi-Yau, n >= 2).
    std::optional<BigInt> kernel_dimension;
    /// Index from the Hodge-number formula; cross-checked against rs_index.
    std::optional<BigRational> hodge_index;
    /// Lower bound for dim ker Q restricted to Im P (from ker D, P injective there).
    std::optional<BigRational> im_p_lower_bound;
    /// Lower bound |ind Q - ind D| for the part of the kernel inside ker P*.
    std::optional<BigRational> ker_p_star_lower_bound;
    bool nontrivial_on_im_p = false;
    bool ind_q_differs_from_ind_d = false;
    /// Hypersurfaces only: (m+1)/2 <= d <= m+1, where a positive Kaehler-Einstein
    /// metric is known to exist. Informational.
    std::optional<bool> kahler_einstein_window;
    std::string note;
};

namespace detail {
inline BigRational abs(const BigRational& x) { return x.sign() < 0 ? -x : x; }
}  // namespace detail

inline CIKernelReport ci_rs_kernel(const CIManifold& m) {
    CIKernelReport rep;
    const int n = m.spec.n;
    if (m.spec.codimension() == 1 && m.c1_sign == C1Sign::Positive) {
        const int d = m.total_degree;
        rep.kahler_einstein_window = (n + 1 <= 2 * d) && (d <= n + 1);
    }
    if (!m.spin) {
        rep.regime = KernelRegime::NotSpin;
        rep.note = "not spin: n + r - d is even";
        return rep;
    }
    const auto inv = ci_invariants(m);
    rep.ind_q_differs_from_ind_d = inv.ind_q != inv.ind_d;

    switch (m.c1_sign) {
        case C1Sign::Zero: {
            if (n < 2) {
                rep.regime = KernelRegime::NotApplicable;
                rep.note = "n = 1: flat torus, holonomy trivial rather than SU(1)";
                return rep;
            }
            rep.regime = KernelRegime::CalabiYau;
            const auto t = hodge_numbers(m);
            BigInt kernel = -2;
            BigInt index = 2;
            for (int p = 1; p <= n - 1; ++p) {
                kernel += 2 * t[1][static_cast<std::size_t>(p)];
                index += (p % 2 == 0 ? 2 : -2) * t[1][static_cast<std::size_t>(p)];
            }
            if (n % 2 != 0) index = 0;
            rep.kernel_dimension = kernel;
            rep.hodge_index = BigRational(index);
            if (*rep.hodge_index != inv.ind_q)
                throw ConsistencyError(m.spec.name() + ": Hodge-number index " + rep.hodge_index->str() +
                                       " differs from characteristic-class index " + inv.ind_q.str());
            rep.note = "dim ker Q = -2 + 2 sum_{p=1}^{n-1} h^{1,p}";
            return rep;
        }
        case C1Sign::Negative:
            rep.regime = KernelRegime::Negative;
            if (!inv.ahat.is_zero()) {
                rep.nontrivial_on_im_p = true;
                rep.im_p_lower_bound = detail::abs(inv.ahat);
                rep.note = "harmonic spinors exist (A^ != 0); Q has kernel on Im P";
            } else {
                rep.note = "A^ = 0: no kernel forced on Im P";
            }
            rep.ker_p_star_lower_bound = detail::abs(inv.ind_q - inv.ind_d);
            return rep;
        case C1Sign::Positive:
            rep.regime = KernelRegime::Positive;
            if (!inv.ind_q.is_zero()) {
                rep.ker_p_star_lower_bound = detail::abs(inv.ind_q);
                rep.note = "ind Q != 0 forces a kernel of dimension >= |ind Q|";
            } else {
                rep.note = "ind Q = 0: no kernel forced";
            }
            return rep;
    }
    return rep;
}

/// One grid point where "A^(X_{2n}) != 0 iff 2n + r + 1 < d" (for r - d odd) fails.
struct AhatCriterionCounterexample {
    CISpec spec;
    BigRational ahat;
    bool predicted_nonzero = false;
};

/**
 * Checks the A^ nonvanishing criterion for even-dimensional spin complete
 * intersections over degrees 1..max_degree (nondecreasing tuples), r <= max_codim,
 * complex dimension 2..max_dim step 2. Degree-1 factors are skipped (they only
 * re-embed a lower-codimension case).
 */
inline std::vector<AhatCriterionCounterexample> ahat_criterion_survey(int max_dim, int max_codim, int max_degree) {
    std::vector<AhatCriterionCounterexample> out;
    std::vector<int> degs;
    auto visit = [&](int dim) {
        const int r = static_cast<int>(degs.size());
        const int d = std::accumulate(degs.begin(), degs.end(), 0);
        if ((r - d) % 2 == 0) return;
        const CISpec spec{dim, degs};
        const BigRational a = ahat_genus_value(build_ci(spec).profile);
        const bool predicted = dim + r + 1 < d;
        if (predicted != !a.is_zero()) out.push_back({spec, a, predicted});
    };
    for (int dim = 2; dim <= max_dim; dim += 2) {
        auto rec = [&](auto&& self, int min_deg) -> void {
            if (!degs.empty()) visit(dim);
            if (static_cast<int>(degs.size()) == max_codim) return;
            for (int d = min_deg; d <= max_degree; ++d) {
                degs.push_back(d);
                self(self, d);
                degs.pop_back();
            }
        };
        rec(rec, 2);
    }
    return out;
}

}  // namespace rslab
