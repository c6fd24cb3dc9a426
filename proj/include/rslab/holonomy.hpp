#pragma once

/**
 * @file holonomy.hpp
 * @brief Holonomy models (spinor and tangent representations), the
 *        spin-3/2 representation Sigma_{1/2} (x) T minus Sigma_{1/2}, parallel
 *        counts, refined Betti bookkeeping and the family kernel/index formulas.
 *
 * Sigma_{1/2} and T for SU(n), Sp(n), Sp(1)Sp(m), G2 and Spin(7) are curated
 * tables. An independent route builds the spinor weights (+-x_1 ... +-x_r)/2
 * from the tangent weights +-x_i; tests compare the two.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rslab/characteristic_classes.hpp"
#include "rslab/errors.hpp"
#include "rslab/exact_linear.hpp"
#include "rslab/linear_form.hpp"
#include "rslab/representation.hpp"

namespace rslab {

namespace detail {

inline Labels unit_labels(int rank, int i) {
    Labels l(static_cast<std::size_t>(rank), 0);
    if (i >= 0) l[static_cast<std::size_t>(i)] = 1;
    return l;
}

inline Labels concat(Labels a, const Labels& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline Labels zero_labels(const RootSystem& r) { return Labels(static_cast<std::size_t>(r.rank()), 0); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Spinor weights from tangent weights

/// The complexified tangent weights split as {x_i} u {-x_i}, plus one zero weight in odd dimension.
struct TangentRoots {
    std::vector<Labels> x;
    bool odd = false;
};

/// Chooses one weight from each +- pair of a (self-conjugate) tangent character.
inline TangentRoots tangent_roots(const RootSystem& r, const WeightSystem& tangent) {
    RationalVector g(static_cast<std::size_t>(r.euclidean_dimension()));
    BigRational scale(1);
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
        *it = scale;
        scale *= BigRational(1009);
    }
    TangentRoots t;
    std::int64_t zeros = 0, total = 0;
    for (const auto& [w, m] : tangent) {
        total += m;
        auto neg = w;
        for (auto& v : neg) v = -v;
        auto it = tangent.find(neg);
        if (it == tangent.end() || it->second != m) throw ModelDataError("tangent character is not self-conjugate");
        const BigRational s = RootSystem::inner(r.to_euclidean(w), g);
        if (s.is_zero()) {
            if (w != detail::zero_labels(r)) throw StructuralError("tangent_roots: degenerate generic direction");
            zeros += m;
        } else if (s > BigRational(0)) {
            for (std::int64_t k = 0; k < m; ++k) t.x.push_back(w);
        }
    }
    for (std::int64_t k = 0; k < zeros / 2; ++k) t.x.push_back(detail::zero_labels(r));
    t.odd = zeros % 2 != 0;
    if (static_cast<std::int64_t>(2 * t.x.size()) + (t.odd ? 1 : 0) != total)
        throw StructuralError("tangent_roots: pairing lost weights");
    return t;
}

inline WeightSystem tangent_character(const RootSystem& r, const TangentRoots& t) {
    WeightSystem w;
    for (const auto& x : t.x) {
        w[x] += 1;
        auto neg = x;
        for (auto& v : neg) v = -v;
        w[neg] += 1;
    }
    if (t.odd) w[detail::zero_labels(r)] += 1;
    return w;
}

/// Spinor weights (sum_i s_i x_i)/2; plus collects an even number of minus signs. Ungraded in odd dimension.
struct SpinCharacter {
    bool graded = true;
    WeightSystem plus, minus;
};

inline SpinCharacter spin_character(const RootSystem& r, const TangentRoots& t) {
    if (t.x.size() > 20) throw RangeError("spin_character: too many tangent weights");
    SpinCharacter s;
    s.graded = !t.odd;
    const std::size_t k = t.x.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Labels sum = detail::zero_labels(r);
        int minus = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const int sign = (mask >> i) & 1 ? -1 : 1;
            minus += sign < 0;
            for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += sign * t.x[i][j];
        }
        for (auto& v : sum) {
            if (v % 2 != 0) throw ModelDataError("spinor weights are not integral for " + r.name());
            v /= 2;
        }
        (s.graded && minus % 2 != 0 ? s.minus : s.plus)[sum] += 1;
    }
    return s;
}

inline WeightSystem weight_product(const WeightSystem& a, const WeightSystem& b) {
    WeightSystem out;
    for (const auto& [wa, ma] : a)
        for (const auto& [wb, mb] : b) {
            Labels w = wa;
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += wb[i];
            out[w] += ma * mb;
        }
    return out;
}

/// a - b; throws ModelDataError if b is not contained in a.
inline WeightSystem weight_difference(WeightSystem a, const WeightSystem& b) {
    for (const auto& [w, m] : b) {
        auto& slot = a[w];
        slot -= m;
        if (slot < 0) throw ModelDataError("weight subtraction leaves a negative multiplicity");
        if (slot == 0) a.erase(w);
    }
    return a;
}

/// Sigma^{+-}_{3/2} = Sigma^{+-} (x) T minus Sigma^{-+}; ungraded models keep everything in plus.
struct ThreeHalf {
    bool graded = true;
    RepSum plus, minus;
    [[nodiscard]] RepSum total() const { return plus + minus; }
};

struct SpinRepresentation {
    bool graded = true;
    RepSum plus, minus;
    ThreeHalf three_half;
};

/// Spinor and spin-3/2 representations built from tangent weights alone.
inline SpinRepresentation spin_representation(const RootSystem& r, const TangentRoots& t) {
    const SpinCharacter s = spin_character(r, t);
    const WeightSystem tc = tangent_character(r, t);
    SpinRepresentation out;
    out.graded = s.graded;
    out.plus = decompose_character(r, s.plus);
    out.minus = decompose_character(r, s.minus);
    out.three_half.graded = s.graded;
    if (s.graded) {
        out.three_half.plus = decompose_character(r, weight_difference(weight_product(s.plus, tc), s.minus));
        out.three_half.minus = decompose_character(r, weight_difference(weight_product(s.minus, tc), s.plus));
    } else {
        out.three_half.plus = decompose_character(r, weight_difference(weight_product(s.plus, tc), s.plus));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Holonomy models

enum class HolonomyGroup { SU, Sp, Sp1Spm, G2, Spin7, SO, U };

struct HolonomyModel {
    HolonomyGroup group;
    int param = 0;  ///< n for SU(n), Sp(n), SO(n), U(n); m for Sp(1)Sp(m)
    RootSystem root;
    int real_dimension = 0;
    bool graded = true;
    RepSum sigma_plus, sigma_minus;  ///< ungraded models keep Sigma_{1/2} in sigma_plus
    RepSum tangent;

    [[nodiscard]] RepSum sigma_half() const { return sigma_plus + sigma_minus; }

    [[nodiscard]] std::string name() const {
        const std::string p = std::to_string(param);
        switch (group) {
            case HolonomyGroup::SU: return "SU(" + p + ")";
            case HolonomyGroup::Sp: return "Sp(" + p + ")";
            case HolonomyGroup::Sp1Spm: return "Sp(1)Sp(" + p + ")";
            case HolonomyGroup::G2: return "G2";
            case HolonomyGroup::Spin7: return "Spin(7)";
            case HolonomyGroup::SO: return "SO(" + p + ")";
            case HolonomyGroup::U: return "U(" + p + ")";
        }
        return "?";
    }

    /// Checks dim Sigma_{1/2} = 2^{floor(dim/2)} and dim T = real dimension.
    void validate() const {
        const std::int64_t want = std::int64_t{1} << (real_dimension / 2);
        if (sigma_half().dimension(root) != want)
            throw ModelDataError(name() + ": spinor dimension " + std::to_string(sigma_half().dimension(root)) +
                                 " != " + std::to_string(want));
        if (graded && sigma_plus.dimension(root) != sigma_minus.dimension(root))
            throw ModelDataError(name() + ": half-spinor dimensions differ");
        if (tangent.dimension(root) != real_dimension) throw ModelDataError(name() + ": tangent dimension mismatch");
    }
};

/// SU(n) on C^n: Sigma_{1/2} = sum_p Lambda^{0,p} (p even in Sigma^+), T = E + conj(E).
inline HolonomyModel su_model(int n) {
    if (n < 2 || n > 12) throw DomainError("SU(n) model needs 2 <= n <= 12");
    const RootSystem r = RootSystem::parse("A" + std::to_string(n - 1));
    HolonomyModel h{HolonomyGroup::SU, n, r, 2 * n, true, {}, {}, {}};
    for (int p = 0; p <= n; ++p) {
        // Lambda^p conj(E) = Lambda^{n-p} E for SU(n)
        const int k = n - p;
        const Labels l = detail::unit_labels(r.rank(), (k == 0 || k == n) ? -1 : k - 1);
        (p % 2 == 0 ? h.sigma_plus : h.sigma_minus).add(l, 1);
    }
    h.tangent.add(detail::unit_labels(r.rank(), 0), 1);
    h.tangent.add(detail::unit_labels(r.rank(), n - 2), 1);
    h.validate();
    return h;
}

/// Sp(n) on E = C^{2n}: Sigma_{1/2} = sum_k (n-k+1) Lambda^k_0 E (k even in Sigma^+), T = 2E.
inline HolonomyModel sp_model(int n) {
    if (n < 1 || n > 8) throw DomainError("Sp(n) model needs 1 <= n <= 8");
    const RootSystem r = RootSystem::parse("C" + std::to_string(n));
    HolonomyModel h{HolonomyGroup::Sp, n, r, 4 * n, true, {}, {}, {}};
    for (int k = 0; k <= n; ++k)
        (k % 2 == 0 ? h.sigma_plus : h.sigma_minus).add(detail::unit_labels(n, k - 1), n - k + 1);
    h.tangent.add(detail::unit_labels(n, 0), 2);
    h.validate();
    return h;
}

/// Sp(1)Sp(m) as C1 x Cm: Sigma_{1/2} = sum_k Sym^{m-k} H (x) Lambda^k_0 E, T = H (x) E.
inline HolonomyModel sp1_spm_model(int m) {
    if (m < 1 || m > 6) throw DomainError("Sp(1)Sp(m) model needs 1 <= m <= 6");
    const RootSystem r = RootSystem::parse("C1xC" + std::to_string(m));
    HolonomyModel h{HolonomyGroup::Sp1Spm, m, r, 4 * m, true, {}, {}, {}};
    for (int k = 0; k <= m; ++k) {
        const Labels l = detail::concat({m - k}, detail::unit_labels(m, k - 1));
        (k % 2 == 0 ? h.sigma_plus : h.sigma_minus).add(l, 1);
    }
    h.tangent.add(detail::concat({1}, detail::unit_labels(m, 0)), 1);
    h.validate();
    return h;
}

/// G2 on T = C^7: Sigma_{1/2} = C + T.
inline HolonomyModel g2_model() {
    const RootSystem r = RootSystem::parse("G2");
    HolonomyModel h{HolonomyGroup::G2, 0, r, 7, false, {}, {}, {}};
    h.sigma_plus = RepSum({{{0, 0}, 1}, {{1, 0}, 1}});
    h.tangent = RepSum::irreducible({1, 0});
    h.validate();
    return h;
}

/// Spin(7) on T = C^8 (the spin representation of B3): Sigma^+ = C + Lambda^2_7, Sigma^- = T.
inline HolonomyModel spin7_model() {
    const RootSystem r = RootSystem::parse("B3");
    HolonomyModel h{HolonomyGroup::Spin7, 0, r, 8, true, {}, {}, {}};
    h.sigma_plus = RepSum({{{0, 0, 0}, 1}, {{1, 0, 0}, 1}});
    h.sigma_minus = RepSum::irreducible({0, 0, 1});
    h.tangent = RepSum::irreducible({0, 0, 1});
    h.validate();
    return h;
}

/// SO(n): spin representation(s) and the vector representation.
inline HolonomyModel so_model(int n) {
    if (n < 3 || n > 20) throw DomainError("SO(n) model needs 3 <= n <= 20");
    const int m = n / 2;
    const RootSystem r = RootSystem::parse((n % 2 ? "B" : "D") + std::to_string(m));
    HolonomyModel h{HolonomyGroup::SO, n, r, n, n % 2 == 0, {}, {}, {}};
    RationalVector spin(static_cast<std::size_t>(m), BigRational(1, 2));
    h.sigma_plus = RepSum::irreducible(r.to_dynkin(spin));
    if (n % 2 == 0) {
        spin.back() = BigRational(-1, 2);
        h.sigma_minus = RepSum::irreducible(r.to_dynkin(spin));
    }
    RationalVector e1(static_cast<std::size_t>(m), BigRational(0));
    e1[0] = 1;
    h.tangent = RepSum::irreducible(r.to_dynkin(e1));
    h.validate();
    return h;
}

/// U(n) as U1 x A_{n-1}; T^{1,0} = E has U1 label 2. Spinors come from the tangent weights.
inline HolonomyModel u_model(int n) {
    if (n < 2 || n > 8) throw DomainError("U(n) model needs 2 <= n <= 8");
    const RootSystem a = RootSystem::parse("A" + std::to_string(n - 1));
    const RootSystem r = RootSystem::parse("U1xA" + std::to_string(n - 1));
    TangentRoots t;
    for (const auto& [w, m] : weight_multiplicities(a, detail::unit_labels(n - 1, 0))) t.x.push_back(detail::concat({2}, w));
    const SpinRepresentation s = spin_representation(r, t);
    HolonomyModel h{HolonomyGroup::U, n, r, 2 * n, true, s.plus, s.minus, {}};
    h.tangent.add(detail::concat({2}, detail::unit_labels(n - 1, 0)), 1);
    h.tangent.add(detail::concat({-2}, detail::unit_labels(n - 1, n - 2)), 1);
    h.validate();
    return h;
}

/// "su", "sp", "qk", "g2", "spin7", "so", "u".
inline HolonomyModel make_holonomy_model(const std::string& tag, int param = 0) {
    if (tag == "su") return su_model(param);
    if (tag == "sp") return sp_model(param);
    if (tag == "qk" || tag == "sp1spm") return sp1_spm_model(param);
    if (tag == "g2") return g2_model();
    if (tag == "spin7") return spin7_model();
    if (tag == "so") return so_model(param);
    if (tag == "u") return u_model(param);
    throw DomainError("unknown holonomy group '" + tag + "'");
}

/// Sigma_{3/2} from the curated tables; a negative multiplicity throws ModelDataError.
inline ThreeHalf sigma_three_half(const HolonomyModel& h) {
    ThreeHalf out;
    out.graded = h.graded;
    if (h.graded) {
        out.plus = tensor_decompose(h.root, h.sigma_plus, h.tangent).minus(h.sigma_minus);
        out.minus = tensor_decompose(h.root, h.sigma_minus, h.tangent).minus(h.sigma_plus);
    } else {
        out.plus = tensor_decompose(h.root, h.sigma_plus, h.tangent).minus(h.sigma_plus);
    }
    const std::int64_t ds = h.sigma_half().dimension(h.root);
    if (out.total().dimension(h.root) != ds * h.tangent.dimension(h.root) - ds)
        throw ConsistencyError(h.name() + ": spin-3/2 dimension bookkeeping fails");
    return out;
}

inline std::int64_t parallel_spinor_dimension(const HolonomyModel& h) {
    return h.sigma_half().multiplicity(detail::zero_labels(h.root));
}

/// Multiplicity of the trivial representation in Sigma_{3/2}.
inline std::int64_t parallel_rs_dimension(const HolonomyModel& h) {
    return sigma_three_half(h).total().multiplicity(detail::zero_labels(h.root));
}

/// The spinor route applied to a model's tangent representation.
inline SpinRepresentation spin_representation(const HolonomyModel& h) {
    return spin_representation(h.root, tangent_roots(h.root, character(h.root, h.tangent)));
}

// ---------------------------------------------------------------------------
// Topological families and kernel / index formulas

enum class Family { CalabiYau, Hyperkahler, Spin7, G2, QuaternionKahler };

inline std::string to_string(Family f) {
    switch (f) {
        case Family::CalabiYau: return "CY";
        case Family::Hyperkahler: return "HK";
        case Family::Spin7: return "SPIN7";
        case Family::G2: return "G2";
        case Family::QuaternionKahler: return "QK";
    }
    return "?";
}

inline std::string hodge_name(int p, int q) { return "h^{" + std::to_string(p) + "," + std::to_string(q) + "}"; }

/// Closed-form kernel dimension in the family's topological variables.
inline LinearForm kernel_form(Family f, int n = 0) {
    LinearForm k;
    switch (f) {
        case Family::CalabiYau:
            if (n < 2) throw DomainError("Calabi-Yau kernel formula needs complex dimension n >= 2");
            k = LinearForm(-2);
            for (int p = 1; p <= n - 1; ++p) k += LinearForm::variable(hodge_name(1, p), 2);
            return k;
        case Family::Hyperkahler:
            if (n < 1) throw DomainError("hyperkahler kernel formula needs n >= 1");
            k = LinearForm(-(n + 1)) + LinearForm::variable(hodge_name(n, 1), 2);
            for (int j = 1; j <= n - 1; ++j) k += LinearForm::variable(hodge_name(j, 1), 4);
            return k;
        case Family::Spin7:
            return LinearForm::variable("b2") + LinearForm::variable("b3") + LinearForm::variable("b4-");
        case Family::G2:
            return LinearForm::variable("b2") + LinearForm::variable("b3") - LinearForm(1);
        case Family::QuaternionKahler:
            if (n < 2) throw DomainError("quaternion-Kahler kernel formula needs m >= 2");
            // positive scalar curvature: kernel only in quaternionic dimension 2
            return n == 2 ? LinearForm::variable("b2") + LinearForm(1) : LinearForm(0);
    }
    return k;
}

/// Closed-form index; G2 and QK have none (NotApplicable).
inline LinearForm index_form(Family f, int n = 0) {
    LinearForm k;
    switch (f) {
        case Family::CalabiYau:
            if (n < 2) throw DomainError("Calabi-Yau index formula needs complex dimension n >= 2");
            if (n % 2 != 0) return LinearForm(0);
            k = LinearForm(2);
            for (int p = 1; p <= n - 1; ++p) k += LinearForm::variable(hodge_name(1, p), p % 2 ? -2 : 2);
            return k;
        case Family::Hyperkahler:
            if (n < 1) throw DomainError("hyperkahler index formula needs n >= 1");
            k = LinearForm(n + 1) + LinearForm::variable(hodge_name(n, 1), n % 2 ? -2 : 2);
            for (int j = 1; j <= n - 1; ++j) k += LinearForm::variable(hodge_name(j, 1), j % 2 ? -4 : 4);
            return k;
        case Family::Spin7:
            return LinearForm::variable("b3") - LinearForm::variable("b4-") - LinearForm::variable("b2");
        case Family::G2: throw NotApplicable("no index in odd dimension (G2)");
        case Family::QuaternionKahler: throw NotApplicable("no index formula for quaternion-Kahler manifolds");
    }
    return k;
}

struct TopologicalInput {
    Family family = Family::CalabiYau;
    int n = 0;  ///< complex dimension (CY), quaternionic dimension (HK, QK)
    std::map<std::string, BigInt> values;

    /// h^{1,1} .. h^{1,n-1}
    static TopologicalInput calabi_yau(int n, const std::vector<BigInt>& h1p) {
        if (static_cast<int>(h1p.size()) != n - 1) throw DomainError("Calabi-Yau input needs h^{1,1}..h^{1,n-1}");
        TopologicalInput t{Family::CalabiYau, n, {}};
        for (int p = 1; p <= n - 1; ++p) t.values[hodge_name(1, p)] = h1p[static_cast<std::size_t>(p - 1)];
        t.validate();
        return t;
    }
    /// h^{1,1} .. h^{n,1}
    static TopologicalInput hyperkahler(int n, const std::vector<BigInt>& hk1) {
        if (static_cast<int>(hk1.size()) != n) throw DomainError("hyperkahler input needs h^{1,1}..h^{n,1}");
        TopologicalInput t{Family::Hyperkahler, n, {}};
        for (int k = 1; k <= n; ++k) t.values[hodge_name(k, 1)] = hk1[static_cast<std::size_t>(k - 1)];
        t.validate();
        return t;
    }
    static TopologicalInput spin7(const BigInt& b2, const BigInt& b3, const BigInt& b4_minus) {
        TopologicalInput t{Family::Spin7, 0, {{"b2", b2}, {"b3", b3}, {"b4-", b4_minus}}};
        t.validate();
        return t;
    }
    static TopologicalInput g2(const BigInt& b2, const BigInt& b3) {
        TopologicalInput t{Family::G2, 0, {{"b2", b2}, {"b3", b3}}};
        t.validate();
        return t;
    }
    static TopologicalInput quaternion_kahler(int m, const BigInt& b2) {
        TopologicalInput t{Family::QuaternionKahler, m, {{"b2", b2}}};
        t.validate();
        return t;
    }

    void validate() const {
        for (const auto& [k, v] : values)
            if (v < 0) throw DomainError("topological input " + k + " must be non-negative");
        if ((family == Family::CalabiYau && n < 2) || (family == Family::Hyperkahler && n < 1) ||
            (family == Family::QuaternionKahler && n < 2))
            throw DomainError("topological input has an invalid dimension");
    }

    [[nodiscard]] std::map<std::string, BigRational> rational_values() const {
        std::map<std::string, BigRational> out;
        for (const auto& [k, v] : values) out.emplace(k, BigRational(v));
        return out;
    }
};

inline BigInt kernel_dimension(const TopologicalInput& t) {
    t.validate();
    const BigRational v = kernel_form(t.family, t.n).evaluate(t.rational_values());
    if (v < BigRational(0)) throw DomainError("inputs give a negative kernel dimension (" + v.str() + ")");
    return v.numerator();
}

inline BigInt family_index(const TopologicalInput& t) {
    t.validate();
    return index_form(t.family, t.n).evaluate(t.rational_values()).numerator();
}

// ---------------------------------------------------------------------------
// Refined Betti bookkeeping: harmonic forms attached to summands of Sigma_{3/2}

/**
 * Dimension of harmonic sections for one irreducible summand, as a form in the
 * family variables. Sp(n): Lambda^k_0 E carries none for k >= 1, and
 * Lambda^{k,1}_0 E carries h^{k,1} - h^{k-2,1} (h^{0,1} = h^{-2,1} = 0,
 * h^{-1,1} = 1). Spin(7): 21 -> b2, 48 -> b3, 35 -> b4-. G2: 14 -> b2, 27 -> b3 - 1.
 */
inline LinearForm refined_harmonic_form(const HolonomyModel& h, const Labels& l) {
    const Labels zero = detail::zero_labels(h.root);
    if (l == zero) return LinearForm(1);
    auto hk1 = [](int k) -> LinearForm {
        if (k == -1) return LinearForm(1);
        if (k == -2 || k == 0) return LinearForm(0);
        return LinearForm::variable(hodge_name(k, 1));
    };
    switch (h.group) {
        case HolonomyGroup::Sp: {
            const int n = h.param;
            for (int k = 1; k <= n; ++k)
                if (l == detail::unit_labels(n, k - 1)) return LinearForm(0);
            for (int k = 1; k <= n; ++k) {
                Labels c = detail::unit_labels(n, k - 1);
                c[0] += 1;
                if (l == c) return hk1(k) - hk1(k - 2);
            }
            break;
        }
        case HolonomyGroup::Spin7:
            if (l == Labels{0, 0, 1} || l == Labels{1, 0, 0}) return LinearForm(0);
            if (l == Labels{0, 1, 0}) return LinearForm::variable("b2");
            if (l == Labels{1, 0, 1}) return LinearForm::variable("b3");
            if (l == Labels{0, 0, 2}) return LinearForm::variable("b4-");
            break;
        case HolonomyGroup::G2:
            if (l == Labels{1, 0}) return LinearForm(0);
            if (l == Labels{0, 1}) return LinearForm::variable("b2");
            if (l == Labels{2, 0}) return LinearForm::variable("b3") - LinearForm(1);
            break;
        default: throw NotApplicable("no refined Betti table for " + h.name());
    }
    throw ModelDataError(h.name() + ": summand is not a form representation with a refined Betti number");
}

inline LinearForm harmonic_form(const HolonomyModel& h, const RepSum& s) {
    LinearForm f;
    for (const auto& [l, m] : s.terms()) f += BigRational(m) * refined_harmonic_form(h, l);
    return f;
}

/// Kernel dimension summed over Sigma_{3/2} through the refined Betti table.
inline LinearForm derived_kernel_form(const HolonomyModel& h) { return harmonic_form(h, sigma_three_half(h).total()); }

inline LinearForm derived_index_form(const HolonomyModel& h) {
    if (!h.graded) throw NotApplicable(h.name() + " acts in odd dimension: no index");
    const ThreeHalf t = sigma_three_half(h);
    return harmonic_form(h, t.plus) - harmonic_form(h, t.minus);
}

struct HyperkahlerDerivation {
    int n = 0;
    std::int64_t parallel = 0;
    LinearForm derived_kernel, closed_kernel, derived_index, closed_index;
    [[nodiscard]] bool holds() const {
        return derived_kernel == closed_kernel && derived_index == closed_index && parallel == n - 1;
    }
};

/// Re-derives the hyperkahler kernel and index formulas from the Sp(n) decomposition.
inline HyperkahlerDerivation hyperkahler_derivation(int n) {
    const HolonomyModel h = sp_model(n);
    return {n, parallel_rs_dimension(h), derived_kernel_form(h), kernel_form(Family::Hyperkahler, n),
            derived_index_form(h), index_form(Family::Hyperkahler, n)};
}

/**
 * Spin(7) index identity over symbolic Betti numbers (b1 = 0). The relation
 * A^ = a sigma + b chi is solved from the dimension-8 functionals (with
 * chi = -(p1^2 - 4 p2)/8), b4+ is eliminated using A^ = 1, and the
 * representation-theoretic index b3 - b4- - b2 is compared with 25 A^ - sigma
 * and 9 A^ - chi/3.
 */
struct Spin7IndexIdentity {
    BigRational ahat_sigma, ahat_chi;  ///< A^ = ahat_sigma * sigma + ahat_chi * chi
    LinearForm b4_plus, sigma, chi;
    LinearForm representation_index, from_sigma, from_chi;
    [[nodiscard]] bool holds() const { return representation_index == from_sigma && representation_index == from_chi; }
};

inline Spin7IndexIdentity spin7_index_identity() {
    const DimensionIdentityReport d = verify_dimension_identities(8);
    RationalMatrix cols;
    for (std::size_t i = 0; i < d.basis.size(); ++i) cols.push_back({d.sigma[i], d.chi[i]});
    const auto ab = solve(cols, d.ahat);
    if (!ab) throw ConsistencyError("A^ is not a combination of sigma and chi on 8-manifolds with chi = -(p1^2-4p2)/8");

    Spin7IndexIdentity out;
    out.ahat_sigma = (*ab)[0];
    out.ahat_chi = (*ab)[1];
    const LinearForm b2 = LinearForm::variable("b2"), b3 = LinearForm::variable("b3");
    const LinearForm bp = LinearForm::variable("b4+"), bm = LinearForm::variable("b4-");
    const LinearForm sigma = bp - bm;
    const LinearForm chi = LinearForm(2) + BigRational(2) * b2 - BigRational(2) * b3 + bp + bm;

    const LinearForm relation = out.ahat_sigma * sigma + out.ahat_chi * chi - LinearForm(1);  // = 0 when A^ = 1
    const BigRational c = relation.coefficient("b4+");
    if (c.is_zero()) throw ConsistencyError("A^ relation does not involve b4+");
    out.b4_plus = (BigRational(-1) / c) * relation.substitute("b4+", LinearForm(0));
    out.sigma = sigma.substitute("b4+", out.b4_plus);
    out.chi = chi.substitute("b4+", out.b4_plus);

    if (!d.found) throw ConsistencyError("dimension-8 index identity not found");
    out.from_sigma = d.found->first * LinearForm(1) + d.found->second * out.sigma;
    for (const auto& claim : d.claims)
        if (claim.second == "chi") out.from_chi = claim.alpha * LinearForm(1) + claim.beta * out.chi;
    out.representation_index = derived_index_form(spin7_model());
    return out;
}

// ---------------------------------------------------------------------------
// Quaternion-Kahler bound

/// Sym^d H (x) Lambda^{a,b}_0 E.
struct QKSummand {
    int d = 0, a = 0, b = 0;

    void validate(int m) const {
        if (m < 1) throw DomainError("quaternionic dimension must be positive");
        if (d < 0 || b < 0 || b > a || a > m)
            throw DomainError("invalid labels (d;a,b) = (" + std::to_string(d) + ";" + std::to_string(a) + "," +
                              std::to_string(b) + "): need d >= 0 and 0 <= b <= a <= m");
    }
    /// Globally defined on a spin QK manifold other than HP^m iff the number of H and E factors is even.
    [[nodiscard]] bool global_on_spin_qk() const { return (d + a + b) % 2 == 0; }
    [[nodiscard]] std::string name() const {
        if (d == 0 && a == 0) return "C";
        std::string s;
        if (d > 0) s = d == 1 ? "H" : "Sym^" + std::to_string(d) + "H";
        if (a > 0) {
            if (!s.empty()) s += " (x) ";
            s += "Lambda^{" + std::to_string(a) + "," + std::to_string(b) + "}_0E";
        }
        return s;
    }
    friend bool operator==(const QKSummand&, const QKSummand&) = default;
};

/// Coefficient of scal in the lower bound for Delta_V: (d+a-b)(d-a-b+2m+2)/(8m(m+2)).
inline BigRational qk_casimir_bound(int m, const QKSummand& s) {
    s.validate(m);
    return BigRational((s.d + s.a - s.b) * (s.d - s.a - s.b + 2 * m + 2), 8 * m * (m + 2));
}

/// Reads (d; a, b) off C1 x Cm labels; entries of the Cm weight must lie in {0, 1, 2}.
inline QKSummand qk_summand_of(const RootSystem& r, const Labels& l) {
    const int m = r.rank() - 1;
    QKSummand s;
    s.d = l[0];
    const RationalVector e = r.to_euclidean(l);
    for (int i = 1; i <= m; ++i) {
        const BigRational& x = e[static_cast<std::size_t>(i)];
        if (x == BigRational(1)) ++s.a;
        else if (x == BigRational(2)) {
            ++s.a;
            ++s.b;
        } else if (!x.is_zero()) throw ModelDataError("summand is not of the form Sym^d H (x) Lambda^{a,b}_0 E");
    }
    s.validate(m);
    return s;
}

struct QKSummandReport {
    QKSummand summand;
    std::int64_t multiplicity = 0;
    BigRational bound;
    bool global = true;
    bool survives = false;
};

struct QKKernelAnalysis {
    int m = 0;
    BigRational threshold;  ///< (8 - n)/(8n), n = 4m; kernel on Ker P* needs bound <= threshold
    std::vector<QKSummandReport> summands;
    std::vector<QKSummandReport> survivors;
    LinearForm kernel;
};

inline QKKernelAnalysis qk_kernel_analysis(int m) {
    if (m < 2) throw DomainError("qk_kernel_analysis needs m >= 2");
    const HolonomyModel h = sp1_spm_model(m);
    QKKernelAnalysis out;
    out.m = m;
    out.threshold = BigRational(8 - 4 * m, 32 * m);
    const RepSum three_half = sigma_three_half(h).total();
    for (const auto& [l, mult] : three_half.terms()) {
        QKSummandReport rep;
        rep.summand = qk_summand_of(h.root, l);
        rep.multiplicity = mult;
        rep.bound = qk_casimir_bound(m, rep.summand);
        rep.global = rep.summand.global_on_spin_qk();
        rep.survives = rep.bound <= out.threshold;
        out.summands.push_back(rep);
        if (!rep.survives) continue;
        out.survivors.push_back(rep);
        // harmonic sections: constants for C, harmonic 2-forms for Sym^2 E inside Lambda^2 T
        if (rep.summand == QKSummand{0, 0, 0}) out.kernel += BigRational(mult) * LinearForm(1);
        else if (rep.summand == QKSummand{0, 1, 1}) out.kernel += BigRational(mult) * LinearForm::variable("b2");
        else throw ModelDataError("unexpected surviving summand " + rep.summand.name());
    }
    return out;
}

}  // namespace rslab
