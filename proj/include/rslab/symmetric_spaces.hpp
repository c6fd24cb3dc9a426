#pragma once

/**
 * @file symmetric_spaces.hpp
 * @brief Sphere positivity check, the catalog of 8-dimensional symmetric spaces
 *        with Rarita-Schwinger fields, and parallel fields on products.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rslab/complete_intersection.hpp"
#include "rslab/holonomy.hpp"

namespace rslab {

struct SphereCheck {
    int n = 0;
    std::string root_system;
    BigRational casimir;         ///< <lambda + 2 delta, lambda>, lambda = (3/2, 1/2, ..., 1/2)
    BigRational casimir_other;   ///< the other chirality (3/2, 1/2, ..., -1/2) in even n; equals casimir in odd n
    BigRational closed_form;     ///< n(n+7)/8
    BigRational threshold;       ///< -(n-8)/(8n) scal with scal = n(n-1)
    BigRational margin;
};

/// Casimir of Sigma_{3/2} on S^n from B_m (n odd) or D_m (n even) root data.
inline SphereCheck sphere_check(int n) {
    if (n < 3 || n > 200) throw DomainError("sphere_check needs 3 <= n <= 200");
    const int m = n / 2;
    const RootSystem r = RootSystem::parse((n % 2 ? "B" : "D") + std::to_string(m));
    RationalVector lambda(static_cast<std::size_t>(m), BigRational(1, 2));
    lambda[0] = BigRational(3, 2);
    SphereCheck s;
    s.n = n;
    s.root_system = r.name();
    s.casimir = casimir_euclidean(r, lambda);
    s.casimir_other = s.casimir;
    if (n % 2 == 0 && m > 1) {
        lambda.back() = -lambda.back();
        s.casimir_other = casimir_euclidean(r, lambda);
    }
    s.closed_form = BigRational(n * (n + 7), 8);
    if (s.casimir != s.closed_form || s.casimir_other != s.closed_form)
        throw ConsistencyError("sphere Casimir " + s.casimir.str() + " differs from n(n+7)/8 = " + s.closed_form.str());
    s.threshold = BigRational((8 - n) * (n - 1), 8);
    s.margin = s.casimir - s.threshold;
    return s;
}

struct SymmetricSpaceEntry {
    std::string name;
    std::string presentation;
    std::string isotropy;  ///< root system of the isotropy algebra
    int real_dimension = 8;
    std::int64_t kernel_dimension = 0;
    std::optional<std::int64_t> index;  ///< with the complex orientation where there is one
    std::int64_t parallel_plus = 0;     ///< trivial summands in Sigma^+_{3/2}
    std::int64_t parallel_minus = 0;
    bool all_parallel = false;
    std::string kernel_source;
    std::string note;
};

namespace detail {

inline std::vector<Labels> sign_pairs(int charge) {
    return {{charge, 1, 1}, {charge, 1, -1}, {charge, -1, 1}, {charge, -1, -1}};
}

inline SymmetricSpaceEntry analyze_space(SymmetricSpaceEntry e, const TangentRoots& t) {
    const RootSystem r = RootSystem::parse(e.isotropy);
    const SpinRepresentation s = spin_representation(r, t);
    const Labels zero = zero_labels(r);
    e.parallel_plus = s.three_half.plus.multiplicity(zero);
    e.parallel_minus = s.three_half.minus.multiplicity(zero);
    return e;
}

}  // namespace detail

/**
 * The 8-dimensional compact symmetric spaces carrying Rarita-Schwinger fields.
 * Trivial summands of Sigma_{3/2} under the isotropy are counted from spinor
 * weights built on the isotropy weights of the tangent space, and must equal
 * the kernel dimension (all fields are parallel).
 */
inline std::vector<SymmetricSpaceEntry> symmetric_space_catalog() {
    std::vector<SymmetricSpaceEntry> out;
    auto qk_kernel = [](int b2) {
        return kernel_dimension(TopologicalInput::quaternion_kahler(2, b2)).convert_to<std::int64_t>();
    };

    {
        SymmetricSpaceEntry e;
        e.name = "Gr2(C4)";
        e.presentation = "SU(4)/S(U(2)xU(2))";
        e.isotropy = "U1xA1xA1";
        e.kernel_dimension = qk_kernel(1);
        e.kernel_source = "quaternion-Kahler kernel b2 + 1 with b2 = 1";
        e.note = "tangent S* (x) Q; isomorphic to Q4 through su(4) = so(6)";
        e = detail::analyze_space(e, {detail::sign_pairs(1), false});
        e.index = e.parallel_plus - e.parallel_minus;
        out.push_back(e);
    }
    {
        SymmetricSpaceEntry e;
        e.name = "HP2";
        e.presentation = "Sp(3)/Sp(1)Sp(2)";
        e.isotropy = "C1xC2";
        e.kernel_dimension = qk_kernel(0);
        e.kernel_source = "quaternion-Kahler kernel b2 + 1 with b2 = 0";
        e.note = "tangent H (x) E";
        e = detail::analyze_space(e, {{{1, 1, 0}, {1, -1, 0}, {1, -1, 1}, {1, 1, -1}}, false});
        out.push_back(e);
    }
    {
        SymmetricSpaceEntry e;
        e.name = "G2/SO(4)";
        e.presentation = "G2/SO(4)";
        e.isotropy = "A1xA1";
        e.kernel_dimension = qk_kernel(0);
        e.kernel_source = "quaternion-Kahler kernel b2 + 1 with b2 = 0";
        e.note = "tangent Sym^3 H (x) H' of SO(4) = Sp(1)Sp(1)";
        e = detail::analyze_space(e, {{{3, 1}, {3, -1}, {1, 1}, {1, -1}}, false});
        out.push_back(e);
    }
    {
        SymmetricSpaceEntry e;
        e.name = "SU(3)";
        e.presentation = "SU(3)xSU(3)/SU(3)";
        e.isotropy = "A2";
        e.note = "isotropy acts on the tangent space by the adjoint representation";
        e = detail::analyze_space(e, {{{2, -1}, {-1, 2}, {1, 1}, {0, 0}}, false});
        e.kernel_dimension = e.parallel_plus + e.parallel_minus;
        e.kernel_source = "one trivial summand in each half of Sigma_{3/2} under the isotropy SU(3)";
        e.index = e.parallel_plus - e.parallel_minus;
        out.push_back(e);
    }
    {
        SymmetricSpaceEntry e;
        e.name = "Q4";
        e.presentation = "SO(6)/SO(2)xSO(4)";
        e.isotropy = "U1xA1xA1";
        e.note = "tangent C (x) R^4 with SO(2) charge 1; complex orientation";
        e = detail::analyze_space(e, {detail::sign_pairs(2), false});
        e.kernel_dimension = e.parallel_plus + e.parallel_minus;
        e.kernel_source = "two-dimensional trivial summand in the negative half of Sigma_{3/2}";
        e.index = e.parallel_plus - e.parallel_minus;
        const BigRational char_index = rs_index(quadric(4).profile).ind_q;
        if (BigRational(*e.index) != char_index)
            throw ConsistencyError("Q4: representation index " + std::to_string(*e.index) +
                                   " differs from the characteristic-class index " + char_index.str());
        out.push_back(e);
    }

    for (auto& e : out) {
        e.all_parallel = e.parallel_plus + e.parallel_minus == e.kernel_dimension;
        if (!e.all_parallel)
            throw ConsistencyError(e.name + ": " + std::to_string(e.parallel_plus + e.parallel_minus) +
                                   " parallel fields but kernel dimension " + std::to_string(e.kernel_dimension));
    }
    return out;
}

/// Parallel spinor and Rarita-Schwinger counts of one factor; real_dimension 0 means unspecified.
struct ParallelCounts {
    std::int64_t spinors = 0;
    std::int64_t rs = 0;
    int real_dimension = 0;
};

struct ProductParallelReport {
    std::int64_t value = 0;
    bool even_dimensions = true;  ///< the splitting is stated for even-dimensional factors
    std::string note;
};

/// s_M s_N + r_M s_N + s_M r_N.
inline ProductParallelReport product_parallel_rs(const ParallelCounts& m, const ParallelCounts& n) {
    if (m.spinors < 0 || m.rs < 0 || n.spinors < 0 || n.rs < 0)
        throw DomainError("parallel counts must be non-negative");
    ProductParallelReport r;
    r.value = m.spinors * n.spinors + m.rs * n.spinors + m.spinors * n.rs;
    r.even_dimensions = m.real_dimension % 2 == 0 && n.real_dimension % 2 == 0;
    if (!r.even_dimensions) r.note = "splitting of the product spin-3/2 bundle is stated for even-dimensional factors only";
    return r;
}

inline ParallelCounts parallel_counts(const HolonomyModel& h) {
    return {parallel_spinor_dimension(h), parallel_rs_dimension(h), h.real_dimension};
}

}  // namespace rslab
