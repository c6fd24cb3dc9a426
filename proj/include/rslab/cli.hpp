#pragma once

/**
 * @file cli.hpp
 * @brief Command implementations behind the rslab executable.
 *
 * Every command returns a ReportEnvelope; run() parses an argument vector,
 * dispatches, and maps errors to exit codes (0 success, 1 regression or
 * consistency failure, 2 usage error).
 */

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rslab/report.hpp"
#include "rslab/symmetric_spaces.hpp"

namespace rslab::cli {

/// Bad command-line input that CLI11 itself cannot detect.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Json rep_json(const RootSystem& r, const RepSum& s) {
    Json terms = Json::array();
    std::vector<std::int64_t> dims;
    for (const auto& [l, m] : s.terms()) {
        const std::int64_t d = weyl_dim(r, l);
        terms.push_back({{"labels", l}, {"dimension", d}, {"multiplicity", m}});
        for (std::int64_t k = 0; k < m; ++k) dims.push_back(d);
    }
    std::sort(dims.begin(), dims.end());
    return {{"summands", terms}, {"dimensions", dims}, {"total_dimension", s.dimension(r)}, {"text", s.str(r)}};
}

inline std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (tok.empty() || used != tok.size()) throw UsageError("malformed " + what + " '" + text + "'");
        out.push_back(v);
    }
    if (out.empty() || text.back() == ',') throw UsageError("malformed " + what + " '" + text + "'");
    return out;
}

/// "n:d1,d2,..."
inline CISpec parse_ci_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("complete intersection must look like n:d1,d2 (got '" + text + "')");
    const auto n = parse_int_list(text.substr(0, colon), "dimension");
    if (n.size() != 1) throw UsageError("malformed dimension in '" + text + "'");
    return {n[0], parse_int_list(text.substr(colon + 1), "degrees")};
}

/// "sp:2", "g2", "so:7".
inline HolonomyModel parse_model_spec(const std::string& text) {
    const auto colon = text.find(':');
    const std::string tag = text.substr(0, colon);
    int param = 0;
    if (colon != std::string::npos) {
        const auto p = parse_int_list(text.substr(colon + 1), "group parameter");
        if (p.size() != 1) throw UsageError("malformed group parameter in '" + text + "'");
        param = p[0];
    }
    return make_holonomy_model(tag, param);
}

inline Json rs_index_json(const RSIndex& r) {
    return {{"ind_q", to_json(r.ind_q)}, {"ind_d", to_json(r.ind_d)}, {"ind_d_tm", to_json(r.ind_d_tm)}};
}

inline const char* kCiChern =
    "tangent bundle of X_n(d_1..d_r) in P^{n+r}: c = (1+h)^{n+r+1} / prod_j (1 + d_j h), <h^n, [X]> = prod_j d_j";
inline const char* kRsIndex =
    "Rarita-Schwinger index: ind Q = <A^(M) (ch(TM (x) C) + 1), [M]>, the twisted Dirac index of TM (x) C plus the Dirac index";
inline const char* kFermatSeries =
    "signature of a degree-d hypersurface of complex dimension m: coefficient of z^{m+1} in "
    "((1+z)^d - (1-z)^d) / ((1-z^2)((1+z)^d + (1-z)^d))";
inline const char* kHodge =
    "Hodge numbers of complete intersections: h^{p,q} = delta_{pq} off the middle row, middle row from the chi_y genus";
inline const char* kCyKernel =
    "Calabi-Yau kernel: dim ker Q = 2 sum_{p=1}^{n-1} h^{1,p} - 2, index 2 + 2 sum_p (-1)^p h^{1,p} in even n";

}  // namespace detail

// ---------------------------------------------------------------------------
// ci

struct CIOptions {
    int n = 0;
    std::vector<int> degrees;
    std::string method = "chern";  ///< chern | series | both
    bool kernel_only = false;
};

inline ReportEnvelope cmd_ci(const CIOptions& o) {
    if (o.method != "chern" && o.method != "series" && o.method != "both")
        throw UsageError("--method must be chern, series or both");
    const CISpec spec{o.n, o.degrees};
    try {
        spec.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const bool want_series = o.method != "chern";
    if (want_series && (spec.codimension() != 1 || spec.n % 2 != 0))
        throw UsageError("the series signature applies to hypersurfaces of even complex dimension only");

    const CIManifold m = build_ci(spec);
    ReportEnvelope e;
    e.command = "ci";
    e.inputs = {{"n", o.n}, {"degrees", o.degrees}, {"method", o.method}, {"kernel_only", o.kernel_only}};
    e.cite(detail::kCiChern);

    Json& r = e.results;
    r["manifold"] = spec.name();
    r["codimension"] = spec.codimension();
    r["total_degree"] = m.total_degree;
    r["real_dimension"] = 2 * spec.n;
    r["classification"] = {{"spin", m.spin},
                           {"c1", std::to_string(m.c1_coefficient()) + " h"},
                           {"c1_sign", to_string(m.c1_sign)}};

    const CIKernelReport k = ci_rs_kernel(m);
    Json kj = {{"regime", to_string(k.regime)},
               {"kernel_dimension", k.kernel_dimension ? to_json(*k.kernel_dimension) : Json(nullptr)},
               {"hodge_index", to_json(k.hodge_index)},
               {"im_p_lower_bound", to_json(k.im_p_lower_bound)},
               {"ker_p_star_lower_bound", to_json(k.ker_p_star_lower_bound)},
               {"nontrivial_on_im_p", k.nontrivial_on_im_p},
               {"ind_q_differs_from_ind_d", k.ind_q_differs_from_ind_d},
               {"kahler_einstein_window", k.kahler_einstein_window ? Json(*k.kahler_einstein_window) : Json(nullptr)},
               {"note", k.note}};
    r["kernel"] = kj;
    if (k.regime == KernelRegime::CalabiYau) e.cite(detail::kCyKernel);

    if (!o.kernel_only) {
        std::vector<BigRational> chern;
        for (int i = 1; i <= spec.n; ++i) chern.push_back(m.profile.chern_coefficient(i));
        r["chern_classes"] = to_json(chern);
    }

    const CIInvariants inv = ci_invariants(m);
    Json invj = {{"euler", to_json(inv.chi)},
                 {"ahat", to_json(inv.ahat)},
                 {"todd", to_json(todd_genus_value(m.profile))},
                 {"ind_d", to_json(inv.ind_d)},
                 {"ind_d_tm", to_json(inv.ind_d_tm)},
                 {"ind_q", to_json(inv.ind_q)},
                 {"signature", to_json(inv.sigma)}};
    e.cite(detail::kRsIndex);

    if (spec.n % 2 == 0) {
        if (!o.kernel_only) {
            const auto pv = chern_to_pontryagin(m.profile);
            Json pj = Json::object();
            for (std::size_t i = 0; i < pv.basis.size(); ++i)
                pj[pontryagin_monomial_name(pv.basis[i])] = pv.numbers[i].str();
            r["pontryagin_numbers"] = pj;
        }

        Json routes = Json::object();
        if (o.method != "series") routes["l_genus"] = to_json(*inv.sigma);
        if (want_series) {
            const BigRational series = fermat_signature(spec.n, spec.degrees[0]);
            routes["fermat_series"] = to_json(series);
            e.cite(detail::kFermatSeries);
            if (o.method == "series") invj["signature"] = to_json(series);
            else if (series != *inv.sigma)
                throw ConsistencyError(spec.name() + ": L-genus signature " + inv.sigma->str() +
                                       " differs from the series signature " + series.str());
        }
        r["signature_routes"] = routes;
    }
    r["invariants"] = invj;
    if (o.kernel_only) return e;

    const HodgeTable t = hodge_numbers(m);
    Json hj = Json::array();
    for (const auto& row : t) {
        Json rj = Json::array();
        for (const auto& x : row) rj.push_back(x.str());
        hj.push_back(rj);
    }
    r["hodge"] = hj;
    e.cite(detail::kHodge);
    return e;
}

// ---------------------------------------------------------------------------
// holonomy

struct HolonomyOptions {
    std::string group;
    std::optional<int> param;
    std::optional<std::int64_t> b2, b3, b4minus;
    std::vector<std::int64_t> hodge;
};

namespace detail {

inline Json catalog_json() {
    Json spaces = Json::object();
    for (const auto& s : symmetric_space_catalog()) {
        spaces[s.name] = {{"presentation", s.presentation},
                          {"isotropy", s.isotropy},
                          {"real_dimension", s.real_dimension},
                          {"kernel_dimension", s.kernel_dimension},
                          {"index", s.index ? Json(*s.index) : Json(nullptr)},
                          {"parallel_plus", s.parallel_plus},
                          {"parallel_minus", s.parallel_minus},
                          {"all_parallel", s.all_parallel},
                          {"kernel_source", s.kernel_source},
                          {"note", s.note}};
    }
    return spaces;
}

inline std::optional<Family> family_of(const HolonomyModel& h) {
    switch (h.group) {
        case HolonomyGroup::SU: return Family::CalabiYau;
        case HolonomyGroup::Sp: return Family::Hyperkahler;
        case HolonomyGroup::Sp1Spm: return Family::QuaternionKahler;
        case HolonomyGroup::G2: return Family::G2;
        case HolonomyGroup::Spin7: return Family::Spin7;
        default: return std::nullopt;
    }
}

inline TopologicalInput topological_input(const HolonomyModel& h, Family f, const HolonomyOptions& o) {
    auto need = [](const std::optional<std::int64_t>& v, const char* flag) {
        if (!v) throw UsageError(std::string("missing ") + flag);
        return BigInt(*v);
    };
    auto no_hodge = [&] {
        if (!o.hodge.empty()) throw UsageError("--hodge applies to su and sp only");
    };
    auto no_betti = [&] {
        if (o.b2 || o.b3 || o.b4minus) throw UsageError("--b2/--b3/--b4minus do not apply to " + h.name());
    };
    std::vector<BigInt> hv(o.hodge.begin(), o.hodge.end());
    switch (f) {
        case Family::CalabiYau:
            no_betti();
            if (static_cast<int>(hv.size()) != h.param - 1)
                throw UsageError("--hodge needs h^{1,1}..h^{1,n-1}: " + std::to_string(h.param - 1) + " values");
            return TopologicalInput::calabi_yau(h.param, hv);
        case Family::Hyperkahler:
            no_betti();
            if (static_cast<int>(hv.size()) != h.param)
                throw UsageError("--hodge needs h^{1,1}..h^{n,1}: " + std::to_string(h.param) + " values");
            return TopologicalInput::hyperkahler(h.param, hv);
        case Family::Spin7:
            no_hodge();
            return TopologicalInput::spin7(need(o.b2, "--b2"), need(o.b3, "--b3"), need(o.b4minus, "--b4minus"));
        case Family::G2:
            no_hodge();
            if (o.b4minus) throw UsageError("--b4minus does not apply to G2");
            return TopologicalInput::g2(need(o.b2, "--b2"), need(o.b3, "--b3"));
        case Family::QuaternionKahler:
            no_hodge();
            if (o.b3 || o.b4minus) throw UsageError("quaternion-Kahler input is --b2 only");
            return TopologicalInput::quaternion_kahler(h.param, need(o.b2, "--b2"));
    }
    throw UsageError("no topological input for " + h.name());
}

inline void check_form(const std::string& what, const LinearForm& derived, const LinearForm& closed) {
    if (derived != closed)
        throw ConsistencyError(what + ": derived " + derived.str() + " differs from closed form " + closed.str());
}

}  // namespace detail

inline ReportEnvelope cmd_holonomy(const HolonomyOptions& o) {
    ReportEnvelope e;
    e.command = "holonomy";
    e.inputs = {{"group", o.group}};
    if (o.param) e.inputs["param"] = *o.param;
    if (o.b2) e.inputs["b2"] = *o.b2;
    if (o.b3) e.inputs["b3"] = *o.b3;
    if (o.b4minus) e.inputs["b4minus"] = *o.b4minus;
    if (!o.hodge.empty()) e.inputs["hodge"] = o.hodge;

    if (o.group == "catalog") {
        if (o.param || o.b2 || o.b3 || o.b4minus || !o.hodge.empty())
            throw UsageError("catalog takes no parameters");
        e.results["spaces"] = detail::catalog_json();
        e.cite("compact symmetric spaces of dimension 8 with Rarita-Schwinger fields: Gr2(C4), HP2, G2/SO(4) "
               "through the quaternion-Kahler kernel b2 + 1; SU(3) and Q4 through trivial isotropy summands");
        e.cite("all Rarita-Schwinger fields on these spaces are parallel");
        return e;
    }

    static const std::vector<std::string> groups{"su", "sp", "qk", "sp1spm", "g2", "spin7", "so", "u"};
    if (std::find(groups.begin(), groups.end(), o.group) == groups.end())
        throw UsageError("unknown holonomy group '" + o.group + "' (su, sp, qk, g2, spin7, so, u, catalog)");
    const bool fixed = o.group == "g2" || o.group == "spin7";
    if (fixed && o.param) throw UsageError(o.group + " takes no parameter");
    if (!fixed && !o.param) throw UsageError(o.group + " needs a parameter");
    const HolonomyModel h = [&] {
        try {
            return make_holonomy_model(o.group, o.param.value_or(0));
        } catch (const DomainError& err) {
            throw UsageError(err.what());
        }
    }();

    Json& r = e.results;
    r["group"] = h.name();
    r["root_system"] = h.root.name();
    r["real_dimension"] = h.real_dimension;
    r["graded"] = h.graded;
    r["tangent"] = detail::rep_json(h.root, h.tangent);
    r["sigma_half"] = {{"plus", detail::rep_json(h.root, h.sigma_plus)},
                       {"minus", detail::rep_json(h.root, h.sigma_minus)}};
    const ThreeHalf t = sigma_three_half(h);
    r["three_half"] = {{"plus", detail::rep_json(h.root, t.plus)},
                       {"minus", detail::rep_json(h.root, t.minus)},
                       {"total", detail::rep_json(h.root, t.total())}};
    e.cite("spin-3/2 representation: Sigma_{3/2} = Sigma (x) T minus Sigma, graded as "
           "Sigma^{+-}_{3/2} = Sigma^{+-} (x) T minus Sigma^{-+} in even dimension");

    const SpinRepresentation s = spin_representation(h);
    const bool agree = (s.plus == h.sigma_plus && s.minus == h.sigma_minus) ||
                       (s.plus == h.sigma_minus && s.minus == h.sigma_plus);
    const bool agree32 = (s.three_half.plus == t.plus && s.three_half.minus == t.minus) ||
                         (s.three_half.plus == t.minus && s.three_half.minus == t.plus);
    if (!agree || !agree32)
        throw ConsistencyError(h.name() + ": spinor tables differ from spinor weights built on the tangent weights");
    r["spinor_weight_check"] = true;

    const std::int64_t par_rs = t.total().multiplicity(rslab::detail::zero_labels(h.root));
    r["parallel_spinors"] = parallel_spinor_dimension(h);
    r["parallel_rs"] = par_rs;
    e.cite("parallel Rarita-Schwinger fields correspond to trivial summands of Sigma_{3/2} under the holonomy");

    const auto fam = detail::family_of(h);
    const bool has_inputs = o.b2 || o.b3 || o.b4minus || !o.hodge.empty();
    if (!fam || (*fam == Family::QuaternionKahler && h.param < 2)) {
        if (has_inputs) throw UsageError("no kernel formula for " + h.name() + "; topological inputs not accepted");
        return e;
    }

    Json f;
    f["family"] = to_string(*fam);
    const LinearForm kf = kernel_form(*fam, h.param);
    f["kernel"] = to_json(kf);
    std::optional<LinearForm> ixf;
    try {
        ixf = index_form(*fam, h.param);
        f["index"] = to_json(*ixf);
    } catch (const NotApplicable& err) {
        f["index"] = nullptr;
        f["index_note"] = err.what();
    }

    switch (*fam) {
        case Family::CalabiYau:
            e.cite(detail::kCyKernel);
            break;
        case Family::Hyperkahler: {
            const auto d = hyperkahler_derivation(h.param);
            detail::check_form("hyperkahler kernel", d.derived_kernel, d.closed_kernel);
            detail::check_form("hyperkahler index", d.derived_index, d.closed_index);
            f["derived_kernel"] = to_json(d.derived_kernel);
            f["derived_index"] = to_json(d.derived_index);
            e.cite("hyperkahler kernel 4 sum_{j<n} h^{j,1} + 2 h^{n,1} - (n+1) from the Sp(n) decomposition of "
                   "Sigma_{3/2}; parallel fields form an (n-1)-dimensional space");
            break;
        }
        case Family::Spin7: {
            const LinearForm dk = derived_kernel_form(h), di = derived_index_form(h);
            detail::check_form("Spin(7) kernel", dk, kf);
            detail::check_form("Spin(7) index", di, *ixf);
            f["derived_kernel"] = to_json(dk);
            f["derived_index"] = to_json(di);
            const auto id = spin7_index_identity();
            if (!id.holds()) throw ConsistencyError("Spin(7) index identity fails");
            r["index_identity"] = {{"ahat_sigma", to_json(id.ahat_sigma)},
                                   {"ahat_chi", to_json(id.ahat_chi)},
                                   {"b4_plus", to_json(id.b4_plus)},
                                   {"from_sigma", to_json(id.from_sigma)},
                                   {"from_chi", to_json(id.from_chi)},
                                   {"holds", id.holds()}};
            e.cite("Spin(7) kernel b2 + b3 + b4- and index b3 - b4- - b2 = 25 A^ - sigma with A^ = 1");
            break;
        }
        case Family::G2: {
            const LinearForm dk = derived_kernel_form(h);
            detail::check_form("G2 kernel", dk, kf);
            f["derived_kernel"] = to_json(dk);
            e.cite("G2 kernel b2 + b3 - 1 from Sigma_{3/2} = 7 + 14 + 27 on a compact manifold with holonomy G2");
            break;
        }
        case Family::QuaternionKahler: {
            const auto q = qk_kernel_analysis(h.param);
            detail::check_form("quaternion-Kahler kernel", q.kernel, kf);
            Json sj = Json::array();
            for (const auto& x : q.summands)
                sj.push_back({{"name", x.summand.name()},
                              {"d", x.summand.d},
                              {"a", x.summand.a},
                              {"b", x.summand.b},
                              {"multiplicity", x.multiplicity},
                              {"bound", to_json(x.bound)},
                              {"global", x.global},
                              {"survives", x.survives}});
            Json surv = Json::array();
            for (const auto& x : q.survivors) surv.push_back(x.summand.name());
            r["qk_analysis"] = {{"m", q.m},
                                {"threshold", to_json(q.threshold)},
                                {"summands", sj},
                                {"survivors", surv},
                                {"kernel", to_json(q.kernel)}};
            e.cite("quaternion-Kahler with positive scalar curvature: the Casimir lower bound "
                   "(d+a-b)(d-a-b+2m+2)/(8m(m+2)) scal leaves a kernel only for m = 2, of dimension b2 + 1");
            break;
        }
    }
    r["formulas"] = f;

    if (has_inputs) {
        const TopologicalInput in = detail::topological_input(h, *fam, o);
        r["kernel_dimension"] = to_json(kernel_dimension(in));
        r["index"] = ixf ? to_json(family_index(in)) : Json(nullptr);
    }
    return e;
}

// ---------------------------------------------------------------------------
// rep

struct RepOptions {
    std::string root;
    std::vector<int> weight;
    std::vector<std::string> euclidean;  ///< alternative to weight: Euclidean coordinates "3/2", "1/2", ...
    std::vector<int> tensor;
    bool list_weights = false;
};

inline ReportEnvelope cmd_rep(const RepOptions& o) {
    const RootSystem r = [&] {
        try {
            return RootSystem::parse(o.root);
        } catch (const std::exception& err) {
            throw UsageError(err.what());
        }
    }();
    ReportEnvelope e;
    e.command = "rep";
    e.inputs = {{"root", o.root}};
    if (!o.weight.empty()) e.inputs["weight"] = o.weight;
    if (!o.euclidean.empty()) e.inputs["euclidean"] = o.euclidean;
    if (!o.tensor.empty()) e.inputs["tensor"] = o.tensor;
    e.inputs["list_weights"] = o.list_weights;

    Json& res = e.results;
    res["root_system"] = r.name();
    res["rank"] = r.rank();
    res["positive_roots"] = r.positive_roots().size();
    res["delta"] = to_json(r.delta());
    res["cartan_matrix"] = r.cartan_matrix();
    if (!o.weight.empty() && !o.euclidean.empty()) throw UsageError("give --weight or --euclidean, not both");
    if (o.weight.empty() && o.euclidean.empty()) {
        if (!o.tensor.empty() || o.list_weights) throw UsageError("--tensor and --weights need a highest weight");
        return e;
    }

    Labels lambda;
    try {
        if (!o.weight.empty()) {
            lambda = o.weight;
            (void)r.to_euclidean(lambda);
        } else {
            RationalVector v;
            for (const auto& x : o.euclidean) v.push_back(BigRational::parse(x));
            lambda = r.to_dynkin(v);
        }
        if (!r.is_dominant(lambda)) throw DomainError("highest weight must be dominant");
        if (!o.tensor.empty()) {
            (void)r.to_euclidean(o.tensor);
            if (!r.is_dominant(o.tensor)) throw DomainError("tensor factor must be dominant");
        }
    } catch (const DomainError& err) {
        throw UsageError(err.what());
    }

    const std::int64_t dim = weyl_dim(r, lambda);
    res["weight"] = {{"labels", lambda},
                     {"euclidean", to_json(r.to_euclidean(lambda))},
                     {"dimension", dim},
                     {"casimir", to_json(casimir(r, lambda))}};
    e.cite("Weyl dimension formula and Casimir <lambda + 2 delta, lambda> in the Euclidean standard scalar product");

    if (o.list_weights) {
        const WeightSystem w = weight_multiplicities(r, lambda);
        Json wj = Json::array();
        std::int64_t total = 0;
        for (const auto& [mu, m] : w) {
            wj.push_back({{"labels", mu}, {"multiplicity", m}});
            total += m;
        }
        if (total != dim) throw ConsistencyError("Freudenthal multiplicities sum to " + std::to_string(total) +
                                                 ", Weyl dimension is " + std::to_string(dim));
        res["weights"] = wj;
        e.cite("Freudenthal recursion for weight multiplicities");
    }
    if (!o.tensor.empty()) {
        const RepSum s = tensor_decompose(r, lambda, o.tensor);
        const std::int64_t expect = dim * weyl_dim(r, o.tensor);
        if (s.dimension(r) != expect) throw ConsistencyError("tensor product dimensions do not add up");
        res["tensor"] = {{"with", o.tensor}, {"decomposition", detail::rep_json(r, s)}};
        e.cite("Klimyk's formula for tensor products of irreducible representations");
    }
    return e;
}

// ---------------------------------------------------------------------------
// sphere

struct SphereOptions {
    int n = 0;
    int upto = 0;  ///< when > 0, scan 3..upto instead
};

inline ReportEnvelope cmd_sphere(const SphereOptions& o) {
    ReportEnvelope e;
    e.command = "sphere";
    e.cite("Casimir of Sigma_{3/2} on S^n with highest weight (3/2, 1/2, ..., 1/2): q(R) = n(n+7)/8");
    e.cite("positivity threshold (8-n)/(8n) scal with scal = n(n-1) on the round sphere");
    auto one = [](const SphereCheck& s) {
        return Json{{"n", s.n},
                    {"root_system", s.root_system},
                    {"casimir", to_json(s.casimir)},
                    {"casimir_other", to_json(s.casimir_other)},
                    {"closed_form", to_json(s.closed_form)},
                    {"threshold", to_json(s.threshold)},
                    {"margin", to_json(s.margin)},
                    {"positive", s.margin > BigRational(0)}};
    };
    auto check = [](int n) {
        try {
            return sphere_check(n);
        } catch (const DomainError& err) {
            throw UsageError(err.what());
        }
    };
    if (o.upto > 0) {
        if (o.n != 0) throw UsageError("give n or --upto, not both");
        e.inputs = {{"upto", o.upto}};
        if (o.upto < 3) throw UsageError("--upto must be at least 3");
        bool all = true;
        std::optional<BigRational> min_margin;
        for (int n = 3; n <= o.upto; ++n) {
            const SphereCheck s = check(n);
            all = all && s.margin > BigRational(0);
            if (!min_margin || s.margin < *min_margin) min_margin = s.margin;
        }
        e.results = {{"range", {3, o.upto}}, {"all_positive", all}, {"min_margin", to_json(*min_margin)}};
        return e;
    }
    e.inputs = {{"n", o.n}};
    e.results = one(check(o.n));
    return e;
}

// ---------------------------------------------------------------------------
// product

struct ProductOptions {
    std::vector<std::string> ci;
    std::vector<std::string> holonomy;
};

inline ReportEnvelope cmd_product(const ProductOptions& o) {
    ReportEnvelope e;
    e.command = "product";
    if (!o.ci.empty() == !o.holonomy.empty())
        throw UsageError("give two --ci factors or two --holonomy factors");
    const auto& args = o.ci.empty() ? o.holonomy : o.ci;
    if (args.size() != 2) throw UsageError("a product needs exactly two factors");

    if (!o.ci.empty()) {
        e.inputs = {{"ci", o.ci}};
        std::vector<CIManifold> f;
        for (const auto& a : args) {
            const CISpec s = detail::parse_ci_spec(a);
            try {
                s.validate();
            } catch (const DomainError& err) {
                throw UsageError(err.what());
            }
            f.push_back(build_ci(s));
        }
        const auto p = product_rs_index(f[0].profile, f[1].profile);
        e.results = {{"left", {{"manifold", f[0].spec.name()}, {"index", detail::rs_index_json(p.left)}}},
                     {"right", {{"manifold", f[1].spec.name()}, {"index", detail::rs_index_json(p.right)}}},
                     {"product_formula", to_json(p.product_formula)},
                     {"direct", to_json(p.direct)},
                     {"agree", p.product_formula == p.direct}};
        e.cite("index on a product: ind Q^{MxN} = ind Q^M ind D^N - ind D^M ind D^N + ind D^M ind Q^N");
        e.cite(detail::kRsIndex);
        return e;
    }

    e.inputs = {{"holonomy", o.holonomy}};
    std::vector<HolonomyModel> f;
    for (const auto& a : args) {
        try {
            f.push_back(detail::parse_model_spec(a));
        } catch (const DomainError& err) {
            throw UsageError(err.what());
        }
    }
    const ParallelCounts a = parallel_counts(f[0]), b = parallel_counts(f[1]);
    const ProductParallelReport p = product_parallel_rs(a, b);
    auto side = [](const HolonomyModel& h, const ParallelCounts& c) {
        return Json{{"group", h.name()}, {"real_dimension", c.real_dimension}, {"parallel_spinors", c.spinors},
                    {"parallel_rs", c.rs}};
    };
    e.results = {{"left", side(f[0], a)},
                 {"right", side(f[1], b)},
                 {"parallel_rs", p.value},
                 {"even_dimensions", p.even_dimensions},
                 {"note", p.note}};
    e.cite("on M x N with even-dimensional factors, Sigma_{3/2} splits as "
           "(Sigma^M_{3/2} (x) Sigma^N) + (Sigma^M (x) Sigma^N) + (Sigma^M (x) Sigma^N_{3/2}); "
           "parallel fields number s_M s_N + r_M s_N + s_M r_N");
    return e;
}

// ---------------------------------------------------------------------------
// identities

inline ReportEnvelope cmd_identities(int dim) {
    if (dim != 4 && dim != 8 && dim != 12) throw UsageError("--dim must be 4, 8 or 12");
    const DimensionIdentityReport d = verify_dimension_identities(dim);
    ReportEnvelope e;
    e.command = "identities";
    e.inputs = {{"dim", dim}};
    std::vector<std::string> basis;
    for (const auto& p : d.basis) basis.push_back(pontryagin_monomial_name(p));
    auto functional = [&](const RationalVector& v) {
        Json j = Json::object();
        for (std::size_t i = 0; i < v.size() && i < basis.size(); ++i) j[basis[i]] = v[i].str();
        return j;
    };
    Json& r = e.results;
    r["basis"] = basis;
    r["functionals"] = {{"ind_q", functional(d.ind_q)}, {"ahat", functional(d.ahat)}, {"sigma", functional(d.sigma)}};
    if (!d.chi.empty()) r["functionals"]["chi"] = functional(d.chi);
    r["found"] = d.found ? Json{{"ahat", to_json(d.found->first)}, {"sigma", to_json(d.found->second)}} : Json(nullptr);
    Json fam = Json::array();
    for (const auto& v : d.relation_family) fam.push_back(to_json(v));
    r["relation_family"] = fam;
    Json claims = Json::array();
    for (const auto& c : d.claims)
        claims.push_back({{"description", c.description},
                          {c.first, to_json(c.alpha)},
                          {c.second, to_json(c.beta)},
                          {"holds", c.holds}});
    r["claims"] = claims;
    r["all_hold"] = d.all_hold();
    e.cite(detail::kRsIndex);
    e.cite("dimension-specific index formulas: -19 A^ = 19/8 sigma in dimension 4, 25 A^ - sigma in dimension 8, "
           "5 A^ + sigma/8 in dimension 12, and 9 A^ - chi/3 when chi = -(p1^2 - 4 p2)/8");
    return e;
}

// ---------------------------------------------------------------------------
// verify-paper

struct ManifestCheck {
    std::string path;  ///< JSON pointer into the report
    Json value;
};

struct ManifestEntry {
    std::string id;
    std::vector<std::string> command;
    std::vector<ManifestCheck> checks;
    std::string citation;
    std::vector<std::string> tags;

    [[nodiscard]] bool matches(const std::string& filter) const {
        if (filter.empty()) return true;
        auto has = [&](const std::string& s) { return s.find(filter) != std::string::npos; };
        return has(id) || has(citation) || std::any_of(tags.begin(), tags.end(), has);
    }
};

struct RegressionManifest {
    std::vector<ManifestEntry> entries;

    static RegressionManifest from_json(const Json& j) {
        if (!j.contains("entries") || !j.at("entries").is_array()) throw DomainError("manifest needs an 'entries' array");
        RegressionManifest m;
        std::vector<std::string> ids;
        for (const auto& x : j.at("entries")) {
            ManifestEntry e;
            e.id = x.at("id").get<std::string>();
            e.command = x.at("command").get<std::vector<std::string>>();
            e.citation = x.value("citation", "");
            e.tags = x.value("tags", std::vector<std::string>{});
            for (const auto& c : x.at("expect")) e.checks.push_back({c.at("path").get<std::string>(), c.at("value")});
            if (e.citation.empty()) throw DomainError("manifest entry " + e.id + " has no citation");
            if (e.checks.empty()) throw DomainError("manifest entry " + e.id + " checks nothing");
            if (e.command.empty()) throw DomainError("manifest entry " + e.id + " has no command");
            if (std::find(ids.begin(), ids.end(), e.id) != ids.end()) throw DomainError("duplicate manifest id " + e.id);
            ids.push_back(e.id);
            m.entries.push_back(std::move(e));
        }
        return m;
    }

    [[nodiscard]] Json to_json() const {
        Json a = Json::array();
        for (const auto& e : entries) {
            Json checks = Json::array();
            for (const auto& c : e.checks) checks.push_back({{"path", c.path}, {"value", c.value}});
            a.push_back({{"id", e.id}, {"command", e.command}, {"expect", checks}, {"citation", e.citation}, {"tags", e.tags}});
        }
        return {{"entries", a}};
    }

    static RegressionManifest load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open manifest " + path);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::exception& err) {
            throw UsageError("manifest " + path + " is not valid JSON: " + err.what());
        }
        try {
            return from_json(j);
        } catch (const Json::exception& err) {
            throw UsageError("manifest " + path + ": " + err.what());
        } catch (const DomainError& err) {
            throw UsageError("manifest " + path + ": " + err.what());
        }
    }
};

inline std::string default_manifest_path() {
    if (const char* env = std::getenv("RSLAB_MANIFEST"); env != nullptr && *env != '\0') return env;
#ifdef RSLAB_DEFAULT_MANIFEST
    return RSLAB_DEFAULT_MANIFEST;
#else
    return "data/paper_manifest.json";
#endif
}

struct Outcome {
    int exit_code = 0;
    std::optional<ReportEnvelope> report;
    std::string out;  ///< text for stdout
    std::string err;  ///< text for stderr
};

Outcome run(const std::vector<std::string>& args);

struct VerifyOptions {
    std::string manifest;  ///< empty: RSLAB_MANIFEST or the built-in default
    std::string filter;
};

struct EntryResult {
    const ManifestEntry* entry = nullptr;
    bool passed = false;
    int exit_code = 0;
    std::string error;
    std::vector<std::pair<const ManifestCheck*, Json>> actual;
};

inline EntryResult run_entry(const ManifestEntry& m) {
    EntryResult r;
    r.entry = &m;
    if (m.command.front() == "verify-paper") {
        r.error = "manifest entries cannot run verify-paper";
        r.exit_code = 2;
        return r;
    }
    const Outcome o = run(m.command);
    r.exit_code = o.exit_code;
    r.passed = o.exit_code == 0 && o.report.has_value();
    if (!o.report) r.error = o.err;
    const Json j = o.report ? o.report->to_json() : Json(nullptr);
    for (const auto& c : m.checks) {
        Json got = nullptr;
        if (o.report) {
            try {
                const Json::json_pointer p(c.path);
                if (j.contains(p)) got = j.at(p);
            } catch (const Json::exception& err) {
                r.error = std::string("bad path: ") + err.what();
            }
        }
        if (got != c.value) r.passed = false;
        r.actual.emplace_back(&c, got);
    }
    return r;
}

inline ReportEnvelope cmd_verify_paper(const VerifyOptions& o) {
    const std::string path = o.manifest.empty() ? default_manifest_path() : o.manifest;
    const RegressionManifest m = RegressionManifest::load(path);
    std::vector<const ManifestEntry*> chosen;
    for (const auto& x : m.entries)
        if (x.matches(o.filter)) chosen.push_back(&x);
    if (chosen.empty()) throw UsageError("no manifest entry matches '" + o.filter + "'");

    std::vector<std::future<EntryResult>> jobs;
    for (const auto* x : chosen) jobs.push_back(std::async(std::launch::async, run_entry, std::cref(*x)));

    ReportEnvelope e;
    e.command = "verify-paper";
    e.inputs = {{"filter", o.filter}, {"entries_in_manifest", m.entries.size()}};
    Json rows = Json::array();
    std::size_t passed = 0;
    for (auto& job : jobs) {
        const EntryResult r = job.get();
        Json checks = Json::array();
        for (const auto& [c, got] : r.actual)
            checks.push_back({{"path", c->path}, {"expected", c->value}, {"actual", got}, {"match", got == c->value}});
        rows.push_back({{"id", r.entry->id},
                        {"command", r.entry->command},
                        {"passed", r.passed},
                        {"exit_code", r.exit_code},
                        {"checks", checks},
                        {"error", r.error},
                        {"citation", r.entry->citation}});
        if (r.passed) ++passed;
        e.cite(r.entry->citation);
    }
    e.results = {{"entries", rows}, {"total", chosen.size()}, {"passed", passed}, {"failed", chosen.size() - passed}};
    return e;
}

inline std::string render_verify_text(const ReportEnvelope& e) {
    std::ostringstream os;
    for (const auto& row : e.results.at("entries")) {
        const bool ok = row.at("passed").get<bool>();
        os << (ok ? "PASS  " : "FAIL  ") << row.at("id").get<std::string>() << "  "
           << row.at("citation").get<std::string>() << "\n";
        if (ok) continue;
        for (const auto& c : row.at("checks"))
            if (!c.at("match").get<bool>())
                os << "      " << c.at("path").get<std::string>() << ": expected " << c.at("expected").dump()
                   << ", got " << c.at("actual").dump() << "\n";
        if (!row.at("error").get<std::string>().empty())
            os << "      error: " << row.at("error").get<std::string>() << "\n";
    }
    os << e.results.at("passed").get<std::size_t>() << "/" << e.results.at("total").get<std::size_t>()
       << " entries passed\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// dispatch

inline Outcome run(const std::vector<std::string>& args) {
    CLI::App app{"Rarita-Schwinger index and spin-3/2 representation calculator", "rslab"};
    app.require_subcommand(1);
    bool json = false;

    CIOptions ci;
    auto* ci_cmd = app.add_subcommand("ci", "complete intersection X_n(d_1,...,d_r): invariants, Hodge table, kernel");
    ci_cmd->add_option("-n", ci.n, "complex dimension")->required();
    ci_cmd->add_option("-d,--degrees", ci.degrees, "degrees, comma separated")->required()->delimiter(',');
    ci_cmd->add_option("--method", ci.method, "signature route")->check(CLI::IsMember({"chern", "series", "both"}));
    ci_cmd->add_flag("--kernel", ci.kernel_only, "brief report: classification, invariants and kernel (no Chern, Pontryagin or Hodge tables)");

    HolonomyOptions ho;
    int param = 0;
    std::int64_t b2 = 0, b3 = 0, b4m = 0;
    auto* ho_cmd = app.add_subcommand("holonomy", "spin-3/2 decomposition and kernel formulas for a holonomy group");
    ho_cmd->add_option("group", ho.group, "su, sp, qk, g2, spin7, so, u or catalog")->required();
    auto* param_opt = ho_cmd->add_option("param", param, "n for SU(n), Sp(n), SO(n), U(n); m for Sp(1)Sp(m)");
    auto* b2_opt = ho_cmd->add_option("--b2", b2, "second Betti number");
    auto* b3_opt = ho_cmd->add_option("--b3", b3, "third Betti number");
    auto* b4_opt = ho_cmd->add_option("--b4minus", b4m, "anti-self-dual fourth Betti number");
    ho_cmd->add_option("--hodge", ho.hodge, "h^{1,1}..h^{1,n-1} (su) or h^{1,1}..h^{n,1} (sp)")->delimiter(',');

    RepOptions ro;
    auto* rep_cmd = app.add_subcommand("rep", "dimension, Casimir, weights and tensor products of an irreducible");
    rep_cmd->add_option("root", ro.root, "root system, e.g. B3, G2, C1xC2")->required();
    rep_cmd->add_option("-w,--weight", ro.weight, "highest weight in Dynkin labels")->delimiter(',');
    rep_cmd->add_option("-e,--euclidean", ro.euclidean, "highest weight in Euclidean coordinates")->delimiter(',');
    rep_cmd->add_option("-t,--tensor", ro.tensor, "second factor for a tensor product")->delimiter(',');
    rep_cmd->add_flag("--weights", ro.list_weights, "list weight multiplicities");

    SphereOptions so;
    auto* sp_cmd = app.add_subcommand("sphere", "Casimir of Sigma_{3/2} on S^n against the positivity threshold");
    sp_cmd->add_option("n", so.n, "sphere dimension");
    sp_cmd->add_option("--upto", so.upto, "check every n from 3 to this bound");

    ProductOptions po;
    auto* pr_cmd = app.add_subcommand("product", "index or parallel fields on a product of two factors");
    pr_cmd->add_option("--ci", po.ci, "complete intersection factor n:d1,d2");
    pr_cmd->add_option("--holonomy", po.holonomy, "holonomy factor such as sp:2 or g2");

    int id_dim = 0;
    auto* id_cmd = app.add_subcommand("identities", "index identities as Pontryagin-number functionals");
    id_cmd->add_option("--dim", id_dim, "real dimension 4, 8 or 12")->required();

    VerifyOptions vo;
    auto* vp_cmd = app.add_subcommand("verify-paper", "run the regression manifest");
    vp_cmd->add_option("--filter", vo.filter, "only entries whose id, citation or tag contains this");
    vp_cmd->add_option("--manifest", vo.manifest, "manifest path (default: $RSLAB_MANIFEST or the bundled file)");

    for (auto* sub : {ci_cmd, ho_cmd, rep_cmd, sp_cmd, pr_cmd, id_cmd, vp_cmd})
        sub->add_flag("--json", json, "print the JSON report envelope");

    Outcome out;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& err) {
        std::ostringstream o, e;
        const int code = app.exit(err, o, e);
        out.out = o.str();
        out.err = e.str();
        out.exit_code = code == 0 ? 0 : 2;
        return out;
    }

    if (param_opt->count() > 0) ho.param = param;
    if (b2_opt->count() > 0) ho.b2 = b2;
    if (b3_opt->count() > 0) ho.b3 = b3;
    if (b4_opt->count() > 0) ho.b4minus = b4m;

    try {
        ReportEnvelope e;
        if (ci_cmd->parsed()) e = cmd_ci(ci);
        else if (ho_cmd->parsed()) e = cmd_holonomy(ho);
        else if (rep_cmd->parsed()) e = cmd_rep(ro);
        else if (sp_cmd->parsed()) {
            if (so.n == 0 && so.upto == 0) throw UsageError("sphere needs n or --upto");
            e = cmd_sphere(so);
        } else if (pr_cmd->parsed()) e = cmd_product(po);
        else if (id_cmd->parsed()) e = cmd_identities(id_dim);
        else e = cmd_verify_paper(vo);

        if (e.command == "verify-paper") out.exit_code = e.results.at("failed").get<std::size_t>() == 0 ? 0 : 1;
        if (e.command == "identities") out.exit_code = e.results.at("all_hold").get<bool>() ? 0 : 1;
        if (json) out.out = e.dump();
        else if (e.command == "verify-paper") out.out = render_verify_text(e);
        else out.out = render_text(e);
        out.report = std::move(e);
    } catch (const UsageError& err) {
        out.exit_code = 2;
        out.err = std::string("usage error: ") + err.what() + "\n";
    } catch (const DomainError& err) {
        out.exit_code = 2;
        out.err = std::string("usage error: ") + err.what() + "\n";
    } catch (const NotApplicable& err) {
        out.exit_code = 2;
        out.err = std::string("not applicable: ") + err.what() + "\n";
    } catch (const std::exception& err) {
        out.exit_code = 1;
        out.err = std::string("error: ") + err.what() + "\n";
    }
    return out;
}

}  // namespace rslab::cli
