#pragma once

/**
 * @file representation.hpp
 * @brief Irreducible representations by highest weight: Weyl dimension,
 *        Casimir eigenvalue, Freudenthal weight multiplicities, Klimyk
 *        tensor products, and formal sums of irreducibles.
 *
 * The Casimir value <lambda + 2 delta, lambda> uses the Euclidean product of
 * the realization in root_system.hpp (the "Freudenthal formula" of the
 * symmetric-space literature). The multiplicity recursion is Freudenthal's
 * in the usual sense.
 */

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rslab/errors.hpp"
#include "rslab/rational.hpp"
#include "rslab/root_system.hpp"

namespace rslab {

using WeightSystem = std::map<Labels, std::int64_t>;

inline void require_dominant(const RootSystem& r, const Labels& l) {
    if (!r.is_dominant(l)) throw DomainError("weight is not dominant for " + r.name());
}

/// prod over positive roots of <lambda + delta, alpha> / <delta, alpha>.
inline std::int64_t weyl_dim(const RootSystem& r, const Labels& lambda) {
    require_dominant(r, lambda);
    const RationalVector ld = [&] {
        RationalVector v = r.to_euclidean(lambda);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += r.delta()[i];
        return v;
    }();
    BigRational d(1);
    for (const auto& a : r.positive_roots()) d *= RootSystem::inner(ld, a) / RootSystem::inner(r.delta(), a);
    if (!d.is_integer()) throw ConsistencyError("Weyl dimension is not an integer: " + d.str());
    return d.to_int64();
}

/// <lambda + 2 delta, lambda>.
inline BigRational casimir(const RootSystem& r, const Labels& lambda) {
    require_dominant(r, lambda);
    const RationalVector l = r.to_euclidean(lambda);
    RationalVector l2d = l;
    for (std::size_t i = 0; i < l.size(); ++i) l2d[i] += BigRational(2) * r.delta()[i];
    return RootSystem::inner(l2d, l);
}

/// Casimir of a highest weight given in Euclidean coordinates (e.g. (3/2, 1/2, ..., 1/2)).
inline BigRational casimir_euclidean(const RootSystem& r, const RationalVector& lambda) {
    return casimir(r, r.to_dynkin(lambda));
}

/**
 * All weights of the irreducible representation with highest weight lambda,
 * with multiplicities, by Freudenthal's recursion. Weights are processed by
 * depth below lambda; inner products are carried as integers after scaling
 * by a common denominator.
 */
inline WeightSystem weight_multiplicities(const RootSystem& r, const Labels& lambda) {
    require_dominant(r, lambda);
    const auto& simple = r.simple_indices();
    const std::size_t s = simple.size();
    const auto& pos = r.positive_root_coordinates();

    const RationalVector lam = r.to_euclidean(lambda);
    RationalVector lam_d = lam;
    for (std::size_t i = 0; i < lam.size(); ++i) lam_d[i] += r.delta()[i];

    // Rational inner products, then a common denominator.
    std::vector<std::vector<BigRational>> g(s, std::vector<BigRational>(s));
    std::vector<BigRational> ld_a(s), l_a(s);
    for (std::size_t i = 0; i < s; ++i) {
        const auto& ai = r.simple_root(simple[i]);
        for (std::size_t j = 0; j < s; ++j) g[i][j] = RootSystem::inner(ai, r.simple_root(simple[j]));
        ld_a[i] = RootSystem::inner(lam_d, ai);
        l_a[i] = RootSystem::inner(lam, ai);
    }
    BigInt den = 1;
    auto absorb = [&](const BigRational& x) { den = boost::multiprecision::lcm(den, x.denominator()); };
    for (std::size_t i = 0; i < s; ++i) {
        absorb(ld_a[i]);
        absorb(l_a[i]);
        for (std::size_t j = 0; j < s; ++j) absorb(g[i][j]);
    }
    const BigRational scale(den);
    auto scaled = [&](const BigRational& x) { return (x * scale).to_int64(); };
    std::vector<std::vector<std::int64_t>> G(s, std::vector<std::int64_t>(s));
    std::vector<std::int64_t> LD(s), L(s);
    for (std::size_t i = 0; i < s; ++i) {
        LD[i] = scaled(ld_a[i]);
        L[i] = scaled(l_a[i]);
        for (std::size_t j = 0; j < s; ++j) G[i][j] = scaled(g[i][j]);
    }

    using Depth = std::vector<int>;  // mu = lambda - sum k_i alpha_i
    // |lambda+delta|^2 - |mu+delta|^2 = 2 sum k_i (lambda+delta, alpha_i) - sum k_i k_j (alpha_i, alpha_j)
    auto norm_gap = [&](const Depth& k) {
        std::int64_t v = 0;
        for (std::size_t i = 0; i < s; ++i) {
            if (!k[i]) continue;
            v += 2 * k[i] * LD[i];
            for (std::size_t j = 0; j < s; ++j) v -= static_cast<std::int64_t>(k[i]) * k[j] * G[i][j];
        }
        return v;
    };
    // (mu, alpha) for mu at depth k and alpha with simple coordinates c.
    auto pair = [&](const Depth& k, const std::vector<int>& c) {
        std::int64_t v = 0;
        for (std::size_t j = 0; j < s; ++j) {
            if (!c[j]) continue;
            std::int64_t t = L[j];
            for (std::size_t i = 0; i < s; ++i) t -= static_cast<std::int64_t>(k[i]) * G[i][j];
            v += c[j] * t;
        }
        return v;
    };

    std::map<Depth, std::int64_t> mult;
    std::vector<Depth> layer{Depth(s, 0)};
    mult[layer[0]] = 1;
    while (!layer.empty()) {
        std::map<Depth, bool> candidates;
        for (const auto& k : layer)
            for (std::size_t i = 0; i < s; ++i) {
                Depth n = k;
                ++n[i];
                candidates[n] = true;
            }
        std::vector<Depth> next;
        for (const auto& [k, unused] : candidates) {
            const std::int64_t gap = norm_gap(k);
            if (gap == 0) continue;
            std::int64_t num = 0;
            for (const auto& c : pos) {
                Depth up = k;
                for (int step = 1;; ++step) {
                    bool valid = true;
                    for (std::size_t j = 0; j < s; ++j) {
                        up[j] -= c[j];
                        if (up[j] < 0) valid = false;
                    }
                    if (!valid) break;
                    auto it = mult.find(up);
                    if (it != mult.end()) num += it->second * pair(up, c);
                }
            }
            num *= 2;
            if (num == 0) continue;
            if (num % gap != 0) throw ConsistencyError("Freudenthal recursion produced a non-integer multiplicity");
            mult[k] = num / gap;
            next.push_back(k);
        }
        layer = std::move(next);
    }

    WeightSystem out;
    for (const auto& [k, m] : mult) {
        Labels w = lambda;
        for (std::size_t i = 0; i < s; ++i) {
            if (!k[i]) continue;
            const Labels& a = r.simple_root_labels(simple[i]);
            for (std::size_t x = 0; x < w.size(); ++x) w[x] -= k[i] * a[x];
        }
        out[w] += m;
    }
    return out;
}

/// Formal integer combination of irreducibles, keyed by highest weight.
class RepSum {
public:
    RepSum() = default;
    explicit RepSum(std::map<Labels, std::int64_t> terms) {
        for (const auto& [l, m] : terms) add(l, m);
    }
    static RepSum irreducible(const Labels& l, std::int64_t m = 1) {
        RepSum s;
        s.add(l, m);
        return s;
    }

    void add(const Labels& l, std::int64_t m) {
        if (m == 0) return;
        auto [it, inserted] = terms_.try_emplace(l, m);
        if (!inserted) {
            it->second += m;
            if (it->second == 0) terms_.erase(it);
        }
    }

    [[nodiscard]] const std::map<Labels, std::int64_t>& terms() const { return terms_; }
    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] std::int64_t multiplicity(const Labels& l) const {
        auto it = terms_.find(l);
        return it == terms_.end() ? 0 : it->second;
    }
    [[nodiscard]] bool is_virtual() const {
        for (const auto& [l, m] : terms_)
            if (m < 0) return true;
        return false;
    }

    [[nodiscard]] std::int64_t dimension(const RootSystem& r) const {
        std::int64_t d = 0;
        for (const auto& [l, m] : terms_) d += m * weyl_dim(r, l);
        return d;
    }

    RepSum& operator+=(const RepSum& o) {
        for (const auto& [l, m] : o.terms_) add(l, m);
        return *this;
    }
    friend RepSum operator+(RepSum a, const RepSum& b) { return a += b; }
    friend RepSum operator*(std::int64_t k, RepSum a) {
        if (k == 0) return RepSum();
        for (auto& [l, m] : a.terms_) m *= k;
        return a;
    }
    friend bool operator==(const RepSum&, const RepSum&) = default;

    /// this - o; in strict mode a negative multiplicity throws ModelDataError.
    [[nodiscard]] RepSum minus(const RepSum& o, bool allow_virtual = false) const {
        RepSum r = *this;
        for (const auto& [l, m] : o.terms_) r.add(l, -m);
        if (!allow_virtual && r.is_virtual())
            throw ModelDataError("subtraction leaves a negative multiplicity");
        return r;
    }

    [[nodiscard]] std::string str(const RootSystem& r) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [l, m] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (m != 1) os << m << "*";
            os << "V(";
            for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
            os << ")[" << weyl_dim(r, l) << "]";
        }
        return os.str();
    }

private:
    std::map<Labels, std::int64_t> terms_;
};

/**
 * V(lambda) (x) V(mu) by Klimyk: for each weight nu of the smaller factor,
 * reflect lambda + nu + delta into the dominant chamber, counting signs;
 * weights on a wall contribute nothing.
 */
inline RepSum tensor_decompose(const RootSystem& r, const Labels& lambda, const Labels& mu) {
    require_dominant(r, lambda);
    require_dominant(r, mu);
    const std::int64_t dl = weyl_dim(r, lambda), dm = weyl_dim(r, mu);
    const bool swap = dl < dm || (dl == dm && lambda < mu);
    const Labels& big = swap ? mu : lambda;
    const Labels& small = swap ? lambda : mu;
    const Labels delta = r.delta_labels();
    const auto& simple = r.simple_indices();

    RepSum out;
    for (const auto& [nu, m] : weight_multiplicities(r, small)) {
        Labels v = big;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += nu[i] + delta[i];
        int sign = 1;
        bool wall = false;
        while (true) {
            int bad = -1;
            for (int i : simple) {
                if (v[static_cast<std::size_t>(i)] == 0) {
                    wall = true;
                    break;
                }
                if (v[static_cast<std::size_t>(i)] < 0 && bad < 0) bad = i;
            }
            if (wall || bad < 0) break;
            const int c = v[static_cast<std::size_t>(bad)];
            const Labels& a = r.simple_root_labels(bad);
            for (std::size_t x = 0; x < v.size(); ++x) v[x] -= c * a[x];
            sign = -sign;
        }
        if (wall) continue;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= delta[i];
        out.add(v, sign * m);
    }
    if (out.is_virtual()) throw ConsistencyError("Klimyk produced a negative multiplicity");
    return out;
}

inline RepSum tensor_decompose(const RootSystem& r, const RepSum& a, const RepSum& b) {
    RepSum out;
    for (const auto& [la, ma] : a.terms())
        for (const auto& [lb, mb] : b.terms()) out += (ma * mb) * tensor_decompose(r, la, lb);
    return out;
}

/// Formal character: sum of multiplicity-weighted weight systems.
inline WeightSystem character(const RootSystem& r, const RepSum& s) {
    WeightSystem w;
    for (const auto& [l, m] : s.terms())
        for (const auto& [wt, k] : weight_multiplicities(r, l)) w[wt] += m * k;
    for (auto it = w.begin(); it != w.end();) it = it->second == 0 ? w.erase(it) : std::next(it);
    return w;
}

/**
 * Splits a character (a weight multiset) into irreducibles by repeatedly
 * removing the irreducible whose highest weight is a maximal dominant weight.
 * Throws ModelDataError if the multiset is not a genuine character.
 */
inline RepSum decompose_character(const RootSystem& r, WeightSystem w) {
    RepSum out;
    for (auto it = w.begin(); it != w.end();) it = it->second == 0 ? w.erase(it) : std::next(it);
    while (!w.empty()) {
        const Labels* best = nullptr;
        BigRational best_height;
        for (const auto& [l, m] : w) {
            if (!r.is_dominant(l)) continue;
            const BigRational h = RootSystem::inner(r.to_euclidean(l), r.delta());
            if (!best || h > best_height || (h == best_height && l > *best)) {
                best = &l;
                best_height = h;
            }
        }
        if (!best) throw ModelDataError("character has no dominant weight left");
        const Labels top = *best;
        const std::int64_t m = w[top];
        if (m < 0) throw ModelDataError("character has a negative multiplicity");
        out.add(top, m);
        for (const auto& [wt, k] : weight_multiplicities(r, top)) {
            auto& slot = w[wt];
            slot -= m * k;
            if (slot == 0) w.erase(wt);
        }
    }
    return out;
}

/// Sum over weights of mult * <w, point>^k, k = 0..order; point pairs with labels.
inline std::vector<BigRational> character_moments(const WeightSystem& w, const std::vector<BigRational>& point,
                                                  int order = 4) {
    std::vector<BigRational> mom(static_cast<std::size_t>(order + 1), BigRational(0));
    for (const auto& [l, m] : w) {
        if (l.size() != point.size()) throw DomainError("evaluation point has wrong rank");
        BigRational x(0);
        for (std::size_t i = 0; i < l.size(); ++i) x += BigRational(l[i]) * point[i];
        BigRational p(m);
        for (int k = 0; k <= order; ++k) {
            mom[static_cast<std::size_t>(k)] += p;
            p *= x;
        }
    }
    return mom;
}

inline std::vector<BigRational> character_oracle(const RootSystem& r, const RepSum& s,
                                                 const std::vector<BigRational>& point, int order = 4) {
    return character_moments(character(r, s), point, order);
}

/// Moments of a tensor product from the factors' moments (binomial convolution).
inline std::vector<BigRational> product_moments(const std::vector<BigRational>& a, const std::vector<BigRational>& b) {
    if (a.size() != b.size()) throw StructuralError("moment vectors of different order");
    std::vector<BigRational> out(a.size(), BigRational(0));
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t j = 0; j <= k; ++j)
            out[k] += binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(j)) * a[j] * b[k - j];
    return out;
}

}  // namespace rslab
