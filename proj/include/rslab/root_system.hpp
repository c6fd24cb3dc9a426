#pragma once

/**
 * @file root_system.hpp
 * @brief Root systems of types A, B, C, D, G2 and their products, with an
 *        optional one-dimensional torus factor U1, realized in Euclidean space.
 *
 * Realizations:
 *   A_{n-1}  trace-zero hyperplane of R^n, alpha_i = e_i - e_{i+1}
 *   B_m      R^m, alpha_i = e_i - e_{i+1}, alpha_m = e_m
 *   C_m      R^m, alpha_i = e_i - e_{i+1}, alpha_m = 2 e_m
 *   D_m      R^m, alpha_i = e_i - e_{i+1}, alpha_m = e_{m-1} + e_m
 *   G2       trace-zero plane of R^3, alpha_1 = e_1 - e_2 (short),
 *            alpha_2 = -2 e_1 + e_2 + e_3 (long)
 *   U1       R^1, no roots; its single label is twice the coordinate
 *
 * Weights are addressed by integer labels, one per fundamental weight
 * (Dynkin labels for the semisimple part, then the U1 label). A product
 * concatenates both the coordinates and the labels of its factors.
 */

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rslab/errors.hpp"
#include "rslab/exact_linear.hpp"
#include "rslab/rational.hpp"

namespace rslab {

enum class SimpleType { A, B, C, D, G2, U1 };

struct RootComponent {
    SimpleType type;
    int rank;  ///< 1 for U1 and 2 for G2

    [[nodiscard]] int coordinates() const { return type == SimpleType::A ? rank + 1 : (type == SimpleType::G2 ? 3 : rank); }
    [[nodiscard]] std::string name() const {
        switch (type) {
            case SimpleType::A: return "A" + std::to_string(rank);
            case SimpleType::B: return "B" + std::to_string(rank);
            case SimpleType::C: return "C" + std::to_string(rank);
            case SimpleType::D: return "D" + std::to_string(rank);
            case SimpleType::G2: return "G2";
            case SimpleType::U1: return "U1";
        }
        return "?";
    }
};

/// Integer labels on the fundamental weights.
using Labels = std::vector<int>;

class RootSystem {
public:
    explicit RootSystem(std::vector<RootComponent> components) : components_(std::move(components)) {
        if (components_.empty()) throw DomainError("root system needs at least one component");
        for (const auto& c : components_) validate(c);
        build();
    }

    /// "B3", "C1xC2", "U1xA1xA1", "G2".
    static RootSystem parse(const std::string& text) {
        std::vector<RootComponent> comps;
        if (text.empty() || text.back() == 'x') throw DomainError("bad root system '" + text + "'");
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, 'x')) {
            if (tok.empty()) throw DomainError("bad root system '" + text + "'");
            const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
            const std::string digits = tok.substr(1);
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
                throw DomainError("bad root system component '" + tok + "'");
            const int r = std::stoi(digits);
            if (t == 'G' && r == 2) comps.push_back({SimpleType::G2, 2});
            else if (t == 'U' && r == 1) comps.push_back({SimpleType::U1, 1});
            else if (t == 'A') comps.push_back({SimpleType::A, r});
            else if (t == 'B') comps.push_back({SimpleType::B, r});
            else if (t == 'C') comps.push_back({SimpleType::C, r});
            else if (t == 'D') comps.push_back({SimpleType::D, r});
            else throw DomainError("unknown root system component '" + tok + "'");
        }
        return RootSystem(std::move(comps));
    }

    [[nodiscard]] const std::vector<RootComponent>& components() const { return components_; }
    [[nodiscard]] std::string name() const {
        std::string s;
        for (const auto& c : components_) s += (s.empty() ? "" : "x") + c.name();
        return s;
    }

    /// Number of labels (semisimple rank plus number of U1 factors).
    [[nodiscard]] int rank() const { return static_cast<int>(fundamental_.size()); }
    [[nodiscard]] int euclidean_dimension() const { return dim_; }

    [[nodiscard]] bool is_torus_label(int i) const { return torus_[static_cast<std::size_t>(i)]; }
    /// Indices of labels carrying a simple root.
    [[nodiscard]] const std::vector<int>& simple_indices() const { return simple_idx_; }

    [[nodiscard]] const RationalVector& simple_root(int label) const {
        if (is_torus_label(label)) throw DomainError("torus label has no simple root");
        return simple_[static_cast<std::size_t>(label)];
    }
    /// Labels of the simple root attached to label i.
    [[nodiscard]] const Labels& simple_root_labels(int label) const { return alpha_labels_[static_cast<std::size_t>(label)]; }
    [[nodiscard]] const RationalVector& fundamental_weight(int label) const { return fundamental_[static_cast<std::size_t>(label)]; }
    [[nodiscard]] const std::vector<RationalVector>& positive_roots() const { return positive_; }
    /// Positive roots in the simple-root basis, indexed like simple_indices().
    [[nodiscard]] const std::vector<std::vector<int>>& positive_root_coordinates() const {
        std::call_once(coords_->once, [this] { coords_->value = compute_positive_coordinates(); });
        return coords_->value;
    }
    [[nodiscard]] const RationalVector& delta() const { return delta_; }
    [[nodiscard]] Labels delta_labels() const {
        Labels l(static_cast<std::size_t>(rank()), 0);
        for (int i : simple_idx_) l[static_cast<std::size_t>(i)] = 1;
        return l;
    }

    /// Cartan integers <alpha_i, alpha_j^vee> over simple indices.
    [[nodiscard]] std::vector<std::vector<int>> cartan_matrix() const {
        std::vector<std::vector<int>> c;
        for (int i : simple_idx_) {
            std::vector<int> row;
            for (int j : simple_idx_) row.push_back(alpha_labels_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            c.push_back(row);
        }
        return c;
    }

    [[nodiscard]] static BigRational inner(const RationalVector& a, const RationalVector& b) {
        if (a.size() != b.size()) throw StructuralError("inner product of vectors of different length");
        BigRational s(0);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
        return s;
    }

    [[nodiscard]] RationalVector to_euclidean(const Labels& l) const {
        check_labels(l);
        RationalVector v(static_cast<std::size_t>(dim_), BigRational(0));
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (l[i] == 0) continue;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!fundamental_[i][k].is_zero()) v[k] += BigRational(l[i]) * fundamental_[i][k];
        }
        return v;
    }

    /// Labels of a Euclidean weight; throws DomainError if it is not integral.
    [[nodiscard]] Labels to_dynkin(const RationalVector& v) const {
        if (static_cast<int>(v.size()) != dim_) throw DomainError("weight has wrong number of coordinates");
        Labels l(static_cast<std::size_t>(rank()), 0);
        for (int i = 0; i < rank(); ++i) {
            BigRational x;
            if (torus_[static_cast<std::size_t>(i)]) {
                x = BigRational(2) * v[static_cast<std::size_t>(torus_coord_[static_cast<std::size_t>(i)])];
            } else {
                const auto& a = simple_[static_cast<std::size_t>(i)];
                x = BigRational(2) * inner(v, a) / inner(a, a);
            }
            if (!x.is_integer()) throw DomainError("weight is not integral: label " + std::to_string(i) + " = " + x.str());
            l[static_cast<std::size_t>(i)] = static_cast<int>(x.to_int64());
        }
        if (to_euclidean(l) != project(v)) throw DomainError("weight does not lie in the weight lattice span");
        return l;
    }

    [[nodiscard]] bool is_dominant(const Labels& l) const {
        check_labels(l);
        for (int i : simple_idx_)
            if (l[static_cast<std::size_t>(i)] < 0) return false;
        return true;
    }

    void check_labels(const Labels& l) const {
        if (static_cast<int>(l.size()) != rank())
            throw DomainError("weight for " + name() + " needs " + std::to_string(rank()) + " labels, got " +
                              std::to_string(l.size()));
    }

private:
    static void validate(const RootComponent& c) {
        const bool ok = (c.type == SimpleType::A && c.rank >= 1) || (c.type == SimpleType::B && c.rank >= 1) ||
                        (c.type == SimpleType::C && c.rank >= 1) || (c.type == SimpleType::D && c.rank >= 2) ||
                        (c.type == SimpleType::G2 && c.rank == 2) || (c.type == SimpleType::U1 && c.rank == 1);
        if (!ok) throw DomainError("unsupported root system component " + c.name());
    }

    /// Drops the component of v orthogonal to the span of the fundamental weights (the trace for A, G2).
    [[nodiscard]] RationalVector project(RationalVector v) const {
        int off = 0;
        for (const auto& c : components_) {
            const int k = c.coordinates();
            if (c.type == SimpleType::A || c.type == SimpleType::G2) {
                BigRational mean(0);
                for (int i = 0; i < k; ++i) mean += v[static_cast<std::size_t>(off + i)];
                mean /= BigRational(k);
                for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(off + i)] -= mean;
            }
            off += k;
        }
        return v;
    }

    /// Simple roots, fundamental weights and positive roots of one simple factor, in its own coordinates.
    struct LocalData {
        std::vector<RationalVector> simple, fundamental, positive;
    };

    static LocalData local_data(const RootComponent& c) {
        const int r = c.rank;
        const int k = c.coordinates();
        auto vec = [k](std::initializer_list<std::pair<int, BigRational>> entries) {
            RationalVector v(static_cast<std::size_t>(k), BigRational(0));
            for (const auto& [i, x] : entries) v[static_cast<std::size_t>(i)] += x;
            return v;
        };
        auto prefix = [k](int i, const BigRational& x) {  // x in the first i coordinates
            RationalVector v(static_cast<std::size_t>(k), BigRational(0));
            for (int j = 0; j < i; ++j) v[static_cast<std::size_t>(j)] = x;
            return v;
        };
        LocalData d;
        switch (c.type) {
            case SimpleType::A:
                for (int i = 0; i < r; ++i) d.simple.push_back(vec({{i, 1}, {i + 1, -1}}));
                for (int i = 1; i <= r; ++i) {
                    RationalVector w = prefix(i, 1);
                    for (auto& x : w) x -= BigRational(i, r + 1);
                    d.fundamental.push_back(w);
                }
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j) d.positive.push_back(vec({{i, 1}, {j, -1}}));
                break;
            case SimpleType::B:
            case SimpleType::C:
            case SimpleType::D: {
                for (int i = 0; i + 1 < r; ++i) d.simple.push_back(vec({{i, 1}, {i + 1, -1}}));
                if (c.type == SimpleType::B) d.simple.push_back(vec({{r - 1, 1}}));
                if (c.type == SimpleType::C) d.simple.push_back(vec({{r - 1, 2}}));
                if (c.type == SimpleType::D) d.simple.push_back(vec({{r - 2, 1}, {r - 1, 1}}));
                const int plain = c.type == SimpleType::B ? r - 1 : c.type == SimpleType::C ? r : r - 2;
                for (int i = 1; i <= plain; ++i) d.fundamental.push_back(prefix(i, 1));
                if (c.type == SimpleType::D) {
                    RationalVector w = prefix(r, BigRational(1, 2));
                    w.back() = BigRational(-1, 2);
                    d.fundamental.push_back(w);
                }
                if (c.type != SimpleType::C) d.fundamental.push_back(prefix(r, BigRational(1, 2)));
                for (int i = 0; i < r; ++i)
                    for (int j = i + 1; j < r; ++j) {
                        d.positive.push_back(vec({{i, 1}, {j, -1}}));
                        d.positive.push_back(vec({{i, 1}, {j, 1}}));
                    }
                for (int i = 0; i < r; ++i) {
                    if (c.type == SimpleType::B) d.positive.push_back(vec({{i, 1}}));
                    if (c.type == SimpleType::C) d.positive.push_back(vec({{i, 2}}));
                }
                break;
            }
            case SimpleType::G2: {
                d.simple.push_back(vec({{0, 1}, {1, -1}}));
                d.simple.push_back(vec({{0, -2}, {1, 1}, {2, 1}}));
                d.fundamental.push_back(vec({{1, -1}, {2, 1}}));           // short root: 7-dimensional
                d.fundamental.push_back(vec({{0, -1}, {1, -1}, {2, 2}}));  // long root: adjoint
                // Closure under simple reflections; G2 is small.
                std::set<RationalVector> roots(d.simple.begin(), d.simple.end());
                std::vector<RationalVector> frontier = d.simple;
                while (!frontier.empty()) {
                    std::vector<RationalVector> next;
                    for (const auto& v : frontier)
                        for (const auto& a : d.simple) {
                            const BigRational t = BigRational(2) * inner(v, a) / inner(a, a);
                            RationalVector w = v;
                            for (std::size_t x = 0; x < w.size(); ++x) w[x] -= t * a[x];
                            if (roots.insert(w).second) next.push_back(w);
                        }
                    frontier = std::move(next);
                }
                RationalVector rho = d.fundamental[0];
                for (std::size_t x = 0; x < rho.size(); ++x) rho[x] += d.fundamental[1][x];
                for (const auto& v : roots)
                    if (inner(v, rho).sign() > 0) d.positive.push_back(v);
                break;
            }
            case SimpleType::U1: break;
        }
        // Fundamental weights must be dual to the simple coroots.
        for (std::size_t i = 0; i < d.fundamental.size(); ++i)
            for (std::size_t j = 0; j < d.simple.size(); ++j) {
                const auto& a = d.simple[j];
                const BigRational x = BigRational(2) * inner(d.fundamental[i], a) / inner(a, a);
                if (x != BigRational(i == j ? 1 : 0)) throw StructuralError("fundamental weights of " + c.name() + " are not dual");
            }
        return d;
    }

    void build() {
        dim_ = 0;
        for (const auto& c : components_) dim_ += c.coordinates();
        auto embed = [&](const RationalVector& v, int off) {
            RationalVector w(static_cast<std::size_t>(dim_), BigRational(0));
            for (std::size_t i = 0; i < v.size(); ++i) w[static_cast<std::size_t>(off) + i] = v[i];
            return w;
        };

        std::vector<std::vector<RationalVector>> local_positive;
        int off = 0;
        for (const auto& c : components_) {
            if (c.type == SimpleType::U1) {
                torus_.push_back(true);
                torus_coord_.push_back(off);
                simple_.emplace_back();
                RationalVector w(static_cast<std::size_t>(dim_), BigRational(0));
                w[static_cast<std::size_t>(off)] = BigRational(1, 2);
                fundamental_.push_back(w);
                off += 1;
                continue;
            }
            const LocalData d = local_data(c);
            std::vector<RationalVector> pos;
            for (const auto& v : d.positive) pos.push_back(embed(v, off));
            local_positive.push_back(std::move(pos));
            for (int i = 0; i < c.rank; ++i) {
                simple_idx_.push_back(static_cast<int>(fundamental_.size()));
                torus_.push_back(false);
                torus_coord_.push_back(-1);
                simple_.push_back(embed(d.simple[static_cast<std::size_t>(i)], off));
                fundamental_.push_back(embed(d.fundamental[static_cast<std::size_t>(i)], off));
            }
            off += c.coordinates();
        }

        const int n = rank();
        alpha_labels_.assign(static_cast<std::size_t>(n), Labels(static_cast<std::size_t>(n), 0));
        for (int i : simple_idx_) {
            for (int j : simple_idx_) {
                const auto& a = simple_[static_cast<std::size_t>(i)];
                const auto& b = simple_[static_cast<std::size_t>(j)];
                const BigRational x = BigRational(2) * inner(a, b) / inner(b, b);
                alpha_labels_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(x.to_int64());
            }
        }

        delta_.assign(static_cast<std::size_t>(dim_), BigRational(0));
        for (int i : simple_idx_)
            for (std::size_t x = 0; x < delta_.size(); ++x) delta_[x] += fundamental_[static_cast<std::size_t>(i)][x];

        for (auto& roots : local_positive)
            for (auto& v : roots) positive_.push_back(std::move(v));
    }

    /// Simple-root coordinates of each positive root: c_i = 2 <v, omega_i> / <alpha_i, alpha_i>.
    [[nodiscard]] std::vector<std::vector<int>> compute_positive_coordinates() const {
        std::vector<BigRational> half_norm;
        for (int i : simple_idx_) {
            const auto& a = simple_[static_cast<std::size_t>(i)];
            half_norm.push_back(inner(a, a) / BigRational(2));
        }
        std::vector<std::vector<int>> out;
        for (const auto& v : positive_) {
            std::vector<std::size_t> nz;
            for (std::size_t x = 0; x < v.size(); ++x)
                if (!v[x].is_zero()) nz.push_back(x);
            std::vector<int> coords;
            for (std::size_t k = 0; k < simple_idx_.size(); ++k) {
                const auto& w = fundamental_[static_cast<std::size_t>(simple_idx_[k])];
                BigRational c(0);
                for (std::size_t x : nz)
                    if (!w[x].is_zero()) c += v[x] * w[x];
                c /= half_norm[k];
                if (!c.is_integer() || c < BigRational(0))
                    throw StructuralError("root is not a non-negative combination of simple roots");
                coords.push_back(static_cast<int>(c.to_int64()));
            }
            out.push_back(std::move(coords));
        }
        return out;
    }

    std::vector<RootComponent> components_;
    int dim_ = 0;
    std::vector<bool> torus_;
    std::vector<int> torus_coord_;
    std::vector<int> simple_idx_;
    std::vector<RationalVector> simple_;       // per label; empty for torus labels
    std::vector<RationalVector> fundamental_;  // per label
    std::vector<Labels> alpha_labels_;         // per label
    std::vector<RationalVector> positive_;
    struct LazyCoordinates {
        std::once_flag once;
        std::vector<std::vector<int>> value;
    };
    std::shared_ptr<LazyCoordinates> coords_ = std::make_shared<LazyCoordinates>();
    RationalVector delta_;
};

}  // namespace rslab
