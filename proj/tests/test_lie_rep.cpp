#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "rslab/representation.hpp"

using namespace rslab;

namespace {

// (first_twice/2, 1/2, ..., 1/2)
RationalVector half_vector(int m, int first_twice) {
    RationalVector v(static_cast<std::size_t>(m), BigRational(1, 2));
    v[0] = BigRational(first_twice, 2);
    return v;
}

// Weight multiset of a tensor product by direct convolution.
WeightSystem convolve(const WeightSystem& a, const WeightSystem& b) {
    WeightSystem out;
    for (const auto& [wa, ma] : a)
        for (const auto& [wb, mb] : b) {
            Labels w = wa;
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += wb[i];
            out[w] += ma * mb;
        }
    return out;
}

// Dominant weights with label sum at most `budget`.
std::vector<Labels> small_dominant(const RootSystem& r, int budget) {
    std::vector<Labels> out;
    Labels cur(static_cast<std::size_t>(r.rank()), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[i] = v;
            self(self, i + 1, left - v);
        }
        cur[i] = 0;
    };
    rec(rec, 0, budget);
    return out;
}

// Euclidean weights -> label multiset.
WeightSystem from_euclidean(const RootSystem& r, const std::vector<RationalVector>& ws) {
    WeightSystem out;
    for (const auto& w : ws) out[r.to_dynkin(w)] += 1;
    return out;
}

}  // namespace

TEST_CASE("root system structure") {
    CHECK(RootSystem::parse("B2").cartan_matrix() == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
    CHECK(RootSystem::parse("A2").cartan_matrix() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK(RootSystem::parse("G2").cartan_matrix() == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
    CHECK(RootSystem::parse("C3").cartan_matrix() ==
          std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
    CHECK(RootSystem::parse("D4").cartan_matrix()[1] == std::vector<int>{-1, 2, -1, -1});

    CHECK(RootSystem::parse("A4").positive_roots().size() == 10);
    CHECK(RootSystem::parse("B4").positive_roots().size() == 16);
    CHECK(RootSystem::parse("C4").positive_roots().size() == 16);
    CHECK(RootSystem::parse("D5").positive_roots().size() == 20);
    CHECK(RootSystem::parse("G2").positive_roots().size() == 6);
    CHECK(RootSystem::parse("C1xC2").positive_roots().size() == 5);
    CHECK(RootSystem::parse("U1xA1xA1").rank() == 3);

    // delta is half the sum of the positive roots (and by construction the sum of fundamental weights).
    for (const char* name : {"A3", "B3", "C3", "D4", "G2", "C1xC2", "U1xA2"}) {
        const auto r = RootSystem::parse(name);
        RationalVector sum(static_cast<std::size_t>(r.euclidean_dimension()), BigRational(0));
        for (const auto& a : r.positive_roots())
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += a[i] / BigRational(2);
        CHECK(sum == r.delta());
    }
    CHECK(RootSystem::parse("B3").delta() == RationalVector{BigRational(5, 2), BigRational(3, 2), BigRational(1, 2)});
    CHECK(RootSystem::parse("C1xC2").name() == "C1xC2");

    CHECK_THROWS_AS(RootSystem::parse("E6"), DomainError);
    CHECK_THROWS_AS(RootSystem::parse("D1"), DomainError);
    CHECK_THROWS_AS(RootSystem::parse("Bx"), DomainError);
    CHECK_THROWS_AS(RootSystem::parse("G3"), DomainError);
    CHECK_THROWS_AS(RootSystem::parse("B3x"), DomainError);
}

TEST_CASE("Euclidean and Dynkin coordinates") {
    const auto b3 = RootSystem::parse("B3");
    CHECK(b3.to_dynkin(half_vector(3, 3)) == Labels{1, 0, 1});
    CHECK(b3.to_dynkin(half_vector(3, 1)) == Labels{0, 0, 1});
    CHECK(b3.to_euclidean({1, 0, 0}) == RationalVector{1, 0, 0});
    CHECK_THROWS_AS(b3.to_dynkin({BigRational(1, 2), 0, 0}), DomainError);
    CHECK_THROWS_AS(b3.to_euclidean({1, 0}), DomainError);

    const auto d4 = RootSystem::parse("D4");
    CHECK(d4.to_dynkin(half_vector(4, 3)) == Labels{1, 0, 0, 1});

    const auto a2 = RootSystem::parse("A2");
    CHECK(a2.to_dynkin({1, 0, 0}) == Labels{1, 0});
    CHECK(a2.to_dynkin({1, 1, 0}) == Labels{0, 1});

    const auto u = RootSystem::parse("U1xA1");
    CHECK(u.to_dynkin({BigRational(3, 2), BigRational(1, 2), BigRational(-1, 2)}) == Labels{3, 1});
}

TEST_CASE("weyl_dim") {
    const auto g2 = RootSystem::parse("G2");
    CHECK(weyl_dim(g2, {1, 0}) == 7);
    CHECK(weyl_dim(g2, {0, 1}) == 14);
    CHECK(weyl_dim(g2, {2, 0}) == 27);
    CHECK(weyl_dim(g2, {0, 0}) == 1);

    const auto b3 = RootSystem::parse("B3");
    CHECK(weyl_dim(b3, {1, 0, 0}) == 7);
    CHECK(weyl_dim(b3, {0, 1, 0}) == 21);
    CHECK(weyl_dim(b3, {0, 0, 1}) == 8);
    CHECK(weyl_dim(b3, {1, 0, 1}) == 48);
    CHECK(weyl_dim(b3, {0, 0, 2}) == 35);

    CHECK(weyl_dim(RootSystem::parse("A3"), {0, 1, 0}) == 6);
    CHECK(weyl_dim(RootSystem::parse("C3"), {0, 1, 0}) == 14);  // Lambda^2_0 of C^6
    CHECK(weyl_dim(RootSystem::parse("U1xA1"), {5, 2}) == 3);
    CHECK_THROWS_AS(weyl_dim(b3, {-1, 0, 1}), DomainError);
}

TEST_CASE("casimir") {
    const auto b3 = RootSystem::parse("B3");
    CHECK(casimir_euclidean(b3, half_vector(3, 3)) == BigRational(49, 4));
    CHECK(casimir(b3, {0, 0, 0}) == BigRational(0));
    CHECK(casimir_euclidean(RootSystem::parse("B4"), half_vector(4, 3)) == BigRational(18));
    // Vector representation of so(n): <e1 + 2 delta, e1> = n - 1.
    CHECK(casimir(b3, {1, 0, 0}) == BigRational(6));
    CHECK(casimir(RootSystem::parse("D4"), {1, 0, 0, 0}) == BigRational(7));
}

TEST_CASE("weight multiplicities: small cases") {
    const auto a1 = RootSystem::parse("A1");
    CHECK(weight_multiplicities(a1, {2}) == WeightSystem{{{-2}, 1}, {{0}, 1}, {{2}, 1}});
    CHECK(weight_multiplicities(RootSystem::parse("B3"), {0, 0, 0}) == WeightSystem{{{0, 0, 0}, 1}});

    const auto g7 = weight_multiplicities(RootSystem::parse("G2"), {1, 0});
    CHECK(g7.size() == 7);
    CHECK(g7.at({0, 0}) == 1);
    std::int64_t total = 0;
    for (const auto& [w, m] : g7) total += m;
    CHECK(total == 7);

    const auto g14 = weight_multiplicities(RootSystem::parse("G2"), {0, 1});
    CHECK(g14.at({0, 0}) == 2);
}

TEST_CASE("weight multiplicities against explicit weight lists") {
    // B3 spin: all (+-1/2, +-1/2, +-1/2).
    const auto b3 = RootSystem::parse("B3");
    std::vector<RationalVector> spin;
    for (int s = 0; s < 8; ++s) {
        RationalVector v;
        for (int i = 0; i < 3; ++i) v.push_back(BigRational((s >> i) & 1 ? -1 : 1, 2));
        spin.push_back(v);
    }
    CHECK(weight_multiplicities(b3, {0, 0, 1}) == from_euclidean(b3, spin));

    // A3 Lambda^2: e_i + e_j, i < j, projected to trace zero by to_dynkin.
    const auto a3 = RootSystem::parse("A3");
    std::vector<RationalVector> wedge2;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            RationalVector v(4, BigRational(0));
            v[static_cast<std::size_t>(i)] = 1;
            v[static_cast<std::size_t>(j)] = 1;
            wedge2.push_back(v);
        }
    CHECK(weight_multiplicities(a3, {0, 1, 0}) == from_euclidean(a3, wedge2));

    // C3 Lambda^2_0 E: +-e_i +- e_j (i < j) once each, zero weight with multiplicity 2.
    const auto c3 = RootSystem::parse("C3");
    std::vector<RationalVector> l20;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    RationalVector v(3, BigRational(0));
                    v[static_cast<std::size_t>(i)] = si;
                    v[static_cast<std::size_t>(j)] = sj;
                    l20.push_back(v);
                }
    l20.push_back(RationalVector(3, BigRational(0)));
    l20.push_back(RationalVector(3, BigRational(0)));
    CHECK(weight_multiplicities(c3, {0, 1, 0}) == from_euclidean(c3, l20));
}

TEST_CASE("multiplicities are Weyl invariant and sum to the Weyl dimension") {
    for (const char* name : {"A3", "B3", "C3", "D4", "G2", "C1xC2", "U1xA2"}) {
        const auto r = RootSystem::parse(name);
        for (const auto& lam : small_dominant(r, 3)) {
            const auto ws = weight_multiplicities(r, lam);
            std::int64_t total = 0;
            for (const auto& [w, m] : ws) {
                total += m;
                CHECK(m > 0);
                for (int i : r.simple_indices()) {
                    Labels s = w;
                    const int c = w[static_cast<std::size_t>(i)];
                    const auto& a = r.simple_root_labels(i);
                    for (std::size_t x = 0; x < s.size(); ++x) s[x] -= c * a[x];
                    auto it = ws.find(s);
                    REQUIRE(it != ws.end());
                    CHECK(it->second == m);
                }
            }
            INFO(name << " " << lam.size());
            CHECK(total == weyl_dim(r, lam));
        }
    }
}

TEST_CASE("tensor products from the holonomy tables") {
    const auto g2 = RootSystem::parse("G2");
    CHECK(tensor_decompose(g2, Labels{1, 0}, Labels{1, 0}) ==
          RepSum({{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{2, 0}, 1}}));

    const auto b3 = RootSystem::parse("B3");
    CHECK(tensor_decompose(b3, Labels{1, 0, 0}, Labels{0, 0, 1}) == RepSum({{{1, 0, 1}, 1}, {{0, 0, 1}, 1}}));
    const auto spin2 = tensor_decompose(b3, Labels{0, 0, 1}, Labels{0, 0, 1});
    CHECK(spin2 == RepSum({{{0, 0, 2}, 1}, {{0, 1, 0}, 1}, {{1, 0, 0}, 1}, {{0, 0, 0}, 1}}));
    std::vector<std::int64_t> dims;
    for (const auto& [l, m] : spin2.terms()) dims.push_back(weyl_dim(b3, l));
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::int64_t>{1, 7, 21, 35});
}

TEST_CASE("Klimyk: dimension, symmetry and brute-force character") {
    std::mt19937 rng(101);
    int checked = 0;
    for (const char* name : {"A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "C1xC2", "U1xA1xA1", "B4", "C4"}) {
        const auto r = RootSystem::parse(name);
        auto pool = small_dominant(r, 2);
        std::shuffle(pool.begin(), pool.end(), rng);
        for (std::size_t i = 0; i + 1 < pool.size() && i < 8; i += 2) {
            const auto& a = pool[i];
            const auto& b = pool[i + 1];
            const std::int64_t da = weyl_dim(r, a), db = weyl_dim(r, b);
            if (da * db > 5000) continue;
            const RepSum ab = tensor_decompose(r, a, b);
            CHECK(ab.dimension(r) == da * db);
            CHECK(ab == tensor_decompose(r, b, a));
            CHECK(ab == decompose_character(r, convolve(weight_multiplicities(r, a), weight_multiplicities(r, b))));

            std::vector<BigRational> point;
            for (int k = 0; k < r.rank(); ++k) point.push_back(BigRational(2 * k + 3, 7));
            const auto lhs = character_oracle(r, ab, point);
            const auto rhs = product_moments(character_oracle(r, RepSum::irreducible(a), point),
                                             character_oracle(r, RepSum::irreducible(b), point));
            CHECK(lhs == rhs);
            CHECK(lhs[0] == BigRational(da * db));
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("RepSum bookkeeping") {
    const auto g2 = RootSystem::parse("G2");
    const RepSum a({{{1, 0}, 2}, {{0, 0}, 1}});
    CHECK(a.dimension(g2) == 15);
    const RepSum b = RepSum::irreducible({1, 0});
    CHECK(a.minus(b).dimension(g2) == 8);
    CHECK_THROWS_AS(b.minus(a), ModelDataError);
    const RepSum v = b.minus(a, true);
    CHECK(v.is_virtual());
    CHECK(v.multiplicity({1, 0}) == -1);
    CHECK((a + b).multiplicity({1, 0}) == 3);
    CHECK((3 * b).multiplicity({1, 0}) == 3);
    CHECK_THROWS_AS(decompose_character(g2, WeightSystem{{{1, 0}, 1}}), ModelDataError);
}
