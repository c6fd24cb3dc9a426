#include <catch_amalgamated.hpp>

#include <random>

#include "rslab/characteristic_classes.hpp"

using namespace rslab;

namespace {

ChernProfile k3() { return ChernProfile::from_coefficients({0, 6}, 4); }
ChernProfile flat(int n) { return ChernProfile::from_coefficients(std::vector<BigRational>(n, 0), 1); }

// (1+h)^{n+2}/(1+dh) for a hypersurface, expanded by hand-rolled convolution.
ChernProfile hypersurface(int n, int d) {
    std::vector<BigRational> c(static_cast<std::size_t>(n + 1), 0);
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= k; ++j)
            c[k] += binomial(n + 2, j) * pow(BigRational(-d), static_cast<unsigned>(k - j));
    return ChernProfile::from_coefficients(std::vector<BigRational>(c.begin() + 1, c.end()), d);
}

ChernProfile random_profile(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coef(-6, 6);
    std::uniform_int_distribution<int> pair(1, 9);
    std::vector<BigRational> c;
    for (int k = 0; k < n; ++k) c.push_back(coef(rng));
    return ChernProfile::from_coefficients(c, pair(rng));
}

}  // namespace

TEST_CASE("power sums via Newton") {
    const auto s = power_sum_coefficients(k3());
    CHECK(s[0] == BigRational(0));
    CHECK(s[1] == BigRational(-12));

    const auto line = ChernProfile::from_coefficients({5}, 1);
    CHECK(power_sum_coefficients(line)[0] == BigRational(5));

    for (const auto& v : power_sum_coefficients(flat(4))) CHECK(v.is_zero());
}

TEST_CASE("Newton round trip on random profiles") {
    std::mt19937 rng(17);
    for (int i = 0; i < 40; ++i) {
        const auto c = random_profile(rng, 1 + i % 7);
        const auto back = power_sums_to_chern(c.ring(), chern_to_power_sums(c));
        REQUIRE(back.size() == c.chern().size());
        for (std::size_t k = 0; k < back.size(); ++k) CHECK(back[k] == c.chern()[k]);
    }
}

TEST_CASE("Pontryagin numbers") {
    const auto pk3 = chern_to_pontryagin(k3());
    REQUIRE(pk3.basis.size() == 1);
    CHECK(pk3["p1"] == BigRational(-48));

    for (const auto& v : chern_to_pontryagin(flat(4)).numbers) CHECK(v.is_zero());

    CHECK(chern_to_pontryagin(flat(3)).basis.empty());
    CHECK(pontryagin_basis(2).size() == 2);
    CHECK(pontryagin_monomial_name(pontryagin_basis(2)[0]) == "p1^2");
    CHECK(pontryagin_monomial_name(pontryagin_basis(3)[1]) == "p1p2");
    CHECK(pontryagin_basis(5).size() == 7);
}

TEST_CASE("genera against closed-form Pontryagin polynomials") {
    // A^ = -p1/24, L = p1/3 in dim 4; A^ = (7 p1^2 - 4 p2)/5760, L = (7 p2 - p1^2)/45 in dim 8.
    std::mt19937 rng(23);
    for (int i = 0; i < 20; ++i) {
        const auto c2 = random_profile(rng, 2);
        const auto p = chern_to_pontryagin(c2);
        CHECK(ahat_genus_value(c2) == -p["p1"] / BigRational(24));
        CHECK(signature(c2) == p["p1"] / BigRational(3));

        const auto c4 = random_profile(rng, 4);
        const auto q = chern_to_pontryagin(c4);
        CHECK(ahat_genus_value(c4) == (BigRational(7) * q["p1^2"] - BigRational(4) * q["p2"]) / BigRational(5760));
        CHECK(signature(c4) == (BigRational(7) * q["p2"] - q["p1^2"]) / BigRational(45));
    }
}

TEST_CASE("K3 characteristic numbers") {
    const auto c = k3();
    CHECK(ahat_genus_value(c) == BigRational(2));
    CHECK(signature(c) == BigRational(-16));
    CHECK(euler_characteristic(c) == BigRational(24));
    CHECK(todd_genus_value(c) == BigRational(2));

    const Poly ch = ch_complexified_tangent(c);
    CHECK(ch.coefficient({0}) == BigRational(4));
    CHECK(ch.coefficient({1}) == BigRational(0));
    CHECK(ch.coefficient({2}) == BigRational(-12));

    const auto idx = rs_index(c);
    CHECK(idx.ind_q == BigRational(-38));
    CHECK(idx.ind_d_tm == BigRational(-40));
    CHECK(idx.ind_d == BigRational(2));
}

TEST_CASE("A^ of X_2(6) from the hypersurface formula") {
    const auto x26 = hypersurface(2, 6);
    CHECK(x26.chern_coefficient(1) == BigRational(-2));
    CHECK(x26.chern_coefficient(2) == BigRational(18));
    CHECK(ahat_genus_value(x26) == BigRational(8));
    CHECK(signature(hypersurface(4, 4)) == BigRational(100));
}

TEST_CASE("small examples") {
    CHECK(euler_characteristic(ChernProfile::from_coefficients({2}, 1)) == BigRational(2));
    const Poly ch = ch_complexified_tangent(flat(2));
    CHECK(ch == Poly::constant(flat(2).ring(), BigRational(4)));
    const auto idx = rs_index(flat(4));
    CHECK(idx.ind_q.is_zero());
    CHECK(idx.ind_d.is_zero());
}

TEST_CASE("genus series degree must cover the dimension") {
    CHECK_THROWS_AS(evaluate_genus(ahat_genus(2), k3().product(k3())), RangeError);
    CHECK(ahat_genus(4).series.constant_term() == BigRational(1));
    CHECK(l_genus(4).series.constant_term() == BigRational(1));
    CHECK(todd_genus(4).series.constant_term() == BigRational(1));
    CHECK(chi_y_genus(4).series.constant_term() == BigRational(1));
}

TEST_CASE("chi_y specializations") {
    std::mt19937 rng(29);
    for (int i = 0; i < 30; ++i) {
        const int n = 1 + i % 6;
        const auto c = random_profile(rng, n);
        const auto chi_y = evaluate_genus(chi_y_genus(n), c);
        REQUIRE(chi_y.coefficients.size() == static_cast<std::size_t>(n + 1));
        CHECK(chi_y.at(BigRational(-1)) == euler_characteristic(c));
        CHECK(chi_y.at(BigRational(0)) == todd_genus_value(c));
        if (n % 2 == 0) CHECK(chi_y.at(BigRational(1)) == signature(c));
    }
}

TEST_CASE("ch(TM^C) has no odd part") {
    std::mt19937 rng(31);
    for (int i = 0; i < 20; ++i) {
        const auto c = random_profile(rng, 1 + i % 6);
        const Poly ch = ch_complexified_tangent(c);
        for (const auto& [e, coeff] : ch.terms()) CHECK(e[0] % 2 == 0);
    }
}

TEST_CASE("index split is internally consistent") {
    std::mt19937 rng(37);
    for (int i = 0; i < 20; ++i) {
        const auto c = random_profile(rng, 2 * (1 + i % 3));
        const auto r = rs_index(c);
        CHECK(r.ind_q == r.ind_d_tm + r.ind_d);
        CHECK(r.ind_d == ahat_genus_value(c));
    }
}

TEST_CASE("A^ and L are multiplicative") {
    std::mt19937 rng(41);
    for (int i = 0; i < 10; ++i) {
        const auto a = random_profile(rng, 2);
        const auto b = random_profile(rng, 2 + 2 * (i % 2));
        const auto ab = a.product(b);
        CHECK(ab.complex_dimension() == a.complex_dimension() + b.complex_dimension());
        CHECK(ahat_genus_value(ab) == ahat_genus_value(a) * ahat_genus_value(b));
        CHECK(signature(ab) == signature(a) * signature(b));
        CHECK(euler_characteristic(ab) == euler_characteristic(a) * euler_characteristic(b));
    }
}

TEST_CASE("product index formula") {
    const auto rep = product_rs_index(k3(), k3());
    CHECK(rep.direct == BigRational(-156));
    CHECK(rep.product_formula == BigRational(-156));
    CHECK(product_rs_index(k3(), flat(2)).direct.is_zero());
}

TEST_CASE("dimension 4 identities") {
    const auto rep = verify_dimension_identities(4);
    CHECK(rep.ahat == RationalVector{BigRational(-1, 24)});
    CHECK(rep.sigma == RationalVector{BigRational(1, 3)});
    CHECK(rep.ind_q == RationalVector{BigRational(19, 24)});
    CHECK(rep.all_hold());
    CHECK(rep.relation_family.size() == 2);
}

TEST_CASE("dimension 8 identities") {
    const auto rep = verify_dimension_identities(8);
    REQUIRE(rep.found);
    CHECK(rep.found->first == BigRational(25));
    CHECK(rep.found->second == BigRational(-1));
    CHECK(rep.ahat == RationalVector{BigRational(7, 5760), BigRational(-4, 5760)});
    CHECK(rep.sigma == RationalVector{BigRational(-1, 45), BigRational(7, 45)});
    CHECK(rep.all_hold());
    REQUIRE(rep.relation_family.size() == 1);
}

TEST_CASE("dimension 12 identity") {
    const auto rep = verify_dimension_identities(12);
    CHECK(rep.basis.size() == 3);
    REQUIRE(rep.found);
    CHECK(rep.found->first == BigRational(5));
    CHECK(rep.found->second == BigRational(1, 8));
    CHECK(rep.all_hold());
    CHECK_THROWS_AS(verify_dimension_identities(6), DomainError);
}
