#include <doctest.h>

#include <random>
#include <vector>

#include "golden.hpp"
#include "specmate/fppoly.hpp"
#include "specmate/walk.hpp"

using namespace specmate;

namespace {

FpPoly fp(int p, std::vector<int> c) {
    std::vector<Int> v(c.begin(), c.end());
    return FpPoly(Int(p), std::move(v));
}

FpPoly random_fp(const Int& p, int deg, std::mt19937_64& rng) {
    std::vector<Int> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = Int(static_cast<unsigned long>(rng() % 1000));
    c.back() = 1;  // monic keeps degrees honest
    return FpPoly(p, std::move(c));
}

// f(A)e mod p without forming matrix powers
std::vector<Int> apply_poly_to_ones(const FpPoly& f, const Graph& g) {
    int n = g.n();
    std::vector<Int> acc(static_cast<size_t>(n), 0);
    for (int k = f.degree(); k >= 0; --k) {
        acc = apply_adjacency(g, acc);
        for (auto& x : acc) x += f.coeff(k);
    }
    for (auto& x : acc) x = mod_floor(x, f.modulus());
    return acc;
}

bool all_zero(const std::vector<Int>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("fp arithmetic and reduction") {
    FpPoly f = fp(3, {4, 5, 6});  // reduces to 1 + 2x (leading 6 drops)
    CHECK(f.degree() == 1);
    CHECK(f.coeff(0) == 1);
    CHECK(f.coeff(1) == 2);
    CHECK((fp(5, {1, 1}) * fp(5, {4, 1})) == fp(5, {4, 0, 1}));
    CHECK((fp(2, {1, 1}) + fp(2, {1, 1})).is_zero());
    CHECK(fp(7, {3, 6}).monic() == fp(7, {4, 1}));
    CHECK(fp(5, {1, 0, 0, 2}).derivative() == fp(5, {0, 0, 1}));
    CHECK_THROWS_AS(FpPoly(Int(1)), internal_error);
}

TEST_CASE("fp division") {
    FpPoly a = fp(5, {2, 3, 1});  // (x+1)(x+2)
    FpPoly b = fp(5, {1, 1});
    auto [q, r] = FpPoly::divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q == fp(5, {2, 1}));
    CHECK(FpPoly::exact_quotient(a, b) == q);

    // with remainder
    auto [q2, r2] = FpPoly::divmod(fp(5, {1, 0, 1}), fp(5, {1, 1}));
    CHECK((q2 * fp(5, {1, 1}) + r2) == fp(5, {1, 0, 1}));
    CHECK(r2.degree() < 1);

    std::mt19937_64 rng(307);
    for (int rep = 0; rep < 25; ++rep) {
        Int p = (rep % 2) ? 2 : 13;
        FpPoly x = random_fp(p, 2 + static_cast<int>(rng() % 6), rng);
        FpPoly y = random_fp(p, 1 + static_cast<int>(rng() % 3), rng);
        auto [qq, rr] = FpPoly::divmod(x, y);
        CHECK((qq * y + rr) == x);
        CHECK(rr.degree() < y.degree());
    }
}

TEST_CASE("fp gcd") {
    FpPoly g = fp_gcd(fp(5, {2, 3, 1}), fp(5, {3, 4, 1}));  // share x+1
    CHECK(g == fp(5, {1, 1}));
    CHECK(fp_gcd(fp(3, {1, 1}), fp(3, {})).monic() == fp(3, {1, 1}));
    CHECK(fp_gcd(fp(3, {}), fp(3, {})).is_zero());
    // gcd of coprime polynomials is 1
    CHECK(fp_gcd(fp(2, {1, 1}), fp(2, {1, 0, 0, 1, 1})).degree() == 0);
}

TEST_CASE("squarefree part handles vanishing derivatives") {
    // (x+1)^3 over F_2 and F_3
    CHECK(squarefree_part(fp(2, {1, 1, 1, 1})) == fp(2, {1, 1}));
    CHECK(squarefree_part(fp(3, {1, 0, 0, 1})) == fp(3, {1, 1}));  // x^3 + 1 = (x+1)^3
    // (x^2+1)^2 = x^4 + 1 over F_2: derivative vanishes, needs the square root
    CHECK(squarefree_part(fp(2, {1, 0, 0, 0, 1})) == fp(2, {1, 1}));
    // already squarefree: x(x+1) over F_2
    CHECK(squarefree_part(fp(2, {0, 1, 1})) == fp(2, {0, 1, 1}));
    CHECK(squarefree_part(fp(7, {3})).degree() == 0);  // constants give 1
}

TEST_CASE("squarefree part properties on random inputs") {
    std::mt19937_64 rng(311);
    for (int rep = 0; rep < 60; ++rep) {
        Int p = (rep % 3 == 0) ? 2 : ((rep % 3 == 1) ? 3 : 5);
        FpPoly f = random_fp(p, 1 + static_cast<int>(rng() % 8), rng);
        FpPoly s = squarefree_part(f);
        CHECK(s.lead() == 1);
        // s divides f
        auto [q, r] = FpPoly::divmod(f, s);
        CHECK(r.is_zero());
        // s is squarefree: nonzero derivative and trivial gcd with it
        if (s.degree() >= 1) {
            CHECK_FALSE(s.derivative().is_zero());
            CHECK(fp_gcd(s, s.derivative()).degree() == 0);
        }
        // idempotence
        CHECK(squarefree_part(s) == s);
        // squaring changes nothing
        CHECK(squarefree_part(f * f) == s);
    }
}

TEST_CASE("walk annihilator polynomial at p = 2") {
    Graph k2(2);
    k2.set_edge(0, 1, true);
    FpPoly f2 = main_polynomial(k2, 2);
    CHECK(f2 == fp(2, {1, 1}));  // from even coefficients of x^2 - 1
    CHECK(all_zero(apply_poly_to_ones(f2, k2)));

    Graph k3(3);
    k3.set_edge(0, 1, true);
    k3.set_edge(0, 2, true);
    k3.set_edge(1, 2, true);
    FpPoly f3 = main_polynomial(k3, 2);
    CHECK(f3.degree() == 2);  // ceil(3/2) with the extra x factor
    CHECK(f3 == fp(2, {0, 1, 1}));
    CHECK(all_zero(apply_poly_to_ones(f3, k3)));

    FpPoly fe1 = main_polynomial(golden::ex1(), 2);
    CHECK(fe1.degree() == 7);  // ceil(13/2)
    CHECK(all_zero(apply_poly_to_ones(fe1, golden::ex1())));
}

TEST_CASE("walk annihilator polynomial at odd p") {
    FpPoly f3 = main_polynomial(golden::ex1(), 3);
    CHECK(f3.lead() == 1);
    CHECK(f3.degree() <= 13);
    CHECK(all_zero(apply_poly_to_ones(f3, golden::ex1())));

    // random graphs: the defining congruence f(A)e = 0 (mod p) always holds
    std::mt19937_64 rng(313);
    for (int rep = 0; rep < 15; ++rep) {
        int n = 5 + static_cast<int>(rng() % 6);
        Graph g = random_gnp_half(n, rng());
        for (Int p : {Int(2), Int(3), Int(5), Int(7)}) {
            FpPoly f = main_polynomial(g, p);
            CHECK(f.lead() == 1);
            CHECK(all_zero(apply_poly_to_ones(f, g)));
            if (p == 2) CHECK(f.degree() == (n + 1) / 2);
        }
    }
}
