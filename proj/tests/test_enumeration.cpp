#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "milnor/enumeration.hpp"

#include <algorithm>
#include <set>

using namespace milnor;

namespace {

IntMatrix mat(std::vector<std::vector<long>> rows) {
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[0].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

// chain Stokes matrix: S(i, i+1) = -1
BilinearLattice a_chain(std::size_t k) {
    IntMatrix s = IntMatrix::identity(k);
    for (std::size_t i = 0; i + 1 < k; ++i) s(i, i + 1) = -1;
    return BilinearLattice::from_stokes(s, 0);
}

// all v in the box [-b, b]^n with v^T g v = target
std::set<std::vector<Int>> box_values(const IntMatrix& g, const Int& target, long b) {
    std::size_t n = g.rows();
    std::set<std::vector<Int>> out;
    std::vector<long> v(n, -b);
    while (true) {
        Int val = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) val += Int(v[i]) * g(i, j) * Int(v[j]);
        if (val == target) {
            std::vector<Int> w(n);
            for (std::size_t i = 0; i < n; ++i) w[i] = v[i];
            out.insert(w);
        }
        std::size_t k = 0;
        while (k < n && v[k] == b) v[k++] = -b;
        if (k == n) break;
        ++v[k];
    }
    return out;
}

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::set<IntMatrix> to_set(const std::vector<IntMatrix>& v) { return {v.begin(), v.end()}; }

// {+- M^k} for finite order M
std::set<IntMatrix> signed_powers(const IntMatrix& m) {
    std::set<IntMatrix> out;
    IntMatrix p = IntMatrix::identity(m.rows());
    do {
        out.insert(p);
        out.insert(-p);
        p = p * m;
    } while (!p.is_identity());
    return out;
}

CycNumber cyc(long l, std::vector<Int> c) { return CycNumber(l, std::move(c)); }

}  // namespace

TEST_CASE("short vectors on fixed grams") {
    auto v1 = short_vectors(mat({{-2, 1}, {1, -2}}), -2);
    CHECK(v1.size() == 6);  // roots of A2
    for (auto& v : v1) {
        Int q = -2 * v[0] * v[0] + 2 * v[0] * v[1] - 2 * v[1] * v[1];
        CHECK(q == -2);
    }
    CHECK(std::is_sorted(v1.begin(), v1.end()));

    auto v2 = short_vectors(IntMatrix::identity(2), 1);
    CHECK(v2.size() == 4);

    auto v3 = short_vectors(mat({{-4, 1}, {1, -3}}), -2);
    CHECK(v3.empty());

    CHECK(short_vectors(mat({{2, 0}, {0, 2}}), 0).empty());
    CHECK(short_vectors(mat({{2, 0}, {0, 2}}), -1).empty());
    CHECK_THROWS_AS(short_vectors(mat({{1, 0}, {0, -1}}), 1), NotDefinite);
    CHECK_THROWS_AS(short_vectors(mat({{1, 2}, {0, 1}}), 1), NotDefinite);
}

TEST_CASE("short vectors match box enumeration on random definite forms") {
    std::uint64_t seed = 17;
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = 2 + trial % 3;
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = (long)(splitmix64(seed) % 5) - 2;
        IntMatrix g = a.transpose() * a + IntMatrix::identity(n) * Int(n);
        for (Int t : {Int(1), Int(3), Int(n + 2)}) {
            auto sv = short_vectors(g, t);
            for (auto& v : sv)
                for (auto& x : v) CHECK(abs(x) <= 6);
            auto bx = box_values(g, t, 6);
            CHECK(std::set<std::vector<Int>>(sv.begin(), sv.end()) == bx);
        }
    }
}

TEST_CASE("automorphism groups of definite forms") {
    CHECK(definite_aut(mat({{-2, 1}, {1, -2}})).size() == 12);   // A2
    CHECK(definite_aut(mat({{-2, 1}, {1, -3}})).size() == 4);    // +-I, +-[[-1,1],[0,1]]
    CHECK(definite_aut(mat({{-2, 1}, {1, -5}})).size() == 4);
    CHECK(definite_aut(mat({{-4, 1}, {1, -3}})).size() == 2);    // +-I
    CHECK(definite_aut(mat({{-6, 1}, {1, -3}})).size() == 2);
    CHECK(definite_aut(IntMatrix::identity(2)).size() == 8);

    auto a4 = definite_aut(mat({{-2, 1}, {1, -3}}));
    std::set<IntMatrix> expect = {IntMatrix::identity(2), -IntMatrix::identity(2),
                                  mat({{-1, 1}, {0, 1}}), mat({{1, -1}, {0, -1}})};
    CHECK(to_set(a4) == expect);
}

TEST_CASE("automorphisms of a nonsymmetric bilinear form match box oracle") {
    IntMatrix g = mat({{1, 1}, {0, 1}});
    auto aut = definite_aut(g);
    std::set<IntMatrix> brute;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c)
                for (long d = -2; d <= 2; ++d) {
                    IntMatrix x = mat({{a, b}, {c, d}});
                    if (x.transpose() * g * x == g) brute.insert(x);
                }
    CHECK(to_set(aut) == brute);
}

TEST_CASE("gram isometry") {
    IntMatrix g = mat({{2, -1}, {-1, 2}});
    IntMatrix p = mat({{1, 1}, {0, 1}});
    IntMatrix g2 = p.transpose() * g * p;
    auto iso = gram_isometry(g, g2);
    REQUIRE(iso.has_value());
    CHECK(iso->transpose() * g * *iso == g2);
    CHECK(gram_isometric(g, g2));
    CHECK_FALSE(gram_isometric(g, -g));
    CHECK_FALSE(gram_isometric(g, mat({{2, 0}, {0, 2}})));  // determinants 3 vs 4
    CHECK(gram_isometric(mat({{-2, 1}, {1, -3}}), mat({{-3, 1}, {1, -2}})));
}

TEST_CASE("cyclotomic integer arithmetic") {
    for (long l : {3L, 4L, 5L}) {
        CycNumber xi = CycNumber::xi(l);
        CycNumber one = CycNumber::integer(l, 1);
        CycNumber p = one;
        for (long k = 0; k < l; ++k) p = p * xi;
        CHECK(p == one);  // xi^l = 1
        CHECK(xi * xi.conj() == one);
        CHECK((xi + xi.conj()).conj() == xi + xi.conj());
        CHECK((xi - xi).is_zero());
    }
    CHECK(cyc(3, {1, 1}).norm2() == 1);   // 1 + xi is a unit, norm 1
    CHECK(cyc(3, {2, 1}).norm2() == 3);
    CHECK(cyc(4, {1, 1}).norm2() == 2);
    CHECK(cyc(4, {0, -3}).norm2() == 9);
    // in Z[zeta_5], (1 + xi)(1 + conj(xi)) is not rational
    CHECK_THROWS_AS(cyc(5, {1, 1, 0, 0}).norm2(), UnsupportedCase);
    // 1 + xi + xi^2 + xi^3 = -xi^4 has norm 1
    CHECK(cyc(5, {1, 1, 1, 1}) * cyc(5, {1, 1, 1, 1}).conj() == CycNumber::integer(5, 1));
}

TEST_CASE("hermitian form values") {
    HermitianPair hp{3, 3};
    CycVec b1{CycNumber::integer(3, 1), CycNumber::integer(3, 0)};
    CycVec b2{CycNumber::integer(3, 0), CycNumber::integer(3, 1)};
    CHECK(hermitian_value(hp, b1, b1) == CycNumber::integer(3, 2));
    CHECK(hermitian_value(hp, b2, b2) == CycNumber::integer(3, 3));
    CHECK(hermitian_value(hp, b1, b2) == CycNumber::integer(3, -1));
    CHECK(hermitian_value(hp, b2, b1) == CycNumber::integer(3, -1));
    // sesquilinearity: L(xi r, s) = xi L(r, s)
    CycNumber xi = CycNumber::xi(3);
    CycVec xb1{xi, CycNumber::integer(3, 0)};
    CHECK(hermitian_value(hp, xb1, b2) == xi * hermitian_value(hp, b1, b2));
}

TEST_CASE("hermitian norm-2 solutions") {
    // m >= 3: the only vectors of value 2 are the unit multiples of b1
    auto s33 = hermitian_solutions({3, 3}, 2);
    CHECK(s33.size() == 6);
    for (auto& r : s33) {
        CHECK(r.r2.is_zero());
        CHECK(r.r1.norm2() == 1);
    }
    CHECK(hermitian_solutions({3, 3}, 2, true).empty());

    // m >= 3, value m: r1 = 0 with r2 a unit, or r1 = r2 a unit
    auto s333 = hermitian_solutions({3, 3}, 3, true);
    CHECK(s333.size() == 12);
    for (auto& r : s333) {
        bool case_a = r.r1.is_zero() && r.r2.norm2() == 1;
        bool case_b = (r.r1 - r.r2).is_zero() && r.r1.norm2() == 1;
        CHECK((case_a || case_b));
    }

    // m = 2: vectors of value 2 are the unit multiples of b1, b2, b1 + b2
    CHECK(hermitian_solutions({2, 3}, 2).size() == 18);
    CHECK(hermitian_solutions({2, 4}, 2).size() == 12);

    CHECK_THROWS_AS(hermitian_solutions({3, 5}, 2), UnsupportedCase);
    CHECK_THROWS_AS(hermitian_solutions({1, 3}, 2), UnsupportedCase);
}

TEST_CASE("hermitian solutions for the icosahedral pair (2,5)") {
    auto sols = hermitian_solutions({2, 5}, 2);
    CHECK(sols.size() == 30);

    // expected coefficient tuples for (r1, r2) in the power basis
    std::set<CycVec> expect;
    auto add = [&](std::vector<Int> z) {
        CycVec r{cyc(5, {z[0], z[1], z[2], z[3]}), cyc(5, {z[4], z[5], z[6], z[7]})};
        CycVec mr{-r.r1, -r.r2};
        expect.insert(r);
        expect.insert(mr);
    };
    for (int j = 0; j < 8; ++j) {
        std::vector<Int> e(8, 0);
        e[j] = 1;
        add(e);
    }
    for (int j = 0; j < 4; ++j) {
        std::vector<Int> e(8, 0);
        e[j] = 1;
        e[4 + j] = 1;
        add(e);
    }
    add({1, 1, 1, 1, 0, 0, 0, 0});
    add({0, 0, 0, 0, 1, 1, 1, 1});
    add({1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(std::set<CycVec>(sols.begin(), sols.end()) == expect);

    // the solution set is invariant under multiplication by xi
    CycNumber xi = CycNumber::xi(5);
    for (auto& r : sols) {
        CycVec xr{xi * r.r1, xi * r.r2};
        CHECK(expect.count(xr) == 1);
    }
}

TEST_CASE("unitary automorphism groups over Z[xi]") {
    CHECK(zxi_aut({3, 3}).size() == 12);
    CHECK(zxi_aut({2, 3}).size() == 36);
    CHECK(zxi_aut({2, 4}).size() == 24);
    CHECK(zxi_aut({2, 5}).size() == 60);
    CHECK(zxi_aut({4, 3}).size() == 12);

    // each element preserves the full Gram
    HermitianPair hp{3, 3};
    for (auto& g : zxi_aut(hp)) {
        CycVec c1{g.a, g.c}, c2{g.b, g.d};
        CHECK(hermitian_value(hp, c1, c1) == CycNumber::integer(3, 2));
        CHECK(hermitian_value(hp, c2, c2) == CycNumber::integer(3, 3));
        CHECK(hermitian_value(hp, c1, c2) == CycNumber::integer(3, -1));
    }

    // rational-entry subgroup for m >= 3: the four integer matrices
    long rational = 0;
    for (auto& g : zxi_aut({3, 3})) {
        auto is_rat = [](const CycNumber& z) {
            for (std::size_t i = 1; i < z.coeffs().size(); ++i)
                if (z.coeffs()[i] != 0) return false;
            return true;
        };
        if (is_rat(g.a) && is_rat(g.b) && is_rat(g.c) && is_rat(g.d)) ++rational;
    }
    CHECK(rational == 4);
}

TEST_CASE("order chain condition") {
    CHECK(order_chain_holds({6}));
    CHECK(order_chain_holds({22, 2}));   // ratio 11
    CHECK(order_chain_holds({15, 3}));   // ratio 5
    CHECK(order_chain_holds({34, 2}));   // ratio 17
    CHECK(order_chain_holds({21, 3}));   // ratio 7
    CHECK(order_chain_holds({15, 5}));   // ratio 3
    CHECK(order_chain_holds({12, 6}));   // ratio 2, adjacent
    CHECK(order_chain_holds({12, 6, 3}));
    CHECK_FALSE(order_chain_holds({}));
    CHECK_FALSE(order_chain_holds({4, 5}));
    CHECK_FALSE(order_chain_holds({2, 3}));
    CHECK_FALSE(order_chain_holds({12, 2}));  // ratio 6 is not a prime power
}

TEST_CASE("commutant units on chain lattices") {
    // rank 2 chain: expected group {+- M^k}, order 6
    auto l2 = a_chain(2);
    auto g2 = commutant_units(l2, Sublattice::full(2));
    CHECK(to_set(g2) == signed_powers(l2.monodromy()));

    // independent oracle: automorphisms of the symmetric intersection form
    // that commute with the monodromy and preserve the Seifert form
    auto oracle = [](const BilinearLattice& l) {
        std::set<IntMatrix> out;
        IntMatrix lam = l.seifert(), m = l.monodromy();
        for (auto& x : definite_aut(l.intersection())) {
            if (x * m == m * x && x.transpose() * lam * x == lam) out.insert(x);
        }
        return out;
    };
    CHECK(to_set(g2) == oracle(l2));

    // rank 4 chain: order 10
    auto l4 = a_chain(4);
    auto g4 = commutant_units(l4, Sublattice::full(4));
    CHECK(g4.size() == 10);
    CHECK(to_set(g4) == signed_powers(l4.monodromy()));
    CHECK(to_set(g4) == oracle(l4));

    // repeated eigenvalue rejects
    auto split = BilinearLattice::from_stokes(IntMatrix::identity(2), 0);
    CHECK_THROWS_AS(commutant_units(split, Sublattice::full(2)), HypothesesFail);
}

TEST_CASE("branch system recovery from rank 2 grams") {
    // negative definite rank 2 Grams of triples l1 + l2 + l3 = 0
    struct Case {
        IntMatrix rad, full;
    };
    std::vector<Case> cases = {
        {mat({{-2, 1}, {1, -2}}), mat({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}})},
        {mat({{-2, 1}, {1, -3}}), mat({{-2, 1, 1}, {1, -3, 2}, {1, 2, -3}})},
        {mat({{-2, 1}, {1, -4}}), mat({{-2, 1, 1}, {1, -4, 3}, {1, 3, -4}})},
        {mat({{-4, 1}, {1, -3}}), mat({{-4, 1, 3}, {1, -3, 2}, {3, 2, -5}})},
        {mat({{-6, 1}, {1, -3}}), mat({{-6, 1, 5}, {1, -3, 2}, {5, 2, -7}})},
    };
    for (auto& cs : cases) {
        auto tuples = recover_branches(cs.rad, 3);
        REQUIRE(tuples.size() == 1);
        auto& tup = tuples[0];
        REQUIRE(tup.size() == 3);
        auto lval = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
            Int v = 0;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) v += x[i] * cs.rad(i, j) * y[j];
            return v;
        };
        // Gram of the recovered triple matches the full Gram up to reordering
        std::vector<int> perm = {0, 1, 2};
        bool matched = false;
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i)
                for (int j = 0; j < 3 && ok; ++j)
                    if (lval(tup[perm[i]], tup[perm[j]]) != cs.full(i, j)) ok = false;
            if (ok) matched = true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(matched);
    }
    CHECK_THROWS_AS(recover_branches(mat({{2, 0}, {0, 2}}), 3), NotDefinite);
}
