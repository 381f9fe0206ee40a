#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "milnor/group.hpp"

#include <cstdint>

using namespace milnor;

namespace {

IntMatrix mat(std::size_t n, std::vector<Int> e) { return IntMatrix(n, n, std::move(e)); }

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// all SL(2,Z) matrices with entries in [-bound, bound]
std::vector<SL2Matrix> sl2_box(long bound) {
    std::vector<SL2Matrix> out;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
            for (long c = -bound; c <= bound; ++c)
                for (long d = -bound; d <= bound; ++d)
                    if (a * d - b * c == 1) out.emplace_back(a, b, c, d);
    return out;
}

}  // namespace

TEST_CASE("seifert form preservation") {
    auto m = t_pqr(3, 3, 3);
    std::size_t mu = m.lattice.mu();
    CHECK(preserves_seifert(IntMatrix::identity(mu), m.lattice));
    CHECK(preserves_seifert(m.lattice.monodromy(), m.lattice));
    CHECK(preserves_seifert(-IntMatrix::identity(mu), m.lattice));

    IntMatrix diag = IntMatrix::identity(mu);
    diag(0, 0) = 2;
    CHECK_FALSE(preserves_seifert(diag, m.lattice));
    CHECK_THROWS_AS(preserves_seifert(IntMatrix::identity(3), m.lattice), std::invalid_argument);

    // preserving L forces preservation of monodromy and intersection form
    for (const auto& g : u2_generators(m)) {
        CHECK(g * m.lattice.monodromy() == m.lattice.monodromy() * g);
        CHECK(g.transpose() * m.lattice.intersection() * g == m.lattice.intersection());
    }
}

TEST_CASE("closure") {
    IntMatrix neg = -IntMatrix::identity(3);
    auto g2 = close({neg});
    CHECK(g2.order() == 2);
    CHECK(g2.contains(neg));
    CHECK(g2.contains(IntMatrix::identity(3)));
    CHECK_FALSE(g2.contains(IntMatrix::identity(3) * Int(2)));

    // closed under product and inverse
    auto m = t_pqr(4, 4, 2);
    auto grp = close({m.lattice.monodromy(), u2_generators(m)[0]});
    for (const auto& a : grp.elements)
        for (const auto& b : grp.elements) CHECK(grp.contains(a * b));

    CHECK_THROWS_AS(close({mat(2, {1, 1, 0, 1})}, 50), CapExceeded);
    CHECK_THROWS_AS(close(std::vector<IntMatrix>{}), std::invalid_argument);
    CHECK_THROWS_AS(close({IntMatrix::identity(2), IntMatrix::identity(3)}), std::invalid_argument);
}

TEST_CASE("restriction to sublattices") {
    auto e = t_pqr(3, 3, 3);
    CHECK(restrict_to(e.lattice.monodromy(), e.fixed_lattice).is_identity());

    auto h = t_pqr(5, 4, 3);
    auto r = restrict_to(h.lattice.monodromy(), h.fixed_lattice);
    CHECK(r == mat(2, {1, -13, 0, 1}));

    std::size_t mu = h.lattice.mu();
    CHECK(restrict_to(-IntMatrix::identity(mu), h.fixed_lattice) == -IntMatrix::identity(2));

    IntMatrix e0 = IntMatrix::zero(1, mu);
    e0(0, 0) = 1;
    CHECK_THROWS_AS(restrict_to(h.lattice.monodromy(), Sublattice::from_rows(e0)), NotInvariant);

    // functoriality
    auto a = u1_element(e, 0, 1, 2, 0), b = u1_element(e, 0, 1, 1, 1);
    CHECK(restrict_to(a * b, e.fixed_lattice) ==
          restrict_to(a, e.fixed_lattice) * restrict_to(b, e.fixed_lattice));
}

TEST_CASE("u1 elements") {
    auto e = t_pqr(6, 3, 2);
    CHECK(u1_element(e, 0, 0, 0, 0).is_identity());
    CHECK(u1_element(e, 0, 1, 1, 1) == e.lattice.monodromy());
    CHECK_THROWS_AS(u1_element(e, 0, 1, 0, 0), CongruenceFails);
    CHECK_THROWS_AS(u1_element(e, 1, 1, 1, 1), CongruenceFails);

    auto m333 = t_pqr(3, 3, 3);
    auto g = u1_element(m333, 0, 1, 2, 0);
    CHECK(preserves_seifert(g, m333.lattice));
    CHECK(restrict_to(g, m333.fixed_lattice).is_identity());

    // fixed-part action is translation by delta
    auto h = t_pqr(5, 4, 3);
    CHECK(u1_element(h, -13, 1, 1, 1) == h.lattice.monodromy());
    CHECK(restrict_to(u1_element(h, 47, 1, 1, 1), h.fixed_lattice) == mat(2, {1, 47, 0, 1}));

    // additive law on (delta, alpha, beta, gamma), exponents mod (p, q, r)
    long tuples[4][4] = {{0, 1, 1, 1}, {0, 1, 2, 0}, {0, 2, 2, 2}, {3, 0, 0, 0}};
    for (auto& s : tuples)
        for (auto& t : tuples) {
            auto lhs = u1_element(m333, s[0], s[1], s[2], s[3]) *
                       u1_element(m333, t[0], t[1], t[2], t[3]);
            CHECK(lhs == u1_element(m333, s[0] + t[0], s[1] + t[1], s[2] + t[2], s[3] + t[3]));
        }
}

TEST_CASE("u2 generators") {
    auto m333 = t_pqr(3, 3, 3);
    auto gens = u2_generators(m333);
    REQUIRE(gens.size() == 2);
    CHECK(close(gens).order() == 6);
    // first swap exchanges the first two arm blocks
    std::vector<Int> e0(m333.lattice.mu());
    e0[0] = 1;
    auto img = gens[0].apply(e0);
    CHECK(img[2] == 1);
    CHECK(img[0] == 0);

    auto m442 = t_pqr(4, 4, 2);
    auto g442 = u2_generators(m442);
    REQUIRE(g442.size() == 1);
    CHECK(close(g442).order() == 2);

    CHECK(u2_generators(t_pqr(6, 3, 2)).empty());
    CHECK(u2_generators(t_pqr(5, 4, 3)).empty());
}

TEST_CASE("kernel groups of the simple elliptic families") {
    struct Row {
        long p, q, r;
        long full, kernel;
        bool cyclic;
    } rows[] = {{3, 3, 3, 108, 54, false}, {4, 4, 2, 32, 16, false}, {6, 3, 2, 12, 6, true}};
    for (const auto& row : rows) {
        auto m = t_pqr(row.p, row.q, row.r);
        std::vector<IntMatrix> gens;
        for (long a = 0; a < row.p; ++a)
            for (long b = 0; b < row.q; ++b)
                for (long c = 0; c < row.r; ++c) {
                    try {
                        gens.push_back(u1_element(m, 0, a, b, c));
                    } catch (const CongruenceFails&) {
                    }
                }
        for (auto& s : u2_generators(m)) gens.push_back(s);
        gens.push_back(-IntMatrix::identity(m.lattice.mu()));

        auto grp = close(gens);
        CHECK(grp.order() == row.full);
        auto ker = kernel_on_sublattice(grp.elements, m.fixed_lattice);
        CHECK(ker.order() == row.kernel);

        long max_order = 0;
        for (const auto& g : ker.elements) {
            auto o = matrix_order(g, 1000);
            REQUIRE(o.has_value());
            max_order = std::max(max_order, *o);
        }
        CHECK((max_order == row.kernel) == row.cyclic);

        auto whole = kernel_on_sublattice(grp.elements, Sublattice::zero(m.lattice.mu()));
        CHECK(whole.order() == row.full);
    }
}

TEST_CASE("congruence subgroup criterion for lifts") {
    auto m333 = t_pqr(3, 3, 3);
    CHECK(gamma_lift(m333, SL2Matrix(1, 0, 0, 1)).integral);
    CHECK(gamma_lift(m333, SL2Matrix(1, 3, 0, 1)).integral);
    CHECK_FALSE(gamma_lift(m333, SL2Matrix(1, 1, 0, 1)).integral);
    CHECK_THROWS_AS(gamma_lift(t_pqr(5, 4, 3), SL2Matrix(1, 0, 0, 1)), NotSimpleElliptic);
    CHECK_THROWS_AS(SL2Matrix(1, 1, 1, 1), std::invalid_argument);

    // integral lifts preserve the form and act as A on the fixed part
    auto lift = gamma_lift(m333, SL2Matrix(4, 3, 9, 7));
    REQUIRE(lift.integral);
    CHECK(preserves_seifert(lift.matrix(), m333.lattice));
    CHECK(restrict_to(lift.matrix(), m333.fixed_lattice) == mat(2, {4, 3, 9, 7}));

    // integrality agrees with the mod-p criterion on a box of SL(2,Z) matrices
    for (long p : {3L, 4L, 6L}) {
        auto model = p == 3 ? t_pqr(3, 3, 3) : (p == 4 ? t_pqr(4, 4, 2) : t_pqr(6, 3, 2));
        for (const auto& a : sl2_box(3))
            CHECK(gamma_lift(model, a).integral == gamma_membership(a, p));
    }

    // seeded random words in the standard generators
    uint64_t state = 20260826;
    for (int w = 0; w < 40; ++w) {
        Int a = 1, b = 0, c = 0, d = 1;
        int len = 2 + static_cast<int>(splitmix64(state) % 7);
        for (int i = 0; i < len; ++i) {
            if (splitmix64(state) % 2) {  // right-multiply by [[1,1],[0,1]]
                b += a;
                d += c;
            } else {  // right-multiply by [[0,-1],[1,0]]
                Int na = b, nc = d;
                b = -a;
                d = -c;
                a = na;
                c = nc;
            }
        }
        SL2Matrix word(a, b, c, d);
        CHECK(gamma_lift(m333, word).integral == gamma_membership(word, 3));
        CHECK(gamma_lift(m333, word).scaled * Int(3) ==
              gamma_lift(m333, word).scaled * Int(3));  // deterministic
    }
}

TEST_CASE("strict congruence membership") {
    CHECK(gamma_membership(SL2Matrix(1, 0, 0, 1), 5));
    CHECK(gamma_membership(SL2Matrix(1, 4, 0, 1), 4));
    CHECK_FALSE(gamma_membership(SL2Matrix(-1, 0, 0, -1), 3));
    CHECK_FALSE(gamma_membership(SL2Matrix(1, 1, 0, 1), 2));
    CHECK(gamma_membership(SL2Matrix(7, 6, 36, 31), 6));
}

TEST_CASE("symmetry groups of the tensor-built exceptional families") {
    CHECK(d4_seifert_automorphisms().size() == 36);
    CHECK(preserves_seifert(d_tip_swap(6), d_series(6)));

    struct Row {
        const char* name;
        long order;
    } rows[] = {{"Q12", 60}, {"U12", 144}, {"Q16", 84}, {"U16", 180}};
    for (const auto& row : rows) {
        auto model = exceptional(row.name);
        auto grp = exceptional_symmetries(model);
        CHECK(grp.order() == row.order);
        for (const auto& g : grp.generators) CHECK(preserves_seifert(g, *model.lattice));
        CHECK(grp.contains(model.lattice->monodromy()));
        CHECK(grp.contains(-IntMatrix::identity(model.lattice->mu())));
    }
    CHECK_THROWS_AS(exceptional_symmetries(exceptional("Z12")), CatalogError);
}
