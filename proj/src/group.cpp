#include "milnor/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace milnor {

namespace {

IntMatrix unimodular_inverse(const IntMatrix& g) {
    auto x = solve_linear(g, IntMatrix::identity(g.rows()));
    if (!x || !x->is_integral()) throw std::invalid_argument("generator is not unimodular");
    return x->to_int();
}

std::vector<Int> unit_vec(std::size_t mu, std::size_t i) {
    std::vector<Int> v(mu);
    v[i] = 1;
    return v;
}

void add_scaled(std::vector<Int>& v, const std::vector<Int>& w, const Int& c) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
}

// basis^T * c for row-basis sublattices
std::vector<Int> embed(const Sublattice& sub, const std::vector<Int>& c) {
    std::vector<Int> v(sub.ambient_rank());
    for (std::size_t k = 0; k < sub.rank(); ++k)
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += c[k] * sub.basis(k, j);
    return v;
}

void set_column(IntMatrix& m, std::size_t j, const std::vector<Int>& v) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = v[i];
}

}  // namespace

bool MatGroup::contains(const IntMatrix& g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

MatGroup close(const std::vector<IntMatrix>& generators, long cap) {
    if (generators.empty()) throw std::invalid_argument("need at least one generator");
    std::size_t deg = generators[0].rows();
    std::vector<IntMatrix> gens;
    for (const auto& g : generators) {
        if (!g.is_square() || g.rows() != deg) throw std::invalid_argument("degree mismatch");
        gens.push_back(g);
        gens.push_back(unimodular_inverse(g));
    }

    std::set<IntMatrix> seen;
    std::deque<IntMatrix> frontier;
    seen.insert(IntMatrix::identity(deg));
    frontier.push_back(IntMatrix::identity(deg));
    while (!frontier.empty()) {
        IntMatrix f = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : gens) {
            IntMatrix h = f * g;
            if (seen.insert(h).second) {
                if (static_cast<long>(seen.size()) > cap) throw CapExceeded("closure cap hit");
                frontier.push_back(std::move(h));
            }
        }
    }

    MatGroup result;
    result.degree = deg;
    result.generators = generators;
    result.elements.assign(seen.begin(), seen.end());
    return result;
}

bool preserves_seifert(const IntMatrix& g, const BilinearLattice& lat) {
    if (!g.is_square() || g.rows() != lat.mu()) throw std::invalid_argument("size mismatch");
    return g.transpose() * lat.seifert() * g == lat.seifert();
}

IntMatrix restrict_to(const IntMatrix& g, const Sublattice& sub) {
    auto r = restrict_matrix(g, sub);
    if (!r) throw NotInvariant("sublattice is not invariant");
    return *r;
}

IntMatrix u1_element(const TpqrModel& model, long delta, long alpha, long beta, long gamma) {
    const std::size_t mu = model.lattice.mu();
    const long orders[3] = {model.p, model.q, model.r};
    const long starts[3] = {0, model.p - 1, model.p + model.q - 2};
    const long raw[3] = {alpha, beta, gamma};

    long e[3];
    Rat c0 = Rat(-delta, model.chi);
    for (int j = 0; j < 3; ++j) {
        e[j] = ((raw[j] % orders[j]) + orders[j]) % orders[j];
        c0 += Rat(e[j], orders[j]);
    }
    if (denominator(c0) != 1) throw CongruenceFails("alpha/p + beta/q + gamma/r != delta/chi mod 1");

    IntMatrix g = IntMatrix::zero(mu, mu);
    for (int j = 0; j < 3; ++j) {
        const Sublattice& arm = model.arm_lattices[j];
        IntMatrix power = restrict_to(model.lattice.monodromy(), arm).pow(e[j]);
        for (long i = 0; i < orders[j] - 1; ++i) {
            std::size_t idx = static_cast<std::size_t>(starts[j] + i);
            auto c = arm.coords(unit_vec(mu, idx));
            if (!c) throw std::logic_error("arm basis vector outside arm lattice");
            set_column(g, idx, embed(arm, power.apply(*c)));
        }
    }

    // image of the gluing vector: the b1~ defect of each arm power plus the
    // integer multiple of b1~ fixed by the congruence
    std::vector<Int> v = unit_vec(mu, mu - 2);
    add_scaled(v, model.b1_tilde, -numerator(c0));
    for (int j = 0; j < 3; ++j) {
        if (e[j] == 0) continue;
        add_scaled(v, model.b1_tilde, Int(1));
        for (long i = 0; i < e[j]; ++i) v[static_cast<std::size_t>(starts[j] + i)] += 1;
    }
    set_column(g, mu - 2, v);
    add_scaled(v, model.b1_tilde, Int(-1));
    set_column(g, mu - 1, v);

    if (!preserves_seifert(g, model.lattice)) throw std::logic_error("u1 element violates the form");
    return g;
}

std::vector<IntMatrix> u2_generators(const TpqrModel& model) {
    const std::size_t mu = model.lattice.mu();
    std::vector<IntMatrix> out;
    auto block_swap = [&](long s1, long s2, long len) {
        IntMatrix g = IntMatrix::identity(mu);
        for (long i = 0; i < len; ++i) {
            std::size_t a = static_cast<std::size_t>(s1 + i), b = static_cast<std::size_t>(s2 + i);
            g(a, a) = 0;
            g(b, b) = 0;
            g(a, b) = 1;
            g(b, a) = 1;
        }
        if (!preserves_seifert(g, model.lattice)) throw std::logic_error("swap violates the form");
        out.push_back(g);
    };
    if (model.p == model.q) block_swap(0, model.p - 1, model.p - 1);
    if (model.q == model.r) block_swap(model.p - 1, model.p + model.q - 2, model.q - 1);
    return out;
}

MatGroup kernel_on_sublattice(const std::vector<IntMatrix>& elements, const Sublattice& sub) {
    MatGroup result;
    result.degree = elements.empty() ? sub.ambient_rank() : elements[0].rows();
    for (const auto& g : elements) {
        if (sub.rank() == 0) {
            result.elements.push_back(g);
            continue;
        }
        auto r = restrict_matrix(g, sub);
        if (r && r->is_identity()) result.elements.push_back(g);
    }
    std::sort(result.elements.begin(), result.elements.end());
    result.generators = result.elements;
    return result;
}

IntMatrix GammaLift::matrix() const {
    if (!integral) throw std::logic_error("lift is not integral");
    IntMatrix m = scaled;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) /= denom;
    return m;
}

GammaLift gamma_lift(const TpqrModel& model, const SL2Matrix& a) {
    if (!model.simple_elliptic) throw NotSimpleElliptic("kappa must be 1");
    const std::size_t mu = model.lattice.mu();
    const Int p = model.p;

    // unimodular splitting: the non-unit eigenlattice plus delta_2, delta_mu
    IntMatrix basis = IntMatrix::zero(mu, mu);
    for (std::size_t i = 0; i + 2 < mu; ++i)
        for (std::size_t j = 0; j < mu; ++j) basis(i, j) = model.ne1_lattice.basis(i, j);
    basis(mu - 2, 1) = 1;
    basis(mu - 1, mu - 1) = 1;
    Int d = basis.det();
    if (d != 1 && d != -1) throw std::logic_error("splitting basis is not unimodular");

    // p * images of the basis vectors under the lift
    IntMatrix img = basis * p;
    std::vector<Int> r1(mu), r2(mu);
    r1[1] = p * a.a;
    r1[mu - 1] = p * a.c;
    add_scaled(r1, model.gamma1, a.a - 1);
    add_scaled(r1, model.gamma2, a.c);
    r2[1] = p * a.b;
    r2[mu - 1] = p * a.d;
    add_scaled(r2, model.gamma1, a.b);
    add_scaled(r2, model.gamma2, a.d - 1);
    for (std::size_t j = 0; j < mu; ++j) {
        img(mu - 2, j) = r1[j];
        img(mu - 1, j) = r2[j];
    }

    auto y = solve_linear(basis, img);  // basis * (p F^T) = p * images
    if (!y || !y->is_integral()) throw std::logic_error("lift solve failed");

    GammaLift lift;
    lift.scaled = y->to_int().transpose();
    lift.denom = p;
    lift.integral = true;
    for (const Int& e : lift.scaled.entries())
        if (e % p != 0) lift.integral = false;
    return lift;
}

bool gamma_membership(const SL2Matrix& a, const Int& n) {
    return (a.a - 1) % n == 0 && a.b % n == 0 && a.c % n == 0 && (a.d - 1) % n == 0;
}

std::vector<IntMatrix> d4_seifert_automorphisms() {
    BilinearLattice lat = d_series(4);
    IntMatrix sym = lat.seifert() + lat.seifert().transpose();
    std::vector<IntMatrix> out;
    for (const auto& g : definite_aut(sym))
        if (preserves_seifert(g, lat)) out.push_back(g);
    return out;
}

IntMatrix d_tip_swap(long k) {
    BilinearLattice lat = d_series(k);
    IntMatrix g = IntMatrix::identity(lat.mu());
    g(0, 0) = 0;
    g(1, 1) = 0;
    g(0, 1) = 1;
    g(1, 0) = 1;
    if (!preserves_seifert(g, lat)) throw std::logic_error("tip swap violates the form");
    return g;
}

MatGroup exceptional_symmetries(const ExceptionalModel& model) {
    if (!model.tensor_factors || !model.lattice)
        throw CatalogError("family has no tensor model: " + model.name);
    const auto [l, k] = *model.tensor_factors;
    IntMatrix left = IntMatrix::identity(static_cast<std::size_t>(l));

    std::vector<IntMatrix> gens;
    gens.push_back(-IntMatrix::identity(model.lattice->mu()));
    gens.push_back(model.lattice->monodromy());
    std::vector<IntMatrix> factor =
        k == 4 ? d4_seifert_automorphisms() : std::vector<IntMatrix>{d_tip_swap(k)};
    for (const auto& u : factor) {
        IntMatrix g = IntMatrix::kron(left, u);
        if (!preserves_seifert(g, *model.lattice))
            throw std::logic_error("factor symmetry violates the form");
        gens.push_back(g);
    }
    return close(gens);
}

}  // namespace milnor
