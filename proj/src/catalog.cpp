#include "milnor/catalog.hpp"

#include <numeric>

namespace milnor {

namespace {

std::vector<Int> unit_vec(std::size_t mu, std::size_t i) {
    std::vector<Int> v(mu, 0);
    v[i] = 1;
    return v;
}

std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

std::vector<Int> neg(const std::vector<Int>& a) {
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

// (t^s - 1) / (t - 1)
IntPoly cyclic_quotient(long s) {
    std::vector<Int> c(s, 1);
    return IntPoly(c);
}

IntMatrix rows_matrix(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

// L(x, y) with Lambda the Seifert Gram
Int lvalue(const IntMatrix& lam, const std::vector<Int>& x, const std::vector<Int>& y) {
    Int v = 0;
    std::size_t n = lam.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v += x[i] * lam(i, j) * y[j];
    return v;
}

}  // namespace

BilinearLattice a_series(long l, long n) {
    if (l < 1) throw std::invalid_argument("a_series: l >= 1 required");
    std::size_t mu = (std::size_t)l;
    IntMatrix s = IntMatrix::identity(mu);
    for (std::size_t i = 0; i + 1 < mu; ++i) s(i, i + 1) = -1;
    auto check = BilinearLattice::from_stokes(s, 0);
    if (char_poly(check.monodromy()) != cyclic_quotient(l + 1))
        throw CatalogError("a_series: characteristic polynomial mismatch");
    return BilinearLattice::from_stokes(s, n);
}

BilinearLattice d_series(long k) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("d_series: even k >= 4 required");
    long m = k / 2;
    IntPoly target = cyclic_quotient(k - 1) * IntPoly::t_minus(1) * IntPoly::t_minus(1);
    IntMatrix ref(2, 2);
    ref(0, 0) = -2;
    ref(0, 1) = 1;
    ref(1, 0) = 1;
    ref(1, 1) = -m;
    // candidate vertex orderings of the fork diagram (two tips on a hub)
    std::vector<std::vector<std::pair<long, long>>> orderings;
    {
        std::vector<std::pair<long, long>> a = {{0, 2}, {1, 2}};
        for (long i = 2; i + 1 < k; ++i) a.push_back({i, i + 1});
        orderings.push_back(a);
        std::vector<std::pair<long, long>> b;
        for (long i = 0; i + 2 < k; ++i) b.push_back({i, i + 1});
        b.push_back({k - 3, k - 1});
        orderings.push_back(b);
    }
    for (auto& edges : orderings) {
        IntMatrix s = IntMatrix::identity(k);
        for (auto& [i, j] : edges) s(std::min(i, j), std::max(i, j)) = -1;
        auto lat = BilinearLattice::from_stokes(s, 1);
        if (char_poly(lat.monodromy()) != target) continue;
        auto rad = radical(lat);
        if (rad.rank() != 2) continue;
        if (!gram_isometric(restrict_gram(lat, rad, FormKind::Seifert), ref)) continue;
        return lat;
    }
    throw CatalogError("d_series: no ordering passes validation");
}

TpqrModel t_pqr(long p, long q, long r) {
    if (!(p >= q && q >= r && r >= 2)) throw std::invalid_argument("t_pqr: need p >= q >= r >= 2");
    Rat kappa = Rat(1, p) + Rat(1, q) + Rat(1, r);
    if (kappa > 1) throw KappaTooLarge("t_pqr: 1/p + 1/q + 1/r > 1");
    long chi = std::lcm(std::lcm(p, q), r);
    std::size_t mu = (std::size_t)(p + q + r - 1);
    std::size_t t0 = mu - 2, t1 = mu - 1;
    std::array<long, 3> len = {p - 1, q - 1, r - 1};
    std::array<std::size_t, 3> start = {0, (std::size_t)(p - 1), (std::size_t)(p + q - 2)};

    IntMatrix mm(mu, mu);
    for (int j = 0; j < 3; ++j) {
        std::size_t s = start[j];
        long L = len[j];
        for (long i = 0; i + 1 < L; ++i) mm(s + i + 1, s + i) = 1;   // subdiagonal
        for (long i = 0; i < L; ++i) mm(s + i, s + L - 1) = -1;      // last column
        mm(t0, s) = -1;                                              // M5..M7
        mm(t1, s) = 1;
        mm(s, t0) = 1;                                               // M8..M10
        mm(s, t1) = 1;
    }
    mm(t0, t0) = 3;
    mm(t0, t1) = 2;
    mm(t1, t0) = -2;
    mm(t1, t1) = -1;

    IntMatrix s = stokes_from_monodromy(mm, 2);
    TpqrModel md{p, q, r, kappa, chi, BilinearLattice::from_stokes(s, 2),
                 {}, {}, {}, {}, {}, {}, kappa == 1, {}, {}};
    if (md.lattice.monodromy() != mm) throw CatalogError("t_pqr: monodromy round trip failed");

    IntPoly ne1_poly = cyclic_quotient(p) * cyclic_quotient(q) * cyclic_quotient(r);
    if (char_poly(mm) != ne1_poly * IntPoly::t_minus(1) * IntPoly::t_minus(1))
        throw CatalogError("t_pqr: characteristic polynomial mismatch");

    md.b1_tilde = unit_vec(mu, t0);
    md.b1_tilde[t1] = -1;
    md.b2_tilde = std::vector<Int>(mu, 0);
    for (int j = 0; j < 3; ++j) {
        long sj = (j == 0) ? p : (j == 1) ? q : r;
        for (long i = 1; i < sj; ++i) md.b2_tilde[start[j] + i - 1] = Int(chi) * (sj - i) / sj;
    }
    md.b2_tilde[t0] = chi;
    Int g = 0;
    for (auto& x : md.b2_tilde) g = gcd_int(g, x);
    if (g != 1) throw CatalogError("t_pqr: b2~ coefficients not coprime");

    // M b1~ = b1~ and M b2~ = b2~ + chi(kappa - 1) b1~
    Rat cr = Rat(chi) * (kappa - 1);
    Int c = boost::multiprecision::numerator(cr);
    if (boost::multiprecision::denominator(cr) != 1 || mm.apply(md.b1_tilde) != md.b1_tilde)
        throw CatalogError("t_pqr: b1~ not fixed");
    {
        auto want = md.b2_tilde;
        for (std::size_t i = 0; i < mu; ++i) want[i] += c * md.b1_tilde[i];
        if (mm.apply(md.b2_tilde) != want) throw CatalogError("t_pqr: b2~ image mismatch");
    }

    // Gram of (b1~, b2~): [[0, -chi], [chi, chi^2 (kappa-1)/2]]
    const IntMatrix& lam = md.lattice.seifert();
    Rat corner = Rat(chi) * Rat(chi) * (kappa - 1) / 2;
    if (boost::multiprecision::denominator(corner) != 1)
        throw CatalogError("t_pqr: Gram corner not integral");
    if (lvalue(lam, md.b1_tilde, md.b1_tilde) != 0 ||
        lvalue(lam, md.b1_tilde, md.b2_tilde) != -chi ||
        lvalue(lam, md.b2_tilde, md.b1_tilde) != chi ||
        lvalue(lam, md.b2_tilde, md.b2_tilde) != boost::multiprecision::numerator(corner))
        throw CatalogError("t_pqr: fixed-part Gram mismatch");

    // cyclic arm action: delta_s + b1~ -> delta_{s+1} -> ... -> -(sum) -> back
    for (int j = 0; j < 3; ++j) {
        std::size_t sj = start[j];
        long L = len[j];
        std::vector<std::vector<Int>> cyc;
        cyc.push_back(add(unit_vec(mu, sj), md.b1_tilde));
        for (long i = 1; i < L; ++i) cyc.push_back(unit_vec(mu, sj + i));
        std::vector<Int> sum(mu, 0);
        for (long i = 0; i < L; ++i) sum = add(sum, unit_vec(mu, sj + i));
        cyc.push_back(neg(sum));
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (mm.apply(cyc[i]) != cyc[(i + 1) % cyc.size()])
                throw CatalogError("t_pqr: arm cycle broken");
    }

    md.ne1_lattice = eigenlattice(md.lattice, ne1_poly);
    if (md.ne1_lattice.rank() != mu - 2) throw CatalogError("t_pqr: wrong ne1 rank");
    for (int j = 0; j < 3; ++j) {
        std::vector<std::vector<Int>> rows = {md.b1_tilde};
        for (long i = 0; i < len[j]; ++i) rows.push_back(unit_vec(mu, start[j] + i));
        md.arm_lattices[j] = Sublattice::from_rows(rows_matrix(rows));
        md.eigen_arms[j] = lattice_intersect(md.arm_lattices[j], md.ne1_lattice);
        if (md.eigen_arms[j].rank() != (std::size_t)len[j])
            throw CatalogError("t_pqr: wrong eigen arm rank");
    }
    md.fixed_lattice = Sublattice{rows_matrix({md.b1_tilde, md.b2_tilde})};
    if (!md.fixed_lattice.is_saturated()) throw CatalogError("t_pqr: fixed part not saturated");

    if (md.simple_elliptic) {
        // chi = p here; gamma1 = b1~ - p delta_2, gamma2 = b2~ - p delta_mu
        md.gamma1 = md.b1_tilde;
        md.gamma1[1] -= p;
        md.gamma2 = md.b2_tilde;
        md.gamma2[t1] -= p;
        if (!md.ne1_lattice.contains(md.gamma1) || !md.ne1_lattice.contains(md.gamma2))
            throw CatalogError("t_pqr: gamma vectors outside ne1 part");

        // generators of the ne1 lattice
        std::vector<std::vector<Int>> gens;
        auto diff = [&](std::size_t a, std::size_t b) {  // e_a - e_b
            auto v = unit_vec(mu, a);
            v[b] -= 1;
            return v;
        };
        {
            auto v = unit_vec(mu, 0);
            v[1] += p - 1;
            gens.push_back(v);
            for (long i = 2; i < p - 1; ++i) gens.push_back(diff(i, i - 1));
            v = std::vector<Int>(mu, 0);
            v[1] = p;
            v[t0] = -1;
            v[t1] = 1;
            gens.push_back(v);
        }
        {
            auto v = unit_vec(mu, p - 1);
            v[p] += q - 1;
            gens.push_back(v);
            for (long i = p + 1; i < p + q - 2; ++i) gens.push_back(diff(i, i - 1));
            v = std::vector<Int>(mu, 0);
            v[1] = p / q;
            v[p] = -1;
            gens.push_back(v);
        }
        if (r >= 3) {
            auto v = unit_vec(mu, p + q - 2);
            v[p + q - 1] += r - 1;
            gens.push_back(v);
            for (long i = p + q; i < p + q + r - 3; ++i) gens.push_back(diff(i, i - 1));
            v = std::vector<Int>(mu, 0);
            v[1] = p / r;
            v[p + q - 1] = -1;
            gens.push_back(v);
        } else {
            // length-1 arm: the cycle forces the generator (p/r) delta_2 + delta_{mu-2}
            auto v = std::vector<Int>(mu, 0);
            v[1] = p / r;
            v[mu - 3] = 1;
            gens.push_back(v);
        }
        if (Sublattice::from_rows(rows_matrix(gens)) != md.ne1_lattice)
            throw CatalogError("t_pqr: ne1 generators mismatch");

        // splitting Ml = Ml_{!=1} + Z delta_2 + Z delta_mu
        IntMatrix split = IntMatrix::vstack(
            md.ne1_lattice.basis, rows_matrix({unit_vec(mu, 1), unit_vec(mu, t1)}));
        Int d = split.det();
        if (d != 1 && d != -1) throw CatalogError("t_pqr: splitting not unimodular");
    }
    return md;
}

namespace {

IntPoly phi_product(const std::vector<long>& ms) {
    IntPoly p = IntPoly::constant(1);
    for (long m : ms) p = p * cyclotomic(m);
    return p;
}

}  // namespace

ExceptionalModel exceptional(const std::string& name) {
    ExceptionalModel md;
    md.name = name;
    std::optional<long> m_d;  // D-factor parameter for the Gram reference
    if (name == "Z12") {
        md.p1 = phi_product({22, 2});
        md.p2 = phi_product({2});
    } else if (name == "Q12") {
        md.p1 = phi_product({15, 3});
        md.p2 = phi_product({3});
        md.tensor_factors = {{2, 6}};
    } else if (name == "U12") {
        md.p1 = phi_product({12, 6, 4, 2});
        md.p2 = phi_product({4, 2});
        md.tensor_factors = {{3, 4}};
    } else if (name == "Z18") {
        md.p1 = phi_product({34, 2});
        md.p2 = phi_product({2});
    } else if (name == "Q16") {
        md.p1 = phi_product({21, 3});
        md.p2 = phi_product({3});
        md.tensor_factors = {{2, 8}};
    } else if (name == "U16") {
        md.p1 = phi_product({15, 5});
        md.p2 = phi_product({5});
        md.tensor_factors = {{4, 4}};
    } else {
        throw UnknownFamily("exceptional: unknown name " + name);
    }

    if (md.tensor_factors) {
        auto [l, k] = *md.tensor_factors;
        long m = k / 2;
        auto al = a_series(l, 0);
        md.lattice = tensor(al, d_series(k));
        if (char_poly(md.lattice->monodromy()) != md.p1 * md.p2)
            throw CatalogError("exceptional: characteristic polynomial mismatch");
        md.b3 = eigenlattice(*md.lattice, md.p2);
        if (md.b3->rank() != 2 * (std::size_t)md.p2.degree())
            throw CatalogError("exceptional: wrong B3 rank");
        IntMatrix ref(2, 2);
        ref(0, 0) = -2;
        ref(0, 1) = 1;
        ref(1, 0) = 1;
        ref(1, 1) = -m;
        md.b3_gram_reference = IntMatrix::kron(al.seifert(), ref);
    } else {
        IntMatrix rad(2, 2);
        rad(0, 0) = (name == "Z12") ? -4 : -6;
        rad(0, 1) = 1;
        rad(1, 0) = 1;
        rad(1, 1) = -3;
        md.radical_gram = rad;
    }
    return md;
}

std::optional<OrlikDecomposition> find_orlik(const ExceptionalModel& model, long bound) {
    if (!model.lattice || !model.b3) throw CatalogError("find_orlik: full lattice unavailable");
    if (bound <= 0) return std::nullopt;
    const IntMatrix& m = model.lattice->monodromy();
    std::size_t mu = m.rows();
    std::size_t d1 = (std::size_t)model.p1.degree(), d2 = (std::size_t)model.p2.degree();

    auto orbit = [&](const std::vector<Int>& v, std::size_t d) {
        IntMatrix o(d, mu);
        std::vector<Int> cur = v;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < mu; ++j) o(i, j) = cur[j];
            cur = m.apply(cur);
        }
        return o;
    };

    // a1 candidates: support <= 2, entries in [-bound, bound], deterministic order
    std::vector<IntMatrix> o1s;
    std::vector<std::vector<Int>> a1s;
    {
        std::vector<std::vector<Int>> cands;
        for (std::size_t i = 0; i < mu; ++i)
            for (long x = 1; x <= bound; ++x) {
                auto v = std::vector<Int>(mu, 0);
                v[i] = x;
                cands.push_back(v);
            }
        for (std::size_t i = 0; i < mu; ++i)
            for (std::size_t j = i + 1; j < mu; ++j)
                for (long x = -bound; x <= bound; ++x)
                    for (long y = 1; y <= bound; ++y) {
                        if (x == 0) continue;
                        auto v = std::vector<Int>(mu, 0);
                        v[i] = x;
                        v[j] = y;
                        cands.push_back(v);
                    }
        for (auto& v : cands) {
            IntMatrix o = orbit(v, d1);
            if (rank(o) != d1) continue;
            auto sub = Sublattice::from_rows(o);
            if (sub.rank() != d1 || !sub.is_saturated()) continue;
            a1s.push_back(v);
            o1s.push_back(o);
        }
    }

    // a2 candidates: small coordinates in the B3 basis
    const IntMatrix& bt = model.b3->basis;
    std::size_t rk = model.b3->rank();
    std::vector<long> c(rk, -bound);
    while (true) {
        std::vector<Int> a2(mu, 0);
        for (std::size_t i = 0; i < rk; ++i)
            for (std::size_t j = 0; j < mu; ++j) a2[j] += Int(c[i]) * bt(i, j);
        IntMatrix o2 = orbit(a2, d2);
        if (rank(o2) == d2) {
            for (std::size_t i = 0; i < a1s.size(); ++i) {
                Int det = IntMatrix::vstack(o1s[i], o2).det();
                if (det == 1 || det == -1)
                    return OrlikDecomposition{a1s[i], a2, Sublattice::from_rows(o1s[i]),
                                              Sublattice::from_rows(o2)};
            }
        }
        std::size_t k = 0;
        while (k < rk && c[k] == bound) c[k++] = -bound;
        if (k == rk) break;
        ++c[k];
    }
    return std::nullopt;
}

}  // namespace milnor
