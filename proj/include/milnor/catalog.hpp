#pragma once

#include "milnor/enumeration.hpp"

#include <array>
#include <optional>
#include <string>

namespace milnor {

struct CatalogError : std::runtime_error {
    explicit CatalogError(const std::string& w) : std::runtime_error(w) {}
};
struct KappaTooLarge : std::runtime_error {
    explicit KappaTooLarge(const std::string& w) : std::runtime_error(w) {}
};
struct UnknownFamily : std::runtime_error {
    explicit UnknownFamily(const std::string& w) : std::runtime_error(w) {}
};

/// A_l lattice: chain Stokes matrix, validated char poly (t^{l+1}-1)/(t-1).
BilinearLattice a_series(long l, long n = 0);

/// D_k curve lattice (k = 2m even): fork diagram, validated char poly
/// (t^{k-1}-1)(t-1) and radical Gram [[-2,1],[1,-m]].
BilinearLattice d_series(long k);

/// T_{pqr} model, n = 2, mu = p+q+r-1. Basis vectors delta_1..delta_mu are
/// indexed 0..mu-1; the two eigenvalue-1 directions sit at mu-2, mu-1.
struct TpqrModel {
    long p, q, r;
    Rat kappa;  // 1/p + 1/q + 1/r
    long chi;   // lcm(p, q, r)
    BilinearLattice lattice;

    std::vector<Int> b1_tilde, b2_tilde;    // Z-basis of the eigenvalue-1 part
    std::array<Sublattice, 3> arm_lattices; // Z b1~ + arm deltas
    std::array<Sublattice, 3> eigen_arms;   // arm cap (eigenvalue != 1 part)
    Sublattice ne1_lattice;                 // saturated eigenvalue != 1 part
    Sublattice fixed_lattice;               // rows b1~, b2~ (not canonicalized)

    bool simple_elliptic;                   // kappa == 1
    std::vector<Int> gamma1, gamma2;        // simple elliptic only, else empty
};

TpqrModel t_pqr(long p, long q, long r);

/// One of the six exceptional families. For Z12/Z18 only the curve data
/// (p1, p2, radical Gram) is modeled; lattice and b3 are absent.
struct ExceptionalModel {
    std::string name;
    std::optional<BilinearLattice> lattice;
    IntPoly p1, p2;  // char poly = p1 * p2, p2 | p1, p1 squarefree
    std::optional<std::pair<long, long>> tensor_factors;  // (l, 2m)
    std::optional<Sublattice> b3;           // kernel of p2(M), saturated
    IntMatrix b3_gram_reference;            // expected Seifert Gram on b3
    std::optional<IntMatrix> radical_gram;  // curve-data families
};

ExceptionalModel exceptional(const std::string& name);

/// Splitting of the full lattice into two cyclic monodromy modules of ranks
/// deg p1, deg p2, found by deterministic search over small vectors.
struct OrlikDecomposition {
    std::vector<Int> a1, a2;
    Sublattice b1, b2;
};

std::optional<OrlikDecomposition> find_orlik(const ExceptionalModel& model, long bound);

}  // namespace milnor
