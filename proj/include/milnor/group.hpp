#pragma once

#include "milnor/catalog.hpp"

namespace milnor {

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& w) : std::runtime_error(w) {}
};
struct NotInvariant : std::runtime_error {
    explicit NotInvariant(const std::string& w) : std::runtime_error(w) {}
};
struct CongruenceFails : std::runtime_error {
    explicit CongruenceFails(const std::string& w) : std::runtime_error(w) {}
};
struct NotSimpleElliptic : std::runtime_error {
    explicit NotSimpleElliptic(const std::string& w) : std::runtime_error(w) {}
};

/// Finite matrix group given by unimodular generators; elements is the full
/// closure, sorted, closed under product and inverse, containing identity.
struct MatGroup {
    std::size_t degree = 0;
    std::vector<IntMatrix> generators;
    std::vector<IntMatrix> elements;

    long order() const { return static_cast<long>(elements.size()); }
    bool contains(const IntMatrix& g) const;
};

/// Breadth-first closure of the generated group; deterministic element order.
/// Throws CapExceeded when more than cap elements appear (likely infinite).
MatGroup close(const std::vector<IntMatrix>& generators, long cap = 100000);

/// g^T L g == L for the Seifert Gram matrix L; unimodularity follows since
/// L is nondegenerate.
bool preserves_seifert(const IntMatrix& g, const BilinearLattice& lat);

/// Matrix of g in the basis of sub; throws NotInvariant if g does not map
/// the sublattice into itself over Z.
IntMatrix restrict_to(const IntMatrix& g, const Sublattice& sub);

/// Element acting as the alpha/beta/gamma-th power of the monodromy on the
/// three arm lattices and as b2~ -> b2~ + delta * b1~ on the fixed part.
/// Requires alpha/p + beta/q + gamma/r == delta/chi mod 1 (CongruenceFails).
IntMatrix u1_element(const TpqrModel& model, long delta, long alpha, long beta, long gamma);

/// Arm-swapping basis permutations: one for p == q, one for q == r; empty
/// when p > q > r. All returned matrices preserve the Seifert form.
std::vector<IntMatrix> u2_generators(const TpqrModel& model);

/// Subgroup of the listed elements restricting to the identity on sub.
MatGroup kernel_on_sublattice(const std::vector<IntMatrix>& elements, const Sublattice& sub);

struct SL2Matrix {
    Int a, b, c, d;
    SL2Matrix(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (a * d - b * c != 1) throw std::invalid_argument("determinant must be 1");
    }
};

/// Rational extension of an SL(2,Z) action on the fixed part (basis b1~, b2~)
/// by the identity on the complementary eigenlattice. matrix = scaled / denom.
struct GammaLift {
    bool integral;
    IntMatrix scaled;
    Int denom;

    IntMatrix matrix() const;  // requires integral
};

/// Simple elliptic models only (NotSimpleElliptic otherwise). integral holds
/// exactly when A == identity mod p.
GammaLift gamma_lift(const TpqrModel& model, const SL2Matrix& A);

/// A == identity mod N entrywise (strictly; -identity does not qualify).
bool gamma_membership(const SL2Matrix& A, const Int& n);

/// Full Seifert-form automorphism group of the rank-4 fork lattice d_series(4),
/// enumerated through its definite intersection form.
std::vector<IntMatrix> d4_seifert_automorphisms();

/// Basis permutation of d_series(k) swapping the two short arms; preserves
/// the Seifert form.
IntMatrix d_tip_swap(long k);

/// For a tensor-built exceptional model: closure of -id, the monodromy, and
/// the factor symmetries id (x) u transported from the fork factor.
MatGroup exceptional_symmetries(const ExceptionalModel& model);

}  // namespace milnor
