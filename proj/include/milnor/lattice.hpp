#pragma once

#include "milnor/exact.hpp"

#include <iosfwd>

namespace milnor {

struct NotUnipotentUpper : std::runtime_error {
    explicit NotUnipotentUpper(const std::string& w) : std::runtime_error(w) {}
};
struct NoIntegralStokes : std::runtime_error {
    explicit NoIntegralStokes(const std::string& w) : std::runtime_error(w) {}
};
struct DoesNotDescend : std::runtime_error {
    explicit DoesNotDescend(const std::string& w) : std::runtime_error(w) {}
};

/// Rank-mu lattice with Stokes matrix S, Seifert form L, monodromy M and
/// intersection form I in the distinguished (standard) basis. n is the
/// variable-count parity parameter; only n mod 4 enters the sign rules.
/// Conventions:
///   L-Gram      = (-1)^{(n+1)(n+2)/2} S^T
///   monodromy M = (-1)^{n+1} S^{-1} S^T  (column-action matrix)
///   I-Gram      = (-1)^{n(n+1)/2} (S + (-1)^n S^T)
class BilinearLattice {
public:
    static BilinearLattice from_stokes(IntMatrix s, long n);

    std::size_t mu() const { return stokes_.rows(); }
    long n() const { return n_; }
    const IntMatrix& stokes() const { return stokes_; }
    const IntMatrix& seifert() const { return seifert_; }
    const IntMatrix& monodromy() const { return monodromy_; }
    const IntMatrix& intersection() const { return intersection_; }

    bool operator==(const BilinearLattice& o) const {
        return n_ % 4 == o.n_ % 4 && stokes_ == o.stokes_;
    }

private:
    BilinearLattice() : n_(0) {}
    long n_;
    IntMatrix stokes_, seifert_, monodromy_, intersection_;
};

/// Unique unipotent upper-triangular integer S with (-1)^{n+1} S^{-1} S^T = M.
IntMatrix stokes_from_monodromy(const IntMatrix& m, long n);

/// Saturated sublattice of some ambient BilinearLattice; rows of basis are
/// ambient coordinates, HNF-canonical. Value type: the ambient lattice is
/// passed explicitly to the operations that need it.
struct Sublattice {
    IntMatrix basis;

    std::size_t rank() const { return basis.rows(); }
    std::size_t ambient_rank() const { return basis.cols(); }
    bool is_saturated() const;
    /// Coordinates of v in this basis if v lies in the span over Z.
    std::optional<std::vector<Int>> coords(const std::vector<Int>& v) const;
    bool contains(const std::vector<Int>& v) const { return coords(v).has_value(); }

    static Sublattice from_rows(const IntMatrix& rows);  // HNF-canonicalized, zero rows dropped
    static Sublattice full(std::size_t mu);
    static Sublattice zero(std::size_t mu);

    bool operator==(const Sublattice& o) const = default;
};

/// Matrix of b -> b - (-1)^{n(n+1)/2} I(d,b) d.
IntMatrix picard_lefschetz(const BilinearLattice& lat, const std::vector<Int>& d);

/// Thom-Sebastiani: Stokes matrices multiply as a Kronecker product in
/// lexicographic index order, parity parameters add plus one.
BilinearLattice tensor(const BilinearLattice& f, const BilinearLattice& g);

/// Add a square of a new variable: S fixed, n -> n+1 (so M negates).
BilinearLattice stabilize(const BilinearLattice& lat);

/// Saturated ker p(M) inside the lattice.
Sublattice eigenlattice(const BilinearLattice& lat, const IntPoly& p);

/// Rad(I) = {v : I(v,.) = 0}, saturated.
Sublattice radical(const BilinearLattice& lat);

enum class FormKind { Seifert, Intersection };

/// Gram matrix of the chosen form on the sublattice basis.
IntMatrix restrict_gram(const BilinearLattice& lat, const Sublattice& sub, FormKind form);
IntMatrix restrict_gram(const IntMatrix& gram, const Sublattice& sub);

/// Gram of the form induced on sub_big / sub_small in the complement basis
/// picked by HNF pivot positions. Throws DoesNotDescend unless sub_small
/// pairs to zero against sub_big on both sides.
IntMatrix quotient_gram(const BilinearLattice& lat, const Sublattice& sub_small,
                        const Sublattice& sub_big, FormKind form, const Int& scale = 1);

/// Intersection of the spans, saturated in the common ambient lattice.
Sublattice lattice_intersect(const Sublattice& a, const Sublattice& b);

/// Sum of the spans (not saturated unless it happens to be).
Sublattice lattice_sum(const Sublattice& a, const Sublattice& b);

/// Matrix of g in the sublattice basis, if g maps the span into itself
/// over Z; nullopt otherwise.
std::optional<IntMatrix> restrict_matrix(const IntMatrix& g, const Sublattice& sub);

/// Interchange format: JSON object {"mu": .., "n": .., "stokes": [row-major]}.
/// Derived matrices are never serialized; they are recomputed on load.
std::string save_lattice(const BilinearLattice& lat);
BilinearLattice load_lattice(const std::string& json_text);

}  // namespace milnor
