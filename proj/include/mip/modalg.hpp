#pragma once

// Modular group algebras FG: element arithmetic, the augmentation ideal
// lattice, structure-constant quotient algebras, kernel sizes, Lie and
// Zassenhaus ideals, and the small group ring.
//
// Elements of FG are coefficient vectors indexed by the element numbers of G.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mip/caps.hpp"
#include "mip/gfq.hpp"
#include "mip/group.hpp"

namespace mip {

class GroupAlgebra {
 public:
  GroupAlgebra(std::shared_ptr<const FiniteGroup> G, FiniteField F);

  const FiniteGroup& group() const { return *G_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return G_; }
  const FiniteField& field() const { return F_; }
  std::size_t dim() const { return G_->order(); }

  Vec zero() const { return Vec(dim(), 0); }
  Vec one() const { return basis(G_->id()); }
  Vec basis(Elem g) const;
  /// g - 1
  Vec augmented(Elem g) const;

  Vec add(const Vec& x, const Vec& y) const;
  Vec sub(const Vec& x, const Vec& y) const;
  Vec mul(const Vec& x, const Vec& y) const;
  /// x * g and g * x; coordinate permutations.
  Vec mul_right(const Vec& x, Elem g) const;
  Vec mul_left(Elem g, const Vec& x) const;
  Vec pow(const Vec& x, std::uint64_t e) const;
  /// Coefficient sum.
  Scalar augmentation(const Vec& x) const;

 private:
  std::shared_ptr<const FiniteGroup> G_;
  FiniteField F_;
};

/// Throws CapExceeded("algebra_order_cap") when |G| is above the cap.
GroupAlgebra group_algebra(const FiniteGroup& G, const FiniteField& F, const Caps& caps = {});
Vec alg_mul(const GroupAlgebra& A, const Vec& x, const Vec& y);

/// Smallest subspace containing `seed` and closed under left and right
/// multiplication by the generators of G (hence by all of FG).
Subspace ideal_closure(const GroupAlgebra& A, const std::vector<Vec>& seed);
bool is_ideal(const GroupAlgebra& A, const Subspace& I);

/// Element n is the n-th power of the augmentation ideal, element 0 being FG
/// itself. The list ends with the first zero power.
std::vector<Subspace> augmentation_powers(const GroupAlgebra& A);

/// Delta(N)FG for a normal subgroup N.
Subspace relative_augmentation_ideal(const GroupAlgebra& A, const Subgroup& N);

/// Element n-1 is the n-th Lie power Delta^[n], for n = 1..n_max.
std::vector<Subspace> lie_power_ideals(const GroupAlgebra& A, std::size_t n_max);

/// Finite-dimensional algebra given by structure constants:
/// e_i e_j = sum_k sc[(i*dim + j)*dim + k] e_k.
struct QuotientAlgebra {
  FiniteField field = FiniteField::make(2, 1);
  std::size_t dim = 0;
  std::vector<Scalar> sc;
  /// Representatives in the ambient algebra, one per basis element.
  std::vector<Vec> lift;
  bool unital = false;
  /// Coordinates of the unit, when unital.
  Vec unit;
  /// Ambient coordinates -> quotient coordinates, for algebras built by
  /// quotient_algebra.
  std::shared_ptr<const TaggedEchelon> echelon;

  /// Coordinates of an ambient element of I modulo J. Throws InvalidArgument
  /// when the element lies outside I or no ambient data is attached.
  Vec coordinates(const Vec& ambient) const;

  Scalar c(std::size_t i, std::size_t j, std::size_t k) const { return sc[(i * dim + j) * dim + k]; }
  Vec mul(const Vec& x, const Vec& y) const;
  Vec pow(const Vec& x, std::uint64_t e) const;
  bool is_associative() const;
};

/// I/J for ideals J <= I of FG; I may be the whole algebra, in which case
/// the result is unital. The basis lifts are the echelon rows of I that are
/// independent modulo J, taken in pivot order, or in `row_order` when given.
QuotientAlgebra quotient_algebra(const GroupAlgebra& A, const Subspace& I, const Subspace& J,
                                 std::span<const std::size_t> row_order = {});

/// Delta^i / Delta^j for 0 <= i < j; powers past the last nonzero one are 0.
QuotientAlgebra augmentation_section(const GroupAlgebra& A, std::size_t i, std::size_t j);
QuotientAlgebra augmentation_section(const GroupAlgebra& A, const std::vector<Subspace>& powers, std::size_t i,
                                     std::size_t j);

/// Powers A = A^1 >= A^2 >= ... of a structure-constant algebra as subspaces
/// of its coordinate space, ending with the first zero power. For a
/// non-nilpotent algebra the list ends at the first repeated power.
std::vector<Subspace> algebra_powers(const QuotientAlgebra& A);
bool is_nilpotent(const QuotientAlgebra& A);

/// D_n = {g : g - 1 in Delta^n} for n = 1.. until trivial (trivial term
/// included last).
std::vector<Subgroup> dimension_subgroups_algebraic(const GroupAlgebra& A);

struct KernelSize {
  std::uint64_t killed = 0;    // x with x^{p^k} = 0
  std::uint64_t surviving = 0; // the rest
  bool operator==(const KernelSize&) const = default;
};

/// Counts the elements of A annihilated by the p^k-th power map. For a
/// nilpotent algebra with A^c = 0 the power map is constant on cosets of
/// A^{c-p^k+1}, so only the quotient by that power is enumerated.
/// Throws CapExceeded("enum_cap") when the enumeration exceeds the cap or the
/// counts do not fit in 64 bits.
KernelSize kernel_size_power_map(const QuotientAlgebra& A, unsigned k, std::uint64_t enum_cap = 1u << 24);
/// Plain enumeration of every element; no reduction.
KernelSize kernel_size_power_map_naive(const QuotientAlgebra& A, unsigned k, std::uint64_t enum_cap = 1u << 24);

/// Z_n(FG): span of x^{p^j} for x in Delta^[i], i p^j >= n, plus Delta^{n+1}.
/// Prime and non-prime fields are both accepted. Throws
/// CapExceeded("enum_cap").
Subspace zassenhaus_ideal(const GroupAlgebra& A, std::size_t n, std::uint64_t enum_cap = 1u << 24);
/// Same, reusing augmentation_powers(A) and at least n Lie powers.
Subspace zassenhaus_ideal(const GroupAlgebra& A, std::size_t n, const std::vector<Subspace>& powers,
                          const std::vector<Subspace>& lie, std::uint64_t enum_cap = 1u << 24);

/// FG / (Delta(FG) Delta(G')FG), unital.
QuotientAlgebra small_group_ring(const GroupAlgebra& A);
/// The ideal Delta(FG) Delta(G')FG.
Subspace small_group_ring_ideal(const GroupAlgebra& A);

/// Dimensions of Delta^n / Delta^{n+1} for n >= 1, from augmentation_powers.
std::vector<std::size_t> jennings_dims(const std::vector<Subspace>& powers);

/// Coefficients of t^1, t^2, ... in prod_n (1 + t^n + ... + t^{(p-1)n})^{d_n},
/// d_n the rank of D_n/D_{n+1} in the given Lazard series.
std::vector<std::size_t> jennings_series(const FiniteGroup& G, const std::vector<Subgroup>& lazard);

}  // namespace mip
