#pragma once

// Exhaustive isomorphism search with explicit, independently verified
// witnesses: finite groups by generator images, nilpotent structure-constant
// algebras by images of a generating set.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mip/group.hpp"
#include "mip/modalg.hpp"

namespace mip {

struct IsoWitness {
  enum class Kind { group, algebra };
  Kind kind = Kind::group;

  /// Groups: image of each generator of the source (source.gens() order).
  std::vector<Elem> group_images;
  /// Full bijection source element -> target element.
  std::vector<Elem> group_map;

  /// Algebras: source generators and their images, in coordinates.
  std::vector<Vec> algebra_sources;
  std::vector<Vec> algebra_images;
  /// Image of each standard basis vector of the source.
  std::vector<Vec> linear_map;
};

struct IsoSearchStats {
  std::uint64_t assignments = 0;  // complete generator assignments tested
};

/// Searches images for a generating subset of G.gens() among the elements of
/// H with the same order and class length, in increasing element order, so
/// the first hit is the lexicographically least. std::nullopt means the
/// exhaustive search found nothing. Throws CapExceeded("iso_search_cap").
std::optional<IsoWitness> group_isomorphic(const FiniteGroup& G, const FiniteGroup& H,
                                           std::uint64_t cap = 10000000, IsoSearchStats* stats = nullptr);

/// A and B nilpotent, same field. Generators of A are the standard basis
/// vectors independent modulo A^2; their images range over all tuples of B
/// independent modulo B^2. Throws InvalidArgument for non-nilpotent input
/// and CapExceeded("iso_search_cap") when q^(dim B * #generators) is too big.
std::optional<IsoWitness> nilpotent_algebra_iso(const QuotientAlgebra& A, const QuotientAlgebra& B,
                                                std::uint64_t cap = 10000000, IsoSearchStats* stats = nullptr);

/// Group witness: checks phi(xy) = phi(x)phi(y) for all pairs and bijectivity.
bool verify_witness(const IsoWitness& w, const FiniteGroup& G, const FiniteGroup& H);
/// Algebra witness: extends the generator images multiplicatively, then
/// checks multiplicativity on all basis pairs and linear bijectivity.
bool verify_witness(const IsoWitness& w, const QuotientAlgebra& A, const QuotientAlgebra& B);

/// Builds an algebra witness from generator images, without any search.
IsoWitness algebra_witness(std::vector<Vec> sources, std::vector<Vec> images);

/// JSON rendering; group images are printed as words of the target when it
/// carries labels.
std::string witness_json(const IsoWitness& w, const FiniteGroup* target = nullptr, const FiniteField* field = nullptr);

}  // namespace mip
