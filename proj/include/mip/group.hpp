#pragma once

// Cayley-table finite groups and the group-theoretic operators built on them.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mip/words.hpp"

namespace mip {

using Elem = std::uint32_t;

class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Takes an n x n row-major multiplication table with identity at index
  /// `id`. Inverses are derived from the table.
  FiniteGroup(std::size_t n, std::vector<Elem> mul, Elem id, std::vector<Elem> gens);

  std::size_t order() const { return n_; }
  Elem id() const { return id_; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem pow(Elem a, long long e) const;
  Elem conj(Elem x, Elem g) const { return mul(inv(g), mul(x, g)); }  // g^-1 x g
  Elem comm(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  std::size_t elem_order(Elem a) const;

  const std::vector<Elem>& gens() const { return gens_; }
  const std::vector<Elem>& table() const { return mul_; }

  /// Defining presentation, when the group came from one; gens() follow its
  /// generator order.
  const std::optional<Presentation>& presentation() const { return presentation_; }
  void set_presentation(Presentation p) { presentation_ = std::move(p); }

  /// Optional per-element names (e.g. normal-form words).
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }

  /// Evaluates a word on gens().
  Elem eval(const Word& w) const;

  /// Checks associativity (exhaustive for n <= 512, else `samples` random
  /// triples), identity and inverses. Throws ConstructionError on failure.
  void validate(std::uint64_t samples = 100000) const;

  /// p if the order is a power of the prime p (and > 1), 0 otherwise;
  /// the trivial group reports 1.
  unsigned prime() const;

  bool is_abelian() const;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  Elem id_ = 0;
  std::vector<Elem> gens_;
  std::optional<Presentation> presentation_;
  std::vector<std::string> labels_;
};

/// Subgroup of a parent group, stored as a sorted element set plus a
/// generating set.
struct Subgroup {
  std::vector<Elem> elems;  // sorted
  std::vector<Elem> gens;

  std::size_t order() const { return elems.size(); }
  bool contains(Elem g) const;
  bool operator==(const Subgroup& o) const { return elems == o.elems; }
  bool is_subgroup_of(const Subgroup& o) const;
};

struct AbelianType {
  std::vector<std::uint64_t> orders;  // non-increasing prime powers
  bool operator==(const AbelianType&) const = default;
  std::uint64_t order() const;
  std::string to_string() const;
};

struct ConjClass {
  Elem rep = 0;
  std::vector<Elem> elems;  // sorted
  std::size_t length() const { return elems.size(); }
};

struct ClassData {
  std::vector<ConjClass> classes;        // ordered by least representative
  std::vector<Subgroup> centralizers;    // C_G(rep) per class
  std::vector<std::size_t> class_of;     // element -> class index
};

struct CharSeries {
  std::vector<Subgroup> lower_central;   // gamma_1 = G, ..., last = trivial
  Subgroup derived;
  Subgroup center;
  Subgroup frattini;
  std::size_t nilpotency_class = 0;
};

struct QuotientGroup {
  FiniteGroup group;
  std::vector<Elem> projection;  // parent element -> coset index
};

struct SubgroupAsGroup {
  FiniteGroup group;
  std::vector<Elem> embedding;   // local index -> parent element
  std::vector<Elem> local;       // parent element -> local index, or kNone
  static constexpr Elem kNone = static_cast<Elem>(-1);
};

enum class PowerMode { agemo, omega, omega_rel };

// -- subgroup machinery
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup whole_group(const FiniteGroup& G);
Subgroup subgroup_generated(const FiniteGroup& G, std::span<const Elem> seed);
/// Wraps an element set known to be a subgroup, computing generators.
Subgroup subgroup_from_elements(const FiniteGroup& G, std::vector<Elem> elems);
Subgroup join(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);
Subgroup intersect(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);
bool is_normal(const FiniteGroup& G, const Subgroup& H);
/// Normal closure of `seed` inside the subgroup `within`.
Subgroup normal_closure(const FiniteGroup& G, const Subgroup& within, std::span<const Elem> seed);
/// [A, B], computed inside <A, B>.
Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);
Subgroup derived_subgroup(const FiniteGroup& G, const Subgroup& H);
Subgroup center(const FiniteGroup& G);
Subgroup centralizer(const FiniteGroup& G, Elem g);
Subgroup frattini(const FiniteGroup& G, const Subgroup& H);

// -- operations
CharSeries char_series(const FiniteGroup& G);
Subgroup agemo_omega(const FiniteGroup& G, const Subgroup& N, unsigned k, PowerMode mode);
/// Agemo / omega of a subgroup H (not of G): <h^{p^k} : h in H>,
/// <h in H : h^{p^k} = 1>.
Subgroup agemo(const FiniteGroup& G, const Subgroup& H, unsigned k);
Subgroup omega(const FiniteGroup& G, const Subgroup& H, unsigned k);
QuotientGroup quotient_group(const FiniteGroup& G, const Subgroup& N);
SubgroupAsGroup as_group(const FiniteGroup& G, const Subgroup& H);
ClassData conjugacy_classes(const FiniteGroup& G);
AbelianType abelian_type(const FiniteGroup& A);
/// Type of the abelian section X/Y of G.
AbelianType abelian_type(const FiniteGroup& G, const Subgroup& X, const Subgroup& Y);
std::vector<Subgroup> dimension_subgroups_lazard(const FiniteGroup& G, std::size_t n_max = 0);
std::size_t min_generators(const FiniteGroup& G);
std::size_t min_generators(const FiniteGroup& G, const Subgroup& H);
std::size_t exponent(const FiniteGroup& G);
/// Cyclic normal subgroup with cyclic quotient, if one exists.
std::optional<Subgroup> is_metacyclic(const FiniteGroup& G);
/// rank -> number of conjugacy classes of maximal elementary abelian
/// subgroups. Throws CapExceeded("elem_ab_cap") when too many subgroups.
std::map<std::size_t, std::size_t> maximal_elem_abelian_classes(const FiniteGroup& G,
                                                               std::uint64_t cap = 1000000);
/// Largest r with G = C_p^r x U. Throws CapExceeded("direct_factor_cap").
std::size_t max_elem_abelian_direct_factor(const FiniteGroup& G, std::uint64_t cap = 2187);

/// Direct product table; generators are those of G followed by those of H.
FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H);

/// Greedy minimal subset of G.gens() (in order) generating G.
std::vector<std::size_t> generating_subset(const FiniteGroup& G);

/// Exponent of p in n, when n is a power of p; throws otherwise.
unsigned log_p(std::uint64_t n, unsigned p);

}  // namespace mip
