#pragma once

// Exact arithmetic in small finite fields F_{p^k} and reduced row-echelon
// subspaces over them.
//
// A field element is stored as a single byte: the coefficient vector
// (c_0, ..., c_{k-1}) of its residue modulo the field modulus, packed as the
// base-p integer c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Hence 0 and 1 are the
// additive and multiplicative identities and, for k > 1, the value p encodes
// the class of x. All arithmetic goes through precomputed q x q tables.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mip {

using Scalar = std::uint8_t;
using Vec = std::vector<Scalar>;

class FiniteField {
 public:
  /// Field of order p^k with the lexicographically smallest monic
  /// irreducible modulus (coefficients compared from the leading term down).
  static FiniteField make(unsigned p, unsigned k, unsigned q_cap = 81);

  /// Parses "p" or "p^k".
  static FiniteField parse(const std::string& literal, unsigned q_cap = 81);

  unsigned p() const { return t_->p; }
  unsigned k() const { return t_->k; }
  unsigned q() const { return t_->q; }
  bool is_prime() const { return t_->k == 1; }

  /// Monic modulus, coefficients from degree 0 to degree k. For k = 1 this
  /// is x.
  const std::vector<unsigned>& modulus() const { return t_->modulus; }
  std::string modulus_string() const;
  std::string name() const;  // "F_4" style

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  /// Class of x in F_p[x]/(modulus); for prime fields returns 0.
  Scalar generator() const { return t_->k == 1 ? Scalar{0} : static_cast<Scalar>(t_->p); }
  /// Image of the integer n under Z -> F_p -> F.
  Scalar from_int(long long n) const;

  Scalar add(Scalar a, Scalar b) const { return t_->add[a * t_->q + b]; }
  Scalar sub(Scalar a, Scalar b) const { return t_->add[a * t_->q + t_->neg[b]]; }
  Scalar mul(Scalar a, Scalar b) const { return t_->mul[a * t_->q + b]; }
  Scalar neg(Scalar a) const { return t_->neg[a]; }
  /// Multiplicative inverse; a must be nonzero.
  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, std::uint64_t e) const;
  Scalar frobenius(Scalar a) const { return pow(a, t_->p); }

  std::vector<unsigned> coeffs(Scalar a) const;
  Scalar from_coeffs(std::span<const unsigned> c) const;
  std::string to_string(Scalar a) const;

  // Dense vector kernels used by the linear algebra below.
  /// y <- y + f * x
  void axpy(Scalar f, std::span<const Scalar> x, std::span<Scalar> y) const;
  /// x <- f * x
  void scale(Scalar f, std::span<Scalar> x) const;

  bool operator==(const FiniteField& o) const { return p() == o.p() && k() == o.k(); }

 private:
  struct Tables {
    unsigned p = 0, k = 0, q = 0;
    std::vector<unsigned> modulus;
    std::vector<Scalar> add, mul, neg, inv;
  };
  explicit FiniteField(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

bool is_prime(unsigned n);

/// True iff the polynomial (coefficients low to high, monic) is irreducible
/// over F_p, by trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible_mod_p(const std::vector<unsigned>& poly, unsigned p);

/// Reduced row-echelon basis of a subspace of F^ambient.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FiniteField F, std::size_t ambient_dim) : F_(std::move(F)), ambient_(ambient_dim) {}

  /// Echelon basis of span(vectors). Throws InvalidArgument on ragged input.
  static Subspace echelon(const std::vector<Vec>& vectors, const FiniteField& F,
                          std::optional<std::size_t> ambient_dim = std::nullopt);
  static Subspace full(const FiniteField& F, std::size_t ambient_dim);

  const FiniteField& field() const { return F_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v reduced by every pivot row. Zero iff v lies in the span.
  Vec sift(Vec v) const;
  /// Membership test; on failure optionally returns the sifted residue
  /// scaled so that its leading entry is 1.
  bool contains(std::span<const Scalar> v, Vec* residue = nullptr) const;
  /// Adds v to the span, keeping the basis reduced. Returns true when the
  /// dimension grew.
  bool insert(Vec v);
  bool insert_sifted(Vec residue);  // residue already sifted, nonzero

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
  }
  bool is_subspace_of(const Subspace& o) const;

 private:
  void check_len(std::size_t n) const;
  FiniteField F_ = FiniteField::make(2, 1);
  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;  // strictly increasing
};

enum class Combine { sum, intersection };

Subspace subspace_combine(const Subspace& a, const Subspace& b, Combine mode);
inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  return subspace_combine(a, b, Combine::sum);
}
inline Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  return subspace_combine(a, b, Combine::intersection);
}

/// Coordinates relative to a basis of a quotient U/W: rows of W carry zero
/// tags, rows of the complement carry unit tags. Sifting an element of U
/// returns its coordinates in the complement.
class TaggedEchelon {
 public:
  TaggedEchelon(FiniteField F, std::size_t ambient_dim, std::size_t tag_dim)
      : F_(std::move(F)), ambient_(ambient_dim), tag_dim_(tag_dim) {}

  /// Adds v with the given tag. Returns false if v already lies in the span
  /// (nothing added).
  bool insert(Vec v, Vec tag);
  /// Coordinates of v; throws InvalidArgument if v is outside the span.
  Vec coordinates(Vec v) const;
  bool contains(Vec v) const;
  std::size_t dim() const { return rows_.size(); }

 private:
  struct Row {
    std::size_t pivot;
    Vec v, tag;
  };
  FiniteField F_;
  std::size_t ambient_, tag_dim_;
  std::vector<Row> rows_;  // sorted by pivot, semi-echelon
};

}  // namespace mip
