#include "mip/modalg.hpp"

#include <algorithm>
#include <limits>

#include "mip/error.hpp"

namespace mip {

namespace {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar c) { return c == 0; });
}

std::vector<Elem> algebra_gens(const FiniteGroup& G) {
  std::vector<Elem> g;
  for (Elem s : G.gens())
    if (s != G.id() && std::find(g.begin(), g.end(), s) == g.end()) g.push_back(s);
  if (g.empty() && G.order() > 1)
    for (Elem x = 0; x < G.order(); ++x)
      if (x != G.id()) g.push_back(x);
  return g;
}

// q^e, or nullopt past 2^63.
std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > (std::uint64_t{1} << 63) / q) return std::nullopt;
    r *= q;
  }
  return r;
}

// Enumerates every F-combination of `basis` and calls f on it.
template <class Fn>
void for_each_combination(const FiniteField& F, const std::vector<Vec>& basis, std::size_t len, Fn&& f) {
  const std::size_t d = basis.size();
  std::vector<unsigned> digit(d, 0);
  Vec x(len, 0);
  const unsigned q = F.q();
  for (;;) {
    f(x);
    std::size_t i = 0;
    while (i < d) {
      const unsigned next = digit[i] + 1 == q ? 0 : digit[i] + 1;
      F.axpy(F.sub(static_cast<Scalar>(next), static_cast<Scalar>(digit[i])), basis[i], x);
      digit[i] = next;
      if (next != 0) break;
      ++i;
    }
    if (i == d) return;
  }
}

}  // namespace

// ------------------------------------------------------------ GroupAlgebra

GroupAlgebra::GroupAlgebra(std::shared_ptr<const FiniteGroup> G, FiniteField F) : G_(std::move(G)), F_(std::move(F)) {
  if (!G_) throw InvalidArgument("group algebra needs a group");
}

Vec GroupAlgebra::basis(Elem g) const {
  Vec v = zero();
  v[g] = 1;
  return v;
}

Vec GroupAlgebra::augmented(Elem g) const {
  Vec v = zero();
  v[g] = F_.add(v[g], 1);
  v[G_->id()] = F_.sub(v[G_->id()], 1);
  return v;
}

Vec GroupAlgebra::add(const Vec& x, const Vec& y) const {
  Vec r = x;
  F_.axpy(1, y, r);
  return r;
}

Vec GroupAlgebra::sub(const Vec& x, const Vec& y) const {
  Vec r = x;
  F_.axpy(F_.neg(1), y, r);
  return r;
}

Vec GroupAlgebra::mul(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  Vec out(n, 0);
  std::vector<Elem> ny;
  for (Elem b = 0; b < n; ++b)
    if (y[b]) ny.push_back(b);
  const auto& T = G_->table();
  for (Elem a = 0; a < n; ++a) {
    if (!x[a]) continue;
    const Elem* row = T.data() + static_cast<std::size_t>(a) * n;
    for (Elem b : ny) {
      Scalar& o = out[row[b]];
      o = F_.add(o, F_.mul(x[a], y[b]));
    }
  }
  return out;
}

Vec GroupAlgebra::mul_right(const Vec& x, Elem g) const {
  Vec out(dim(), 0);
  for (Elem h = 0; h < dim(); ++h)
    if (x[h]) out[G_->mul(h, g)] = x[h];
  return out;
}

Vec GroupAlgebra::mul_left(Elem g, const Vec& x) const {
  Vec out(dim(), 0);
  for (Elem h = 0; h < dim(); ++h)
    if (x[h]) out[G_->mul(g, h)] = x[h];
  return out;
}

Vec GroupAlgebra::pow(const Vec& x, std::uint64_t e) const {
  Vec r = one(), b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

Scalar GroupAlgebra::augmentation(const Vec& x) const {
  Scalar s = 0;
  for (Scalar c : x) s = F_.add(s, c);
  return s;
}

GroupAlgebra group_algebra(const FiniteGroup& G, const FiniteField& F, const Caps& caps) {
  if (G.order() > caps.algebra_order_cap)
    throw CapExceeded("algebra_order_cap", "group algebra of a group of order " + std::to_string(G.order()) +
                                               " exceeds the cap " + std::to_string(caps.algebra_order_cap));
  if (F.q() > caps.field_cap)
    throw CapExceeded("field_cap", "field of order " + std::to_string(F.q()) + " exceeds the cap");
  return GroupAlgebra(std::make_shared<const FiniteGroup>(G), F);
}

Vec alg_mul(const GroupAlgebra& A, const Vec& x, const Vec& y) { return A.mul(x, y); }

// ------------------------------------------------------------------ ideals

Subspace ideal_closure(const GroupAlgebra& A, const std::vector<Vec>& seed) {
  Subspace S(A.field(), A.dim());
  std::vector<Vec> queue;
  for (const auto& v : seed)
    if (S.insert(v)) queue.push_back(v);
  const auto gens = algebra_gens(A.group());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Elem s : gens) {
      Vec r = A.mul_right(queue[i], s);
      if (S.insert(r)) queue.push_back(std::move(r));
      Vec l = A.mul_left(s, queue[i]);
      if (S.insert(l)) queue.push_back(std::move(l));
    }
  }
  return S;
}

bool is_ideal(const GroupAlgebra& A, const Subspace& I) {
  const auto gens = algebra_gens(A.group());
  for (const auto& r : I.rows())
    for (Elem s : gens)
      if (!I.contains(A.mul_right(r, s)) || !I.contains(A.mul_left(s, r))) return false;
  return true;
}

std::vector<Subspace> augmentation_powers(const GroupAlgebra& A) {
  const std::size_t n = A.dim();
  std::vector<Subspace> P{Subspace::full(A.field(), n)};
  std::vector<Vec> d1;
  for (Elem g = 0; g < n; ++g)
    if (g != A.group().id()) d1.push_back(A.augmented(g));
  P.push_back(Subspace::echelon(d1, A.field(), n));
  const auto gens = algebra_gens(A.group());
  while (P.back().dim() > 0) {
    Subspace next(A.field(), n);
    for (const auto& u : P.back().rows())
      for (Elem s : gens) next.insert(A.sub(A.mul_right(u, s), u));
    if (next.dim() == P.back().dim()) throw InvalidArgument("augmentation ideal is not nilpotent (G is not a p-group of the field characteristic)");
    P.push_back(std::move(next));
  }
  return P;
}

Subspace relative_augmentation_ideal(const GroupAlgebra& A, const Subgroup& N) {
  const FiniteGroup& G = A.group();
  if (!is_normal(G, N)) throw InvalidArgument("relative augmentation ideal needs a normal subgroup");
  std::vector<Vec> seed;
  for (Elem u : N.gens.empty() ? N.elems : N.gens)
    if (u != G.id()) seed.push_back(A.augmented(u));
  return ideal_closure(A, seed);
}

std::vector<Subspace> lie_power_ideals(const GroupAlgebra& A, std::size_t n_max) {
  std::vector<Subspace> L;
  if (n_max == 0) return L;
  L.push_back(augmentation_powers(A).at(1));
  const auto gens = algebra_gens(A.group());
  while (L.size() < n_max) {
    std::vector<Vec> seed;
    for (const auto& u : L.back().rows())
      for (Elem s : gens) {
        Vec c = A.sub(A.mul_left(s, u), A.mul_right(u, s));
        if (!is_zero(c)) seed.push_back(std::move(c));
      }
    L.push_back(ideal_closure(A, seed));
  }
  return L;
}

// ------------------------------------------------------- QuotientAlgebra

Vec QuotientAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec out(dim, 0);
  std::vector<std::size_t> ny;
  for (std::size_t j = 0; j < dim; ++j)
    if (y[j]) ny.push_back(j);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!x[i]) continue;
    for (std::size_t j : ny) {
      const Scalar f = field.mul(x[i], y[j]);
      field.axpy(f, std::span<const Scalar>(sc.data() + (i * dim + j) * dim, dim), out);
    }
  }
  return out;
}

Vec QuotientAlgebra::pow(const Vec& x, std::uint64_t e) const {
  if (e == 0) {
    if (!unital) throw InvalidArgument("zeroth power in a non-unital algebra");
    return unit;
  }
  Vec r, b = x;
  bool have = false;
  while (e) {
    if (e & 1) {
      r = have ? mul(r, b) : b;
      have = true;
    }
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

Vec QuotientAlgebra::coordinates(const Vec& ambient) const {
  if (!echelon) throw InvalidArgument("algebra carries no ambient coordinates");
  return echelon->coordinates(ambient);
}

bool QuotientAlgebra::is_associative() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        Vec ei(dim, 0), ej(dim, 0), ek(dim, 0);
        ei[i] = ej[j] = ek[k] = 1;
        if (mul(mul(ei, ej), ek) != mul(ei, mul(ej, ek))) return false;
      }
  return true;
}

QuotientAlgebra quotient_algebra(const GroupAlgebra& A, const Subspace& I, const Subspace& J,
                                 std::span<const std::size_t> row_order) {
  const FiniteField& F = A.field();
  const std::size_t n = A.dim();
  if (I.ambient_dim() != n || J.ambient_dim() != n) throw InvalidArgument("quotient_algebra: ambient mismatch");
  if (!J.is_subspace_of(I)) throw InvalidArgument("quotient_algebra: J is not contained in I");
  std::vector<std::size_t> order;
  if (row_order.empty()) {
    for (std::size_t i = 0; i < I.dim(); ++i) order.push_back(i);
  } else {
    order.assign(row_order.begin(), row_order.end());
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i || sorted.size() != I.dim()) throw InvalidArgument("quotient_algebra: bad row order");
  }
  Subspace S = J;
  QuotientAlgebra Q;
  Q.field = F;
  for (std::size_t idx : order)
    if (S.insert(I.rows()[idx])) Q.lift.push_back(I.rows()[idx]);
  const std::size_t d = Q.lift.size();
  Q.dim = d;
  auto E = std::make_shared<TaggedEchelon>(F, n, d);
  TaggedEchelon& T = *E;
  for (const auto& r : J.rows()) T.insert(r, Vec(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    Vec tag(d, 0);
    tag[i] = 1;
    T.insert(Q.lift[i], std::move(tag));
  }
  Q.echelon = E;
  Q.sc.assign(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec c = T.coordinates(A.mul(Q.lift[i], Q.lift[j]));
      std::copy(c.begin(), c.end(), Q.sc.begin() + static_cast<std::ptrdiff_t>((i * d + j) * d));
    }
  if (I.dim() == n && d > 0) {
    Q.unital = true;
    Q.unit = T.coordinates(A.one());
  }
  return Q;
}

QuotientAlgebra augmentation_section(const GroupAlgebra& A, const std::vector<Subspace>& powers, std::size_t i,
                                     std::size_t j) {
  if (i >= j) throw InvalidArgument("augmentation_section: need i < j");
  auto at = [&](std::size_t m) -> const Subspace& { return powers[std::min(m, powers.size() - 1)]; };
  return quotient_algebra(A, at(i), at(j));
}

QuotientAlgebra augmentation_section(const GroupAlgebra& A, std::size_t i, std::size_t j) {
  return augmentation_section(A, augmentation_powers(A), i, j);
}

std::vector<Subspace> algebra_powers(const QuotientAlgebra& A) {
  const std::size_t d = A.dim;
  std::vector<Subspace> P{Subspace::full(A.field, d)};
  while (P.back().dim() > 0) {
    Subspace next(A.field, d);
    for (const auto& u : P.back().rows())
      for (std::size_t j = 0; j < d; ++j) {
        Vec e(d, 0);
        e[j] = 1;
        next.insert(A.mul(u, e));
      }
    if (next.dim() == P.back().dim()) break;
    P.push_back(std::move(next));
  }
  return P;
}

bool is_nilpotent(const QuotientAlgebra& A) { return algebra_powers(A).back().dim() == 0; }

// --------------------------------------------------- dimension subgroups

std::vector<Subgroup> dimension_subgroups_algebraic(const GroupAlgebra& A) {
  const FiniteGroup& G = A.group();
  const auto P = augmentation_powers(A);
  std::vector<Subgroup> D;
  for (std::size_t k = 1; k < P.size(); ++k) {
    std::vector<Elem> el;
    for (Elem g = 0; g < G.order(); ++g)
      if (P[k].contains(A.augmented(g))) el.push_back(g);
    D.push_back(subgroup_from_elements(G, std::move(el)));
    if (D.back().order() == 1) break;
  }
  return D;
}

// ------------------------------------------------------------ kernel sizes

KernelSize kernel_size_power_map_naive(const QuotientAlgebra& A, unsigned k, std::uint64_t enum_cap) {
  const auto total = checked_pow(A.field.q(), A.dim);
  if (!total || *total > enum_cap)
    throw CapExceeded("enum_cap", "kernel size enumeration of " + std::to_string(A.field.q()) + "^" +
                                      std::to_string(A.dim) + " elements exceeds the cap");
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k; ++i) e *= A.field.p();
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < A.dim; ++i) {
    Vec b(A.dim, 0);
    b[i] = 1;
    basis.push_back(std::move(b));
  }
  KernelSize ks;
  for_each_combination(A.field, basis, A.dim, [&](const Vec& x) {
    if (is_zero(A.pow(x, e)))
      ++ks.killed;
    else
      ++ks.surviving;
  });
  return ks;
}

KernelSize kernel_size_power_map(const QuotientAlgebra& A, unsigned k, std::uint64_t enum_cap) {
  const auto P = algebra_powers(A);
  if (P.back().dim() != 0) return kernel_size_power_map_naive(A, k, enum_cap);
  const std::size_t c = P.size();  // A^c = 0
  const unsigned q = A.field.q();
  const auto total = checked_pow(q, A.dim);
  if (!total) throw CapExceeded("enum_cap", "kernel size counts exceed 64 bits");
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k && e < c; ++i) e *= A.field.p();
  if (e >= c) return {*total, 0};
  const Subspace& tail = P[c - e];  // A^{c-e+1}
  Subspace S = tail;
  std::vector<Vec> reps;
  for (std::size_t i = 0; i < A.dim; ++i) {
    Vec b(A.dim, 0);
    b[i] = 1;
    if (S.insert(b)) reps.push_back(std::move(b));
  }
  const auto count = checked_pow(q, reps.size());
  if (!count || *count > enum_cap)
    throw CapExceeded("enum_cap", "kernel size enumeration of " + std::to_string(q) + "^" +
                                      std::to_string(reps.size()) + " elements exceeds the cap");
  const std::uint64_t mult = *checked_pow(q, tail.dim());
  std::uint64_t killed = 0;
  for_each_combination(A.field, reps, A.dim, [&](const Vec& x) {
    if (is_zero(A.pow(x, e))) ++killed;
  });
  return {killed * mult, *total - killed * mult};
}

// ------------------------------------------------------------- Zassenhaus

Subspace zassenhaus_ideal(const GroupAlgebra& A, std::size_t n, const std::vector<Subspace>& powers,
                          const std::vector<Subspace>& lie, std::uint64_t enum_cap) {
  if (n == 0) throw InvalidArgument("zassenhaus_ideal: n must be positive");
  if (lie.size() < n) throw InvalidArgument("zassenhaus_ideal: not enough Lie powers");
  const FiniteField& F = A.field();
  auto power_at = [&](std::size_t m) -> const Subspace& { return powers[std::min(m, powers.size() - 1)]; };
  Subspace Z = power_at(n + 1);
  for (const auto& r : lie[n - 1].rows()) Z.insert(r);
  for (std::uint64_t P = F.p(); P <= n; P *= F.p()) {
    const std::size_t i = (n + P - 1) / P;
    const Subspace& W = lie[i - 1];
    if ((P - 1) * i >= n + 1) continue;
    // x^P mod Delta^{n+1} only depends on x mod Delta^m.
    const std::size_t m = n + 1 - (P - 1) * i;
    if (m <= i) continue;
    Subspace S = subspace_intersection(W, power_at(m));
    std::vector<Vec> reps;
    for (const auto& r : W.rows())
      if (S.insert(r)) reps.push_back(r);
    const auto count = checked_pow(F.q(), reps.size());
    if (!count || *count > enum_cap)
      throw CapExceeded("enum_cap", "Zassenhaus enumeration of " + std::to_string(F.q()) + "^" +
                                        std::to_string(reps.size()) + " elements exceeds the cap");
    for_each_combination(F, reps, A.dim(), [&](const Vec& x) { Z.insert(A.pow(x, P)); });
  }
  return Z;
}

Subspace zassenhaus_ideal(const GroupAlgebra& A, std::size_t n, std::uint64_t enum_cap) {
  return zassenhaus_ideal(A, n, augmentation_powers(A), lie_power_ideals(A, n), enum_cap);
}

// ------------------------------------------------------ small group ring

Subspace small_group_ring_ideal(const GroupAlgebra& A) {
  const FiniteGroup& G = A.group();
  const Subspace K = relative_augmentation_ideal(A, derived_subgroup(G, whole_group(G)));
  std::vector<Vec> seed;
  for (Elem s : algebra_gens(G))
    for (const auto& k : K.rows()) {
      Vec v = A.sub(A.mul_left(s, k), k);
      if (!is_zero(v)) seed.push_back(std::move(v));
    }
  return ideal_closure(A, seed);
}

QuotientAlgebra small_group_ring(const GroupAlgebra& A) {
  return quotient_algebra(A, Subspace::full(A.field(), A.dim()), small_group_ring_ideal(A));
}

// ---------------------------------------------------------------- Jennings

std::vector<std::size_t> jennings_dims(const std::vector<Subspace>& powers) {
  std::vector<std::size_t> d;
  for (std::size_t n = 1; n + 1 < powers.size(); ++n) d.push_back(powers[n].dim() - powers[n + 1].dim());
  return d;
}

std::vector<std::size_t> jennings_series(const FiniteGroup& G, const std::vector<Subgroup>& lazard) {
  const unsigned p = G.prime();
  std::vector<std::size_t> poly{1};
  if (p < 2) return {};
  for (std::size_t n = 1; n < lazard.size(); ++n) {
    const unsigned d = log_p(lazard[n - 1].order() / lazard[n].order(), p);
    for (unsigned r = 0; r < d; ++r) {
      std::vector<std::size_t> next(poly.size() + (p - 1) * n, 0);
      for (std::size_t a = 0; a < poly.size(); ++a)
        for (unsigned b = 0; b < p; ++b) next[a + b * n] += poly[a];
      poly = std::move(next);
    }
  }
  return std::vector<std::size_t>(poly.begin() + 1, poly.end());
}

}  // namespace mip
