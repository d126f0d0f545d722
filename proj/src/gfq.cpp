#include "mip/gfq.hpp"

#include <algorithm>
#include <cctype>

#include "mip/error.hpp"

namespace mip {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Remainder of a modulo monic b over F_p; coefficient vectors low to high.
std::vector<unsigned> poly_mod(std::vector<unsigned> a, const std::vector<unsigned>& b, unsigned p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned lead = a.back() % p;
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0)
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = (a[shift + i] + p * p - lead * b[i] % p) % p;
    a.pop_back();
  }
  return a;
}

std::vector<unsigned> digits(unsigned idx, unsigned p, unsigned len) {
  std::vector<unsigned> d(len);
  for (unsigned i = 0; i < len; ++i) {
    d[i] = idx % p;
    idx /= p;
  }
  return d;
}

unsigned ipow(unsigned b, unsigned e) {
  unsigned r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<unsigned>& poly, unsigned p) {
  const unsigned deg = static_cast<unsigned>(poly.size()) - 1;
  if (deg == 0) return false;
  for (unsigned d = 1; d <= deg / 2; ++d) {
    const unsigned count = ipow(p, d);
    for (unsigned idx = 0; idx < count; ++idx) {
      auto div = digits(idx, p, d);
      div.push_back(1);
      auto r = poly_mod(poly, div, p);
      if (std::all_of(r.begin(), r.end(), [](unsigned c) { return c == 0; })) return false;
    }
  }
  return true;
}

FiniteField FiniteField::make(unsigned p, unsigned k, unsigned q_cap) {
  if (!mip::is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidArgument("field degree must be at least 1");
  if (k > 4) throw InvalidArgument("field degree above 4 is not supported");
  const unsigned q = ipow(p, k);
  if (q > q_cap || q > 256)
    throw CapExceeded("field_cap", "field of order " + std::to_string(q) + " exceeds the cap " +
                                       std::to_string(q_cap));

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->k = k;
  t->q = q;

  if (k == 1) {
    t->modulus = {0, 1};
  } else {
    for (unsigned idx = 0; idx < q; ++idx) {
      auto poly = digits(idx, p, k);
      poly.push_back(1);
      if (is_irreducible_mod_p(poly, p)) {
        t->modulus = poly;
        break;
      }
    }
  }

  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);
  std::vector<std::vector<unsigned>> dig(q);
  for (unsigned a = 0; a < q; ++a) dig[a] = digits(a, p, k);
  auto pack = [&](const std::vector<unsigned>& c) {
    unsigned v = 0;
    for (unsigned i = c.size(); i-- > 0;) v = v * p + c[i] % p;
    return static_cast<Scalar>(v);
  };
  for (unsigned a = 0; a < q; ++a) {
    std::vector<unsigned> n(k);
    for (unsigned i = 0; i < k; ++i) n[i] = (p - dig[a][i]) % p;
    t->neg[a] = pack(n);
    for (unsigned b = 0; b < q; ++b) {
      std::vector<unsigned> s(k);
      for (unsigned i = 0; i < k; ++i) s[i] = (dig[a][i] + dig[b][i]) % p;
      t->add[a * q + b] = pack(s);
      std::vector<unsigned> prod(2 * k - 1, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + dig[a][i] * dig[b][j]) % p;
      auto r = k == 1 ? prod : poly_mod(prod, t->modulus, p);
      r.resize(k, 0);
      t->mul[a * q + b] = pack(r);
    }
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (t->mul[a * q + b] == 1) {
        t->inv[a] = static_cast<Scalar>(b);
        break;
      }
  return FiniteField(std::move(t));
}

FiniteField FiniteField::parse(const std::string& literal, unsigned q_cap) {
  std::size_t pos = 0;
  auto read_uint = [&](const char* what) {
    if (pos >= literal.size() || !std::isdigit(static_cast<unsigned char>(literal[pos])))
      throw ParseError(std::string("expected ") + what + " in field literal '" + literal + "'", pos);
    unsigned long v = 0;
    while (pos < literal.size() && std::isdigit(static_cast<unsigned char>(literal[pos]))) {
      v = v * 10 + static_cast<unsigned>(literal[pos++] - '0');
      if (v > 1000000) throw ParseError("field literal out of range: '" + literal + "'", pos);
    }
    return static_cast<unsigned>(v);
  };
  const unsigned p = read_uint("characteristic");
  unsigned k = 1;
  if (pos < literal.size()) {
    if (literal[pos] != '^') throw ParseError("malformed field literal '" + literal + "'", pos);
    ++pos;
    k = read_uint("degree");
  }
  if (pos != literal.size()) throw ParseError("trailing characters in field literal '" + literal + "'", pos);
  return make(p, k, q_cap);
}

std::string FiniteField::modulus_string() const {
  std::string s;
  const auto& m = modulus();
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || m[i] != 1) s += std::to_string(m[i]);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::string FiniteField::name() const {
  return "F_" + std::to_string(q());
}

Scalar FiniteField::from_int(long long n) const {
  const long long p = t_->p;
  return static_cast<Scalar>(((n % p) + p) % p);
}

Scalar FiniteField::inv(Scalar a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  return t_->inv[a];
}

Scalar FiniteField::pow(Scalar a, std::uint64_t e) const {
  Scalar r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<unsigned> FiniteField::coeffs(Scalar a) const {
  return digits(a, t_->p, t_->k);
}

Scalar FiniteField::from_coeffs(std::span<const unsigned> c) const {
  if (c.size() > t_->k) throw InvalidArgument("too many coefficients for field element");
  unsigned v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * t_->p + c[i] % t_->p;
  return static_cast<Scalar>(v);
}

std::string FiniteField::to_string(Scalar a) const {
  if (is_prime()) return std::to_string(a);
  const auto c = coeffs(a);
  std::string s;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

void FiniteField::axpy(Scalar f, std::span<const Scalar> x, std::span<Scalar> y) const {
  if (f == 0) return;
  const std::size_t n = x.size();
  if (t_->q == 2) {
    for (std::size_t i = 0; i < n; ++i) y[i] ^= x[i];
    return;
  }
  const unsigned q = t_->q;
  const Scalar* mrow = t_->mul.data() + f * q;
  const Scalar* add = t_->add.data();
  for (std::size_t i = 0; i < n; ++i)
    if (x[i]) y[i] = add[y[i] * q + mrow[x[i]]];
}

void FiniteField::scale(Scalar f, std::span<Scalar> x) const {
  if (f == 1) return;
  const Scalar* mrow = t_->mul.data() + f * t_->q;
  for (auto& v : x) v = mrow[v];
}

// ---------------------------------------------------------------- Subspace

void Subspace::check_len(std::size_t n) const {
  if (n != ambient_)
    throw InvalidArgument("vector of length " + std::to_string(n) + " in ambient space of dimension " +
                          std::to_string(ambient_));
}

Subspace Subspace::echelon(const std::vector<Vec>& vectors, const FiniteField& F,
                           std::optional<std::size_t> ambient_dim) {
  std::size_t amb = ambient_dim ? *ambient_dim : (vectors.empty() ? 0 : vectors.front().size());
  Subspace s(F, amb);
  for (const auto& v : vectors) {
    if (v.size() != amb) throw InvalidArgument("ragged input to echelon_basis");
    s.insert(v);
  }
  return s;
}

Subspace Subspace::full(const FiniteField& F, std::size_t ambient_dim) {
  Subspace s(F, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vec v(ambient_dim, 0);
    v[i] = 1;
    s.rows_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::sift(Vec v) const {
  check_len(v.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (c) F_.axpy(F_.neg(c), rows_[r], v);
  }
  return v;
}

bool Subspace::contains(std::span<const Scalar> v, Vec* residue) const {
  Vec r = sift(Vec(v.begin(), v.end()));
  auto it = std::find_if(r.begin(), r.end(), [](Scalar c) { return c != 0; });
  if (it == r.end()) return true;
  if (residue) {
    F_.scale(F_.inv(*it), r);
    *residue = std::move(r);
  }
  return false;
}

bool Subspace::insert(Vec v) {
  v = sift(std::move(v));
  if (std::all_of(v.begin(), v.end(), [](Scalar c) { return c == 0; })) return false;
  return insert_sifted(std::move(v));
}

bool Subspace::insert_sifted(Vec v) {
  const auto it = std::find_if(v.begin(), v.end(), [](Scalar c) { return c != 0; });
  if (it == v.end()) return false;
  const std::size_t piv = static_cast<std::size_t>(it - v.begin());
  F_.scale(F_.inv(*it), v);
  for (auto& row : rows_) {
    const Scalar c = row[piv];
    if (c) F_.axpy(F_.neg(c), v, row);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::is_subspace_of(const Subspace& o) const {
  if (ambient_ != o.ambient_) return false;
  for (const auto& r : rows_)
    if (!o.contains(r)) return false;
  return true;
}

Subspace subspace_combine(const Subspace& a, const Subspace& b, Combine mode) {
  if (a.ambient_dim() != b.ambient_dim())
    throw InvalidArgument("subspace_combine: ambient dimensions differ");
  const FiniteField& F = a.field();
  const std::size_t n = a.ambient_dim();
  if (mode == Combine::sum) {
    Subspace s = a;
    for (const auto& r : b.rows()) s.insert(r);
    return s;
  }
  // Stack (x, x) for x in A and (y, 0) for y in B. After elimination, the rows
  // whose left half vanishes carry a basis of the intersection on the right.
  Subspace stacked(F, 2 * n);
  for (const auto& r : a.rows()) {
    Vec v(2 * n);
    std::copy(r.begin(), r.end(), v.begin());
    std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
    stacked.insert(std::move(v));
  }
  for (const auto& r : b.rows()) {
    Vec v(2 * n, 0);
    std::copy(r.begin(), r.end(), v.begin());
    stacked.insert(std::move(v));
  }
  Subspace out(F, n);
  for (std::size_t i = 0; i < stacked.dim(); ++i) {
    if (stacked.pivots()[i] < n) continue;
    const auto& row = stacked.rows()[i];
    out.insert(Vec(row.begin() + static_cast<std::ptrdiff_t>(n), row.end()));
  }
  return out;
}

// ----------------------------------------------------------- TaggedEchelon

bool TaggedEchelon::insert(Vec v, Vec tag) {
  if (v.size() != ambient_ || tag.size() != tag_dim_) throw InvalidArgument("TaggedEchelon: bad lengths");
  for (const auto& r : rows_) {
    const Scalar c = v[r.pivot];
    if (c) {
      const Scalar f = F_.neg(c);
      F_.axpy(f, r.v, v);
      F_.axpy(f, r.tag, tag);
    }
  }
  const auto it = std::find_if(v.begin(), v.end(), [](Scalar c) { return c != 0; });
  if (it == v.end()) return false;
  const std::size_t piv = static_cast<std::size_t>(it - v.begin());
  const Scalar s = F_.inv(*it);
  F_.scale(s, v);
  F_.scale(s, tag);
  // Keep rows semi-reduced: clear the new pivot column from older rows so a
  // single pass in pivot order suffices when sifting.
  for (auto& r : rows_) {
    const Scalar c = r.v[piv];
    if (c) {
      const Scalar f = F_.neg(c);
      F_.axpy(f, v, r.v);
      F_.axpy(f, tag, r.tag);
    }
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), piv,
                              [](const Row& r, std::size_t p) { return r.pivot < p; });
  rows_.insert(pos, Row{piv, std::move(v), std::move(tag)});
  return true;
}

Vec TaggedEchelon::coordinates(Vec v) const {
  if (v.size() != ambient_) throw InvalidArgument("TaggedEchelon: bad length");
  Vec tag(tag_dim_, 0);
  for (const auto& r : rows_) {
    const Scalar c = v[r.pivot];
    if (c) {
      F_.axpy(F_.neg(c), r.v, v);
      F_.axpy(c, r.tag, tag);
    }
  }
  if (std::any_of(v.begin(), v.end(), [](Scalar c) { return c != 0; }))
    throw InvalidArgument("element lies outside the coordinatized subspace");
  return tag;
}

bool TaggedEchelon::contains(Vec v) const {
  for (const auto& r : rows_) {
    const Scalar c = v[r.pivot];
    if (c) F_.axpy(F_.neg(c), r.v, v);
  }
  return std::all_of(v.begin(), v.end(), [](Scalar c) { return c == 0; });
}

}  // namespace mip
