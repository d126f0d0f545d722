#include "mip/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "mip/error.hpp"

namespace mip {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const {
    std::size_t h = v.size();
    for (Elem e : v) h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

// Elements of <gens> by right multiplication closure.
std::vector<Elem> closure(const FiniteGroup& G, std::span<const Elem> gens, std::vector<char>& mask) {
  mask.assign(G.order(), 0);
  std::vector<Elem> out{G.id()};
  mask[G.id()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem s : gens) {
      const Elem y = G.mul(out[i], s);
      if (!mask[y]) {
        mask[y] = 1;
        out.push_back(y);
      }
    }
  return out;
}

unsigned require_p(const FiniteGroup& G) {
  const unsigned p = G.prime();
  if (p == 0) throw InvalidArgument("group order " + std::to_string(G.order()) + " is not a prime power");
  return p;
}

// p-power of the group prime; the trivial group behaves like any p.
std::uint64_t ppow(unsigned p, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

}  // namespace

unsigned log_p(std::uint64_t n, unsigned p) {
  unsigned k = 0;
  while (n > 1) {
    if (p < 2 || n % p) throw InvalidArgument(std::to_string(n) + " is not a power of " + std::to_string(p));
    n /= p;
    ++k;
  }
  return k;
}

// ------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(std::size_t n, std::vector<Elem> mul, Elem id, std::vector<Elem> gens)
    : n_(n), mul_(std::move(mul)), inv_(n), id_(id), gens_(std::move(gens)) {
  if (mul_.size() != n * n) throw ConstructionError("multiplication table has wrong size");
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n; ++b)
      if (mul_[a * n + b] == id) {
        inv_[a] = static_cast<Elem>(b);
        found = true;
        break;
      }
    if (!found) throw ConstructionError("element without inverse in multiplication table");
  }
}

Elem FiniteGroup::pow(Elem a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Elem r = id_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::size_t FiniteGroup::elem_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != id_; x = mul(x, a)) ++k;
  return k;
}

Elem FiniteGroup::eval(const Word& w) const {
  Elem r = id_;
  for (const auto& l : w.letters()) {
    const Elem g = gens_.at(l.gen);
    r = mul(r, l.inverse ? inv(g) : g);
  }
  return r;
}

void FiniteGroup::validate(std::uint64_t samples) const {
  for (std::size_t a = 0; a < n_; ++a) {
    if (mul(id_, static_cast<Elem>(a)) != a || mul(static_cast<Elem>(a), id_) != a)
      throw ConstructionError("identity law fails");
    if (mul(static_cast<Elem>(a), inv(static_cast<Elem>(a))) != id_) throw ConstructionError("inverse law fails");
  }
  auto check = [&](Elem a, Elem b, Elem c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw ConstructionError("multiplication is not associative");
  };
  if (n_ <= 512) {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        for (Elem c = 0; c < n_; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(n_ - 1));
    for (std::uint64_t i = 0; i < samples; ++i) check(d(rng), d(rng), d(rng));
  }
  std::vector<char> mask;
  if (closure(*this, gens_, mask).size() != n_) throw ConstructionError("generators do not generate the group");
}

unsigned FiniteGroup::prime() const {
  if (n_ == 1) return 1;
  std::size_t n = n_;
  unsigned p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a : gens_)
    for (Elem b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

// ---------------------------------------------------------------- Subgroup

bool Subgroup::contains(Elem g) const { return std::binary_search(elems.begin(), elems.end(), g); }

bool Subgroup::is_subgroup_of(const Subgroup& o) const {
  return std::includes(o.elems.begin(), o.elems.end(), elems.begin(), elems.end());
}

std::uint64_t AbelianType::order() const {
  std::uint64_t r = 1;
  for (auto o : orders) r *= o;
  return r;
}

std::string AbelianType::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < orders.size(); ++i) s += (i ? "," : "") + std::to_string(orders[i]);
  return s + "]";
}

Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup{{G.id()}, {}}; }

Subgroup whole_group(const FiniteGroup& G) {
  Subgroup H;
  H.elems.resize(G.order());
  std::iota(H.elems.begin(), H.elems.end(), Elem{0});
  H.gens = G.gens();
  return H;
}

Subgroup subgroup_generated(const FiniteGroup& G, std::span<const Elem> seed) {
  std::vector<char> mask(G.order(), 0);
  mask[G.id()] = 1;
  std::vector<Elem> gens;
  std::vector<Elem> elems{G.id()};
  for (Elem s : seed) {
    if (mask[s]) continue;
    gens.push_back(s);
    elems = closure(G, gens, mask);
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup{std::move(elems), std::move(gens)};
}

Subgroup subgroup_from_elements(const FiniteGroup& G, std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  std::vector<char> mask(G.order(), 0);
  mask[G.id()] = 1;
  std::vector<Elem> gens;
  for (Elem s : elems) {
    if (mask[s]) continue;
    gens.push_back(s);
    closure(G, gens, mask);
  }
  return Subgroup{std::move(elems), std::move(gens)};
}

Subgroup join(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
  std::vector<Elem> seed = A.gens;
  seed.insert(seed.end(), B.gens.begin(), B.gens.end());
  return subgroup_generated(G, seed);
}

Subgroup intersect(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
  std::vector<Elem> out;
  std::set_intersection(A.elems.begin(), A.elems.end(), B.elems.begin(), B.elems.end(), std::back_inserter(out));
  return subgroup_from_elements(G, std::move(out));
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (Elem h : H.gens)
    for (Elem x : G.gens())
      if (!H.contains(G.conj(h, x))) return false;
  return true;
}

Subgroup normal_closure(const FiniteGroup& G, const Subgroup& within, std::span<const Elem> seed) {
  Subgroup H = subgroup_generated(G, seed);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < H.gens.size() && !changed; ++i)
      for (Elem x : within.gens) {
        const Elem y = G.conj(H.gens[i], x);
        if (!H.contains(y)) {
          std::vector<Elem> s = H.gens;
          s.push_back(y);
          H = subgroup_generated(G, s);
          changed = true;
          break;
        }
      }
  }
  return H;
}

Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
  std::vector<Elem> seed;
  for (Elem a : A.gens)
    for (Elem b : B.gens) seed.push_back(G.comm(a, b));
  return normal_closure(G, join(G, A, B), seed);
}

Subgroup derived_subgroup(const FiniteGroup& G, const Subgroup& H) { return commutator_subgroup(G, H, H); }

Subgroup center(const FiniteGroup& G) {
  std::vector<Elem> z;
  for (Elem g = 0; g < G.order(); ++g) {
    bool central = true;
    for (Elem x : G.gens())
      if (G.mul(g, x) != G.mul(x, g)) {
        central = false;
        break;
      }
    if (central) z.push_back(g);
  }
  return subgroup_from_elements(G, std::move(z));
}

Subgroup centralizer(const FiniteGroup& G, Elem g) {
  std::vector<Elem> c;
  for (Elem x = 0; x < G.order(); ++x)
    if (G.mul(g, x) == G.mul(x, g)) c.push_back(x);
  return subgroup_from_elements(G, std::move(c));
}

Subgroup agemo(const FiniteGroup& G, const Subgroup& H, unsigned k) {
  const std::uint64_t e = ppow(require_p(G), k);
  std::vector<char> seen(G.order(), 0);
  std::vector<Elem> seed;
  for (Elem h : H.elems) {
    const Elem y = G.pow(h, static_cast<long long>(e));
    if (!seen[y]) {
      seen[y] = 1;
      seed.push_back(y);
    }
  }
  return subgroup_generated(G, seed);
}

Subgroup omega(const FiniteGroup& G, const Subgroup& H, unsigned k) {
  const std::uint64_t e = ppow(require_p(G), k);
  std::vector<Elem> seed;
  for (Elem h : H.elems)
    if (G.pow(h, static_cast<long long>(e)) == G.id()) seed.push_back(h);
  return subgroup_generated(G, seed);
}

Subgroup frattini(const FiniteGroup& G, const Subgroup& H) {
  if (H.order() == 1) return H;
  return join(G, agemo(G, H, 1), derived_subgroup(G, H));
}

Subgroup agemo_omega(const FiniteGroup& G, const Subgroup& N, unsigned k, PowerMode mode) {
  const Subgroup W = whole_group(G);
  switch (mode) {
    case PowerMode::agemo:
      return agemo(G, W, k);
    case PowerMode::omega:
      return omega(G, W, k);
    case PowerMode::omega_rel: {
      if (subgroup_generated(G, N.elems).elems != N.elems)
        throw InvalidArgument("omega_rel: N is not a subgroup of G");
      if (!is_normal(G, N)) throw InvalidArgument("omega_rel: N is not normal in G");
      const std::uint64_t e = ppow(require_p(G), k);
      std::vector<Elem> seed;
      for (Elem g = 0; g < G.order(); ++g)
        if (N.contains(G.pow(g, static_cast<long long>(e)))) seed.push_back(g);
      return subgroup_generated(G, seed);
    }
  }
  throw InvalidArgument("unknown power mode");
}

CharSeries char_series(const FiniteGroup& G) {
  require_p(G);
  CharSeries cs;
  const Subgroup W = whole_group(G);
  cs.lower_central.push_back(W);
  while (cs.lower_central.back().order() > 1)
    cs.lower_central.push_back(commutator_subgroup(G, cs.lower_central.back(), W));
  cs.nilpotency_class = cs.lower_central.size() - 1;
  cs.derived = cs.lower_central.size() > 1 ? cs.lower_central[1] : cs.lower_central[0];
  cs.center = center(G);
  cs.frattini = frattini(G, W);
  return cs;
}

QuotientGroup quotient_group(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw InvalidArgument("quotient by a non-normal subgroup");
  const std::size_t n = G.order();
  std::vector<Elem> label(n, static_cast<Elem>(-1));
  std::vector<Elem> reps;
  for (Elem g = 0; g < n; ++g) {
    if (label[g] != static_cast<Elem>(-1)) continue;
    const auto c = static_cast<Elem>(reps.size());
    reps.push_back(g);
    for (Elem x : N.elems) label[G.mul(g, x)] = c;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> mul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mul[i * m + j] = label[G.mul(reps[i], reps[j])];
  std::vector<Elem> gens;
  for (Elem s : G.gens()) gens.push_back(label[s]);
  QuotientGroup Q{FiniteGroup(m, std::move(mul), label[G.id()], std::move(gens)), std::move(label)};
  if (!G.labels().empty()) {
    std::vector<std::string> l;
    for (Elem r : reps) l.push_back(G.labels()[r]);
    Q.group.set_labels(std::move(l));
  }
  return Q;
}

SubgroupAsGroup as_group(const FiniteGroup& G, const Subgroup& H) {
  const std::size_t m = H.order();
  std::vector<Elem> local(G.order(), SubgroupAsGroup::kNone);
  for (std::size_t i = 0; i < m; ++i) local[H.elems[i]] = static_cast<Elem>(i);
  std::vector<Elem> mul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Elem v = local[G.mul(H.elems[i], H.elems[j])];
      if (v == SubgroupAsGroup::kNone) throw InvalidArgument("element set is not closed under multiplication");
      mul[i * m + j] = v;
    }
  std::vector<Elem> gens;
  for (Elem s : H.gens) gens.push_back(local[s]);
  SubgroupAsGroup out{FiniteGroup(m, std::move(mul), local[G.id()], std::move(gens)), H.elems, std::move(local)};
  if (!G.labels().empty()) {
    std::vector<std::string> l;
    for (Elem e : H.elems) l.push_back(G.labels()[e]);
    out.group.set_labels(std::move(l));
  }
  return out;
}

ClassData conjugacy_classes(const FiniteGroup& G) {
  ClassData cd;
  const std::size_t n = G.order();
  cd.class_of.assign(n, static_cast<std::size_t>(-1));
  for (Elem g = 0; g < n; ++g) {
    if (cd.class_of[g] != static_cast<std::size_t>(-1)) continue;
    const std::size_t idx = cd.classes.size();
    ConjClass C;
    C.rep = g;
    C.elems.push_back(g);
    cd.class_of[g] = idx;
    for (std::size_t i = 0; i < C.elems.size(); ++i)
      for (Elem x : G.gens()) {
        const Elem y = G.conj(C.elems[i], x);
        if (cd.class_of[y] == static_cast<std::size_t>(-1)) {
          cd.class_of[y] = idx;
          C.elems.push_back(y);
        }
      }
    std::sort(C.elems.begin(), C.elems.end());
    cd.centralizers.push_back(centralizer(G, g));
    cd.classes.push_back(std::move(C));
  }
  return cd;
}

AbelianType abelian_type(const FiniteGroup& A) {
  if (!A.is_abelian()) throw InvalidArgument("abelian_type: group is not abelian");
  if (A.order() == 1) return {};
  const unsigned p = require_p(A);
  const unsigned top = log_p(A.order(), p);
  // omega[k] = log_p |{x : x^{p^k} = 1}|
  std::vector<unsigned> om{0};
  for (unsigned k = 1; om.back() < top; ++k) {
    const auto e = static_cast<long long>(ppow(p, k));
    std::size_t cnt = 0;
    for (Elem x = 0; x < A.order(); ++x)
      if (A.pow(x, e) == A.id()) ++cnt;
    om.push_back(log_p(cnt, p));
  }
  // r[k] = number of cyclic factors of order >= p^k
  AbelianType t;
  const std::size_t K = om.size() - 1;
  for (std::size_t k = K; k >= 1; --k) {
    const unsigned rk = om[k] - om[k - 1];
    const unsigned rk1 = k + 1 <= K ? om[k + 1] - om[k] : 0;
    for (unsigned i = 0; i < rk - rk1; ++i) t.orders.push_back(ppow(p, static_cast<unsigned>(k)));
  }
  return t;
}

AbelianType abelian_type(const FiniteGroup& G, const Subgroup& X, const Subgroup& Y) {
  if (!Y.is_subgroup_of(X)) throw InvalidArgument("abelian_type: Y is not contained in X");
  const auto Xg = as_group(G, X);
  std::vector<Elem> yl;
  for (Elem y : Y.elems) yl.push_back(Xg.local[y]);
  const Subgroup Yl = subgroup_from_elements(Xg.group, std::move(yl));
  if (!is_normal(Xg.group, Yl)) throw InvalidArgument("abelian_type: Y is not normal in X");
  return abelian_type(quotient_group(Xg.group, Yl).group);
}

std::vector<Subgroup> dimension_subgroups_lazard(const FiniteGroup& G, std::size_t n_max) {
  const unsigned p = require_p(G);
  const CharSeries cs = char_series(G);
  const std::size_t c = cs.nilpotency_class;
  std::map<std::pair<std::size_t, unsigned>, Subgroup> cache;
  auto ag = [&](std::size_t i, unsigned j) -> const Subgroup& {
    auto key = std::make_pair(i, j);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, agemo(G, cs.lower_central[i - 1], j)).first;
    return it->second;
  };
  std::vector<Subgroup> D;
  for (std::size_t n = 1;; ++n) {
    Subgroup Dn = trivial_subgroup(G);
    for (std::size_t i = 1; i <= c; ++i) {
      unsigned j = 0;
      while (i * ppow(p, j) < n) ++j;
      const Subgroup& A = ag(i, j);
      if (!A.is_subgroup_of(Dn)) Dn = join(G, Dn, A);
    }
    D.push_back(Dn);
    if (n_max ? n >= n_max : Dn.order() == 1) break;
  }
  return D;
}

std::size_t min_generators(const FiniteGroup& G, const Subgroup& H) {
  if (H.order() == 1) return 0;
  const unsigned p = require_p(G);
  return log_p(H.order() / frattini(G, H).order(), p);
}

std::size_t min_generators(const FiniteGroup& G) { return min_generators(G, whole_group(G)); }

std::size_t exponent(const FiniteGroup& G) {
  std::size_t e = 1;
  for (Elem g = 0; g < G.order(); ++g) e = std::lcm(e, G.elem_order(g));
  return e;
}

std::optional<Subgroup> is_metacyclic(const FiniteGroup& G) {
  const unsigned p = G.prime();
  const Subgroup W = whole_group(G);
  const std::optional<Subgroup> fr = p >= 2 ? std::optional<Subgroup>(frattini(G, W)) : std::nullopt;
  std::unordered_map<std::vector<Elem>, char, VecHash> seen;
  for (Elem g = 0; g < G.order(); ++g) {
    const Elem seed[] = {g};
    Subgroup C = subgroup_generated(G, seed);
    if (!seen.emplace(C.elems, 1).second) continue;
    if (!is_normal(G, C)) continue;
    bool cyclic_quotient;
    if (p == 1) {
      cyclic_quotient = true;
    } else if (fr) {
      cyclic_quotient = join(G, C, *fr).order() * p >= G.order();
    } else {
      const auto Q = quotient_group(G, C);
      cyclic_quotient = false;
      for (Elem x = 0; x < Q.group.order() && !cyclic_quotient; ++x)
        cyclic_quotient = Q.group.elem_order(x) == Q.group.order();
    }
    if (cyclic_quotient) return C;
  }
  return std::nullopt;
}

namespace {

struct ElemAb {
  std::vector<Elem> elems;  // sorted
  std::vector<Elem> gens;
};

// Every elementary abelian subgroup of G whose elements lie in `pool`
// (a set of order-p elements closed enough for the caller's purpose),
// grouped by rank. Level 0 holds the trivial subgroup.
std::vector<std::vector<ElemAb>> elem_abelian_levels(const FiniteGroup& G, const std::vector<Elem>& pool,
                                                    unsigned p, std::uint64_t cap,
                                                    std::vector<std::vector<char>>* maximal) {
  std::vector<std::vector<ElemAb>> levels;
  levels.push_back({ElemAb{{G.id()}, {}}});
  std::uint64_t total = 1;
  std::vector<char> in(G.order(), 0), done(G.order(), 0);
  if (maximal) maximal->clear();
  while (!levels.back().empty()) {
    std::vector<ElemAb> next;
    std::unordered_map<std::vector<Elem>, std::size_t, VecHash> index;
    std::vector<char> is_max(levels.back().size(), 1);
    for (std::size_t ei = 0; ei < levels.back().size(); ++ei) {
      const ElemAb& E = levels.back()[ei];
      for (Elem e : E.elems) in[e] = 1;
      std::fill(done.begin(), done.end(), 0);
      for (Elem x : pool) {
        if (in[x] || done[x]) continue;
        bool commutes = true;
        for (Elem g : E.gens)
          if (G.mul(g, x) != G.mul(x, g)) {
            commutes = false;
            break;
          }
        if (!commutes) continue;
        is_max[ei] = 0;
        ElemAb F;
        F.gens = E.gens;
        F.gens.push_back(x);
        Elem xi = G.id();
        for (unsigned i = 0; i < p; ++i) {
          for (Elem e : E.elems) F.elems.push_back(G.mul(e, xi));
          xi = G.mul(xi, x);
        }
        for (Elem f : F.elems)
          if (!in[f]) done[f] = 1;
        std::sort(F.elems.begin(), F.elems.end());
        if (index.emplace(F.elems, next.size()).second) {
          if (++total > cap)
            throw CapExceeded("elem_ab_cap", "more than " + std::to_string(cap) + " elementary abelian subgroups");
          next.push_back(std::move(F));
        }
      }
      for (Elem e : E.elems) in[e] = 0;
    }
    if (maximal) maximal->push_back(std::move(is_max));
    levels.push_back(std::move(next));
  }
  levels.pop_back();
  return levels;
}

}  // namespace

std::map<std::size_t, std::size_t> maximal_elem_abelian_classes(const FiniteGroup& G, std::uint64_t cap) {
  const unsigned p = require_p(G);
  std::map<std::size_t, std::size_t> out;
  if (G.order() == 1) {
    out[0] = 1;
    return out;
  }
  std::vector<Elem> pool;
  for (Elem g = 0; g < G.order(); ++g)
    if (g != G.id() && G.pow(g, p) == G.id()) pool.push_back(g);
  std::vector<std::vector<char>> maximal;
  const auto levels = elem_abelian_levels(G, pool, p, cap, &maximal);
  for (std::size_t r = 1; r < levels.size(); ++r) {
    std::unordered_map<std::vector<Elem>, std::size_t, VecHash> idx;
    std::vector<std::size_t> mx;
    for (std::size_t i = 0; i < levels[r].size(); ++i)
      if (maximal[r][i]) {
        idx.emplace(levels[r][i].elems, mx.size());
        mx.push_back(i);
      }
    std::vector<char> visited(mx.size(), 0);
    std::size_t classes = 0;
    for (std::size_t s = 0; s < mx.size(); ++s) {
      if (visited[s]) continue;
      ++classes;
      visited[s] = 1;
      std::vector<std::size_t> stack{s};
      while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        for (Elem x : G.gens()) {
          std::vector<Elem> img;
          for (Elem e : levels[r][mx[cur]].elems) img.push_back(G.conj(e, x));
          std::sort(img.begin(), img.end());
          const std::size_t t = idx.at(img);
          if (!visited[t]) {
            visited[t] = 1;
            stack.push_back(t);
          }
        }
      }
    }
    if (classes) out[r] = classes;
  }
  return out;
}

namespace {

// Minimal generating set of a p-group: elements outside <chosen> Frat(G).
std::vector<Elem> minimal_generating_set(const FiniteGroup& G) {
  std::vector<Elem> chosen;
  if (G.order() == 1) return chosen;
  const Subgroup W = whole_group(G);
  Subgroup cur = frattini(G, W);
  for (Elem g : G.gens()) {
    if (cur.contains(g)) continue;
    chosen.push_back(g);
    const Elem s[] = {g};
    cur = join(G, cur, subgroup_generated(G, s));
  }
  return chosen;
}

}  // namespace

std::size_t max_elem_abelian_direct_factor(const FiniteGroup& G, std::uint64_t cap) {
  if (G.order() > cap)
    throw CapExceeded("direct_factor_cap", "direct factor search needs |G| <= " + std::to_string(cap));
  const unsigned p = require_p(G);
  if (G.order() == 1) return 0;
  const Subgroup Z = center(G);
  std::vector<Elem> pool;
  for (Elem z : Z.elems)
    if (z != G.id() && G.pow(z, p) == G.id()) pool.push_back(z);
  const auto levels = elem_abelian_levels(G, pool, p, 1u << 20, nullptr);
  for (std::size_t r = levels.size() - 1; r >= 1; --r) {
    for (const auto& E : levels[r]) {
      const Subgroup A = subgroup_from_elements(G, E.elems);
      const auto Q = quotient_group(G, A);
      const auto tgens = minimal_generating_set(Q.group);
      // Lift each quotient generator to its least preimage.
      std::vector<Elem> lifts;
      for (Elem t : tgens)
        for (Elem g = 0; g < G.order(); ++g)
          if (Q.projection[g] == t) {
            lifts.push_back(g);
            break;
          }
      const std::size_t s = lifts.size();
      std::vector<std::size_t> choice(s, 0);
      const std::size_t target = G.order() / A.order();
      for (;;) {
        std::vector<Elem> ug;
        for (std::size_t i = 0; i < s; ++i) ug.push_back(G.mul(lifts[i], A.elems[choice[i]]));
        if (subgroup_generated(G, ug).order() == target) return r;
        std::size_t i = 0;
        while (i < s && ++choice[i] == A.order()) choice[i++] = 0;
        if (i == s) break;
      }
    }
  }
  return 0;
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  const std::size_t a = G.order(), b = H.order(), n = a * b;
  std::vector<Elem> mul(n * n);
  for (std::size_t g1 = 0; g1 < a; ++g1)
    for (std::size_t h1 = 0; h1 < b; ++h1)
      for (std::size_t g2 = 0; g2 < a; ++g2)
        for (std::size_t h2 = 0; h2 < b; ++h2)
          mul[(g1 * b + h1) * n + g2 * b + h2] =
              static_cast<Elem>(G.mul(static_cast<Elem>(g1), static_cast<Elem>(g2)) * b +
                                H.mul(static_cast<Elem>(h1), static_cast<Elem>(h2)));
  std::vector<Elem> gens;
  for (Elem g : G.gens()) gens.push_back(static_cast<Elem>(g * b + H.id()));
  for (Elem h : H.gens()) gens.push_back(static_cast<Elem>(G.id() * b + h));
  return FiniteGroup(n, std::move(mul), static_cast<Elem>(G.id() * b + H.id()), std::move(gens));
}

std::vector<std::size_t> generating_subset(const FiniteGroup& G) {
  std::vector<std::size_t> idx;
  std::vector<Elem> chosen;
  std::vector<char> mask;
  closure(G, chosen, mask);
  for (std::size_t i = 0; i < G.gens().size(); ++i) {
    if (mask[G.gens()[i]]) continue;
    idx.push_back(i);
    chosen.push_back(G.gens()[i]);
    closure(G, chosen, mask);
  }
  return idx;
}

}  // namespace mip
