#include "mip/iso.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

#include "mip/error.hpp"

namespace mip {

// ------------------------------------------------------------------ groups

namespace {

struct GroupProfile {
  std::vector<std::size_t> order, class_len;
  explicit GroupProfile(const FiniteGroup& G) : order(G.order()), class_len(G.order()) {
    const ClassData cd = conjugacy_classes(G);
    for (Elem g = 0; g < G.order(); ++g) {
      order[g] = G.elem_order(g);
      class_len[g] = cd.classes[cd.class_of[g]].length();
    }
  }
  std::pair<std::size_t, std::size_t> key(Elem g) const { return {order[g], class_len[g]}; }
};

// Extends img (images of S) along a breadth-first tree of G over S and checks
// every edge. Fills phi on success.
bool extend_group_map(const FiniteGroup& G, const FiniteGroup& H, const std::vector<Elem>& S,
                      const std::vector<Elem>& img, const std::vector<Elem>& bfs, const std::vector<Elem>& parent,
                      const std::vector<std::size_t>& via, std::vector<Elem>& phi, std::vector<char>& used) {
  const std::size_t n = G.order();
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::fill(phi.begin(), phi.end(), kUnset);
  std::fill(used.begin(), used.end(), 0);
  phi[G.id()] = H.id();
  used[H.id()] = 1;
  for (std::size_t t = 1; t < bfs.size(); ++t) {
    const Elem g = bfs[t];
    const Elem h = H.mul(phi[parent[t]], img[via[t]]);
    if (used[h]) return false;
    used[h] = 1;
    phi[g] = h;
  }
  if (bfs.size() != n) return false;
  for (Elem g = 0; g < n; ++g)
    for (std::size_t s = 0; s < S.size(); ++s)
      if (phi[G.mul(g, S[s])] != H.mul(phi[g], img[s])) return false;
  return true;
}

}  // namespace

std::optional<IsoWitness> group_isomorphic(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t cap,
                                           IsoSearchStats* stats) {
  IsoSearchStats local;
  IsoSearchStats& st = stats ? *stats : local;
  if (G.order() != H.order()) return std::nullopt;
  const std::size_t n = G.order();

  const auto sub = generating_subset(G);
  std::vector<Elem> S;
  for (std::size_t i : sub) S.push_back(G.gens()[i]);

  // Breadth-first tree of G over S.
  std::vector<Elem> bfs{G.id()}, parent{G.id()};
  std::vector<std::size_t> via{0};
  {
    std::vector<char> seen(n, 0);
    seen[G.id()] = 1;
    for (std::size_t t = 0; t < bfs.size(); ++t)
      for (std::size_t s = 0; s < S.size(); ++s) {
        const Elem x = G.mul(bfs[t], S[s]);
        if (seen[x]) continue;
        seen[x] = 1;
        bfs.push_back(x);
        parent.push_back(bfs[t]);
        via.push_back(s);
      }
    if (bfs.size() != n) throw InvalidArgument("group_isomorphic: generators do not generate the source");
  }
  const GroupProfile PG(G), PH(H);
  {
    std::map<std::pair<std::size_t, std::size_t>, long> count;
    for (Elem g = 0; g < n; ++g) ++count[PG.key(g)];
    for (Elem h = 0; h < n; ++h) --count[PH.key(h)];
    for (const auto& [k, c] : count)
      if (c != 0) return std::nullopt;
  }

  const std::size_t d = S.size();
  std::vector<std::vector<Elem>> cand(d);
  for (std::size_t i = 0; i < d; ++i)
    for (Elem h = 0; h < n; ++h)
      if (PH.key(h) == PG.key(S[i])) cand[i].push_back(h);

  std::vector<Elem> img(d), phi(n);
  std::vector<char> used(n);
  std::vector<std::size_t> pos(d, 0);
  auto pair_ok = [&](std::size_t i) {
    // orders of x_a x_i and x_a x_i^-1 must match for a < i
    for (std::size_t a = 0; a < i; ++a) {
      if (G.elem_order(G.mul(S[a], S[i])) != H.elem_order(H.mul(img[a], img[i]))) return false;
      if (G.elem_order(G.mul(S[a], G.inv(S[i]))) != H.elem_order(H.mul(img[a], H.inv(img[i])))) return false;
    }
    return true;
  };

  std::optional<IsoWitness> found;
  if (d == 0) {
    IsoWitness w;
    w.kind = IsoWitness::Kind::group;
    w.group_images.assign(G.gens().size(), H.id());
    w.group_map.assign(n, H.id());
    return w;
  }
  std::size_t i = 0;
  pos[0] = 0;
  while (true) {
    if (pos[i] == cand[i].size()) {
      if (i == 0) break;
      pos[i] = 0;
      --i;
      ++pos[i];
      continue;
    }
    img[i] = cand[i][pos[i]];
    if (!pair_ok(i)) {
      ++pos[i];
      continue;
    }
    if (i + 1 < d) {
      ++i;
      pos[i] = 0;
      continue;
    }
    if (++st.assignments > cap)
      throw CapExceeded("iso_search_cap", "group isomorphism search exceeded " + std::to_string(cap) + " assignments");
    if (extend_group_map(G, H, S, img, bfs, parent, via, phi, used)) {
      IsoWitness w;
      w.kind = IsoWitness::Kind::group;
      for (Elem g : G.gens()) w.group_images.push_back(phi[g]);
      w.group_map = phi;
      return w;
    }
    ++pos[i];
  }
  return std::nullopt;
}

bool verify_witness(const IsoWitness& w, const FiniteGroup& G, const FiniteGroup& H) {
  if (w.kind != IsoWitness::Kind::group) throw InvalidArgument("verify_witness: not a group witness");
  if (w.group_images.size() != G.gens().size()) throw InvalidArgument("verify_witness: wrong number of images");
  const std::size_t n = G.order();
  if (H.order() != n) return false;
  for (Elem h : w.group_images)
    if (h >= n) return false;
  // Rebuild the map from the generator images alone.
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> phi(n, kUnset);
  phi[G.id()] = H.id();
  std::vector<Elem> queue{G.id()};
  for (std::size_t t = 0; t < queue.size(); ++t)
    for (std::size_t s = 0; s < G.gens().size(); ++s) {
      const Elem x = G.mul(queue[t], G.gens()[s]);
      const Elem y = H.mul(phi[queue[t]], w.group_images[s]);
      if (phi[x] == kUnset) {
        phi[x] = y;
        queue.push_back(x);
      } else if (phi[x] != y) {
        return false;
      }
    }
  if (queue.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Elem g = 0; g < n; ++g) {
    if (hit[phi[g]]) return false;
    hit[phi[g]] = 1;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (phi[G.mul(a, b)] != H.mul(phi[a], phi[b])) return false;
  return true;
}

// ---------------------------------------------------------------- algebras

namespace {

bool nonzero(const Vec& v) {
  return std::any_of(v.begin(), v.end(), [](Scalar c) { return c != 0; });
}

Vec unit_vec(std::size_t d, std::size_t i) {
  Vec e(d, 0);
  e[i] = 1;
  return e;
}

// A basis of A made of products of the generators: entry t is either
// generator t (t < #gens) or basis[left] * gens[gen].
struct WordBasis {
  std::vector<Vec> vecs;
  std::vector<std::pair<std::size_t, std::size_t>> build;  // (left, gen) for t >= #gens
  std::size_t ngens = 0;
  std::vector<Vec> inverse;  // e_i in terms of the word basis
};

std::optional<WordBasis> word_basis(const QuotientAlgebra& A, const std::vector<Vec>& gens) {
  WordBasis W;
  W.ngens = gens.size();
  Subspace S(A.field, A.dim);
  for (const auto& g : gens) {
    if (!S.insert(g)) return std::nullopt;
    W.vecs.push_back(g);
  }
  for (std::size_t t = 0; t < W.vecs.size(); ++t)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Vec v = A.mul(W.vecs[t], gens[j]);
      if (S.insert(v)) {
        W.vecs.push_back(std::move(v));
        W.build.emplace_back(t, j);
      }
    }
  if (W.vecs.size() != A.dim) return std::nullopt;
  TaggedEchelon T(A.field, A.dim, A.dim);
  for (std::size_t t = 0; t < A.dim; ++t) T.insert(W.vecs[t], unit_vec(A.dim, t));
  for (std::size_t i = 0; i < A.dim; ++i) W.inverse.push_back(T.coordinates(unit_vec(A.dim, i)));
  return W;
}

// Linear extension of the generator images through the word basis, checked
// for bijectivity and multiplicativity on every basis pair.
std::optional<std::vector<Vec>> extend_algebra_map(const QuotientAlgebra& A, const QuotientAlgebra& B,
                                                   const WordBasis& W, const std::vector<Vec>& images) {
  const std::size_t d = A.dim;
  const FiniteField& F = A.field;
  std::vector<Vec> b(images.begin(), images.end());
  for (const auto& [left, gen] : W.build) b.push_back(B.mul(b[left], images[gen]));
  if (Subspace::echelon(b, F, d).dim() != d) return std::nullopt;
  std::vector<Vec> phi(d, Vec(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t t = 0; t < d; ++t)
      if (W.inverse[i][t]) F.axpy(W.inverse[i][t], b[t], phi[i]);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec lhs(d, 0);
      for (std::size_t k = 0; k < d; ++k)
        if (A.c(i, j, k)) F.axpy(A.c(i, j, k), phi[k], lhs);
      if (lhs != B.mul(phi[i], phi[j])) return std::nullopt;
    }
  return phi;
}

Subspace square_of(const QuotientAlgebra& A) {
  const auto P = algebra_powers(A);
  return P.size() > 1 ? P[1] : Subspace(A.field, A.dim);
}

}  // namespace

IsoWitness algebra_witness(std::vector<Vec> sources, std::vector<Vec> images) {
  IsoWitness w;
  w.kind = IsoWitness::Kind::algebra;
  w.algebra_sources = std::move(sources);
  w.algebra_images = std::move(images);
  return w;
}

std::optional<IsoWitness> nilpotent_algebra_iso(const QuotientAlgebra& A, const QuotientAlgebra& B,
                                                std::uint64_t cap, IsoSearchStats* stats) {
  IsoSearchStats local;
  IsoSearchStats& st = stats ? *stats : local;
  if (!(A.field == B.field)) throw InvalidArgument("nilpotent_algebra_iso: fields differ");
  if (!is_nilpotent(A) || !is_nilpotent(B)) throw InvalidArgument("nilpotent_algebra_iso: algebras must be nilpotent");
  if (A.dim != B.dim) return std::nullopt;
  const std::size_t d = A.dim;
  const FiniteField& F = A.field;
  const Subspace A2 = square_of(A), B2 = square_of(B);
  if (A2.dim() != B2.dim()) return std::nullopt;

  std::vector<Vec> gens;
  {
    Subspace S = A2;
    for (std::size_t i = 0; i < d; ++i)
      if (S.insert(unit_vec(d, i))) gens.push_back(unit_vec(d, i));
  }
  const std::size_t m = gens.size();
  const auto W = word_basis(A, gens);
  if (!W) throw InvalidArgument("nilpotent_algebra_iso: generators do not span");
  if (m == 0) {
    IsoWitness w = algebra_witness({}, {});
    return w;
  }

  // Search space q^(d m).
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < d * m; ++i) {
    if (space > cap / F.q()) throw CapExceeded("iso_search_cap", "algebra isomorphism search space exceeds the cap");
    space *= F.q();
  }

  std::vector<Vec> all;  // every vector of B, in lexicographic order of codes
  {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= F.q();
    for (std::uint64_t c = 0; c < total; ++c) {
      Vec v(d, 0);
      std::uint64_t x = c;
      for (std::size_t i = d; i-- > 0;) {
        v[i] = static_cast<Scalar>(x % F.q());
        x /= F.q();
      }
      all.push_back(std::move(v));
    }
  }

  std::vector<Vec> img(m);
  std::vector<Subspace> level{B2};
  std::vector<std::size_t> pos(m, 0);
  std::size_t i = 0;
  while (true) {
    if (pos[i] == all.size()) {
      if (i == 0) break;
      pos[i] = 0;
      level.pop_back();
      --i;
      ++pos[i];
      continue;
    }
    const Vec& v = all[pos[i]];
    Subspace next = level.back();
    if (!nonzero(v) || !next.insert(v)) {
      ++pos[i];
      continue;
    }
    img[i] = v;
    if (i + 1 < m) {
      level.push_back(std::move(next));
      ++i;
      pos[i] = 0;
      continue;
    }
    ++st.assignments;
    if (auto phi = extend_algebra_map(A, B, *W, img)) {
      IsoWitness w = algebra_witness(gens, img);
      w.linear_map = std::move(*phi);
      return w;
    }
    ++pos[i];
  }
  return std::nullopt;
}

bool verify_witness(const IsoWitness& w, const QuotientAlgebra& A, const QuotientAlgebra& B) {
  if (w.kind != IsoWitness::Kind::algebra) throw InvalidArgument("verify_witness: not an algebra witness");
  if (w.algebra_sources.size() != w.algebra_images.size()) throw InvalidArgument("verify_witness: shape mismatch");
  if (!(A.field == B.field) || A.dim != B.dim) return false;
  for (const auto& v : w.algebra_sources)
    if (v.size() != A.dim) throw InvalidArgument("verify_witness: source vector has the wrong length");
  for (const auto& v : w.algebra_images)
    if (v.size() != B.dim) throw InvalidArgument("verify_witness: image vector has the wrong length");
  const auto W = word_basis(A, w.algebra_sources);
  if (!W) return false;
  return extend_algebra_map(A, B, *W, w.algebra_images).has_value();
}

// -------------------------------------------------------------------- JSON

std::string witness_json(const IsoWitness& w, const FiniteGroup* target, const FiniteField* field) {
  nlohmann::ordered_json j;
  if (w.kind == IsoWitness::Kind::group) {
    j["kind"] = "group";
    auto& arr = j["images"] = nlohmann::ordered_json::array();
    for (Elem h : w.group_images) {
      if (target && h < target->labels().size())
        arr.push_back(target->labels()[h]);
      else
        arr.push_back(h);
    }
  } else {
    j["kind"] = "algebra";
    auto vec = [&](const Vec& v) {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (Scalar c : v) {
        if (field)
          a.push_back(field->to_string(c));
        else
          a.push_back(c);
      }
      return a;
    };
    j["sources"] = nlohmann::ordered_json::array();
    for (const auto& v : w.algebra_sources) j["sources"].push_back(vec(v));
    j["images"] = nlohmann::ordered_json::array();
    for (const auto& v : w.algebra_images) j["images"].push_back(vec(v));
  }
  return j.dump();
}

}  // namespace mip
