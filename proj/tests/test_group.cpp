#include <numeric>
#include <set>

#include "doctest.h"

#include "corpus.hpp"
#include "oracles.hpp"
#include "mip/error.hpp"
#include "mip/families.hpp"
#include "mip/group.hpp"

using namespace mip;

namespace {

FiniteGroup G_(const std::string& spec) { return corpus::build(spec); }

Elem gen(const FiniteGroup& G, const std::string& name) {
  const auto& g = G.presentation()->generators;
  return G.gens()[static_cast<std::size_t>(std::find(g.begin(), g.end(), name) - g.begin())];
}

std::map<std::size_t, std::size_t> profile(const FiniteGroup& G) {
  std::map<std::size_t, std::size_t> m;
  for (const auto& C : conjugacy_classes(G).classes) ++m[C.length()];
  return m;
}

}  // namespace

TEST_CASE("subgroup generation") {
  const FiniteGroup D = G_("D8");
  const Elem r = gen(D, "r");
  const std::vector<Elem> rr{D.mul(r, r)};
  CHECK(subgroup_generated(D, rr).order() == 2);
  const FiniteGroup T = G_("T:1,4");
  const std::vector<Elem> bcd{gen(T, "b"), gen(T, "c"), gen(T, "d")};
  CHECK(subgroup_generated(T, bcd).order() == 27);
  const FiniteGroup Q = G_("Q8");
  CHECK(subgroup_generated(Q, Q.gens()).order() == 8);
  CHECK(subgroup_generated(Q, std::vector<Elem>{}).order() == 1);
}

TEST_CASE("characteristic series") {
  const auto d8 = char_series(G_("D8"));
  CHECK(d8.derived.order() == 2);
  CHECK(d8.nilpotency_class == 2);
  CHECK(char_series(G_("T:2,5")).nilpotency_class == 4);
  const auto c8 = char_series(G_("C:8"));
  CHECK(c8.nilpotency_class == 1);
  CHECK(c8.derived.order() == 1);
  CHECK_THROWS_AS(char_series(todd_coxeter(Presentation::from_strings({"a", "b"}, {"a^3", "b^2", "(a*b)^2"}))),
                  InvalidArgument);
}

TEST_CASE("agemo and omega") {
  const FiniteGroup C4 = G_("C:4");
  CHECK(agemo_omega(C4, whole_group(C4), 1, PowerMode::agemo).order() == 2);
  const FiniteGroup Q = G_("Q8");
  CHECK(agemo_omega(Q, whole_group(Q), 1, PowerMode::omega) == center(Q));
  const FiniteGroup B = G_("B2G:1,2");
  const Subgroup U = agemo_omega(B, char_series(B).derived, 1, PowerMode::omega_rel);
  CHECK(U.order() == 8);
  const Elem a = gen(B, "a"), b = gen(B, "b"), c = gen(B, "c");
  const std::vector<Elem> seed{B.mul(a, a), b, c};
  CHECK(U == subgroup_generated(B, seed));
  CHECK(agemo_omega(B, char_series(B).derived, 0, PowerMode::omega_rel) == char_series(B).derived);
  const FiniteGroup D = G_("D8");
  const std::vector<Elem> s{gen(D, "s")};
  CHECK_THROWS_AS(agemo_omega(D, subgroup_generated(D, s), 1, PowerMode::omega_rel), InvalidArgument);
}

TEST_CASE("quotients") {
  const FiniteGroup D = G_("D8");
  const auto q = quotient_group(D, center(D));
  CHECK(q.group.order() == 4);
  CHECK(exponent(q.group) == 2);
  const FiniteGroup T = G_("T:1,4");
  CHECK(quotient_group(T, center(T)).group.order() == 27);
  CHECK(quotient_group(T, whole_group(T)).group.order() == 1);
  for (Elem x = 0; x < D.order(); ++x)
    for (Elem y = 0; y < D.order(); ++y)
      CHECK(q.projection[D.mul(x, y)] == q.group.mul(q.projection[x], q.projection[y]));
  const std::vector<Elem> s{gen(D, "s")};
  CHECK_THROWS_AS(quotient_group(D, subgroup_generated(D, s)), InvalidArgument);
}

TEST_CASE("conjugacy class profiles") {
  CHECK(profile(G_("T:1,4")) == std::map<std::size_t, std::size_t>{{1, 3}, {3, 8}, {9, 6}});
  CHECK(profile(G_("T:5,5")) == std::map<std::size_t, std::size_t>{{1, 3}, {3, 2}, {9, 8}, {27, 6}});
  CHECK(profile(G_("C:9")) == std::map<std::size_t, std::size_t>{{1, 9}});
}

TEST_CASE("class partition over the corpus") {
  for (const auto& spec : corpus::specs()) {
    CAPTURE(spec);
    const FiniteGroup G = G_(spec);
    const ClassData cd = conjugacy_classes(G);
    std::vector<int> seen(G.order(), 0);
    std::size_t total = 0;
    Elem last = 0;
    for (std::size_t k = 0; k < cd.classes.size(); ++k) {
      const auto& C = cd.classes[k];
      total += C.length();
      CHECK(C.length() * cd.centralizers[k].order() == G.order());
      CHECK(cd.centralizers[k] == centralizer(G, C.rep));
      CHECK(C.rep == C.elems.front());
      if (k) CHECK(C.rep > last);
      last = C.rep;
      for (Elem g : C.elems) {
        ++seen[g];
        CHECK(cd.class_of[g] == k);
      }
    }
    CHECK(total == G.order());
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("abelian types") {
  const FiniteGroup D = G_("D8");
  CHECK(abelian_type(D, whole_group(D), char_series(D).derived).orders == std::vector<std::uint64_t>{2, 2});
  const FiniteGroup T = G_("T:2,6");
  CHECK(abelian_type(T, center(T), trivial_subgroup(T)).orders == std::vector<std::uint64_t>{3});
  CHECK(abelian_type(G_("Ab:8,2,4")).orders == std::vector<std::uint64_t>{8, 4, 2});
  CHECK(abelian_type(G_("X:C:9*C:3*C:27")).orders == std::vector<std::uint64_t>{27, 9, 3});
  CHECK_THROWS_AS(abelian_type(D), InvalidArgument);
  CHECK_THROWS_AS(abelian_type(todd_coxeter(Presentation::from_strings({"a"}, {"a^12"}))), InvalidArgument);
}

TEST_CASE("Lazard dimension subgroups") {
  const FiniteGroup C4 = G_("C:4");
  const auto d = dimension_subgroups_lazard(C4);
  REQUIRE(d.size() == 3);
  CHECK(d[1].order() == 2);
  CHECK(d[2].order() == 1);
  CHECK(dimension_subgroups_lazard(G_("EA:3,3"))[1].order() == 1);
  const FiniteGroup B = G_("B2G:1,2");
  const Subgroup U = agemo_omega(B, char_series(B).derived, 1, PowerMode::omega_rel);
  const auto dU = dimension_subgroups_lazard(as_group(B, U).group);
  CHECK(dU[1].order() == 2);
  for (const auto& spec : corpus::specs()) {
    CAPTURE(spec);
    const FiniteGroup G = G_(spec);
    const auto D = dimension_subgroups_lazard(G);
    CHECK(D[0] == whole_group(G));
    if (D.size() > 1) CHECK(D[1] == frattini(G, whole_group(G)));
    for (std::size_t i = 1; i < D.size(); ++i) CHECK(D[i].is_subgroup_of(D[i - 1]));
    CHECK(D.back().order() == 1);
  }
}

TEST_CASE("minimal generators and exponent") {
  CHECK(min_generators(G_("D8")) == 2);
  CHECK(min_generators(G_("C:8")) == 1);
  CHECK(min_generators(G_("EA:2,4")) == 4);
  const FiniteGroup T = G_("T:2,4");
  const Elem b = gen(T, "b");
  CHECK(min_generators(T, centralizer(T, b)) == 3);
  CHECK(exponent(G_("Q8")) == 4);
  CHECK(exponent(G_("EA:3,3")) == 3);
  const FiniteGroup T5 = G_("T:1,5");
  std::size_t scan = 1;
  for (Elem g = 0; g < T5.order(); ++g) scan = std::lcm(scan, T5.elem_order(g));
  CHECK(exponent(T5) == scan);
}

TEST_CASE("metacyclic") {
  CHECK(is_metacyclic(G_("Q8")).has_value());
  CHECK_FALSE(is_metacyclic(G_("EA:2,3")).has_value());
  CHECK(is_metacyclic(G_("Meta:2,3,1,0,5")).has_value());
  for (const auto& spec : corpus::specs()) {
    CAPTURE(spec);
    const FiniteGroup G = G_(spec);
    const auto w = is_metacyclic(G);
    CHECK(w.has_value() == corpus::metacyclic_oracle(G));
    if (w) {
      CHECK(is_normal(G, *w));
      CHECK(abelian_type(as_group(G, *w).group).orders.size() <= 1);
      CHECK(abelian_type(quotient_group(G, *w).group).orders.size() <= 1);
    }
  }
}

TEST_CASE("metacyclic quotient criterion") {
  for (const auto& spec : corpus::specs()) {
    CAPTURE(spec);
    const FiniteGroup G = G_(spec);
    const Subgroup D = char_series(G).derived;
    const FiniteGroup Q = quotient_group(G, frattini(G, D)).group;
    CHECK(corpus::metacyclic_oracle(G) == corpus::metacyclic_oracle(Q));
    CHECK(is_metacyclic(G).has_value() == is_metacyclic(Q).has_value());
  }
}

TEST_CASE("rank preserving correspondence") {
  // For normal K, L of G with L <= Frat(K), d(H) = d(H/L) for every H >= K.
  for (const auto& spec : corpus::specs()) {
    const FiniteGroup G = G_(spec);
    if (G.order() > 64) continue;
    CAPTURE(spec);
    const CharSeries cs = char_series(G);
    std::vector<Subgroup> normals = cs.lower_central;
    normals.push_back(cs.center);
    normals.push_back(cs.frattini);
    normals.push_back(agemo(G, whole_group(G), 1));
    normals.push_back(omega(G, whole_group(G), 1));
    for (const auto& K : normals) {
      if (!is_normal(G, K)) continue;
      const Subgroup FK = frattini(G, K);
      for (const auto& L0 : normals) {
        const Subgroup L = intersect(G, L0, FK);
        if (!is_normal(G, L)) continue;
        std::vector<Subgroup> over{K, whole_group(G)};
        for (Elem g = 0; g < G.order(); g += 3) {
          std::vector<Elem> seed = K.gens;
          seed.push_back(g);
          over.push_back(subgroup_generated(G, seed));
        }
        for (const auto& H : over) {
          const auto Hg = as_group(G, H);
          const FiniteGroup HL = quotient_group(Hg.group, oracle::local(Hg, L)).group;
          CHECK(min_generators(G, H) == min_generators(HL));
        }
      }
    }
  }
}

TEST_CASE("two-generated groups with |G'| = p have G/Z of type [p,p]") {
  std::size_t checked = 0;
  for (const auto& spec : corpus::specs()) {
    const FiniteGroup G = G_(spec);
    const CharSeries cs = char_series(G);
    const unsigned p = G.prime();
    if (min_generators(G) != 2 || cs.derived.order() != p) continue;
    CAPTURE(spec);
    ++checked;
    CHECK(abelian_type(G, whole_group(G), cs.center).orders == std::vector<std::uint64_t>{p, p});
  }
  CHECK(checked >= 5);
}

TEST_CASE("maximal elementary abelian subgroups") {
  using M = std::map<std::size_t, std::size_t>;
  CHECK(maximal_elem_abelian_classes(G_("D8")) == M{{2, 2}});
  CHECK(maximal_elem_abelian_classes(G_("Q8")) == M{{1, 1}});
  CHECK(maximal_elem_abelian_classes(G_("C:5")) == M{{1, 1}});
  CHECK(maximal_elem_abelian_classes(G_("EA:2,3")) == M{{3, 1}});
  CHECK(maximal_elem_abelian_classes(G_("X:C:2*D8")) == M{{3, 2}});
  CHECK(maximal_elem_abelian_classes(G_("X:Q8*C:4")) == M{{2, 1}});
  CHECK_THROWS_AS(maximal_elem_abelian_classes(G_("EA:2,4"), 5), CapExceeded);
}

TEST_CASE("elementary abelian direct factors") {
  CHECK(max_elem_abelian_direct_factor(G_("X:C:2*D8")) == 1);
  CHECK(max_elem_abelian_direct_factor(G_("Q8")) == 0);
  CHECK(max_elem_abelian_direct_factor(G_("EA:2,2")) == 2);
  CHECK(max_elem_abelian_direct_factor(G_("EA:2,3")) == 3);
  CHECK(max_elem_abelian_direct_factor(G_("X:C:2*C:2*D8")) == 2);
  CHECK(max_elem_abelian_direct_factor(G_("Ab:4,2")) == 1);
  CHECK(max_elem_abelian_direct_factor(G_("C:4")) == 0);
  CHECK_THROWS_AS(max_elem_abelian_direct_factor(G_("X:C:2*D8"), 8), CapExceeded);
}

TEST_CASE("group validation") {
  const FiniteGroup G = G_("T:3,5");
  CHECK_NOTHROW(G.validate());
  std::vector<Elem> bad = G_("C:4").table();
  std::swap(bad[5], bad[6]);
  CHECK_THROWS(FiniteGroup(4, bad, 0, {1}).validate());
  CHECK(G_("C:2").prime() == 2);
  CHECK(G_("C:1").prime() == 1);
}
