#include <memory>
#include <random>

#include "doctest.h"

#include "corpus.hpp"
#include "oracles.hpp"
#include "mip/error.hpp"
#include "mip/families.hpp"
#include "mip/modalg.hpp"

using namespace mip;

namespace {

FiniteGroup G_(const std::string& spec) { return corpus::build(spec); }

GroupAlgebra algebra(const FiniteGroup& G, const FiniteField& F) {
  return GroupAlgebra(std::make_shared<const FiniteGroup>(G), F);
}

using oracle::dense_mul;
using oracle::dense_powers;
using oracle::minus_one;
using oracle::unit;

std::vector<std::size_t> jennings_oracle(const FiniteGroup& G) {
  return oracle::jennings_polynomial(G.prime(), dimension_subgroups_lazard(G));
}

std::vector<FiniteField> fields_for(unsigned p) {
  if (p == 2) return {FiniteField::make(2, 1), FiniteField::make(2, 2)};
  if (p == 3) return {FiniteField::make(3, 1), FiniteField::make(3, 2)};
  return {FiniteField::make(p, 1)};
}

}  // namespace

TEST_CASE("group algebra product matches the dense double sum") {
  std::mt19937 rng(3);
  for (const char* spec : {"D8", "Q8", "T:3,4", "Meta:2,3,1,0,5", "EA:3,2"}) {
    const FiniteGroup G = G_(spec);
    for (const auto& F : fields_for(G.prime())) {
      const GroupAlgebra A = algebra(G, F);
      std::uniform_int_distribution<unsigned> digit(0, F.q() - 1);
      for (int t = 0; t < 20; ++t) {
        Vec x(G.order()), y(G.order());
        for (auto& c : x) c = static_cast<Scalar>(digit(rng));
        for (auto& c : y) c = static_cast<Scalar>(digit(rng));
        CHECK(A.mul(x, y) == dense_mul(G, F, x, y));
        CHECK(A.mul(A.mul(x, y), x) == A.mul(x, A.mul(y, x)));
        const Elem g = static_cast<Elem>(rng() % G.order());
        CHECK(A.mul_right(x, g) == dense_mul(G, F, x, unit(G, g)));
        CHECK(A.mul_left(g, x) == dense_mul(G, F, unit(G, g), x));
      }
      CHECK(A.augmentation(A.augmented(1)) == 0);
    }
  }
}

TEST_CASE("augmentation powers of F_2 D8") {
  for (unsigned k : {1u, 2u}) {
    const GroupAlgebra A = algebra(G_("D8"), FiniteField::make(2, k));
    const auto P = augmentation_powers(A);
    std::vector<std::size_t> dims;
    for (std::size_t n = 1; n < P.size(); ++n) dims.push_back(P[n].dim());
    CHECK(dims == std::vector<std::size_t>{7, 5, 3, 1, 0});
    CHECK(jennings_dims(P) == std::vector<std::size_t>{2, 2, 2, 1});
  }
}

TEST_CASE("augmentation powers agree with products of all g - 1") {
  for (const auto& spec : corpus::specs()) {
    const FiniteGroup G = G_(spec);
    if (G.order() > 32 || G.order() == 1) continue;
    CAPTURE(spec);
    for (const auto& F : fields_for(G.prime())) {
      const auto P = augmentation_powers(algebra(G, F));
      const auto Q = dense_powers(G, F);
      REQUIRE(P.size() == Q.size());
      for (std::size_t n = 0; n < P.size(); ++n) CHECK(P[n] == Q[n]);
    }
  }
}

TEST_CASE("Jennings and Lazard agree with the algebra") {
  for (const auto& spec : corpus::specs()) {
    const FiniteGroup G = G_(spec);
    if (G.order() > 128) continue;
    CAPTURE(spec);
    const auto lazard = dimension_subgroups_lazard(G);
    const auto oracle = jennings_oracle(G);
    CHECK(jennings_series(G, lazard) == oracle);
    for (const auto& F : fields_for(G.prime())) {
      CAPTURE(F.name());
      const GroupAlgebra A = algebra(G, F);
      CHECK(jennings_dims(augmentation_powers(A)) == oracle);
      CHECK(dimension_subgroups_algebraic(A) == lazard);
    }
  }
}

TEST_CASE("relative augmentation ideals") {
  for (const auto& spec : corpus::specs()) {
    const FiniteGroup G = G_(spec);
    if (G.order() > 64) continue;
    CAPTURE(spec);
    const GroupAlgebra A = algebra(G, FiniteField::make(G.prime() == 1 ? 2 : G.prime(), 1));
    const CharSeries cs = char_series(G);
    std::vector<Subgroup> normals = cs.lower_central;
    normals.push_back(cs.center);
    normals.push_back(cs.frattini);
    for (const auto& N : normals) {
      const Subspace I = relative_augmentation_ideal(A, N);
      CHECK(I.dim() == G.order() - G.order() / N.order());
      CHECK(is_ideal(A, I));
    }
  }
  const FiniteGroup D = G_("D8");
  const std::vector<Elem> s{D.gens()[1]};
  CHECK_THROWS_AS(relative_augmentation_ideal(algebra(D, FiniteField::make(2, 1)), subgroup_generated(D, s)),
                  InvalidArgument);
}

TEST_CASE("FG / Delta(G')FG is F[G/G'] by structure constants") {
  for (const auto& spec : corpus::specs()) {
    const FiniteGroup G = G_(spec);
    if (G.order() > 64) continue;
    CAPTURE(spec);
    const FiniteField F = FiniteField::make(G.prime() == 1 ? 2 : G.prime(), 1);
    const GroupAlgebra A = algebra(G, F);
    const Subgroup D = char_series(G).derived;
    const QuotientAlgebra Q = quotient_algebra(A, Subspace::full(F, G.order()), relative_augmentation_ideal(A, D));
    const auto qg = quotient_group(G, D);
    REQUIRE(Q.dim == qg.group.order());
    // image of each coset in Q, via any representative
    std::vector<Vec> image(qg.group.order());
    for (Elem g = 0; g < G.order(); ++g) {
      const Vec c = Q.coordinates(unit(G, g));
      if (image[qg.projection[g]].empty()) image[qg.projection[g]] = c;
      CHECK(image[qg.projection[g]] == c);
    }
    CHECK(Subspace::echelon(image, F, Q.dim).dim() == Q.dim);
    for (Elem x = 0; x < qg.group.order(); ++x)
      for (Elem y = 0; y < qg.group.order(); ++y) CHECK(Q.mul(image[x], image[y]) == image[qg.group.mul(x, y)]);
    CHECK(Q.unital);
    CHECK(Q.is_associative());
  }
}

TEST_CASE("Lie powers") {
  for (const auto& spec : corpus::specs()) {
    const FiniteGroup G = G_(spec);
    if (G.order() > 64) continue;
    CAPTURE(spec);
    const FiniteField F = FiniteField::make(G.prime() == 1 ? 2 : G.prime(), 1);
    const GroupAlgebra A = algebra(G, F);
    const auto P = augmentation_powers(A);
    const auto L = lie_power_ideals(A, 4);
    CHECK(L[0] == P[1]);
    CHECK(L[1] == relative_augmentation_ideal(A, char_series(G).derived));
    for (std::size_t n = 1; n <= 4; ++n) CHECK(L[n - 1].is_subspace_of(P[std::min(n, P.size() - 1)]));
    for (std::size_t n = 1; n < 4; ++n) CHECK(L[n].is_subspace_of(L[n - 1]));
  }
}

TEST_CASE("small group ring against dense products") {
  for (const auto& spec : corpus::specs()) {
    const FiniteGroup G = G_(spec);
    if (G.order() > 32) continue;
    CAPTURE(spec);
    const FiniteField F = FiniteField::make(G.prime() == 1 ? 2 : G.prime(), 1);
    const GroupAlgebra A = algebra(G, F);
    const Subgroup D = char_series(G).derived;
    std::vector<Vec> seed;
    for (Elem g = 0; g < G.order(); ++g)
      for (Elem h : D.elems)
        for (Elem k = 0; k < G.order(); ++k)
          seed.push_back(dense_mul(G, F, dense_mul(G, F, minus_one(G, F, g), minus_one(G, F, h)), unit(G, k)));
    const Subspace oracle = Subspace::echelon(seed, F, G.order());
    CHECK(small_group_ring_ideal(A) == oracle);
    CHECK(small_group_ring(A).dim == G.order() - oracle.dim());
  }
  CHECK(small_group_ring(algebra(G_("D8"), FiniteField::make(2, 1))).dim == 5);
}

TEST_CASE("kernel sizes: reduced count equals plain enumeration") {
  for (const char* spec : {"D8", "Q8", "C:8", "Ab:4,2", "Meta:2,3,1,0,5", "B2G:1,2", "C:9", "EA:3,2", "Meta:3,2,1,0,4"}) {
    const FiniteGroup G = G_(spec);
    for (const auto& F : fields_for(G.prime())) {
      const GroupAlgebra A = algebra(G, F);
      const auto P = augmentation_powers(A);
      for (auto [i, j] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}}) {
        const QuotientAlgebra Q = augmentation_section(A, P, i, j);
        std::uint64_t size = 1;
        for (std::size_t d = 0; d < Q.dim; ++d) size *= F.q();
        if (size > (1u << 16)) continue;
        for (unsigned k : {1u, 2u}) {
          CAPTURE(spec);
          CAPTURE(F.name());
          CAPTURE(i);
          CAPTURE(j);
          CAPTURE(k);
          const KernelSize fast = kernel_size_power_map(Q, k);
          CHECK(fast == kernel_size_power_map_naive(Q, k));
          CHECK(fast.killed + fast.surviving == size);
        }
      }
    }
  }
}

TEST_CASE("Lambda and Gamma by dense enumeration") {
  // Elements of Delta with square outside Delta^3, counted per coset of Delta^3.
  struct Case {
    const char* spec;
    unsigned k;
    std::uint64_t expected;
  };
  for (const Case& c : {Case{"D8", 1, 4}, Case{"Q8", 1, 12}, Case{"D8", 2, 144}, Case{"Q8", 2, 144}}) {
    CAPTURE(c.spec);
    CAPTURE(c.k);
    const FiniteGroup G = G_(c.spec);
    const FiniteField F = FiniteField::make(2, c.k);
    const auto P = dense_powers(G, F);
    std::uint64_t count = 0, total = 0;
    const auto& basis = P[1].rows();
    std::vector<unsigned> digits(basis.size(), 0);
    while (true) {
      Vec x(G.order(), 0);
      for (std::size_t i = 0; i < basis.size(); ++i) F.axpy(static_cast<Scalar>(digits[i]), basis[i], x);
      ++total;
      if (!P[3].contains(dense_mul(G, F, x, x))) ++count;
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == F.q()) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    std::uint64_t coset = 1;
    for (std::size_t d = 0; d < P[3].dim(); ++d) coset *= F.q();
    CHECK(count % coset == 0);
    CHECK(count / coset == c.expected);
    const QuotientAlgebra Q = augmentation_section(algebra(G, F), 1, 3);
    CHECK(kernel_size_power_map(Q, 1).surviving == c.expected);
    CHECK(Q.dim == 4);
    CHECK(is_nilpotent(Q));
    CHECK(algebra_powers(Q).size() == 3);
  }
}

TEST_CASE("Zassenhaus ideals satisfy the congruence with dimension subgroups") {
  // Z_n(F_p G) = span(D_n - 1) + Delta^{n+1}
  for (const auto& spec : corpus::specs()) {
    const FiniteGroup G = G_(spec);
    if (G.order() > 64 || G.order() == 1) continue;
    const unsigned p = G.prime();
    if (p != 2 && p != 3) continue;
    CAPTURE(spec);
    const FiniteField F = FiniteField::make(p, 1);
    const GroupAlgebra A = algebra(G, F);
    const auto P = augmentation_powers(A);
    const auto D = dimension_subgroups_lazard(G);
    for (std::size_t n = 1; n <= D.size() && D[n - 1].order() > 1; ++n) {
      CAPTURE(n);
      std::vector<Vec> rows = P[std::min(n + 1, P.size() - 1)].rows();
      for (Elem g : D[n - 1].elems) rows.push_back(minus_one(G, F, g));
      CHECK(zassenhaus_ideal(A, n) == Subspace::echelon(rows, F, G.order()));
    }
  }
}

TEST_CASE("caps and errors") {
  Caps caps;
  caps.algebra_order_cap = 4;
  CHECK_THROWS_AS(group_algebra(G_("D8"), FiniteField::make(2, 1), caps), CapExceeded);
  const GroupAlgebra A = algebra(G_("EA:2,4"), FiniteField::make(2, 2));
  const QuotientAlgebra Q = augmentation_section(A, 1, 5);
  CHECK_THROWS_AS(kernel_size_power_map_naive(Q, 1, 1000), CapExceeded);
  CHECK_THROWS_AS(augmentation_section(A, 2, 2), InvalidArgument);
  const GroupAlgebra B = algebra(G_("D8"), FiniteField::make(3, 1));
  CHECK_THROWS_AS(augmentation_powers(B), InvalidArgument);
}
