#include "doctest.h"

#include "corpus.hpp"
#include "oracles.hpp"
#include "mip/error.hpp"
#include "mip/invariants.hpp"

using namespace mip;

namespace {

FiniteGroup G_(const std::string& spec) { return corpus::build(spec); }

void check_group_side_equal(const Fingerprint& a, const Fingerprint& b) {
  CHECK(a.order == b.order);
  CHECK(a.abelianization == b.abelianization);
  CHECK(a.center_type == b.center_type);
  CHECK(a.jennings_factors == b.jennings_factors);
  CHECK(a.min_gens == b.min_gens);
  CHECK(a.exponent == b.exponent);
  CHECK(a.class_power_stats == b.class_power_stats);
  CHECK(a.hh1_dim == b.hh1_dim);
  CHECK(a.max_elem_ab_classes == b.max_elem_ab_classes);
  CHECK(a.transfer_sections == b.transfer_sections);
  CHECK(a.nilpotency_class == b.nilpotency_class);
  CHECK(a.elem_ab_direct_factor_rank == b.elem_ab_direct_factor_rank);
}

}  // namespace

TEST_CASE("HH^1 dimension against derivations") {
  for (const auto& spec : corpus::specs()) {
    const FiniteGroup G = G_(spec);
    if (G.order() > 16 || G.order() == 1) continue;
    CAPTURE(spec);
    CHECK(hh1_dimension(G) == oracle::hh1_by_derivations(G, FiniteField::make(G.prime(), 1)));
  }
  CHECK(hh1_dimension(G_("T:4,4")) == 28);
}

TEST_CASE("class power statistics") {
  CHECK(class_power_stats(G_("D8"), 1) == ClassPowerStats{2, 2});
  CHECK(class_power_stats(G_("Q8"), 1) == ClassPowerStats{2, 2});
  CHECK(class_power_stats(G_("C:2"), 1) == ClassPowerStats{1, 2});
  CHECK(class_power_stats(G_("C:8"), 3) == ClassPowerStats{1, 8});
  for (const auto& spec : corpus::specs()) {
    const FiniteGroup G = G_(spec);
    if (G.order() > 64) continue;
    const std::size_t classes = conjugacy_classes(G).classes.size();
    const auto s = class_power_stats(G, 1);
    CHECK(s.distinct >= 1);
    CHECK(s.distinct <= classes);
    CHECK(s.preserving <= classes);
  }
}

TEST_CASE("transfer section orders multiply out") {
  for (const auto& spec : corpus::specs()) {
    const FiniteGroup G = G_(spec);
    if (G.order() > 128) continue;
    CAPTURE(spec);
    const std::uint64_t ab = abelian_type(G, whole_group(G), char_series(G).derived).order();
    for (const auto& t : transfer_sections(G)) {
      CHECK(t[2].order() * t[3].order() == ab);
      CHECK(t[4].order() * t[5].order() == ab);
    }
  }
}

TEST_CASE("fingerprint JSON round trip") {
  for (const char* spec : {"D8", "Q8", "T:2,4", "C:2", "B2G:1,2", "Meta:3,2,1,0,4"}) {
    CAPTURE(spec);
    const FiniteGroup G = G_(spec);
    const Fingerprint f = fingerprint(G, FiniteField::make(G.prime(), 1));
    const std::string text = f.to_json();
    const Fingerprint g = Fingerprint::from_json(text);
    CHECK(g == f);
    CHECK(g.to_json() == text);
  }
  CHECK_THROWS_AS(Fingerprint::from_json("{}"), ParseError);
}

TEST_CASE("compare is reflexive and symmetric") {
  const FiniteField F = FiniteField::make(2, 1);
  std::vector<Fingerprint> fs;
  for (const char* spec : {"D8", "Q8", "C:8", "Ab:4,2", "EA:2,3", "Meta:2,3,1,0,5", "B2G:1,2", "B2H:1,2"})
    fs.push_back(fingerprint(G_(spec), F));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    CHECK_FALSE(compare(fs[i], fs[i]).distinguished);
    CHECK(compare(fs[i], fs[i]).differences.empty());
    for (std::size_t j = 0; j < fs.size(); ++j) {
      const Verdict a = compare(fs[i], fs[j]), b = compare(fs[j], fs[i]);
      CHECK(a.distinguished == b.distinguished);
      CHECK(a.differences.size() == b.differences.size());
      CHECK(a.compared == b.compared);
    }
  }
  const Verdict dq = compare(fs[0], fs[1]);
  CHECK(dq.distinguished);
  bool hh1 = false;
  for (const auto& d : dq.differences) hh1 = hh1 || d.name == "hh1_dim";
  CHECK(hh1);
  CHECK_THROWS_AS(compare(fs[0], fingerprint(G_("D8"), FiniteField::make(2, 2))), InvalidArgument);
}

TEST_CASE("isomorphic groups are never distinguished") {
  const FiniteField F = FiniteField::make(3, 1);
  Caps caps;
  const Verdict v = compare(fingerprint(G_("T:2,5"), F, caps), fingerprint(G_("T:3,5"), F, caps));
  CHECK_FALSE(v.distinguished);
  CHECK(v.differences.empty());
  const Verdict w = compare(fingerprint(G_("D8"), FiniteField::make(2, 1)), fingerprint(G_("Meta:2,2,1,0,3"), FiniteField::make(2, 1)));
  CHECK_FALSE(w.distinguished);
}

TEST_CASE("entries beyond a cap are reported, not computed") {
  Caps caps;
  caps.algebra_order_cap = 4;
  caps.elem_ab_cap = 1;
  const Fingerprint f = fingerprint(G_("D8"), FiniteField::make(2, 1), caps);
  CHECK_FALSE(f.jennings_dims.available());
  CHECK(f.jennings_dims.unavailable == "algebra_order_cap");
  CHECK_FALSE(f.max_elem_ab_classes.available());
  CHECK(f.max_elem_ab_classes.unavailable == "elem_ab_cap");
  for (const auto& k : f.kernel_sizes) CHECK_FALSE(k.counts.available());
  const Fingerprint g = fingerprint(G_("Q8"), FiniteField::make(2, 1));
  const Verdict v = compare(f, g);
  CHECK(std::find(v.skipped.begin(), v.skipped.end(), "jennings_dims") != v.skipped.end());
  CHECK(v.distinguished);  // hh1 still differs

  Caps small;
  small.group_order_cap = 4;
  CHECK_THROWS_AS(fingerprint(G_("D8"), FiniteField::make(2, 1), small), CapExceeded);
  CHECK_THROWS_AS(fingerprint(G_("D8"), FiniteField::make(3, 1)), InvalidArgument);
}

TEST_CASE("group-side entries do not depend on the field") {
  for (const char* spec : {"T:1,4", "Meta:3,2,1,0,4"}) {
    const FiniteGroup G = G_(spec);
    const Fingerprint a = fingerprint(G, FiniteField::make(3, 1));
    const Fingerprint b = fingerprint(G, FiniteField::make(3, 2));
    check_group_side_equal(a, b);
    CHECK(a.jennings_dims == b.jennings_dims);
    CHECK(a.small_group_ring_dim == b.small_group_ring_dim);
    CHECK_FALSE(b.zassenhaus_dims.available());
  }
  const FiniteGroup D = G_("D8");
  const Fingerprint a = fingerprint(D, FiniteField::make(2, 1));
  const Fingerprint b = fingerprint(D, FiniteField::make(2, 2));
  check_group_side_equal(a, b);
  CHECK(a.kernel_sizes[1].counts.value->surviving == 4);
  CHECK(b.kernel_sizes[1].counts.value->surviving == 144);
}

TEST_CASE("CSV lists every entry") {
  const Fingerprint f = fingerprint(G_("D8"), FiniteField::make(2, 1));
  const std::string csv = f.to_csv();
  for (const char* key : {"order,", "hh1_dim,", "jennings_dims,", "small_group_ring_dim,", "zassenhaus_dims,"})
    CHECK(csv.find(key) != std::string::npos);
}
