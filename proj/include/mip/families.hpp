#pragma once

// Constructors for the group families used throughout the library, and the
// family mini-language used by the CLI:
//
//   D8 | Q8 | C:<n> | Ab:<o1>,<o2>,... | EA:<p>,<r> | Meta:<p>,<m>,<n>,<s>,<r>
//   T:<i>,<n> | B1G:<m> | B1H:<m> | B2G:<m>,<n> | B2H:<m>,<n>
//   X:<spec>*<spec>*... | Pres:<path>

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mip/group.hpp"
#include "mip/words.hpp"

namespace mip {

namespace family {

struct D8 {};
struct Q8 {};
struct Cyclic {
  std::uint64_t n;
};
struct Abelian {
  std::vector<std::uint64_t> orders;
};
struct ElemAbelian {
  unsigned p;
  unsigned r;
};
/// <a, b | a^{p^m}, b^{p^n} = a^{p^{m-s}}, b^-1 a b = a^r>, order p^{m+n}.
struct Metacyclic {
  unsigned p, m, n, s;
  long long r;
};
/// 3-group of maximal class T_i of order 3^n on generators a, b, c, d.
struct MaxClass3 {
  unsigned i;
  unsigned n;
};
enum class Variant { G, H };
/// Two-generated class-two 2-groups of order 2^{3m}, center = derived.
struct BrocheCase1 {
  Variant variant;
  unsigned m;
};
/// Two-generated class-two 2-groups of order 2^{n+2m}, n > m >= 1.
struct BrocheCase2 {
  Variant variant;
  unsigned m, n;
};
struct Presented {
  std::string path;
};
struct DirectProduct;

}  // namespace family

using FamilySpec = std::variant<family::D8, family::Q8, family::Cyclic, family::Abelian, family::ElemAbelian,
                                family::Metacyclic, family::MaxClass3, family::BrocheCase1, family::BrocheCase2,
                                family::Presented, std::shared_ptr<family::DirectProduct>>;

namespace family {
struct DirectProduct {
  std::vector<FamilySpec> factors;
};
}  // namespace family

FamilySpec parse_family_spec(const std::string& text);
std::string family_spec_string(const FamilySpec& spec);

/// Presentation of the family member together with its declared order
/// (0 when no order is declared, as for Pres:).
std::pair<Presentation, std::uint64_t> family_presentation(const FamilySpec& spec);

/// Coset-enumerates the presentation and checks the declared order.
/// Throws InvalidArgument for out-of-range parameters and ConstructionError
/// when the order assertion fails.
FiniteGroup build(const FamilySpec& spec, std::uint64_t coset_cap = 100000, std::uint64_t order_cap = 2187);

enum class NamedPair { d8q8, broche1, broche2, t2t3 };

/// The pair (G, H) compared in the corresponding worked case.
std::pair<FiniteGroup, FiniteGroup> named_pair(NamedPair which, unsigned m = 1, unsigned n = 2,
                                               std::uint64_t coset_cap = 100000);

}  // namespace mip
