// Reference values. Each block names the statement it transcribes; formulas
// are copied term by term, with n the exponent in |G| = 3^n.

#include "mip/reference_values.hpp"

#include "mip/error.hpp"

namespace mip::reference {

namespace {

std::uint64_t pow3(int e) {
  if (e < 0) throw InvalidArgument("reference: negative exponent");
  std::uint64_t r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

void check_row(unsigned i, unsigned n) {
  if (i < 1 || i > 7 || n < 4 || (i >= 5 && n < 5)) throw InvalidArgument("reference: T_i(n) is not defined");
}

}  // namespace

// dim HH^1(FG), G of maximal class and order 3^n:
//   T1: 16 + 2*3^(n-2)     T2: 12 + 2*3^(n-2), and 38 when n = 4
//   T3: 12 + 2*3^(n-2)     T4: 10 + 2*3^(n-2)
//   T5: 12 + 22*3^(n-5)    T6: 10 + 22*3^(n-5)    T7: 14 + 22*3^(n-5)
std::size_t hh1_max_class3(unsigned i, unsigned n) {
  check_row(i, n);
  const int e = static_cast<int>(n);
  switch (i) {
    case 1: return 16 + 2 * pow3(e - 2);
    case 2: return n == 4 ? 38 : 12 + 2 * pow3(e - 2);
    case 3: return 12 + 2 * pow3(e - 2);
    case 4: return 10 + 2 * pow3(e - 2);
    case 5: return 12 + 22 * pow3(e - 5);
    case 6: return 10 + 22 * pow3(e - 5);
    default: return 14 + 22 * pow3(e - 5);
  }
}

// Conjugacy classes and centralizers, N = <b,c,d>, M = <c^3,d>.
//   T1..T4:  E            Z     N\Z          G\N
//            elements     3     3^(n-1)-3    3^n-3^(n-1)
//            classes      3     3^(n-2)-1    6
//            length       1     3            3^(n-2)
//            |C_G(g)|     3^n   3^(n-1)      9
//            C_G(g)       G     N            <g,Z>
//   T5..T7:  E            Z     M\Z          N\M              G\N
//            elements     3     3^(n-3)-3    3^(n-1)-3^(n-3)  3^n-3^(n-1)
//            classes      3     3^(n-4)-1    3^(n-3)-3^(n-5)  6
//            length       1     3            9                3^(n-2)
//            |C_G(g)|     3^n   3^(n-1)      3^(n-2)          9
//            C_G(g)       G     N            <g,M>            <g,Z>
std::vector<ClassRegion> class_regions(unsigned i, unsigned n) {
  check_row(i, n);
  const int e = static_cast<int>(n);
  std::vector<ClassRegion> r;
  r.push_back({"Z", 3, 3, 1, pow3(e), "G"});
  if (i <= 4) {
    r.push_back({"N\\Z", pow3(e - 1) - 3, pow3(e - 2) - 1, 3, pow3(e - 1), "N"});
  } else {
    r.push_back({"M\\Z", pow3(e - 3) - 3, pow3(e - 4) - 1, 3, pow3(e - 1), "N"});
    r.push_back({"N\\M", pow3(e - 1) - pow3(e - 3), pow3(e - 3) - pow3(e - 5), 9, pow3(e - 2), "<g,M>"});
  }
  r.push_back({"G\\N", pow3(e) - pow3(e - 1), 6, pow3(e - 2), 9, "<g,Z>"});
  return r;
}

// Contributions to dim HH^1 by class type.
//   Type 1 (C = G):       2*3
//   Type 2 (C = N):       2*(3^(n-2)-1); 3*(3^(n-2)-1) for T2, n = 4;
//                         2*(3^(n-4)-1) for T5..T7
//   Type 3 (C = <g,M>):   2*(3^(n-3)-3^(n-5)), T5..T7 only
//   Type 4 (C = <g,Z>):   T1 12; T2, T3, T5 8; T4, T6 6; T7 10
Hh1Contributions hh1_contributions(unsigned i, unsigned n) {
  check_row(i, n);
  const int e = static_cast<int>(n);
  Hh1Contributions c;
  c.type1 = 2 * 3;
  if (i <= 4)
    c.type2 = (i == 2 && n == 4 ? 3 : 2) * (pow3(e - 2) - 1);
  else
    c.type2 = 2 * (pow3(e - 4) - 1);
  if (i >= 5) c.type3 = 2 * (pow3(e - 3) - pow3(e - 5));
  static constexpr std::size_t type4[] = {0, 12, 8, 8, 6, 8, 6, 10};
  c.type4 = type4[i];
  return c;
}

std::vector<std::pair<unsigned, unsigned>> max_class3_rows() {
  std::vector<std::pair<unsigned, unsigned>> rows;
  for (unsigned n = 4; n <= 6; ++n)
    for (unsigned i = 1; i <= 7; ++i)
      if (i <= 4 || n >= 5) rows.emplace_back(i, n);
  return rows;
}

// Two-generated class two 2-groups, second family: |D_{2^m}(U)| = 2 and
// |D_{2^m}(V)| = 1; checked for these parameters.
std::vector<std::pair<unsigned, unsigned>> broche_case2_params() { return {{1, 2}, {1, 3}, {2, 3}}; }
// First family: Z = G' cyclic of order 2^m, G/Z of type [2^m, 2^m].
std::vector<unsigned> broche_case1_params() { return {1, 2}; }

// (1+t)^2 (1+t^2) = 1 + 2t + 2t^2 + 2t^3 + t^4
std::vector<std::size_t> jennings_dims_d8() { return {2, 2, 2, 1}; }

}  // namespace mip::reference
