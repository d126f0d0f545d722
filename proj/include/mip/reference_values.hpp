#pragma once

// Reference values the table suites check against. All of them live in
// src/reference_values.cpp; nothing in the library writes to them.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mip::reference {

/// dim HH^1(F T_i(n)) for the maximal class 3-groups.
std::size_t hh1_max_class3(unsigned i, unsigned n);

/// One column of the class/centralizer tables: elements of the region E,
/// how many classes they form, the common class length, the common
/// centralizer order and the centralizer as a subgroup ("G", "N",
/// "<g,M>", "<g,Z>").
struct ClassRegion {
  std::string name;  // "Z", "N\\Z", "M\\Z", "N\\M", "G\\N"
  std::uint64_t elements = 0;
  std::uint64_t classes = 0;
  std::uint64_t class_length = 0;
  std::uint64_t centralizer_order = 0;
  std::string centralizer;
};
/// i in 1..4: Z, N\Z, G\N. i in 5..7: Z, M\Z, N\M, G\N.
std::vector<ClassRegion> class_regions(unsigned i, unsigned n);

/// Per class type sums of log_3 |C/Frat(C)|. type3 is 0 for i <= 4.
struct Hh1Contributions {
  std::size_t type1 = 0, type2 = 0, type3 = 0, type4 = 0;
};
Hh1Contributions hh1_contributions(unsigned i, unsigned n);

/// Which (i, n) are tabulated: i in 1..4 with n in 4..6, i in 5..7 with n in 5..6.
std::vector<std::pair<unsigned, unsigned>> max_class3_rows();

/// Elements of Delta/Delta^3 over F_2 with nonzero square.
inline constexpr std::uint64_t kLambdaNonzeroSquares = 4;  // D8
inline constexpr std::uint64_t kGammaNonzeroSquares = 8;   // Q8

/// |D_{2^m}(U)| and |D_{2^m}(V)| for the second pair family, where
/// U = Omega_m(G : G') and V = Omega_m(H : H').
inline constexpr std::uint64_t kBrocheDU = 2;
inline constexpr std::uint64_t kBrocheDV = 1;
std::vector<std::pair<unsigned, unsigned>> broche_case2_params();  // (m, n)
std::vector<unsigned> broche_case1_params();                       // m

/// Delta^n / Delta^{n+1} dimensions of F D8 in characteristic 2.
std::vector<std::size_t> jennings_dims_d8();

}  // namespace mip::reference
