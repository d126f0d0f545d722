#pragma once

#include <cstdint>
#include <string>

namespace mip {

/// Resource limits. Every exhaustive procedure checks one of these before it
/// starts; exceeding a cap is reported, never silently truncated.
struct Caps {
  std::uint64_t coset_cap = 100000;          // Todd-Coxeter table rows
  std::uint64_t enum_cap = 1u << 24;         // q^dim enumerations
  std::uint64_t group_order_cap = 2187;      // largest group built
  std::uint64_t algebra_order_cap = 729;     // largest |G| for algebra-side entries
  std::uint64_t field_cap = 81;              // largest q
  std::uint64_t ambient_cap = 2187;          // largest coordinate space
  std::uint64_t elem_ab_cap = 1000000;       // elementary abelian subgroups visited
  std::uint64_t direct_factor_cap = 2187;    // largest |G| for the direct factor search
  std::uint64_t iso_search_cap = 10000000;   // pruned generator-image assignments

  /// Reads a JSON object whose keys are the member names above. Unknown keys
  /// are rejected.
  static Caps from_json_text(const std::string& text);
  static Caps from_file(const std::string& path);
};

}  // namespace mip
