#pragma once

// Invariants of (G, FG) that any F-algebra isomorphism FG -> FH preserves,
// collected into a Fingerprint, and the comparison of two fingerprints.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mip/caps.hpp"
#include "mip/gfq.hpp"
#include "mip/group.hpp"
#include "mip/modalg.hpp"

namespace mip {

/// A value, or the name of the cap that prevented computing it.
template <class T>
struct Entry {
  std::optional<T> value;
  std::string unavailable;

  static Entry of(T v) { return Entry{std::move(v), {}}; }
  static Entry missing(std::string cap) { return Entry{std::nullopt, std::move(cap)}; }
  bool available() const { return value.has_value(); }
  bool operator==(const Entry&) const = default;
};

/// sum over classes of log_p |C_G(g) / Frat(C_G(g))|, i.e. dim HH^1(FG).
std::size_t hh1_dimension(const FiniteGroup& G);
std::size_t hh1_dimension(const FiniteGroup& G, const ClassData& cd);

struct ClassPowerStats {
  std::size_t distinct = 0;    // |{C^{p^k}}|
  std::size_t preserving = 0;  // classes C with |C^{p^k}| = |C|
  bool operator==(const ClassPowerStats&) const = default;
};
ClassPowerStats class_power_stats(const FiniteGroup& G, unsigned k);
ClassPowerStats class_power_stats(const FiniteGroup& G, const ClassData& cd, unsigned k);

/// For a given k, the types of
///   Z cap O_k(G)G',  Z O_k(G)G' / O_k(G)G',  G / O_k(Z)G',
///   O_k(Z)G' / G',   G / W_k(Z)G',           W_k(Z)G' / G'
/// where O_k is agemo and W_k is omega.
using TransferSections = std::array<AbelianType, 6>;
extern const std::array<const char*, 6> kTransferSectionNames;

/// Sections for k = 0..k_max; k_max defaults to the least k with O_k(G) = 1.
std::vector<TransferSections> transfer_sections(const FiniteGroup& G, std::optional<unsigned> k_max = std::nullopt);

struct ClassEntry {
  std::size_t value = 0;
  bool exponent_p = false;
  bool derived_cyclic = false;
  bool class_two = false;
  bool maximal_class = false;
  bool licensed() const { return exponent_p || derived_cyclic || class_two || maximal_class; }
  bool operator==(const ClassEntry&) const = default;
};

struct KernelSizeEntry {
  unsigned i = 0, j = 0, k = 0;  // section Delta^i / Delta^j, power p^k
  Entry<KernelSize> counts;
  bool operator==(const KernelSizeEntry&) const = default;
};

struct Fingerprint {
  unsigned p = 0, k = 0;  // field F_{p^k}
  std::uint64_t order = 0;
  AbelianType abelianization;
  AbelianType center_type;
  std::vector<AbelianType> jennings_factors;  // D_n / D_{n+1}
  std::size_t min_gens = 0;
  std::uint64_t exponent = 0;
  std::vector<ClassPowerStats> class_power_stats;  // k = 1, 2, ... up to exponent
  std::size_t hh1_dim = 0;
  Entry<std::map<std::size_t, std::size_t>> max_elem_ab_classes;
  std::vector<TransferSections> transfer_sections;  // k = 0..k_max
  ClassEntry nilpotency_class;
  Entry<std::vector<std::size_t>> jennings_dims;
  std::vector<KernelSizeEntry> kernel_sizes;
  Entry<std::size_t> elem_ab_direct_factor_rank;
  Entry<std::size_t> small_group_ring_dim;
  Entry<std::vector<std::size_t>> zassenhaus_dims;

  bool operator==(const Fingerprint&) const = default;

  std::string to_json(int indent = 2) const;
  static Fingerprint from_json(const std::string& text);
  /// One "name,value" line per entry; compound values are JSON-encoded.
  std::string to_csv() const;
};

struct KernelSection {
  unsigned i, j, k;
};
/// (1,2,1), (1,3,1), (2,3,1), (1,3,2).
const std::vector<KernelSection>& default_kernel_sections();

/// Requires G to be a p-group with p the field characteristic (or trivial).
Fingerprint fingerprint(const FiniteGroup& G, const FiniteField& F, const Caps& caps = {});

struct Difference {
  std::string name;
  std::string left, right;  // JSON values
};

struct Verdict {
  bool distinguished = false;
  std::vector<Difference> differences;
  std::vector<std::string> compared;
  std::vector<std::string> skipped;  // unavailable on at least one side, or unlicensed
  std::string to_json(int indent = 2) const;
};

/// Compares every entry available on both sides. The nilpotency class is
/// compared when either side licenses it. Throws InvalidArgument when the
/// fields differ.
Verdict compare(const Fingerprint& f, const Fingerprint& g);

}  // namespace mip
