#include "mip/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

#include "mip/error.hpp"

namespace mip {

using ojson = nlohmann::ordered_json;

const std::array<const char*, 6> kTransferSectionNames = {
    "Z&agemo_k(G)G'", "Z.agemo_k(G)G'/agemo_k(G)G'", "G/agemo_k(Z)G'",
    "agemo_k(Z)G'/G'", "G/omega_k(Z)G'",             "omega_k(Z)G'/G'"};

// ------------------------------------------------------------------- hh1

std::size_t hh1_dimension(const FiniteGroup& G, const ClassData& cd) {
  std::size_t total = 0;
  for (const auto& C : cd.centralizers) total += min_generators(G, C);
  return total;
}

std::size_t hh1_dimension(const FiniteGroup& G) { return hh1_dimension(G, conjugacy_classes(G)); }

// ------------------------------------------------------- class power sets

ClassPowerStats class_power_stats(const FiniteGroup& G, const ClassData& cd, unsigned k) {
  const unsigned p = G.prime();
  long long e = 1;
  for (unsigned i = 0; i < k; ++i) e *= (p >= 2 ? p : 1);
  std::set<std::vector<Elem>> sets;
  ClassPowerStats s;
  for (const auto& C : cd.classes) {
    std::vector<Elem> img;
    for (Elem g : C.elems) img.push_back(G.pow(g, e));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (img.size() == C.length()) ++s.preserving;
    sets.insert(std::move(img));
  }
  s.distinct = sets.size();
  return s;
}

ClassPowerStats class_power_stats(const FiniteGroup& G, unsigned k) {
  return class_power_stats(G, conjugacy_classes(G), k);
}

// ------------------------------------------------------- transfer sections

std::vector<TransferSections> transfer_sections(const FiniteGroup& G, std::optional<unsigned> k_max) {
  const unsigned p = G.prime();
  const Subgroup W = whole_group(G);
  const Subgroup Z = center(G);
  const Subgroup D = derived_subgroup(G, W);
  unsigned top = 0;
  if (k_max) {
    top = *k_max;
  } else if (p >= 2) {
    top = log_p(exponent(G), p);
  }
  std::vector<TransferSections> out;
  for (unsigned k = 0; k <= top; ++k) {
    TransferSections t;
    if (p < 2) {
      out.push_back(t);
      continue;
    }
    const Subgroup AkD = join(G, agemo(G, W, k), D);
    t[0] = abelian_type(G, intersect(G, Z, AkD), trivial_subgroup(G));
    t[1] = abelian_type(G, join(G, Z, AkD), AkD);
    const Subgroup AZD = join(G, agemo(G, Z, k), D);
    t[2] = abelian_type(G, W, AZD);
    t[3] = abelian_type(G, AZD, D);
    const Subgroup OZD = join(G, omega(G, Z, k), D);
    t[4] = abelian_type(G, W, OZD);
    t[5] = abelian_type(G, OZD, D);
    out.push_back(std::move(t));
  }
  return out;
}

// ------------------------------------------------------------- fingerprint

const std::vector<KernelSection>& default_kernel_sections() {
  static const std::vector<KernelSection> s = {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}, {1, 3, 2}};
  return s;
}

namespace {

template <class T>
Entry<T> guarded(auto&& fn) {
  try {
    return Entry<T>::of(fn());
  } catch (const CapExceeded& e) {
    return Entry<T>::missing(e.cap());
  }
}

}  // namespace

Fingerprint fingerprint(const FiniteGroup& G, const FiniteField& F, const Caps& caps) {
  const unsigned p = G.prime();
  if (p == 0 || (p >= 2 && p != F.p()))
    throw InvalidArgument("fingerprint needs a p-group in the field characteristic " + std::to_string(F.p()));
  if (G.order() > caps.group_order_cap)
    throw CapExceeded("group_order_cap", "group of order " + std::to_string(G.order()) + " exceeds the cap");
  if (F.q() > caps.field_cap) throw CapExceeded("field_cap", "field of order " + std::to_string(F.q()) + " exceeds the cap");

  Fingerprint f;
  f.p = F.p();
  f.k = F.k();
  f.order = G.order();
  const Subgroup W = whole_group(G);
  const CharSeries cs = char_series(G);
  const ClassData cd = conjugacy_classes(G);

  f.abelianization = abelian_type(G, W, cs.derived);
  f.center_type = abelian_type(G, cs.center, trivial_subgroup(G));
  const auto lazard = dimension_subgroups_lazard(G);
  for (std::size_t n = 0; n + 1 < lazard.size(); ++n)
    f.jennings_factors.push_back(abelian_type(G, lazard[n], lazard[n + 1]));
  f.min_gens = min_generators(G);
  f.exponent = exponent(G);
  if (p >= 2)
    for (unsigned k = 1, e = log_p(f.exponent, p); k <= e; ++k) f.class_power_stats.push_back(class_power_stats(G, cd, k));
  f.hh1_dim = hh1_dimension(G, cd);
  f.max_elem_ab_classes = guarded<std::map<std::size_t, std::size_t>>(
      [&] { return maximal_elem_abelian_classes(G, caps.elem_ab_cap); });
  f.transfer_sections = transfer_sections(G);

  f.nilpotency_class.value = cs.nilpotency_class;
  if (p >= 2) {
    const unsigned n = log_p(G.order(), p);
    f.nilpotency_class.exponent_p = f.exponent == p;
    f.nilpotency_class.derived_cyclic = min_generators(G, cs.derived) <= 1;
    f.nilpotency_class.class_two = cs.nilpotency_class == 2;
    f.nilpotency_class.maximal_class = n >= 2 && cs.nilpotency_class == n - 1;
  }
  f.elem_ab_direct_factor_rank =
      guarded<std::size_t>([&] { return max_elem_abelian_direct_factor(G, caps.direct_factor_cap); });

  const auto& sections = default_kernel_sections();
  if (G.order() > caps.algebra_order_cap) {
    const std::string cap = "algebra_order_cap";
    f.jennings_dims = Entry<std::vector<std::size_t>>::missing(cap);
    for (const auto& s : sections) f.kernel_sizes.push_back({s.i, s.j, s.k, Entry<KernelSize>::missing(cap)});
    f.small_group_ring_dim = Entry<std::size_t>::missing(cap);
    f.zassenhaus_dims = Entry<std::vector<std::size_t>>::missing(cap);
    return f;
  }
  const GroupAlgebra A = group_algebra(G, F, caps);
  const auto powers = augmentation_powers(A);
  f.jennings_dims = Entry<std::vector<std::size_t>>::of(jennings_dims(powers));
  for (const auto& s : sections) {
    f.kernel_sizes.push_back({s.i, s.j, s.k, guarded<KernelSize>([&] {
                                return kernel_size_power_map(augmentation_section(A, powers, s.i, s.j), s.k,
                                                             caps.enum_cap);
                              })});
  }
  f.small_group_ring_dim = Entry<std::size_t>::of(A.dim() - small_group_ring_ideal(A).dim());
  if (!F.is_prime()) {
    f.zassenhaus_dims = Entry<std::vector<std::size_t>>::missing("prime_field_only");
  } else {
    const std::size_t L = lazard.size() - 1;  // D_1..D_L nontrivial
    f.zassenhaus_dims = guarded<std::vector<std::size_t>>([&] {
      const auto lie = lie_power_ideals(A, std::max<std::size_t>(L, 1));
      std::vector<std::size_t> dims;
      for (std::size_t n = 1; n <= L; ++n) dims.push_back(zassenhaus_ideal(A, n, powers, lie, caps.enum_cap).dim());
      return dims;
    });
  }
  return f;
}

// -------------------------------------------------------------- JSON / CSV

namespace {

ojson type_json(const AbelianType& t) { return ojson(t.orders); }

AbelianType type_from(const ojson& j) { return AbelianType{j.get<std::vector<std::uint64_t>>()}; }

template <class T, class Fn>
ojson entry_json(const Entry<T>& e, Fn&& fn) {
  if (!e.available()) return ojson{{"unavailable", e.unavailable}};
  return fn(*e.value);
}

template <class T, class Fn>
Entry<T> entry_from(const ojson& j, Fn&& fn) {
  if (j.is_object() && j.contains("unavailable")) return Entry<T>::missing(j["unavailable"].get<std::string>());
  return Entry<T>::of(fn(j));
}

ojson fingerprint_json(const Fingerprint& f) {
  ojson j;
  j["field"] = ojson{{"p", f.p}, {"k", f.k}};
  j["order"] = f.order;
  j["abelianization"] = type_json(f.abelianization);
  j["center_type"] = type_json(f.center_type);
  j["jennings_factors"] = ojson::array();
  for (const auto& t : f.jennings_factors) j["jennings_factors"].push_back(type_json(t));
  j["min_gens"] = f.min_gens;
  j["exponent"] = f.exponent;
  j["class_power_stats"] = ojson::array();
  for (std::size_t i = 0; i < f.class_power_stats.size(); ++i)
    j["class_power_stats"].push_back(ojson{{"k", i + 1},
                                           {"distinct", f.class_power_stats[i].distinct},
                                           {"preserving", f.class_power_stats[i].preserving}});
  j["hh1_dim"] = f.hh1_dim;
  j["max_elem_ab_classes"] = entry_json(f.max_elem_ab_classes, [](const auto& m) {
    ojson o = ojson::object();
    for (const auto& [r, c] : m) o[std::to_string(r)] = c;
    return o;
  });
  j["transfer_sections"] = ojson::array();
  for (std::size_t k = 0; k < f.transfer_sections.size(); ++k) {
    ojson o;
    o["k"] = k;
    for (std::size_t s = 0; s < 6; ++s) o[kTransferSectionNames[s]] = type_json(f.transfer_sections[k][s]);
    j["transfer_sections"].push_back(std::move(o));
  }
  const auto& c = f.nilpotency_class;
  j["nilpotency_class"] = ojson{{"value", c.value},
                                {"exponent_p", c.exponent_p},
                                {"derived_cyclic", c.derived_cyclic},
                                {"class_two", c.class_two},
                                {"maximal_class", c.maximal_class}};
  j["jennings_dims"] = entry_json(f.jennings_dims, [](const auto& v) { return ojson(v); });
  j["kernel_sizes"] = ojson::array();
  for (const auto& e : f.kernel_sizes) {
    ojson o;
    o["i"] = e.i;
    o["j"] = e.j;
    o["k"] = e.k;
    o["counts"] = entry_json(e.counts, [](const KernelSize& ks) {
      return ojson{{"killed", ks.killed}, {"surviving", ks.surviving}};
    });
    j["kernel_sizes"].push_back(std::move(o));
  }
  j["elem_ab_direct_factor_rank"] = entry_json(f.elem_ab_direct_factor_rank, [](std::size_t v) { return ojson(v); });
  j["small_group_ring_dim"] = entry_json(f.small_group_ring_dim, [](std::size_t v) { return ojson(v); });
  j["zassenhaus_dims"] = entry_json(f.zassenhaus_dims, [](const auto& v) { return ojson(v); });
  return j;
}

}  // namespace

std::string Fingerprint::to_json(int indent) const { return fingerprint_json(*this).dump(indent); }

Fingerprint Fingerprint::from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw ParseError(std::string("fingerprint JSON: ") + e.what());
  }
  try {
    Fingerprint f;
    f.p = j.at("field").at("p").get<unsigned>();
    f.k = j.at("field").at("k").get<unsigned>();
    f.order = j.at("order").get<std::uint64_t>();
    f.abelianization = type_from(j.at("abelianization"));
    f.center_type = type_from(j.at("center_type"));
    for (const auto& t : j.at("jennings_factors")) f.jennings_factors.push_back(type_from(t));
    f.min_gens = j.at("min_gens").get<std::size_t>();
    f.exponent = j.at("exponent").get<std::uint64_t>();
    for (const auto& s : j.at("class_power_stats"))
      f.class_power_stats.push_back({s.at("distinct").get<std::size_t>(), s.at("preserving").get<std::size_t>()});
    f.hh1_dim = j.at("hh1_dim").get<std::size_t>();
    f.max_elem_ab_classes = entry_from<std::map<std::size_t, std::size_t>>(j.at("max_elem_ab_classes"), [](const ojson& o) {
      std::map<std::size_t, std::size_t> m;
      for (const auto& [r, c] : o.items()) m[std::stoul(r)] = c.get<std::size_t>();
      return m;
    });
    for (const auto& o : j.at("transfer_sections")) {
      TransferSections t;
      for (std::size_t s = 0; s < 6; ++s) t[s] = type_from(o.at(kTransferSectionNames[s]));
      f.transfer_sections.push_back(std::move(t));
    }
    const auto& c = j.at("nilpotency_class");
    f.nilpotency_class = {c.at("value").get<std::size_t>(), c.at("exponent_p").get<bool>(),
                          c.at("derived_cyclic").get<bool>(), c.at("class_two").get<bool>(),
                          c.at("maximal_class").get<bool>()};
    auto vec = [](const ojson& o) { return o.get<std::vector<std::size_t>>(); };
    auto num = [](const ojson& o) { return o.get<std::size_t>(); };
    f.jennings_dims = entry_from<std::vector<std::size_t>>(j.at("jennings_dims"), vec);
    for (const auto& o : j.at("kernel_sizes"))
      f.kernel_sizes.push_back({o.at("i").get<unsigned>(), o.at("j").get<unsigned>(), o.at("k").get<unsigned>(),
                                entry_from<KernelSize>(o.at("counts"), [](const ojson& x) {
                                  return KernelSize{x.at("killed").get<std::uint64_t>(),
                                                    x.at("surviving").get<std::uint64_t>()};
                                })});
    f.elem_ab_direct_factor_rank = entry_from<std::size_t>(j.at("elem_ab_direct_factor_rank"), num);
    f.small_group_ring_dim = entry_from<std::size_t>(j.at("small_group_ring_dim"), num);
    f.zassenhaus_dims = entry_from<std::vector<std::size_t>>(j.at("zassenhaus_dims"), vec);
    return f;
  } catch (const ojson::exception& e) {
    throw ParseError(std::string("fingerprint JSON: ") + e.what());
  }
}

std::string Fingerprint::to_csv() const {
  const ojson j = fingerprint_json(*this);
  std::ostringstream out;
  out << "invariant,value\n";
  for (const auto& [key, value] : j.items()) {
    std::string v = value.dump();
    if (v.find_first_of(",\"\n") != std::string::npos) {
      std::string q = "\"";
      for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      v = q + "\"";
    }
    out << key << "," << v << "\n";
  }
  return out.str();
}

// ----------------------------------------------------------------- compare

namespace {

bool is_unavailable(const ojson& v) { return v.is_object() && v.contains("unavailable"); }

void compare_value(Verdict& v, const std::string& name, const ojson& a, const ojson& b) {
  if (is_unavailable(a) || is_unavailable(b)) {
    v.skipped.push_back(name);
    return;
  }
  v.compared.push_back(name);
  if (a != b) v.differences.push_back({name, a.dump(), b.dump()});
}

}  // namespace

Verdict compare(const Fingerprint& f, const Fingerprint& g) {
  if (f.p != g.p || f.k != g.k) throw InvalidArgument("compare: fingerprints are over different fields");
  const ojson a = fingerprint_json(f), b = fingerprint_json(g);
  Verdict v;
  for (const auto& [key, av] : a.items()) {
    const ojson& bv = b.at(key);
    if (key == "field") continue;
    if (key == "nilpotency_class") {
      const std::string name = "nilpotency_class";
      if (f.nilpotency_class.licensed() || g.nilpotency_class.licensed())
        compare_value(v, name, av.at("value"), bv.at("value"));
      else
        v.skipped.push_back(name);
      continue;
    }
    if (key == "kernel_sizes") {
      for (const auto& ea : av) {
        const std::string name = "kernel_sizes(" + ea.at("i").dump() + "," + ea.at("j").dump() + "," +
                                 ea.at("k").dump() + ")";
        const auto it = std::find_if(bv.begin(), bv.end(), [&](const ojson& eb) {
          return eb.at("i") == ea.at("i") && eb.at("j") == ea.at("j") && eb.at("k") == ea.at("k");
        });
        if (it == bv.end())
          v.skipped.push_back(name);
        else
          compare_value(v, name, ea.at("counts"), it->at("counts"));
      }
      continue;
    }
    if (key == "transfer_sections" && av.size() == bv.size()) {
      for (std::size_t k = 0; k < av.size(); ++k)
        for (const char* s : kTransferSectionNames)
          compare_value(v, "transfer_sections[k=" + std::to_string(k) + "]." + s, av[k].at(s), bv[k].at(s));
      continue;
    }
    compare_value(v, key, av, bv);
  }
  v.distinguished = !v.differences.empty();
  return v;
}

std::string Verdict::to_json(int indent) const {
  ojson j;
  j["outcome"] = distinguished ? "Distinguished" : "Indistinguishable";
  j["differences"] = ojson::array();
  for (const auto& d : differences)
    j["differences"].push_back(ojson{{"invariant", d.name}, {"left", ojson::parse(d.left)}, {"right", ojson::parse(d.right)}});
  j["compared"] = compared;
  j["skipped"] = skipped;
  return j.dump(indent);
}

}  // namespace mip
