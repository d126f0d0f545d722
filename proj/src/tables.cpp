#include "mip/tables.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "json.hpp"

#include "mip/error.hpp"
#include "mip/families.hpp"
#include "mip/invariants.hpp"
#include "mip/reference_values.hpp"

namespace mip {

bool TableReport::all_pass() const { return failures() == 0; }

std::size_t TableReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const TableCell& c) { return !c.pass; }));
}

std::string TableReport::to_text() const {
  std::size_t w[4] = {3, 6, 8, 8};
  for (const auto& c : cells) {
    w[0] = std::max(w[0], c.row.size());
    w[1] = std::max(w[1], c.column.size());
    w[2] = std::max(w[2], c.computed.size());
    w[3] = std::max(w[3], c.expected.size());
  }
  auto pad = [](const std::string& s, std::size_t n) { return s + std::string(n - std::min(n, s.size()) + 2, ' '); };
  std::ostringstream out;
  out << name << ": " << title << "\n";
  out << pad("row", w[0]) << pad("column", w[1]) << pad("computed", w[2]) << pad("expected", w[3]) << "status\n";
  for (const auto& c : cells)
    out << pad(c.row, w[0]) << pad(c.column, w[1]) << pad(c.computed, w[2]) << pad(c.expected, w[3])
        << (c.pass ? "PASS" : "FAIL") << "\n";
  out << (all_pass() ? "all " + std::to_string(cells.size()) + " cells PASS"
                     : std::to_string(failures()) + " of " + std::to_string(cells.size()) + " cells FAIL")
      << "\n";
  return out.str();
}

std::string TableReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["table"] = name;
  j["title"] = title;
  j["pass"] = all_pass();
  j["cells"] = nlohmann::ordered_json::array();
  for (const auto& c : cells)
    j["cells"].push_back({{"row", c.row},
                          {"column", c.column},
                          {"computed", c.computed},
                          {"expected", c.expected},
                          {"pass", c.pass}});
  return j.dump(indent);
}

namespace {

void cell(TableReport& t, std::string row, std::string column, std::string computed, std::string expected) {
  const bool pass = computed == expected;
  t.cells.push_back({std::move(row), std::move(column), std::move(computed), std::move(expected), pass});
}

template <class T>
void cell(TableReport& t, std::string row, std::string column, const T& computed, const T& expected) {
  cell(t, std::move(row), std::move(column), std::to_string(computed), std::to_string(expected));
}

std::string render(const std::set<std::uint64_t>& values) {
  if (values.size() == 1) return std::to_string(*values.begin());
  std::string s = "{";
  for (auto v : values) s += (s.size() > 1 ? "," : "") + std::to_string(v);
  return s + "}";
}

std::string render(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

Elem generator(const FiniteGroup& G, const std::string& name) {
  const auto& gens = G.presentation()->generators;
  const auto it = std::find(gens.begin(), gens.end(), name);
  if (it == gens.end()) throw InvalidArgument("no generator named " + name);
  return G.gens()[static_cast<std::size_t>(it - gens.begin())];
}

std::string tname(unsigned i, unsigned n) { return "T" + std::to_string(i) + "(" + std::to_string(n) + ")"; }

// Class regions of a maximal class 3-group, in the order of
// reference::class_regions.
struct MaxClassData {
  FiniteGroup G;
  ClassData cd;
  Subgroup Z, N, M;
  std::vector<std::string> region_names;
  std::vector<std::size_t> region_of_class;

  MaxClassData(unsigned i, unsigned n) : G(build(family::MaxClass3{i, n})), cd(conjugacy_classes(G)) {
    Z = center(G);
    const Elem b = generator(G, "b"), c = generator(G, "c"), d = generator(G, "d");
    const std::vector<Elem> nseed{b, c, d};
    N = subgroup_generated(G, nseed);
    const std::vector<Elem> mseed{G.pow(c, 3), d};
    M = subgroup_generated(G, mseed);
    region_names = i <= 4 ? std::vector<std::string>{"Z", "N\\Z", "G\\N"}
                          : std::vector<std::string>{"Z", "M\\Z", "N\\M", "G\\N"};
    for (const auto& C : cd.classes) region_of_class.push_back(region(C.rep));
  }

  std::size_t region(Elem g) const {
    const bool four = region_names.size() == 4;
    if (Z.contains(g)) return 0;
    if (four && M.contains(g)) return 1;
    if (N.contains(g)) return four ? 2 : 1;
    return four ? 3 : 2;
  }

  Subgroup expected_centralizer(const std::string& kind, Elem g) const {
    if (kind == "G") return whole_group(G);
    if (kind == "N") return N;
    std::vector<Elem> seed{g};
    const Subgroup& with = kind == "<g,M>" ? M : Z;
    seed.insert(seed.end(), with.gens.begin(), with.gens.end());
    return subgroup_generated(G, seed);
  }
};

void class_table(TableReport& t, unsigned i_lo, unsigned i_hi, unsigned n_lo) {
  for (unsigned n = n_lo; n <= 6; ++n)
    for (unsigned i = i_lo; i <= i_hi; ++i) {
      const MaxClassData D(i, n);
      const auto ref = reference::class_regions(i, n);
      for (std::size_t r = 0; r < ref.size(); ++r) {
        std::uint64_t elements = 0, classes = 0;
        std::set<std::uint64_t> lengths, corders;
        bool union_of_classes = true, centralizers_match = true;
        for (std::size_t k = 0; k < D.cd.classes.size(); ++k) {
          if (D.region_of_class[k] != r) continue;
          const auto& C = D.cd.classes[k];
          ++classes;
          elements += C.length();
          lengths.insert(C.length());
          corders.insert(D.cd.centralizers[k].order());
          for (Elem g : C.elems) union_of_classes = union_of_classes && D.region(g) == r;
          centralizers_match = centralizers_match && D.cd.centralizers[k] == D.expected_centralizer(ref[r].centralizer, C.rep);
        }
        const std::string row = tname(i, n) + " " + ref[r].name;
        cell(t, row, "elements", elements, ref[r].elements);
        cell(t, row, "classes", classes, ref[r].classes);
        cell(t, row, "class length", union_of_classes ? render(lengths) : "not a union of classes",
             std::to_string(ref[r].class_length));
        cell(t, row, "|C_G(g)|", render(corders), std::to_string(ref[r].centralizer_order));
        cell(t, row, "C_G(g)", centralizers_match ? ref[r].centralizer : "differs", ref[r].centralizer);
      }
    }
}

TableReport table2() {
  TableReport t{"table2", "conjugacy classes and centralizers of T1..T4", {}};
  class_table(t, 1, 4, 4);
  return t;
}

TableReport table3() {
  TableReport t{"table3", "conjugacy classes and centralizers of T5..T7", {}};
  class_table(t, 5, 7, 5);
  return t;
}

TableReport table4() {
  TableReport t{"table4", "contributions to dim HH^1 by class type", {}};
  for (auto [i, n] : reference::max_class3_rows()) {
    const MaxClassData D(i, n);
    std::vector<std::size_t> per_region(D.region_names.size(), 0);
    for (std::size_t k = 0; k < D.cd.classes.size(); ++k)
      per_region[D.region_of_class[k]] += min_generators(D.G, D.cd.centralizers[k]);
    const auto ref = reference::hh1_contributions(i, n);
    const std::string row = tname(i, n);
    cell(t, row, "type 1", per_region[0], ref.type1);
    cell(t, row, "type 2", per_region[1], ref.type2);
    if (i >= 5) cell(t, row, "type 3", per_region[2], ref.type3);
    cell(t, row, "type 4", per_region.back(), ref.type4);
    std::size_t sum = 0;
    for (auto v : per_region) sum += v;
    cell(t, row, "sum", sum, ref.type1 + ref.type2 + ref.type3 + ref.type4);
  }
  return t;
}

TableReport hh1_table() {
  TableReport t{"hh1", "dim HH^1(F_3 T_i(n))", {}};
  for (auto [i, n] : reference::max_class3_rows()) {
    const FiniteGroup G = build(family::MaxClass3{i, n});
    cell(t, tname(i, n), "dim HH^1", hh1_dimension(G), reference::hh1_max_class3(i, n));
  }
  return t;
}

TableReport example_d8q8(const Caps& caps) {
  TableReport t{"example-d8q8", "Lambda = Delta/Delta^3(F D8) against Gamma = Delta/Delta^3(F Q8)", {}};
  {
    const FiniteField F2 = FiniteField::make(2, 1);
    const LambdaGamma lg = lambda_gamma(F2);
    cell(t, "F_2", "nonzero squares in Lambda", kernel_size_power_map(lg.lambda, 1, caps.enum_cap).surviving,
         reference::kLambdaNonzeroSquares);
    cell(t, "F_2", "nonzero squares in Gamma", kernel_size_power_map(lg.gamma, 1, caps.enum_cap).surviving,
         reference::kGammaNonzeroSquares);
    const auto w = nilpotent_algebra_iso(lg.gamma, lg.lambda, caps.iso_search_cap);
    cell(t, "F_2", "Gamma ~ Lambda", w ? std::string("isomorphic") : std::string("not isomorphic"),
         std::string("not isomorphic"));
  }
  {
    const FiniteField F4 = FiniteField::make(2, 2);
    const LambdaGamma lg = lambda_gamma(F4);
    const auto w = nilpotent_algebra_iso(lg.gamma, lg.lambda, caps.iso_search_cap);
    std::string found = "not isomorphic";
    if (w) found = verify_witness(*w, lg.gamma, lg.lambda) ? "witness, verified" : "witness, rejected";
    cell(t, "F_4", "Gamma ~ Lambda", found, std::string("witness, verified"));
    const IsoWitness e = explicit_lambda_gamma_witness(lg, F4.generator());
    cell(t, "F_4", "x -> a, y -> wa + b", verify_witness(e, lg.gamma, lg.lambda) ? std::string("verifies")
                                                                                  : std::string("rejected"),
         std::string("verifies"));
  }
  return t;
}

TableReport broche_table() {
  TableReport t{"broche", "two-generated class two 2-groups", {}};
  for (auto [m, n] : reference::broche_case2_params()) {
    const auto [G, H] = named_pair(NamedPair::broche2, m, n);
    const std::string row = "m=" + std::to_string(m) + ",n=" + std::to_string(n);
    const std::size_t level = std::size_t{1} << m;
    auto d_of_u = [&](const FiniteGroup& X) -> std::uint64_t {
      const Subgroup U = agemo_omega(X, char_series(X).derived, m, PowerMode::omega_rel);
      const auto D = dimension_subgroups_lazard(as_group(X, U).group, level);
      return D[level - 1].order();
    };
    cell(t, row, "|D_{2^m}(U)|", d_of_u(G), reference::kBrocheDU);
    cell(t, row, "|D_{2^m}(V)|", d_of_u(H), reference::kBrocheDV);
  }
  for (unsigned m : reference::broche_case1_params()) {
    const auto [G, H] = named_pair(NamedPair::broche1, m);
    const std::uint64_t e = std::uint64_t{1} << m;
    const std::string cyc = AbelianType{{e}}.to_string(), quo = AbelianType{{e, e}}.to_string();
    for (const auto* X : {&G, &H}) {
      const std::string row = std::string(X == &G ? "G" : "H") + " m=" + std::to_string(m);
      const CharSeries cs = char_series(*X);
      cell(t, row, "Z = G'", std::string(cs.center == cs.derived ? "yes" : "no"), std::string("yes"));
      cell(t, row, "Z", abelian_type(*X, cs.center, trivial_subgroup(*X)).to_string(), cyc);
      cell(t, row, "G/Z", abelian_type(*X, whole_group(*X), cs.center).to_string(), quo);
    }
  }
  return t;
}

TableReport jennings_table() {
  TableReport t{"jennings", "Delta^n/Delta^{n+1} against the Jennings generating function", {}};
  struct Row {
    std::string spec, field;
  };
  const std::vector<Row> rows = {{"D8", "2"},       {"D8", "2^2"},     {"Q8", "2"},       {"Q8", "2^2"},
                                 {"B2G:1,2", "2"},  {"B2H:1,2", "2"},  {"B1G:1", "2"},    {"T:1,4", "3"},
                                 {"T:2,4", "3"},    {"T:5,5", "3"},    {"T:5,5", "3^2"}, {"Meta:3,2,1,0,4", "3"}};
  for (const auto& r : rows) {
    const FiniteGroup G = build(parse_family_spec(r.spec));
    const FiniteField F = FiniteField::parse(r.field);
    const GroupAlgebra A = group_algebra(G, F);
    const auto powers = augmentation_powers(A);
    const auto lazard = dimension_subgroups_lazard(G);
    const std::string row = r.spec + " over F_" + std::to_string(F.q());
    cell(t, row, "dims", render(jennings_dims(powers)), render(jennings_series(G, lazard)));
    const auto algebraic = dimension_subgroups_algebraic(A);
    cell(t, row, "D_n", std::string(algebraic == lazard ? "equal to Lazard" : "differs from Lazard"),
         std::string("equal to Lazard"));
    if (r.spec == "D8") cell(t, row, "reference dims", render(jennings_dims(powers)), render(reference::jennings_dims_d8()));
  }
  return t;
}

}  // namespace

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names = {"table2", "table3", "table4", "hh1",
                                                 "example-d8q8", "broche", "jennings"};
  return names;
}

TableReport run_table(const std::string& name, const Caps& caps) {
  if (name == "table2") return table2();
  if (name == "table3") return table3();
  if (name == "table4") return table4();
  if (name == "hh1") return hh1_table();
  if (name == "example-d8q8") return example_d8q8(caps);
  if (name == "broche") return broche_table();
  if (name == "jennings") return jennings_table();
  throw InvalidArgument("unknown table: " + name);
}

LambdaGamma lambda_gamma(const FiniteField& F) {
  auto d8 = std::make_shared<const FiniteGroup>(build(family::D8{}));
  auto q8 = std::make_shared<const FiniteGroup>(build(family::Q8{}));
  GroupAlgebra fd8(d8, F), fq8(q8, F);
  QuotientAlgebra lambda = augmentation_section(fd8, 1, 3);
  QuotientAlgebra gamma = augmentation_section(fq8, 1, 3);
  return LambdaGamma{std::move(fd8), std::move(fq8), std::move(lambda), std::move(gamma)};
}

IsoWitness explicit_lambda_gamma_witness(const LambdaGamma& lg, Scalar omega) {
  const FiniteGroup& D = lg.fd8.group();
  const FiniteGroup& Q = lg.fq8.group();
  const Vec x = lg.gamma.coordinates(lg.fq8.augmented(generator(Q, "i")));
  const Vec y = lg.gamma.coordinates(lg.fq8.augmented(generator(Q, "j")));
  const Vec a = lg.lambda.coordinates(lg.fd8.augmented(generator(D, "r")));
  const Vec b = lg.lambda.coordinates(lg.fd8.augmented(generator(D, "s")));
  Vec y_image = b;
  lg.lambda.field.axpy(omega, a, y_image);
  return algebra_witness({x, y}, {a, y_image});
}

}  // namespace mip
