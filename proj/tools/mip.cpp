// mip: command-line front end.
//
//   mip report <spec> --field <q> [--json | --csv]
//   mip compare <spec1> <spec2> --field <q> [--assert-distinguished]
//   mip tables <name> [--json]
//   mip kernel-size <spec> <i> <j> <k> --field <q>
//   mip iso <spec1> <spec2> [--mode group | algebra:i,j] [--field <q>]
//
// Exit codes: 0 ok, 2 indistinguishable under --assert-distinguished or a
// table cell failed, 3 not isomorphic, 4 cap exceeded, 64 bad input,
// 65 construction failure.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mip/caps.hpp"
#include "mip/error.hpp"
#include "mip/families.hpp"
#include "mip/invariants.hpp"
#include "mip/iso.hpp"
#include "mip/tables.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFail = 2;
constexpr int kNotIsomorphic = 3;
constexpr int kCapExceeded = 4;
constexpr int kUsage = 64;
constexpr int kConstruction = 65;

using nlohmann::ordered_json;

struct Options {
  std::string caps_file;
  std::string field = "2";
  std::string spec1, spec2;
  bool json = false, csv = false;
  bool assert_distinguished = false;
  std::string table;
  unsigned i = 1, j = 2, k = 1;
  std::string mode = "group";
};

mip::Caps load_caps(const Options& o) { return o.caps_file.empty() ? mip::Caps{} : mip::Caps::from_file(o.caps_file); }

mip::FiniteField field_of(const Options& o, const mip::Caps& caps) {
  return mip::FiniteField::parse(o.field, static_cast<unsigned>(caps.field_cap));
}

mip::FiniteGroup group_of(const std::string& spec, const mip::Caps& caps) {
  return mip::build(mip::parse_family_spec(spec), caps.coset_cap, caps.group_order_cap);
}

int cmd_report(const Options& o) {
  const mip::Caps caps = load_caps(o);
  const auto F = field_of(o, caps);
  const auto f = mip::fingerprint(group_of(o.spec1, caps), F, caps);
  std::cout << (o.csv ? f.to_csv() : f.to_json() + "\n");
  return kOk;
}

int cmd_compare(const Options& o) {
  const mip::Caps caps = load_caps(o);
  const auto F = field_of(o, caps);
  const auto f = mip::fingerprint(group_of(o.spec1, caps), F, caps);
  const auto g = mip::fingerprint(group_of(o.spec2, caps), F, caps);
  const auto v = mip::compare(f, g);
  std::cout << v.to_json() << "\n";
  return o.assert_distinguished && !v.distinguished ? kFail : kOk;
}

int cmd_tables(const Options& o) {
  const auto report = mip::run_table(o.table, load_caps(o));
  std::cout << (o.json ? report.to_json() + "\n" : report.to_text());
  return report.all_pass() ? kOk : kFail;
}

int cmd_kernel_size(const Options& o) {
  const mip::Caps caps = load_caps(o);
  const auto F = field_of(o, caps);
  const auto G = group_of(o.spec1, caps);
  const auto A = mip::group_algebra(G, F, caps);
  const auto counts = mip::kernel_size_power_map(mip::augmentation_section(A, o.i, o.j), o.k, caps.enum_cap);
  ordered_json out{{"group", o.spec1}, {"field", F.name()}, {"i", o.i},         {"j", o.j},
                   {"k", o.k},         {"killed", counts.killed}, {"surviving", counts.surviving}};
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_iso(const Options& o) {
  const mip::Caps caps = load_caps(o);
  const auto G = group_of(o.spec1, caps);
  const auto H = group_of(o.spec2, caps);
  ordered_json out{{"left", o.spec1}, {"right", o.spec2}, {"mode", o.mode}};
  std::optional<mip::IsoWitness> w;
  bool verified = false;
  std::optional<mip::FiniteField> F;
  if (o.mode == "group") {
    w = mip::group_isomorphic(G, H, caps.iso_search_cap);
    verified = w && mip::verify_witness(*w, G, H);
  } else if (o.mode.rfind("algebra:", 0) == 0) {
    const std::string sec = o.mode.substr(8);
    const auto comma = sec.find(',');
    if (comma == std::string::npos) throw mip::ParseError("mode algebra:i,j needs two indices", 8);
    std::size_t i = 0, j = 0;
    try {
      i = std::stoul(sec.substr(0, comma));
      j = std::stoul(sec.substr(comma + 1));
    } catch (const std::exception&) {
      throw mip::ParseError("mode algebra:i,j needs two indices", 8);
    }
    F = field_of(o, caps);
    out["field"] = F->name();
    const auto A = mip::augmentation_section(mip::group_algebra(G, *F, caps), i, j);
    const auto B = mip::augmentation_section(mip::group_algebra(H, *F, caps), i, j);
    w = mip::nilpotent_algebra_iso(A, B, caps.iso_search_cap);
    verified = w && mip::verify_witness(*w, A, B);
  } else {
    throw mip::ParseError("mode must be group or algebra:i,j", 0);
  }
  out["outcome"] = w ? "Isomorphic" : "NotIsomorphic";
  if (w) {
    out["verified"] = verified;
    out["witness"] = ordered_json::parse(mip::witness_json(*w, &H, F ? &*F : nullptr));
  }
  std::cout << out.dump(2) << "\n";
  if (w && !verified) return kFail;
  return w ? kOk : kNotIsomorphic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular group algebra invariants and isomorphism witnesses"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--caps", o.caps_file, "JSON file overriding resource caps")->check(CLI::ExistingFile);

  auto* report = app.add_subcommand("report", "fingerprint of one group algebra");
  report->add_option("spec", o.spec1, "group spec")->required();
  report->add_option("--field", o.field, "field, p or p^k");
  auto* json_flag = report->add_flag("--json", o.json, "JSON output (default)");
  report->add_flag("--csv", o.csv, "CSV output")->excludes(json_flag);

  auto* compare = app.add_subcommand("compare", "compare two fingerprints");
  compare->add_option("spec1", o.spec1)->required();
  compare->add_option("spec2", o.spec2)->required();
  compare->add_option("--field", o.field, "field, p or p^k");
  compare->add_flag("--json", o.json, "JSON output (default)");
  compare->add_flag("--assert-distinguished", o.assert_distinguished, "exit 2 unless distinguished");

  auto* tables = app.add_subcommand("tables", "recompute a reference table");
  tables->add_option("name", o.table)->required()->check(CLI::IsMember(mip::table_names()));
  tables->add_flag("--json", o.json, "JSON output");

  auto* kernel = app.add_subcommand("kernel-size", "elements of Delta^i/Delta^j killed by x -> x^(p^k)");
  kernel->add_option("spec", o.spec1)->required();
  kernel->add_option("i", o.i)->required();
  kernel->add_option("j", o.j)->required();
  kernel->add_option("k", o.k)->required();
  kernel->add_option("--field", o.field, "field, p or p^k");

  auto* iso = app.add_subcommand("iso", "isomorphism search with witness");
  iso->add_option("spec1", o.spec1)->required();
  iso->add_option("spec2", o.spec2)->required();
  iso->add_option("--mode", o.mode, "group or algebra:i,j");
  iso->add_option("--field", o.field, "field, p or p^k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*report) return cmd_report(o);
    if (*compare) return cmd_compare(o);
    if (*tables) return cmd_tables(o);
    if (*kernel) return cmd_kernel_size(o);
    if (*iso) return cmd_iso(o);
  } catch (const mip::CapExceeded& e) {
    std::cerr << "cap exceeded (" << e.cap() << "): " << e.what() << "\n";
    return kCapExceeded;
  } catch (const mip::ConstructionError& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return kConstruction;
  } catch (const mip::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
