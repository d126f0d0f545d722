#include "mip/caps.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "mip/error.hpp"

namespace mip {

Caps Caps::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("caps JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("caps JSON must be an object");
  Caps c;
  const std::pair<const char*, std::uint64_t Caps::*> fields[] = {
      {"coset_cap", &Caps::coset_cap},
      {"enum_cap", &Caps::enum_cap},
      {"group_order_cap", &Caps::group_order_cap},
      {"algebra_order_cap", &Caps::algebra_order_cap},
      {"field_cap", &Caps::field_cap},
      {"ambient_cap", &Caps::ambient_cap},
      {"elem_ab_cap", &Caps::elem_ab_cap},
      {"direct_factor_cap", &Caps::direct_factor_cap},
      {"iso_search_cap", &Caps::iso_search_cap},
  };
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const auto& [name, member] : fields) {
      if (key != name) continue;
      if (!value.is_number_unsigned()) throw ParseError("caps: '" + key + "' must be a non-negative integer");
      c.*member = value.get<std::uint64_t>();
      known = true;
    }
    if (!known) throw ParseError("caps: unknown key '" + key + "'");
  }
  return c;
}

Caps Caps::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open caps file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

}  // namespace mip
