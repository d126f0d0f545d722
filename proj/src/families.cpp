#include "mip/families.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "mip/error.hpp"
#include "mip/gfq.hpp"

namespace mip {

namespace {

std::uint64_t upow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

long long spow(long long b, unsigned e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

std::string pw(const std::string& x, long long e) { return x + "^" + std::to_string(e); }

using Rel = std::vector<std::string>;

std::pair<Presentation, std::uint64_t> max_class3(const family::MaxClass3& f) {
  if (f.i < 1 || f.i > 7) throw InvalidArgument("T:i,n needs 1 <= i <= 7");
  if (f.n < 4) throw InvalidArgument("T:i,n needs n >= 4");
  if (f.i >= 5 && f.n < 5) throw InvalidArgument("T5, T6 and T7 need n >= 5");
  if (f.n > 12) throw InvalidArgument("T:i,n supports n <= 12");
  const unsigned n = f.n;
  const bool even = n % 2 == 0;
  // z as a power of d (n even) or c (n odd)
  const std::string z = even ? pw("d", spow(-3, (n - 4) / 2)) : pw("c", spow(-3, (n - 3) / 2));
  const std::string zi = "(" + z + ")^-1";
  Rel rel = {"c^-1*[b,a]", "d^-1*[c,a]", "[d,a]*d^3*c^3", "[d,b]", "[d,c]"};
  if (even) {
    rel.push_back(pw("c", static_cast<long long>(upow(3, (n - 2) / 2))));
    rel.push_back(pw("d", static_cast<long long>(upow(3, (n - 2) / 2))));
  } else {
    rel.push_back(pw("c", static_cast<long long>(upow(3, (n - 1) / 2))));
    rel.push_back(pw("d", static_cast<long long>(upow(3, (n - 3) / 2))));
  }
  // a^3, b^3 and [c,b] per family member.
  std::string a3 = "1", b3 = "c^-3*d^-1", cb = "1";
  switch (f.i) {
    case 2: b3 += "*" + z; break;
    case 3: b3 += "*" + zi; break;
    case 4: a3 = z; break;
    case 5: cb = zi; break;
    case 6: a3 = z; cb = zi; break;
    case 7: a3 = zi; cb = zi; break;
    default: break;
  }
  rel.push_back("a^3*(" + a3 + ")^-1");
  rel.push_back("b^3*(" + b3 + ")^-1");
  rel.push_back("[c,b]*(" + cb + ")^-1");
  return {Presentation::from_strings({"a", "b", "c", "d"}, rel), upow(3, n)};
}

std::pair<Presentation, std::uint64_t> broche1(const family::BrocheCase1& f) {
  if (f.m < 1 || f.m > 6) throw InvalidArgument("B1:m needs 1 <= m <= 6");
  const long long e = static_cast<long long>(upow(2, f.m)), h = e / 2;
  const bool G = f.variant == family::Variant::G;
  const std::string x = G ? "a" : "x", y = G ? "b" : "y";
  Rel rel = {"c^-1*[" + y + "," + x + "]", pw("c", e), "[c," + x + "]", "[c," + y + "]",
             pw(x, e) + "*" + pw("c", -h), G ? pw(y, e) + "*" + pw("c", -h) : pw(y, e)};
  return {Presentation::from_strings({x, y, "c"}, rel), upow(2, 3 * f.m)};
}

std::pair<Presentation, std::uint64_t> broche2(const family::BrocheCase2& f) {
  if (f.m < 1 || f.n <= f.m) throw InvalidArgument("B2:m,n needs n > m >= 1");
  if (f.n + 2 * f.m > 11) throw InvalidArgument("B2:m,n needs n + 2m <= 11");
  const long long e = static_cast<long long>(upow(2, f.m)), h = e / 2;
  const bool G = f.variant == family::Variant::G;
  const std::string x = G ? "a" : "x", y = G ? "b" : "y";
  Rel rel = {"c^-1*[" + y + "," + x + "]", pw("c", e), "[c," + x + "]", "[c," + y + "]",
             pw(x, static_cast<long long>(upow(2, f.n))), G ? pw(y, e) + "*" + pw("c", -h) : pw(y, e)};
  return {Presentation::from_strings({x, y, "c"}, rel), upow(2, f.n + 2 * f.m)};
}

std::pair<Presentation, std::uint64_t> abelian(const std::vector<std::uint64_t>& orders) {
  if (orders.empty()) throw InvalidArgument("abelian group needs at least one factor");
  std::vector<std::string> gens;
  Rel rel;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1 || orders[i] > 100000) throw InvalidArgument("cyclic factor order out of range");
    gens.push_back(orders.size() == 1 ? "a" : "a" + std::to_string(i + 1));
    rel.push_back(pw(gens.back(), static_cast<long long>(orders[i])));
    total *= orders[i];
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) rel.push_back("[" + gens[i] + "," + gens[j] + "]");
  return {Presentation::from_strings(gens, rel), total};
}

std::pair<Presentation, std::uint64_t> metacyclic(const family::Metacyclic& f) {
  if (!is_prime(f.p)) throw InvalidArgument("Meta: p must be prime");
  if (f.m < 1 || f.n < 1) throw InvalidArgument("Meta: m, n must be positive");
  if (f.s > f.m) throw InvalidArgument("Meta: needs 0 <= s <= m");
  if (std::gcd(static_cast<long long>(f.p), f.r < 0 ? -f.r : f.r) != 1) throw InvalidArgument("Meta: gcd(r, p) must be 1");
  if (upow(f.p, f.m + f.n) > 100000) throw InvalidArgument("Meta: order too large");
  Rel rel = {pw("a", static_cast<long long>(upow(f.p, f.m))),
             pw("b", static_cast<long long>(upow(f.p, f.n))) + "*" +
                 pw("a", -static_cast<long long>(upow(f.p, f.m - f.s))),
             "b^-1*a*b*" + pw("a", -f.r)};
  return {Presentation::from_strings({"a", "b"}, rel), upow(f.p, f.m + f.n)};
}

std::vector<long long> parse_ints(const std::string& s, std::size_t count_min, std::size_t count_max,
                                  const std::string& what) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected integer in family spec '" + what + "'", start);
    long long v = 0;
    bool neg = s[start] == '-';
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos++] - '0');
      if (v > 1000000000) throw ParseError("integer too large in family spec '" + what + "'", start);
    }
    out.push_back(neg ? -v : v);
    if (pos == s.size()) break;
    if (s[pos] != ',') throw ParseError("expected ',' in family spec '" + what + "'", pos);
    ++pos;
  }
  if (out.size() < count_min || out.size() > count_max)
    throw ParseError("wrong number of parameters in family spec '" + what + "'");
  return out;
}

unsigned as_uint(long long v, const std::string& what) {
  if (v < 0) throw ParseError("negative parameter in family spec '" + what + "'");
  return static_cast<unsigned>(v);
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
  if (text == "D8") return family::D8{};
  if (text == "Q8") return family::Q8{};
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("unknown family spec '" + text + "'");
  const std::string tag = text.substr(0, colon), rest = text.substr(colon + 1);
  if (tag == "Pres") {
    if (rest.empty()) throw ParseError("Pres: needs a path");
    return family::Presented{rest};
  }
  if (tag == "X") {
    auto dp = std::make_shared<family::DirectProduct>();
    std::size_t start = 0;
    while (true) {
      const auto star = rest.find('*', start);
      dp->factors.push_back(parse_family_spec(rest.substr(start, star == std::string::npos ? star : star - start)));
      if (star == std::string::npos) break;
      start = star + 1;
    }
    if (dp->factors.size() < 2) throw ParseError("X: needs at least two factors");
    return dp;
  }
  if (tag == "C") return family::Cyclic{as_uint(parse_ints(rest, 1, 1, text)[0], text)};
  if (tag == "Ab") {
    family::Abelian a;
    for (auto v : parse_ints(rest, 1, 16, text)) a.orders.push_back(as_uint(v, text));
    return a;
  }
  if (tag == "EA") {
    const auto v = parse_ints(rest, 2, 2, text);
    return family::ElemAbelian{as_uint(v[0], text), as_uint(v[1], text)};
  }
  if (tag == "Meta") {
    const auto v = parse_ints(rest, 5, 5, text);
    return family::Metacyclic{as_uint(v[0], text), as_uint(v[1], text), as_uint(v[2], text), as_uint(v[3], text),
                              v[4]};
  }
  if (tag == "T") {
    const auto v = parse_ints(rest, 2, 2, text);
    return family::MaxClass3{as_uint(v[0], text), as_uint(v[1], text)};
  }
  if (tag == "B1G" || tag == "B1H") {
    const auto v = parse_ints(rest, 1, 1, text);
    return family::BrocheCase1{tag == "B1G" ? family::Variant::G : family::Variant::H, as_uint(v[0], text)};
  }
  if (tag == "B2G" || tag == "B2H") {
    const auto v = parse_ints(rest, 2, 2, text);
    return family::BrocheCase2{tag == "B2G" ? family::Variant::G : family::Variant::H, as_uint(v[0], text),
                               as_uint(v[1], text)};
  }
  throw ParseError("unknown family tag '" + tag + "'");
}

std::string family_spec_string(const FamilySpec& spec) {
  struct V {
    std::string operator()(const family::D8&) const { return "D8"; }
    std::string operator()(const family::Q8&) const { return "Q8"; }
    std::string operator()(const family::Cyclic& c) const { return "C:" + std::to_string(c.n); }
    std::string operator()(const family::Abelian& a) const {
      std::string s = "Ab:";
      for (std::size_t i = 0; i < a.orders.size(); ++i) s += (i ? "," : "") + std::to_string(a.orders[i]);
      return s;
    }
    std::string operator()(const family::ElemAbelian& e) const {
      return "EA:" + std::to_string(e.p) + "," + std::to_string(e.r);
    }
    std::string operator()(const family::Metacyclic& m) const {
      return "Meta:" + std::to_string(m.p) + "," + std::to_string(m.m) + "," + std::to_string(m.n) + "," +
             std::to_string(m.s) + "," + std::to_string(m.r);
    }
    std::string operator()(const family::MaxClass3& t) const {
      return "T:" + std::to_string(t.i) + "," + std::to_string(t.n);
    }
    std::string operator()(const family::BrocheCase1& b) const {
      return std::string(b.variant == family::Variant::G ? "B1G:" : "B1H:") + std::to_string(b.m);
    }
    std::string operator()(const family::BrocheCase2& b) const {
      return std::string(b.variant == family::Variant::G ? "B2G:" : "B2H:") + std::to_string(b.m) + "," +
             std::to_string(b.n);
    }
    std::string operator()(const family::Presented& p) const { return "Pres:" + p.path; }
    std::string operator()(const std::shared_ptr<family::DirectProduct>& d) const {
      std::string s = "X:";
      for (std::size_t i = 0; i < d->factors.size(); ++i) s += (i ? "*" : "") + family_spec_string(d->factors[i]);
      return s;
    }
  };
  return std::visit(V{}, spec);
}

std::pair<Presentation, std::uint64_t> family_presentation(const FamilySpec& spec) {
  struct V {
    std::pair<Presentation, std::uint64_t> operator()(const family::D8&) const {
      return {Presentation::from_strings({"r", "s"}, {"r^4", "s^2", "(s*r)^2"}), 8};
    }
    std::pair<Presentation, std::uint64_t> operator()(const family::Q8&) const {
      return {Presentation::from_strings({"i", "j"}, {"i^4", "i^2*j^-2", "j^-1*i*j*i"}), 8};
    }
    std::pair<Presentation, std::uint64_t> operator()(const family::Cyclic& c) const { return abelian({c.n}); }
    std::pair<Presentation, std::uint64_t> operator()(const family::Abelian& a) const { return abelian(a.orders); }
    std::pair<Presentation, std::uint64_t> operator()(const family::ElemAbelian& e) const {
      if (!is_prime(e.p)) throw InvalidArgument("EA: p must be prime");
      if (e.r < 1 || e.r > 16) throw InvalidArgument("EA: rank must be between 1 and 16");
      return abelian(std::vector<std::uint64_t>(e.r, e.p));
    }
    std::pair<Presentation, std::uint64_t> operator()(const family::Metacyclic& m) const { return metacyclic(m); }
    std::pair<Presentation, std::uint64_t> operator()(const family::MaxClass3& t) const { return max_class3(t); }
    std::pair<Presentation, std::uint64_t> operator()(const family::BrocheCase1& b) const { return broche1(b); }
    std::pair<Presentation, std::uint64_t> operator()(const family::BrocheCase2& b) const { return broche2(b); }
    std::pair<Presentation, std::uint64_t> operator()(const family::Presented& p) const {
      return {Presentation::from_file(p.path), 0};
    }
    std::pair<Presentation, std::uint64_t> operator()(const std::shared_ptr<family::DirectProduct>& d) const {
      Presentation P;
      std::uint64_t order = 1;
      std::vector<std::pair<std::size_t, std::size_t>> ranges;
      for (std::size_t f = 0; f < d->factors.size(); ++f) {
        auto [Q, o] = family_presentation(d->factors[f]);
        order = (order == 0 || o == 0) ? 0 : order * o;
        const std::size_t off = P.generators.size();
        for (const auto& g : Q.generators) P.generators.push_back(g + "_" + std::to_string(f + 1));
        for (const auto& r : Q.relators) {
          std::vector<Letter> l = r.letters();
          for (auto& x : l) x.gen += off;
          P.relators.emplace_back(std::move(l));
        }
        ranges.emplace_back(off, P.generators.size());
      }
      for (std::size_t f = 0; f < ranges.size(); ++f)
        for (std::size_t h = f + 1; h < ranges.size(); ++h)
          for (std::size_t x = ranges[f].first; x < ranges[f].second; ++x)
            for (std::size_t y = ranges[h].first; y < ranges[h].second; ++y)
              P.relators.push_back(Word::commutator(Word::generator(x), Word::generator(y)));
      return {P, order};
    }
  };
  return std::visit(V{}, spec);
}

FiniteGroup build(const FamilySpec& spec, std::uint64_t coset_cap, std::uint64_t order_cap) {
  auto [P, declared] = family_presentation(spec);
  if (declared > order_cap)
    throw CapExceeded("group_order_cap", family_spec_string(spec) + " has order " + std::to_string(declared) +
                                             " above the cap " + std::to_string(order_cap));
  FiniteGroup G = todd_coxeter(P, coset_cap);
  if (declared != 0 && G.order() != declared)
    throw ConstructionError(family_spec_string(spec) + ": enumerated order " + std::to_string(G.order()) +
                            " differs from the declared order " + std::to_string(declared));
  if (G.order() > order_cap)
    throw CapExceeded("group_order_cap", family_spec_string(spec) + " has order " + std::to_string(G.order()) +
                                             " above the cap " + std::to_string(order_cap));
  return G;
}

std::pair<FiniteGroup, FiniteGroup> named_pair(NamedPair which, unsigned m, unsigned n, std::uint64_t coset_cap) {
  using family::Variant;
  switch (which) {
    case NamedPair::d8q8:
      return {build(family::D8{}, coset_cap), build(family::Q8{}, coset_cap)};
    case NamedPair::broche1:
      return {build(family::BrocheCase1{Variant::G, m}, coset_cap), build(family::BrocheCase1{Variant::H, m}, coset_cap)};
    case NamedPair::broche2:
      return {build(family::BrocheCase2{Variant::G, m, n}, coset_cap),
              build(family::BrocheCase2{Variant::H, m, n}, coset_cap)};
    case NamedPair::t2t3:
      return {build(family::MaxClass3{2, m}, coset_cap), build(family::MaxClass3{3, m}, coset_cap)};
  }
  throw InvalidArgument("unknown pair");
}

}  // namespace mip
