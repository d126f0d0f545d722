#include "mip/words.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "mip/error.hpp"
#include "mip/group.hpp"

namespace mip {

// -------------------------------------------------------------------- Word

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().inverse != l.inverse)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word Word::operator*(const Word& o) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(all));
}

Word Word::pow(long long e) const {
  const Word base = e < 0 ? inverse() : *this;
  const unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  if (n * base.size() > kMaxWordLength) throw ParseError("word too long after exponent expansion");
  std::vector<Letter> all;
  all.reserve(n * base.size());
  for (unsigned long long i = 0; i < n; ++i) all.insert(all.end(), base.letters_.begin(), base.letters_.end());
  return Word(std::move(all));
}

Word Word::generator(std::size_t g, bool inverse) {
  Word w;
  w.letters_.push_back(Letter{g, inverse});
  return w;
}

Word Word::commutator(const Word& x, const Word& y) {
  return x.inverse() * y.inverse() * x * y;
}

// ------------------------------------------------------------------ parser

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class WordParser {
 public:
  WordParser(const std::string& text, const std::vector<std::string>& gens) : s_(text), gens_(gens) {}

  Word parse() {
    skip();
    if (pos_ == s_.size()) return Word{};
    Word w = word();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Word word() {
    Word w = term();
    while (accept('*')) w = w * term();
    return w;
  }

  Word term() {
    Word f = factor();
    if (accept('^')) {
      skip();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
      long long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + (s_[pos_++] - '0');
        if (e > kMaxExponent) fail("exponent overflow");
      }
      f = f.pow(neg ? -e : e);
    }
    return f;
  }

  Word factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of word");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word x = word();
      expect(',');
      Word y = word();
      expect(']');
      return Word::commutator(x, y);
    }
    if (c == '1' && (pos_ + 1 >= s_.size() || !is_name_char(s_[pos_ + 1]))) {
      ++pos_;
      return Word{};
    }
    if (!is_name_start(c)) fail("expected generator, '(' or '['");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && is_name_char(s_[pos_])) ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    const auto it = std::find(gens_.begin(), gens_.end(), name);
    if (it == gens_.end()) {
      pos_ = start;
      fail("unknown generator '" + name + "'");
    }
    return Word::generator(static_cast<std::size_t>(it - gens_.begin()));
  }

  const std::string& s_;
  const std::vector<std::string>& gens_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& gens) {
  return WordParser(text, gens).parse();
}

std::string print_word(const Word& w, const std::vector<std::string>& gens) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += "*";
    out += gens.at(l.gen);
    if (l.inverse) out += "^-1";
  }
  return out;
}

// ------------------------------------------------------------ Presentation

Presentation Presentation::from_strings(std::vector<std::string> generators,
                                        const std::vector<std::string>& relators) {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty() || !is_name_start(g[0]) ||
        !std::all_of(g.begin(), g.end(), [](char c) { return is_name_char(c); }))
      throw ParseError("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw ParseError("duplicate generator name '" + g + "'");
  }
  Presentation P;
  P.generators = std::move(generators);
  for (const auto& r : relators) P.relators.push_back(parse_word(r, P.generators));
  return P;
}

Presentation Presentation::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("presentation JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    throw ParseError("presentation JSON needs a \"generators\" array");
  std::vector<std::string> gens;
  std::vector<std::string> rels;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw ParseError("generator names must be strings");
    gens.push_back(g.get<std::string>());
  }
  if (j.contains("relators")) {
    if (!j["relators"].is_array()) throw ParseError("\"relators\" must be an array");
    for (const auto& r : j["relators"]) {
      if (!r.is_string()) throw ParseError("relators must be strings");
      rels.push_back(r.get<std::string>());
    }
  }
  return from_strings(std::move(gens), rels);
}

Presentation Presentation::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open presentation file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string Presentation::to_json_text() const {
  nlohmann::ordered_json j;
  j["generators"] = generators;
  std::vector<std::string> rels;
  for (const auto& r : relators) rels.push_back(print_word(r, generators));
  j["relators"] = rels;
  return j.dump();
}

// ------------------------------------------------------------ Todd-Coxeter

namespace {

class CosetTable {
 public:
  CosetTable(std::size_t ngens, std::uint64_t cap) : cols_(2 * ngens), cap_(cap) { new_coset(); }

  static constexpr std::int32_t kUndef = -1;

  std::size_t rows() const { return parent_.size(); }
  bool alive(std::int32_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  std::int32_t& at(std::int32_t c, std::size_t x) { return t_[static_cast<std::size_t>(c) * cols_ + x]; }
  std::int32_t get(std::int32_t c, std::size_t x) const { return t_[static_cast<std::size_t>(c) * cols_ + x]; }

  std::int32_t new_coset() {
    if (parent_.size() >= cap_)
      throw CapExceeded("coset_cap", "coset enumeration exceeded " + std::to_string(cap_) +
                                         " cosets (presentation infinite or too large)");
    const auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    t_.resize(t_.size() + cols_, kUndef);
    return c;
  }

  void define(std::int32_t c, std::size_t x) {
    const std::int32_t d = new_coset();
    at(c, x) = d;
    at(d, x ^ 1) = c;
  }

  void scan_and_fill(std::int32_t c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::int32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && get(f, w[static_cast<std::size_t>(i)]) != kUndef) f = get(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && get(b, w[static_cast<std::size_t>(j)] ^ 1) != kUndef)
        b = get(b, w[static_cast<std::size_t>(j--)] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        const std::size_t x = w[static_cast<std::size_t>(i)];
        at(f, x) = b;
        at(b, x ^ 1) = f;
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  std::int32_t rep(std::int32_t k) {
    std::int32_t r = k;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(k)] != r) {
      const std::int32_t nxt = parent_[static_cast<std::size_t>(k)];
      parent_[static_cast<std::size_t>(k)] = r;
      k = nxt;
    }
    return r;
  }

  void merge(std::int32_t k, std::int32_t l, std::vector<std::int32_t>& q) {
    const std::int32_t a = rep(k), b = rep(l);
    if (a == b) return;
    const std::int32_t lo = std::min(a, b), hi = std::max(a, b);
    parent_[static_cast<std::size_t>(hi)] = lo;
    q.push_back(hi);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::vector<std::int32_t> q;
    merge(a, b, q);
    for (std::size_t i = 0; i < q.size(); ++i) {
      const std::int32_t g = q[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int32_t d = get(g, x);
        if (d == kUndef) continue;
        if (get(d, x ^ 1) == g) at(d, x ^ 1) = kUndef;
        const std::int32_t mu = rep(g), nu = rep(d);
        if (get(mu, x) != kUndef) {
          merge(nu, get(mu, x), q);
        } else if (get(nu, x ^ 1) != kUndef) {
          merge(mu, get(nu, x ^ 1), q);
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1) = mu;
        }
      }
    }
  }

  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  std::uint64_t cap_;
  std::vector<std::int32_t> t_;
  std::vector<std::int32_t> parent_;
};

}  // namespace

FiniteGroup todd_coxeter(const Presentation& P, std::uint64_t coset_cap) {
  if (P.generators.empty()) throw InvalidArgument("presentation has no generators");
  if (coset_cap < 1) throw InvalidArgument("coset cap must be positive");
  const std::size_t ng = P.generators.size();

  std::vector<std::vector<std::size_t>> rels;
  for (const auto& r : P.relators) {
    // Cyclically reduce; the relator set is otherwise scanned as given.
    std::vector<Letter> l = r.letters();
    while (l.size() >= 2 && l.front().gen == l.back().gen && l.front().inverse != l.back().inverse) {
      l.pop_back();
      l.erase(l.begin());
    }
    std::vector<std::size_t> cols;
    for (const auto& x : l) cols.push_back(2 * x.gen + (x.inverse ? 1 : 0));
    rels.push_back(std::move(cols));
  }

  CosetTable T(ng, coset_cap);
  for (std::int32_t c = 0; static_cast<std::size_t>(c) < T.rows(); ++c) {
    for (const auto& r : rels) {
      if (!T.alive(c)) break;
      T.scan_and_fill(c, r);
    }
    if (!T.alive(c)) continue;
    for (std::size_t x = 0; x < T.cols(); ++x)
      if (T.get(c, x) == CosetTable::kUndef) T.define(c, x);
  }

  // Standardize: breadth-first renumbering from the identity coset.
  std::vector<std::int32_t> order{0};
  std::vector<std::int32_t> number(T.rows(), -1);
  number[0] = 0;
  std::vector<std::int32_t> parent{-1};
  std::vector<std::size_t> via{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t x = 0; x < T.cols(); ++x) {
      const std::int32_t d = T.get(order[i], x);
      if (number[static_cast<std::size_t>(d)] < 0) {
        number[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(order.size());
        order.push_back(d);
        parent.push_back(static_cast<std::int32_t>(i));
        via.push_back(x);
      }
    }
  }
  const std::size_t n = order.size();
  std::vector<std::vector<Elem>> act(T.cols(), std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < T.cols(); ++x)
      act[x][i] = static_cast<Elem>(number[static_cast<std::size_t>(T.get(order[i], x))]);

  std::vector<Elem> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Elem* row = mul.data() + i * n;
    row[0] = static_cast<Elem>(i);
    for (std::size_t j = 1; j < n; ++j) row[j] = act[via[j]][row[static_cast<std::size_t>(parent[j])]];
  }
  std::vector<Elem> gens(ng);
  for (std::size_t g = 0; g < ng; ++g) gens[g] = act[2 * g][0];

  FiniteGroup G(n, std::move(mul), 0, std::move(gens));
  std::vector<std::string> labels(n);
  labels[0] = "1";
  std::vector<Word> words(n);
  for (std::size_t j = 1; j < n; ++j) {
    words[j] = words[static_cast<std::size_t>(parent[j])] * Word::generator(via[j] / 2, via[j] % 2 == 1);
    labels[j] = print_word(words[j], P.generators);
  }
  G.set_labels(std::move(labels));
  G.set_presentation(P);
  return G;
}

}  // namespace mip
