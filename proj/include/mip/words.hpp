#pragma once

// Group words, presentations, and Todd-Coxeter coset enumeration.
//
// Word grammar accepted by parse_word:
//   word   := term { '*' term }
//   term   := factor [ '^' signed-integer ]
//   factor := name | '1' | '(' word ')' | '[' word ',' word ']'
// The bracket [x,y] expands to x^-1 y^-1 x y.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mip {

class FiniteGroup;

struct Letter {
  std::size_t gen = 0;
  bool inverse = false;
  bool operator==(const Letter&) const = default;
};

/// Freely reduced word in ±1 letters. The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);  // reduces

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word operator*(const Word& o) const;
  Word pow(long long e) const;
  static Word generator(std::size_t g, bool inverse = false);
  static Word commutator(const Word& x, const Word& y);

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

constexpr long long kMaxExponent = 1000000;
constexpr std::size_t kMaxWordLength = 10000000;

Word parse_word(const std::string& text, const std::vector<std::string>& gens);
std::string print_word(const Word& w, const std::vector<std::string>& gens);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Validates names and parses every relator string.
  static Presentation from_strings(std::vector<std::string> generators,
                                   const std::vector<std::string>& relators);
  /// {"generators": [...], "relators": [...]}
  static Presentation from_json_text(const std::string& text);
  static Presentation from_file(const std::string& path);
  std::string to_json_text() const;
};

/// HLT coset enumeration over the trivial subgroup. The returned group is the
/// regular representation with elements numbered in standardized
/// (breadth-first) coset order; element 0 is the identity and gens[i] is the
/// image of generator i.
FiniteGroup todd_coxeter(const Presentation& P, std::uint64_t coset_cap = 100000);

}  // namespace mip
