#pragma once

#include <map>
#include <string>
#include <vector>

namespace mutlab {

// One letter of a free-group word: a generator name with exponent +1 or -1.
struct Letter {
  std::string gen;
  int exp = 1;
  bool operator==(const Letter&) const = default;
};

// generator names: letters, digits, underscore; nonempty
bool valid_generator_name(const std::string& name);

// Freely reduced word in named generators.  Construction always reduces, so
// equality of Word values is equality of reduced words.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  // grammar: whitespace-separated tokens `name`, `name^-1` or `name^k`
  // (k expands to |k| letters).  The empty string is the empty word.
  static Word parse(const std::string& text);
  static Word generator(const std::string& name, int exp = 1);
  static Word power(const std::string& name, int k);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  bool operator==(const Word&) const = default;
  bool operator<(const Word& rhs) const;  // length, then letters; total order

  Word conjugated_by(const Word& c) const;  // c^-1 * w * c
  // Strips matching prefix/inverse-suffix pairs; if `stripped` is non-null
  // it receives the word c with *this == c^-1 * result * c.
  Word cyclic_reduction(Word* stripped = nullptr) const;
  bool is_cyclic_rotation_of(const Word& other) const;

  std::string str() const;  // canonical text form, runs collapsed to name^k

 private:
  std::vector<Letter> letters_;
};

// Stack-based free reduction of a raw letter sequence.
std::vector<Letter> reduce_letters(const std::vector<Letter>& in);

// Table sending source generators to words in target generators.
class GroupMap {
 public:
  GroupMap() = default;
  explicit GroupMap(std::map<std::string, Word> images);
  static GroupMap identity(const std::vector<std::string>& generators);

  const std::map<std::string, Word>& images() const { return images_; }
  bool has(const std::string& gen) const;
  const Word& image(const std::string& gen) const;  // throws UnknownGeneratorError

  // letterwise substitution followed by free reduction
  Word apply(const Word& w) const;

 private:
  std::map<std::string, Word> images_;
};

// (outer . inner): g -> outer.apply(inner.image(g))
GroupMap compose(const GroupMap& outer, const GroupMap& inner);

}  // namespace mutlab
