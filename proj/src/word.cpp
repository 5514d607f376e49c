#include "mutlab/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "mutlab/errors.hpp"

namespace mutlab {

bool valid_generator_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::vector<Letter> reduce_letters(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (const Letter& l : in) {
    if (l.exp != 1 && l.exp != -1) throw WordSyntaxError("letter exponent must be +1 or -1");
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word::Word(std::vector<Letter> letters) : letters_(reduce_letters(letters)) {}

Word Word::generator(const std::string& name, int exp) {
  if (!valid_generator_name(name)) throw WordSyntaxError("bad generator name: " + name);
  return Word({Letter{name, exp}});
}

Word Word::power(const std::string& name, int k) {
  std::vector<Letter> ls;
  int e = k >= 0 ? 1 : -1;
  for (int i = 0; i < std::abs(k); ++i) ls.push_back(Letter{name, e});
  return Word(ls);
}

Word Word::parse(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<Letter> ls;
  while (in >> tok) {
    std::string name = tok;
    int k = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string expo = tok.substr(caret + 1);
      if (expo.empty()) throw WordSyntaxError("missing exponent in token: " + tok);
      std::size_t pos = 0;
      try {
        k = std::stoi(expo, &pos);
      } catch (const std::exception&) {
        throw WordSyntaxError("bad exponent in token: " + tok);
      }
      if (pos != expo.size()) throw WordSyntaxError("bad exponent in token: " + tok);
    }
    if (!valid_generator_name(name)) throw WordSyntaxError("bad generator name in token: " + tok);
    int e = k >= 0 ? 1 : -1;
    for (int i = 0; i < std::abs(k); ++i) ls.push_back(Letter{name, e});
  }
  return Word(ls);
}

Word Word::inverse() const {
  std::vector<Letter> ls;
  ls.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    ls.push_back(Letter{it->gen, -it->exp});
  }
  return Word(ls);
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(ls);
}

bool Word::operator<(const Word& rhs) const {
  if (letters_.size() != rhs.letters_.size()) return letters_.size() < rhs.letters_.size();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].gen != rhs.letters_[i].gen) return letters_[i].gen < rhs.letters_[i].gen;
    if (letters_[i].exp != rhs.letters_[i].exp) return letters_[i].exp < rhs.letters_[i].exp;
  }
  return false;
}

Word Word::conjugated_by(const Word& c) const { return c.inverse() * (*this) * c; }

Word Word::cyclic_reduction(Word* stripped) const {
  std::vector<Letter> ls = letters_;
  std::vector<Letter> conj;
  while (ls.size() >= 2 && ls.front().gen == ls.back().gen && ls.front().exp == -ls.back().exp) {
    conj.push_back(ls.back());
    ls.pop_back();
    ls.erase(ls.begin());
  }
  if (stripped) *stripped = Word(conj).inverse();
  return Word(ls);
}

bool Word::is_cyclic_rotation_of(const Word& other) const {
  if (letters_.size() != other.letters_.size()) return false;
  if (letters_.empty()) return true;
  const auto n = letters_.size();
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(letters_[(s + i) % n] == other.letters_[i])) { ok = false; break; }
    }
    if (ok) return true;
  }
  return false;
}

std::string Word::str() const {
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j + 1 < letters_.size() && letters_[j + 1].gen == letters_[i].gen &&
           letters_[j + 1].exp == letters_[i].exp) {
      ++j;
    }
    int k = static_cast<int>(j - i + 1) * letters_[i].exp;
    if (!out.empty()) out += ' ';
    out += letters_[i].gen;
    if (k != 1) out += "^" + std::to_string(k);
    i = j + 1;
  }
  return out;
}

GroupMap::GroupMap(std::map<std::string, Word> images) : images_(std::move(images)) {
  for (const auto& [gen, w] : images_) {
    if (!valid_generator_name(gen)) throw WordSyntaxError("bad generator name: " + gen);
    (void)w;
  }
}

GroupMap GroupMap::identity(const std::vector<std::string>& generators) {
  std::map<std::string, Word> m;
  for (const auto& g : generators) m[g] = Word::generator(g);
  return GroupMap(m);
}

bool GroupMap::has(const std::string& gen) const { return images_.count(gen) > 0; }

const Word& GroupMap::image(const std::string& gen) const {
  auto it = images_.find(gen);
  if (it == images_.end()) throw UnknownGeneratorError("no image for generator: " + gen);
  return it->second;
}

Word GroupMap::apply(const Word& w) const {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const Word& im = image(l.gen);
    if (l.exp == 1) {
      out.insert(out.end(), im.letters().begin(), im.letters().end());
    } else {
      Word inv = im.inverse();
      out.insert(out.end(), inv.letters().begin(), inv.letters().end());
    }
  }
  return Word(out);
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  std::map<std::string, Word> m;
  for (const auto& [gen, w] : inner.images()) m[gen] = outer.apply(w);
  return GroupMap(m);
}

}  // namespace mutlab
