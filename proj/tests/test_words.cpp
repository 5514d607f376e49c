#include <doctest.h>

#include "mutlab/abelian.hpp"
#include "mutlab/errors.hpp"
#include "mutlab/fixtures.hpp"
#include "mutlab/presentation.hpp"
#include "mutlab/rng.hpp"
#include "mutlab/word.hpp"

using namespace mutlab;

namespace {

// independent reducer: full scan passes until stable, no stack
std::vector<Letter> scan_reduce(std::vector<Letter> in) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < in.size(); ++i) {
      if (in[i].gen == in[i + 1].gen && in[i].exp == -in[i + 1].exp) {
        in.erase(in.begin() + i, in.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return in;
}

std::vector<Letter> random_letters(Rng& rng, int len) {
  const std::string gens[3] = {"a", "b", "c"};
  std::vector<Letter> out;
  for (int i = 0; i < len; ++i) {
    out.push_back(Letter{gens[rng.uniform_int(3)], rng.uniform_int(2) == 0 ? 1 : -1});
  }
  return out;
}

}  // namespace

TEST_CASE("free reduction cancels adjacent inverses") {
  CHECK(Word::parse("a1 a1^-1").empty());
  CHECK(Word::parse("a^0").empty());
  CHECK(Word::parse("a^3 a^-3").empty());
  CHECK(Word::parse("a^2").size() == 2);
}

TEST_CASE("surface relator is already reduced") {
  Word r = surface_relator();
  CHECK(r.size() == 8);
  CHECK(Word(std::vector<Letter>(r.letters())) == r);
}

TEST_CASE("reduction agrees with an independent scanner and is idempotent") {
  Rng rng(42);
  for (int trial = 0; trial < 10000; ++trial) {
    auto raw = random_letters(rng, rng.uniform_int(24));
    auto stack = reduce_letters(raw);
    auto scan = scan_reduce(raw);
    CHECK(stack == scan);
    CHECK(stack.size() <= raw.size());
    CHECK(reduce_letters(stack) == stack);
    Word w(raw);
    CHECK((w * w.inverse()).empty());
  }
}

TEST_CASE("word grammar round trips and rejects junk") {
  Word w = Word::parse("a1 b1^-1 a1^2 c_3^-2");
  CHECK(w.str() == "a1 b1^-1 a1^2 c_3^-2");
  CHECK(Word::parse(w.str()) == w);
  CHECK(Word::parse("").empty());
  CHECK_THROWS_AS(Word::parse("a^"), WordSyntaxError);
  CHECK_THROWS_AS(Word::parse("a^x"), WordSyntaxError);
  CHECK_THROWS_AS(Word::parse("a^1b"), WordSyntaxError);
  CHECK_THROWS_AS(Word::parse("a+b"), WordSyntaxError);
}

TEST_CASE("hyperelliptic table matches the generator images") {
  const GroupMap& tau = tau_star();
  CHECK(tau.apply(Word::parse("a1")) == Word::parse("a1^-1"));
  CHECK(tau.apply(Word::parse("b2")) == Word::parse("b1^-1 b2 a2 b2^-1 a2^-1 b2^-1 b1"));
  CHECK_THROWS_AS(tau.apply(Word::parse("q")), UnknownGeneratorError);
}

TEST_CASE("hyperelliptic action squares to the identity on short generators") {
  const GroupMap& tau = tau_star();
  CHECK(tau.apply(tau.apply(Word::parse("a1"))) == Word::parse("a1"));
  CHECK(tau.apply(tau.apply(Word::parse("b1"))) == Word::parse("b1"));
}

TEST_CASE("relator image under the hyperelliptic action is the b1-conjugate") {
  Word image = tau_star().apply(surface_relator());
  Word expected = surface_relator().conjugated_by(Word::generator("b1"));
  CHECK(image == expected);
  // conjugacy witnessed by cyclic reduction
  Word stripped;
  Word core = image.cyclic_reduction(&stripped);
  CHECK(core.is_cyclic_rotation_of(surface_relator()));
}

TEST_CASE("mapping torus has the HNN shape") {
  Presentation mt = build_mapping_torus(tau_star(), surface_presentation(), "z");
  CHECK(mt.generators.size() == 5);
  CHECK(mt.relators.size() == 5);

  Presentation prod = build_mapping_torus(GroupMap::identity(surface_presentation().generators),
                                          surface_presentation(), "z");
  CHECK(h1(prod) == AbelianInvariants::free_of_rank(5));

  // arbitrary relator-preserving monodromy: still 1+4 relators
  Presentation other = build_mapping_torus(surface_endo_table()[1].map, surface_presentation());
  CHECK(other.relators.size() == 5);

  CHECK_THROWS_AS(build_mapping_torus(tau_star(), surface_presentation(), "a1"),
                  PresentationError);
}

TEST_CASE("wtau gluing over free sides has 5 generators and 4 relators") {
  SplittingData s = standard_splitting();
  Presentation w = build_wtau(s);
  CHECK(w.generators.size() == 5);
  CHECK(w.relators.size() == 4);
  for (const auto& r : w.relators) {
    CHECK(r.word.letters().front().gen == "z");
  }
}

TEST_CASE("standard amalgam abelianizes to Z^2 with either twist") {
  SplittingData s = standard_splitting();
  Presentation untwisted = build_amalgam(s, GroupMap::identity(s.surface.generators));
  CHECK(untwisted.generators.size() == 4);
  CHECK(untwisted.relators.size() == 4);
  CHECK(h1(untwisted) == AbelianInvariants::free_of_rank(2));

  Presentation twisted = build_amalgam(s, tau_star());
  CHECK(h1(twisted) == AbelianInvariants::free_of_rank(2));
}

TEST_CASE("i0 kills the surface relator") {
  SplittingData s = standard_splitting();
  CHECK(s.i_a.apply(surface_relator()).empty());
  CHECK(s.i_b.apply(surface_relator()).empty());
}

TEST_CASE("splitting validation rejects broken data") {
  SplittingData s = standard_splitting();
  s.side_b = free_group({"x", "v"}, "clash");  // x collides with side A
  CHECK_THROWS_AS(s.validate(), InvalidSplittingError);

  SplittingData t = standard_splitting();
  t.i_b = GroupMap({{"a1", Word::generator("u")},
                    {"b1", Word::generator("u")},  // no longer kills the relator
                    {"a2", Word::generator("v")},
                    {"b2", Word()}});
  CHECK_THROWS_AS(t.validate(), InvalidSplittingError);
}

TEST_CASE("surface endomorphism table is relator-preserving") {
  for (const auto& e : surface_endo_table()) {
    Word image = e.map.apply(surface_relator()).cyclic_reduction();
    bool ok = image.is_cyclic_rotation_of(surface_relator()) ||
              image.is_cyclic_rotation_of(surface_relator().inverse());
    CHECK_MESSAGE(ok, e.name);
  }
}

TEST_CASE("seifert presentations have the documented shape") {
  Presentation p = build_seifert({2, 3, 7}, -1, {1, 1, 1});
  CHECK(p.generators.size() == 4);
  CHECK(p.relators.size() == 7);

  CHECK_THROWS_AS(build_seifert({1, 3, 7}, -1, {1, 1, 1}), BadSeifertDataError);
  CHECK_THROWS_AS(build_seifert({2, 3}, -1, {1, 1, 1}), BadSeifertDataError);
  CHECK_THROWS_AS(build_seifert({2, 4}, -1, {1, 2}), BadSeifertDataError);
}
