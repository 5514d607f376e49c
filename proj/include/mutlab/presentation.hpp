#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mutlab/word.hpp"

namespace mutlab {

// defect +1: relator evaluates to the identity.
// defect -1: relator must evaluate to minus the identity (lifted problems
// where the obstruction to an honest quotient representation is central).
struct Relator {
  Word word;
  int defect = 1;
  bool operator==(const Relator&) const = default;
};

struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<Relator> relators;

  bool has_generator(const std::string& g) const;
  int generator_index(const std::string& g) const;  // -1 if absent
  void validate() const;                            // throws PresentationError
};

// Genus-2 splitting data: the fixed surface presentation plus the two side
// presentations and the inclusion word maps driving the gluings.
struct SplittingData {
  std::string name;
  Presentation surface;
  Presentation side_a;
  Presentation side_b;
  GroupMap i_a;
  GroupMap i_b;
  // set when a side has relators, so i(R)-triviality was recorded as an
  // assumption instead of checked by free reduction
  bool relator_check_assumed = false;

  void validate() const;  // throws InvalidSplittingError
};

// The hyperelliptic action on the four surface generators (a1 b1 a2 b2 in
// presentation order):
//   a1 -> a1^-1
//   b1 -> a1 b1^-1 a1^-1
//   a2 -> b1^-1 b2 a2^-1 b2^-1 b1
//   b2 -> b1^-1 b2 a2 b2^-1 a2^-1 b2^-1 b1
GroupMap hyperelliptic_action(const Presentation& surface);

// HNN presentation of the mapping torus of `monodromy`: base relators plus
// stable^-1 g stable = monodromy(g) for every base generator g.
Presentation build_mapping_torus(const GroupMap& monodromy, const Presentation& base,
                                 const std::string& stable_letter = "z");

// Presentation of the trace cobordism group: both sides, a stable letter z,
// and relators z^-1 i_a(g) z = i_b(tau(g)) over the four surface generators.
Presentation build_wtau(const SplittingData& s);

// Amalgam of the two sides along i_a(g) = i_b(twist(g)).  twist = identity
// glues the original manifold, twist = tau its mutant.
Presentation build_amalgam(const SplittingData& s, const GroupMap& twist);

// Seifert data over S^2: multiplicities a_i >= 2, integer Euler class e
// (normalized fiber coefficients), per-fiber coefficients b_i coprime to a_i.
struct SeifertData {
  std::vector<int> multiplicities;
  int euler = 0;
  std::vector<int> b;
};

// Relators: [x_i,h], x_i^{a_i} h^{b_i}, and x_1...x_n h^{-e}.  With b_i = 1
// this convention puts the rank-one H1 member of the multiplicity-(2,...,2)
// family at e = -3 and reproduces the textbook Brieskorn data.
Presentation build_seifert(const SeifertData& data);
Presentation build_seifert(const std::vector<int>& multiplicities, int euler,
                           const std::vector<int>& b);

// JSON formats (External Interfaces):
//   presentation: {"name": str, "generators": [str],
//                  "relators": [{"word": str, "defect": 1|-1}]}
//   group map:    {"map": {gen: wordstring}}
nlohmann::ordered_json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);
nlohmann::ordered_json group_map_to_json(const GroupMap& m);
GroupMap group_map_from_json(const nlohmann::json& j);
nlohmann::ordered_json splitting_to_json(const SplittingData& s);
SplittingData splitting_from_json(const nlohmann::json& j);

Presentation load_presentation(const std::string& path);
GroupMap load_group_map(const std::string& path);
SplittingData load_splitting(const std::string& path);
void save_json(const std::string& path, const nlohmann::ordered_json& j);
nlohmann::json load_json(const std::string& path);

}  // namespace mutlab
