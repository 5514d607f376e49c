#include "mutlab/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "mutlab/errors.hpp"

namespace mutlab {

bool Presentation::has_generator(const std::string& g) const {
  return std::find(generators.begin(), generators.end(), g) != generators.end();
}

int Presentation::generator_index(const std::string& g) const {
  auto it = std::find(generators.begin(), generators.end(), g);
  return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (!valid_generator_name(g)) throw PresentationError(name + ": bad generator name: " + g);
    if (!seen.insert(g).second) throw PresentationError(name + ": duplicate generator: " + g);
  }
  for (const auto& r : relators) {
    if (r.defect != 1 && r.defect != -1) throw PresentationError(name + ": defect must be +1 or -1");
    for (const Letter& l : r.word.letters()) {
      if (!seen.count(l.gen)) {
        throw PresentationError(name + ": relator uses unknown generator: " + l.gen);
      }
    }
  }
}

void SplittingData::validate() const {
  surface.validate();
  side_a.validate();
  side_b.validate();
  if (surface.generators.size() != 4) {
    throw InvalidSplittingError(name + ": surface presentation must have 4 generators");
  }
  for (const auto& g : side_a.generators) {
    if (side_b.has_generator(g)) {
      throw InvalidSplittingError(name + ": side generator sets must be disjoint: " + g);
    }
  }
  auto check_side = [&](const GroupMap& inc, const Presentation& side, const char* label) {
    for (const auto& g : surface.generators) {
      if (!inc.has(g)) throw InvalidSplittingError(name + ": " + label + " misses generator " + g);
      for (const Letter& l : inc.image(g).letters()) {
        if (!side.has_generator(l.gen)) {
          throw InvalidSplittingError(name + ": " + label + " image leaves the side: " + l.gen);
        }
      }
    }
    if (side.relators.empty()) {
      // free side: every surface relator's image must die under free reduction
      for (const auto& r : surface.relators) {
        if (!inc.apply(r.word).empty()) {
          throw InvalidSplittingError(name + ": " + label +
                                      " does not kill the surface relator " + r.word.str());
        }
      }
    }
  };
  check_side(i_a, side_a, "i_a");
  check_side(i_b, side_b, "i_b");
  bool any_side_relators = !side_a.relators.empty() || !side_b.relators.empty();
  if (any_side_relators && !relator_check_assumed) {
    throw InvalidSplittingError(name + ": sides with relators need relator_check_assumed");
  }
}

Presentation build_mapping_torus(const GroupMap& monodromy, const Presentation& base,
                                 const std::string& stable_letter) {
  base.validate();
  if (base.has_generator(stable_letter)) {
    throw PresentationError("stable letter clashes with base generator: " + stable_letter);
  }
  for (const auto& g : base.generators) {
    if (!monodromy.has(g)) throw PresentationError("monodromy misses generator: " + g);
  }
  Presentation p;
  p.name = base.name + "_mapping_torus";
  p.generators = base.generators;
  p.generators.push_back(stable_letter);
  p.relators = base.relators;
  Word z = Word::generator(stable_letter);
  for (const auto& g : base.generators) {
    Word lhs = z.inverse() * Word::generator(g) * z;
    p.relators.push_back(Relator{lhs * monodromy.image(g).inverse(), 1});
  }
  p.validate();
  return p;
}

namespace {

Presentation glue(const SplittingData& s, const GroupMap& twist, bool with_stable_letter) {
  s.validate();
  for (const auto& g : s.surface.generators) {
    if (!twist.has(g)) throw InvalidSplittingError("twist misses surface generator: " + g);
  }
  Presentation p;
  p.generators = s.side_a.generators;
  p.generators.insert(p.generators.end(), s.side_b.generators.begin(), s.side_b.generators.end());
  std::string stable = "z";
  if (with_stable_letter) {
    if (std::find(p.generators.begin(), p.generators.end(), stable) != p.generators.end()) {
      throw InvalidSplittingError("stable letter z clashes with a side generator");
    }
    p.generators.push_back(stable);
  }
  p.relators = s.side_a.relators;
  p.relators.insert(p.relators.end(), s.side_b.relators.begin(), s.side_b.relators.end());
  for (const auto& g : s.surface.generators) {
    Word lhs = s.i_a.apply(Word::generator(g));
    Word rhs = s.i_b.apply(twist.apply(Word::generator(g)));
    if (with_stable_letter) {
      Word z = Word::generator(stable);
      p.relators.push_back(Relator{z.inverse() * lhs * z * rhs.inverse(), 1});
    } else {
      p.relators.push_back(Relator{lhs * rhs.inverse(), 1});
    }
  }
  p.validate();
  return p;
}

}  // namespace

GroupMap hyperelliptic_action(const Presentation& surface) {
  const auto& g = surface.generators;
  if (g.size() != 4) throw PresentationError("hyperelliptic action needs 4 surface generators");
  std::map<std::string, Word> images;
  images[g[0]] = Word::parse(g[0] + "^-1");
  images[g[1]] = Word::parse(g[0] + " " + g[1] + "^-1 " + g[0] + "^-1");
  images[g[2]] = Word::parse(g[1] + "^-1 " + g[3] + " " + g[2] + "^-1 " + g[3] + "^-1 " + g[1]);
  images[g[3]] = Word::parse(g[1] + "^-1 " + g[3] + " " + g[2] + " " + g[3] + "^-1 " + g[2] +
                             "^-1 " + g[3] + "^-1 " + g[1]);
  return GroupMap(images);
}

Presentation build_wtau(const SplittingData& s) {
  Presentation p = glue(s, hyperelliptic_action(s.surface), true);
  p.name = s.name + "_wtau";
  return p;
}

Presentation build_amalgam(const SplittingData& s, const GroupMap& twist) {
  Presentation p = glue(s, twist, false);
  p.name = s.name + "_amalgam";
  return p;
}

Presentation build_seifert(const SeifertData& data) {
  const auto& a = data.multiplicities;
  const auto& b = data.b;
  if (a.empty()) throw BadSeifertDataError("no multiplicities");
  if (a.size() != b.size()) throw BadSeifertDataError("multiplicities/b length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 2) throw BadSeifertDataError("multiplicity must be >= 2");
    if (std::gcd(a[i], b[i]) != 1) throw BadSeifertDataError("b_i must be coprime to a_i");
  }
  Presentation p;
  p.name = "seifert";
  for (std::size_t i = 0; i < a.size(); ++i) p.generators.push_back("x" + std::to_string(i + 1));
  p.generators.push_back("h");
  Word h = Word::generator("h");
  Word product;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Word xi = Word::generator(p.generators[i]);
    p.relators.push_back(Relator{xi * h * xi.inverse() * h.inverse(), 1});
    p.relators.push_back(Relator{Word::power(p.generators[i], a[i]) * Word::power("h", b[i]), 1});
    product = product * xi;
  }
  p.relators.push_back(Relator{product * Word::power("h", -data.euler), 1});
  p.validate();
  return p;
}

Presentation build_seifert(const std::vector<int>& multiplicities, int euler,
                           const std::vector<int>& b) {
  return build_seifert(SeifertData{multiplicities, euler, b});
}

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

ojson presentation_to_json(const Presentation& p) {
  ojson j;
  j["name"] = p.name;
  j["generators"] = p.generators;
  ojson rels = ojson::array();
  for (const auto& r : p.relators) {
    rels.push_back(ojson{{"word", r.word.str()}, {"defect", r.defect}});
  }
  j["relators"] = rels;
  return j;
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  p.name = j.value("name", "");
  for (const auto& g : j.at("generators")) p.generators.push_back(g.get<std::string>());
  for (const auto& r : j.at("relators")) {
    Relator rel;
    rel.word = Word::parse(r.at("word").get<std::string>());
    rel.defect = r.value("defect", 1);
    p.relators.push_back(rel);
  }
  p.validate();
  return p;
}

ojson group_map_to_json(const GroupMap& m) {
  ojson entries;
  for (const auto& [gen, w] : m.images()) entries[gen] = w.str();
  return ojson{{"map", entries}};
}

GroupMap group_map_from_json(const json& j) {
  std::map<std::string, Word> images;
  for (const auto& [gen, w] : j.at("map").items()) {
    images[gen] = Word::parse(w.get<std::string>());
  }
  return GroupMap(images);
}

ojson splitting_to_json(const SplittingData& s) {
  ojson j;
  j["name"] = s.name;
  j["surface"] = presentation_to_json(s.surface);
  j["side_a"] = presentation_to_json(s.side_a);
  j["side_b"] = presentation_to_json(s.side_b);
  j["i_a"] = group_map_to_json(s.i_a);
  j["i_b"] = group_map_to_json(s.i_b);
  j["relator_check_assumed"] = s.relator_check_assumed;
  return j;
}

SplittingData splitting_from_json(const json& j) {
  SplittingData s;
  s.name = j.value("name", "");
  s.surface = presentation_from_json(j.at("surface"));
  s.side_a = presentation_from_json(j.at("side_a"));
  s.side_b = presentation_from_json(j.at("side_b"));
  s.i_a = group_map_from_json(j.at("i_a"));
  s.i_b = group_map_from_json(j.at("i_b"));
  s.relator_check_assumed = j.value("relator_check_assumed", false);
  s.validate();
  return s;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void save_json(const std::string& path, const ojson& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write: " + path);
  out << j.dump(2) << "\n";
}

Presentation load_presentation(const std::string& path) {
  return presentation_from_json(load_json(path));
}

GroupMap load_group_map(const std::string& path) { return group_map_from_json(load_json(path)); }

SplittingData load_splitting(const std::string& path) {
  return splitting_from_json(load_json(path));
}

}  // namespace mutlab
