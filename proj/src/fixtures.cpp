#include "mutlab/fixtures.hpp"

#include <filesystem>

#include <nlohmann/json.hpp>

#include "mutlab/abelian.hpp"
#include "mutlab/errors.hpp"
#include "mutlab/rng.hpp"
#include "mutlab/solver.hpp"

namespace mutlab {

const Presentation& surface_presentation() {
  static const Presentation p = [] {
    Presentation s;
    s.name = "genus2_surface";
    s.generators = {"a1", "b1", "a2", "b2"};
    s.relators = {Relator{Word::parse("a1 b1 a1^-1 b1^-1 b2 a2 b2^-1 a2^-1"), 1}};
    s.validate();
    return s;
  }();
  return p;
}

const Word& surface_relator() { return surface_presentation().relators[0].word; }

const GroupMap& tau_star() {
  static const GroupMap m = hyperelliptic_action(surface_presentation());
  return m;
}

Presentation free_group(const std::vector<std::string>& generators, const std::string& name) {
  Presentation p;
  p.name = name;
  p.generators = generators;
  p.validate();
  return p;
}

Presentation maptorus_presentation() {
  Presentation p = build_mapping_torus(tau_star(), surface_presentation(), "z");
  p.name = "maptorus_tau";
  return p;
}

const Presentation& f2_presentation() {
  static const Presentation p = free_group({"x", "y"}, "f2");
  return p;
}

const GroupMap& heegaard_involution() {
  static const GroupMap m = GroupMap({{"x", Word::parse("x^-1")}, {"y", Word::parse("y^-1")}});
  return m;
}

namespace {

GroupMap twist_map(const std::string& moved, const Word& image) {
  std::map<std::string, Word> images;
  for (const auto& g : surface_presentation().generators) images[g] = Word::generator(g);
  images[moved] = image;
  return GroupMap(images);
}

void validate_endo(const SurfaceEndo& e) {
  Word image = e.map.apply(surface_relator()).cyclic_reduction();
  Word r = surface_relator();
  if (!image.is_cyclic_rotation_of(r) && !image.is_cyclic_rotation_of(r.inverse())) {
    throw ValidationFailedError("surface endomorphism does not preserve the relator: " + e.name);
  }
}

}  // namespace

const std::vector<SurfaceEndo>& surface_endo_table() {
  static const std::vector<SurfaceEndo> table = [] {
    std::vector<SurfaceEndo> t;
    t.push_back({"tau", tau_star()});
    t.push_back({"twist_a1", twist_map("b1", Word::parse("b1 a1"))});
    t.push_back({"twist_a1_inv", twist_map("b1", Word::parse("b1 a1^-1"))});
    t.push_back({"twist_b1", twist_map("a1", Word::parse("a1 b1"))});
    t.push_back({"twist_b1_inv", twist_map("a1", Word::parse("a1 b1^-1"))});
    t.push_back({"twist_a2", twist_map("b2", Word::parse("b2 a2"))});
    t.push_back({"twist_a2_inv", twist_map("b2", Word::parse("b2 a2^-1"))});
    t.push_back({"twist_b2", twist_map("a2", Word::parse("a2 b2"))});
    t.push_back({"twist_b2_inv", twist_map("a2", Word::parse("a2 b2^-1"))});
    for (const auto& e : t) validate_endo(e);
    return t;
  }();
  return table;
}

namespace {

GroupMap handlebody_map(const std::string& ga, const std::string& gb) {
  return GroupMap({{"a1", Word::generator(ga)},
                   {"b1", Word()},
                   {"a2", Word::generator(gb)},
                   {"b2", Word()}});
}

}  // namespace

SplittingData standard_splitting() {
  SplittingData s;
  s.name = "splitting_i0";
  s.surface = surface_presentation();
  s.side_a = free_group({"x", "y"}, "handlebody_a");
  s.side_b = free_group({"u", "v"}, "handlebody_b");
  s.i_a = handlebody_map("x", "y");
  s.i_b = handlebody_map("u", "v");
  s.validate();
  return s;
}

SplittingData twisted_splitting(std::uint64_t seed, int n_endos) {
  const auto& table = surface_endo_table();
  Rng rng(seed);
  GroupMap sigma = GroupMap::identity(surface_presentation().generators);
  for (int i = 0; i < n_endos; ++i) {
    const SurfaceEndo& e = table[rng.uniform_int(static_cast<int>(table.size()))];
    sigma = compose(sigma, e.map);
  }
  SplittingData s = standard_splitting();
  s.name = "splitting_seed" + std::to_string(seed);
  s.i_b = compose(s.i_b, sigma);
  s.validate();  // includes the i_b(R)-trivial check
  return s;
}

std::vector<SplittingData> homology_sphere_splittings(std::uint64_t seed, int count,
                                                      int max_attempts) {
  std::vector<SplittingData> out;
  const AbelianInvariants zero{};
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count;
       ++attempt) {
    std::uint64_t s = Rng::mix(seed, static_cast<std::uint64_t>(attempt));
    int len = 3 + static_cast<int>(s % 6);
    SplittingData cand = twisted_splitting(s, len);
    Presentation amalgam = build_amalgam(cand, GroupMap::identity(cand.surface.generators));
    if (h1(amalgam) == zero) out.push_back(std::move(cand));
  }
  if (static_cast<int>(out.size()) < count) {
    throw ValidationFailedError("could not generate enough homology-sphere splittings");
  }
  return out;
}

SeifertData mapping_torus_seifert_data(int euler) {
  return SeifertData{{2, 2, 2, 2, 2, 2}, euler, {1, 1, 1, 1, 1, 1}};
}

namespace {

using ojson = nlohmann::ordered_json;

ojson seifert_json(const SeifertData& d) {
  ojson j = presentation_to_json(build_seifert(d));
  j["seifert"] = ojson{{"multiplicities", d.multiplicities}, {"euler", d.euler}, {"b", d.b}};
  return j;
}

void write_fixture(const std::string& dir, const std::string& name, const ojson& j,
                   std::vector<std::string>& files) {
  save_json(dir + "/" + name, j);
  files.push_back(name);
}

}  // namespace

std::vector<std::string> make_fixtures(const std::string& dir, std::uint64_t seed) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> files;

  write_fixture(dir, "surface.json", presentation_to_json(surface_presentation()), files);
  write_fixture(dir, "tau.json", group_map_to_json(tau_star()), files);
  write_fixture(dir, "f2.json", presentation_to_json(f2_presentation()), files);
  write_fixture(dir, "heegaard_involution.json", group_map_to_json(heegaard_involution()), files);

  {
    Presentation mt = maptorus_presentation();
    if (mt.generators.size() != 5 || mt.relators.size() != 5) {
      throw ValidationFailedError("mapping torus fixture has the wrong shape");
    }
    AbelianInvariants inv = h1(mt);
    AbelianInvariants expected{{2, 2, 2, 2}, 1};
    if (!(inv == expected)) {
      throw ValidationFailedError("mapping torus H1 must be (Z/2)^4 + Z, got " + inv.str());
    }
    ojson j = presentation_to_json(mt);
    j["h1"] = inv.str();
    write_fixture(dir, "maptorus_tau.json", j, files);
  }
  {
    Presentation mt = build_mapping_torus(GroupMap::identity(surface_presentation().generators),
                                          surface_presentation(), "z");
    mt.name = "maptorus_id";
    if (!(h1(mt) == AbelianInvariants::free_of_rank(5))) {
      throw ValidationFailedError("product mapping torus must abelianize to Z^5");
    }
    write_fixture(dir, "maptorus_id.json", presentation_to_json(mt), files);
  }

  for (int euler : {-5, -4, -3, -2, -1, 0, 2}) {
    SeifertData d = mapping_torus_seifert_data(euler);
    Presentation p = build_seifert(d);
    if (euler == -3 && !(h1(p) == AbelianInvariants{{2, 2, 2, 2}, 1})) {
      throw ValidationFailedError("Seifert e = -3 fixture must match the mapping torus H1");
    }
    ojson j = seifert_json(d);
    j["h1"] = h1(p).str();
    write_fixture(dir, "seifert_2x6_e" + std::to_string(euler) + ".json", j, files);
  }

  for (auto [a1, a2, a3] : {std::tuple{2, 3, 5}, std::tuple{2, 3, 7}, std::tuple{2, 3, 11}}) {
    SeifertData d = brieskorn_data(a1, a2, a3);
    Presentation p = build_seifert(d);
    if (!(h1(p) == AbelianInvariants{})) {
      throw ValidationFailedError("Brieskorn fixture is not a homology sphere");
    }
    ojson j = seifert_json(d);
    j["h1"] = "0";
    write_fixture(dir,
                  "brieskorn_" + std::to_string(a1) + "_" + std::to_string(a2) + "_" +
                      std::to_string(a3) + ".json",
                  j, files);
  }

  {
    SplittingData i0 = standard_splitting();
    if (!i0.i_a.apply(surface_relator()).empty()) {
      throw ValidationFailedError("i0 must kill the surface relator");
    }
    write_fixture(dir, "splitting_i0.json", splitting_to_json(i0), files);
  }
  {
    auto splittings = homology_sphere_splittings(seed, 8);
    int idx = 0;
    for (const auto& s : splittings) {
      ojson j = splitting_to_json(s);
      j["homology_sphere"] = true;
      write_fixture(dir, "splitting_hs_" + std::to_string(idx++) + ".json", j, files);
    }
  }
  return files;
}

}  // namespace mutlab
