#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mutlab/presentation.hpp"

namespace mutlab {

// genus-2 surface group <a1 b1 a2 b2 | a1 b1 a1^-1 b1^-1 b2 a2 b2^-1 a2^-1>
const Presentation& surface_presentation();
const Word& surface_relator();

// hyperelliptic action on the standard surface generators
const GroupMap& tau_star();

Presentation free_group(const std::vector<std::string>& generators, const std::string& name);

// mapping torus of tau with stable letter z
Presentation maptorus_presentation();

// F2 = <x,y|> with the Heegaard involution x -> x^-1, y -> y^-1
const Presentation& f2_presentation();
const GroupMap& heegaard_involution();

// Relator-preserving surface endomorphisms: the hyperelliptic action and
// Dehn-twist actions along the four generator curves (and inverse twists).
// Every entry is validated at construction: the image of the surface relator
// must cyclically reduce to a rotation of the relator or of its inverse.
struct SurfaceEndo {
  std::string name;
  GroupMap map;
};
const std::vector<SurfaceEndo>& surface_endo_table();

// standard handlebody splitting i0: a1 -> x, b1 -> <empty>, a2 -> y,
// b2 -> <empty> on both sides (side B uses u, v)
SplittingData standard_splitting();

// i0 with i_b precomposed by a seeded composition of table endomorphisms;
// records the seed and the composition in the name
SplittingData twisted_splitting(std::uint64_t seed, int n_endos);

// Twisted splittings filtered to homology spheres: the untwisted amalgam
// abelianizes to 0.  Throws ValidationFailedError when the seed stream
// cannot produce `count` of them within `max_attempts`.
std::vector<SplittingData> homology_sphere_splittings(std::uint64_t seed, int count,
                                                      int max_attempts = 4000);

// multiplicity-(2,...,2) family matching the twisted mapping torus at e = -3
SeifertData mapping_torus_seifert_data(int euler);

// Writes the bundled fixture library under dir, re-validating every file
// before it is written.  Returns the file names.
std::vector<std::string> make_fixtures(const std::string& dir, std::uint64_t seed);

}  // namespace mutlab
