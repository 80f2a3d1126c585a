#pragma once

#include <cstddef>

#include "weylface/parabolic.hpp"
#include "weylface/root_data.hpp"
#include "weylface/weight.hpp"
#include "weylface/weyl.hpp"

namespace weylface {

// A face of the polytope conv(W rho) that meets the k-dominant chamber.
struct Face {
  AdmissibleDescriptor descriptor;
  Weight h;
  Weight rho_prime;   // a k-dominant vertex
  WeightSet vertices;
  WeightSet dirac;    // vertices that are k-dominant
};

// The k-dominant vertex given by the per-family closed formula. Magnitudes
// of rho are handed out tier by tier from the top, largest first; within a
// tier positive H entries come first, negative ones last. G2 uses the table
// trivial -> rho_1, ds_i -> rho_i, L1 -> rho_3, L2 -> rho_1.
Weight rho_prime_closed_form(const AdmissibleDescriptor& d,
                             const RootDatum& datum);

// Vertices generated from rho_prime_closed_form by the coordinate rules:
// the magnitudes of a tier are permuted over the tier's positions with the
// sign of H at each position, and the zero block takes all permutations with
// arbitrary sign changes (Sp) or an even number of them (SOeven, SOstar).
// With check_orbit, every vertex is tested for membership in W rho and
// InternalConsistency is thrown on failure.
Face face_closed_form(const AdmissibleDescriptor& d, const RootDatum& datum,
                      bool check_orbit = false);

// W_l applied to rho_prime_closed_form(d), W_l generated by the reflections
// in the roots vanishing on H.
Face face_from_wl(const AdmissibleDescriptor& d, const RootDatum& datum,
                  std::size_t max_elements = kDefaultMaxOrbit);

WeightSet dirac_cohomology(const Face& f, const RootDatum& datum);

}  // namespace weylface
