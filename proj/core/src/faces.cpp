#include "weylface/faces.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>

#include "weylface/errors.hpp"

namespace weylface {

namespace {

Coord sign_of(Coord v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// rho's coordinate magnitudes, largest first.
std::vector<Coord> magnitudes(const RootDatum& datum) {
  std::vector<Coord> m;
  for (Coord c : datum.rho()) m.push_back(std::llabs(c));
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

// Positions of h with the given value, left to right.
std::vector<std::size_t> positions(const Weight& h, Coord value,
                                   std::size_t begin, std::size_t end) {
  std::vector<std::size_t> out;
  for (std::size_t i = begin; i < end; ++i) {
    if (h[i] == value) out.push_back(i);
  }
  return out;
}

Weight g2_rho_prime(G2Case c) {
  switch (c) {
    case G2Case::kTrivial:
    case G2Case::kDs1:
    case G2Case::kL2:
      return {-1, -2, 3};
    case G2Case::kDs2:
      return {1, -3, 2};
    case G2Case::kDs3:
    case G2Case::kL1:
      return {2, -3, 1};
  }
  return {};
}

WeightSet g2_vertices(G2Case c) {
  switch (c) {
    case G2Case::kTrivial: {
      WeightSet all;
      std::vector<Coord> v{-1, -2, 3};
      std::sort(v.begin(), v.end());
      do {
        all.insert(Weight(v));
        all.insert(-Weight(v));
      } while (std::next_permutation(v.begin(), v.end()));
      return all;
    }
    case G2Case::kDs1: return {Weight{-1, -2, 3}};
    case G2Case::kDs2: return {Weight{1, -3, 2}};
    case G2Case::kDs3: return {Weight{2, -3, 1}};
    case G2Case::kL1: return {Weight{2, -3, 1}, Weight{1, -3, 2}};
    case G2Case::kL2: return {Weight{-1, -2, 3}, Weight{1, -3, 2}};
  }
  return {};
}

// One coordinate group of the vertex rules: the positions it occupies and
// every admissible filling of them.
struct Group {
  std::vector<std::size_t> pos;
  std::vector<std::vector<Coord>> fillings;
};

Group tier_group(const Weight& h, const Weight& rho_prime, Coord t) {
  Group g;
  std::vector<Coord> mags;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (std::llabs(h[i]) == t) {
      g.pos.push_back(i);
      mags.push_back(std::llabs(rho_prime[i]));
    }
  }
  std::sort(mags.begin(), mags.end());
  do {
    std::vector<Coord> fill(mags.size());
    for (std::size_t k = 0; k < mags.size(); ++k) {
      fill[k] = sign_of(h[g.pos[k]]) * mags[k];
    }
    g.fillings.push_back(std::move(fill));
  } while (std::next_permutation(mags.begin(), mags.end()));
  return g;
}

Group zero_group(const Weight& h, const Weight& rho_prime, bool even_signs) {
  Group g;
  std::vector<Coord> mags;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 0) {
      g.pos.push_back(i);
      mags.push_back(rho_prime[i]);
    }
  }
  // rho' is nonnegative on the zero block, so sign changes are counted
  // against the all-positive filling.
  std::sort(mags.begin(), mags.end());
  WeightSet seen;
  const std::size_t m = mags.size();
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      if (even_signs && std::popcount(mask) % 2 != 0) continue;
      std::vector<Coord> fill(mags);
      for (std::size_t k = 0; k < m; ++k) {
        if (mask & (std::size_t{1} << k)) fill[k] = -fill[k];
      }
      seen.insert(Weight(std::move(fill)));
    }
  } while (std::next_permutation(mags.begin(), mags.end()));
  for (const auto& w : seen) g.fillings.push_back(w.to_vector());
  return g;
}

void check_in_orbit(const Face& f, const RootDatum& datum) {
  const auto orb = orbit(datum.rho(), datum);
  for (const auto& v : f.vertices) {
    if (!std::binary_search(orb.begin(), orb.end(), v)) {
      throw InternalConsistency("closed-form vertex " + to_string(v) +
                                " of " + to_string(f.descriptor) +
                                " is not in the orbit of rho");
    }
  }
}

}  // namespace

Weight rho_prime_closed_form(const AdmissibleDescriptor& d,
                             const RootDatum& datum) {
  const Weight h = h_from_descriptor(d, datum).weight();
  if (d.params.family == Family::kG2) return g2_rho_prime(d.g2_case);

  const std::vector<Coord> mags = magnitudes(datum);
  std::size_t next = 0;
  std::vector<Coord> out(h.size(), 0);
  auto give = [&](std::size_t pos, Coord sign) {
    out[pos] = sign * mags[next++];
  };

  const Coord l = static_cast<Coord>(d.tiers.size());
  const std::size_t n = h.size();
  if (d.params.family == Family::kSOeven) {
    const auto p = static_cast<std::size_t>(d.params.p);
    for (Coord t = l; t >= 1; --t) {
      for (auto i : positions(h, t, 0, p)) give(i, 1);
      for (auto i : positions(h, t, p, n)) give(i, 1);
      for (auto i : positions(h, -t, p, n)) give(i, -1);
      for (auto i : positions(h, -t, 0, p)) give(i, -1);
    }
    for (auto i : positions(h, 0, 0, p)) give(i, 1);
    for (auto i : positions(h, 0, p, n)) give(i, 1);
  } else {
    for (Coord t = l; t >= 1; --t) {
      for (auto i : positions(h, t, 0, n)) give(i, 1);
      auto neg = positions(h, -t, 0, n);
      std::reverse(neg.begin(), neg.end());
      for (auto i : neg) give(i, -1);
    }
    for (auto i : positions(h, 0, 0, n)) give(i, 1);
  }
  return Weight(std::move(out));
}

Face face_closed_form(const AdmissibleDescriptor& d, const RootDatum& datum,
                      bool check_orbit) {
  Face f;
  f.descriptor = d;
  f.h = h_from_descriptor(d, datum).weight();
  f.rho_prime = rho_prime_closed_form(d, datum);

  if (d.params.family == Family::kG2) {
    f.vertices = g2_vertices(d.g2_case);
  } else {
    std::vector<Group> groups;
    for (Coord t = 1; t <= static_cast<Coord>(d.tiers.size()); ++t) {
      groups.push_back(tier_group(f.h, f.rho_prime, t));
    }
    groups.push_back(
        zero_group(f.h, f.rho_prime, d.params.family != Family::kSp));

    std::vector<Coord> cur(f.h.size(), 0);
    auto rec = [&](auto&& self, std::size_t gi) -> void {
      if (gi == groups.size()) {
        f.vertices.insert(Weight(cur));
        return;
      }
      const Group& g = groups[gi];
      for (const auto& fill : g.fillings) {
        for (std::size_t k = 0; k < g.pos.size(); ++k) cur[g.pos[k]] = fill[k];
        self(self, gi + 1);
      }
    };
    rec(rec, 0);
  }
  f.dirac = dirac_cohomology(f, datum);
  if (check_orbit) check_in_orbit(f, datum);
  return f;
}

Face face_from_wl(const AdmissibleDescriptor& d, const RootDatum& datum,
                  std::size_t max_elements) {
  Face f;
  f.descriptor = d;
  const HVector hv = h_from_descriptor(d, datum);
  f.h = hv.weight();
  f.rho_prime = rho_prime_closed_form(d, datum);
  const LeviDecomposition levi = levi_from_h(hv, datum);
  const Subgroup wl = generate_subgroup(levi.zero_roots, datum, max_elements);
  for (const auto& w : wl.closure) f.vertices.insert(apply(w, f.rho_prime));
  f.dirac = dirac_cohomology(f, datum);
  return f;
}

WeightSet dirac_cohomology(const Face& f, const RootDatum& datum) {
  WeightSet out;
  for (const auto& v : f.vertices) {
    if (is_k_dominant(v, datum)) out.insert(v);
  }
  return out;
}

}  // namespace weylface
