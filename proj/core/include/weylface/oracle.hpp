#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "weylface/faces.hpp"
#include "weylface/parabolic.hpp"
#include "weylface/root_data.hpp"
#include "weylface/weight.hpp"
#include "weylface/weyl.hpp"

namespace weylface {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

// The orbit points maximizing the pairing with h. Uses only the orbit and
// the pairing, never the closed forms.
WeightSet face_by_argmax(const Weight& h, std::span<const Weight> orbit_points);
WeightSet face_by_argmax(const Weight& h, const RootDatum& datum,
                         std::size_t max_orbit = kDefaultMaxOrbit);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;  // empty on success; counterexample otherwise

  friend bool operator==(const Check&, const Check&) = default;
};

struct FaceReport {
  AdmissibleDescriptor descriptor;
  Weight h;
  std::size_t vertex_count = 0;
  std::size_t dirac_count = 0;
  std::vector<Check> checks;

  bool passed() const;
};

// Checks, for one descriptor:
//   argmax == closed form, argmax == W_l rho', supporting hyperplane,
//   dirac == argmax cap C_k, rho' is a k-dominant vertex,
//   |face| == |W_l| / |stab(rho')|, |dirac| == |W_l| / |W_{l cap k}|,
//   Levi factors as predicted and free of compact simple factors.
FaceReport certify_face(const AdmissibleDescriptor& d, const RootDatum& datum,
                        std::span<const Weight> orbit_points);
FaceReport certify_face(const AdmissibleDescriptor& d, const RootDatum& datum,
                        std::size_t max_orbit = kDefaultMaxOrbit);

struct BijectionReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<Check> checks;

  bool passed() const;
};

// Descriptor -> face injective, face -> dirac injective, and argmax faces of
// sampled non-k-dominant h miss C_k.
BijectionReport certify_bijection(const RootDatum& datum,
                                  std::span<const AdmissibleDescriptor> ds,
                                  std::span<const Weight> orbit_points,
                                  std::uint64_t seed = kDefaultSeed,
                                  std::size_t samples = 200);

struct SweepResult {
  std::size_t checked = 0;
  std::size_t k_dominant = 0;
  std::vector<Weight> mismatches;  // h where the equivalence fails
};

// For every integer h with entries in [-bound, bound] (zero-sum for G2):
// face_by_argmax(h) meets C_k iff h is k-dominant.
SweepResult sweep_k_dominance_criterion(const RootDatum& datum, int bound,
                                        std::span<const Weight> orbit_points);

// Parabolic keys of every k-dominant h with entries in [-bound, bound]
// whose Levi factor has no compact simple factor.
std::set<ParabolicKey> brute_force_admissible_parabolics(const RootDatum& datum,
                                                         int bound);

struct VerifyOptions {
  std::size_t max_orbit = kDefaultMaxOrbit;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 200;
};

struct VerifyReport {
  FamilyParams params;
  std::size_t orbit_size = 0;
  std::vector<FaceReport> faces;  // canonical descriptor order
  BijectionReport bijection;

  bool passed() const;
};

// Full sweep: certify_face for every enumerated descriptor, then
// certify_bijection. Work is spread over opts.jobs threads; the report does
// not depend on the schedule.
VerifyReport certify_all(const RootDatum& datum, const VerifyOptions& opts);

}  // namespace weylface
