#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "weylface/root_data.hpp"
#include "weylface/weight.hpp"

namespace weylface {

inline constexpr std::size_t kDefaultMaxOrbit = 10'000'000;

// A signed permutation acting on weights.
//
// Action convention, fixed project-wide: coordinate j moves to position
// perm[j], then the sign stored at the destination applies:
//
//   apply(w, mu)[perm[j]] = signs[perm[j]] * mu[j]
//
// equivalently result_i = signs_i * mu_{perm^-1(i)}. Example: perm = swap,
// signs = (+,-) sends (2,1) to (1,-2).
//
// All four Weyl groups are realised this way. Type C uses every signed
// permutation, type D those with an even number of sign changes, and G2
// (on the zero-sum plane) is S_3 x {+1,-1}: permutations with all signs
// equal. belongs_to_weyl_group checks the family constraint.
class WeylElement {
 public:
  WeylElement() = default;
  // Throws InvalidParameter unless perm is a bijection of {0..n-1} and every
  // sign is +1 or -1.
  WeylElement(std::vector<int> perm, std::vector<int> signs);

  static WeylElement identity(std::size_t n);

  std::size_t size() const noexcept { return perm_.size(); }
  std::span<const int> perm() const noexcept { return perm_; }
  std::span<const int> signs() const noexcept { return signs_; }

  bool is_identity() const noexcept;
  int sign_product() const noexcept;

  // (a * b)(mu) == a(b(mu))
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  WeylElement inverse() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

Weight apply(const WeylElement& w, const Weight& mu);

bool belongs_to_weyl_group(const WeylElement& w, const RootDatum& datum);

// s_alpha(mu) = mu - (2<mu,alpha>/<alpha,alpha>) alpha, exactly. Throws
// InternalConsistency if the coefficient is not an integer.
Weight reflect(const Weight& mu, const Weight& alpha);

// The reflection s_alpha as a WeylElement. alpha must be a root of datum.
WeylElement reflection(const Weight& alpha, const RootDatum& datum);

// Full W-orbit of mu, sorted ascending and deduplicated. Breadth-first
// closure under the simple reflections. Throws ResourceLimit once the orbit
// exceeds max_points.
std::vector<Weight> orbit(const Weight& mu, const RootDatum& datum,
                          std::size_t max_points = kDefaultMaxOrbit);

// Subgroup generated by the reflections in a set of roots, materialised.
struct Subgroup {
  std::vector<Root> roots;
  std::vector<WeylElement> closure;  // sorted, contains the identity

  std::size_t order() const noexcept { return closure.size(); }
  bool contains(const WeylElement& w) const;
};

// Throws InvalidParameter if a root is not in datum, ResourceLimit past cap.
Subgroup generate_subgroup(std::span<const Root> roots, const RootDatum& datum,
                           std::size_t max_elements = kDefaultMaxOrbit);

// The whole Weyl group, generated by the simple reflections.
Subgroup weyl_group(const RootDatum& datum,
                    std::size_t max_elements = kDefaultMaxOrbit);

// |W|: 2^n n! (Sp), 2^(n-1) n! (SOeven, SOstar), 12 (G2).
std::size_t weyl_group_order(const RootDatum& datum);

// Number of positive roots sent to negative roots.
int length(const WeylElement& w, const RootDatum& datum);

// w rho is k-dominant.
bool is_w1(const WeylElement& w, const RootDatum& datum);

// Elements of the subgroup fixing mu.
std::size_t stabilizer_order(const Subgroup& group, const Weight& mu);

}  // namespace weylface
