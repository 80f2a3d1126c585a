#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylface/root_data.hpp"
#include "weylface/weight.hpp"

namespace weylface {

// One tier (p_i, q_i) of a descriptor.
struct TierPair {
  int p = 0;
  int q = 0;

  friend bool operator==(const TierPair&, const TierPair&) = default;
  friend auto operator<=>(const TierPair&, const TierPair&) = default;
};

enum class G2Case { kTrivial, kDs1, kDs2, kDs3, kL1, kL2 };

// "trivial", "ds1", "ds2", "ds3", "L1", "L2"
std::string_view g2_case_name(G2Case c);
std::optional<G2Case> parse_g2_case(std::string_view name);

// Combinatorial label of an admissible theta-stable parabolic.
//
// tiers[0] is (p_1, q_1), the tier closest to zero. For Sp and SOstar the
// H vector reads, left to right,
//
//   (l x p_l, ..., 1 x p_1, 0 x r, -1 x q_1, ..., -l x q_l)
//
// with r = n - sum(p_i + q_i). Worked example, Sp n=5 with
// tiers = {(1,0), (1,1)}: H = (2, 1, 0, 0, -2), r = 2.
//
// For SOeven the x-block holds the p_i, the y-block the q_i, each followed
// by its r (resp. s) zeros; n_p negates x_p and n_q negates y_q.
// Example, p=q=2, tiers={(2,1)}, r=0, s=1, n_p=1: H = (1,-1 | 1,0).
//
// r and s are stored only for SOeven; g2_case only for G2.
struct AdmissibleDescriptor {
  FamilyParams params;
  std::vector<TierPair> tiers;
  int r = 0;
  int s = 0;
  int n_p = 0;
  int n_q = 0;
  G2Case g2_case = G2Case::kTrivial;

  friend bool operator==(const AdmissibleDescriptor&,
                         const AdmissibleDescriptor&) = default;
};

AdmissibleDescriptor make_descriptor(const FamilyParams& params,
                                     std::vector<TierPair> tiers);
AdmissibleDescriptor make_so_even_descriptor(const FamilyParams& params,
                                             std::vector<TierPair> tiers,
                                             int r, int s, int n_p, int n_q);
AdmissibleDescriptor make_g2_descriptor(G2Case c);

// Size of the zero block: r for Sp/SOstar (derived), r + s for SOeven.
int zero_block_size(const AdmissibleDescriptor& d);

// "[(1,1),(0,1)]", "[(1,1)] r=1 s=1 n_p=0 n_q=0", "L1"
std::string to_string(const AdmissibleDescriptor& d);

// Canonical enumeration order: number of tiers, then the flattened tier
// pairs lexicographically, then (r, s, n_p, n_q); G2 by case tag.
bool descriptor_less(const AdmissibleDescriptor& a,
                     const AdmissibleDescriptor& b);

// Throws InvalidDescriptor naming the violated clause.
void validate_descriptor(const AdmissibleDescriptor& d);

// A k-dominant integer vector.
class HVector {
 public:
  // Throws InvalidParameter if h is not k-dominant, DimensionMismatch if it
  // does not live in datum's space.
  static HVector make(Weight h, const RootDatum& datum);

  const Weight& weight() const noexcept { return h_; }

  friend bool operator==(const HVector&, const HVector&) = default;

 private:
  explicit HVector(Weight h) : h_(std::move(h)) {}
  Weight h_;
};

// Throws InvalidDescriptor when validate_descriptor fails.
HVector h_from_descriptor(const AdmissibleDescriptor& d,
                          const RootDatum& datum);

enum class FactorKind { kUnitary, kSymplectic, kOrthogonal, kOrthoStar, kG2 };

// Isomorphism type of a simple Levi factor, normalized so that
// u(a,b) and so(2a,2b) have a >= b. For kSymplectic and kOrthoStar only a
// is used (sp(2a,R), so*(2a)).
struct FactorType {
  FactorKind kind = FactorKind::kUnitary;
  int a = 0;
  int b = 0;

  friend bool operator==(const FactorType&, const FactorType&) = default;
  friend auto operator<=>(const FactorType&, const FactorType&) = default;
};

// "u(1,1)", "sp(4)", "so(4,2)", "so*(6)", "g2"
std::string to_string(const FactorType& t);

struct LeviFactor {
  std::vector<Root> roots;  // positive roots of the component
  bool compact = false;
  FactorType type;
};

struct LeviDecomposition {
  std::vector<Root> zero_roots;  // positive roots vanishing on H
  std::vector<Root> u_roots;     // all roots positive on H
  std::vector<LeviFactor> factors;
  int torus_rank = 0;

  // Factor types sorted ascending.
  std::vector<FactorType> factor_types() const;
};

LeviDecomposition levi_from_h(const HVector& h, const RootDatum& datum);

bool has_compact_simple_factor(const LeviDecomposition& levi);

// Every admissible descriptor whose Levi factor has no compact simple
// factor, each parabolic exactly once, in canonical order. The empty
// descriptor (H = 0) comes first.
std::vector<AdmissibleDescriptor> enumerate_admissible(const RootDatum& datum);

// Simple factors predicted for d: u(p_i,q_i) for every tier with
// p_i + q_i >= 2, plus the factor carried by the zero block.
std::vector<FactorType> expected_levi_factors(const AdmissibleDescriptor& d);

// levi_from_h(h_from_descriptor(d)), checked against
// expected_levi_factors(d) and for compact simple factors. Throws
// InternalConsistency on either mismatch.
LeviDecomposition descriptor_consistency(const AdmissibleDescriptor& d,
                                         const RootDatum& datum);

// Identifies a parabolic by the sign of every positive root on H:
// +1 (in u), 0 (in l), -1 (in the opposite nilradical).
using ParabolicKey = std::vector<int>;
ParabolicKey parabolic_key(const Weight& h, const RootDatum& datum);

}  // namespace weylface
