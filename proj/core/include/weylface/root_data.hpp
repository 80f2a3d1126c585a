#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylface/weight.hpp"

namespace weylface {

// The four equal-rank real forms covered by the library.
//   kSp     : sp(2n,R),   k = u(n)
//   kSOeven : so(2p,2q),  k = so(2p) x so(2q)
//   kSOstar : so*(2n),    k = u(n)
//   kG2     : split G2,   k = su(2) + su(2)
enum class Family { kSp, kSOeven, kSOstar, kG2 };

// CLI spelling: "sp", "so-even", "so-star", "g2".
std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

// Rank parameters. Sp and SOstar use n; SOeven uses p and q (n = p + q is
// filled in by build_root_datum); G2 uses none.
struct FamilyParams {
  Family family = Family::kSp;
  int n = 0;
  int p = 0;
  int q = 0;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// "sp n=3", "so-even p=2 q=2", "g2"
std::string describe(const FamilyParams& params);

struct Root {
  Weight weight;
  bool compact = false;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

// Root data for one family and rank. Immutable once built; positive roots
// are those of the standard positive system containing the fixed compact
// positive system.
class RootDatum {
 public:
  Family family() const noexcept { return params_.family; }
  const FamilyParams& params() const noexcept { return params_; }

  // Rank of g (2 for G2, whose weights live in a 3-coordinate model).
  int rank() const noexcept { return rank_; }
  // Number of coordinates of a weight.
  std::size_t dimension() const noexcept { return dimension_; }
  // SOeven split point: coordinates [0, p) are the x-block.
  int p() const noexcept { return params_.p; }
  int q() const noexcept { return params_.q; }

  const std::vector<Root>& positive_roots() const noexcept { return positive_; }
  const std::vector<Root>& compact_positive_roots() const noexcept {
    return compact_;
  }
  const std::vector<Root>& noncompact_positive_roots() const noexcept {
    return noncompact_;
  }
  const std::vector<Root>& simple_roots() const noexcept { return simple_; }

  // Half sum of the positive roots.
  const Weight& rho() const noexcept { return rho_; }

  // Half sums of the positive systems that contain the compact positive
  // system and are recorded explicitly. For G2 these are rho_1, rho_2,
  // rho_3; other families store only rho.
  const std::vector<Weight>& rho_candidates() const noexcept {
    return rho_candidates_;
  }

  // 2 * |positive roots| + rank.
  int lie_algebra_dimension() const noexcept {
    return 2 * static_cast<int>(positive_.size()) + rank_;
  }

  // Index into positive_roots() of alpha, if alpha is a positive root.
  std::optional<std::size_t> positive_index(const Weight& alpha) const;
  bool is_root(const Weight& alpha) const;

  // Throws DimensionMismatch when mu does not live in this datum's space
  // (including the zero-sum constraint for G2).
  void require_weight(const Weight& mu) const;

 private:
  friend RootDatum build_root_datum(const FamilyParams& params);

  FamilyParams params_;
  int rank_ = 0;
  std::size_t dimension_ = 0;
  std::vector<Root> positive_;
  std::vector<Root> compact_;
  std::vector<Root> noncompact_;
  std::vector<Root> simple_;
  Weight rho_;
  std::vector<Weight> rho_candidates_;
};

// Throws InvalidParameter naming the violated bound:
//   Sp: n >= 2;  SOeven: p,q > 0 and p + q >= 4;  SOstar: n >= 4.
RootDatum build_root_datum(const FamilyParams& params);

// alpha(mu) >= 0 for every compact positive root.
bool is_k_dominant(const Weight& mu, const RootDatum& datum);
// alpha(mu) >= 0 for every positive root.
bool is_g_dominant(const Weight& mu, const RootDatum& datum);

// The per-family coordinate form of k-dominance:
//   Sp, SOstar: x_1 >= ... >= x_n
//   SOeven:     x_1 >= ... >= x_{p-1} >= |x_p| and y_1 >= ... >= |y_q|
//   G2:         x_2 <= x_1 <= -x_2
// Kept separate from is_k_dominant so the two can be cross-checked.
bool is_k_dominant_by_coordinates(const Weight& mu, const RootDatum& datum);

}  // namespace weylface
