#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace weylface {

using Coord = std::int64_t;

// A point of t*_R in epsilon-coordinates. Every weight this library touches
// (rho, rho', face vertices, H) is integral, so coordinates are exact integers.
// G2 weights are length-3 triples with zero coordinate sum.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Coord> coords) : coords_(coords) {}

  static Weight zero(std::size_t dimension) {
    return Weight(std::vector<Coord>(dimension, 0));
  }

  std::size_t size() const noexcept { return coords_.size(); }
  bool empty() const noexcept { return coords_.empty(); }

  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }

  std::span<const Coord> coords() const noexcept { return coords_; }
  const std::vector<Coord>& to_vector() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const noexcept;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<Coord> coords_;
};

// Ordered set keeps every report and serialization deterministic.
using WeightSet = std::set<Weight>;

// Standard form: sum of mu_i * h_i. Throws DimensionMismatch on unequal length.
Coord pairing(const Weight& mu, const Weight& h);

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(Coord factor, const Weight& a);

// "(2,-1)"
std::string to_string(const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace weylface
