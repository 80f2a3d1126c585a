#include "weylface/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "weylface/errors.hpp"

namespace weylface {

WeylElement::WeylElement(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) {
    throw InvalidParameter("WeylElement: perm and signs differ in length");
  }
  std::vector<bool> seen(perm_.size(), false);
  for (int image : perm_) {
    if (image < 0 || static_cast<std::size_t>(image) >= perm_.size() ||
        seen[static_cast<std::size_t>(image)]) {
      throw InvalidParameter("WeylElement: perm is not a bijection");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) {
      throw InvalidParameter("WeylElement: signs must be +1 or -1");
    }
  }
}

WeylElement WeylElement::identity(std::size_t n) {
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  return WeylElement(std::move(perm), std::vector<int>(n, 1));
}

bool WeylElement::is_identity() const noexcept {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != static_cast<int>(i) || signs_[i] != 1) return false;
  }
  return true;
}

int WeylElement::sign_product() const noexcept {
  int prod = 1;
  for (int s : signs_) prod *= s;
  return prod;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("WeylElement composition: size mismatch");
  }
  const std::size_t n = a.size();
  std::vector<int> perm(n);
  std::vector<int> signs(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto mid = static_cast<std::size_t>(b.perm_[j]);
    const auto dest = static_cast<std::size_t>(a.perm_[mid]);
    perm[j] = static_cast<int>(dest);
    signs[dest] = a.signs_[dest] * b.signs_[mid];
  }
  return WeylElement(std::move(perm), std::move(signs));
}

WeylElement WeylElement::inverse() const {
  const std::size_t n = size();
  std::vector<int> perm(n);
  std::vector<int> signs(n);
  // w: mu_j -> position perm[j] with sign signs[perm[j]].
  // w^-1 moves position perm[j] back to j with the same sign.
  for (std::size_t j = 0; j < n; ++j) {
    const auto dest = static_cast<std::size_t>(perm_[j]);
    perm[dest] = static_cast<int>(j);
    signs[j] = signs_[dest];
  }
  return WeylElement(std::move(perm), std::move(signs));
}

Weight apply(const WeylElement& w, const Weight& mu) {
  if (w.size() != mu.size()) {
    throw DimensionMismatch("apply: element acts on " +
                            std::to_string(w.size()) +
                            " coordinates, weight has " +
                            std::to_string(mu.size()));
  }
  std::vector<Coord> out(mu.size());
  const auto perm = w.perm();
  const auto signs = w.signs();
  for (std::size_t j = 0; j < mu.size(); ++j) {
    const auto dest = static_cast<std::size_t>(perm[j]);
    out[dest] = signs[dest] * mu[j];
  }
  return Weight(std::move(out));
}

bool belongs_to_weyl_group(const WeylElement& w, const RootDatum& datum) {
  if (w.size() != datum.dimension()) return false;
  switch (datum.family()) {
    case Family::kSp:
      return true;
    case Family::kSOeven:
    case Family::kSOstar:
      return w.sign_product() == 1;
    case Family::kG2: {
      const auto s = w.signs();
      return std::all_of(s.begin(), s.end(), [&](int x) { return x == s[0]; });
    }
  }
  return false;
}

Weight reflect(const Weight& mu, const Weight& alpha) {
  const Coord num = 2 * pairing(mu, alpha);
  const Coord den = pairing(alpha, alpha);
  if (den == 0 || num % den != 0) {
    throw InternalConsistency("reflect: non-integral coefficient for " +
                              to_string(mu) + " in " + to_string(alpha));
  }
  return mu - (num / den) * alpha;
}

WeylElement reflection(const Weight& alpha, const RootDatum& datum) {
  if (!datum.is_root(alpha)) {
    throw InvalidParameter("reflection: " + to_string(alpha) +
                           " is not a root of " + describe(datum.params()));
  }
  const std::size_t n = alpha.size();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i] != 0) support.push_back(i);
  }
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  std::vector<int> signs(n, 1);

  if (support.size() == 1) {
    // 2 eps_i: sign change at i.
    signs[support[0]] = -1;
  } else if (support.size() == 2) {
    const auto i = support[0];
    const auto j = support[1];
    std::swap(perm[i], perm[j]);
    if (alpha[i] == alpha[j]) {
      // eps_i + eps_j: swap with both signs changed.
      signs[i] = signs[j] = -1;
    }
  } else {
    // G2 long root +-(2 eps_k - eps_i - eps_j): minus the transposition of
    // the two coordinates with equal coefficient.
    std::size_t i = n, j = n;
    for (std::size_t a = 0; a < 3 && i == n; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        if (alpha[a] == alpha[b]) {
          i = a;
          j = b;
          break;
        }
      }
    }
    std::swap(perm[i], perm[j]);
    std::fill(signs.begin(), signs.end(), -1);
  }
  return WeylElement(std::move(perm), std::move(signs));
}

std::vector<Weight> orbit(const Weight& mu, const RootDatum& datum,
                          std::size_t max_points) {
  datum.require_weight(mu);
  std::vector<WeylElement> gens;
  for (const auto& r : datum.simple_roots()) {
    gens.push_back(reflection(r.weight, datum));
  }
  std::unordered_set<Weight, WeightHash> seen{mu};
  std::deque<Weight> frontier{mu};
  while (!frontier.empty()) {
    Weight cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Weight next = apply(g, cur);
      if (seen.insert(next).second) {
        if (seen.size() > max_points) {
          throw ResourceLimit("orbit of " + to_string(mu) + " in " +
                              describe(datum.params()) + " exceeds " +
                              std::to_string(max_points) + " points");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool Subgroup::contains(const WeylElement& w) const {
  return std::binary_search(closure.begin(), closure.end(), w);
}

Subgroup generate_subgroup(std::span<const Root> roots, const RootDatum& datum,
                           std::size_t max_elements) {
  Subgroup group;
  group.roots.assign(roots.begin(), roots.end());
  std::vector<WeylElement> gens;
  for (const auto& r : roots) {
    WeylElement s = reflection(r.weight, datum);
    if (std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  const auto id = WeylElement::identity(datum.dimension());
  std::set<WeylElement> seen{id};
  std::deque<WeylElement> frontier{id};
  while (!frontier.empty()) {
    WeylElement cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      WeylElement next = g * cur;
      if (seen.insert(next).second) {
        if (seen.size() > max_elements) {
          throw ResourceLimit("subgroup closure in " +
                              describe(datum.params()) + " exceeds " +
                              std::to_string(max_elements) + " elements");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  group.closure.assign(seen.begin(), seen.end());
  return group;
}

Subgroup weyl_group(const RootDatum& datum, std::size_t max_elements) {
  return generate_subgroup(datum.simple_roots(), datum, max_elements);
}

std::size_t weyl_group_order(const RootDatum& datum) {
  if (datum.family() == Family::kG2) return 12;
  const auto n = static_cast<std::size_t>(datum.rank());
  std::size_t order = 1;
  for (std::size_t k = 2; k <= n; ++k) order *= k;
  const std::size_t sign_bits = datum.family() == Family::kSp ? n : n - 1;
  return order << sign_bits;
}

int length(const WeylElement& w, const RootDatum& datum) {
  int count = 0;
  for (const auto& r : datum.positive_roots()) {
    const Weight image = apply(w, r.weight);
    if (datum.positive_index(-image).has_value()) ++count;
  }
  return count;
}

bool is_w1(const WeylElement& w, const RootDatum& datum) {
  return is_k_dominant(apply(w, datum.rho()), datum);
}

std::size_t stabilizer_order(const Subgroup& group, const Weight& mu) {
  return static_cast<std::size_t>(
      std::count_if(group.closure.begin(), group.closure.end(),
                    [&](const WeylElement& w) { return apply(w, mu) == mu; }));
}

}  // namespace weylface
