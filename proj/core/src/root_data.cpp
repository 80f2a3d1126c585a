#include "weylface/root_data.hpp"

#include <algorithm>
#include <cstdlib>

#include "weylface/errors.hpp"

namespace weylface {

namespace {

Weight unit_combo(std::size_t n, std::size_t i, Coord a, std::size_t j,
                  Coord b) {
  Weight w = Weight::zero(n);
  w[i] += a;
  w[j] += b;
  return w;
}

// Positive roots of types C_n and D_n with the compactness rule supplied.
template <typename CompactPred>
std::vector<Root> classical_roots(std::size_t n, bool with_long,
                                  CompactPred is_compact_pair) {
  std::vector<Root> roots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      roots.push_back({unit_combo(n, i, 1, j, -1), is_compact_pair(i, j, -1)});
      roots.push_back({unit_combo(n, i, 1, j, 1), is_compact_pair(i, j, +1)});
    }
  }
  if (with_long) {
    for (std::size_t i = 0; i < n; ++i) {
      Weight w = Weight::zero(n);
      w[i] = 2;
      roots.push_back({std::move(w), false});
    }
  }
  return roots;
}

std::vector<Root> g2_roots() {
  // Standard positive system; the compact ones are the simple roots of
  // k = su(2) + su(2).
  return {
      {Weight{1, -1, 0}, true},   {Weight{-1, 0, 1}, false},
      {Weight{0, -1, 1}, false},  {Weight{-2, 1, 1}, false},
      {Weight{-1, -1, 2}, true},  {Weight{1, -2, 1}, false},
  };
}

Weight half_sum(const std::vector<Root>& roots, std::size_t dim) {
  Weight sum = Weight::zero(dim);
  for (const auto& r : roots) sum = sum + r.weight;
  for (std::size_t i = 0; i < dim; ++i) {
    if (sum[i] % 2 != 0) {
      throw InternalConsistency("rho is not integral for this root system");
    }
    sum[i] /= 2;
  }
  return sum;
}

// A positive root is simple iff it is not a sum of two positive roots.
std::vector<Root> simple_from_positive(const std::vector<Root>& positive) {
  std::vector<Root> simple;
  for (const auto& candidate : positive) {
    bool decomposable = false;
    for (std::size_t a = 0; a < positive.size() && !decomposable; ++a) {
      for (std::size_t b = a; b < positive.size(); ++b) {
        if (positive[a].weight + positive[b].weight == candidate.weight) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) simple.push_back(candidate);
  }
  return simple;
}

bool descending(std::span<const Coord> xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i - 1] < xs[i]) return false;
  }
  return true;
}

// x_1 >= ... >= x_{m-1} >= |x_m|; vacuous for m <= 1 (so(2) has no roots).
bool type_d_chamber(std::span<const Coord> xs) {
  if (xs.size() <= 1) return true;
  const std::size_t m = xs.size();
  if (!descending(xs.first(m - 1))) return false;
  return xs[m - 2] >= std::llabs(xs[m - 1]);
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kSp:
      return "sp";
    case Family::kSOeven:
      return "so-even";
    case Family::kSOstar:
      return "so-star";
    case Family::kG2:
      return "g2";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "sp") return Family::kSp;
  if (name == "so-even") return Family::kSOeven;
  if (name == "so-star") return Family::kSOstar;
  if (name == "g2") return Family::kG2;
  return std::nullopt;
}

std::string describe(const FamilyParams& params) {
  std::string out(family_name(params.family));
  switch (params.family) {
    case Family::kSp:
    case Family::kSOstar:
      out += " n=" + std::to_string(params.n);
      break;
    case Family::kSOeven:
      out += " p=" + std::to_string(params.p) + " q=" + std::to_string(params.q);
      break;
    case Family::kG2:
      break;
  }
  return out;
}

std::optional<std::size_t> RootDatum::positive_index(const Weight& alpha) const {
  for (std::size_t i = 0; i < positive_.size(); ++i) {
    if (positive_[i].weight == alpha) return i;
  }
  return std::nullopt;
}

bool RootDatum::is_root(const Weight& alpha) const {
  return positive_index(alpha).has_value() || positive_index(-alpha).has_value();
}

void RootDatum::require_weight(const Weight& mu) const {
  if (mu.size() != dimension_) {
    throw DimensionMismatch(describe(params_) + ": expected " +
                            std::to_string(dimension_) + " coordinates, got " +
                            std::to_string(mu.size()));
  }
  if (params_.family == Family::kG2 && mu[0] + mu[1] + mu[2] != 0) {
    throw DimensionMismatch("g2: coordinates must sum to zero, got " +
                            to_string(mu));
  }
}

RootDatum build_root_datum(const FamilyParams& params) {
  RootDatum d;
  d.params_ = params;
  switch (params.family) {
    case Family::kSp: {
      if (params.n < 2) {
        throw InvalidParameter("sp requires n >= 2 (got n=" +
                               std::to_string(params.n) + ")");
      }
      const auto n = static_cast<std::size_t>(params.n);
      d.params_.p = d.params_.q = 0;
      d.dimension_ = n;
      d.rank_ = params.n;
      d.positive_ = classical_roots(n, true, [](std::size_t, std::size_t,
                                                int sign) { return sign < 0; });
      break;
    }
    case Family::kSOeven: {
      if (params.p <= 0) {
        throw InvalidParameter("so-even requires p > 0 (got p=" +
                               std::to_string(params.p) + ")");
      }
      if (params.q <= 0) {
        throw InvalidParameter("so-even requires q > 0 (got q=" +
                               std::to_string(params.q) + ")");
      }
      if (params.p + params.q < 4) {
        throw InvalidParameter("so-even requires p + q >= 4 (got p+q=" +
                               std::to_string(params.p + params.q) + ")");
      }
      const auto p = static_cast<std::size_t>(params.p);
      const auto n = static_cast<std::size_t>(params.p + params.q);
      d.params_.n = params.p + params.q;
      d.dimension_ = n;
      d.rank_ = d.params_.n;
      d.positive_ = classical_roots(
          n, false, [p](std::size_t i, std::size_t j, int) {
            return (i < p) == (j < p);
          });
      break;
    }
    case Family::kSOstar: {
      if (params.n < 4) {
        throw InvalidParameter("so-star requires n >= 4 (got n=" +
                               std::to_string(params.n) + ")");
      }
      const auto n = static_cast<std::size_t>(params.n);
      d.params_.p = d.params_.q = 0;
      d.dimension_ = n;
      d.rank_ = params.n;
      d.positive_ = classical_roots(n, false, [](std::size_t, std::size_t,
                                                 int sign) { return sign < 0; });
      break;
    }
    case Family::kG2: {
      d.params_ = FamilyParams{Family::kG2, 0, 0, 0};
      d.dimension_ = 3;
      d.rank_ = 2;
      d.positive_ = g2_roots();
      break;
    }
  }

  for (const auto& r : d.positive_) {
    (r.compact ? d.compact_ : d.noncompact_).push_back(r);
  }
  d.simple_ = simple_from_positive(d.positive_);
  d.rho_ = half_sum(d.positive_, d.dimension_);
  if (params.family == Family::kG2) {
    d.rho_candidates_ = {Weight{-1, -2, 3}, Weight{1, -3, 2}, Weight{2, -3, 1}};
  } else {
    d.rho_candidates_ = {d.rho_};
  }
  return d;
}

bool is_k_dominant(const Weight& mu, const RootDatum& datum) {
  datum.require_weight(mu);
  return std::all_of(datum.compact_positive_roots().begin(),
                     datum.compact_positive_roots().end(),
                     [&](const Root& a) { return pairing(a.weight, mu) >= 0; });
}

bool is_g_dominant(const Weight& mu, const RootDatum& datum) {
  datum.require_weight(mu);
  return std::all_of(datum.positive_roots().begin(),
                     datum.positive_roots().end(),
                     [&](const Root& a) { return pairing(a.weight, mu) >= 0; });
}

bool is_k_dominant_by_coordinates(const Weight& mu, const RootDatum& datum) {
  datum.require_weight(mu);
  const auto xs = mu.coords();
  switch (datum.family()) {
    case Family::kSp:
    case Family::kSOstar:
      return descending(xs);
    case Family::kSOeven: {
      const auto p = static_cast<std::size_t>(datum.p());
      return type_d_chamber(xs.first(p)) && type_d_chamber(xs.subspan(p));
    }
    case Family::kG2:
      return mu[1] <= mu[0] && mu[0] <= -mu[1];
  }
  return false;
}

}  // namespace weylface
