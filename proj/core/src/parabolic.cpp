#include "weylface/parabolic.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "weylface/errors.hpp"

namespace weylface {

namespace {

constexpr std::array<std::string_view, 6> kG2CaseNames = {
    "trivial", "ds1", "ds2", "ds3", "L1", "L2"};

int sum_p(const std::vector<TierPair>& tiers) {
  int total = 0;
  for (const auto& t : tiers) total += t.p;
  return total;
}

int sum_q(const std::vector<TierPair>& tiers) {
  int total = 0;
  for (const auto& t : tiers) total += t.q;
  return total;
}

[[noreturn]] void reject(const AdmissibleDescriptor& d,
                         const std::string& clause) {
  throw InvalidDescriptor("invalid descriptor " + to_string(d) + " for " +
                          describe(d.params) + ": " + clause);
}

void validate_tiers(const AdmissibleDescriptor& d) {
  for (std::size_t i = 0; i < d.tiers.size(); ++i) {
    const auto& t = d.tiers[i];
    const std::string idx = std::to_string(i + 1);
    if (t.p < 0 || t.q < 0) reject(d, "tier " + idx + " has a negative entry");
    if (t.p == 0 && t.q != 1) {
      reject(d, "p_" + idx + " = 0 requires q_" + idx + " = 1");
    }
    if (t.q == 0 && t.p != 1) {
      reject(d, "q_" + idx + " = 0 requires p_" + idx + " = 1");
    }
  }
}

// Rank of the span of the given vectors, by fraction-free elimination.
int span_rank(std::vector<std::vector<Coord>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Coord a = rows[pivot_row][c];
      const Coord b = rows[r][c];
      Coord g = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = a * rows[r][k] - b * rows[pivot_row][k];
        g = std::gcd(g, rows[r][k]);
      }
      if (g > 1) {
        for (auto& x : rows[r]) x /= g;
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

FactorType unitary(int a, int b) {
  return {FactorKind::kUnitary, std::max(a, b), std::min(a, b)};
}

FactorType classify_component(const std::vector<Root>& comp,
                              const RootDatum& datum) {
  const int n_roots = static_cast<int>(comp.size());
  const int n_compact = static_cast<int>(
      std::count_if(comp.begin(), comp.end(),
                    [](const Root& r) { return r.compact; }));
  if (datum.family() == Family::kG2) {
    if (n_roots == 6) return {FactorKind::kG2, 0, 0};
    if (n_roots == 1) return n_compact == 1 ? unitary(2, 0) : unitary(1, 1);
    throw InternalConsistency("unexpected G2 Levi component with " +
                              std::to_string(n_roots) + " roots");
  }

  std::vector<bool> in_support(datum.dimension(), false);
  bool has_long = false;
  for (const auto& r : comp) {
    for (std::size_t i = 0; i < r.weight.size(); ++i) {
      if (r.weight[i] != 0) in_support[i] = true;
      if (std::llabs(r.weight[i]) == 2) has_long = true;
    }
  }
  const int m = static_cast<int>(
      std::count(in_support.begin(), in_support.end(), true));

  if (has_long) return {FactorKind::kSymplectic, m, 0};
  if (m >= 3 && n_roots == m * (m - 1)) {
    if (datum.family() == Family::kSOstar) {
      return {FactorKind::kOrthoStar, m, 0};
    }
    int a = 0;
    for (int i = 0; i < datum.p(); ++i) {
      if (in_support[static_cast<std::size_t>(i)]) ++a;
    }
    const int b = m - a;
    return {FactorKind::kOrthogonal, std::max(a, b), std::min(a, b)};
  }
  if (2 * n_roots == m * (m - 1)) {
    for (int a = m; 2 * a >= m; --a) {
      const int b = m - a;
      if (a * (a - 1) + b * (b - 1) == 2 * n_compact) return unitary(a, b);
    }
  }
  throw InternalConsistency("unclassifiable Levi component with " +
                            std::to_string(n_roots) + " roots on " +
                            std::to_string(m) + " coordinates");
}

std::vector<std::vector<TierPair>> tier_sequences(int max_p, int max_q) {
  std::vector<std::vector<TierPair>> out{{}};
  std::vector<TierPair> cur;
  auto rec = [&](auto&& self, int rem_p, int rem_q) -> void {
    for (int a = 0; a <= rem_p; ++a) {
      for (int b = 0; b <= rem_q; ++b) {
        if (a == 0 && b != 1) continue;
        if (b == 0 && a != 1) continue;
        cur.push_back({a, b});
        out.push_back(cur);
        self(self, rem_p - a, rem_q - b);
        cur.pop_back();
      }
    }
  };
  rec(rec, max_p, max_q);
  return out;
}

// Sequences with sum(p_i + q_i) <= total.
std::vector<std::vector<TierPair>> tier_sequences_total(int total) {
  std::vector<std::vector<TierPair>> out;
  for (auto& seq : tier_sequences(total, total)) {
    if (sum_p(seq) + sum_q(seq) <= total) out.push_back(std::move(seq));
  }
  return out;
}

// Two descriptors name the same parabolic when the zero block is empty and
// the lowest tier is a single coordinate: that coordinate could equally be
// the zero block. Only for the type D families, where a one-coordinate
// zero block carries no roots.
bool is_canonical(const AdmissibleDescriptor& d) {
  if (d.params.family != Family::kSOeven &&
      d.params.family != Family::kSOstar) {
    return true;
  }
  if (zero_block_size(d) != 0 || d.tiers.empty()) return true;
  return d.tiers.front().p + d.tiers.front().q != 1;
}

}  // namespace

std::string_view g2_case_name(G2Case c) {
  return kG2CaseNames[static_cast<std::size_t>(c)];
}

std::optional<G2Case> parse_g2_case(std::string_view name) {
  for (std::size_t i = 0; i < kG2CaseNames.size(); ++i) {
    if (kG2CaseNames[i] == name) return static_cast<G2Case>(i);
  }
  return std::nullopt;
}

AdmissibleDescriptor make_descriptor(const FamilyParams& params,
                                     std::vector<TierPair> tiers) {
  AdmissibleDescriptor d;
  d.params = params;
  d.tiers = std::move(tiers);
  return d;
}

AdmissibleDescriptor make_so_even_descriptor(const FamilyParams& params,
                                             std::vector<TierPair> tiers,
                                             int r, int s, int n_p, int n_q) {
  AdmissibleDescriptor d;
  d.params = params;
  d.params.n = params.p + params.q;
  d.tiers = std::move(tiers);
  d.r = r;
  d.s = s;
  d.n_p = n_p;
  d.n_q = n_q;
  return d;
}

AdmissibleDescriptor make_g2_descriptor(G2Case c) {
  AdmissibleDescriptor d;
  d.params = FamilyParams{Family::kG2, 0, 0, 0};
  d.g2_case = c;
  return d;
}

int zero_block_size(const AdmissibleDescriptor& d) {
  switch (d.params.family) {
    case Family::kSp:
    case Family::kSOstar:
      return d.params.n - sum_p(d.tiers) - sum_q(d.tiers);
    case Family::kSOeven:
      return d.r + d.s;
    case Family::kG2:
      return 0;
  }
  return 0;
}

std::string to_string(const AdmissibleDescriptor& d) {
  if (d.params.family == Family::kG2) {
    return std::string(g2_case_name(d.g2_case));
  }
  std::string out = "[";
  for (std::size_t i = 0; i < d.tiers.size(); ++i) {
    if (i > 0) out += ',';
    out += '(' + std::to_string(d.tiers[i].p) + ',' +
           std::to_string(d.tiers[i].q) + ')';
  }
  out += ']';
  if (d.params.family == Family::kSOeven) {
    out += " r=" + std::to_string(d.r) + " s=" + std::to_string(d.s) +
           " n_p=" + std::to_string(d.n_p) + " n_q=" + std::to_string(d.n_q);
  }
  return out;
}

bool descriptor_less(const AdmissibleDescriptor& a,
                     const AdmissibleDescriptor& b) {
  if (a.params.family == Family::kG2 && b.params.family == Family::kG2) {
    return a.g2_case < b.g2_case;
  }
  return std::forward_as_tuple(a.tiers.size(), a.tiers, a.r, a.s, a.n_p,
                               a.n_q) <
         std::forward_as_tuple(b.tiers.size(), b.tiers, b.r, b.s, b.n_p,
                               b.n_q);
}

void validate_descriptor(const AdmissibleDescriptor& d) {
  const auto& P = d.params;
  switch (P.family) {
    case Family::kG2:
      if (!d.tiers.empty()) reject(d, "G2 descriptors carry no tiers");
      return;
    case Family::kSp:
    case Family::kSOstar: {
      if (d.r != 0 || d.s != 0 || d.n_p != 0 || d.n_q != 0) {
        reject(d, "r, s, n_p, n_q are only used by so-even");
      }
      validate_tiers(d);
      if (sum_p(d.tiers) + sum_q(d.tiers) > P.n) {
        reject(d, "sum of p_i + q_i exceeds n = " + std::to_string(P.n));
      }
      return;
    }
    case Family::kSOeven: {
      validate_tiers(d);
      if (d.r < 0 || d.s < 0) reject(d, "r and s must be nonnegative");
      if (d.n_p < 0 || d.n_p > 1 || d.n_q < 0 || d.n_q > 1) {
        reject(d, "n_p and n_q must be 0 or 1");
      }
      if (sum_p(d.tiers) + d.r != P.p) {
        reject(d, "sum of p_i plus r must equal p = " + std::to_string(P.p));
      }
      if (sum_q(d.tiers) + d.s != P.q) {
        reject(d, "sum of q_i plus s must equal q = " + std::to_string(P.q));
      }
      if (d.r == 0 && d.s > 1) reject(d, "r = 0 requires s <= 1");
      if (d.s == 0 && d.r > 1) reject(d, "s = 0 requires r <= 1");
      if (d.r > 0 && d.n_p == 1) reject(d, "r > 0 requires n_p = 0");
      if (d.s > 0 && d.n_q == 1) reject(d, "s > 0 requires n_q = 0");
      if (d.n_p == 1 && sum_p(d.tiers) == 0) {
        reject(d, "n_p = 1 requires some p_i >= 1");
      }
      if (d.n_q == 1 && sum_q(d.tiers) == 0) {
        reject(d, "n_q = 1 requires some q_i >= 1");
      }
      return;
    }
  }
}

HVector HVector::make(Weight h, const RootDatum& datum) {
  if (!is_k_dominant(h, datum)) {
    throw InvalidParameter("H = " + to_string(h) + " is not k-dominant in " +
                           describe(datum.params()));
  }
  return HVector(std::move(h));
}

HVector h_from_descriptor(const AdmissibleDescriptor& d,
                          const RootDatum& datum) {
  validate_descriptor(d);
  if (!(d.params == datum.params())) {
    throw InvalidParameter("descriptor is for " + describe(d.params) +
                           ", datum is " + describe(datum.params()));
  }
  const int l = static_cast<int>(d.tiers.size());
  std::vector<Coord> h;
  switch (d.params.family) {
    case Family::kG2: {
      switch (d.g2_case) {
        case G2Case::kTrivial: h = {0, 0, 0}; break;
        case G2Case::kDs1: h = {-1, -2, 3}; break;
        case G2Case::kDs2: h = {1, -3, 2}; break;
        case G2Case::kDs3: h = {2, -3, 1}; break;
        case G2Case::kL1: h = {1, -2, 1}; break;
        case G2Case::kL2: h = {0, -1, 1}; break;
      }
      break;
    }
    case Family::kSp:
    case Family::kSOstar: {
      for (int t = l; t >= 1; --t) {
        h.insert(h.end(), static_cast<std::size_t>(d.tiers[t - 1].p), t);
      }
      h.insert(h.end(), static_cast<std::size_t>(zero_block_size(d)), 0);
      for (int t = 1; t <= l; ++t) {
        h.insert(h.end(), static_cast<std::size_t>(d.tiers[t - 1].q), -t);
      }
      break;
    }
    case Family::kSOeven: {
      std::vector<Coord> y;
      for (int t = l; t >= 1; --t) {
        h.insert(h.end(), static_cast<std::size_t>(d.tiers[t - 1].p), t);
        y.insert(y.end(), static_cast<std::size_t>(d.tiers[t - 1].q), t);
      }
      h.insert(h.end(), static_cast<std::size_t>(d.r), 0);
      y.insert(y.end(), static_cast<std::size_t>(d.s), 0);
      if (d.n_p == 1) h.back() = -h.back();
      if (d.n_q == 1) y.back() = -y.back();
      h.insert(h.end(), y.begin(), y.end());
      break;
    }
  }
  return HVector::make(Weight(std::move(h)), datum);
}

std::string to_string(const FactorType& t) {
  switch (t.kind) {
    case FactorKind::kUnitary:
      return "u(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
    case FactorKind::kSymplectic:
      return "sp(" + std::to_string(2 * t.a) + ")";
    case FactorKind::kOrthogonal:
      return "so(" + std::to_string(2 * t.a) + "," + std::to_string(2 * t.b) +
             ")";
    case FactorKind::kOrthoStar:
      return "so*(" + std::to_string(2 * t.a) + ")";
    case FactorKind::kG2:
      return "g2";
  }
  return "?";
}

std::vector<FactorType> LeviDecomposition::factor_types() const {
  std::vector<FactorType> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.type);
  std::sort(out.begin(), out.end());
  return out;
}

LeviDecomposition levi_from_h(const HVector& hv, const RootDatum& datum) {
  const Weight& h = hv.weight();
  datum.require_weight(h);
  LeviDecomposition levi;
  for (const auto& r : datum.positive_roots()) {
    const Coord v = pairing(r.weight, h);
    if (v == 0) {
      levi.zero_roots.push_back(r);
    } else if (v > 0) {
      levi.u_roots.push_back(r);
    } else {
      levi.u_roots.push_back({-r.weight, r.compact});
    }
  }

  // Connected components under non-orthogonality.
  const std::size_t z = levi.zero_roots.size();
  std::vector<bool> seen(z, false);
  for (std::size_t start = 0; start < z; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp{start};
    seen[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const Weight& a = levi.zero_roots[comp[k]].weight;
      for (std::size_t t = 0; t < z; ++t) {
        if (!seen[t] && pairing(a, levi.zero_roots[t].weight) != 0) {
          seen[t] = true;
          comp.push_back(t);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    LeviFactor f;
    for (auto idx : comp) f.roots.push_back(levi.zero_roots[idx]);
    f.compact = std::all_of(f.roots.begin(), f.roots.end(),
                            [](const Root& r) { return r.compact; });
    f.type = classify_component(f.roots, datum);
    levi.factors.push_back(std::move(f));
  }

  std::vector<std::vector<Coord>> rows;
  for (const auto& r : levi.zero_roots) rows.push_back(r.weight.to_vector());
  levi.torus_rank = datum.rank() - span_rank(std::move(rows));
  return levi;
}

bool has_compact_simple_factor(const LeviDecomposition& levi) {
  return std::any_of(levi.factors.begin(), levi.factors.end(),
                     [](const LeviFactor& f) { return f.compact; });
}

std::vector<AdmissibleDescriptor> enumerate_admissible(
    const RootDatum& datum) {
  const auto& P = datum.params();
  std::vector<AdmissibleDescriptor> candidates;
  switch (P.family) {
    case Family::kG2:
      for (std::size_t i = 0; i < kG2CaseNames.size(); ++i) {
        candidates.push_back(make_g2_descriptor(static_cast<G2Case>(i)));
      }
      break;
    case Family::kSp:
    case Family::kSOstar:
      for (auto& seq : tier_sequences_total(P.n)) {
        candidates.push_back(make_descriptor(P, std::move(seq)));
      }
      break;
    case Family::kSOeven:
      for (auto& seq : tier_sequences(P.p, P.q)) {
        const int r = P.p - sum_p(seq);
        const int s = P.q - sum_q(seq);
        for (int n_p = 0; n_p <= 1; ++n_p) {
          for (int n_q = 0; n_q <= 1; ++n_q) {
            candidates.push_back(
                make_so_even_descriptor(P, seq, r, s, n_p, n_q));
          }
        }
      }
      break;
  }

  std::vector<AdmissibleDescriptor> out;
  for (auto& d : candidates) {
    try {
      validate_descriptor(d);
    } catch (const InvalidDescriptor&) {
      continue;
    }
    if (!is_canonical(d)) continue;
    if (has_compact_simple_factor(levi_from_h(h_from_descriptor(d, datum),
                                              datum))) {
      continue;
    }
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), descriptor_less);
  return out;
}

std::vector<FactorType> expected_levi_factors(const AdmissibleDescriptor& d) {
  std::vector<FactorType> out;
  if (d.params.family == Family::kG2) {
    switch (d.g2_case) {
      case G2Case::kTrivial: out.push_back({FactorKind::kG2, 0, 0}); break;
      case G2Case::kL1:
      case G2Case::kL2: out.push_back(unitary(1, 1)); break;
      default: break;
    }
    return out;
  }
  for (const auto& t : d.tiers) {
    if (t.p + t.q >= 2) out.push_back(unitary(t.p, t.q));
  }
  const int zero = zero_block_size(d);
  switch (d.params.family) {
    case Family::kSp:
      if (zero >= 1) out.push_back({FactorKind::kSymplectic, zero, 0});
      break;
    case Family::kSOstar:
      // so*(4) = su(2) + sl(2,R)
      if (zero == 2) {
        out.push_back(unitary(2, 0));
        out.push_back(unitary(1, 1));
      } else if (zero >= 3) {
        out.push_back({FactorKind::kOrthoStar, zero, 0});
      }
      break;
    case Family::kSOeven:
      // so(4) = su(2) + su(2), so(2,2) = sl(2,R) + sl(2,R)
      if (zero == 2) {
        const FactorType half = d.r == d.s ? unitary(1, 1) : unitary(2, 0);
        out.push_back(half);
        out.push_back(half);
      } else if (zero >= 3) {
        out.push_back({FactorKind::kOrthogonal, std::max(d.r, d.s),
                       std::min(d.r, d.s)});
      }
      break;
    case Family::kG2:
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

LeviDecomposition descriptor_consistency(const AdmissibleDescriptor& d,
                                         const RootDatum& datum) {
  LeviDecomposition levi = levi_from_h(h_from_descriptor(d, datum), datum);
  const auto actual = levi.factor_types();
  const auto expected = expected_levi_factors(d);
  auto join = [](const std::vector<FactorType>& ts) {
    std::string s;
    for (const auto& t : ts) s += (s.empty() ? "" : " x ") + to_string(t);
    return s.empty() ? std::string("torus") : s;
  };
  if (actual != expected) {
    throw InternalConsistency("descriptor " + to_string(d) + " in " +
                              describe(d.params) + ": Levi factors " +
                              join(actual) + ", expected " + join(expected));
  }
  if (has_compact_simple_factor(levi)) {
    throw InternalConsistency("descriptor " + to_string(d) + " in " +
                              describe(d.params) +
                              ": Levi factor has a compact simple factor (" +
                              join(actual) + ")");
  }
  return levi;
}

ParabolicKey parabolic_key(const Weight& h, const RootDatum& datum) {
  ParabolicKey key;
  key.reserve(datum.positive_roots().size());
  for (const auto& r : datum.positive_roots()) {
    const Coord v = pairing(r.weight, h);
    key.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
  }
  return key;
}

}  // namespace weylface
