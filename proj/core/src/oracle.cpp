#include "weylface/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <thread>

#include "weylface/errors.hpp"

namespace weylface {

namespace {

Check make_check(std::string name, bool passed, std::string detail = {}) {
  return Check{std::move(name), passed, passed ? std::string() : detail};
}

std::string set_to_string(const WeightSet& s) {
  std::string out = "{";
  for (const auto& w : s) {
    if (out.size() > 1) out += ',';
    out += to_string(w);
  }
  return out + "}";
}

std::string first_difference(const WeightSet& expected,
                             const WeightSet& actual) {
  for (const auto& w : actual) {
    if (!expected.count(w)) return "unexpected vertex " + to_string(w);
  }
  for (const auto& w : expected) {
    if (!actual.count(w)) return "missing vertex " + to_string(w);
  }
  return {};
}

WeightSet k_dominant_part(const WeightSet& s, const RootDatum& datum) {
  WeightSet out;
  for (const auto& w : s) {
    if (is_k_dominant(w, datum)) out.insert(w);
  }
  return out;
}

// Calls fn on every integer vector with entries in [-bound, bound] living in
// datum's space.
void for_each_in_box(const RootDatum& datum, int bound,
                     const std::function<void(const Weight&)>& fn) {
  if (datum.family() == Family::kG2) {
    for (Coord a = -bound; a <= bound; ++a) {
      for (Coord b = -bound; b <= bound; ++b) {
        const Coord c = -a - b;
        if (c < -bound || c > bound) continue;
        fn(Weight{a, b, c});
      }
    }
    return;
  }
  std::vector<Coord> cur(datum.dimension(), -bound);
  while (true) {
    fn(Weight(cur));
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == bound) cur[i++] = -bound;
    if (i == cur.size()) return;
    ++cur[i];
  }
}

}  // namespace

WeightSet face_by_argmax(const Weight& h,
                         std::span<const Weight> orbit_points) {
  Coord best = std::numeric_limits<Coord>::min();
  WeightSet out;
  for (const auto& mu : orbit_points) {
    const Coord v = pairing(mu, h);
    if (v > best) {
      best = v;
      out.clear();
    }
    if (v == best) out.insert(mu);
  }
  return out;
}

WeightSet face_by_argmax(const Weight& h, const RootDatum& datum,
                         std::size_t max_orbit) {
  datum.require_weight(h);
  const auto orb = orbit(datum.rho(), datum, max_orbit);
  return face_by_argmax(h, orb);
}

bool FaceReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

bool BijectionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

bool VerifyReport::passed() const {
  return bijection.passed() &&
         std::all_of(faces.begin(), faces.end(),
                     [](const FaceReport& f) { return f.passed(); });
}

FaceReport certify_face(const AdmissibleDescriptor& d, const RootDatum& datum,
                        std::span<const Weight> orbit_points) {
  FaceReport report;
  report.descriptor = d;
  const HVector hv = h_from_descriptor(d, datum);
  report.h = hv.weight();

  const WeightSet argmax = face_by_argmax(report.h, orbit_points);
  const WeightSet argmax_dirac = k_dominant_part(argmax, datum);
  report.vertex_count = argmax.size();
  report.dirac_count = argmax_dirac.size();

  const Face closed = face_closed_form(d, datum);
  const Face via_wl = face_from_wl(d, datum);
  auto& checks = report.checks;

  checks.push_back(make_check("closed_form_equals_argmax",
                              closed.vertices == argmax,
                              first_difference(argmax, closed.vertices)));
  checks.push_back(make_check("wl_orbit_equals_argmax",
                              via_wl.vertices == argmax,
                              first_difference(argmax, via_wl.vertices)));

  {
    const Coord top = pairing(*argmax.begin(), report.h);
    std::string detail;
    for (const auto& v : closed.vertices) {
      if (pairing(v, report.h) != top) {
        detail = "face vertex " + to_string(v) + " is off the hyperplane";
        break;
      }
    }
    for (const auto& mu : orbit_points) {
      if (!detail.empty()) break;
      if (!closed.vertices.count(mu) && pairing(mu, report.h) >= top) {
        detail = "non-vertex " + to_string(mu) + " reaches the maximum";
      }
    }
    checks.push_back(
        make_check("supporting_hyperplane", detail.empty(), detail));
  }

  checks.push_back(make_check(
      "dirac_equals_argmax_cap_ck",
      closed.dirac == argmax_dirac && !argmax_dirac.empty(),
      "dirac " + set_to_string(closed.dirac) + ", argmax cap C_k " +
          set_to_string(argmax_dirac)));

  checks.push_back(make_check(
      "rho_prime_is_k_dominant_vertex",
      argmax.count(closed.rho_prime) > 0 &&
          is_k_dominant(closed.rho_prime, datum),
      "rho' = " + to_string(closed.rho_prime)));

  const LeviDecomposition levi = levi_from_h(hv, datum);
  const Subgroup wl = generate_subgroup(levi.zero_roots, datum);
  std::vector<Root> compact_zero;
  for (const auto& r : levi.zero_roots) {
    if (r.compact) compact_zero.push_back(r);
  }
  const Subgroup wlk = generate_subgroup(compact_zero, datum);
  const std::size_t stab = stabilizer_order(wl, closed.rho_prime);
  checks.push_back(make_check(
      "face_cardinality", argmax.size() * stab == wl.order(),
      "|face| = " + std::to_string(argmax.size()) + ", |W_l| = " +
          std::to_string(wl.order()) + ", |stab| = " + std::to_string(stab)));
  if (datum.family() == Family::kSp) {
    checks.push_back(make_check("stabilizer_trivial", stab == 1,
                                "|stab| = " + std::to_string(stab)));
  }
  checks.push_back(make_check(
      "dirac_cardinality", argmax_dirac.size() * wlk.order() == wl.order(),
      "|dirac| = " + std::to_string(argmax_dirac.size()) + ", |W_l| = " +
          std::to_string(wl.order()) + ", |W_lk| = " +
          std::to_string(wlk.order())));

  {
    std::string detail;
    for (const auto& v : argmax_dirac) {
      WeightSet image;
      for (const auto& w : wl.closure) image.insert(apply(w, v));
      if (image != argmax) {
        detail = "W_l " + to_string(v) + " differs from the face";
        break;
      }
    }
    checks.push_back(
        make_check("any_dirac_vertex_generates", detail.empty(), detail));
  }

  try {
    descriptor_consistency(d, datum);
    checks.push_back(make_check("levi_factors", true));
  } catch (const InternalConsistency& e) {
    checks.push_back(make_check("levi_factors", false, e.what()));
  }
  return report;
}

FaceReport certify_face(const AdmissibleDescriptor& d, const RootDatum& datum,
                        std::size_t max_orbit) {
  const auto orb = orbit(datum.rho(), datum, max_orbit);
  return certify_face(d, datum, orb);
}

BijectionReport certify_bijection(const RootDatum& datum,
                                  std::span<const AdmissibleDescriptor> ds,
                                  std::span<const Weight> orbit_points,
                                  std::uint64_t seed, std::size_t samples) {
  BijectionReport report;
  report.seed = seed;

  std::map<WeightSet, std::string> faces;
  std::map<WeightSet, std::string> diracs;
  std::string face_clash;
  std::string dirac_clash;
  for (const auto& d : ds) {
    const Weight h = h_from_descriptor(d, datum).weight();
    WeightSet face = face_by_argmax(h, orbit_points);
    WeightSet dirac = k_dominant_part(face, datum);
    const std::string name = to_string(d);
    auto [fit, fnew] = faces.emplace(std::move(face), name);
    if (!fnew && face_clash.empty()) {
      face_clash = fit->second + " and " + name + " give the same face";
    }
    auto [dit, dnew] = diracs.emplace(std::move(dirac), name);
    if (!dnew && dirac_clash.empty()) {
      dirac_clash = dit->second + " and " + name + " share a Dirac set";
    }
  }
  report.checks.push_back(make_check("descriptor_to_face_injective",
                                     face_clash.empty(), face_clash));
  report.checks.push_back(make_check("face_to_dirac_injective",
                                     dirac_clash.empty(), dirac_clash));

  std::mt19937_64 rng(seed);
  const int bound = std::max(3, datum.rank());
  std::uniform_int_distribution<Coord> coord(-bound, bound);
  std::string miss;
  std::size_t attempts = 0;
  while (report.samples < samples && attempts < 1000 * samples) {
    ++attempts;
    std::vector<Coord> v(datum.dimension());
    for (auto& x : v) x = coord(rng);
    if (datum.family() == Family::kG2) v[2] = -v[0] - v[1];
    const Weight h(std::move(v));
    if (is_k_dominant(h, datum)) continue;
    ++report.samples;
    const WeightSet meet = k_dominant_part(face_by_argmax(h, orbit_points),
                                           datum);
    if (!meet.empty() && miss.empty()) {
      miss = "H = " + to_string(h) + " meets C_k at " + set_to_string(meet);
    }
  }
  report.checks.push_back(
      make_check("non_k_dominant_faces_miss_ck", miss.empty(), miss));
  return report;
}

SweepResult sweep_k_dominance_criterion(const RootDatum& datum, int bound,
                                        std::span<const Weight> orbit_points) {
  SweepResult result;
  for_each_in_box(datum, bound, [&](const Weight& h) {
    ++result.checked;
    const bool dominant = is_k_dominant(h, datum);
    if (dominant) ++result.k_dominant;
    const auto face = face_by_argmax(h, orbit_points);
    const bool meets = std::any_of(face.begin(), face.end(), [&](const Weight& v) {
      return is_k_dominant(v, datum);
    });
    if (meets != dominant) result.mismatches.push_back(h);
  });
  return result;
}

std::set<ParabolicKey> brute_force_admissible_parabolics(const RootDatum& datum,
                                                         int bound) {
  std::set<ParabolicKey> keys;
  for_each_in_box(datum, bound, [&](const Weight& h) {
    if (!is_k_dominant(h, datum)) return;
    const auto levi = levi_from_h(HVector::make(h, datum), datum);
    if (has_compact_simple_factor(levi)) return;
    keys.insert(parabolic_key(h, datum));
  });
  return keys;
}

VerifyReport certify_all(const RootDatum& datum, const VerifyOptions& opts) {
  VerifyReport report;
  report.params = datum.params();
  const auto orb = orbit(datum.rho(), datum, opts.max_orbit);
  report.orbit_size = orb.size();
  const auto ds = enumerate_admissible(datum);
  report.faces.resize(ds.size());

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(ds.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < ds.size(); i = next++) {
      try {
        report.faces[i] = certify_face(ds[i], datum, orb);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  report.bijection =
      certify_bijection(datum, ds, orb, opts.seed, opts.samples);
  return report;
}

}  // namespace weylface
