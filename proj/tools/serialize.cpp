#include "serialize.hpp"

#include <algorithm>

#include "weylface/errors.hpp"

namespace weylface::cli {

namespace {

json coords_to_json(std::span<const Coord> xs) {
  return json(std::vector<Coord>(xs.begin(), xs.end()));
}

std::vector<Coord> coords_from_json(const json& j) {
  if (!j.is_array()) throw InvalidParameter("expected an array of integers");
  std::vector<Coord> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) {
      throw InvalidParameter("expected integer coordinates, got " + x.dump());
    }
    out.push_back(x.get<Coord>());
  }
  return out;
}

std::vector<Weight> weights_from_json(const json& j,
                                      const FamilyParams& params) {
  std::vector<Weight> out;
  for (const auto& w : j) out.push_back(weight_from_json(w, params));
  return out;
}

json weights_to_json(const std::vector<Weight>& ws,
                     const FamilyParams& params) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(weight_to_json(w, params));
  return out;
}

int pair_entry(const json& j) {
  if (!j.is_number_integer()) {
    throw InvalidDescriptor("descriptor entries must be integers, got " +
                            j.dump());
  }
  return j.get<int>();
}

std::vector<TierPair> pairs_from_json(const json& j) {
  if (!j.is_array()) {
    throw InvalidDescriptor("expected a list of [p,q] pairs, got " + j.dump());
  }
  std::vector<TierPair> out;
  for (const auto& pr : j) {
    if (!pr.is_array() || pr.size() != 2) {
      throw InvalidDescriptor("expected a [p,q] pair, got " + pr.dump());
    }
    out.push_back({pair_entry(pr[0]), pair_entry(pr[1])});
  }
  return out;
}

std::string join_csv_weights(const std::vector<Weight>& ws,
                             const FamilyParams& params) {
  std::string out;
  for (const auto& w : ws) {
    if (!out.empty()) out += ' ';
    out += weight_to_csv(w, params);
  }
  return out;
}

std::string join_text_weights(const std::vector<Weight>& ws,
                              const FamilyParams& params) {
  std::string out;
  for (const auto& w : ws) {
    if (!out.empty()) out += ' ';
    out += weight_to_text(w, params);
  }
  return out;
}

std::string join_coords(std::span<const Coord> xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

json weight_to_json(const Weight& w, const FamilyParams& params) {
  if (params.family == Family::kSOeven) {
    const auto p = static_cast<std::size_t>(params.p);
    return json{{"x", coords_to_json(w.coords().first(p))},
                {"y", coords_to_json(w.coords().subspan(p))}};
  }
  return coords_to_json(w.coords());
}

Weight weight_from_json(const json& j, const FamilyParams& params) {
  if (params.family == Family::kSOeven) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
      throw InvalidParameter("so-even weights are {\"x\":[...],\"y\":[...]}");
    }
    auto xs = coords_from_json(j.at("x"));
    const auto ys = coords_from_json(j.at("y"));
    xs.insert(xs.end(), ys.begin(), ys.end());
    return Weight(std::move(xs));
  }
  return Weight(coords_from_json(j));
}

json descriptor_to_json(const AdmissibleDescriptor& d) {
  if (d.params.family == Family::kG2) {
    return std::string(g2_case_name(d.g2_case));
  }
  json pairs = json::array();
  for (const auto& t : d.tiers) pairs.push_back({t.p, t.q});
  if (d.params.family != Family::kSOeven) return pairs;
  return json{{"pairs", pairs},
              {"rs", {d.r, d.s}},
              {"flags", {d.n_p, d.n_q}}};
}

AdmissibleDescriptor descriptor_from_json(const json& j,
                                          const FamilyParams& params) {
  switch (params.family) {
    case Family::kG2: {
      if (!j.is_string()) {
        throw InvalidDescriptor("g2 descriptors are one of trivial, ds1, ds2, "
                                "ds3, L1, L2");
      }
      const auto c = parse_g2_case(j.get<std::string>());
      if (!c) {
        throw InvalidDescriptor("unknown g2 case '" + j.get<std::string>() +
                                "'");
      }
      return make_g2_descriptor(*c);
    }
    case Family::kSp:
    case Family::kSOstar:
      return make_descriptor(params, pairs_from_json(j));
    case Family::kSOeven: {
      if (!j.is_object() || !j.contains("pairs")) {
        throw InvalidDescriptor(
            "so-even descriptors are "
            "{\"pairs\":[[p,q],...],\"rs\":[r,s],\"flags\":[n_p,n_q]}");
      }
      auto tiers = pairs_from_json(j.at("pairs"));
      int sum_p = 0;
      int sum_q = 0;
      for (const auto& t : tiers) {
        sum_p += t.p;
        sum_q += t.q;
      }
      // rs defaults to whatever the pairs leave over.
      int r = params.p - sum_p;
      int s = params.q - sum_q;
      if (j.contains("rs")) {
        const auto rs = pairs_from_json(json::array({j.at("rs")}));
        r = rs[0].p;
        s = rs[0].q;
      }
      int n_p = 0;
      int n_q = 0;
      if (j.contains("flags")) {
        const auto fl = pairs_from_json(json::array({j.at("flags")}));
        n_p = fl[0].p;
        n_q = fl[0].q;
      }
      return make_so_even_descriptor(params, std::move(tiers), r, s, n_p, n_q);
    }
  }
  throw InvalidDescriptor("unknown family");
}

json params_to_json(const FamilyParams& params) {
  switch (params.family) {
    case Family::kSp:
    case Family::kSOstar:
      return json{{"n", params.n}};
    case Family::kSOeven:
      return json{{"p", params.p}, {"q", params.q}};
    case Family::kG2:
      return json::object();
  }
  return json::object();
}

FamilyParams params_from_json(const std::string& family, const json& j) {
  const auto fam = parse_family(family);
  if (!fam) throw InvalidParameter("unknown family '" + family + "'");
  FamilyParams params{*fam, 0, 0, 0};
  if (*fam == Family::kSOeven) {
    params.p = j.at("p").get<int>();
    params.q = j.at("q").get<int>();
    params.n = params.p + params.q;
  } else if (*fam != Family::kG2) {
    params.n = j.at("n").get<int>();
  }
  return params;
}

std::vector<Weight> descending(const WeightSet& s) {
  return std::vector<Weight>(s.rbegin(), s.rend());
}

EnumerateRecord make_enumerate_record(const AdmissibleDescriptor& d,
                                      const RootDatum& datum) {
  EnumerateRecord rec;
  rec.params = datum.params();
  rec.descriptor = d;
  const HVector hv = h_from_descriptor(d, datum);
  rec.h = hv.weight();
  for (const auto& t : levi_from_h(hv, datum).factor_types()) {
    rec.levi_factors.push_back(to_string(t));
  }
  return rec;
}

json to_json(const EnumerateRecord& r) {
  return json{{"family", std::string(family_name(r.params.family))},
              {"params", params_to_json(r.params)},
              {"descriptor", descriptor_to_json(r.descriptor)},
              {"H", weight_to_json(r.h, r.params)},
              {"levi_factors", r.levi_factors}};
}

json to_json(const FaceRecord& r) {
  json j{{"family", std::string(family_name(r.params.family))},
         {"params", params_to_json(r.params)},
         {"descriptor", descriptor_to_json(r.descriptor)},
         {"H", weight_to_json(r.h, r.params)},
         {"rho_prime", weight_to_json(r.rho_prime, r.params)},
         {"vertices", weights_to_json(r.vertices, r.params)},
         {"dirac", weights_to_json(r.dirac, r.params)}};
  if (r.oracle) {
    j["oracle"] = json{
        {"closed_form_equals_argmax", r.oracle->closed_form_equals_argmax},
        {"wl_orbit_equals_argmax", r.oracle->wl_orbit_equals_argmax},
        {"dirac_equals_argmax_cap_ck", r.oracle->dirac_equals_argmax_cap_ck}};
  }
  return j;
}

EnumerateRecord enumerate_record_from_json(const json& j) {
  EnumerateRecord r;
  r.params = params_from_json(j.at("family").get<std::string>(),
                              j.at("params"));
  r.descriptor = descriptor_from_json(j.at("descriptor"), r.params);
  r.h = weight_from_json(j.at("H"), r.params);
  r.levi_factors = j.at("levi_factors").get<std::vector<std::string>>();
  return r;
}

FaceRecord face_record_from_json(const json& j) {
  FaceRecord r;
  r.params = params_from_json(j.at("family").get<std::string>(),
                              j.at("params"));
  r.descriptor = descriptor_from_json(j.at("descriptor"), r.params);
  r.h = weight_from_json(j.at("H"), r.params);
  r.rho_prime = weight_from_json(j.at("rho_prime"), r.params);
  r.vertices = weights_from_json(j.at("vertices"), r.params);
  r.dirac = weights_from_json(j.at("dirac"), r.params);
  if (j.contains("oracle")) {
    const auto& o = j.at("oracle");
    r.oracle = OracleAgreement{
        o.at("closed_form_equals_argmax").get<bool>(),
        o.at("wl_orbit_equals_argmax").get<bool>(),
        o.at("dirac_equals_argmax_cap_ck").get<bool>()};
  }
  return r;
}

json to_json(const Check& c) {
  json j{{"name", c.name}, {"passed", c.passed}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

json to_json(const FaceReport& r, const FamilyParams& params) {
  json failed = json::array();
  for (const auto& c : r.checks) {
    if (!c.passed) failed.push_back(to_json(c));
  }
  return json{{"descriptor", descriptor_to_json(r.descriptor)},
              {"H", weight_to_json(r.h, params)},
              {"passed", r.passed()},
              {"vertices", r.vertex_count},
              {"dirac", r.dirac_count},
              {"checks", r.checks.size()},
              {"failed", failed}};
}

std::string weight_to_csv(const Weight& w, const FamilyParams& params) {
  if (params.family == Family::kSOeven) {
    const auto p = static_cast<std::size_t>(params.p);
    return join_coords(w.coords().first(p), ';') + "|" +
           join_coords(w.coords().subspan(p), ';');
  }
  return join_coords(w.coords(), ';');
}

std::string csv_cell(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string enumerate_csv_header() {
  return "family,params,descriptor,H,levi_factors";
}

std::string to_csv(const EnumerateRecord& r) {
  std::string levi;
  for (const auto& f : r.levi_factors) {
    if (!levi.empty()) levi += ' ';
    levi += f;
  }
  return std::string(family_name(r.params.family)) + "," +
         csv_cell(describe(r.params)) + "," +
         csv_cell(to_string(r.descriptor)) + "," +
         csv_cell(weight_to_csv(r.h, r.params)) + "," + csv_cell(levi);
}

std::string face_csv_header() {
  return "family,params,descriptor,H,rho_prime,vertices,dirac";
}

std::string to_csv(const FaceRecord& r) {
  return std::string(family_name(r.params.family)) + "," +
         csv_cell(describe(r.params)) + "," +
         csv_cell(to_string(r.descriptor)) + "," +
         csv_cell(weight_to_csv(r.h, r.params)) + "," +
         csv_cell(weight_to_csv(r.rho_prime, r.params)) + "," +
         csv_cell(join_csv_weights(r.vertices, r.params)) + "," +
         csv_cell(join_csv_weights(r.dirac, r.params));
}

std::string weight_to_text(const Weight& w, const FamilyParams& params) {
  if (params.family == Family::kSOeven) {
    const auto p = static_cast<std::size_t>(params.p);
    return "(" + join_coords(w.coords().first(p), ',') + " | " +
           join_coords(w.coords().subspan(p), ',') + ")";
  }
  return to_string(w);
}

std::string to_text(const EnumerateRecord& r) {
  std::string levi;
  for (const auto& f : r.levi_factors) {
    if (!levi.empty()) levi += " x ";
    levi += f;
  }
  return to_string(r.descriptor) + "  H=" + weight_to_text(r.h, r.params) +
         "  levi=" + (levi.empty() ? "torus" : levi);
}

std::string to_text(const FaceRecord& r) {
  std::string out = "descriptor " + to_string(r.descriptor) + "\n";
  out += "H          " + weight_to_text(r.h, r.params) + "\n";
  out += "rho'       " + weight_to_text(r.rho_prime, r.params) + "\n";
  out += "vertices   " + std::to_string(r.vertices.size()) + ": " +
         join_text_weights(r.vertices, r.params) + "\n";
  out += "dirac      " + std::to_string(r.dirac.size()) + ": " +
         join_text_weights(r.dirac, r.params) + "\n";
  if (r.oracle) {
    out += std::string("oracle     ") + (r.oracle->all() ? "agree" : "DISAGREE") +
           "\n";
  }
  return out;
}

}  // namespace weylface::cli
