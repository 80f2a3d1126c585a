#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "weylface/oracle.hpp"
#include "weylface/parabolic.hpp"
#include "weylface/root_data.hpp"
#include "weylface/weight.hpp"

namespace weylface::cli {

using nlohmann::json;

// so-even weights become {"x":[...],"y":[...]}; the rest flat arrays.
json weight_to_json(const Weight& w, const FamilyParams& params);
Weight weight_from_json(const json& j, const FamilyParams& params);

// sp, so-star: [[1,1],[0,1]]
// so-even:     {"pairs":[[1,1]],"rs":[1,1],"flags":[0,0]}
// g2:          "L1"
// Throws InvalidDescriptor on malformed input.
json descriptor_to_json(const AdmissibleDescriptor& d);
AdmissibleDescriptor descriptor_from_json(const json& j,
                                          const FamilyParams& params);

// {"n":3}, {"p":2,"q":2} or {}.
json params_to_json(const FamilyParams& params);
FamilyParams params_from_json(const std::string& family, const json& j);

struct EnumerateRecord {
  FamilyParams params;
  AdmissibleDescriptor descriptor;
  Weight h;
  std::vector<std::string> levi_factors;

  friend bool operator==(const EnumerateRecord&,
                         const EnumerateRecord&) = default;
};

struct OracleAgreement {
  bool closed_form_equals_argmax = false;
  bool wl_orbit_equals_argmax = false;
  bool dirac_equals_argmax_cap_ck = false;

  bool all() const {
    return closed_form_equals_argmax && wl_orbit_equals_argmax &&
           dirac_equals_argmax_cap_ck;
  }
  friend bool operator==(const OracleAgreement&,
                         const OracleAgreement&) = default;
};

struct FaceRecord {
  FamilyParams params;
  AdmissibleDescriptor descriptor;
  Weight h;
  Weight rho_prime;
  std::vector<Weight> vertices;  // lexicographically descending
  std::vector<Weight> dirac;     // lexicographically descending
  std::optional<OracleAgreement> oracle;

  friend bool operator==(const FaceRecord&, const FaceRecord&) = default;
};

EnumerateRecord make_enumerate_record(const AdmissibleDescriptor& d,
                                      const RootDatum& datum);
std::vector<Weight> descending(const WeightSet& s);

json to_json(const EnumerateRecord& r);
json to_json(const FaceRecord& r);
EnumerateRecord enumerate_record_from_json(const json& j);
FaceRecord face_record_from_json(const json& j);

json to_json(const Check& c);
json to_json(const FaceReport& r, const FamilyParams& params);

// Coordinates joined by ';' with the x/y split of so-even marked by '|'.
std::string weight_to_csv(const Weight& w, const FamilyParams& params);
// Quoted CSV cell with embedded quotes doubled.
std::string csv_cell(const std::string& s);

std::string enumerate_csv_header();
std::string to_csv(const EnumerateRecord& r);
std::string face_csv_header();
std::string to_csv(const FaceRecord& r);

// "(3,-1 | 2,0)" for so-even, "(2,-1)" otherwise.
std::string weight_to_text(const Weight& w, const FamilyParams& params);
std::string to_text(const EnumerateRecord& r);
std::string to_text(const FaceRecord& r);

}  // namespace weylface::cli
