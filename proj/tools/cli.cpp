#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "serialize.hpp"
#include "weylface/errors.hpp"
#include "weylface/faces.hpp"
#include "weylface/parabolic.hpp"

namespace weylface::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Maps library exceptions onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << " (raise --max-orbit or "
        << "WEYLFACE_MAX_ORBIT)\n";
    return kExitResourceLimit;
  } catch (const InternalConsistency& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

json parse_descriptor_literal(const std::string& text, Family family) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    // Allow bare G2 case names: --descriptor L1
    if (family == Family::kG2) return json(text);
    throw InvalidDescriptor("--descriptor is not valid JSON: " + text);
  }
}

FaceRecord face_record(const Face& f, const RootDatum& datum) {
  FaceRecord rec;
  rec.params = datum.params();
  rec.descriptor = f.descriptor;
  rec.h = f.h;
  rec.rho_prime = f.rho_prime;
  rec.vertices = descending(f.vertices);
  rec.dirac = descending(f.dirac);
  return rec;
}

// Face record built from the argmax oracle alone. rho' is the
// lexicographically greatest k-dominant vertex.
FaceRecord oracle_face_record(const AdmissibleDescriptor& d,
                              const RootDatum& datum,
                              std::span<const Weight> orb) {
  FaceRecord rec;
  rec.params = datum.params();
  rec.descriptor = d;
  rec.h = h_from_descriptor(d, datum).weight();
  const WeightSet face = face_by_argmax(rec.h, orb);
  WeightSet dirac;
  for (const auto& v : face) {
    if (is_k_dominant(v, datum)) dirac.insert(v);
  }
  if (dirac.empty()) {
    throw InternalConsistency("argmax face of " + to_string(d) +
                              " misses the k-dominant chamber");
  }
  rec.rho_prime = *dirac.rbegin();
  rec.vertices = descending(face);
  rec.dirac = descending(dirac);
  return rec;
}

void write_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream f(path);
  if (!f) throw InvalidParameter("cannot write " + path.string());
  f << doc.dump(2) << "\n";
}

json faces_document(const RootDatum& datum,
                    const std::vector<AdmissibleDescriptor>& ds) {
  const auto orb = orbit(datum.rho(), datum);
  json faces = json::array();
  for (const auto& d : ds) faces.push_back(to_json(oracle_face_record(d, datum, orb)));
  return json{{"family", std::string(family_name(datum.family()))},
              {"params", params_to_json(datum.params())},
              {"faces", faces}};
}

// Ranks whose descriptor counts are frozen in the fixtures.
std::vector<FamilyParams> count_ranks() {
  std::vector<FamilyParams> out{{Family::kG2, 0, 0, 0}};
  for (int n = 2; n <= 5; ++n) out.push_back({Family::kSp, n, 0, 0});
  for (auto [p, q] : std::vector<std::pair<int, int>>{
           {2, 2}, {3, 1}, {1, 3}, {3, 2}, {2, 3}, {4, 1}, {1, 4}, {3, 3}}) {
    out.push_back({Family::kSOeven, p + q, p, q});
  }
  for (int n = 4; n <= 6; ++n) out.push_back({Family::kSOstar, n, 0, 0});
  return out;
}

}  // namespace

std::size_t default_max_orbit() {
  if (const char* env = std::getenv("WEYLFACE_MAX_ORBIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxOrbit;
}

FamilyParams make_params(const Options& opts) {
  const auto fam = parse_family(opts.family);
  if (!fam) {
    throw InvalidParameter("unknown family '" + opts.family +
                           "' (expected sp, so-even, so-star or g2)");
  }
  FamilyParams params{*fam, opts.n, opts.p, opts.q};
  if (*fam == Family::kSOeven) params.n = opts.p + opts.q;
  return params;
}

int cmd_enumerate(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RootDatum datum = build_root_datum(make_params(opts));
    const auto ds = enumerate_admissible(datum);
    if (opts.format == Format::kCsv) out << enumerate_csv_header() << "\n";
    for (const auto& d : ds) {
      const auto rec = make_enumerate_record(d, datum);
      switch (opts.format) {
        case Format::kJson: out << to_json(rec).dump() << "\n"; break;
        case Format::kCsv: out << to_csv(rec) << "\n"; break;
        case Format::kText: out << to_text(rec) << "\n"; break;
      }
    }
    err << describe(datum.params()) << ": " << ds.size() << " descriptors\n";
    return kExitOk;
  });
}

int cmd_face(const Options& opts, const std::string& descriptor,
             bool with_oracle, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RootDatum datum = build_root_datum(make_params(opts));
    const auto d = descriptor_from_json(
        parse_descriptor_literal(descriptor, datum.family()), datum.params());
    validate_descriptor(d);
    const Face f = face_closed_form(d, datum);
    FaceRecord rec = face_record(f, datum);
    if (with_oracle) {
      const WeightSet argmax = face_by_argmax(f.h, datum, opts.max_orbit);
      const Face wl = face_from_wl(d, datum, opts.max_orbit);
      WeightSet argmax_dirac;
      for (const auto& v : argmax) {
        if (is_k_dominant(v, datum)) argmax_dirac.insert(v);
      }
      rec.oracle = OracleAgreement{f.vertices == argmax,
                                   wl.vertices == argmax,
                                   f.dirac == argmax_dirac};
    }
    switch (opts.format) {
      case Format::kJson: out << to_json(rec).dump() << "\n"; break;
      case Format::kCsv:
        out << face_csv_header() << "\n" << to_csv(rec) << "\n";
        break;
      case Format::kText: out << to_text(rec); break;
    }
    if (rec.oracle && !rec.oracle->all()) {
      err << "oracle disagreement for " << to_string(d) << "\n";
      return kExitVerificationFailed;
    }
    return kExitOk;
  });
}

int cmd_verify(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto start = Clock::now();
    const RootDatum datum = build_root_datum(make_params(opts));
    VerifyOptions vo;
    vo.max_orbit = opts.max_orbit;
    vo.jobs = opts.jobs;
    vo.seed = opts.seed;
    const VerifyReport report = certify_all(datum, vo);
    const FamilyParams& params = datum.params();

    std::size_t passed = 0;
    for (const auto& f : report.faces) passed += f.passed() ? 1 : 0;
    const std::size_t total = report.faces.size();

    json bijection = json::array();
    for (const auto& c : report.bijection.checks) {
      bijection.push_back(to_json(c));
    }

    switch (opts.format) {
      case Format::kJson: {
        for (const auto& f : report.faces) {
          out << to_json(f, params).dump() << "\n";
        }
        out << json{{"summary", describe(params)},
                    {"orbit_size", report.orbit_size},
                    {"descriptors", total},
                    {"passed", passed},
                    {"failed", total - passed},
                    {"seed", report.bijection.seed},
                    {"samples", report.bijection.samples},
                    {"bijection", bijection},
                    {"ok", report.passed()}}
                   .dump()
            << "\n";
        break;
      }
      case Format::kCsv: {
        out << "descriptor,H,passed,vertices,dirac,failed_checks\n";
        for (const auto& f : report.faces) {
          std::string failed;
          for (const auto& c : f.checks) {
            if (c.passed) continue;
            if (!failed.empty()) failed += ' ';
            failed += c.name;
          }
          out << csv_cell(to_string(f.descriptor)) << ","
              << csv_cell(weight_to_csv(f.h, params)) << ","
              << (f.passed() ? "true" : "false") << "," << f.vertex_count
              << "," << f.dirac_count << "," << csv_cell(failed) << "\n";
        }
        break;
      }
      case Format::kText: {
        for (const auto& f : report.faces) {
          out << (f.passed() ? "PASS " : "FAIL ") << to_string(f.descriptor)
              << "  H=" << weight_to_text(f.h, params)
              << "  |face|=" << f.vertex_count
              << "  |dirac|=" << f.dirac_count << "\n";
          for (const auto& c : f.checks) {
            if (!c.passed) out << "    " << c.name << ": " << c.detail << "\n";
          }
        }
        for (const auto& c : report.bijection.checks) {
          out << (c.passed ? "PASS " : "FAIL ") << c.name;
          if (!c.passed) out << ": " << c.detail;
          out << "\n";
        }
        out << describe(params) << ": " << passed << "/" << total
            << " descriptors pass, orbit " << report.orbit_size << " points\n";
        break;
      }
    }
    err << "verify " << describe(params) << ": " << total
        << " descriptors in " << seconds_since(start) << " s\n";
    return report.passed() ? kExitOk : kExitVerificationFailed;
  });
}

int cmd_golden(const std::string& out_dir, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    namespace fs = std::filesystem;
    const fs::path dir(out_dir);
    fs::create_directories(dir);

    const RootDatum g2 = build_root_datum({Family::kG2, 0, 0, 0});
    write_file(dir / "g2_faces.json",
               faces_document(g2, enumerate_admissible(g2)));
    for (int n : {2, 3}) {
      const RootDatum sp = build_root_datum({Family::kSp, n, 0, 0});
      write_file(dir / ("sp_n" + std::to_string(n) + "_faces.json"),
                 faces_document(sp, enumerate_admissible(sp)));
    }

    json worked = json::array();
    {
      const RootDatum sp2 = build_root_datum({Family::kSp, 2, 0, 0});
      const auto orb = orbit(sp2.rho(), sp2);
      for (const auto& tiers : {std::vector<TierPair>{{1, 1}},
                                std::vector<TierPair>{{1, 0}}}) {
        worked.push_back(to_json(oracle_face_record(
            make_descriptor(sp2.params(), tiers), sp2, orb)));
      }
      const RootDatum ss4 = build_root_datum({Family::kSOstar, 4, 0, 0});
      const auto orb4 = orbit(ss4.rho(), ss4);
      worked.push_back(to_json(oracle_face_record(
          make_descriptor(ss4.params(), {{1, 1}}), ss4, orb4)));
    }
    write_file(dir / "worked_examples.json", json{{"faces", worked}});

    json counts = json::array();
    for (const auto& params : count_ranks()) {
      const RootDatum datum = build_root_datum(params);
      const std::size_t enumerated = enumerate_admissible(datum).size();
      const int bound = std::max(3, datum.rank());
      const std::size_t brute =
          brute_force_admissible_parabolics(datum, bound).size();
      if (enumerated != brute) {
        err << "error: " << describe(params) << ": enumeration gives "
            << enumerated << ", brute force " << brute
            << "; refusing to freeze\n";
        return kExitVerificationFailed;
      }
      counts.push_back(json{{"family", std::string(family_name(params.family))},
                            {"params", params_to_json(params)},
                            {"count", enumerated}});
    }
    write_file(dir / "descriptor_counts.json", json{{"counts", counts}});
    out << "wrote fixtures to " << dir.string() << "\n";
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Faces of Weyl-orbit polytopes and Dirac cohomology of A_q "
               "modules"};
  app.require_subcommand(1);

  Options opts;
  opts.max_orbit = default_max_orbit();
  std::string descriptor;
  bool with_oracle = false;
  std::string out_dir = "fixtures";

  const std::map<std::string, Format> formats{
      {"json", Format::kJson}, {"csv", Format::kCsv}, {"text", Format::kText}};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", opts.family, "sp | so-even | so-star | g2")
        ->check(CLI::IsMember({"sp", "so-even", "so-star", "g2"}));
    sub->add_option("--n", opts.n, "rank for sp and so-star");
    sub->add_option("--p", opts.p, "so-even: x-block size");
    sub->add_option("--q", opts.q, "so-even: y-block size");
    sub->add_option("--format", opts.format, "json | csv | text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--max-orbit", opts.max_orbit,
                    "refuse orbits larger than this");
    sub->add_option("--jobs", opts.jobs, "worker threads");
    sub->add_option("--seed", opts.seed, "seed for sampled checks");
  };

  auto* enumerate = app.add_subcommand(
      "enumerate", "list admissible descriptors with H and Levi factors");
  add_common(enumerate);
  auto* face = app.add_subcommand(
      "face", "face, rho' and Dirac set for one descriptor");
  add_common(face);
  face->add_option("--descriptor", descriptor,
                   "JSON literal, e.g. [[1,1]] or "
                   "{\"pairs\":[[1,1]],\"rs\":[1,1],\"flags\":[0,0]} or L1")
      ->required();
  face->add_flag("--with-oracle", with_oracle,
                 "compare against the argmax and W_l constructions");
  auto* verify = app.add_subcommand(
      "verify", "certify every descriptor of a family against the oracle");
  add_common(verify);
  auto* golden =
      app.add_subcommand("golden", "regenerate fixture files from the oracle");
  golden->add_option("--out-dir", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  if (*enumerate) return cmd_enumerate(opts, out, err);
  if (*face) return cmd_face(opts, descriptor, with_oracle, out, err);
  if (*verify) return cmd_verify(opts, out, err);
  return cmd_golden(out_dir, out, err);
}

}  // namespace weylface::cli
