#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "weylface/oracle.hpp"
#include "weylface/root_data.hpp"

namespace weylface::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitResourceLimit = 3;

enum class Format { kJson, kCsv, kText };

struct Options {
  std::string family = "sp";
  int n = 0;
  int p = 0;
  int q = 0;
  Format format = Format::kJson;
  std::size_t max_orbit = kDefaultMaxOrbit;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
};

// WEYLFACE_MAX_ORBIT if set and valid, else kDefaultMaxOrbit.
std::size_t default_max_orbit();

// Throws InvalidParameter for an unknown family name.
FamilyParams make_params(const Options& opts);

// Each command writes records to out and diagnostics (including timing) to
// err, and returns a process exit code.
int cmd_enumerate(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_face(const Options& opts, const std::string& descriptor,
             bool with_oracle, std::ostream& out, std::ostream& err);
int cmd_verify(const Options& opts, std::ostream& out, std::ostream& err);

// Regenerates the fixture files in out_dir from the oracle alone.
int cmd_golden(const std::string& out_dir, std::ostream& out,
               std::ostream& err);

// Parses argv and dispatches to a command.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace weylface::cli
