#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "serialize.hpp"
#include "test_support.hpp"
#include "weylface/faces.hpp"

namespace weylface::cli {
namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Golden faces were produced by the argmax oracle; the closed form must
// reproduce them exactly.
void expect_closed_form_matches(const std::string& file) {
  const json doc = weylface::testing::load_fixture(file);
  ASSERT_FALSE(doc.is_null()) << file;
  for (const auto& j : doc.at("faces")) {
    const FaceRecord golden = face_record_from_json(j);
    const RootDatum datum = build_root_datum(golden.params);
    const Face f = face_closed_form(golden.descriptor, datum);
    EXPECT_EQ(f.h, golden.h) << j.dump();
    EXPECT_EQ(descending(f.vertices), golden.vertices) << j.dump();
    EXPECT_EQ(descending(f.dirac), golden.dirac) << j.dump();
    EXPECT_TRUE(f.dirac.count(golden.rho_prime)) << j.dump();
  }
}

TEST(FixturesTest, G2) { expect_closed_form_matches("g2_faces.json"); }
TEST(FixturesTest, SpRankTwo) { expect_closed_form_matches("sp_n2_faces.json"); }
TEST(FixturesTest, SpRankThree) {
  expect_closed_form_matches("sp_n3_faces.json");
}
TEST(FixturesTest, WorkedExamples) {
  expect_closed_form_matches("worked_examples.json");
}

TEST(FixturesTest, DescriptorCounts) {
  const json doc = weylface::testing::load_fixture("descriptor_counts.json");
  ASSERT_FALSE(doc.is_null());
  ASSERT_EQ(doc.at("counts").size(), 16u);
  for (const auto& c : doc.at("counts")) {
    const FamilyParams params = params_from_json(
        c.at("family").get<std::string>(), c.at("params"));
    EXPECT_EQ(enumerate_admissible(build_root_datum(params)).size(),
              c.at("count").get<std::size_t>())
        << c.dump();
  }
}

TEST(FixturesTest, RegenerationIsStable) {
  const auto tmp = std::filesystem::temp_directory_path() /
                   ("weylface_golden_" + std::to_string(::getpid()));
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(cmd_golden(tmp.string(), out, err), kExitOk) << err.str();
  for (const auto& entry :
       std::filesystem::directory_iterator(WEYLFACE_FIXTURE_DIR)) {
    const auto fresh = tmp / entry.path().filename();
    ASSERT_TRUE(std::filesystem::exists(fresh)) << fresh;
    EXPECT_EQ(slurp(fresh), slurp(entry.path())) << entry.path().filename();
  }
  std::filesystem::remove_all(tmp);
}

}  // namespace
}  // namespace weylface::cli
