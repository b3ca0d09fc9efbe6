#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qsorep/serialize.hpp"
#include "qsorep/verify.hpp"

using namespace qsorep;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  auto dir = fs::temp_directory_path() / "qsorep_test_io";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(HalfStrings, ParseAndFormat) {
  EXPECT_EQ(parse_half("3/2"), 3);
  EXPECT_EQ(parse_half("1.5"), 3);
  EXPECT_EQ(parse_half("-1/2"), -1);
  EXPECT_EQ(parse_half("2"), 4);
  EXPECT_EQ(parse_half("0"), 0);
  EXPECT_EQ(half_to_string(3), "3/2");
  EXPECT_EQ(half_to_string(4), "2");
  EXPECT_EQ(half_to_string(-1), "-1/2");
  EXPECT_EQ(half_to_string(0), "0");
  EXPECT_THROW(parse_half("abc"), std::invalid_argument);
  EXPECT_THROW(parse_half("1/3"), std::invalid_argument);
  // Round trip over a range of doubled values.
  for (int t = -9; t <= 9; ++t) EXPECT_EQ(parse_half(half_to_string(t)), t);
}

TEST(PatternJson, RoundTrip) {
  HighestWeight w{5, Flavor::classical, {4, 2}};
  for (const auto& pat : enumerate_patterns(w)) {
    const auto j = pattern_to_json(pat);
    EXPECT_EQ(pattern_from_json(j, w.n), pat);
  }
}

TEST(RepJson, RoundTripBitExact) {
  RepSpec<double> spec{HighestWeight{4, Flavor::nonclassical, {3, 1}},
                       SignVector{{1, -1, 1}}, QParam<double>(2.0),
                       RepKind::nonclassical};
  const auto rep = build(spec);
  const auto j = rep_to_json(rep);
  const auto back = rep_from_json(j);

  ASSERT_EQ(back.dim(), rep.dim());
  EXPECT_EQ(back.spec.kind, rep.spec.kind);
  EXPECT_EQ(back.spec.weight.twice, rep.spec.weight.twice);
  ASSERT_TRUE(back.spec.signs.has_value());
  EXPECT_EQ(back.spec.signs->eps, rep.spec.signs->eps);
  for (const auto& [k, M] : rep.generators) {
    ASSERT_TRUE(back.generators.count(k));
    EXPECT_EQ((back.generators.at(k) - M).norm(), 0.0);
  }
  // Bit-exact matrices imply identical relation reports.
  const auto ra = check_relations(rep);
  const auto rb = check_relations(back);
  EXPECT_EQ(ra.max_residual, rb.max_residual);
  EXPECT_EQ(ra.residuals, rb.residuals);
}

TEST(RepJson, SerializedThroughFileAndBack) {
  RepSpec<double> spec{HighestWeight{3, Flavor::classical, {4}}, std::nullopt,
                       QParam<double>(1.2), RepKind::classical};
  const auto rep = build(spec);
  const auto path = (temp_dir() / "rep.json").string();
  atomic_write_file(path, rep_to_json(rep).dump(2));
  const auto back = rep_from_json(load_json_file(path));
  for (const auto& [k, M] : rep.generators)
    EXPECT_EQ((back.generators.at(k) - M).norm(), 0.0);
  std::remove(path.c_str());
}

TEST(AtomicWrite, ReplacesContentWhole) {
  const auto path = (temp_dir() / "atomic.txt").string();
  atomic_write_file(path, "first");
  atomic_write_file(path, "second");
  std::ifstream in(path);
  std::string s((std::istreambuf_iterator<char>(in)),
                std::istreambuf_iterator<char>());
  EXPECT_EQ(s, "second");
  std::remove(path.c_str());
}

TEST(CsvExport, OneFilePerGenerator) {
  RepSpec<double> spec{HighestWeight{3, Flavor::classical, {2}}, std::nullopt,
                       QParam<double>(2.0), RepKind::classical};
  const auto rep = build(spec);
  const auto dir = temp_dir() / "csv";
  fs::create_directories(dir);
  write_csv(rep, dir / "vec");
  for (int k = 2; k <= 3; ++k) {
    const auto f = dir / ("vec_I_" + std::to_string(k) + "_" +
                          std::to_string(k - 1) + ".csv");
    ASSERT_TRUE(fs::exists(f)) << f;
    std::ifstream in(f);
    std::string line;
    int rows = 0;
    while (std::getline(in, line))
      if (!line.empty()) ++rows;
    EXPECT_EQ(rows, 3);
  }
  fs::remove_all(dir);
}

TEST(RepJson, RejectsMalformedInput) {
  nlohmann::json j;
  j["n"] = 3;
  EXPECT_THROW(rep_from_json(j), nlohmann::json::exception);
  j["kind"] = "sideways";
  EXPECT_THROW(rep_from_json(j), std::invalid_argument);
}
