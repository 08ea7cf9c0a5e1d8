#include <gtest/gtest.h>

#include <algorithm>

#include "json.hpp"

#include "reference_tables.h"
#include "rhomboid/complexity.h"
#include "rhomboid/errors.h"

namespace rhomboid {
namespace {

void ExpectTable(Method m, const auto& table) {
  for (const auto& row : table) {
    ComplexityTriple t = Predict(m, row.n);
    EXPECT_EQ(t.core, row.core) << MethodName(m) << " n=" << row.n;
    EXPECT_EQ(t.leaf, row.leaf) << MethodName(m) << " n=" << row.n;
    EXPECT_EQ(t.dipterous, row.dipterous) << MethodName(m) << " n=" << row.n;
  }
}

TEST(PredictTest, TwoVdmTable) { ExpectTable(Method::kTwoVdm, testing::kTwoVdmTable); }
TEST(PredictTest, OneVdmTable) { ExpectTable(Method::kOneVdm, testing::kOneVdmTable); }
TEST(PredictTest, CombinedTable) { ExpectTable(Method::kCombined, testing::kCombinedTable); }

TEST(PredictTest, HalvingRecurrences) {
  std::vector<std::array<std::uint64_t, 3>> t(kMaxPredictSize + 1);
  t[1] = {0, 1, 3};
  for (int n = 2; n <= kMaxPredictSize; ++n) {
    const auto& h = t[(n + 1) / 2];
    const auto& l = t[n / 2];
    t[n][0] = h[0] + l[0] + 2 * h[1] + 2 * l[1] + 1;
    t[n][1] = h[0] + l[1] + 2 * h[1] + 2 * l[2] + 1;
    t[n][2] = h[1] + l[1] + 2 * h[2] + 2 * l[2] + 1;
  }
  ComplexityModel model(Method::kTwoVdm, kMaxPredictSize);
  for (int n = 1; n <= kMaxPredictSize; ++n) {
    ASSERT_EQ(model.at(n).core, t[n][0]) << n;
    ASSERT_EQ(model.at(n).leaf, t[n][1]) << n;
    ASSERT_EQ(model.at(n).dipterous, t[n][2]) << n;
  }
  EXPECT_EQ(Predict(Method::kTwoVdm, 4096), model.at(4096));
}

TEST(PredictTest, ClosedForm) {
  const ComplexityTriple spot[] = {{5, 10, 15}, {51, 66, 81}, {367, 412, 457}};
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(ClosedForm2Vdm(k), spot[k - 1]);
  for (int k = 1; k <= 12; ++k) EXPECT_EQ(ClosedForm2Vdm(k), Predict(Method::kTwoVdm, 1 << k));
  EXPECT_THROW(ClosedForm2Vdm(0), InvalidSizeError);
  EXPECT_THROW(ClosedForm2Vdm(21), InvalidSizeError);
}

TEST(PredictTest, MonotoneAndOrdered) {
  for (Method m : kAllMethods) {
    ComplexityModel model(m, 1024);
    for (int n = 1; n <= 1024; ++n) {
      const ComplexityTriple& t = model.at(n);
      EXPECT_LE(t.core, t.leaf);
      EXPECT_LE(t.leaf, t.dipterous);
      if (n > 1) {
        EXPECT_LT(model.at(n - 1).core, t.core) << MethodName(m) << ' ' << n;
        EXPECT_LT(model.at(n - 1).leaf, t.leaf);
        EXPECT_LT(model.at(n - 1).dipterous, t.dipterous);
      }
    }
  }
}

TEST(PredictTest, CombinedNeverWorse) {
  ComplexityModel two(Method::kTwoVdm, 4096), one(Method::kOneVdm, 4096);
  ComplexityModel comb(Method::kCombined, 4096);
  for (int n = 1; n <= 4096; ++n) {
    for (ShapeClass c : {ShapeClass::kCore, ShapeClass::kLeaf, ShapeClass::kDipterous}) {
      EXPECT_LE(comb.at(n).at(c), std::min(two.at(n).at(c), one.at(n).at(c))) << n;
    }
  }
}

// Doubling n multiplies T by about 6 (two-vertex) and 8 (one-vertex).
TEST(PredictTest, Growth) {
  auto ratio = [](Method m, int n) {
    return static_cast<double>(Predict(m, 2 * n).core) / Predict(m, n).core;
  };
  EXPECT_NEAR(ratio(Method::kTwoVdm, 512), 6.0, 0.05 * 6.0);
  EXPECT_NEAR(ratio(Method::kOneVdm, 512), 8.0, 0.10 * 8.0);
  EXPECT_NEAR(ratio(Method::kCombined, 512), 6.0, 0.05 * 6.0);
  EXPECT_GT(ratio(Method::kTwoVdm, 512), 6.0);
}

TEST(PredictTest, Errors) {
  EXPECT_THROW(Predict(Method::kTwoVdm, 0), InvalidSizeError);
  EXPECT_THROW(Predict(Method::kOneVdm, kMaxPredictSize + 1), InvalidSizeError);
  EXPECT_THROW(ComplexityModel(Method::kCombined, -1), InvalidSizeError);
}

TEST(TableTest, Formats) {
  const std::vector<int> sizes{1, 2, 8};
  MethodTable t = EmitTable(Method::kTwoVdm, sizes);
  ASSERT_EQ(t.rows.size(), 3u);
  std::string csv = TableCsv(t);
  EXPECT_EQ(csv.rfind("method,shape,n,literals\n", 0), 0u);
  EXPECT_NE(csv.find("2vdm,dipterous,8,457\n"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10);
  auto json = nlohmann::json::parse(TableJson(t));
  EXPECT_EQ(json["method"], "2vdm");
  EXPECT_EQ(json["rows"][2]["n"], 8);
  EXPECT_EQ(json["rows"][2]["core"], 367);
  EXPECT_NE(TableText(t).find("367"), std::string::npos);
}

}  // namespace
}  // namespace rhomboid
