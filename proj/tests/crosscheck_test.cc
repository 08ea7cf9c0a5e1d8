#include <gtest/gtest.h>

#include "json.hpp"
#include "rhomboid/crosscheck.h"

namespace rhomboid {
namespace {

TEST(CrosscheckTest, SmallSizesPass) {
  const std::vector<int> sizes{1, 2, 3, 4, 5};
  for (Method m : kAllMethods) {
    CrosscheckReport r = Crosscheck(m, sizes);
    EXPECT_EQ(r.entries.size(), 35u);
    EXPECT_TRUE(r.all_pass()) << MethodName(m);
    for (const CrosscheckEntry& e : r.entries) EXPECT_EQ(e.equivalence, "exact");
  }
}

TEST(CrosscheckTest, RandomizedAndSkipped) {
  const std::vector<int> sizes{9, 16};
  CrosscheckOptions o;
  o.equivalence.mode = EquivalenceMode::kRandomized;
  CrosscheckReport r = Crosscheck(Method::kCombined, sizes, o);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.entries.front().equivalence, "randomized");

  o.check_equivalence = false;
  const std::vector<int> big{64};
  r = Crosscheck(Method::kOneVdm, big, o);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.entries.front().equivalence, "skipped");
}

TEST(CrosscheckTest, Reports) {
  const std::vector<int> sizes{2};
  CrosscheckReport r = Crosscheck(Method::kTwoVdm, sizes);
  auto json = nlohmann::json::parse(r.ToJson());
  ASSERT_EQ(json.size(), 7u);
  EXPECT_EQ(json[0]["shape"], "core");
  EXPECT_EQ(json[0]["predicted"], 5);
  EXPECT_EQ(json[0]["pass"], true);
  std::string csv = r.ToCsv();
  EXPECT_EQ(csv.rfind("method,n,shape,predicted,generated,equivalence,pass\n", 0), 0u);
  EXPECT_NE(csv.find("2vdm,2,trapezoid,15,15,exact,true\n"), std::string::npos);
}

TEST(CrosscheckTest, FailuresAreRecorded) {
  CrosscheckReport r;
  r.entries.push_back({Method::kTwoVdm, 3, Shape::kCore, 28, 27, "exact", false});
  EXPECT_FALSE(r.all_pass());
  EXPECT_NE(r.ToCsv().find(",false\n"), std::string::npos);
}

}  // namespace
}  // namespace rhomboid
