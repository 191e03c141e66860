#include <doctest.h>

#include <algorithm>

#include "colhur/errors.hpp"
#include "colhur/verify.hpp"
#include "oracle.hpp"

using namespace colhur;

TEST_CASE("verify passes on small colorings") {
  for (const Coloring& c : {oracle::blocks({1, 1}), oracle::blocks({2, 1}), oracle::blocks({3}), oracle::blocks({2, 2})}) {
    const VerifyReport r = runVerify(c);
    CAPTURE(r.text());
    CHECK(r.passed());
    CHECK(r.checks.size() > 5);
  }
}

TEST_CASE("verify notes flag differing normalizations") {
  const VerifyReport r = runVerify(oracle::blocks({2, 1}));
  const auto flagged = std::count_if(r.notes.begin(), r.notes.end(),
                                     [](const std::string& s) { return s.find("[differs]") != std::string::npos; });
  CHECK(flagged == 4);
  const VerifyReport mono = runVerify(oracle::blocks({3}));
  CHECK(std::none_of(mono.notes.begin(), mono.notes.end(),
                     [](const std::string& s) { return s.find("[differs]") != std::string::npos; }));
}

TEST_CASE("verify json mirrors the text report") {
  const VerifyReport r = runVerify(oracle::blocks({1, 1}));
  const Json j = r.json();
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == r.checks.size());
  CHECK(r.text().find("result: PASS") != std::string::npos);
}

TEST_CASE("verify respects its degree cap") {
  Limits limits;
  limits.maxVerifyDegree = 3;
  CHECK_THROWS_AS(runVerify(oracle::blocks({2, 2}), {}, limits), CapExceeded);
}
