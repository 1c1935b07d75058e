#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtorus/involution.hpp"
#include "qtorus/normal_form.hpp"
#include "qtorus/oracle.hpp"
#include "qtorus/root_system.hpp"
#include "qtorus/semilattice.hpp"

using namespace qtorus;

namespace {

EARSSpec makeSpec(int r, int n, const CosetPattern& pattern) {
  EARSSpec spec;
  spec.r = r;
  spec.n = n;
  spec.pattern = pattern;
  return spec;
}

std::size_t countStratum(const std::vector<RootRecord>& roots, Stratum s) {
  return static_cast<std::size_t>(
      std::count_if(roots.begin(), roots.end(),
                    [&](const RootRecord& r) { return r.stratum == s; }));
}

}  // namespace

TEST_SUITE_BEGIN("root_system");

TEST_CASE("finite C_r: root counts and ordering") {
  FiniteRootSystemC c3 = finiteC(3);
  CHECK(c3.shortRoots.size() == 12);
  CHECK(c3.longRoots.size() == 6);
  CHECK(std::is_sorted(c3.shortRoots.begin(), c3.shortRoots.end()));
  CHECK(std::is_sorted(c3.longRoots.begin(), c3.longRoots.end()));
  CHECK(c3.longRoots.front() == std::vector<int>{-2, 0, 0});
  CHECK(c3.longRoots.back() == std::vector<int>{2, 0, 0});
  CHECK(std::count(c3.shortRoots.begin(), c3.shortRoots.end(),
                   std::vector<int>{1, -1, 0}) == 1);

  FiniteRootSystemC c5 = finiteC(5);
  CHECK(c5.shortRoots.size() == 2 * 5 * 4);
  CHECK(c5.longRoots.size() == 10);

  CHECK_THROWS_AS(finiteC(2), std::invalid_argument);
}

TEST_CASE("stratum names") {
  CHECK(stratumName(Stratum::Isotropic) == "iso");
  CHECK(stratumName(Stratum::Short) == "short");
  CHECK(stratumName(Stratum::Long) == "long");
}

TEST_CASE("root generation: golden counts") {
  CHECK(generateRoots(makeSpec(3, 1, CosetPattern::full(1)), 0).size() == 19);
  CHECK(generateRoots(makeSpec(3, 1, CosetPattern::zeroOnly(1)), 1).size() ==
        45);
  CHECK(generateRoots(makeSpec(4, 0, CosetPattern::zeroOnly(0)), 0).size() ==
        33);
  CHECK(generateRoots(makeSpec(3, 1, CosetPattern::full(1)), 1).size() == 57);
}

TEST_CASE("root generation: strata composition at box 1") {
  auto roots = generateRoots(makeSpec(3, 1, CosetPattern::zeroOnly(1)), 1);
  CHECK(countStratum(roots, Stratum::Isotropic) == 3);   // -1, 0, 1
  CHECK(countStratum(roots, Stratum::Short) == 12 * 3);  // every coset open
  CHECK(countStratum(roots, Stratum::Long) == 6);        // even cosets only
  for (const RootRecord& root : roots) {
    if (root.stratum == Stratum::Long) {
      CHECK(root.lambda == std::vector<std::int64_t>{0});
    }
  }
}

TEST_CASE("root generation: deterministic stratum-major ordering") {
  auto roots = generateRoots(makeSpec(3, 2, CosetPattern::full(2)), 1);
  // Stratum blocks in order, each sorted by (finite, lambda).
  std::size_t iso = countStratum(roots, Stratum::Isotropic);
  std::size_t sh = countStratum(roots, Stratum::Short);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Stratum expected = i < iso                ? Stratum::Isotropic
                       : (i < iso + sh ? Stratum::Short : Stratum::Long);
    CHECK(roots[i].stratum == expected);
  }
  CHECK(roots.front().lambda == std::vector<std::int64_t>{-1, -1});
  auto key = [](const RootRecord& r) {
    return std::make_pair(r.finite, r.lambda);
  };
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (roots[i - 1].stratum == roots[i].stratum) {
      CHECK(key(roots[i - 1]) < key(roots[i]));
    }
  }
}

TEST_CASE("root generation: input validation") {
  CHECK_THROWS_AS(generateRoots(makeSpec(2, 1, CosetPattern::full(1)), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(generateRoots(makeSpec(3, 2, CosetPattern::full(1)), 1),
                  std::invalid_argument);  // rank mismatch
  CHECK_THROWS_AS(
      generateRoots(makeSpec(3, 1, CosetPattern::fromMask(1, 0b10)), 1),
      std::invalid_argument);  // 0 missing from the pattern
  CHECK_THROWS_AS(generateRoots(makeSpec(3, 1, CosetPattern::full(1)), -1),
                  std::invalid_argument);
}

TEST_CASE("twist numbers") {
  for (int n = 1; n <= 5; ++n) {
    for (int t = 0; t <= n; ++t) CHECK(twistNumber(lambdaT(n, t)) == t);
  }
  for (int n = 1; n <= 4; ++n) {
    int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
      ElementaryMatrix e = oracle::unpackMatrix(n, mask);
      CHECK(twistNumber(fromInvolution(e, Involution::allPlus(n))) == 0);
    }
  }
}

TEST_CASE("class counts: the honest similarity census behind nullity n") {
  // r >= 4: no Lambda^(3) entry; the count is independent of r.
  CHECK(countEalaClasses(1, 4).count == 2);
  CHECK(countEalaClasses(2, 4).count == 4);
  CHECK(countEalaClasses(3, 4).count == 5);
  CHECK(countEalaClasses(4, 4).count == 7);
  CHECK(countEalaClasses(1, 5).count == 2);
  CHECK(countEalaClasses(4, 7).count == 7);

  // r = 3 admits the extra Lambda^(3) class once n >= 3.
  CHECK(countEalaClasses(1, 3).count == 2);
  CHECK(countEalaClasses(2, 3).count == 4);
  CHECK(countEalaClasses(3, 3).count == 6);
  CHECK(countEalaClasses(4, 3).count == 8);
}

TEST_CASE("class counts: labels, invariants, and pairwise non-similarity") {
  EalaCensus census = countEalaClasses(3, 3);
  std::set<std::string> labels;
  for (const EalaClass& cls : census.classes) {
    REQUIRE_FALSE(cls.labels.empty());
    for (const std::string& label : cls.labels) labels.insert(label);
    CHECK(cls.index == cls.representative.size());
    CHECK(cls.saturation == saturationNumber(cls.representative));
    CHECK(cls.twist == twistNumber(cls.representative));
  }
  CHECK(labels.count("S(3,0,Main)") == 1);
  CHECK(labels.count("S(3,1,Tau1)") == 1);
  CHECK(labels.count("S(3,1,Tau2)") == 1);
  CHECK(labels.count("Lambda^(3)") == 1);
  CHECK(labels.count("S(3,2,Main)") == 0);  // 2l > n

  // Every class holds exactly one label here: nothing merged.
  for (const EalaClass& cls : census.classes) CHECK(cls.labels.size() == 1);
  for (std::size_t i = 0; i < census.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < census.classes.size(); ++j) {
      CHECK_FALSE(similar(census.classes[i].representative,
                          census.classes[j].representative));
    }
  }
}

TEST_CASE("class counts: tau2 starts at l = 1, tau1 needs 2l + 1 <= n") {
  EalaCensus census = countEalaClasses(4, 4);
  std::set<std::string> labels;
  for (const EalaClass& cls : census.classes) {
    for (const std::string& label : cls.labels) labels.insert(label);
  }
  CHECK(labels == std::set<std::string>{
                      "S(4,0,Main)", "S(4,1,Main)", "S(4,2,Main)",
                      "S(4,0,Tau1)", "S(4,1,Tau1)", "S(4,1,Tau2)",
                      "S(4,2,Tau2)"});
}

TEST_CASE("twist comparison: involution-origin classes versus the census") {
  TwistCompareReport r40 = compareClassSets(4, 0);
  CHECK(r40.rCount == 22);
  CHECK(r40.lrCount == 5);
  CHECK(r40.lrSubset);
  CHECK(r40.strict);

  TwistCompareReport r41 = compareClassSets(4, 1);
  CHECK(r41.rCount == 5);
  CHECK(r41.lrCount == 1);
  CHECK(r41.strict);

  TwistCompareReport r44 = compareClassSets(4, 4);
  CHECK(r44.rCount == 1);
  CHECK(r44.lrCount == 0);
  CHECK(r44.lrSubset);
  CHECK(r44.strict);

  TwistCompareReport r22 = compareClassSets(2, 2);
  CHECK(r22.rCount == 1);
  CHECK(r22.lrCount == 1);
  CHECK(r22.lrSubset);
  CHECK_FALSE(r22.strict);
}

TEST_CASE("twist comparison: exact strictness table at n <= 4") {
  std::set<std::pair<int, int>> strictAt;
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t <= n; ++t) {
      TwistCompareReport report = compareClassSets(n, t);
      CHECK(report.lrSubset);
      CHECK(report.strict == (report.lrCount < report.rCount));
      if (report.strict) strictAt.emplace(n, t);
    }
  }
  CHECK(strictAt == std::set<std::pair<int, int>>{
                        {3, 0}, {3, 1}, {4, 0}, {4, 1}, {4, 2}, {4, 4}});
}

TEST_CASE("twist comparison: the rank-5 scale limit is documented") {
  TwistCompareReport report = compareClassSets(4, 0);
  bool documented = false;
  for (const std::string& note : report.notes) {
    if (note.find("2^31") != std::string::npos) documented = true;
  }
  CHECK(documented);
}

TEST_SUITE_END();
