#include "qtorus/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qtorus {

FiniteRootSystemC finiteC(int r) {
  if (r < 3) {
    throw std::invalid_argument("type C requires finite rank r >= 3");
  }
  FiniteRootSystemC sys;
  sys.r = r;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      for (int si : {-1, 1}) {
        for (int sj : {-1, 1}) {
          std::vector<int> root(static_cast<std::size_t>(r), 0);
          root[static_cast<std::size_t>(i)] = si;
          root[static_cast<std::size_t>(j)] = sj;
          sys.shortRoots.push_back(std::move(root));
        }
      }
    }
  }
  for (int i = 0; i < r; ++i) {
    for (int s : {-2, 2}) {
      std::vector<int> root(static_cast<std::size_t>(r), 0);
      root[static_cast<std::size_t>(i)] = s;
      sys.longRoots.push_back(std::move(root));
    }
  }
  std::sort(sys.shortRoots.begin(), sys.shortRoots.end());
  std::sort(sys.longRoots.begin(), sys.longRoots.end());
  return sys;
}

std::string stratumName(Stratum s) {
  switch (s) {
    case Stratum::Isotropic:
      return "iso";
    case Stratum::Short:
      return "short";
    case Stratum::Long:
      return "long";
  }
  throw std::invalid_argument("unknown stratum");
}

namespace {

/// All integer vectors of length n with max-norm <= box, lexicographically
/// ascending.
std::vector<std::vector<std::int64_t>> boxVectors(int n, int box) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int at) -> void {
    if (at == n) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = -box; v <= box; ++v) {
      cur[static_cast<std::size_t>(at)] = v;
      self(self, at + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::uint32_t parityMask(const std::vector<std::int64_t>& lambda) {
  std::uint32_t mask = 0;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] & 1) mask |= std::uint32_t{1} << k;
  }
  return mask;
}

}  // namespace

std::vector<RootRecord> generateRoots(const EARSSpec& spec, int box) {
  if (spec.r < 3) {
    throw std::invalid_argument("type C requires finite rank r >= 3");
  }
  if (spec.n < 0 || spec.pattern.rank() != spec.n) {
    throw std::invalid_argument("pattern rank must equal the nullity");
  }
  if (!spec.pattern.containsZero()) {
    throw std::invalid_argument("the long-root pattern must contain 0");
  }
  if (box < 0) {
    throw std::invalid_argument("box radius must be non-negative");
  }
  FiniteRootSystemC finite = finiteC(spec.r);
  std::vector<std::vector<std::int64_t>> lambdas = boxVectors(spec.n, box);
  std::vector<RootRecord> out;
  std::vector<int> zero(static_cast<std::size_t>(spec.r), 0);
  for (const auto& lambda : lambdas) {
    out.push_back(RootRecord{Stratum::Isotropic, zero, lambda});
  }
  for (const auto& root : finite.shortRoots) {
    for (const auto& lambda : lambdas) {
      out.push_back(RootRecord{Stratum::Short, root, lambda});
    }
  }
  for (const auto& root : finite.longRoots) {
    for (const auto& lambda : lambdas) {
      if (spec.pattern.contains(parityMask(lambda))) {
        out.push_back(RootRecord{Stratum::Long, root, lambda});
      }
    }
  }
  return out;
}

int twistNumber(const CosetPattern& p) {
  return p.rank() - p.spanDimension();
}

namespace {

std::string enumLabel(InvolutionKind kind) {
  switch (kind) {
    case InvolutionKind::Main:
      return "Main";
    case InvolutionKind::Tau1:
      return "Tau1";
    case InvolutionKind::Tau2:
      return "Tau2";
  }
  throw std::invalid_argument("unknown involution kind");
}

}  // namespace

EalaCensus countEalaClasses(int n, int r) {
  if (n < 1 || n > 5) {
    throw std::invalid_argument("class count requires 1 <= n <= 5");
  }
  if (r < 3) {
    throw std::invalid_argument("type C requires finite rank r >= 3");
  }
  struct Entry {
    std::string label;
    CosetPattern pattern;
  };
  std::vector<Entry> list;
  auto push = [&](InvolutionKind kind, int l) {
    CanonicalPair pair = canonicalInvolution(kind, l, n);
    std::string label = "S(" + std::to_string(n) + "," + std::to_string(l) +
                        "," + enumLabel(kind) + ")";
    list.push_back(Entry{label, fromInvolution(pair.matrix, pair.involution)});
  };
  for (int l = 0; 2 * l <= n; ++l) push(InvolutionKind::Main, l);
  for (int l = 0; 2 * l + 1 <= n; ++l) push(InvolutionKind::Tau1, l);
  for (int l = 1; 2 * l <= n; ++l) push(InvolutionKind::Tau2, l);
  if (r == 3 && n >= 3) {
    list.push_back(Entry{"Lambda^(3)", lambdaT(n, 3)});
  }

  EalaCensus census;
  census.n = n;
  census.r = r;
  for (Entry& entry : list) {
    bool merged = false;
    for (EalaClass& cls : census.classes) {
      if (similar(cls.representative, entry.pattern)) {
        cls.labels.push_back(entry.label);
        merged = true;
        break;
      }
    }
    if (merged) continue;
    EalaClass cls;
    cls.labels.push_back(entry.label);
    cls.index = entry.pattern.size();
    cls.saturation = saturationNumber(entry.pattern);
    cls.twist = twistNumber(entry.pattern);
    cls.representative = std::move(entry.pattern);
    census.classes.push_back(std::move(cls));
  }
  census.count = census.classes.size();
  return census;
}

TwistCompareReport compareClassSets(int n, int t) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("class-set comparison requires 1 <= n <= 4");
  }
  if (t < 0 || t > n) {
    throw std::invalid_argument("twist must satisfy 0 <= t <= n");
  }
  TwistCompareReport report;
  report.n = n;
  report.t = t;

  std::vector<PatternClass> all = extendedCensus(n);
  std::set<std::uint32_t> rReps;
  for (const PatternClass& cls : all) {
    if (cls.twist == t) rReps.insert(cls.representative.toMask());
  }
  report.rCount = rReps.size();

  struct Origin {
    std::string label;
    CosetPattern pattern;
  };
  std::vector<Origin> lr;
  if (t == 0) {
    InvolutiveCensus inv = censusInvolutive(n);
    for (const CensusClass& cls : inv.classes) {
      lr.push_back(Origin{"S(" + std::to_string(n) + "," +
                              std::to_string(cls.l) + "," +
                              enumLabel(cls.kind) + ")",
                          cls.representative});
    }
  } else if (t <= 3) {
    lr.push_back(
        Origin{"Lambda^(" + std::to_string(t) + ")", lambdaT(n, t)});
  } else {
    report.notes.push_back(
        "no involution-origin classes exist at twist > 3");
  }
  report.lrCount = lr.size();

  report.lrSubset = true;
  for (const Origin& origin : lr) {
    auto [canonical, witness] = canonicalizePattern(origin.pattern);
    bool found = rReps.count(canonical.toMask()) > 0;
    if (!found) report.lrSubset = false;
    report.notes.push_back(origin.label + (found
                                               ? " matches a census class"
                                               : " is missing from the census"));
  }
  report.strict = report.lrSubset && report.lrCount < report.rCount;
  report.notes.push_back(
      "ranks above 4 are outside this exhaustive comparison: at rank 5 the "
      "pattern space already holds 2^31 candidate patterns, beyond the "
      "desk-scale sweep used here");
  return report;
}

}  // namespace qtorus
