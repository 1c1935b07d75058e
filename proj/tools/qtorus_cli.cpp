// Command-line front end: classification of elementary quantum tori with
// graded involution, semilattice invariants, censuses, root generation, and
// the brute-force verification suite.
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 verification failure.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtorus/involution.hpp"
#include "qtorus/normal_form.hpp"
#include "qtorus/oracle.hpp"
#include "qtorus/parallel.hpp"
#include "qtorus/root_system.hpp"
#include "qtorus/semilattice.hpp"
#include "qtorus/text.hpp"
#include "qtorus/torus.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qtorus;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool gQuiet = false;

void progress(const std::string& message) {
  if (!gQuiet) std::cerr << message << "\n";
}

std::string rowString(const Gf2Matrix& m, int i) {
  std::string out;
  for (int j = 0; j < m.cols(); ++j) out.push_back(m.get(i, j) ? '1' : '0');
  return out;
}

ordered_json gf2MatrixJson(const Gf2Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(rowString(m, i));
  return rows;
}

std::string memberString(int n, std::uint32_t value) {
  std::string out;
  for (int k = 0; k < n; ++k) out.push_back((value >> k) & 1 ? '1' : '0');
  return out;
}

ordered_json witnessJson(const IntUnimodularMatrix& w) {
  ordered_json entries = ordered_json::array();
  for (int i = 0; i < w.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < w.size(); ++j) row.push_back(w.get(i, j));
    entries.push_back(row);
  }
  ordered_json ops = ordered_json::array();
  for (const ElementaryOp& op : w.opLog()) ops.push_back(op.describe());
  ordered_json out;
  out["matrix"] = entries;
  out["det"] = w.determinant();
  out["ops"] = ops;
  return out;
}

ordered_json centerJson(const GradedSubgroup& center) {
  ordered_json out;
  if (center.scaleProfile) {
    out["profile"] = *center.scaleProfile;
  } else {
    out["profile"] = nullptr;
  }
  ordered_json gens = ordered_json::array();
  for (const auto& g : center.generators) gens.push_back(g);
  out["generators"] = gens;
  out["latticeIndex"] = center.indexInLattice();
  return out;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------- normal-form

int runNormalForm(const std::string& matrixText) {
  ElementaryMatrix e = parseElementary(matrixText);
  NormalFormResult result = reduce(e);
  bool verified = verifyWitness(e, result);
  ordered_json doc;
  doc["n"] = result.n;
  doc["l"] = result.l;
  doc["matrix"] = formatElementary(e);
  doc["normalForm"] = formatElementary(result.target);
  doc["witness"] = witnessJson(result.witness);
  doc["verified"] = verified;
  emit(doc);
  if (!verified) throw VerificationFailure("normal-form witness rejected");
  return kExitOk;
}

// ------------------------------------------------------------------- classify

int runClassify(const std::string& matrixText, const std::string& signsText) {
  ElementaryMatrix e = parseElementary(matrixText);
  Involution tau = parseInvolution(signsText);
  if (tau.n() != e.size()) {
    throw std::invalid_argument("involution length " + std::to_string(tau.n()) +
                                " does not match matrix size " +
                                std::to_string(e.size()));
  }
  InvolutionClass cls = classify(e, tau);
  CanonicalPair target = canonicalInvolution(cls.kind, cls.l, cls.n);

  // Independent monomial replay of the witness.
  auto [me, mt] = oracle::monomialTransport(e, tau, cls.witness.mod2());
  bool verified = (me == target.matrix) && (mt == target.involution) &&
                  cls.witness.isUnimodular();

  CosetPattern pattern = fromInvolution(e, tau);
  ordered_json doc;
  doc["n"] = cls.n;
  doc["l"] = cls.l;
  doc["kind"] = kindName(cls.kind);
  doc["canonicalMatrix"] = formatElementary(target.matrix);
  doc["canonicalInvolution"] = formatInvolution(target.involution);
  doc["witness"] = witnessJson(cls.witness);
  doc["index"] = pattern.size();
  doc["saturation"] = saturationNumber(pattern);
  doc["twist"] = twistNumber(pattern);
  doc["center"] = centerJson(involutionCenter(e, tau));
  doc["verified"] = verified;
  emit(doc);
  if (!verified) throw VerificationFailure("classification witness rejected");
  return kExitOk;
}

// ---------------------------------------------------------------- semilattice

ordered_json patternInfoJson(const CosetPattern& p) {
  ordered_json doc;
  doc["n"] = p.rank();
  doc["pattern"] = formatPattern(p);
  doc["index"] = p.size();
  doc["containsZero"] = p.containsZero();
  doc["spans"] = p.spans();
  doc["semilattice"] = isSemilatticeInLambda(p);
  CosetPattern sat = saturatedSubgroup(p);
  doc["saturatedSubgroup"] = formatPattern(sat);
  doc["saturation"] = saturationNumber(p);
  doc["twist"] = twistNumber(p);
  return doc;
}

int runSemilatticeInfo(const std::string& patternText) {
  emit(patternInfoJson(parsePattern(patternText)));
  return kExitOk;
}

int runSemilatticeFrom(const std::string& matrixText,
                       const std::string& signsText) {
  ElementaryMatrix e = parseElementary(matrixText);
  Involution tau = parseInvolution(signsText);
  if (tau.n() != e.size()) {
    throw std::invalid_argument("involution length " + std::to_string(tau.n()) +
                                " does not match matrix size " +
                                std::to_string(e.size()));
  }
  emit(patternInfoJson(fromInvolution(e, tau)));
  return kExitOk;
}

int runSemilatticeSimilar(const std::string& leftText,
                          const std::string& rightText) {
  CosetPattern p = parsePattern(leftText);
  CosetPattern q = parsePattern(rightText);
  std::optional<SimilarityWitness> witness = similar(p, q);
  ordered_json doc;
  doc["n"] = p.rank();
  doc["left"] = formatPattern(p);
  doc["right"] = formatPattern(q);
  doc["similar"] = witness.has_value();
  if (witness) {
    ordered_json w;
    w["translation"] = memberString(p.rank(), witness->translation);
    w["map"] = gf2MatrixJson(witness->map);
    doc["witness"] = w;
  } else {
    doc["witness"] = nullptr;
  }
  emit(doc);
  return kExitOk;
}

// --------------------------------------------------------------------- census

int runCensus(int n, const std::string& scope, const std::string& format,
              int jobs) {
  if (scope != "involutive" && scope != "all") {
    throw std::invalid_argument("scope must be 'involutive' or 'all'");
  }
  if (format != "json" && format != "csv") {
    throw std::invalid_argument("format must be 'json' or 'csv'");
  }
  struct Row {
    std::string kind;
    int l = 0;
    std::uint64_t index = 0;
    int saturation = 0;
    std::string representative;
    ordered_json extra;
  };
  std::vector<Row> rows;
  if (scope == "involutive") {
    progress("census: sweeping all elementary matrices at n = " +
             std::to_string(n));
    InvolutiveCensus census = censusInvolutive(n, jobs);
    for (const CensusClass& cls : census.classes) {
      Row row;
      row.kind = kindName(cls.kind);
      row.l = cls.l;
      row.index = cls.index;
      row.saturation = cls.saturation;
      row.representative = formatPattern(cls.representative);
      row.extra["population"] = cls.population;
      rows.push_back(std::move(row));
    }
  } else {
    progress("census: orbit partition of all spanning patterns at n = " +
             std::to_string(n));
    AllCensus census = censusAll(n);
    for (const PatternClass& cls : census.classes) {
      Row row;
      if (cls.involutiveTag) {
        row.kind = kindName(cls.involutiveTag->first);
        row.l = cls.involutiveTag->second;
      } else {
        row.kind = "other";
        row.l = -1;
      }
      row.index = cls.index;
      row.saturation = cls.saturation;
      row.representative = formatPattern(cls.representative);
      row.extra["orbitSize"] = cls.orbitSize;
      row.extra["twist"] = cls.twist;
      rows.push_back(std::move(row));
    }
  }
  if (format == "csv") {
    std::cout << "n,kind,l,index,saturation,representative\n";
    for (const Row& row : rows) {
      std::cout << n << "," << row.kind << "," << row.l << "," << row.index
                << "," << row.saturation << ",\"" << row.representative
                << "\"\n";
    }
    return kExitOk;
  }
  ordered_json doc;
  doc["n"] = n;
  doc["scope"] = scope;
  doc["count"] = rows.size();
  ordered_json classes = ordered_json::array();
  for (const Row& row : rows) {
    ordered_json cls;
    cls["n"] = n;
    cls["kind"] = row.kind;
    cls["l"] = row.l;
    cls["index"] = row.index;
    cls["saturation"] = row.saturation;
    cls["representative"] = row.representative;
    for (auto& [key, value] : row.extra.items()) cls[key] = value;
    classes.push_back(cls);
  }
  doc["classes"] = classes;
  emit(doc);
  return kExitOk;
}

// ---------------------------------------------------------------------- roots

int runRootsDump(int r, int n, const std::string& patternText, int box) {
  EARSSpec spec;
  spec.r = r;
  spec.n = n;
  spec.pattern = parsePattern(patternText);
  if (spec.pattern.rank() != n) {
    throw std::invalid_argument("pattern rank " +
                                std::to_string(spec.pattern.rank()) +
                                " does not match nullity " + std::to_string(n));
  }
  std::vector<RootRecord> roots = generateRoots(spec, box);
  for (const RootRecord& root : roots) {
    ordered_json line;
    line["stratum"] = stratumName(root.stratum);
    line["finite"] = root.finite;
    line["lambda"] = root.lambda;
    std::cout << line.dump() << "\n";
  }
  progress("roots: " + std::to_string(roots.size()) + " roots in the window");
  return kExitOk;
}

int runRootsClasses(int n, int r, const std::string& format) {
  if (format != "json" && format != "csv") {
    throw std::invalid_argument("format must be 'json' or 'csv'");
  }
  EalaCensus census = countEalaClasses(n, r);
  if (format == "csv") {
    std::cout << "n,r,count\n";
    std::cout << census.n << "," << census.r << "," << census.count << "\n";
    return kExitOk;
  }
  ordered_json doc;
  doc["n"] = census.n;
  doc["r"] = census.r;
  doc["count"] = census.count;
  ordered_json classes = ordered_json::array();
  for (const EalaClass& cls : census.classes) {
    ordered_json c;
    c["labels"] = cls.labels;
    c["representative"] = formatPattern(cls.representative);
    c["index"] = cls.index;
    c["saturation"] = cls.saturation;
    c["twist"] = cls.twist;
    classes.push_back(c);
  }
  doc["classes"] = classes;
  emit(doc);
  return kExitOk;
}

int runRootsCompare(int n, int t) {
  TwistCompareReport report = compareClassSets(n, t);
  ordered_json doc;
  doc["n"] = report.n;
  doc["t"] = report.t;
  doc["rCount"] = report.rCount;
  doc["lrCount"] = report.lrCount;
  doc["lrSubset"] = report.lrSubset;
  doc["strict"] = report.strict;
  doc["notes"] = report.notes;
  emit(doc);
  return kExitOk;
}

// --------------------------------------------------------------------- verify

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

CheckResult checkIndexFormula(int maxN) {
  CheckResult check{"index-formula-vs-monomial-count", true, ""};
  for (int n = 1; n <= maxN; ++n) {
    std::vector<std::pair<InvolutionKind, int>> grid;
    for (int l = 0; 2 * l <= n; ++l) grid.emplace_back(InvolutionKind::Main, l);
    for (int l = 0; 2 * l + 1 <= n; ++l) {
      grid.emplace_back(InvolutionKind::Tau1, l);
    }
    for (int l = 1; 2 * l <= n; ++l) grid.emplace_back(InvolutionKind::Tau2, l);
    for (auto [kind, l] : grid) {
      std::uint64_t formula = indexFormula(kind, l, n);
      std::uint64_t counted = oracle::bruteIndexCount(kind, l, n);
      if (formula != counted) {
        check.ok = false;
        check.detail = "mismatch at kind=" + kindName(kind) +
                       " l=" + std::to_string(l) + " n=" + std::to_string(n) +
                       ": formula " + std::to_string(formula) + " vs count " +
                       std::to_string(counted);
        return check;
      }
    }
  }
  check.detail = "full grid up to n = " + std::to_string(maxN);
  return check;
}

CheckResult checkReduceVsGeneric(int randomCases, std::mt19937_64& rng) {
  CheckResult check{"reduce-vs-generic-rank", true, ""};
  for (int n = 1; n <= 5; ++n) {
    int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
      ElementaryMatrix e = oracle::unpackMatrix(n, mask);
      NormalFormResult r = reduce(e);
      if (r.l != oracle::genericReduce(e) || !verifyWitness(e, r)) {
        check.ok = false;
        check.detail = "mismatch at n=" + std::to_string(n) +
                       " mask=" + std::to_string(mask);
        return check;
      }
    }
  }
  for (int i = 0; i < randomCases; ++i) {
    int n = 6 + static_cast<int>(rng() % 7);
    ElementaryMatrix e = oracle::randomElementary(n, rng);
    NormalFormResult r = reduce(e);
    if (r.l != oracle::genericReduce(e) || !verifyWitness(e, r)) {
      check.ok = false;
      check.detail = "random mismatch at case " + std::to_string(i);
      return check;
    }
  }
  check.detail = "exhaustive n <= 5 plus " + std::to_string(randomCases) +
                 " random cases at 6 <= n <= 12";
  return check;
}

CheckResult checkClassifyVsOrbits(int maxN) {
  CheckResult check{"classify-vs-orbit-partition", true, ""};
  for (int n = 1; n <= maxN; ++n) {
    std::vector<std::vector<oracle::PackedPair>> orbits =
        oracle::bruteOrbitPartition(n);
    for (const auto& orbit : orbits) {
      InvolutionKind kind = InvolutionKind::Main;
      int l = -1;
      for (std::size_t at = 0; at < orbit.size(); ++at) {
        ElementaryMatrix e = oracle::unpackMatrix(n, orbit[at].matrixMask);
        Involution tau = Involution::allPlus(n);
        tau.minus.bits = orbit[at].minusMask;
        InvolutionClass cls = classify(e, tau);
        if (at == 0) {
          kind = cls.kind;
          l = cls.l;
        } else if (cls.kind != kind || cls.l != l) {
          check.ok = false;
          check.detail = "orbit splits at n=" + std::to_string(n);
          return check;
        }
      }
    }
    // Distinct canonical pairs must also sit in distinct orbits: count them.
    std::size_t canonicalCount = 0;
    for (int l = 0; 2 * l <= n; ++l) {
      ++canonicalCount;                      // Main
      if (2 * l + 1 <= n) ++canonicalCount;  // Tau1
      if (l >= 1) ++canonicalCount;          // Tau2
    }
    if (orbits.size() != canonicalCount) {
      check.ok = false;
      check.detail = "orbit count " + std::to_string(orbits.size()) +
                     " differs from canonical-pair count " +
                     std::to_string(canonicalCount) +
                     " at n=" + std::to_string(n);
      return check;
    }
  }
  check.detail = "all pairs up to n = " + std::to_string(maxN);
  return check;
}

CheckResult checkSemilatticeAxioms() {
  CheckResult check{"semilattice-axiom-replay", true, ""};
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<InvolutionKind, int>> grid;
    for (int l = 0; 2 * l <= n; ++l) grid.emplace_back(InvolutionKind::Main, l);
    for (int l = 0; 2 * l + 1 <= n; ++l) {
      grid.emplace_back(InvolutionKind::Tau1, l);
    }
    for (int l = 1; 2 * l <= n; ++l) grid.emplace_back(InvolutionKind::Tau2, l);
    for (auto [kind, l] : grid) {
      CanonicalPair pair = canonicalInvolution(kind, l, n);
      CosetPattern pattern = fromInvolution(pair.matrix, pair.involution);
      auto points = oracle::latticePoints(pattern, 2);
      if (!oracle::semilatticeAxiomCheck(points, pattern, 2)) {
        check.ok = false;
        check.detail = "axioms fail for kind=" + kindName(kind) +
                       " l=" + std::to_string(l) + " n=" + std::to_string(n);
        return check;
      }
    }
  }
  check.detail = "canonical patterns up to n = 4, radius 2";
  return check;
}

CheckResult checkSimilarVsBrute(bool deep) {
  CheckResult check{"similar-vs-brute-sweep", true, ""};
  int maxN = 3;
  std::size_t pairBudget = deep ? 40 : 200;  // n=4 pairs are costly
  for (int n = 2; n <= maxN; ++n) {
    std::vector<PatternClass> classes = extendedCensus(n);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = i; j < classes.size(); ++j) {
        auto fast = similar(classes[i].representative,
                            classes[j].representative);
        auto brute = oracle::bruteSimilar(classes[i].representative,
                                          classes[j].representative);
        if (fast.has_value() != brute.has_value()) {
          check.ok = false;
          check.detail = "disagreement at n=" + std::to_string(n) + " (" +
                         std::to_string(i) + "," + std::to_string(j) + ")";
          return check;
        }
      }
    }
  }
  if (deep) {
    std::vector<PatternClass> classes = extendedCensus(4);
    std::size_t used = 0;
    for (std::size_t i = 0; i < classes.size() && used < pairBudget; ++i) {
      for (std::size_t j = i; j < classes.size() && used < pairBudget; ++j) {
        auto fast = similar(classes[i].representative,
                            classes[j].representative);
        auto brute = oracle::bruteSimilar(classes[i].representative,
                                          classes[j].representative);
        ++used;
        if (fast.has_value() != brute.has_value()) {
          check.ok = false;
          check.detail = "deep disagreement at n=4 (" + std::to_string(i) +
                         "," + std::to_string(j) + ")";
          return check;
        }
      }
    }
  }
  check.detail = deep ? "exhaustive n <= 3 plus sampled n = 4 pairs"
                      : "exhaustive class pairs at n <= 3";
  return check;
}

int runVerify(bool deep, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> checks;
  progress("verify: index formulas");
  checks.push_back(checkIndexFormula(deep ? 12 : 8));
  progress("verify: normal forms");
  checks.push_back(checkReduceVsGeneric(deep ? 10000 : 2000, rng));
  progress("verify: classification orbits");
  checks.push_back(checkClassifyVsOrbits(deep ? 4 : 3));
  progress("verify: semilattice axioms");
  checks.push_back(checkSemilatticeAxioms());
  progress("verify: similarity decisions");
  checks.push_back(checkSimilarVsBrute(deep));
  bool ok = true;
  ordered_json list = ordered_json::array();
  for (const CheckResult& check : checks) {
    ordered_json c;
    c["name"] = check.name;
    c["status"] = check.ok ? "ok" : "fail";
    c["detail"] = check.detail;
    list.push_back(c);
    ok = ok && check.ok;
  }
  ordered_json doc;
  doc["seed"] = seed;
  doc["deep"] = deep;
  doc["checks"] = list;
  doc["ok"] = ok;
  emit(doc);
  if (!ok) throw VerificationFailure("oracle suite found a mismatch");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact classification of elementary quantum tori with graded "
      "involution: normal forms, involution types, semilattice invariants, "
      "censuses, and type-C extended affine root systems."};
  app.name("qtorus");
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs,
                 "Worker threads for sweeps (default: all cores; the "
                 "TORUS_JOBS environment variable overrides this flag)");
  app.add_flag("--quiet", gQuiet, "Suppress progress messages on stderr");

  std::string matrixText, signsText, leftText, rightText, patternText;
  int censusN = 1;
  std::string scope = "involutive";
  std::string format = "json";
  int rootsR = 3, rootsN = 1, rootsBox = 1, rootsT = 0;
  bool deep = false;
  std::uint64_t seed = 20240817;

  CLI::App* normalForm = app.add_subcommand(
      "normal-form", "Reduce an elementary matrix to h_{l,n} with a witness");
  normalForm->add_option("matrix", matrixText, "Matrix literal, e.g. +-+/-++/+++")
      ->required();

  CLI::App* classifyCmd = app.add_subcommand(
      "classify", "Classify an (elementary matrix, involution) pair");
  classifyCmd->add_option("matrix", matrixText, "Matrix literal")->required();
  classifyCmd->add_option("signs", signsText, "Involution literal, e.g. ++-")
      ->required();

  CLI::App* semilattice =
      app.add_subcommand("semilattice", "Coset-pattern semilattice operations");
  semilattice->require_subcommand(1);
  CLI::App* slInfo =
      semilattice->add_subcommand("info", "Invariants of a coset pattern");
  slInfo->add_option("pattern", patternText, "Pattern literal, e.g. 00,10,01")
      ->required();
  CLI::App* slFrom = semilattice->add_subcommand(
      "from", "Fixed-degree pattern S(E, tau) of a pair");
  slFrom->add_option("matrix", matrixText, "Matrix literal")->required();
  slFrom->add_option("signs", signsText, "Involution literal")->required();
  CLI::App* slSimilar = semilattice->add_subcommand(
      "similar", "Similarity decision with witness (rank <= 5)");
  slSimilar->add_option("left", leftText, "First pattern literal")->required();
  slSimilar->add_option("right", rightText, "Second pattern literal")
      ->required();

  CLI::App* census = app.add_subcommand(
      "census", "Similarity census of semilattice patterns");
  census->add_option("n", censusN, "Rank (1..5 involutive, 1..4 all)")
      ->required();
  census->add_option("--scope", scope, "involutive (default) or all");
  census->add_option("--format", format, "json (default) or csv");

  CLI::App* roots = app.add_subcommand(
      "roots", "Type-C extended affine root systems");
  roots->require_subcommand(1);
  CLI::App* rootsDump = roots->add_subcommand(
      "dump", "Emit all roots with bounded isotropic part as JSON lines");
  rootsDump->add_option("r", rootsR, "Finite rank (>= 3)")->required();
  rootsDump->add_option("n", rootsN, "Nullity (rank of the lattice)")
      ->required();
  rootsDump->add_option("pattern", patternText,
                        "Long-root pattern literal ('' for nullity 0)")
      ->required();
  rootsDump->add_option("--box", rootsBox, "Max-norm bound on lattice parts");
  CLI::App* rootsClasses = roots->add_subcommand(
      "classes", "Similarity classes behind nullity-n type-C root systems");
  rootsClasses->add_option("n", rootsN, "Nullity (1..5)")->required();
  rootsClasses->add_option("r", rootsR, "Finite rank (>= 3)")->required();
  rootsClasses->add_option("--format", format, "json (default) or csv");
  CLI::App* rootsCompare = roots->add_subcommand(
      "compare", "Compare involution-origin classes against the full census");
  rootsCompare->add_option("n", rootsN, "Rank (1..4)")->required();
  rootsCompare->add_option("t", rootsT, "Twist number (0..n)")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the brute-force oracle suite against the closed forms");
  verify->add_flag("--deep", deep,
                   "Larger bounds (adds the full n = 4 orbit sweep; minutes)");
  verify->add_option("--seed", seed, "Seed for the randomized checks");

  // Matrix, sign, and pattern arguments may legitimately start with '-' or
  // equal "++"/"--", which the option parser would otherwise swallow.  For
  // the leaf commands that take only such positionals, inject a positional
  // mark after the command path so every remaining token is data.
  std::vector<std::string> args(argv + 1, argv + argc);
  std::size_t at = 0;
  while (at < args.size()) {
    if (args[at] == "--quiet" || args[at].rfind("--jobs=", 0) == 0) {
      ++at;
    } else if (args[at] == "--jobs" && at + 1 < args.size()) {
      at += 2;
    } else {
      break;
    }
  }
  std::size_t path = 0;
  if (at < args.size()) {
    if (args[at] == "normal-form" || args[at] == "classify") {
      path = at + 1;
    } else if (args[at] == "semilattice" && at + 1 < args.size() &&
               (args[at + 1] == "info" || args[at + 1] == "from" ||
                args[at + 1] == "similar")) {
      path = at + 2;
    }
  }
  if (path > 0) {
    bool escape = !(path < args.size() && args[path] == "--");
    for (std::size_t i = path; i < args.size(); ++i) {
      if (args[i] == "-h" || args[i] == "--help" || args[i] == "--help-all" ||
          args[i] == "--version") {
        escape = false;
      }
    }
    if (escape) {
      args.insert(args.begin() + static_cast<std::ptrdiff_t>(path), "--");
    }
  }
  std::reverse(args.begin(), args.end());  // parse(vector) wants newest last
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*normalForm) return runNormalForm(matrixText);
    if (*classifyCmd) return runClassify(matrixText, signsText);
    if (*slInfo) return runSemilatticeInfo(patternText);
    if (*slFrom) return runSemilatticeFrom(matrixText, signsText);
    if (*slSimilar) return runSemilatticeSimilar(leftText, rightText);
    if (*census) return runCensus(censusN, scope, format, jobs);
    if (*rootsDump)
      return runRootsDump(rootsR, rootsN, patternText, rootsBox);
    if (*rootsClasses) return runRootsClasses(rootsN, rootsR, format);
    if (*rootsCompare) return runRootsCompare(rootsN, rootsT);
    if (*verify) return runVerify(deep, seed);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerify;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitUsage;
}
