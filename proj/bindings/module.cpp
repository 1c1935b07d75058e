// Python bindings: thin text-in / dict-out wrappers over the C++ core.
// Matrices, involutions, and patterns travel as the same literals the CLI
// uses ('+-+/-++/+++', '++-', '000,110,101,011').

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtorus/involution.hpp"
#include "qtorus/normal_form.hpp"
#include "qtorus/oracle.hpp"
#include "qtorus/root_system.hpp"
#include "qtorus/semilattice.hpp"
#include "qtorus/text.hpp"
#include "qtorus/torus.hpp"

namespace py = pybind11;
using namespace qtorus;

namespace {

InvolutionKind kindFromName(const std::string& name) {
  if (name == "main") return InvolutionKind::Main;
  if (name == "tau1") return InvolutionKind::Tau1;
  if (name == "tau2") return InvolutionKind::Tau2;
  throw std::invalid_argument("unknown involution kind '" + name +
                              "' (want main, tau1, or tau2)");
}

std::vector<std::string> gf2MatrixRows(const Gf2Matrix& m) {
  std::vector<std::string> rows;
  for (int i = 0; i < m.rows(); ++i) {
    std::string row;
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.get(i, j) ? '1' : '0');
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string memberString(int n, std::uint32_t value) {
  std::string out;
  for (int k = 0; k < n; ++k) out.push_back((value >> k) & 1 ? '1' : '0');
  return out;
}

py::dict witnessDict(const IntUnimodularMatrix& w) {
  std::vector<std::vector<std::int64_t>> entries;
  for (int i = 0; i < w.size(); ++i) {
    std::vector<std::int64_t> row;
    for (int j = 0; j < w.size(); ++j) row.push_back(w.get(i, j));
    entries.push_back(std::move(row));
  }
  std::vector<std::string> ops;
  for (const ElementaryOp& op : w.opLog()) ops.push_back(op.describe());
  py::dict out;
  out["matrix"] = entries;
  out["det"] = w.determinant();
  out["ops"] = ops;
  return out;
}

py::dict patternDict(const CosetPattern& p) {
  py::dict out;
  out["n"] = p.rank();
  out["pattern"] = formatPattern(p);
  out["index"] = p.size();
  out["semilattice"] = isSemilatticeInLambda(p);
  out["saturatedSubgroup"] = formatPattern(saturatedSubgroup(p));
  out["saturation"] = saturationNumber(p);
  out["twist"] = twistNumber(p);
  return out;
}

py::dict normalFormPy(const std::string& matrixText) {
  ElementaryMatrix e = parseElementary(matrixText);
  NormalFormResult result = reduce(e);
  py::dict out;
  out["n"] = result.n;
  out["l"] = result.l;
  out["normalForm"] = formatElementary(result.target);
  out["witness"] = witnessDict(result.witness);
  out["verified"] = verifyWitness(e, result);
  return out;
}

py::dict classifyPy(const std::string& matrixText,
                    const std::string& signsText) {
  ElementaryMatrix e = parseElementary(matrixText);
  Involution tau = parseInvolution(signsText);
  InvolutionClass cls = classify(e, tau);
  CanonicalPair target = canonicalInvolution(cls.kind, cls.l, cls.n);
  auto [me, mt] = oracle::monomialTransport(e, tau, cls.witness.mod2());
  CosetPattern pattern = fromInvolution(e, tau);
  py::dict out;
  out["n"] = cls.n;
  out["l"] = cls.l;
  out["kind"] = kindName(cls.kind);
  out["canonicalMatrix"] = formatElementary(target.matrix);
  out["canonicalInvolution"] = formatInvolution(target.involution);
  out["witness"] = witnessDict(cls.witness);
  out["index"] = pattern.size();
  out["saturation"] = saturationNumber(pattern);
  out["verified"] = (me == target.matrix) && (mt == target.involution);
  return out;
}

py::object similarPy(const std::string& leftText,
                     const std::string& rightText) {
  CosetPattern p = parsePattern(leftText);
  CosetPattern q = parsePattern(rightText);
  std::optional<SimilarityWitness> witness = similar(p, q);
  if (!witness) return py::none();
  py::dict out;
  out["translation"] = memberString(p.rank(), witness->translation);
  out["map"] = gf2MatrixRows(witness->map);
  return out;
}

py::list censusInvolutivePy(int n, int jobs) {
  InvolutiveCensus census = censusInvolutive(n, jobs);
  py::list classes;
  for (const CensusClass& cls : census.classes) {
    py::dict c;
    c["n"] = n;
    c["kind"] = kindName(cls.kind);
    c["l"] = cls.l;
    c["index"] = cls.index;
    c["saturation"] = cls.saturation;
    c["representative"] = formatPattern(cls.representative);
    c["population"] = cls.population;
    classes.append(c);
  }
  return classes;
}

py::dict censusAllPy(int n) {
  AllCensus census = censusAll(n);
  py::dict out;
  out["n"] = census.n;
  out["count"] = census.count;
  py::list classes;
  for (const PatternClass& cls : census.classes) {
    py::dict c;
    c["representative"] = formatPattern(cls.representative);
    c["orbitSize"] = cls.orbitSize;
    c["index"] = cls.index;
    c["saturation"] = cls.saturation;
    c["twist"] = cls.twist;
    if (cls.involutiveTag) {
      c["kind"] = kindName(cls.involutiveTag->first);
      c["l"] = cls.involutiveTag->second;
    } else {
      c["kind"] = py::none();
      c["l"] = py::none();
    }
    classes.append(c);
  }
  out["classes"] = classes;
  return out;
}

py::dict countEalaClassesPy(int n, int r) {
  EalaCensus census = countEalaClasses(n, r);
  py::dict out;
  out["n"] = census.n;
  out["r"] = census.r;
  out["count"] = census.count;
  py::list classes;
  for (const EalaClass& cls : census.classes) {
    py::dict c;
    c["labels"] = cls.labels;
    c["representative"] = formatPattern(cls.representative);
    c["index"] = cls.index;
    c["saturation"] = cls.saturation;
    c["twist"] = cls.twist;
    classes.append(c);
  }
  out["classes"] = classes;
  return out;
}

py::dict compareClassSetsPy(int n, int t) {
  TwistCompareReport report = compareClassSets(n, t);
  py::dict out;
  out["n"] = report.n;
  out["t"] = report.t;
  out["rCount"] = report.rCount;
  out["lrCount"] = report.lrCount;
  out["lrSubset"] = report.lrSubset;
  out["strict"] = report.strict;
  out["notes"] = report.notes;
  return out;
}

py::list generateRootsPy(int r, int n, const std::string& patternText,
                         int box) {
  EARSSpec spec;
  spec.r = r;
  spec.n = n;
  spec.pattern = parsePattern(patternText);
  py::list out;
  for (const RootRecord& root : generateRoots(spec, box)) {
    py::dict rec;
    rec["stratum"] = stratumName(root.stratum);
    rec["finite"] = root.finite;
    rec["lambda"] = root.lambda;
    out.append(rec);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(qtorus, m) {
  m.doc() =
      "Exact classification of elementary quantum tori with graded "
      "involution: normal forms, involution types, semilattice invariants, "
      "censuses, and type-C extended affine root systems.";

  m.def("normal_form", &normalFormPy, py::arg("matrix"),
        "Reduce an elementary matrix literal to its normal form h_{l,n}; "
        "returns l, the normal form, and a verified integer witness.");
  m.def("classify", &classifyPy, py::arg("matrix"), py::arg("signs"),
        "Classify an (elementary matrix, involution) pair up to equivalence; "
        "returns the kind (main/tau1/tau2), l, and a verified witness.");
  m.def(
      "semilattice_info",
      [](const std::string& text) { return patternDict(parsePattern(text)); },
      py::arg("pattern"), "Invariants of a coset-pattern literal.");
  m.def(
      "from_involution",
      [](const std::string& matrix, const std::string& signs) {
        return formatPattern(
            fromInvolution(parseElementary(matrix), parseInvolution(signs)));
      },
      py::arg("matrix"), py::arg("signs"),
      "Pattern literal of the fixed-degree semilattice S(E, tau).");
  m.def("similar", &similarPy, py::arg("left"), py::arg("right"),
        "Similarity witness between two pattern literals, or None.");
  m.def(
      "lambda_t",
      [](int n, int t) { return formatPattern(lambdaT(n, t)); },
      py::arg("n"), py::arg("t"),
      "Pattern literal of the twist-t reference semilattice Lambda^(t).");
  m.def(
      "index_formula",
      [](const std::string& kind, int l, int n) {
        return indexFormula(kindFromName(kind), l, n);
      },
      py::arg("kind"), py::arg("l"), py::arg("n"),
      "Closed-form index [Lambda : S] for the canonical pair.");
  m.def(
      "brute_index_count",
      [](const std::string& kind, int l, int n) {
        return oracle::bruteIndexCount(kindFromName(kind), l, n);
      },
      py::arg("kind"), py::arg("l"), py::arg("n"),
      "Same index counted monomial-by-monomial (independent oracle).");
  m.def("census_involutive", &censusInvolutivePy, py::arg("n"),
        py::arg("jobs") = 0,
        "Certified similarity census of the patterns S(E, main) at rank n.");
  m.def("census_all", &censusAllPy, py::arg("n"),
        "Similarity census of all spanning patterns at rank n (n <= 4).");
  m.def("count_eala_classes", &countEalaClassesPy, py::arg("n"), py::arg("r"),
        "Similarity classes behind nullity-n type-C extended affine root "
        "systems of finite rank r.");
  m.def("compare_class_sets", &compareClassSetsPy, py::arg("n"), py::arg("t"),
        "Involution-origin classes versus the full census at twist t.");
  m.def("generate_roots", &generateRootsPy, py::arg("r"), py::arg("n"),
        py::arg("pattern"), py::arg("box") = 1,
        "All roots of R(Lambda, S) with lattice part bounded by box.");
}
