#include "qtorus/semilattice.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <functional>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "qtorus/parallel.hpp"

namespace qtorus {

CosetPattern::CosetPattern(int n) {
  if (n < 0 || n > kMaxPatternRank) {
    throw std::invalid_argument("pattern rank out of range (0..16)");
  }
  n_ = n;
  std::size_t bits = std::size_t{1} << n;
  words_.assign((bits + 63) / 64, 0);
}

CosetPattern CosetPattern::full(int n) {
  CosetPattern p(n);
  std::size_t bits = std::size_t{1} << n;
  for (std::size_t k = 0; k < bits; ++k) {
    p.words_[k >> 6] |= std::uint64_t{1} << (k & 63);
  }
  return p;
}

CosetPattern CosetPattern::zeroOnly(int n) {
  CosetPattern p(n);
  p.insert(0);
  return p;
}

CosetPattern CosetPattern::fromMask(int n, std::uint32_t mask) {
  if (n < 0 || n > 5) {
    throw std::invalid_argument("mask form requires rank <= 5");
  }
  CosetPattern p(n);
  std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t v = 0; v < limit; ++v) {
    if (mask & (std::uint32_t{1} << v)) p.insert(v);
  }
  if (mask >> limit) {
    throw std::invalid_argument("mask has members beyond the rank");
  }
  return p;
}

std::uint64_t CosetPattern::size() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

bool CosetPattern::contains(std::uint32_t member) const {
  if (member >= (std::uint32_t{1} << n_)) {
    throw std::invalid_argument("member out of range for pattern rank");
  }
  return (words_[member >> 6] >> (member & 63)) & 1;
}

void CosetPattern::insert(std::uint32_t member) {
  if (member >= (std::uint32_t{1} << n_)) {
    throw std::invalid_argument("member out of range for pattern rank");
  }
  words_[member >> 6] |= std::uint64_t{1} << (member & 63);
}

std::vector<std::uint32_t> CosetPattern::members() const {
  std::vector<std::uint32_t> out;
  std::uint32_t limit = std::uint32_t{1} << n_;
  for (std::uint32_t v = 0; v < limit; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

std::uint32_t CosetPattern::toMask() const {
  if (n_ > 5) throw std::invalid_argument("mask form requires rank <= 5");
  std::uint32_t mask = 0;
  for (std::uint32_t v : members()) mask |= std::uint32_t{1} << v;
  return mask;
}

CosetPattern CosetPattern::translate(std::uint32_t sigma) const {
  if (sigma >= (std::uint32_t{1} << n_)) {
    throw std::invalid_argument("translation out of range for pattern rank");
  }
  CosetPattern out(n_);
  for (std::uint32_t v : members()) out.insert(v ^ sigma);
  return out;
}

CosetPattern CosetPattern::mapBy(const Gf2Matrix& g) const {
  if (g.rows() != n_ || g.cols() != n_) {
    throw std::invalid_argument("map dimension mismatch");
  }
  if (!g.isInvertible()) {
    throw std::invalid_argument("not a basis change: matrix is singular");
  }
  CosetPattern out(n_);
  for (std::uint32_t v : members()) {
    out.insert(g.apply(Gf2Vector(n_, v)).bits);
  }
  return out;
}

int CosetPattern::spanDimension() const {
  std::uint32_t basis[kMaxPatternRank] = {};
  int dim = 0;
  for (std::uint32_t v : members()) {
    for (int b = n_ - 1; b >= 0 && v; --b) {
      if (!((v >> b) & 1)) continue;
      if (basis[b]) {
        v ^= basis[b];
      } else {
        basis[b] = v;
        ++dim;
        break;
      }
    }
  }
  return dim;
}

CosetPattern fromInvolution(const ElementaryMatrix& e, const Involution& tau) {
  int n = e.size();
  if (n > kMaxPatternRank) {
    throw std::invalid_argument("pattern rank out of range (0..16)");
  }
  QuadraticFormGf2 q(e, tau);
  CosetPattern p(n);
  std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t v = 0; v < limit; ++v) {
    if (!q.eval(Gf2Vector(n, v))) p.insert(v);
  }
  return p;
}

bool isSemilatticeInLambda(const CosetPattern& p) {
  return p.containsZero() && p.spans();
}

std::uint64_t index(const CosetPattern& p) { return p.size(); }

std::uint64_t indexFormula(InvolutionKind kind, int l, int n) {
  if (n < 1 || l < 0 || 2 * l > n) {
    throw std::invalid_argument("index formula requires 0 <= 2l <= n, n >= 1");
  }
  std::uint64_t half = std::uint64_t{1} << (n - 1);
  std::uint64_t bump = std::uint64_t{1} << (n - l - 1);
  switch (kind) {
    case InvolutionKind::Main:
      return half + bump;
    case InvolutionKind::Tau1:
      if (2 * l + 1 > n) {
        throw std::invalid_argument(
            "tau1 requires a commuting generator: 2l + 1 <= n");
      }
      return half;
    case InvolutionKind::Tau2:
      if (l < 1) {
        throw std::invalid_argument("tau2 requires a hyperbolic block: l >= 1");
      }
      return half - bump;
  }
  throw std::invalid_argument("unknown involution kind");
}

CosetPattern saturatedSubgroup(const CosetPattern& p) {
  CosetPattern sigma(p.rank());
  std::vector<std::uint32_t> mem = p.members();
  for (std::uint32_t t : mem) {
    bool saturated = true;
    for (std::uint32_t m : mem) {
      if (!p.contains(t ^ m)) {
        saturated = false;
        break;
      }
    }
    if (saturated) sigma.insert(t);
  }
  return sigma;
}

int saturationNumber(const CosetPattern& p) {
  return p.rank() - saturatedSubgroup(p).spanDimension();
}

CosetPattern lambdaT(int n, int t) {
  if (n < 0 || n > kMaxPatternRank || t < 0 || t > n) {
    throw std::invalid_argument("lambdaT requires 0 <= t <= n");
  }
  CosetPattern p(n);
  std::uint32_t low = (std::uint32_t{1} << t) - 1;
  std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t v = 0; v < limit; ++v) {
    if ((v & low) == 0) p.insert(v);
  }
  return p;
}

namespace {

/// Image of a mask-coded pattern under the transvection v -> v + v_a e_b.
std::uint32_t transvectMask(int n, std::uint32_t mask, int a, int b) {
  std::uint32_t out = 0;
  std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t v = 0; v < limit; ++v) {
    if (mask & (std::uint32_t{1} << v)) {
      std::uint32_t w = v ^ (((v >> a) & 1u) << b);
      out |= std::uint32_t{1} << w;
    }
  }
  return out;
}

std::uint32_t translateMask(int n, std::uint32_t mask, std::uint32_t sigma) {
  std::uint32_t out = 0;
  std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t v = 0; v < limit; ++v) {
    if (mask & (std::uint32_t{1} << v)) out |= std::uint32_t{1} << (v ^ sigma);
  }
  return out;
}

struct FloodState {
  Gf2Matrix g;
  Gf2Matrix gInv;
  std::uint32_t sigma = 0;
};

Gf2Matrix transvectionMatrix(int n, int a, int b) {
  Gf2Matrix h = Gf2Matrix::identity(n);
  h.set(b, a, true);
  return h;
}

}  // namespace

std::pair<CosetPattern, SimilarityWitness> canonicalizePattern(
    const CosetPattern& p) {
  int n = p.rank();
  if (n < 1 || n > 4) {
    throw std::invalid_argument("pattern canonicalization requires rank <= 4");
  }
  if (!p.containsZero()) {
    throw std::invalid_argument("pattern canonicalization requires 0 in the pattern");
  }
  std::uint32_t start = p.toMask();
  std::unordered_map<std::uint32_t, FloodState> visited;
  visited.emplace(start,
                  FloodState{Gf2Matrix::identity(n), Gf2Matrix::identity(n), 0});
  std::queue<std::uint32_t> queue;
  queue.push(start);
  std::uint32_t best = start;
  while (!queue.empty()) {
    std::uint32_t cur = queue.front();
    queue.pop();
    FloodState state = visited.at(cur);
    if (cur < best) best = cur;
    auto visit = [&](std::uint32_t next, FloodState nextState) {
      if (visited.emplace(next, std::move(nextState)).second) queue.push(next);
    };
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        std::uint32_t next = transvectMask(n, cur, a, b);
        if (visited.count(next)) continue;
        Gf2Matrix h = transvectionMatrix(n, a, b);
        visit(next, FloodState{h * state.g, state.gInv * h, state.sigma});
      }
    }
    std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t u = 1; u < limit; ++u) {
      if (!(cur & (std::uint32_t{1} << u))) continue;
      std::uint32_t next = translateMask(n, cur, u);
      if (visited.count(next)) continue;
      std::uint32_t pullback = state.gInv.apply(Gf2Vector(n, u)).bits;
      visit(next, FloodState{state.g, state.gInv, state.sigma ^ pullback});
    }
  }
  const FloodState& win = visited.at(best);
  SimilarityWitness witness;
  witness.translation = win.sigma;
  witness.map = win.g;
  if (!p.contains(win.sigma) ||
      p.translate(win.sigma).mapBy(win.g).toMask() != best) {
    throw std::logic_error("canonicalization witness does not check out");
  }
  return {CosetPattern::fromMask(n, best), witness};
}

namespace {

/// Exhaustive search for an invertible g with g(p0) = q, ranks 5.
std::optional<Gf2Matrix> findLinearMap(const CosetPattern& p0,
                                       const CosetPattern& q) {
  int n = p0.rank();
  std::uint32_t limit = std::uint32_t{1} << n;
  std::vector<std::uint32_t> img(limit, 0);
  std::function<bool(int, std::uint32_t)> descend =
      [&](int k, std::uint32_t imageSet) -> bool {
    if (k == n) return true;
    std::uint32_t prev = std::uint32_t{1} << k;  // size of the settled span
    for (std::uint32_t w = 1; w < limit; ++w) {
      if (imageSet & (std::uint32_t{1} << w)) continue;  // dependent choice
      bool ok = true;
      for (std::uint32_t u = 0; u < prev; ++u) {
        if (p0.contains(u | prev) != q.contains(img[u] ^ w)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::uint32_t nextSet = imageSet;
      for (std::uint32_t u = 0; u < prev; ++u) {
        img[u | prev] = img[u] ^ w;
        nextSet |= std::uint32_t{1} << (img[u] ^ w);
      }
      if (descend(k + 1, nextSet)) return true;
    }
    return false;
  };
  if (!descend(0, 1u)) return std::nullopt;
  Gf2Matrix g(n, n);
  for (int k = 0; k < n; ++k) {
    std::uint32_t col = img[std::uint32_t{1} << k];
    for (int i = 0; i < n; ++i) g.set(i, k, (col >> i) & 1);
  }
  return g;
}

}  // namespace

std::optional<SimilarityWitness> similar(const CosetPattern& p,
                                         const CosetPattern& q) {
  if (p.rank() != q.rank()) {
    throw std::invalid_argument("similarity requires equal ranks");
  }
  int n = p.rank();
  if (n < 1 || n > 5) {
    throw std::invalid_argument("similarity decision requires 1 <= rank <= 5");
  }
  if (!p.containsZero() || !q.containsZero()) {
    throw std::invalid_argument("similarity requires 0 in both patterns");
  }
  if (p.size() != q.size() || p.spanDimension() != q.spanDimension() ||
      saturationNumber(p) != saturationNumber(q)) {
    return std::nullopt;
  }
  if (n <= 4) {
    auto [cp, wp] = canonicalizePattern(p);
    auto [cq, wq] = canonicalizePattern(q);
    if (!(cp == cq)) return std::nullopt;
    Gf2Matrix m = wq.map.inverse() * wp.map;
    std::uint32_t sigma =
        wp.translation ^ m.inverse().apply(Gf2Vector(n, wq.translation)).bits;
    SimilarityWitness witness{sigma, m};
    if (!p.contains(sigma) || !(p.translate(sigma).mapBy(m) == q)) {
      throw std::logic_error("similarity witness composition failed");
    }
    return witness;
  }
  for (std::uint32_t sigma : p.members()) {
    CosetPattern p0 = p.translate(sigma);
    std::optional<Gf2Matrix> g = findLinearMap(p0, q);
    if (!g) continue;
    if (!(p0.mapBy(*g) == q)) {
      throw std::logic_error("similarity search returned a bad map");
    }
    return SimilarityWitness{sigma, *g};
  }
  return std::nullopt;
}

InvolutiveCensus censusInvolutive(int n, int jobs) {
  if (n < 1 || n > 5) {
    throw std::invalid_argument("involutive census requires 1 <= n <= 5");
  }
  InvolutiveCensus census;
  census.n = n;
  std::vector<std::pair<InvolutionKind, int>> tags;
  for (int l = 0; 2 * l <= n; ++l) tags.emplace_back(InvolutionKind::Main, l);
  for (int l = 1; 2 * l + 1 <= n; ++l) tags.emplace_back(InvolutionKind::Tau1, l);
  for (int l = 2; 2 * l <= n; ++l) tags.emplace_back(InvolutionKind::Tau2, l);
  for (auto [kind, l] : tags) {
    CanonicalPair pair = canonicalInvolution(kind, l, n);
    CensusClass cls;
    cls.kind = kind;
    cls.l = l;
    cls.representative = fromInvolution(pair.matrix, pair.involution);
    cls.index = cls.representative.size();
    cls.saturation = saturationNumber(cls.representative);
    if (cls.index != indexFormula(kind, l, n)) {
      throw std::logic_error("census representative index contradicts formula");
    }
    census.classes.push_back(std::move(cls));
  }

  // Certification sweep: classify every elementary matrix with the main
  // involution and transport its pattern onto the class representative.
  int pairs = n * (n - 1) / 2;
  std::uint64_t total = std::uint64_t{1} << pairs;
  auto sweep = [&](std::uint64_t begin,
                   std::uint64_t end) -> std::vector<std::uint64_t> {
    std::vector<std::uint64_t> counts(census.classes.size(), 0);
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      Gf2Matrix bits(n, n);
      int slot = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++slot) {
          if ((mask >> slot) & 1) {
            bits.set(i, j, true);
            bits.set(j, i, true);
          }
        }
      }
      ElementaryMatrix e(bits);
      Involution main = Involution::allPlus(n);
      InvolutionClass cls = classify(e, main);
      std::size_t at = census.classes.size();
      for (std::size_t c = 0; c < census.classes.size(); ++c) {
        if (census.classes[c].kind == cls.kind && census.classes[c].l == cls.l) {
          at = c;
          break;
        }
      }
      if (at == census.classes.size()) {
        throw std::logic_error("census missed a class");
      }
      CosetPattern transported =
          fromInvolution(e, main).mapBy(cls.witness.mod2().inverse());
      if (!(transported == census.classes[at].representative)) {
        throw std::logic_error("transported pattern mismatch in census");
      }
      ++counts[at];
    }
    return counts;
  };
  std::vector<std::vector<std::uint64_t>> chunkCounts =
      parallelChunks<std::vector<std::uint64_t>>(total, jobs, sweep);
  for (const auto& counts : chunkCounts) {
    for (std::size_t c = 0; c < counts.size(); ++c) {
      census.classes[c].population += counts[c];
    }
  }
  for (const CensusClass& cls : census.classes) {
    if (cls.population == 0) {
      throw std::logic_error("census class with empty population");
    }
  }

  // The classes are genuinely distinct: pairwise non-similar representatives.
  for (std::size_t i = 0; i < census.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < census.classes.size(); ++j) {
      if (similar(census.classes[i].representative,
                  census.classes[j].representative)) {
        throw std::logic_error("two census classes are similar");
      }
    }
  }
  return census;
}

std::vector<PatternClass> extendedCensus(int n) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("pattern census requires 1 <= n <= 4");
  }
  std::uint32_t limit = std::uint32_t{1} << n;          // vectors
  std::uint64_t space = std::uint64_t{1} << (limit - 1);  // patterns / 2
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(space), 0);
  auto seenAt = [&](std::uint32_t mask) -> std::uint8_t& {
    // All masks here contain 0; drop that constant bit for indexing.
    return seen[static_cast<std::size_t>(mask >> 1)];
  };
  std::vector<PatternClass> classes;
  for (std::uint64_t half = 0; half < space; ++half) {
    std::uint32_t start = static_cast<std::uint32_t>(half << 1) | 1u;
    if (seenAt(start)) continue;
    std::uint32_t best = start;
    std::uint64_t orbit = 0;
    std::queue<std::uint32_t> queue;
    seenAt(start) = 1;
    queue.push(start);
    while (!queue.empty()) {
      std::uint32_t cur = queue.front();
      queue.pop();
      ++orbit;
      if (cur < best) best = cur;
      auto visit = [&](std::uint32_t next) {
        if (!seenAt(next)) {
          seenAt(next) = 1;
          queue.push(next);
        }
      };
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (a != b) visit(transvectMask(n, cur, a, b));
        }
      }
      for (std::uint32_t u = 1; u < limit; ++u) {
        if (cur & (std::uint32_t{1} << u)) visit(translateMask(n, cur, u));
      }
    }
    PatternClass cls;
    cls.representative = CosetPattern::fromMask(n, best);
    cls.orbitSize = orbit;
    cls.index = cls.representative.size();
    cls.saturation = saturationNumber(cls.representative);
    cls.twist = n - cls.representative.spanDimension();
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const PatternClass& a, const PatternClass& b) {
              return a.representative.toMask() < b.representative.toMask();
            });
  std::unordered_map<std::uint32_t, std::size_t> classOfRep;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    classOfRep.emplace(classes[c].representative.toMask(), c);
  }
  // Tag the classes that occur in the involutive census.
  std::vector<std::pair<InvolutionKind, int>> tags;
  for (int l = 0; 2 * l <= n; ++l) tags.emplace_back(InvolutionKind::Main, l);
  for (int l = 1; 2 * l + 1 <= n; ++l) tags.emplace_back(InvolutionKind::Tau1, l);
  for (int l = 2; 2 * l <= n; ++l) tags.emplace_back(InvolutionKind::Tau2, l);
  for (auto [kind, l] : tags) {
    CanonicalPair pair = canonicalInvolution(kind, l, n);
    CosetPattern pattern = fromInvolution(pair.matrix, pair.involution);
    auto [canonical, witness] = canonicalizePattern(pattern);
    auto at = classOfRep.find(canonical.toMask());
    if (at == classOfRep.end()) {
      throw std::logic_error("involutive pattern missing from pattern census");
    }
    classes[at->second].involutiveTag = std::pair{kind, l};
  }
  return classes;
}

AllCensus censusAll(int n) {
  std::vector<PatternClass> all = extendedCensus(n);
  AllCensus census;
  census.n = n;
  for (PatternClass& cls : all) {
    if (cls.twist == 0) census.classes.push_back(std::move(cls));
  }
  census.count = census.classes.size();
  return census;
}

}  // namespace qtorus
