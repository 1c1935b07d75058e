#include "qtorus/text.hpp"

#include <vector>

namespace qtorus {

namespace {

std::vector<std::string> splitOn(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

ElementaryMatrix parseElementary(const std::string& text) {
  std::vector<std::string> rows = splitOn(text, '/');
  int n = static_cast<int>(rows.size());
  if (text.empty()) {
    throw ParseError("empty matrix literal");
  }
  if (n > kMaxDim) {
    throw ParseError("matrix literal has more than " +
                     std::to_string(kMaxDim) + " rows");
  }
  Gf2Matrix bits(n, n);
  for (int i = 0; i < n; ++i) {
    const std::string& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != n) {
      throw ParseError("row " + std::to_string(i + 1) + " has length " +
                       std::to_string(row.size()) + ", expected " +
                       std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      char c = row[static_cast<std::size_t>(j)];
      if (c != '+' && c != '-') {
        throw ParseError(std::string("unexpected character '") + c +
                         "' at row " + std::to_string(i + 1) + ", column " +
                         std::to_string(j + 1) + " (want '+' or '-')");
      }
      bits.set(i, j, c == '-');
    }
  }
  for (int i = 0; i < n; ++i) {
    if (bits.get(i, i)) {
      throw NotElementaryError(
          "sign -1 on the diagonal at position " + std::to_string(i + 1) +
          ": not elementary, no graded involution exists");
    }
    for (int j = i + 1; j < n; ++j) {
      if (bits.get(i, j) != bits.get(j, i)) {
        throw NotElementaryError(
            "signs at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
            ") and (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
            ") disagree: not elementary, no graded involution exists");
      }
    }
  }
  return ElementaryMatrix(bits);
}

std::string formatElementary(const ElementaryMatrix& e) {
  int n = e.size();
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i > 0) out.push_back('/');
    for (int j = 0; j < n; ++j) {
      out.push_back(e.minusAt(i, j) ? '-' : '+');
    }
  }
  return out;
}

Involution parseInvolution(const std::string& text) {
  int n = static_cast<int>(text.size());
  if (n == 0) throw ParseError("empty involution literal");
  if (n > kMaxDim) {
    throw ParseError("involution literal has more than " +
                     std::to_string(kMaxDim) + " positions");
  }
  Involution tau = Involution::allPlus(n);
  for (int i = 0; i < n; ++i) {
    char c = text[static_cast<std::size_t>(i)];
    if (c != '+' && c != '-') {
      throw ParseError(std::string("unexpected character '") + c +
                       "' at position " + std::to_string(i + 1) +
                       " (want '+' or '-')");
    }
    tau.minus.set(i, c == '-');
  }
  return tau;
}

std::string formatInvolution(const Involution& tau) {
  std::string out;
  for (int i = 0; i < tau.n(); ++i) {
    out.push_back(tau.minus.get(i) ? '-' : '+');
  }
  return out;
}

CosetPattern parsePattern(const std::string& text) {
  if (text.empty()) {
    return CosetPattern::zeroOnly(0);
  }
  std::vector<std::string> parts = splitOn(text, ',');
  int n = static_cast<int>(parts.front().size());
  if (n == 0) {
    throw ParseError("empty pattern member");
  }
  if (n > kMaxPatternRank) {
    throw ParseError("pattern member longer than " +
                     std::to_string(kMaxPatternRank) + " characters");
  }
  CosetPattern p(n);
  for (std::size_t at = 0; at < parts.size(); ++at) {
    const std::string& member = parts[at];
    if (static_cast<int>(member.size()) != n) {
      throw ParseError("pattern member " + std::to_string(at + 1) +
                       " has length " + std::to_string(member.size()) +
                       ", expected " + std::to_string(n));
    }
    std::uint32_t value = 0;
    for (int k = 0; k < n; ++k) {
      char c = member[static_cast<std::size_t>(k)];
      if (c != '0' && c != '1') {
        throw ParseError(std::string("unexpected character '") + c +
                         "' in pattern member " + std::to_string(at + 1) +
                         ", position " + std::to_string(k + 1) +
                         " (want '0' or '1')");
      }
      if (c == '1') value |= std::uint32_t{1} << k;
    }
    if (p.contains(value)) {
      throw ParseError("pattern member " + std::to_string(at + 1) +
                       " repeats an earlier member");
    }
    p.insert(value);
  }
  return p;
}

std::string formatPattern(const CosetPattern& p) {
  int n = p.rank();
  std::string out;
  bool first = true;
  for (std::uint32_t value : p.members()) {
    if (!first) out.push_back(',');
    first = false;
    for (int k = 0; k < n; ++k) {
      out.push_back((value >> k) & 1 ? '1' : '0');
    }
  }
  return out;
}

}  // namespace qtorus
