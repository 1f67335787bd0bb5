#include "abvar/expr.hpp"

#include <algorithm>
#include <cctype>

#include "abvar/variety.hpp"

namespace abvar {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

bool isNameStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isNameChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

GeneratorContext::GeneratorContext(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (n.empty() || !isNameStart(n.front()) || !std::all_of(n.begin(), n.end(), isNameChar)) {
      throw std::invalid_argument("invalid generator name '" + n + "'");
    }
    if (!index_.emplace(n, static_cast<int>(i) + 1).second) {
      throw std::invalid_argument("duplicate generator name '" + n + "'");
    }
  }
  if (size() > kMaxGenerators) throw DimensionError("too many generators");
}

GeneratorContext GeneratorContext::cohomology(const Variety& v) { return GeneratorContext(v.cohomologyNames()); }

GeneratorContext GeneratorContext::homology(const Variety& v) { return GeneratorContext(v.homologyNames()); }

std::optional<int> GeneratorContext::position(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

constexpr std::string_view kWedgeAlias = "\xE2\x88\xA7";

class Parser {
 public:
  Parser(std::string_view text, const GeneratorContext& ctx, std::size_t base)
      : text_(text), ctx_(ctx), base_(base) {}

  ExteriorElement element() {
    ExteriorElement out(ctx_.size());
    skipSpace();
    if (atEnd()) fail("empty input");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    term(out, negative);
    for (;;) {
      skipSpace();
      if (atEnd()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
      term(out, negative);
    }
    return out;
  }

 private:
  void term(ExteriorElement& out, bool negative) {
    skipSpace();
    if (atEnd()) fail("expected a term");
    Rational coef = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = coefficient();
      skipSpace();
      if (atEnd() || peek() != '*') {
        out.addTerm(0, negative ? Rational(-coef) : coef);
        return;
      }
      ++pos_;
      skipSpace();
    }
    const auto [mask, sign] = wedge();
    if (sign != 0) out.addTerm(mask, (negative ? -sign : sign) * coef);
  }

  Rational coefficient() {
    const std::size_t start = pos_;
    const std::string num = digits();
    std::string text = num;
    skipSpace();
    if (!atEnd() && peek() == '/') {
      ++pos_;
      skipSpace();
      if (atEnd() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed coefficient");
      const std::size_t denStart = pos_;
      const std::string den = digits();
      if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
        fail("zero denominator", denStart);
      }
      text += "/" + den;
    }
    Rational q;
    if (q.set_str(text, 10) != 0) fail("malformed coefficient", start);
    q.canonicalize();
    return q;
  }

  // Returns the sorted monomial and the sign of the sort, or sign 0 when a
  // generator repeats.
  std::pair<Mask, int> wedge() {
    Mask mask = 0;
    int sign = 1;
    for (;;) {
      skipSpace();
      const std::size_t start = pos_;
      if (atEnd() || !isNameStart(peek())) fail("expected a generator name");
      while (!atEnd() && isNameChar(peek())) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto p = ctx_.position(name);
      if (!p) fail("unknown generator '" + std::string(name) + "'", start);
      const Mask bit = Mask{1} << (*p - 1);
      if (mask & bit) {
        sign = 0;
      } else if (sign != 0) {
        // Moving the new generator left past every larger one already present.
        if (inversions(mask, bit) & 1) sign = -sign;
        mask |= bit;
      }
      skipSpace();
      if (!atEnd() && peek() == '^') {
        ++pos_;
      } else if (text_.substr(pos_, kWedgeAlias.size()) == kWedgeAlias) {
        pos_ += kWedgeAlias.size();
      } else {
        break;
      }
    }
    return {mask, sign};
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skipSpace() {
    while (!atEnd() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[nodiscard]] bool atEnd() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(message, base_ + at);
  }

  std::string_view text_;
  const GeneratorContext& ctx_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

ExteriorElement parse(std::string_view text, const GeneratorContext& ctx) { return Parser(text, ctx, 0).element(); }

std::string print(const ExteriorElement& a, const GeneratorContext& ctx) {
  if (ctx.size() != a.generators()) throw std::invalid_argument("print: context does not match the element");
  if (a.isZero()) return "0";

  std::vector<std::pair<std::vector<int>, Mask>> order;
  order.reserve(a.size());
  for (const auto& [m, c] : a.terms()) order.emplace_back(positionsOf(m), m);
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });

  std::string out;
  bool first = true;
  for (const auto& [positions, m] : order) {
    const Rational& c = a.terms().at(m);
    const bool negative = sgn(c) < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (positions.empty()) {
      out += toString(magnitude);
      continue;
    }
    if (magnitude != 1) out += toString(magnitude) + "*";
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (i) out += '^';
      out += ctx.name(positions[i]);
    }
  }
  return out;
}

std::vector<ExteriorElement> parseLines(std::string_view text, const GeneratorContext& ctx) {
  std::vector<ExteriorElement> out;
  std::size_t lineStart = 0;
  while (lineStart <= text.size()) {
    std::size_t lineEnd = text.find('\n', lineStart);
    if (lineEnd == std::string_view::npos) lineEnd = text.size();
    std::string_view line = text.substr(lineStart, lineEnd - lineStart);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      out.push_back(Parser(line, ctx, lineStart).element());
    }
    lineStart = lineEnd + 1;
  }
  return out;
}

}  // namespace abvar
