#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "abvar/exterior.hpp"

namespace abvar {

class Variety;

/// Parse failure; position() is the 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Ordered generator names; the i-th name denotes position i + 1.
class GeneratorContext {
 public:
  explicit GeneratorContext(std::vector<std::string> names);

  static GeneratorContext cohomology(const Variety& v);
  static GeneratorContext homology(const Variety& v);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(names_.size()); }
  [[nodiscard]] const std::string& name(int position) const { return names_.at(static_cast<std::size_t>(position - 1)); }
  [[nodiscard]] std::optional<int> position(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

/// element := [sign] term (('+'|'-') term)*
/// term    := [coefficient '*'] wedge | coefficient
/// wedge   := name ('^' name)*
/// Whitespace is ignored between tokens; U+2227 is accepted for '^'.
ExteriorElement parse(std::string_view text, const GeneratorContext& ctx);

/// Canonical text: terms by ascending degree, then lexicographic index
/// order; "0" for the zero element.
std::string print(const ExteriorElement& a, const GeneratorContext& ctx);

/// One element per non-blank line; '#' starts a comment. Error positions
/// are offsets into the whole text.
std::vector<ExteriorElement> parseLines(std::string_view text, const GeneratorContext& ctx);

}  // namespace abvar
