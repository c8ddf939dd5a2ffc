#pragma once

// Text input:
//   pFq[u1, ..., up; l1, ..., lq; kappa*z]     parameters  P/Q + (R/S)*eps
//   MB[A...; B...; C...; D...; kappa*z]         linear forms in n, j1, ...
//   @c3 | @c1 | @v1200                           MB presets
// '#' starts a comment running to the end of the line.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypred/hyper.hpp"
#include "hypred/mellin_barnes.hpp"

namespace hypred {

class ParseError : public Error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected, const std::string& found,
             const std::string& detail = "");

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
  std::string found_;
};

struct ParsedInput {
  std::variant<SymHyperFn, MBRepr> value;
  std::optional<std::string> preset;

  bool is_hyper() const { return value.index() == 0; }
  const SymHyperFn& hyper() const { return std::get<0>(value); }
  const MBRepr& mb() const { return std::get<1>(value); }
};

ParsedInput parse_input(const std::string& text);

/// ParseError unless the text is a pFq expression.
SymHyperFn parse_hyper(const std::string& text);
/// ParseError unless the text is an MB expression or preset.
MBRepr parse_mb(const std::string& text);

/// Numeric parameters; InvalidArgument if an eps coefficient is symbolic.
HyperFn to_numeric(const SymHyperFn& f);
SymHyperFn to_symbolic(const HyperFn& f);

std::string to_string(const MBRepr& m);
bool same_mb(const MBRepr& a, const MBRepr& b);

}  // namespace hypred
