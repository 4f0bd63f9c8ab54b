#pragma once

#include "il/formula.hpp"

#include <stdexcept>
#include <string>

namespace il {

struct ParseError : std::runtime_error {
  ParseError(const std::string &msg, std::size_t pos)
      : std::runtime_error(msg), position(pos) {}
  std::size_t position;
};

/// Grammar, loosest to tightest: -> (right assoc), |> (non-assoc),
/// |, &, prefix ~ [] <>, atoms. ASCII and unicode operator spellings
/// are both accepted; `box`, `dia`, `top`, `bot`, `#t`, `#f` work too.
Formula parse(const std::string &text);

/// Minimal-parenthesis rendering; ~[]~A is printed as <>A.
std::string print(const Formula &f);

} // namespace il
