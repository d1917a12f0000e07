#pragma once

#include <stdexcept>
#include <string>

namespace ttg {

enum class Errc {
  NotAGroup,
  TooLarge,
  InvalidClass,
  UnsupportedPair,
  NotSubconjugate,
  UnsupportedInstance,
  SpaceMismatch,
  MalformedDescriptor,
  MalformedExpr,
  NotFinite,
  NotRealizable,
  GroupMismatch,
  NotUnrelated,
  ClassNotInGroup,
  SplitUnavailable,
  MixedParity,
  ParseError,
  IoError,
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

}  // namespace ttg
