#pragma once
// Shared helpers for the unit tests.

#include <string_view>

#include <doctest.h>

#include "foldgray/pile.hpp"

// Shorthand pile constructor; fails the test on malformed input.
inline foldgray::Pile P(std::string_view text) {
  auto p = foldgray::Pile::parse(text);
  REQUIRE_MESSAGE(p.has_value(), "not a pile: " << text);
  return *p;
}
