#pragma once

// The .ucy cycle file:
//
//   n t
//   a1 a2 ... ak
//
// Line 2 holds the word, whitespace separated, letters in 1..n. Nothing may
// follow line 2 except trailing whitespace.

#include <filesystem>
#include <string>
#include <string_view>

#include "ucycle/core.hpp"

namespace ucycle {

struct UcyFile {
  int n = 0;
  int t = 0;
  CycleWord word;
};

// Throws FormatError.
UcyFile parse_ucy(std::string_view text);
UcyFile read_ucy(const std::filesystem::path& path);

std::string format_ucy(const CycleWord& word, int t);
void write_ucy(const std::filesystem::path& path, const CycleWord& word, int t);

}  // namespace ucycle
