#include "ucycle/ucy_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "ucycle/errors.hpp"

namespace ucycle {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view tok, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw FormatError(std::string("bad integer for ") + what + ": '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

UcyFile parse_ucy(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.size() < 2) throw FormatError("expected two lines: 'n t' and the word");
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (!tokens(lines[i]).empty()) throw FormatError("trailing data after the word line");
  }

  auto head = tokens(lines[0]);
  if (head.size() != 2) throw FormatError("header must be exactly 'n t'");
  const int n = to_int(head[0], "n");
  const int t = to_int(head[1], "t");
  if (n < 1 || t < 1) throw FormatError("n and t must be positive");

  std::vector<Letter> letters;
  for (auto tok : tokens(lines[1])) {
    const int x = to_int(tok, "letter");
    if (x < 1 || x > n) {
      throw FormatError("letter " + std::to_string(x) + " outside 1.." + std::to_string(n));
    }
    letters.push_back(x);
  }
  if (letters.empty()) throw FormatError("empty word");
  return UcyFile{n, t, CycleWord(n, std::move(letters))};
}

UcyFile read_ucy(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ucy(ss.str());
}

std::string format_ucy(const CycleWord& word, int t) {
  return std::to_string(word.alphabet_size()) + " " + std::to_string(t) + "\n" +
         to_string(word) + "\n";
}

void write_ucy(const std::filesystem::path& path, const CycleWord& word, int t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_ucy(word, t);
}

}  // namespace ucycle
