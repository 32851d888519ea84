// Copyright 2026 The gdd6 Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats. Design files:
//
//   %GDD 1
//   param n=<int> groups=2 k=<int>
//   index lambda1=<int> lambda2=<int>
//   config <s>,<t> | config mixed
//   B A<i> ... B<j> ...            (one line per block, canonical order)
//
// Ingredient files:
//
//   %BIBD 1
//   param n=<int> k=<int> lambda=<int>[ alpha=<int>]
//   class <j>                      (optional, groups the blocks below it)
//   <p> <q> ...                    (one line per block)

#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gdd6/block_design.hpp"
#include "gdd6/design.hpp"
#include "gdd6/error.hpp"

namespace gdd6 {

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

inline std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

[[noreturn]] inline void parse_error(size_t line_no, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + msg);
}

inline int parse_int(std::string_view s, size_t line_no, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    parse_error(line_no, "expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
  return value;
}

// Reads `key=value` words into a map, rejecting unknown or repeated keys.
inline std::map<std::string, int> parse_assignments(const std::vector<std::string_view>& words, size_t from,
                                                    size_t line_no, const std::vector<std::string>& allowed) {
  std::map<std::string, int> out;
  for (size_t i = from; i < words.size(); ++i) {
    const auto eq = words[i].find('=');
    if (eq == std::string_view::npos) parse_error(line_no, "expected key=value, got '" + std::string(words[i]) + "'");
    const std::string key(words[i].substr(0, eq));
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      parse_error(line_no, "unknown key '" + key + "'");
    if (out.count(key)) parse_error(line_no, "repeated key '" + key + "'");
    out[key] = parse_int(words[i].substr(eq + 1), line_no, key);
  }
  return out;
}

inline int require_key(const std::map<std::string, int>& m, const std::string& key, size_t line_no) {
  const auto it = m.find(key);
  if (it == m.end()) parse_error(line_no, "missing " + key + "=");
  return it->second;
}

}  // namespace detail

struct DesignFile {
  GroupedDesign design;
  GddClaim claim;
  bool mixed = false;  // `config mixed`
};

inline std::string format_design(const GroupedDesign& design, const GddClaim& claim) {
  const GroupedDesign canon = canonicalize(design);
  std::ostringstream out;
  out << "%GDD 1\n";
  out << "param n=" << canon.n << " groups=2 k=" << canon.k << "\n";
  out << "index lambda1=" << claim.lambda1 << " lambda2=" << claim.lambda2 << "\n";
  const auto config = classify_configuration(canon);
  out << "config " << (config ? to_string(*config) : std::string("mixed")) << "\n";
  for (const auto& block : canon.blocks) {
    out << "B";
    for (const auto& p : block.points) out << ' ' << to_string(p);
    out << "\n";
  }
  return out.str();
}

inline DesignFile parse_design(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.size() < 4) detail::parse_error(lines.size() + 1, "truncated header");
  if (lines[0] != "%GDD 1") detail::parse_error(1, "expected '%GDD 1'");

  auto words = detail::split_words(lines[1]);
  if (words.empty() || words[0] != "param") detail::parse_error(2, "expected 'param'");
  const auto param = detail::parse_assignments(words, 1, 2, {"n", "groups", "k"});
  DesignFile file;
  file.design.n = detail::require_key(param, "n", 2);
  file.design.k = detail::require_key(param, "k", 2);
  if (detail::require_key(param, "groups", 2) != 2) detail::parse_error(2, "only groups=2 is supported");
  if (file.design.n < 1 || file.design.k < 2) detail::parse_error(2, "n must be positive and k at least 2");

  words = detail::split_words(lines[2]);
  if (words.empty() || words[0] != "index") detail::parse_error(3, "expected 'index'");
  const auto index = detail::parse_assignments(words, 1, 3, {"lambda1", "lambda2"});
  file.claim.n = file.design.n;
  file.claim.lambda1 = detail::require_key(index, "lambda1", 3);
  file.claim.lambda2 = detail::require_key(index, "lambda2", 3);

  words = detail::split_words(lines[3]);
  if (words.size() != 2 || words[0] != "config") detail::parse_error(4, "expected 'config <s>,<t>' or 'config mixed'");
  if (words[1] == "mixed") {
    file.mixed = true;
  } else {
    const auto comma = words[1].find(',');
    if (comma == std::string_view::npos) detail::parse_error(4, "expected '<s>,<t>'");
    Configuration c{detail::parse_int(words[1].substr(0, comma), 4, "s"),
                    detail::parse_int(words[1].substr(comma + 1), 4, "t")};
    if (c.s < 1 || c.s > c.t || c.s + c.t != file.design.k) detail::parse_error(4, "configuration does not fit k");
    file.claim.config = c;
  }

  for (size_t i = 4; i < lines.size(); ++i) {
    const size_t line_no = i + 1;
    if (lines[i].empty() && i + 1 == lines.size()) break;
    words = detail::split_words(lines[i]);
    if (words.empty() || words[0] != "B") detail::parse_error(line_no, "expected a block line starting with 'B'");
    Block block;
    for (size_t w = 1; w < words.size(); ++w) {
      const auto word = words[w];
      if (word.size() < 2 || (word[0] != 'A' && word[0] != 'B'))
        detail::parse_error(line_no, "bad point '" + std::string(word) + "'");
      const int offset = detail::parse_int(word.substr(1), line_no, "point");
      if (offset < 0 || offset >= file.design.n)
        detail::parse_error(line_no, "point '" + std::string(word) + "' outside the group");
      block.points.push_back({word[0] == 'A' ? Group::A : Group::B, offset});
    }
    std::sort(block.points.begin(), block.points.end());
    file.design.blocks.push_back(std::move(block));
  }
  file.design = canonicalize(std::move(file.design));
  return file;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "cannot read " + path.string());
  return buf.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
}

inline DesignFile read_design_file(const std::filesystem::path& path) { return parse_design(read_text_file(path)); }

inline void write_design_file(const std::filesystem::path& path, const GroupedDesign& design, const GddClaim& claim) {
  write_text_file(path, format_design(design, claim));
}

// Ingredient file content before any validation.
struct IngredientFile {
  int n = 0;
  int k = 0;
  int lambda = 0;
  std::optional<int> alpha;
  Blocks blocks;
  std::vector<std::vector<int>> classes;  // block indices, empty when no class headers

  std::vector<Blocks> class_blocks() const {
    std::vector<Blocks> out;
    for (const auto& cls : classes) {
      Blocks b;
      for (int i : cls) b.push_back(blocks[i]);
      out.push_back(std::move(b));
    }
    return out;
  }
};

inline std::string format_ingredient(int n, int k, int lambda, std::optional<int> alpha, const std::vector<Blocks>& classes,
                                     bool with_class_headers) {
  std::ostringstream out;
  out << "%BIBD 1\n";
  out << "param n=" << n << " k=" << k << " lambda=" << lambda;
  if (alpha) out << " alpha=" << *alpha;
  out << "\n";
  for (size_t j = 0; j < classes.size(); ++j) {
    if (with_class_headers) out << "class " << j << "\n";
    for (const auto& block : classes[j]) {
      for (size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i];
      out << "\n";
    }
  }
  return out.str();
}

inline std::string format_ingredient(const BlockDesign& d) {
  return format_ingredient(d.n, d.k, d.lambda, std::nullopt, {d.blocks}, false);
}

inline std::string format_ingredient(const Resolution& r) {
  std::vector<Blocks> classes;
  for (int j = 0; j < r.class_count(); ++j) classes.push_back(r.class_blocks(j));
  return format_ingredient(r.design.n, r.design.k, r.design.lambda, r.alpha, classes, true);
}

inline std::string format_ingredient(const NearResolution& r) {
  std::vector<Blocks> classes;
  for (size_t j = 0; j < r.classes.size(); ++j) classes.push_back(r.class_blocks(static_cast<int>(j)));
  return format_ingredient(r.design.n, r.design.k, r.design.lambda, std::nullopt, classes, true);
}

inline IngredientFile parse_ingredient(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.size() < 2) detail::parse_error(lines.size() + 1, "truncated header");
  if (lines[0] != "%BIBD 1") detail::parse_error(1, "expected '%BIBD 1'");
  auto words = detail::split_words(lines[1]);
  if (words.empty() || words[0] != "param") detail::parse_error(2, "expected 'param'");
  const auto param = detail::parse_assignments(words, 1, 2, {"n", "k", "lambda", "alpha"});
  IngredientFile file;
  file.n = detail::require_key(param, "n", 2);
  file.k = detail::require_key(param, "k", 2);
  file.lambda = detail::require_key(param, "lambda", 2);
  if (param.count("alpha")) file.alpha = param.at("alpha");
  if (file.n < 2 || file.k < 2 || file.k > file.n || file.lambda < 1)
    detail::parse_error(2, "parameters out of range");

  for (size_t i = 2; i < lines.size(); ++i) {
    const size_t line_no = i + 1;
    if (lines[i].empty() && i + 1 == lines.size()) break;
    words = detail::split_words(lines[i]);
    if (words.empty()) detail::parse_error(line_no, "empty line");
    if (words[0] == "class") {
      if (words.size() != 2) detail::parse_error(line_no, "expected 'class <j>'");
      const int j = detail::parse_int(words[1], line_no, "class");
      if (j != static_cast<int>(file.classes.size()))
        detail::parse_error(line_no, "class headers must be numbered 0,1,2,... in order");
      if (file.classes.empty() && !file.blocks.empty())
        detail::parse_error(line_no, "blocks precede the first class header");
      file.classes.emplace_back();
      continue;
    }
    std::vector<int> block;
    for (auto w : words) {
      const int x = detail::parse_int(w, line_no, "point");
      if (x < 0 || x >= file.n) detail::parse_error(line_no, "point " + std::to_string(x) + " outside [0,n)");
      block.push_back(x);
    }
    if (static_cast<int>(block.size()) != file.k)
      detail::parse_error(line_no, "block has " + std::to_string(block.size()) + " points, expected k=" +
                                       std::to_string(file.k));
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end())
      detail::parse_error(line_no, "repeated point in block");
    if (!file.classes.empty()) file.classes.back().push_back(static_cast<int>(file.blocks.size()));
    file.blocks.push_back(std::move(block));
  }
  return file;
}

inline IngredientFile read_ingredient_file(const std::filesystem::path& path) {
  return parse_ingredient(read_text_file(path));
}

// Conversions validate every invariant; nothing read from disk is trusted.
inline BlockDesign to_block_design(const IngredientFile& f) {
  const BlockDesign d = make_block_design(f.n, f.k, f.blocks);
  if (d.lambda != f.lambda)
    throw Error(ErrorKind::InvalidIngredient, "file claims lambda=" + std::to_string(f.lambda) +
                                                  " but pairs occur " + std::to_string(d.lambda) + " times");
  return d;
}

inline Resolution to_resolution(const IngredientFile& f) {
  if (!f.alpha) throw Error(ErrorKind::InvalidIngredient, "ingredient file has no alpha= on its param line");
  if (f.classes.empty()) throw Error(ErrorKind::InvalidIngredient, "ingredient file has no class headers");
  return make_resolution(f.n, f.k, f.lambda, *f.alpha, f.class_blocks());
}

inline NearResolution to_near_resolution(const IngredientFile& f) {
  if (f.classes.empty()) throw Error(ErrorKind::InvalidIngredient, "ingredient file has no class headers");
  if (f.lambda != f.k - 1) throw Error(ErrorKind::InvalidIngredient, "near-resolution needs lambda = k-1");
  return make_near_resolution(f.n, f.k, f.class_blocks());
}

}  // namespace gdd6
