// Copyright 2026 The qrot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qrot/cli.hpp"

namespace qrot::cli {

namespace {

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

// Offsets of the elements of the top-level array.
std::vector<std::size_t> element_offsets(std::string_view text) {
  std::vector<std::size_t> offsets;
  int depth = 0;
  bool in_string = false;
  bool expect_element = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (in_string) {
      if (ch == '\\') {
        ++i;
      } else if (ch == '"') {
        in_string = false;
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (depth == 1 && expect_element && ch != ']') {
      offsets.push_back(i);
      expect_element = false;
    }
    switch (ch) {
      case '"':
        in_string = true;
        break;
      case '[':
      case '{':
        if (++depth == 1) expect_element = true;
        break;
      case ']':
      case '}':
        --depth;
        break;
      case ',':
        if (depth == 1) expect_element = true;
        break;
      default:
        break;
    }
  }
  return offsets;
}

}  // namespace

std::vector<VectorEntry> parse_vectors(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    throw ParseError("malformed JSON: " + std::string(e.what()), line_at(text, byte));
  }
  if (!doc.is_array()) throw ParseError("expected a JSON array of [x, y, z] triples", line_at(text, 0));
  if (doc.empty()) throw ParseError("vector list is empty", line_at(text, 0));

  const std::vector<std::size_t> offsets = element_offsets(text);
  std::vector<VectorEntry> entries;
  entries.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::size_t line = line_at(text, i < offsets.size() ? offsets[i] : 0);
    const nlohmann::json& item = doc[i];
    if (!item.is_array() || item.size() != 3) {
      throw ParseError("entry " + std::to_string(i + 1) + " is not an [x, y, z] triple", line);
    }
    std::array<double, 3> xyz{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (!item[k].is_number()) {
        throw ParseError("entry " + std::to_string(i + 1) + " has a non-numeric component", line);
      }
      xyz[k] = item[k].get<double>();
    }
    const Vec3 raw{xyz[0], xyz[1], xyz[2]};
    Normalized n;
    try {
      n = normalize(raw);
    } catch (const DomainError&) {
      throw ParseError("entry " + std::to_string(i + 1) + " is zero or not finite", line);
    }
    entries.push_back({n.unit, n.original_norm, line});
  }
  return entries;
}

std::vector<VectorEntry> read_vectors_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_vectors(buf.str());
}

}  // namespace qrot::cli
