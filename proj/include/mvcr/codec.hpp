#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mvcr/coweight.hpp"
#include "mvcr/errors.hpp"
#include "mvcr/weyl.hpp"

namespace mvcr {

using Json = nlohmann::ordered_json;

/// Parses a comma-separated integer list such as "1,0,-2".
inline std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) throw ParseError("empty entry in integer list '" + std::string(text) + "'");
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError("bad integer '" + tok + "'");
    out.push_back(v);
    tok.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else if (!std::isspace(static_cast<unsigned char>(c))) tok.push_back(c);
  }
  if (!tok.empty() || !out.empty()) flush();
  return out;
}

inline Coweight parse_coweight(std::string_view text, std::size_t rank) {
  Coweight v(parse_int_list(text));
  if (v.rank() != rank)
    throw RankMismatch("coweight '" + std::string(text) + "' has " + std::to_string(v.rank()) +
                       " coordinates, expected " + std::to_string(rank));
  return v;
}

/// A word in 1-based generator labels, "121" or "1,2,1"; "e" or "" is the empty word.
/// The result is 0-based.
inline Word parse_word(std::string_view text, std::size_t rank) {
  Word w;
  if (text == "e" || text.empty()) return w;
  std::vector<Int> letters;
  if (text.find(',') != std::string_view::npos) {
    letters = parse_int_list(text);
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad letter '" + std::string(1, c) + "' in word");
      letters.push_back(c - '0');
    }
  }
  for (Int a : letters) {
    if (a < 1 || static_cast<std::size_t>(a) > rank)
      throw ParseError("generator " + std::to_string(a) + " out of range 1.." + std::to_string(rank));
    w.push_back(static_cast<int>(a - 1));
  }
  return w;
}

inline WeylElt parse_weyl(const WeylGroup& W, std::string_view text) { return W.from_word(parse_word(text, W.rank())); }

inline Json to_json(const Coweight& v) { return Json(v.vec()); }

inline Coweight coweight_from_json(const Json& j) { return Coweight(j.get<std::vector<Int>>()); }

inline std::string word_label(const Word& w) {
  std::string s;
  for (int i : w) {
    if (!s.empty()) s += ",";
    s += std::to_string(i + 1);
  }
  return s;
}

}  // namespace mvcr
