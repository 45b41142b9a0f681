#pragma once

// Words in named generators such as "sr^3" or "s*r^-1".
// Comma-separated words select subgroups; labels go the other way.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amitsur/errors.hpp"
#include "amitsur/latgroup.hpp"
#include "amitsur/toric.hpp"

namespace amitsur {

struct Word {
  std::vector<std::pair<std::size_t, Integer>> factors;  // (generator index, exponent)
};

/// Longest-match tokenizer, so "sr^3" reads as s * r^3 when s and r are names.
inline Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  Word word;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '*')) ++pos;
  };
  skip();
  if (text.substr(pos) == "1" || text.substr(pos) == "e") return word;
  while (pos < text.size()) {
    std::size_t best = names.size(), best_len = 0;
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k].size() > best_len && text.substr(pos, names[k].size()) == names[k]) {
        best = k;
        best_len = names[k].size();
      }
    if (best == names.size())
      throw UnknownWord("unknown generator at '" + std::string(text.substr(pos)) + "'");
    pos += best_len;
    Integer exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      std::size_t end = ++pos;
      if (end < text.size() && text[end] == '-') ++end;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      try {
        exponent = parse_integer(text.substr(pos, end - pos));
      } catch (const std::invalid_argument&) {
        throw UnknownWord("bad exponent in '" + std::string(text) + "'");
      }
      pos = end;
    }
    word.factors.emplace_back(best, exponent);
    skip();
  }
  return word;
}

inline IntegerMatrix evaluate(const Word& word, const std::vector<IntegerMatrix>& generators, std::size_t rank) {
  IntegerMatrix result = IntegerMatrix::identity(rank);
  for (const auto& [index, exponent] : word.factors) {
    const IntegerMatrix base = exponent < 0 ? inverse_unimodular(generators[index]) : generators[index];
    for (Integer k = 0; k < abs(exponent); ++k) result = result * base;
  }
  return result;
}

inline std::string render(const std::vector<std::size_t>& letters, const std::vector<std::string>& names) {
  if (letters.empty()) return "1";
  const bool compact = std::all_of(names.begin(), names.end(), [](const std::string& n) { return n.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!out.empty() && !compact) out += "*";
    out += names[letters[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

inline std::vector<std::string> split_selector(std::string_view selector) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : selector) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else if (c != '<' && c != '>' && c != ' ') {
      current += c;
    }
  }
  parts.push_back(current);
  for (const auto& p : parts)
    if (p.empty()) throw UnknownWord("empty word in subgroup selector '" + std::string(selector) + "'");
  return parts;
}

/// The subgroup J of the Picard action generated by the images of the given
/// comma-separated words in the named fan symmetries.
inline LatticeGroupAction select_subgroup(const FanSymmetries& sym, std::string_view selector) {
  std::vector<IntegerMatrix> images;
  for (const auto& w : split_selector(selector)) {
    const IntegerMatrix g = evaluate(parse_word(w, sym.generator_names), sym.lattice_group.generators(),
                                     sym.lattice_group.rank());
    images.push_back(sym.pic_action.element(sym.pic_image[*sym.lattice_group.index_of(g)]));
  }
  return subgroup_generated(sym.pic_action, images);
}

/// Shortest breadth-first word for every element of the Picard action.
struct ElementNames {
  std::vector<std::string> names;        // per pic_action element
  std::vector<std::size_t> preference;   // pic_action indices in naming order
};

inline ElementNames name_pic_elements(const FanSymmetries& sym) {
  const auto& group = sym.lattice_group;
  ElementNames out{std::vector<std::string>(sym.pic_action.order()), {}};
  std::vector<bool> named(sym.pic_action.order(), false);
  std::vector<std::vector<std::size_t>> words(group.order());
  std::vector<bool> seen(group.order(), false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t next = 0; next < queue.size(); ++next) {
    const std::size_t e = queue[next];
    const std::size_t p = sym.pic_image[e];
    if (!named[p]) {
      named[p] = true;
      out.names[p] = render(words[e], sym.generator_names);
      out.preference.push_back(p);
    }
    for (std::size_t k = 0; k < group.generators().size(); ++k) {
      const std::size_t f = *group.index_of(group.element(e) * group.generators()[k]);
      if (seen[f]) continue;
      seen[f] = true;
      words[f] = words[e];
      words[f].push_back(k);
      queue.push_back(f);
    }
  }
  return out;
}

namespace detail {

// Generator tokens in a rendered word: "sr^3" has 2, "swap*g1^2" has 2.
inline std::size_t word_runs(const std::string& w, bool compact) {
  if (!compact) return static_cast<std::size_t>(std::count(w.begin(), w.end(), '*')) + 1;
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }));
}

}  // namespace detail

/// "<s,r^3>": a smallest generating set of J, then fewest letter runs, then
/// shortest text; "1" for the trivial group.
inline std::string subgroup_label(const FanSymmetries& sym, const LatticeGroupAction& j, const ElementNames& names) {
  if (j.order() == 1) return "1";
  const bool compact = std::all_of(sym.generator_names.begin(), sym.generator_names.end(),
                                   [](const std::string& n) { return n.size() == 1; });
  std::vector<std::size_t> candidates;
  for (std::size_t p : names.preference)
    if (p != 0 && j.has(sym.pic_action.element(p))) candidates.push_back(p);
  for (std::size_t size = 1; size <= candidates.size(); ++size) {
    std::optional<std::pair<std::pair<std::size_t, std::size_t>, std::string>> best;
    std::vector<bool> pick(candidates.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<IntegerMatrix> gens;
      std::string label;
      std::size_t runs = 0, length = 0;
      for (std::size_t k = 0; k < candidates.size(); ++k)
        if (pick[k]) {
          const std::string& w = names.names[candidates[k]];
          gens.push_back(sym.pic_action.element(candidates[k]));
          label += (label.empty() ? "" : ",") + w;
          runs += detail::word_runs(w, compact);
          length += w.size();
        }
      if (subgroup_generated(sym.pic_action, gens).order() != j.order()) continue;
      const std::pair<std::size_t, std::size_t> score{runs, length};
      if (!best || score < best->first) best = {score, label};
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (best) return "<" + best->second + ">";
  }
  throw InternalMismatch("no generating set found for subgroup");
}

}  // namespace amitsur
