#pragma once

// JSON documents for specs, fans and results. Also resolves bundled names. Integers are written as JSON numbers when they fit
// in 64 bits and as decimal strings otherwise; both forms are accepted.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "amitsur/errors.hpp"
#include "amitsur/intlin.hpp"
#include "amitsur/numerical.hpp"
#include "amitsur/numpoly.hpp"
#include "amitsur/toric.hpp"
#include "amitsur/words.hpp"

namespace amitsur::io {

using Json = nlohmann::ordered_json;

inline Json integer_json(const Integer& a) {
  if (a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(a));
  return Json(a.str());
}

inline Integer to_integer(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw FormatError(where + ": expected an integer");
}

inline std::size_t to_count(const Json& j, const std::string& where) {
  const Integer v = to_integer(j, where);
  if (v < 0 || v > 1000000) throw FormatError(where + ": expected a small non-negative integer");
  return static_cast<std::size_t>(v);
}

inline const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw FormatError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(where + "." + key + ": missing field");
  return *it;
}

inline const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where + ": expected a list");
  return j;
}

inline Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

inline IntVector to_int_vector(const Json& j, const std::string& where, std::optional<std::size_t> length = {}) {
  IntVector out;
  for (std::size_t i = 0; i < array_at(j, where).size(); ++i)
    out.push_back(to_integer(j[i], where + "[" + std::to_string(i) + "]"));
  if (length && out.size() != *length)
    throw FormatError(where + ": expected " + std::to_string(*length) + " entries, found " + std::to_string(out.size()));
  return out;
}

/// Matrices are lists of rows.
inline Json matrix_json(const IntegerMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

inline IntegerMatrix to_matrix(const Json& j, const std::string& where) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < array_at(j, where).size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    rows.push_back(to_int_vector(j[i], at, rows.empty() ? std::nullopt : std::optional(rows.front().size())));
  }
  return IntegerMatrix::from_rows(rows);
}

inline Json polynomial_json(const NumericalPolynomial& f) {
  Json coeffs = Json::array();
  for (const auto& [a, c] : f.coeffs()) {
    Json exponent = Json::array();
    for (auto e : a) exponent.push_back(e);
    coeffs.push_back(Json{{"exponent", exponent}, {"value", integer_json(c)}});
  }
  return Json{{"degree", f.degree()}, {"coeffs", coeffs}};
}

/// Either {degree, coeffs: [{exponent, value}]} in the binomial basis or
/// {degree, values: [{point, value}]} covering the degree simplex.
inline NumericalPolynomial polynomial_from_json(const Json& j, std::size_t num_vars, const std::string& where) {
  const std::size_t degree = to_count(field(j, "degree", where), where + ".degree");
  if (j.contains("coeffs")) {
    NumericalPolynomial f(num_vars, degree);
    const Json& list = array_at(j["coeffs"], where + ".coeffs");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = where + ".coeffs[" + std::to_string(i) + "]";
      const IntVector e = to_int_vector(field(list[i], "exponent", at), at + ".exponent", num_vars);
      Exponent a;
      for (const auto& x : e) {
        if (x < 0) throw FormatError(at + ".exponent: entries must be non-negative");
        a.push_back(static_cast<std::size_t>(x));
      }
      if (total_degree(a) > degree) throw FormatError(at + ": exponent exceeds the declared degree");
      f.set_coeff(a, f.coeff(a) + to_integer(field(list[i], "value", at), at + ".value"));
    }
    return f;
  }
  if (j.contains("values")) {
    std::map<IntVector, Integer> table;
    const Json& list = array_at(j["values"], where + ".values");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = where + ".values[" + std::to_string(i) + "]";
      table[to_int_vector(field(list[i], "point", at), at + ".point", num_vars)] =
          to_integer(field(list[i], "value", at), at + ".value");
    }
    return from_values(num_vars, degree, [&](const IntVector& x) {
      auto it = table.find(x);
      if (it == table.end()) throw FormatError(where + ".values: no value for a simplex point");
      return it->second;
    });
  }
  throw FormatError(where + ": chi needs either 'coeffs' or 'values'");
}

inline Json spec_json(const VarietySpec& spec) {
  Json gens = Json::array();
  for (const auto& g : spec.action().generators()) gens.push_back(matrix_json(g));
  return Json{{"pic_rank", spec.pic_rank()},
              {"dim", spec.dim()},
              {"chi", polynomial_json(spec.chi())},
              {"action_generators", gens}};
}

inline VarietySpec spec_from_json(const Json& j) {
  const std::size_t rank = to_count(field(j, "pic_rank", "spec"), "spec.pic_rank");
  const std::size_t dim = to_count(field(j, "dim", "spec"), "spec.dim");
  NumericalPolynomial chi = polynomial_from_json(field(j, "chi", "spec"), rank, "spec.chi");
  std::vector<IntegerMatrix> gens;
  const Json& list = j.contains("action_generators") ? array_at(j["action_generators"], "spec.action_generators")
                                                     : Json::array();
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = "spec.action_generators[" + std::to_string(i) + "]";
    IntegerMatrix g = to_matrix(list[i], at);
    if (g.rows() != rank || g.cols() != rank)
      throw FormatError(at + ": expected a " + std::to_string(rank) + "x" + std::to_string(rank) + " matrix");
    gens.push_back(std::move(g));
  }
  return VarietySpec(dim, generate(rank, gens), std::move(chi));
}

struct FanDocument {
  Fan fan;
  std::vector<NamedMatrix> named;
};

inline Json fan_json(const Fan& fan, const std::vector<NamedMatrix>& named = {}) {
  Json rays = Json::array(), cones = Json::array(), gens = Json::array();
  for (const auto& u : fan.rays) rays.push_back(vector_json(u));
  for (const auto& c : fan.max_cones) cones.push_back(c);
  for (const auto& nm : named) gens.push_back(Json{{"name", nm.name}, {"matrix", matrix_json(nm.matrix)}});
  Json out{{"lattice_rank", fan.lattice_rank}, {"rays", rays}, {"max_cones", cones}};
  if (!named.empty()) out["named_generators"] = gens;
  return out;
}

inline FanDocument fan_from_json(const Json& j) {
  FanDocument doc;
  doc.fan.lattice_rank = to_count(field(j, "lattice_rank", "fan"), "fan.lattice_rank");
  const Json& rays = array_at(field(j, "rays", "fan"), "fan.rays");
  for (std::size_t i = 0; i < rays.size(); ++i)
    doc.fan.rays.push_back(to_int_vector(rays[i], "fan.rays[" + std::to_string(i) + "]", doc.fan.lattice_rank));
  const Json& cones = array_at(field(j, "max_cones", "fan"), "fan.max_cones");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const std::string at = "fan.max_cones[" + std::to_string(i) + "]";
    std::vector<std::size_t> cone;
    for (std::size_t k = 0; k < array_at(cones[i], at).size(); ++k) {
      const std::size_t idx = to_count(cones[i][k], at);
      if (idx >= doc.fan.rays.size()) throw FormatError(at + ": ray index out of range");
      cone.push_back(idx);
    }
    doc.fan.max_cones.push_back(std::move(cone));
  }
  if (j.contains("named_generators")) {
    const Json& list = array_at(j["named_generators"], "fan.named_generators");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = "fan.named_generators[" + std::to_string(i) + "]";
      const Json& name = field(list[i], "name", at);
      if (!name.is_string() || name.get<std::string>().empty()) throw FormatError(at + ".name: expected a name");
      doc.named.push_back({name.get<std::string>(), to_matrix(field(list[i], "matrix", at), at + ".matrix")});
    }
  }
  return doc;
}

/// Sublattices are written by their canonical basis, as a list of columns.
inline Json sublattice_json(const Sublattice& l) {
  Json basis = Json::array();
  for (std::size_t k = 0; k < l.rank(); ++k) basis.push_back(vector_json(l.basis_vector(k)));
  return Json{{"ambient_rank", l.ambient_rank()}, {"basis", basis}};
}

inline Sublattice sublattice_from_json(const Json& j, const std::string& where) {
  const std::size_t r = to_count(field(j, "ambient_rank", where), where + ".ambient_rank");
  std::vector<IntVector> cols;
  const Json& basis = array_at(field(j, "basis", where), where + ".basis");
  for (std::size_t k = 0; k < basis.size(); ++k)
    cols.push_back(to_int_vector(basis[k], where + ".basis[" + std::to_string(k) + "]", r));
  return Sublattice::from_generators(IntegerMatrix::from_columns(r, cols));
}

inline Json group_json(const FiniteAbelianGroup& g) {
  Json factors = Json::array();
  for (const auto& d : g.invariant_factors) factors.push_back(integer_json(d));
  return Json{{"invariant_factors", factors}, {"free_rank", g.free_rank}, {"text", g.to_string()}};
}

inline FiniteAbelianGroup group_from_json(const Json& j, const std::string& where) {
  FiniteAbelianGroup g;
  g.invariant_factors = to_int_vector(field(j, "invariant_factors", where), where + ".invariant_factors");
  for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
    if (g.invariant_factors[i] < 2) throw FormatError(where + ": invariant factors must be at least 2");
    if (i > 0 && !divides(g.invariant_factors[i - 1], g.invariant_factors[i]))
      throw FormatError(where + ": invariant factors must form a divisibility chain");
  }
  g.free_rank = to_count(field(j, "free_rank", where), where + ".free_rank");
  return g;
}

inline Json computation_json(const AmitsurComputation& c) {
  Json records = Json::array();
  for (const auto& r : c.generators_used)
    records.push_back(Json{{"source", r.source}, {"point", vector_json(r.point)}, {"vector", vector_json(r.vector)}});
  return Json{{"invariant_lattice", sublattice_json(c.invariant_lattice)},
              {"split_subgroup", sublattice_json(c.split_subgroup)},
              {"group", group_json(c.group)},
              {"generators_used", records}};
}

inline AmitsurComputation computation_from_json(const Json& j) {
  AmitsurComputation c{sublattice_from_json(field(j, "invariant_lattice", "result"), "result.invariant_lattice"),
                       sublattice_from_json(field(j, "split_subgroup", "result"), "result.split_subgroup"),
                       group_from_json(field(j, "group", "result"), "result.group"),
                       {}};
  const Json& records = array_at(field(j, "generators_used", "result"), "result.generators_used");
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string at = "result.generators_used[" + std::to_string(i) + "]";
    const Json& source = field(records[i], "source", at);
    if (!source.is_string()) throw FormatError(at + ".source: expected text");
    c.generators_used.push_back({source.get<std::string>(), to_int_vector(field(records[i], "point", at), at + ".point"),
                                 to_int_vector(field(records[i], "vector", at), at + ".vector")});
  }
  return c;
}

/// Parses JSON text; syntax errors report "source:line:column: message".
inline Json parse(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    if (auto pos = message.find("syntax error"); pos != std::string::npos) message = message.substr(pos);
    throw FormatError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message);
  }
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline Json load(const std::filesystem::path& path) { return parse(read_text(path), path.string()); }

namespace detail {

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts(1);
  for (char c : text) {
    if (c == sep)
      parts.emplace_back();
    else
      parts.back() += c;
  }
  return parts;
}

inline std::size_t positive_count(const std::string& text, const std::string& name) {
  Integer v;
  try {
    v = parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw FormatError("bad number '" + text + "' in variety name " + name);
  }
  if (v < 1 || v > 64) throw FormatError("number out of range in variety name " + name);
  return static_cast<std::size_t>(v);
}

}  // namespace detail

/// p2, dp6, hirzebruch:<e>, pproduct:<n>:<m>; nullopt for other strings.
inline std::optional<ToricVariety> named_variety(std::string_view name) {
  const auto parts = detail::split(name, ':');
  const std::string full(name);
  if (parts.size() == 1 && parts[0] == "p2") return projective_plane_variety();
  if (parts.size() == 1 && parts[0] == "dp6") return dp6_variety();
  if (parts.size() == 2 && parts[0] == "hirzebruch") {
    Integer e;
    try {
      e = parse_integer(parts[1]);
    } catch (const std::invalid_argument&) {
      throw FormatError("bad degree in variety name " + full);
    }
    if (e < 0) throw FormatError("Hirzebruch degree must be non-negative in " + full);
    return hirzebruch_variety(e);
  }
  if (parts.size() == 3 && parts[0] == "pproduct")
    return projective_product(detail::positive_count(parts[1], full), detail::positive_count(parts[2], full));
  return std::nullopt;
}

/// A bundled name or the path of a fan document.
inline ToricVariety load_toric(const std::string& name_or_path) {
  if (auto named = named_variety(name_or_path)) return std::move(*named);
  if (!std::filesystem::exists(name_or_path))
    throw FormatError("'" + name_or_path + "' is neither a bundled variety nor a readable file");
  FanDocument doc = fan_from_json(load(name_or_path));
  if (doc.fan.lattice_rank == 2) return toric_surface(name_or_path, doc.fan, doc.named);
  ToricPicard tp = validate(doc.fan);
  FanSymmetries sym = fan_automorphisms(tp, doc.named);
  NumericalPolynomial chi(tp.pic_rank, 0);
  return {name_or_path, std::move(tp), std::move(sym), std::move(chi), doc.fan.lattice_rank, false};
}

/// A variety spec from a bundled name (with J chosen by a subgroup selector,
/// trivial by default) or from a spec document.
inline VarietySpec load_spec(const std::string& name_or_path, const std::optional<std::string>& selector = {}) {
  if (auto named = named_variety(name_or_path)) {
    const LatticeGroupAction j = selector ? select_subgroup(named->symmetries, *selector)
                                          : trivial_group(named->picard.pic_rank);
    return named->spec(j);
  }
  if (selector) throw FormatError("--subgroup applies only to bundled varieties");
  return spec_from_json(load(name_or_path));
}

}  // namespace amitsur::io
