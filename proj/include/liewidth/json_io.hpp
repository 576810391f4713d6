#pragma once

#include <json.hpp>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "almost_commuting.hpp"
#include "current.hpp"
#include "lie_algebra.hpp"
#include "width_solver.hpp"

namespace liewidth {

// Insertion-ordered so emitted reports are byte-stable and human-readable.
using Json = nlohmann::ordered_json;

/// Input validation failure; `field` names the offending entry (path syntax
/// like "coeffs[1].matrix[0][2]").
class ParseError : public std::runtime_error {
public:
  ParseError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

// --- rationals, vectors, matrices -----------------------------------------

inline Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) throw ParseError(path, "expected a rational string \"p/q\" or \"p\"");
  const auto s = j.get<std::string>();
  auto r = Rational::parse(s);
  if (!r) throw ParseError(path, "malformed rational \"" + s + "\"");
  return *r;
}

inline Json to_json(const VectorRat& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

inline VectorRat vector_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  VectorRat v(j.size());
  for (std::size_t k = 0; k < j.size(); ++k)
    v[k] = rational_from_json(j[k], path + "[" + std::to_string(k) + "]");
  return v;
}

inline Json to_json(const MatrixRat& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    j.push_back(std::move(row));
  }
  return j;
}

inline MatrixRat matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ParseError(path, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw ParseError(path + "[0]", "expected a row array");
  const std::size_t cols = j[0].size();
  MatrixRat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rpath = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError(rpath, "ragged row");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rational_from_json(j[r][c], rpath + "[" + std::to_string(c) + "]");
  }
  return m;
}

// --- algebra elements -------------------------------------------------------

inline Json to_json(const Elem& x) {
  const LieAlg& L = x.algebra();
  return Json{{"family", std::string(family_name(L.family()))},
              {"n", L.n()},
              {"matrix", to_json(x.matrix())}};
}

inline Elem elem_from_json(const LieAlg& L, const Json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  if (j.contains("family")) {
    const auto fam = j["family"].is_string() ? family_from_name(j["family"].get<std::string>())
                                             : std::nullopt;
    if (!fam || *fam != L.family())
      throw ParseError(path + ".family", "expected \"" + std::string(family_name(L.family())) + "\"");
  }
  if (j.contains("n") && (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != L.n()))
    throw ParseError(path + ".n", "expected " + std::to_string(L.n()));
  if (!j.contains("matrix")) throw ParseError(path + ".matrix", "missing");
  const MatrixRat m = matrix_from_json(j["matrix"], path + ".matrix");
  if (m.rows() != L.matrix_size() || m.cols() != L.matrix_size())
    throw ParseError(path + ".matrix", "expected a " + std::to_string(L.matrix_size()) + "x" +
                                           std::to_string(L.matrix_size()) + " matrix");
  auto coords = L.try_coords_of(m);
  if (!coords) throw ParseError(path + ".matrix", "matrix does not lie in " + L.name());
  return Elem(L, *std::move(coords));
}

// --- currents ----------------------------------------------------------------

inline Json to_json(const Current& z) {
  Json coeffs = Json::array();
  for (std::size_t k = 0; k < z.order(); ++k) {
    if (z.coeff(k).is_zero()) continue;  // absent degrees mean zero
    coeffs.push_back(Json{{"deg", k}, {"matrix", to_json(z.coeff(k).matrix())}});
  }
  return Json{{"order", z.order()}, {"coeffs", std::move(coeffs)}};
}

inline Current current_from_json(const LieAlg& L, const Json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  if (!j.contains("order") || !j["order"].is_number_unsigned() || j["order"].get<std::size_t>() < 1)
    throw ParseError(path + ".order", "expected a positive integer");
  const auto order = j["order"].get<std::size_t>();
  Current z(L, order);
  if (!j.contains("coeffs")) return z;
  if (!j["coeffs"].is_array()) throw ParseError(path + ".coeffs", "expected an array");
  std::set<std::size_t> seen;
  for (std::size_t k = 0; k < j["coeffs"].size(); ++k) {
    const std::string cpath = path + ".coeffs[" + std::to_string(k) + "]";
    const Json& entry = j["coeffs"][k];
    if (!entry.is_object() || !entry.contains("deg") || !entry["deg"].is_number_unsigned())
      throw ParseError(cpath + ".deg", "expected a non-negative integer");
    const auto deg = entry["deg"].get<std::size_t>();
    if (deg >= order) throw ParseError(cpath + ".deg", "degree exceeds order-1");
    if (!seen.insert(deg).second) throw ParseError(cpath + ".deg", "duplicate degree");
    z.set_coeff(deg, elem_from_json(L, Json{{"matrix", entry.contains("matrix") ? entry["matrix"] : Json()}},
                                    cpath));
  }
  return z;
}

// --- almost-commuting tuples --------------------------------------------------

inline Json to_json(const ACTuple& t) {
  Json j{{"flavor", std::string(flavor_name(t.flavor))},
         {"x", to_json(t.x.matrix())},
         {"y", to_json(t.y.matrix())},
         {"i", to_json(t.i)}};
  if (t.flavor == ACFlavor::A) j["j"] = to_json(*t.j);
  return j;
}

/// Family and parameter implied by a serialized tuple: flavor A with an m x m
/// x-matrix is sl_m, flavor C is sp_m (m = 2n).
inline std::pair<Family, std::size_t> peek_actuple_algebra(const Json& j) {
  if (!j.is_object() || !j.contains("flavor") || !j["flavor"].is_string())
    throw ParseError("flavor", "expected \"A\" or \"C\"");
  const auto flavor = j["flavor"].get<std::string>();
  if (flavor != "A" && flavor != "C") throw ParseError("flavor", "expected \"A\" or \"C\"");
  if (!j.contains("x") || !j["x"].is_array() || j["x"].empty())
    throw ParseError("x", "expected a matrix");
  const std::size_t m = j["x"].size();
  if (flavor == "A") return {Family::SL, m};
  if (m % 2 != 0) throw ParseError("x", "type C needs even matrix size");
  return {Family::SP, m / 2};
}

inline ACTuple actuple_from_json(const LieAlg& L, const Json& j) {
  const auto flavor = j["flavor"].get<std::string>() == "A" ? ACFlavor::A : ACFlavor::C;
  Elem x = elem_from_json(L, Json{{"matrix", j.contains("x") ? j["x"] : Json()}}, "x");
  Elem y = elem_from_json(L, Json{{"matrix", j.contains("y") ? j["y"] : Json()}}, "y");
  if (!j.contains("i")) throw ParseError("i", "missing");
  VectorRat i = vector_from_json(j["i"], "i");
  if (i.size() != L.matrix_size()) throw ParseError("i", "wrong length");
  if (flavor == ACFlavor::A) {
    if (!j.contains("j")) throw ParseError("j", "missing for flavor A");
    VectorRat jj = vector_from_json(j["j"], "j");
    if (jj.size() != L.matrix_size()) throw ParseError("j", "wrong length");
    return ACTuple::type_a(std::move(x), std::move(y), std::move(i), std::move(jj));
  }
  if (j.contains("j")) throw ParseError("j", "must be absent for flavor C");
  return ACTuple::type_c(std::move(x), std::move(y), std::move(i));
}

// --- solver reports -------------------------------------------------------------

inline Json to_json(const SpanningPair& p) {
  return Json{{"w1", to_json(p.w1.matrix())},
              {"w2", to_json(p.w2.matrix())},
              {"certificate_rank", p.certificate_rank},
              {"from_fallback", p.from_fallback}};
}

inline Json to_json(const StarSeed& s) {
  return Json{{"a", to_json(s.a.matrix())},
              {"b", to_json(s.b.matrix())},
              {"target", to_json(s.target.matrix())}};
}

inline Json to_json(const SampleRecord& r) {
  return Json{{"draw_index", r.draw_index},
              {"common_centralizer_dim", r.common_centralizer_dim},
              {"solvable", r.solvable}};
}

inline Json to_json(const ObstructionReport& r, bool with_samples = false) {
  Json j{{"algebra", std::string(family_name(r.family)) +
                         std::to_string(r.family == Family::SP ? 2 * r.n : r.n)},
         {"target", to_json(r.target_coords)},
         {"samples_requested", r.samples_requested},
         {"samples_accepted", r.samples_accepted},
         {"draws_total", r.draws_total},
         {"skipped", r.skipped},
         {"min_common_centralizer_dim",
          r.min_common_centralizer_dim ? Json(*r.min_common_centralizer_dim) : Json()},
         {"zero_centralizer_samples", r.zero_centralizer_samples},
         {"solvable_failures", r.solvable_failures},
         {"seed", r.seed},
         {"height", r.height}};
  if (with_samples) {
    Json samples = Json::array();
    for (const auto& s : r.samples) samples.push_back(to_json(s));
    j["samples"] = std::move(samples);
  }
  return j;
}

inline Json to_json(const TorusLimit& lim) {
  Json j{{"converges", lim.converges}};
  if (lim.limit) j["limit"] = to_json(*lim.limit);
  Json positions = Json::array();
  for (const auto& d : lim.divergent_positions) {
    Json entry{{"component", d.component}};
    if (d.col) {
      entry["row"] = d.row;
      entry["col"] = *d.col;
    } else {
      entry["index"] = d.row;
    }
    entry["exponent"] = d.exponent;
    positions.push_back(std::move(entry));
  }
  j["divergent_positions"] = std::move(positions);
  return j;
}

}  // namespace liewidth
