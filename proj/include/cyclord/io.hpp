#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lattice_quotient.hpp"
#include "mv_algebra.hpp"
#include "pco.hpp"

namespace cyclord {

/// Parse/validation failure with the JSON path of the offending node.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& path, const std::string& what)
      : std::runtime_error("at " + path + ": " + what) {}
};

/// A parsed structure file: an MV-algebra, a finite (partially) cyclically
/// ordered group, or a symbolic lattice quotient (whose carrier may be
/// infinite).  `kind` keeps the file's declared kind.
struct Structure {
  enum class Kind { Mv, Pco, Co };
  Kind kind = Kind::Mv;
  std::optional<MvAlgebra> mv;
  std::optional<FinitePco> pco;
  std::optional<LatticeQuotientPco> lq;

  static const char* kind_name(Kind k) {
    switch (k) {
      case Kind::Mv: return "mv";
      case Kind::Pco: return "pco";
      case Kind::Co: return "co";
    }
    return "?";
  }
};

namespace io_detail {

using nlohmann::json;

inline int expect_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<int>();
}

inline std::vector<int> expect_int_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(expect_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<std::vector<int>> expect_table(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of rows");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(expect_int_array(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Structure parse_json(const json& j, const std::filesystem::path& base);

inline Structure parse_ref(const json& j, const std::string& path, const std::filesystem::path& base) {
  if (j.is_string()) {
    const std::filesystem::path p = base / j.get<std::string>();
    std::ifstream in(p);
    if (!in) throw ParseError(path, "cannot open referenced file " + p.string());
    json sub;
    try {
      in >> sub;
    } catch (const json::exception& e) {
      throw ParseError(path, "referenced file " + p.string() + " is not valid JSON: " + e.what());
    }
    return parse_json(sub, p.parent_path());
  }
  if (j.is_object()) return parse_json(j, base);
  throw ParseError(path, "expected a file reference or an inline structure object");
}

inline Structure parse_json(const json& j, const std::filesystem::path& base) {
  if (!j.is_object()) throw ParseError("$", "expected a JSON object");
  if (!j.contains("v") || !j["v"].is_number_integer() || j["v"].get<int>() != 1)
    throw ParseError("$.v", "missing or unsupported schema version (expected 1)");
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("$.kind", "missing kind");
  const std::string kind = j["kind"].get<std::string>();

  Structure s;
  if (kind == "mv") {
    s.kind = Structure::Kind::Mv;
    if (j.contains("gamma")) {
      const auto u = expect_int_array(j["gamma"], "$.gamma");
      try {
        s.mv = make_gamma(u);
      } catch (const std::invalid_argument& e) {
        throw ParseError("$.gamma", e.what());
      }
      return s;
    }
    if (j.contains("product")) {
      if (!j["product"].is_array() || j["product"].size() < 2)
        throw ParseError("$.product", "expected at least two factors");
      std::optional<MvAlgebra> acc;
      for (std::size_t i = 0; i < j["product"].size(); ++i) {
        const Structure f = parse_ref(j["product"][i], "$.product[" + std::to_string(i) + "]", base);
        if (!f.mv) throw ParseError("$.product[" + std::to_string(i) + "]", "factor is not an mv structure");
        acc = acc ? product(*acc, *f.mv) : *f.mv;
      }
      s.mv = std::move(acc);
      return s;
    }
    for (const char* key : {"size", "zero", "oplus", "neg"})
      if (!j.contains(key)) throw ParseError(std::string("$.") + key, "missing field");
    const int size = expect_int(j["size"], "$.size");
    const int zero = expect_int(j["zero"], "$.zero");
    auto oplus = expect_table(j["oplus"], "$.oplus");
    auto neg = expect_int_array(j["neg"], "$.neg");
    if (static_cast<int>(oplus.size()) != size) throw ParseError("$.oplus", "row count differs from size");
    try {
      s.mv = build_mv(std::move(oplus), std::move(neg), zero);
    } catch (const std::invalid_argument& e) {
      throw ParseError("$", e.what());
    }
    return s;
  }

  if (kind != "pco" && kind != "co") throw ParseError("$.kind", "unknown kind '" + kind + "'");
  s.kind = kind == "co" ? Structure::Kind::Co : Structure::Kind::Pco;

  if (j.contains("cyclic")) {
    const int n = expect_int(j["cyclic"], "$.cyclic");
    if (n <= 0) throw ParseError("$.cyclic", "order must be positive");
    s.pco = make_cyclic_group(n);
    return s;
  }
  if (j.contains("wound")) {
    const auto u = expect_int_array(j["wound"], "$.wound");
    try {
      s.lq = wound_round(u);
    } catch (const std::invalid_argument& e) {
      throw ParseError("$.wound", e.what());
    }
    return s;
  }
  if (j.contains("product")) {
    if (!j["product"].is_array() || j["product"].size() < 2)
      throw ParseError("$.product", "expected at least two factors");
    std::optional<FinitePco> acc;
    for (std::size_t i = 0; i < j["product"].size(); ++i) {
      const Structure f = parse_ref(j["product"][i], "$.product[" + std::to_string(i) + "]", base);
      const FinitePco* fp = f.pco ? &*f.pco : nullptr;
      FinitePco expanded;
      if (!fp && f.lq && f.lq->is_finite()) { expanded = f.lq->to_finite(); fp = &expanded; }
      if (!fp) throw ParseError("$.product[" + std::to_string(i) + "]", "factor is not a finite pco structure");
      acc = acc ? make_product_pco(*acc, *fp) : *fp;
    }
    s.pco = std::move(acc);
    return s;
  }
  for (const char* key : {"size", "zero", "add", "neg", "r"})
    if (!j.contains(key)) throw ParseError(std::string("$.") + key, "missing field");
  const int size = expect_int(j["size"], "$.size");
  FiniteGroup g;
  g.size = size;
  g.zero = expect_int(j["zero"], "$.zero");
  g.add = expect_table(j["add"], "$.add");
  g.neg = expect_int_array(j["neg"], "$.neg");
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError("$.add", e.what());
  }
  if (!j["r"].is_array()) throw ParseError("$.r", "expected an array of triples");
  std::vector<char> r(static_cast<std::size_t>(size) * size * size, 0);
  for (std::size_t i = 0; i < j["r"].size(); ++i) {
    const auto t = expect_int_array(j["r"][i], "$.r[" + std::to_string(i) + "]");
    if (t.size() != 3) throw ParseError("$.r[" + std::to_string(i) + "]", "expected a triple");
    for (int v : t)
      if (v < 0 || v >= size) throw ParseError("$.r[" + std::to_string(i) + "]", "index out of range");
    r[(static_cast<std::size_t>(t[0]) * size + t[1]) * size + t[2]] = 1;
  }
  s.pco = finite_pco_from(std::move(g), std::move(r));
  return s;
}

}  // namespace io_detail

inline Structure parse_structure(const std::string& text, const std::filesystem::path& base = ".") {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("$", std::string("invalid JSON: ") + e.what());
  }
  return io_detail::parse_json(j, base);
}

inline Structure load_structure(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("$", "cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_structure(ss.str(), file.parent_path());
}

/// Canonical serialization: explicit tables (generator specs for the
/// infinite lattice quotients), sorted keys, R triples in lexicographic
/// order, newline-terminated.
inline std::string serialize_structure(const Structure& s) {
  nlohmann::json j;
  j["v"] = 1;
  j["kind"] = Structure::kind_name(s.kind);
  if (s.kind == Structure::Kind::Mv) {
    if (!s.mv) throw std::invalid_argument("mv structure is empty");
    const MvAlgebra& a = *s.mv;
    j["size"] = a.size;
    j["zero"] = a.zero;
    j["oplus"] = a.oplus;
    j["neg"] = a.neg;
  } else if (s.lq && !s.lq->is_finite()) {
    j["wound"] = s.lq->u;
  } else {
    FinitePco fin;
    if (s.pco) fin = *s.pco;
    else if (s.lq) fin = s.lq->to_finite();
    else throw std::invalid_argument("pco structure is empty");
    j["size"] = fin.size;
    j["zero"] = fin.zero;
    j["add"] = fin.add;
    j["neg"] = fin.neg;
    std::vector<std::vector<int>> triples;
    for (int x = 0; x < fin.size; ++x)
      for (int y = 0; y < fin.size; ++y)
        for (int z = 0; z < fin.size; ++z)
          if (fin.rel(x, y, z)) triples.push_back({x, y, z});
    j["r"] = triples;
  }
  return j.dump() + "\n";
}

inline void save_structure(const Structure& s, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << serialize_structure(s);
}

}  // namespace cyclord
