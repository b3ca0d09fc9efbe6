#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qsorep/repmatrix.hpp"
#include "qsorep/verify.hpp"

namespace qsorep {

using nlohmann::json;

// ---- half-integer formatting -------------------------------------------

/// "3/2" for odd doubled values, plain integer text otherwise.
inline std::string half_to_string(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

/// Accepts "3/2", "-1/2", "1.5", and plain integers.
inline int parse_half(const std::string& token) {
  const auto slash = token.find('/');
  std::size_t used = 0;
  if (slash != std::string::npos) {
    const int num = std::stoi(token.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("parse_half: bad token " + token);
    if (token.substr(slash + 1) != "2")
      throw std::invalid_argument("parse_half: only halves supported: " + token);
    return num;
  }
  const double v = std::stod(token, &used);
  if (used != token.size())
    throw std::invalid_argument("parse_half: bad token " + token);
  const double tw = v * 2.0;
  const int twi = static_cast<int>(std::lround(tw));
  if (tw != static_cast<double>(twi))
    throw std::invalid_argument("parse_half: not a half-integer: " + token);
  return twi;
}

inline std::string flavor_to_string(Flavor f) {
  return f == Flavor::classical ? "classical" : "nonclassical";
}

inline Flavor flavor_from_string(const std::string& s) {
  if (s == "classical") return Flavor::classical;
  if (s == "nonclassical") return Flavor::nonclassical;
  throw std::invalid_argument("unknown flavor: " + s);
}

inline std::string kind_to_string(RepKind k) {
  switch (k) {
    case RepKind::classical: return "classical";
    case RepKind::nonclassical: return "nonclassical";
    case RepKind::onedim: return "one-dim";
    case RepKind::prime: return "prime";
  }
  throw std::logic_error("unknown kind");
}

inline RepKind kind_from_string(const std::string& s) {
  if (s == "classical") return RepKind::classical;
  if (s == "nonclassical") return RepKind::nonclassical;
  if (s == "one-dim" || s == "onedim") return RepKind::onedim;
  if (s == "prime") return RepKind::prime;
  throw std::invalid_argument("unknown kind: " + s);
}

// ---- tableaux ------------------------------------------------------------

inline json pattern_to_json(const GTPattern& pat) {
  return json{{"flavor", flavor_to_string(pat.flavor())}, {"rows", pat.rows()}};
}

inline GTPattern pattern_from_json(const json& j, int n) {
  GTPattern pat(n, flavor_from_string(j.at("flavor").get<std::string>()),
                j.at("rows").get<std::vector<std::vector<int>>>());
  if (!pat.valid()) throw std::invalid_argument("pattern_from_json: invalid tableau");
  return pat;
}

// ---- representations ------------------------------------------------------

inline json rep_to_json(const RepMatrices<double>& rep) {
  json j;
  j["n"] = rep.n();
  j["kind"] = kind_to_string(rep.spec.kind);
  j["q"] = rep.spec.q.q;
  json weight = json::array();
  for (int tw : rep.spec.weight.twice) weight.push_back(half_to_string(tw));
  j["weight"] = weight;
  if (rep.spec.signs) j["signs"] = rep.spec.signs->eps;
  json basis = json::array();
  for (const auto& pat : rep.basis) basis.push_back(pat.rows());
  j["basis"] = basis;
  json gens;
  for (const auto& [k, M] : rep.generators) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < M.cols(); ++c)
        row.push_back(json::array({M(r, c).real(), M(r, c).imag()}));
      rows.push_back(std::move(row));
    }
    gens["I_" + std::to_string(k) + "_" + std::to_string(k - 1)] = std::move(rows);
  }
  j["generators"] = std::move(gens);
  return j;
}

inline RepMatrices<double> rep_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const RepKind kind = kind_from_string(j.at("kind").get<std::string>());
  HighestWeight w;
  w.n = n;
  w.flavor = (kind == RepKind::classical || kind == RepKind::prime)
                 ? Flavor::classical
                 : Flavor::nonclassical;
  for (const auto& tok : j.at("weight")) w.twice.push_back(parse_half(tok.get<std::string>()));
  std::optional<SignVector> signs;
  if (j.contains("signs")) signs = SignVector{j.at("signs").get<std::vector<int>>()};
  RepMatrices<double> rep{
      RepSpec<double>{w, signs, QParam<double>(j.at("q").get<double>()), kind},
      {},
      {}};
  const Flavor basis_flavor =
      (kind == RepKind::nonclassical || kind == RepKind::onedim)
          ? Flavor::nonclassical
          : Flavor::classical;
  for (const auto& rows : j.at("basis"))
    rep.basis.emplace_back(n, basis_flavor, rows.get<std::vector<std::vector<int>>>());
  const auto d = static_cast<Eigen::Index>(rep.basis.size());
  for (const auto& [name, rows] : j.at("generators").items()) {
    if (name.rfind("I_", 0) != 0)
      throw std::invalid_argument("rep_from_json: bad generator name " + name);
    const int k = std::stoi(name.substr(2, name.find('_', 2) - 2));
    CMatrix M(d, d);
    Eigen::Index r = 0;
    for (const auto& row : rows) {
      Eigen::Index c = 0;
      for (const auto& entry : row) {
        M(r, c) = {entry.at(0).get<double>(), entry.at(1).get<double>()};
        ++c;
      }
      ++r;
    }
    rep.generators.emplace(k, std::move(M));
  }
  return rep;
}

// ---- reports --------------------------------------------------------------

inline json relation_report_to_json(const RelationReport& report) {
  return json{{"residuals", report.residuals},
              {"max_residual", report.max_residual},
              {"tol", report.tol},
              {"pass", report.pass}};
}

inline json decomposition_report_to_json(const DecompositionReport& report) {
  json blocks = json::array();
  for (const auto& block : report.blocks) {
    json b;
    b["odd_signs"] = block.odd_signs;
    b["dim"] = block.rep.dim();
    if (block.rep.spec.signs) b["signs"] = block.rep.spec.signs->eps;
    blocks.push_back(std::move(b));
  }
  return json{{"blocks", blocks},
              {"invariance_residual", report.invariance_residual}};
}

// ---- files ------------------------------------------------------------------

/// Write via a sibling temp file and rename, so readers never observe a
/// partially written file.
inline void atomic_write_file(const std::filesystem::path& path,
                              const std::string& content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

inline json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return json::parse(in);
}

/// CSV convenience export: one file per generator, row-major "re+imi".
inline void write_csv(const RepMatrices<double>& rep,
                      const std::filesystem::path& stem) {
  for (const auto& [k, M] : rep.generators) {
    std::ostringstream out;
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
      for (Eigen::Index c = 0; c < M.cols(); ++c) {
        if (c) out << ',';
        out << M(r, c).real() << (M(r, c).imag() < 0 ? "" : "+")
            << M(r, c).imag() << 'i';
      }
      out << '\n';
    }
    auto path = stem;
    path += "_I_" + std::to_string(k) + "_" + std::to_string(k - 1) + ".csv";
    atomic_write_file(path, out.str());
  }
}

}  // namespace qsorep
