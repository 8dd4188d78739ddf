#pragma once

#include "conekit/cone.hpp"
#include "conekit/flags.hpp"
#include "conekit/linalg.hpp"

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace conekit {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

// Matrix file: { "m": integer, "entries": [[string, ...], ...] } with entries
// in the field grammar. Symmetry is validated on load.
inline MatrixK sym_matrix_from_json(const json& j) {
  try {
    Eigen::Index m = j.at("m").get<Eigen::Index>();
    const auto& rows = j.at("entries");
    if (m < 1 || static_cast<Eigen::Index>(rows.size()) != m)
      throw ParseError("matrix: entry rows do not match dimension");
    MatrixK out(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const auto& row = rows.at(static_cast<std::size_t>(i));
      if (static_cast<Eigen::Index>(row.size()) != m)
        throw ParseError("matrix: row length does not match dimension");
      for (Eigen::Index k = 0; k < m; ++k)
        out(i, k) = parse_hahn(row.at(static_cast<std::size_t>(k)).get<std::string>());
    }
    if (!is_symmetric(out)) throw ParseError("matrix: not symmetric");
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

inline MatrixK load_sym_matrix(const std::string& path) {
  return sym_matrix_from_json(load_json_file(path));
}

inline json sym_matrix_to_json(const MatrixK& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < a.cols(); ++k) row.push_back(to_text(a(i, k)));
    rows.push_back(row);
  }
  return {{"m", a.rows()}, {"entries", rows}};
}

// Sequence file: { "m": integer, "diag": [ [ {"c": rational, "q": rational},
// ... ], ... ] }. For growth checks an entry may instead carry a polynomial
// exponent: {"c": rational, "p": [rational, ...]} with p[i] the coefficient
// of n^i.
inline SeqSpec seq_spec_from_json(const json& j) {
  try {
    SeqSpec s;
    s.m = j.at("m").get<Eigen::Index>();
    for (const auto& entry : j.at("diag")) {
      std::vector<SeqTerm> terms;
      for (const auto& t : entry)
        terms.push_back({parse_rational(t.at("c").get<std::string>()),
                         parse_rational(t.at("q").get<std::string>())});
      s.diag.push_back(std::move(terms));
    }
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("sequence spec: ") + e.what());
  }
}

inline std::vector<std::vector<ExpTerm>> exp_entries_from_json(const json& j) {
  try {
    std::vector<std::vector<ExpTerm>> entries;
    for (const auto& entry : j.at("diag")) {
      std::vector<ExpTerm> terms;
      for (const auto& t : entry) {
        ExpTerm e;
        e.c = parse_rational(t.at("c").get<std::string>());
        if (t.contains("p")) {
          for (const auto& c : t.at("p"))
            e.exponent.push_back(parse_rational(c.get<std::string>()));
        } else {
          e.exponent = {Rational(0), parse_rational(t.at("q").get<std::string>())};
        }
        terms.push_back(std::move(e));
      }
      entries.push_back(std::move(terms));
    }
    return entries;
  } catch (const json::exception& e) {
    throw ParseError(std::string("sequence spec: ") + e.what());
  }
}

inline SeqSpec load_seq_spec(const std::string& path) {
  return seq_spec_from_json(load_json_file(path));
}

inline VectorK vector_from_json(const json& j) {
  VectorK v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = parse_hahn(j.at(static_cast<std::size_t>(i)).get<std::string>());
  return v;
}

inline json vector_to_json(const VectorK& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_text(v(i)));
  return out;
}

// Frame file: JSON array of vectors, one per line of the frame.
inline Frame frame_from_json(const json& j) {
  try {
    std::vector<VectorK> lines;
    for (const auto& v : j) lines.push_back(vector_from_json(v));
    return make_frame(std::move(lines));
  } catch (const json::exception& e) {
    throw ParseError(std::string("frame: ") + e.what());
  }
}

inline json frame_to_json(const Frame& f) {
  json out = json::array();
  for (const auto& line : f.lines) out.push_back(vector_to_json(line));
  return out;
}

// Flag file: JSON array of subspaces, each an array of spanning vectors.
inline Flag flag_from_json(const json& j) {
  try {
    std::vector<Subspace> subspaces;
    for (const auto& sub : j) {
      std::vector<VectorK> vs;
      for (const auto& v : sub) vs.push_back(vector_from_json(v));
      subspaces.push_back(span_of_vectors(vs));
    }
    return make_flag(std::move(subspaces));
  } catch (const json::exception& e) {
    throw ParseError(std::string("flag: ") + e.what());
  }
}

inline Flag load_flag(const std::string& path) {
  return flag_from_json(load_json_file(path));
}

inline json flag_to_json(const Flag& f) {
  json out = json::array();
  for (const auto& s : f.subspaces) {
    json sub = json::array();
    for (Eigen::Index i = 0; i < s.basis.rows(); ++i)
      sub.push_back(vector_to_json(s.basis.row(i).transpose()));
    out.push_back(sub);
  }
  return out;
}

// Polynomial file: { "coeffs": [string, ...] }, index = power.
inline PolynomialK polynomial_from_json(const json& j) {
  try {
    std::vector<HahnNumber> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_hahn(c.get<std::string>()));
    return PolynomialK(std::move(coeffs));
  } catch (const json::exception& e) {
    throw ParseError(std::string("polynomial: ") + e.what());
  }
}

// Comma-separated rationals, e.g. "1,0,-1".
inline std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(parse_rational(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || out.empty()) out.push_back(parse_rational(cur));
  return out;
}

inline VectorQ to_vector_q(const std::vector<Rational>& v) {
  VectorQ out(static_cast<Eigen::Index>(v.size()));
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = v[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace conekit
