// SPDX-License-Identifier: Apache-2.0

#ifndef GENTLECERT_SERIALIZE_HPP
#define GENTLECERT_SERIALIZE_HPP

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gentlecert/gentle_povm.hpp"
#include "gentlecert/states.hpp"
#include "gentlecert/superop.hpp"
#include "gentlecert/two_design.hpp"
#include "gentlecert/types.hpp"

namespace gentlecert {

using json = nlohmann::json;

// Matrix wire format: {"dim": d, "re": row-major, "im": row-major}.

inline json matrix_to_json(const CMatrix& m) {
  const int d = static_cast<int>(m.rows());
  std::vector<double> re, im;
  re.reserve(static_cast<std::size_t>(d) * d);
  im.reserve(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < static_cast<int>(m.cols()); ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  return json{{"dim", d}, {"re", re}, {"im", im}};
}

inline CMatrix matrix_from_json(const json& j) {
  const int d = j.at("dim").get<int>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (static_cast<int>(re.size()) != d * d || static_cast<int>(im.size()) != d * d)
    throw std::invalid_argument("matrix_from_json: entry count does not match dim");
  CMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j2 = 0; j2 < d; ++j2) {
      const std::size_t k = static_cast<std::size_t>(i) * d + j2;
      m(i, j2) = Complex(re[k], im[k]);
    }
  return m;
}

inline json density_to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

inline DensityMatrix density_from_json(const json& j) { return DensityMatrix(matrix_from_json(j)); }

// Design wire format: {"dim": d, "count": D, "vectors": [[re[], im[]], ...]}.

inline json design_to_json(const TwoDesign& design) {
  json vectors = json::array();
  for (const auto& v : design.vectors()) {
    std::vector<double> re(static_cast<std::size_t>(v.size()));
    std::vector<double> im(static_cast<std::size_t>(v.size()));
    for (int i = 0; i < v.size(); ++i) {
      re[static_cast<std::size_t>(i)] = v(i).real();
      im[static_cast<std::size_t>(i)] = v(i).imag();
    }
    vectors.push_back(json::array({re, im}));
  }
  return json{{"dim", design.dim()}, {"count", design.count()}, {"vectors", vectors}};
}

inline TwoDesign design_from_json(const json& j,
                                  TwoDesign::Validate mode = TwoDesign::Validate::Full) {
  const int d = j.at("dim").get<int>();
  const int count = j.at("count").get<int>();
  const auto& vectors = j.at("vectors");
  if (static_cast<int>(vectors.size()) != count)
    throw std::invalid_argument("design_from_json: vector count mismatch");
  std::vector<CVector> vecs;
  vecs.reserve(vectors.size());
  for (const auto& pair : vectors) {
    const auto re = pair.at(0).get<std::vector<double>>();
    const auto im = pair.at(1).get<std::vector<double>>();
    if (static_cast<int>(re.size()) != d || static_cast<int>(im.size()) != d)
      throw std::invalid_argument("design_from_json: vector dimension mismatch");
    CVector v(d);
    for (int i = 0; i < d; ++i) v(i) = Complex(re[static_cast<std::size_t>(i)], im[static_cast<std::size_t>(i)]);
    vecs.push_back(std::move(v));
  }
  return TwoDesign(d, std::move(vecs), mode);
}

// POVM descriptor: the design plus both noise parameters.

inline json povm_to_json(const GentlePovm& povm) {
  return json{{"design", design_to_json(povm.design())},
              {"alpha", povm.alpha()},
              {"delta", povm.delta()}};
}

inline GentlePovm povm_from_json(const json& j) {
  return GentlePovm(design_from_json(j.at("design")), j.at("alpha").get<double>());
}

// Super-operator export: {"dim", "matrix" (row-major), "eigenvalues"}.

inline json superop_to_json(const SuperOpMatrix& s) {
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(s.matrix.size()));
  for (int i = 0; i < s.matrix.rows(); ++i)
    for (int j = 0; j < s.matrix.cols(); ++j) flat.push_back(s.matrix(i, j));
  std::vector<double> eigs(s.eigenvalues.data(), s.eigenvalues.data() + s.eigenvalues.size());
  return json{{"dim", s.dim}, {"matrix", flat}, {"eigenvalues", eigs}};
}

// Outcome streams: one '0'/'1' bitstring of length D per line.

inline void write_outcomes(std::ostream& out, const std::vector<Outcome>& outcomes) {
  for (const auto& z : outcomes) out << z.to_string() << '\n';
}

inline void write_outcomes_file(const std::string& path, const std::vector<Outcome>& outcomes) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_outcomes_file: cannot open " + path);
  write_outcomes(out, outcomes);
}

inline std::vector<Outcome> read_outcomes(std::istream& in) {
  std::vector<Outcome> outcomes;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    outcomes.push_back(Outcome::from_string(line));
  }
  return outcomes;
}

inline std::vector<Outcome> read_outcomes_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_outcomes_file: cannot open " + path);
  return read_outcomes(in);
}

}  // namespace gentlecert

#endif  // GENTLECERT_SERIALIZE_HPP
