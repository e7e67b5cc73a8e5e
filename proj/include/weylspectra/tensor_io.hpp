#pragma once

#include <array>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <weylspectra/tensor.hpp>

namespace weylspectra {

/// JSON tensor exchange format (0-based indices):
/// {
///   "dim": m, "signature": [p, q],
///   "gram": [[...], ...],                     // full symmetric m x m
///   "components": [[i, j, k, l, value], ...]  // non-zero entries only
/// }
/// The loader completes every listed entry across its 8-element symmetry
/// orbit (antisymmetry in both slots, pair exchange) and rejects files whose
/// entries conflict under those symmetries; the writer emits one canonical
/// representative per orbit (lexicographically smallest index tuple).

namespace detail {

using OrbitImage = std::pair<std::array<int, 4>, double>;

inline std::array<OrbitImage, 8> symmetry_orbit(int i, int j, int k, int l, double v) {
  return {{
      {{i, j, k, l}, v},  {{j, i, k, l}, -v}, {{i, j, l, k}, -v}, {{j, i, l, k}, v},
      {{k, l, i, j}, v},  {{l, k, i, j}, -v}, {{k, l, j, i}, -v}, {{l, k, j, i}, v},
  }};
}

}  // namespace detail

inline nlohmann::ordered_json tensor_to_json(const CurvatureTensor& A) {
  const int m = A.dim();
  nlohmann::ordered_json out;
  out["dim"] = m;
  out["signature"] = {A.space().signature().p, A.space().signature().q};
  nlohmann::ordered_json gram = nlohmann::ordered_json::array();
  for (int i = 0; i < m; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < m; ++j) row.push_back(A.space().gram()(i, j));
    gram.push_back(std::move(row));
  }
  out["gram"] = std::move(gram);

  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          const double v = A(i, j, k, l);
          if (v == 0.0) continue;
          // Emit only the canonical orbit representative.
          const std::array<int, 4> me{i, j, k, l};
          bool canonical = true;
          for (const auto& image : detail::symmetry_orbit(i, j, k, l, v))
            if (image.first < me) {
              canonical = false;
              break;
            }
          if (canonical) comps.push_back({i, j, k, l, v});
        }
  out["components"] = std::move(comps);
  return out;
}

inline CurvatureTensor tensor_from_json(const nlohmann::json& in,
                                        bool enforce_symmetries = true,
                                        double tol = 1e-10) {
  if (!in.is_object() || !in.contains("dim") || !in.contains("signature") ||
      !in.contains("gram"))
    throw ParseError("tensor file needs dim, signature and gram fields");
  int m = 0, p = 0, q = 0;
  try {
    m = in.at("dim").get<int>();
    p = in.at("signature").at(0).get<int>();
    q = in.at("signature").at(1).get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed tensor header: ") + e.what());
  }
  if (p + q != m) throw ValidationError("signature does not sum to dim");

  Eigen::MatrixXd G(m, m);
  try {
    const auto& gram = in.at("gram");
    if (static_cast<int>(gram.size()) != m) throw ParseError("gram row count != dim");
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(gram.at(i).size()) != m)
        throw ParseError("gram column count != dim");
      for (int j = 0; j < m; ++j) G(i, j) = gram.at(i).at(j).get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed gram: ") + e.what());
  }

  CurvatureTensor A{[&] {
    try {
      return InnerProduct(G, Signature(p, q));
    } catch (const InvalidArgument& e) {
      throw ValidationError(e.what());
    }
  }()};

  std::vector<char> written(static_cast<std::size_t>(m) * m * m * m, 0);
  auto flat = [m](int i, int j, int k, int l) {
    return ((static_cast<std::size_t>(i) * m + j) * m + k) * m + l;
  };
  double scale = 1.0;
  if (in.contains("components")) {
    try {
      for (const auto& row : in.at("components")) {
        if (row.size() != 5) throw ParseError("component rows are [i,j,k,l,value]");
        const int i = row.at(0).get<int>(), j = row.at(1).get<int>(),
                  k = row.at(2).get<int>(), l = row.at(3).get<int>();
        const double v = row.at(4).get<double>();
        if (i < 0 || j < 0 || k < 0 || l < 0 || i >= m || j >= m || k >= m || l >= m)
          throw ValidationError("component index out of range");
        scale = std::max(scale, std::abs(v));
        for (const auto& [t, sv] : detail::symmetry_orbit(i, j, k, l, v)) {
          double& slot = A.at(t[0], t[1], t[2], t[3]);
          if (written[flat(t[0], t[1], t[2], t[3])]) {
            if (std::abs(slot - sv) > tol * scale)
              throw ValidationError("component entries conflict under the curvature symmetries");
          } else {
            slot = sv;
            written[flat(t[0], t[1], t[2], t[3])] = 1;
          }
        }
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed components: ") + e.what());
    }
  }

  if (enforce_symmetries) {
    const auto rep = validate(A);
    if (!rep.passes(tol * scale))
      throw ValidationError("tensor fails curvature symmetry validation");
  }
  return A;
}

inline CurvatureTensor load_tensor(const std::string& path,
                                   bool enforce_symmetries = true) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open tensor file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return tensor_from_json(j, enforce_symmetries);
}

inline void save_tensor(const std::string& path, const CurvatureTensor& A) {
  std::ofstream f(path);
  if (!f) throw Error("cannot open output file: " + path);
  f << tensor_to_json(A).dump(2) << '\n';
}

}  // namespace weylspectra
