#ifndef GINF_TEST_COXETER_ORACLE_HPP
#define GINF_TEST_COXETER_ORACLE_HPP

#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ginf/labeled_graph.hpp"

namespace ginf::testing {

/// Cosine bilinear form B(e_s, e_t) = -cos(pi / m_st), with -1 for m = inf.
inline Eigen::MatrixXd cosine_matrix(const LabeledGraph &g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd b = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index s = 0; s < n; ++s)
    for (Eigen::Index t = 0; t < n; ++t)
      if (s != t) {
        int m = g.label(static_cast<std::size_t>(s), static_cast<std::size_t>(t));
        b(s, t) = m == 0 ? -1.0 : -std::cos(std::numbers::pi / m);
      }
  return b;
}

/// A Coxeter group is finite iff its cosine form is positive definite.
inline bool cosine_form_positive_definite(const LabeledGraph &g) {
  if (g.empty())
    return true;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cosine_matrix(g));
  return es.eigenvalues().minCoeff() > 1e-9;
}

/// Reflection matrices of the faithful geometric representation.
inline std::vector<Eigen::MatrixXd> reflection_matrices(const LabeledGraph &g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd b = cosine_matrix(g);
  std::vector<Eigen::MatrixXd> out;
  for (Eigen::Index s = 0; s < n; ++s) {
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
    // sigma_s(e_t) = e_t - 2 B(e_s, e_t) e_s; column t is the image of e_t.
    for (Eigen::Index t = 0; t < n; ++t)
      r(s, t) -= 2.0 * b(s, t);
    out.push_back(r);
  }
  return out;
}

/// Matrix of a word in the geometric representation.
inline Eigen::MatrixXd word_matrix(const std::vector<Eigen::MatrixXd> &refl,
                                   const std::vector<int> &word, Eigen::Index n) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (int s : word)
    m = m * refl[static_cast<std::size_t>(s)];
  return m;
}

using MatrixKey = std::vector<long long>;

inline MatrixKey matrix_key(const Eigen::MatrixXd &m) {
  MatrixKey k;
  k.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.size(); ++i)
    k.push_back(std::llround(m.data()[i] * 1e6));
  return k;
}

/// Breadth-first element enumeration in the geometric representation.
/// Returns the sphere sizes when the group closes within `cap` elements.
inline std::optional<std::vector<std::size_t>> enumerate_by_matrices(const LabeledGraph &g,
                                                                     std::size_t cap) {
  const auto n = static_cast<Eigen::Index>(g.size());
  auto refl = reflection_matrices(g);
  std::map<MatrixKey, int> seen;
  std::vector<Eigen::MatrixXd> frontier{Eigen::MatrixXd::Identity(n, n)};
  seen.emplace(matrix_key(frontier[0]), 0);
  std::vector<std::size_t> spheres{1};
  while (!frontier.empty()) {
    std::vector<Eigen::MatrixXd> next;
    for (const auto &m : frontier)
      for (const auto &r : refl) {
        Eigen::MatrixXd p = m * r;
        if (seen.emplace(matrix_key(p), 0).second) {
          next.push_back(p);
          if (seen.size() > cap)
            return std::nullopt;
        }
      }
    if (!next.empty())
      spheres.push_back(next.size());
    frontier = std::move(next);
  }
  return spheres;
}

} // namespace ginf::testing

#endif // GINF_TEST_COXETER_ORACLE_HPP
