#pragma once

#include <string>
#include <vector>

#include "cotlar/coxeter.hpp"
#include "cotlar/graph_product.hpp"

using Matrix = std::vector<std::vector<std::uint32_t>>;

inline constexpr std::uint32_t kInf = cotlar::kInfiniteOrder;

inline Matrix dinfty_matrix() { return {{1, kInf}, {kInf, 1}}; }
inline Matrix a2_matrix() { return {{1, 3}, {3, 1}}; }
inline Matrix pgl2z_matrix() { return {{1, 2, kInf}, {2, 1, 3}, {kInf, 3, 1}}; }
inline Matrix a2tilde_matrix() { return {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}; }
inline Matrix b3_matrix() { return {{1, 4, 2}, {4, 1, 3}, {2, 3, 1}}; }
inline Matrix h3_matrix() { return {{1, 5, 2}, {5, 1, 3}, {2, 3, 1}}; }

inline Matrix pentagon_matrix() {
  Matrix m(5, std::vector<std::uint32_t>(5, 2));
  for (std::size_t i = 0; i < 5; ++i) {
    m[i][i] = 1;
    m[i][(i + 1) % 5] = kInf;
    m[(i + 1) % 5][i] = kInf;
  }
  return m;
}

inline cotlar::CoxeterSystem dinfty(std::size_t cap = 16) {
  return cotlar::CoxeterSystem::validate({"s", "t"}, dinfty_matrix(), cap);
}
inline cotlar::CoxeterSystem a2() { return cotlar::CoxeterSystem::validate({"s", "t"}, a2_matrix()); }
inline cotlar::CoxeterSystem pgl2z() { return cotlar::CoxeterSystem::validate({"s", "t", "u"}, pgl2z_matrix()); }
inline cotlar::CoxeterSystem a2tilde() { return cotlar::CoxeterSystem::validate({"s", "t", "u"}, a2tilde_matrix()); }
inline cotlar::CoxeterSystem b3() { return cotlar::CoxeterSystem::validate({"a", "b", "c"}, b3_matrix()); }
inline cotlar::CoxeterSystem h3() { return cotlar::CoxeterSystem::validate({"a", "b", "c"}, h3_matrix()); }
inline cotlar::CoxeterSystem pentagon() {
  return cotlar::CoxeterSystem::validate({"a", "b", "c", "d", "e"}, pentagon_matrix());
}

inline cotlar::GraphProduct z2_free_z3() { return cotlar::GraphProduct::validate({{"a", 2}, {"b", 3}}, {}); }
inline cotlar::GraphProduct z3_free_z2() { return cotlar::GraphProduct::validate({{"a", 3}, {"b", 2}}, {}); }
inline cotlar::GraphProduct z2_free_z2() { return cotlar::GraphProduct::validate({{"a", 2}, {"b", 2}}, {}); }
inline cotlar::GraphProduct z2_times_z2() {
  return cotlar::GraphProduct::validate({{"a", 2}, {"b", 2}}, {{"a", "b"}});
}
inline cotlar::GraphProduct path_abc() {
  return cotlar::GraphProduct::validate({{"a", 2}, {"b", 2}, {"c", 3}}, {{"a", "b"}, {"b", "c"}});
}
inline cotlar::GraphProduct z_free_z2() {
  return cotlar::GraphProduct::validate({{"a", cotlar::kInfiniteCyclic}, {"b", 2}}, {});
}
