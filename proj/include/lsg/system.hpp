#pragma once

#include <string>
#include <vector>

#include "lsg/linalg.hpp"

namespace lsg {

/// An m x n integer system A.x = b considered over Z_p.
struct LinearSystem {
  IntMatrix a;
  IntVector b;
  Modulus p = Modulus::finite(2);
  std::string name;                              // optional instance tag
  std::vector<std::string> row_names, col_names; // optional, for display

  std::size_t rows() const { return a.rows(); }
  std::size_t cols() const { return a.cols(); }

  /// Column indices with a nonzero entry in the given row.
  std::vector<std::size_t> support(std::size_t row) const {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(row, j) != 0) s.push_back(j);
    return s;
  }

  std::string row_label(std::size_t i) const {
    return i < row_names.size() ? row_names[i] : std::to_string(i);
  }
  std::string col_label(std::size_t j) const {
    return j < col_names.size() ? col_names[j] : std::to_string(j);
  }

  void check_shape() const {
    if (b.size() != a.rows())
      throw std::invalid_argument("LinearSystem: b length does not match row count");
  }
};

} // namespace lsg
