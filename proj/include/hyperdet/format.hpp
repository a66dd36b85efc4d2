#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hdet {

/// Dimension vector (k_0+1, ..., k_p+1) of a multidimensional matrix.
/// Axis 0 is the distinguished slot; p >= 1, so there are always at least two axes.
class Format {
 public:
  explicit Format(std::vector<std::size_t> dims);

  std::span<const std::size_t> dims() const { return dims_; }
  std::size_t dim(std::size_t axis) const { return dims_.at(axis); }
  /// k_axis = dim(axis) - 1
  std::size_t k(std::size_t axis) const { return dims_.at(axis) - 1; }
  std::size_t axes() const { return dims_.size(); }
  /// p, the index of the last axis.
  std::size_t order() const { return dims_.size() - 1; }
  std::size_t size() const;

  /// Sum of k_1..k_p.
  std::size_t inner_k_sum() const;
  bool boundary_format() const { return k(0) == inner_k_sum(); }
  /// Throws FormatError when not boundary format.
  void require_boundary() const;

  /// (m_1, ..., m_p) with m_j = k_1 + ... + k_{j-1}, m_1 = 0.
  std::vector<std::size_t> m_sequence() const;

  /// Row-major strides.
  std::vector<std::size_t> strides() const;

  /// "3x2x2"
  std::string to_string() const;

  friend bool operator==(const Format&, const Format&) = default;

 private:
  std::vector<std::size_t> dims_;
};

/// Advances a row-major multi-index; returns false after the last index.
bool next_index(std::span<std::size_t> idx, std::span<const std::size_t> dims);

}  // namespace hdet
