#include "hyperdet/format.hpp"

#include "hyperdet/errors.hpp"

#include <numeric>

namespace hdet {

Format::Format(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.size() < 2) {
    throw ShapeError("a multidimensional matrix needs at least 2 axes, got " +
                     std::to_string(dims_.size()));
  }
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] == 0) throw ShapeError("axis " + std::to_string(i) + " has dimension 0");
  }
}

std::size_t Format::size() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>{});
}

std::size_t Format::inner_k_sum() const {
  std::size_t sum = 0;
  for (std::size_t i = 1; i < dims_.size(); ++i) sum += dims_[i] - 1;
  return sum;
}

void Format::require_boundary() const {
  if (!boundary_format()) {
    throw FormatError("format " + to_string() + " is not boundary format: k_0 = " +
                      std::to_string(k(0)) + " but k_1 + ... + k_p = " +
                      std::to_string(inner_k_sum()) +
                      (k(0) < inner_k_sum() ? "" : "; use permute_axes to move the largest axis to slot 0"));
  }
}

std::vector<std::size_t> Format::m_sequence() const {
  std::vector<std::size_t> m(order());
  std::size_t running = 0;
  for (std::size_t j = 1; j <= order(); ++j) {
    m[j - 1] = running;
    running += k(j);
  }
  return m;
}

std::vector<std::size_t> Format::strides() const {
  std::vector<std::size_t> s(dims_.size(), 1);
  for (std::size_t i = dims_.size() - 1; i > 0; --i) s[i - 1] = s[i] * dims_[i];
  return s;
}

std::string Format::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(dims_[i]);
  }
  return out;
}

bool next_index(std::span<std::size_t> idx, std::span<const std::size_t> dims) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < dims[i]) return true;
    idx[i] = 0;
  }
  return false;
}

}  // namespace hdet
