#include "hyperdet/tensor.hpp"

#include "hyperdet/errors.hpp"

#include <algorithm>
#include <string>

namespace hdet {

MultiMatrix MultiMatrix::zeros(Format format) {
  const std::size_t n = format.size();
  return MultiMatrix(std::move(format), std::vector<Scalar>(n));
}

MultiMatrix MultiMatrix::from_entries(Format format, std::vector<Scalar> entries) {
  if (entries.size() != format.size()) {
    throw ShapeError("format " + format.to_string() + " expects " +
                     std::to_string(format.size()) + " entries, got " +
                     std::to_string(entries.size()));
  }
  return MultiMatrix(std::move(format), std::move(entries));
}

std::size_t MultiMatrix::offset(std::span<const std::size_t> idx) const {
  const auto dims = format_.dims();
  if (idx.size() != dims.size()) {
    throw ShapeError("index has " + std::to_string(idx.size()) + " components, format " +
                     format_.to_string() + " has " + std::to_string(dims.size()) + " axes");
  }
  std::size_t off = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (idx[i] >= dims[i]) {
      throw ShapeError("index " + std::to_string(idx[i]) + " out of range on axis " +
                       std::to_string(i) + " of size " + std::to_string(dims[i]));
    }
    off = off * dims[i] + idx[i];
  }
  return off;
}

const Scalar& MultiMatrix::get(std::span<const std::size_t> idx) const {
  return entries_[offset(idx)];
}

MultiMatrix operator+(const MultiMatrix& a, const MultiMatrix& b) {
  if (a.format_ != b.format_) {
    throw ShapeError("cannot add formats " + a.format_.to_string() + " and " +
                     b.format_.to_string());
  }
  std::vector<Scalar> sum(a.entries_.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a.entries_[i] + b.entries_[i];
  return MultiMatrix(a.format_, std::move(sum));
}

namespace {

// Axis order that moves `axis` to the end (to_front = false) or the front.
std::vector<std::size_t> move_axis(std::size_t axes, std::size_t axis, bool to_front) {
  std::vector<std::size_t> sigma;
  sigma.reserve(axes);
  if (to_front) sigma.push_back(axis);
  for (std::size_t i = 0; i < axes; ++i)
    if (i != axis) sigma.push_back(i);
  if (!to_front) sigma.push_back(axis);
  return sigma;
}

}  // namespace

MultiMatrix convolve(const MultiMatrix& a, const MultiMatrix& b, std::size_t r, std::size_t s) {
  const Format& fa = a.format();
  const Format& fb = b.format();
  if (r >= fa.axes() || s >= fb.axes()) {
    throw ShapeError("convolution axes (" + std::to_string(r) + "," + std::to_string(s) +
                     ") out of range for formats " + fa.to_string() + " and " + fb.to_string());
  }
  if (fa.dim(r) != fb.dim(s)) {
    throw ShapeError("convolution needs dims_A[" + std::to_string(r) + "] = dims_B[" +
                     std::to_string(s) + "], got " + std::to_string(fa.dim(r)) + " and " +
                     std::to_string(fb.dim(s)));
  }
  const MultiMatrix ap = r + 1 == fa.axes() ? a : permute_axes(a, move_axis(fa.axes(), r, false));
  const MultiMatrix bp = s == 0 ? b : permute_axes(b, move_axis(fb.axes(), s, true));

  std::vector<std::size_t> dims;
  const auto da = ap.format().dims();
  const auto db = bp.format().dims();
  dims.insert(dims.end(), da.begin(), da.end() - 1);
  dims.insert(dims.end(), db.begin() + 1, db.end());

  const std::size_t shared = fa.dim(r);
  const std::size_t rows = ap.format().size() / shared;
  const std::size_t cols = bp.format().size() / shared;
  const auto ea = ap.entries();
  const auto eb = bp.entries();
  std::vector<Scalar> out(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t h = 0; h < shared; ++h) {
      const Scalar& x = ea[i * shared + h];
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i * cols + j] += x * eb[h * cols + j];
    }
  }
  return MultiMatrix::from_entries(Format(std::move(dims)), std::move(out));
}

MultiMatrix convolve(const MultiMatrix& a, const MultiMatrix& b) {
  return convolve(a, b, a.format().order(), 0);
}

namespace {

void check_vectors(const Format& f, std::span<const Vector> vs) {
  if (vs.size() != f.order()) {
    throw ShapeError("expected " + std::to_string(f.order()) + " vectors for format " +
                     f.to_string() + ", got " + std::to_string(vs.size()));
  }
  for (std::size_t j = 1; j <= f.order(); ++j) {
    if (vs[j - 1].size() != f.dim(j)) {
      throw ShapeError("vector for axis " + std::to_string(j) + " has length " +
                       std::to_string(vs[j - 1].size()) + ", axis size is " +
                       std::to_string(f.dim(j)));
    }
  }
}

}  // namespace

Vector contract_with_vectors(const MultiMatrix& a, std::span<const Vector> vs) {
  const Format& f = a.format();
  check_vectors(f, vs);
  const auto dims = f.dims();
  Vector out(f.dim(0));
  std::vector<std::size_t> idx(dims.size(), 0);
  std::size_t off = 0;
  do {
    const Scalar& x = a.entries()[off++];
    if (sgn(x) == 0) continue;
    Scalar term = x;
    for (std::size_t j = 1; j < dims.size() && sgn(term) != 0; ++j) term *= vs[j - 1][idx[j]];
    out[idx[0]] += term;
  } while (next_index(idx, dims));
  return out;
}

bool is_degeneracy_witness(const MultiMatrix& a, std::span<const Vector> vs) {
  check_vectors(a.format(), vs);
  for (const auto& v : vs) {
    if (std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; })) return false;
  }
  const Vector image = contract_with_vectors(a, vs);
  return std::all_of(image.begin(), image.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

MultiMatrix apply_axis_map(const MultiMatrix& a, std::size_t axis, const AxisMap& g) {
  const Format& f = a.format();
  if (axis >= f.axes()) {
    throw ShapeError("axis " + std::to_string(axis) + " out of range for format " + f.to_string());
  }
  const std::size_t d = f.dim(axis);
  if (g.size() != d) {
    throw ShapeError("axis map of size " + std::to_string(g.size()) + " on axis " +
                     std::to_string(axis) + " of size " + std::to_string(d));
  }
  const auto dims = f.dims();
  std::size_t outer = 1;
  for (std::size_t i = 0; i < axis; ++i) outer *= dims[i];
  const std::size_t inner = f.size() / (outer * d);

  const auto src = a.entries();
  std::vector<Scalar> out(src.size());
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t t = 0; t < d; ++t) {
        const Scalar& w = g(i, t);
        if (sgn(w) == 0) continue;
        const std::size_t dst = (o * d + i) * inner;
        const std::size_t from = (o * d + t) * inner;
        for (std::size_t in = 0; in < inner; ++in) out[dst + in] += w * src[from + in];
      }
  return MultiMatrix::from_entries(f, std::move(out));
}

MultiMatrix permute_axes(const MultiMatrix& a, std::span<const std::size_t> sigma) {
  const Format& f = a.format();
  const std::size_t n = f.axes();
  std::vector<bool> seen(n, false);
  if (sigma.size() != n) {
    throw ShapeError("permutation has " + std::to_string(sigma.size()) + " entries, format has " +
                     std::to_string(n) + " axes");
  }
  for (std::size_t s : sigma) {
    if (s >= n || seen[s]) throw ShapeError("axis list is not a permutation of 0.." + std::to_string(n - 1));
    seen[s] = true;
  }
  std::vector<std::size_t> dims(n);
  for (std::size_t j = 0; j < n; ++j) dims[j] = f.dim(sigma[j]);
  const auto old_strides = f.strides();

  std::vector<Scalar> out(f.size());
  std::vector<std::size_t> idx(n, 0);
  std::size_t pos = 0;
  do {
    std::size_t old = 0;
    for (std::size_t j = 0; j < n; ++j) old += idx[j] * old_strides[sigma[j]];
    out[pos++] = a.entries()[old];
  } while (next_index(idx, dims));
  return MultiMatrix::from_entries(Format(std::move(dims)), std::move(out));
}

MultiMatrix scale(const MultiMatrix& a, const Scalar& t) {
  std::vector<Scalar> out(a.entries().begin(), a.entries().end());
  for (auto& x : out) x *= t;
  return MultiMatrix::from_entries(a.format(), std::move(out));
}

SquareMatrix as_square_matrix(const MultiMatrix& a) {
  const Format& f = a.format();
  if (f.axes() != 2 || f.dim(0) != f.dim(1)) {
    throw ShapeError("format " + f.to_string() + " is not a square matrix");
  }
  return SquareMatrix(f.dim(0), std::vector<Scalar>(a.entries().begin(), a.entries().end()));
}

MultiMatrix from_square_matrix(const SquareMatrix& m) {
  return MultiMatrix::from_entries(Format({m.size(), m.size()}),
                                   std::vector<Scalar>(m.entries().begin(), m.entries().end()));
}

}  // namespace hdet
