#include "hyperdet/partial.hpp"

#include "hyperdet/errors.hpp"

#include <sstream>

namespace hdet {

std::string SourceLabel::to_string() const {
  std::string out = "e" + std::to_string(i0);
  for (const auto& a : alphas) out += a.to_string();
  return out;
}

std::string TargetLabel::to_string() const {
  std::string out;
  for (const auto& b : betas) out += b.to_string();
  return out;
}

namespace {

// One symmetric-power slot j: source basis S^{m_j} V_j, target basis S^{m_j+1} V_j,
// and raise[a * dim + i] = rank of (source monomial a) * x_i in the target basis.
struct Slot {
  std::size_t dim = 0;
  std::vector<Monomial> source;
  std::vector<Monomial> target;
  std::vector<std::size_t> raise;
};

Slot make_slot(std::size_t dim, std::size_t m) {
  Slot s;
  s.dim = dim;
  s.source = enumerate_monomials(dim, m);
  s.target = enumerate_monomials(dim, m + 1);
  s.raise.resize(s.source.size() * dim);
  for (std::size_t a = 0; a < s.source.size(); ++a) {
    Monomial up = s.source[a];
    for (std::size_t i = 0; i < dim; ++i) {
      ++up.exponents[i];
      s.raise[a * dim + i] = monomial_rank(up);
      --up.exponents[i];
    }
  }
  return s;
}

// Shared by the boundary and generalized builders; `m` holds (m_1, ..., m_p).
PartialMap assemble(const MultiMatrix& a, std::vector<std::size_t> m) {
  const Format& f = a.format();
  const std::size_t p = f.order();

  std::vector<Slot> slots;
  slots.reserve(p);
  for (std::size_t j = 1; j <= p; ++j) slots.push_back(make_slot(f.dim(j), m[j - 1]));

  // Mixed-radix strides, slot 1 most significant.
  std::vector<std::size_t> src_stride(p), tgt_stride(p);
  std::size_t src_block = 1, rows = 1;
  for (std::size_t j = p; j-- > 0;) {
    src_stride[j] = src_block;
    tgt_stride[j] = rows;
    src_block *= slots[j].source.size();
    rows *= slots[j].target.size();
  }
  const std::size_t cols = f.dim(0) * src_block;
  if (rows != cols) {
    throw ShapeError("partial map for format " + f.to_string() + " is not square: source " +
                     std::to_string(cols) + ", target " + std::to_string(rows));
  }

  PartialMap map{SquareMatrix(rows), {}, {}, f, std::move(m)};

  map.col_basis.resize(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    SourceLabel& label = map.col_basis[c];
    label.i0 = c / src_block;
    for (std::size_t j = 0; j < p; ++j)
      label.alphas.push_back(slots[j].source[(c / src_stride[j]) % slots[j].source.size()]);
  }
  map.row_basis.resize(rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < p; ++j)
      map.row_basis[r].betas.push_back(slots[j].target[(r / tgt_stride[j]) % slots[j].target.size()]);

  const auto dims = f.dims();
  const std::size_t inner = f.size() / f.dim(0);
  const auto entries = a.entries();
  SquareMatrix& mat = map.matrix;

  // Columns are disjoint, so they fill independently.
#pragma omp parallel for schedule(static)
  for (std::size_t c = 0; c < cols; ++c) {
    const std::size_t i0 = c / src_block;
    std::vector<std::size_t> alpha(p);
    for (std::size_t j = 0; j < p; ++j) alpha[j] = (c / src_stride[j]) % slots[j].source.size();

    std::vector<std::size_t> idx(p + 1, 0);
    for (std::size_t off = 0; off < inner; ++off) {
      const Scalar& value = entries[i0 * inner + off];
      if (sgn(value) != 0) {
        std::size_t row = 0;
        for (std::size_t j = 0; j < p; ++j)
          row += slots[j].raise[alpha[j] * slots[j].dim + idx[j + 1]] * tgt_stride[j];
        mat(row, c) = value;
      }
      next_index(std::span(idx).subspan(1), dims.subspan(1));
    }
  }
  return map;
}

}  // namespace

PartialMap build_partial(const MultiMatrix& a) {
  a.format().require_boundary();
  return assemble(a, a.format().m_sequence());
}

PartialMap build_generalized_partial(const MultiMatrix& a, std::size_t q,
                                     std::span<const std::size_t> ks) {
  const Format& f = a.format();
  const std::size_t p = f.order();
  auto fail = [&](const std::string& why) {
    return ShapeError("generalized partial map for format " + f.to_string() + ", q = " +
                      std::to_string(q) + ": " + why);
  };
  if (q == 0) throw fail("q must be positive");
  if (ks.size() != f.axes()) {
    throw fail("expected " + std::to_string(f.axes()) + " values k_0..k_p, got " +
               std::to_string(ks.size()));
  }
  std::size_t inner = 0;
  for (std::size_t i = 1; i <= p; ++i) {
    if (ks[i] < 1) throw fail("k_" + std::to_string(i) + " must be at least 1");
    inner += ks[i];
  }
  if (ks[0] != inner) throw fail("k_0 = " + std::to_string(ks[0]) + " but k_1 + ... + k_p = " + std::to_string(inner));
  if (f.dim(0) != q * (ks[0] + 1)) throw fail("axis 0 must have size q(k_0+1) = " + std::to_string(q * (ks[0] + 1)));
  if (f.dim(1) != q * (ks[1] + 1)) throw fail("axis 1 must have size q(k_1+1) = " + std::to_string(q * (ks[1] + 1)));
  for (std::size_t i = 2; i <= p; ++i) {
    if (f.dim(i) != ks[i] + 1) {
      throw fail("axis " + std::to_string(i) + " must have size k_" + std::to_string(i) +
                 "+1 = " + std::to_string(ks[i] + 1));
    }
  }
  std::vector<std::size_t> m(p);
  std::size_t running = 0;
  for (std::size_t j = 1; j <= p; ++j) {
    m[j - 1] = running;
    running += ks[j];
  }
  return assemble(a, std::move(m));
}

std::string dump_partial(const PartialMap& map) {
  std::ostringstream out;
  const std::size_t n = map.matrix.size();
  out << "# partial map format=" << map.source_format.to_string() << " m=(";
  for (std::size_t j = 0; j < map.m_sequence.size(); ++j) out << (j ? "," : "") << map.m_sequence[j];
  out << ") size=" << n << " nonzeros=" << map.matrix.count_nonzero() << '\n';
  out << "# rows\n";
  for (std::size_t r = 0; r < n; ++r) out << 'r' << r << ' ' << map.row_basis[r].to_string() << '\n';
  out << "# cols\n";
  for (std::size_t c = 0; c < n; ++c) out << 'c' << c << ' ' << map.col_basis[c].to_string() << '\n';
  out << "# entries\n";
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Scalar& v = map.matrix(r, c);
      if (sgn(v) == 0) continue;
      out << map.row_basis[r].to_string() << " | " << map.col_basis[c].to_string() << " | "
          << v.get_str() << '\n';
    }
  return out.str();
}

}  // namespace hdet
