#include "hyperdet/smallformat.hpp"

#include "hyperdet/errors.hpp"

namespace hdet {

namespace {

void require_222(const MultiMatrix& a) {
  if (a.format() != Format({2, 2, 2})) {
    throw ShapeError("expected format 2x2x2, got " + a.format().to_string());
  }
}

MultiMatrix two_entry_222(std::size_t first, const Scalar& x, std::size_t second, const Scalar& y) {
  std::vector<Scalar> entries(8);
  entries[first] = x;
  entries[second] = y;
  return MultiMatrix::from_entries(Format({2, 2, 2}), std::move(entries));
}

}  // namespace

BinaryQuadric schlafli_pencil(const MultiMatrix& a) {
  require_222(a);
  auto e = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& { return a.get({i, j, k}); };
  // det [[x0 e000 + x1 e100, x0 e001 + x1 e101], [x0 e010 + x1 e110, x0 e011 + x1 e111]]
  BinaryQuadric q;
  q.a = e(0, 0, 0) * e(0, 1, 1) - e(0, 0, 1) * e(0, 1, 0);
  q.c = e(1, 0, 0) * e(1, 1, 1) - e(1, 0, 1) * e(1, 1, 0);
  q.b = e(0, 0, 0) * e(1, 1, 1) + e(1, 0, 0) * e(0, 1, 1) - e(0, 0, 1) * e(1, 1, 0) -
        e(1, 0, 1) * e(0, 1, 0);
  return q;
}

Scalar det222(const MultiMatrix& a) { return schlafli_pencil(a).discriminant(); }

MultiMatrix counterexample_a(const Scalar& a000, const Scalar& a111) {
  return two_entry_222(0, a000, 7, a111);
}

MultiMatrix counterexample_b(const Scalar& b001, const Scalar& b110) {
  return two_entry_222(1, b001, 6, b110);
}

CounterexampleReport counterexample_report() {
  return counterexample_report(counterexample_a(), counterexample_b());
}

CounterexampleReport counterexample_report(const MultiMatrix& a, const MultiMatrix& b) {
  CounterexampleReport r{det222(a), det222(b), false, false, convolve(a, b, 2, 0), {}, false};
  r.a_nondegenerate = !is_zero(r.det_a);
  r.b_nondegenerate = !is_zero(r.det_b);
  r.witness = {Vector{1, 0}, Vector{0, 1}, Vector{1, 1}};
  r.witness_valid = is_degeneracy_witness(r.product, r.witness);
  return r;
}

}  // namespace hdet
