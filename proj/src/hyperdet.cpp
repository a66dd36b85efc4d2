#include "hyperdet/hyperdet.hpp"

#include "hyperdet/errors.hpp"
#include "hyperdet/symalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hdet {

Scalar hyperdet(const MultiMatrix& a, DetKernel kernel) {
  return determinant(build_partial(a).matrix, kernel);
}

bool is_nondegenerate(const MultiMatrix& a) { return !is_zero(hyperdet(a)); }

BinetExponents binet_exponents(const Format& format_a, const Format& format_b) {
  format_a.require_boundary();
  format_b.require_boundary();
  const std::size_t p = format_a.order();
  if (format_a.dim(p) != format_b.dim(0)) {
    throw ShapeError("Binet-Cauchy needs the last axis of A (" + format_a.to_string() +
                     ") to match the first axis of B (" + format_b.to_string() + "): " +
                     std::to_string(format_a.dim(p)) + " vs " + std::to_string(format_b.dim(0)));
  }
  std::vector<std::size_t> parts_a;
  for (std::size_t j = 1; j <= format_b.order(); ++j) parts_a.push_back(format_b.k(j));
  std::vector<std::size_t> parts_b;
  for (std::size_t i = 1; i < p; ++i) parts_b.push_back(format_a.k(i));
  parts_b.push_back(format_a.k(p) + 1);
  return {multinomial(format_b.k(0), parts_a), multinomial(format_a.k(0) + 1, parts_b)};
}

BinetReport verify_binet(const MultiMatrix& a, const MultiMatrix& b, DetKernel kernel) {
  BinetReport report;
  report.exponents = binet_exponents(a.format(), b.format());
  report.det_a = hyperdet(a, kernel);
  report.det_b = hyperdet(b, kernel);
  report.lhs = hyperdet(convolve(a, b), kernel);
  report.rhs = pow(report.det_a, report.exponents.exp_a.get_ui()) *
               pow(report.det_b, report.exponents.exp_b.get_ui());
  report.equal = report.lhs == report.rhs;
  return report;
}

Scalar equivariance_factor(const Format& format, std::size_t axis, const AxisMap& g) {
  const std::size_t n = degree_N(format);
  if (axis >= format.axes()) {
    throw ShapeError("axis " + std::to_string(axis) + " out of range for format " + format.to_string());
  }
  if (g.size() != format.dim(axis)) {
    throw ShapeError("axis map of size " + std::to_string(g.size()) + " on axis " +
                     std::to_string(axis) + " of size " + std::to_string(format.dim(axis)));
  }
  if (n % format.dim(axis) != 0) {
    throw Error("degree " + std::to_string(n) + " not divisible by axis size " +
                std::to_string(format.dim(axis)));
  }
  return pow(det_bareiss(g), n / format.dim(axis));
}

MultiMatrix reorder_inner_axes(const MultiMatrix& a, std::span<const std::size_t> ordering) {
  const std::size_t p = a.format().order();
  std::vector<std::size_t> sigma{0};
  sigma.insert(sigma.end(), ordering.begin(), ordering.end());
  if (ordering.size() != p || std::find(ordering.begin(), ordering.end(), 0) != ordering.end()) {
    throw ShapeError("inner ordering must be a permutation of 1.." + std::to_string(p));
  }
  return permute_axes(a, sigma);
}

std::vector<OrderingResult> hyperdet_all_orderings(const MultiMatrix& a, DetKernel kernel) {
  a.format().require_boundary();
  std::vector<std::size_t> ordering(a.format().order());
  std::iota(ordering.begin(), ordering.end(), std::size_t{1});
  std::vector<OrderingResult> results;
  do {
    const PartialMap map = build_partial(reorder_inner_axes(a, ordering));
    OrderingResult r;
    r.ordering = ordering;
    r.m_sequence = map.m_sequence;
    for (const auto& beta : map.row_basis.front().betas) r.row_profile.emplace_back(beta.dim(), beta.degree());
    r.size = map.matrix.size();
    r.det = determinant(map.matrix, kernel);
    results.push_back(std::move(r));
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  return results;
}

bool hyperdet_invariant_under_ordering(const MultiMatrix& a) {
  const auto results = hyperdet_all_orderings(a);
  return std::all_of(results.begin(), results.end(),
                     [&](const OrderingResult& r) { return r.det == results.front().det; });
}

}  // namespace hdet
