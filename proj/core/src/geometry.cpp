#include "trustgame/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace trustgame {

bool is_degenerate(const Vec& v, double scale) {
  return v.norm() <= kDegeneracyRel * scale;
}

Vec project(const Vec& x1, const Vec& x2) {
  if (x1.size() != x2.size()) {
    throw PreconditionViolated("project: dimension mismatch");
  }
  const double scale = std::max(x1.norm(), x2.norm());
  if (is_degenerate(x2, scale) || x2.norm() == 0.0) {
    throw DegenerateDirection("project: direction is numerically zero");
  }
  return (x1.dot(x2) / x2.squaredNorm()) * x2;
}

double projection_norm(const Vec& x1, const Vec& x2) {
  const double scale = std::max(x1.norm(), x2.norm());
  if (is_degenerate(x2, scale) || x2.norm() == 0.0) {
    throw DegenerateDirection("projection_norm: direction is numerically zero");
  }
  return std::abs(x1.dot(x2)) / x2.norm();
}

Vec project_onto_affine_hull(const Vec& p, const std::vector<Vec>& anchors) {
  if (anchors.empty()) {
    throw PreconditionViolated("project_onto_affine_hull: no anchors");
  }
  const Vec& a0 = anchors.front();
  if (p.size() != a0.size()) {
    throw PreconditionViolated("project_onto_affine_hull: dimension mismatch");
  }
  if (anchors.size() == 1) return a0;

  // Columns are offsets from the first anchor; a rank-revealing least
  // squares solve handles every hull dimension, including duplicates.
  Eigen::MatrixXd basis(a0.size(), anchors.size() - 1);
  for (std::size_t j = 1; j < anchors.size(); ++j) {
    if (anchors[j].size() != a0.size()) {
      throw PreconditionViolated("project_onto_affine_hull: dimension mismatch");
    }
    basis.col(static_cast<Eigen::Index>(j - 1)) = anchors[j] - a0;
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(basis);
  return a0 + basis * cod.solve(p - a0);
}

double signed_normal_offset(const Vec& q, const HalfPlaneSpec& half_plane) {
  const Vec& a = half_plane.line_point_a;
  const Vec& b = half_plane.line_point_b;
  const Vec& w = half_plane.interior_witness;
  if (q.size() != a.size() || b.size() != a.size() || w.size() != a.size()) {
    throw PreconditionViolated("signed_normal_offset: dimension mismatch");
  }
  const Vec d = b - a;
  if (is_degenerate(d, std::max(a.norm(), b.norm())) || d.norm() == 0.0) {
    throw DegenerateDirection("signed_normal_offset: line points coincide");
  }
  const Vec wo = w - a;
  // In-plane normal: witness offset minus its along-line component.
  const Vec n = wo - (wo.dot(d) / d.squaredNorm()) * d;
  if (is_degenerate(n, std::max(wo.norm(), d.norm()))) {
    return 0.0;  // witness on the line: no side defined
  }
  return (q - a).dot(n) / n.norm();
}

bool in_closed_half_plane(const Vec& q, const HalfPlaneSpec& half_plane) {
  const double s = signed_normal_offset(q, half_plane);
  const Vec& a = half_plane.line_point_a;
  const double scale =
      std::max({(q - a).norm(), (half_plane.interior_witness - a).norm(),
                (half_plane.line_point_b - a).norm()});
  return s >= -kDegeneracyRel * scale;
}

}  // namespace trustgame
