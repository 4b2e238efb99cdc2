#pragma once

#include <Eigen/Dense>
#include <vector>

#include "trustgame/errors.hpp"

namespace trustgame {

using Vec = Eigen::VectorXd;

/// Relative threshold below which a vector counts as a zero direction.
/// Lengths are always compared against the scale of the data they came
/// from, never against an absolute constant.
inline constexpr double kDegeneracyRel = 1e-12;

/// True when v is numerically zero relative to the given scale.
bool is_degenerate(const Vec& v, double scale);

/// Orthogonal projection of x1 onto the span of x2.
///
/// Throws DegenerateDirection when x2 is numerically zero relative to
/// max(||x1||, ||x2||); the caller decides what a zero direction means in
/// its own context.
Vec project(const Vec& x1, const Vec& x2);

/// Length of project(x1, x2); same contract.
double projection_norm(const Vec& x1, const Vec& x2);

/// Orthogonal projection of p onto the affine hull of the anchor points.
/// Works at every hull rank: one anchor gives that point back, collinear
/// anchors give the projection onto their line, and anchors spanning the
/// whole space give p itself. Duplicate anchors are fine.
Vec project_onto_affine_hull(const Vec& p, const std::vector<Vec>& anchors);

/// A closed half-plane within the plane spanned by its three points.  The
/// boundary is the line through line_point_a and line_point_b; the
/// half-plane is the side holding interior_witness.
struct HalfPlaneSpec {
  Vec line_point_a;
  Vec line_point_b;
  Vec interior_witness;
};

/// Signed distance of q from the boundary line, measured along the in-plane
/// unit normal pointing toward the witness.  Returns 0 when the witness
/// itself lies on the line (no normal exists).  Throws DegenerateDirection
/// when the two line points coincide.
///
/// Meaningful only for q in the plane of the three defining points; callers
/// working in higher dimension must project first.
double signed_normal_offset(const Vec& q, const HalfPlaneSpec& half_plane);

/// Closed membership test: q on the witness side or within the degeneracy
/// band of the line.  A witness on the line leaves the side undefined and
/// every query returns true (the closed half-plane degenerates to no
/// constraint).
bool in_closed_half_plane(const Vec& q, const HalfPlaneSpec& half_plane);

}  // namespace trustgame
