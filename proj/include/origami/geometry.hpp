#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace origami {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Default tolerances used throughout. eps_geom is the geometric tolerance
// (point/plane incidence, offsets); eps_unit the algebraic one (unit norms,
// orthogonality).
inline constexpr double kEpsGeom = 1e-9;
inline constexpr double kEpsUnit = 1e-12;
// Collision-time equality threshold in normalized time [0,1].
inline constexpr double kEpsTime = 1e-7;

/// Closed half-space { x : normal . x <= offset } with unit outward normal.
struct HalfSpace {
    Vec normal;
    double offset = 0.0;

    HalfSpace() = default;
    HalfSpace(Vec n, double c);

    int dim() const { return static_cast<int>(normal.size()); }
    double signed_dist(const Vec& x) const { return normal.dot(x) - offset; }
    bool contains(const Vec& x, double tol) const { return signed_dist(x) <= tol; }
};

/// Affine isometry x -> linear * x + shift. `relabel_prefix`, when set, is
/// prepended to facet ids when the isometry is applied to a polytope, so
/// constructions can track faces through unions of transformed copies.
struct Isometry {
    Mat linear;
    Vec shift;
    std::optional<std::string> relabel_prefix;

    static Isometry identity(int dim);
    static Isometry reflection(const HalfSpace& h);
    static Isometry rotation_pi_about_axis3(const Vec& axis);

    int dim() const { return static_cast<int>(shift.size()); }
    Vec operator()(const Vec& x) const { return linear * x + shift; }
    Isometry compose(const Isometry& inner) const;  // this after inner
    Isometry inverse() const;
    double orthogonality_residual() const;

    std::string relabel(const std::string& id) const {
        return relabel_prefix ? *relabel_prefix + id : id;
    }
};

Vec make_vec(std::initializer_list<double> xs);
Vec unit(const Vec& v);

/// Reflect a direction across the hyperplane with unit normal n.
Vec reflect_dir(const Vec& v, const Vec& n);

/// Max principal angle (radians) between equal-dimension subspaces given by
/// orthonormal column bases.
double principal_angle(const Mat& basis_a, const Mat& basis_b);

/// Orthonormal basis of the orthogonal complement of a unit vector.
Mat orthonormal_complement(const Vec& t);

/// Min distance between two closed segments [a0,a1], [b0,b1].
double segment_distance(const Vec& a0, const Vec& a1, const Vec& b0, const Vec& b1);

} // namespace origami
