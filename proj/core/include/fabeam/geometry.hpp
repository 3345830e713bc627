#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace fabeam {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using Vec2 = Eigen::Vector2d;

// Azimuth/elevation angle-of-departure pair, radians.
struct PathAngle {
  double theta = 0.0;
  double phi = 0.0;
};

// Per-user antenna positions, one 2-D point inside each movable region.
struct FaPlacement {
  std::vector<Vec2> positions;

  int users() const { return static_cast<int>(positions.size()); }
  static FaPlacement origin(int users) {
    FaPlacement p;
    p.positions.assign(users, Vec2::Zero());
    return p;
  }
};

// Static scene description: BS array, per-user multipath geometry, the
// eavesdropping target's line-of-sight parameters and angle grid.
struct ScenarioGeometry {
  std::vector<Vec2> bs_positions;      // b_n = [u_n, v_n], meters
  double wavelength = 0.1;             // meters
  std::vector<std::vector<PathAngle>> path_angles;  // [user][path]
  std::vector<CMat> path_response;     // Sigma_k, L_k x L_k
  double region_side = 0.0;            // A_0: square side, centered at origin
  double eve_theta = 0.0;              // azimuth to target
  double eve_phi = 0.0;                // elevation to target
  double eve_gain = 1.0;               // eta_e
  std::vector<double> eve_theta_grid;  // candidate azimuths (imperfect CSI)
  std::vector<double> eve_phi_grid;    // candidate elevations

  int users() const { return static_cast<int>(path_angles.size()); }
  int antennas() const { return static_cast<int>(bs_positions.size()); }
  int paths(int user) const {
    return static_cast<int>(path_angles[user].size());
  }
  bool in_region(const Vec2& p) const {
    const double h = region_side / 2.0;
    return p.x() >= -h - 1e-12 && p.x() <= h + 1e-12 && p.y() >= -h - 1e-12 &&
           p.y() <= h + 1e-12;
  }

  // Throws std::invalid_argument when shapes or ranges are inconsistent.
  void validate() const;
};

// Square uniform planar array with the given element spacing, row-major
// from the reference element at the origin, truncated to n elements.
std::vector<Vec2> square_upa(int n, double spacing);

}  // namespace fabeam
