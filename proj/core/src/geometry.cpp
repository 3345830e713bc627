#include "fabeam/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace fabeam {

void ScenarioGeometry::validate() const {
  if (wavelength <= 0.0) throw std::invalid_argument("wavelength must be > 0");
  if (region_side < 0.0) throw std::invalid_argument("region side must be >= 0");
  if (eve_gain <= 0.0) throw std::invalid_argument("eve gain must be > 0");
  if (bs_positions.empty()) throw std::invalid_argument("empty BS array");
  if (path_angles.size() != path_response.size())
    throw std::invalid_argument("path angle/response user count mismatch");
  for (std::size_t k = 0; k < path_angles.size(); ++k) {
    const auto lk = static_cast<Eigen::Index>(path_angles[k].size());
    if (lk < 1) throw std::invalid_argument("need at least one path per user");
    if (path_response[k].rows() != lk || path_response[k].cols() != lk)
      throw std::invalid_argument("path response matrix shape mismatch");
  }
  if (eve_theta_grid.empty() || eve_phi_grid.empty())
    throw std::invalid_argument("eve angle grid must be nonempty");
}

std::vector<Vec2> square_upa(int n, double spacing) {
  if (n < 1) throw std::invalid_argument("array needs at least one element");
  const int side = static_cast<int>(std::ceil(std::sqrt(double(n))));
  std::vector<Vec2> pos;
  pos.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int row = i / side;
    const int col = i % side;
    pos.emplace_back(col * spacing, row * spacing);
  }
  return pos;
}

}  // namespace fabeam
