#pragma once

#include <Eigen/Core>

namespace negspin {

// Unit system. Natural units (the default) set m0 = c = hbar = 1.
struct PhysicalParams {
  double m0 = 1.0;
  double c = 1.0;
  double hbar = 1.0;
  double q = -1.0;

  double rest_energy() const noexcept { return m0 * c * c; }

  // Throws InvalidInput unless m0, c, hbar are positive and q is finite.
  void validate() const;
};

using MomentumVector = Eigen::Vector3d;

}  // namespace negspin
