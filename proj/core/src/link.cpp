#include "platekit/link.hpp"

#include <cmath>
#include <limits>

#include "platekit/error.hpp"
#include "platekit/units.hpp"

namespace platekit::link {

void LinkScenario::validate() const {
  if (!(d_t > 0.0) || !(d_r > 0.0)) throw DomainError("link distances must be positive");
  if (!(lambda > 0.0)) throw DomainError("wavelength must be positive");
}

double received_power(const LinkScenario& s, double sigma) {
  s.validate();
  if (!(sigma >= 0.0)) throw DomainError("RCS must be non-negative");
  if (sigma == 0.0) return -std::numeric_limits<double>::infinity();
  // P_r / P_t = G_t G_r sigma lambda^2 / (4 pi (4 pi d_t d_r)^2), summed in dB.
  const double spreading = 4 * kPi * (s.d_t * s.d_r);
  const double path_db = to_db(sigma * s.lambda * s.lambda / (4 * kPi * spreading * spreading));
  return s.p_t_dbm + s.amp_gain_db + (s.g_t_dbi + s.g_r_dbi) + path_db;
}

bool is_no_signal(double dbm) { return std::isinf(dbm) && dbm < 0.0; }

std::vector<PowerSample> power_sweep(const LinkScenario& s, std::span<const double> theta_r_deg,
                                     const std::function<double(double)>& sigma_of_theta_deg) {
  if (theta_r_deg.empty()) throw DomainError("sweep grid is empty");
  for (std::size_t i = 1; i < theta_r_deg.size(); ++i) {
    if (!(theta_r_deg[i] > theta_r_deg[i - 1])) throw DomainError("sweep grid must be strictly increasing");
  }
  std::vector<PowerSample> out;
  out.reserve(theta_r_deg.size());
  for (double t : theta_r_deg) out.push_back({t, received_power(s, sigma_of_theta_deg(t))});
  return out;
}

}  // namespace platekit::link
