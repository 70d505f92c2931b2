#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace platekit::link {

/// Bistatic radar-equation link through a reflector.
struct LinkScenario {
  double p_t_dbm = 0.0;
  double g_t_dbi = 0.0;
  double g_r_dbi = 0.0;
  double amp_gain_db = 0.0;
  double d_t = 1.0;     // transmitter to plate, m
  double d_r = 1.0;     // plate to receiver, m
  double lambda = 1.0;  // m

  /// Throws DomainError unless distances and wavelength are positive.
  void validate() const;
};

/// Received power in dBm for RCS `sigma` (m^2). sigma = 0 yields -inf, the
/// "no signal" value; writers print it as "-inf". Throws for sigma < 0.
double received_power(const LinkScenario& s, double sigma);

/// True for the "no signal" value returned by received_power.
bool is_no_signal(double dbm);

struct PowerSample {
  double theta_r_deg;
  double p_r_dbm;
};

/// received_power at every grid angle. The grid must be non-empty and
/// strictly increasing.
std::vector<PowerSample> power_sweep(const LinkScenario& s, std::span<const double> theta_r_deg,
                                     const std::function<double(double)>& sigma_of_theta_deg);

}  // namespace platekit::link
