#include "platekit/po_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "platekit/error.hpp"

namespace platekit::po {

IncidentWave IncidentWave::make(const PolarizationTriad& triad, Wavelength wl, double h0, double eta) {
  if (!(h0 > 0.0) || !(eta > 0.0)) throw DomainError("field magnitude and impedance must be positive");
  if (norm(cross(triad.a_e, triad.a_h) - triad.a_t.vec()) > 1e-12) {
    throw DomainError("incident wave violates a_t = a_E x a_H");
  }
  return {triad.a_t, triad.a_e, triad.a_h, h0, eta, wl};
}

QuadratureSpec QuadratureSpec::for_plate(const PlateGeometry& plate, Wavelength wl) {
  const double longest = std::max(plate.l1_len, plate.l2_len);
  return {static_cast<int>(std::ceil(6.0 * longest / wl.meters())) + 16};
}

namespace {

// (P_n(x), P_{n-1}(x)) by the three-term recurrence, n >= 1.
std::pair<double, double> legendre_pair(int n, double x) {
  double prev = 1.0, cur = x;
  for (int k = 2; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

}  // namespace

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [pn, pnm1] = legendre_pair(n, x);
      const double dx = pn / (n * (x * pn - pnm1) / (x * x - 1.0));
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [pn, pnm1] = legendre_pair(n, x);
    const double dp = n * (x * pn - pnm1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

CVec3 induced_current(const IncidentWave& wave, const UnitVec3& n, const Vec3& r_prime) {
  if (!(dot(n, wave.a_t) < 0.0)) throw DomainError("induced current is undefined on the unlit side of the plate");
  const Vec3 dir = cross(n, wave.a_h);
  const Complex phase = std::polar(2.0 * wave.h0, -wave.wavelength.wavenumber() * dot(wave.a_t, r_prime));
  return {phase * dir.x, phase * dir.y, phase * dir.z};
}

namespace {

Complex project(const CVec3& v, const Vec3& u) { return v[0] * u.x + v[1] * u.y + v[2] * u.z; }

void check_quadrature(const QuadratureSpec& q) {
  if (q.nodes_per_edge < 2) {
    throw DomainError("quadrature needs at least 2 nodes per edge, got " + std::to_string(q.nodes_per_edge));
  }
}

double far_field_distance(const PlateGeometry& plate, Wavelength wl) {
  return 2.0 * (plate.l1_len * plate.l1_len + plate.l2_len * plate.l2_len) / wl.meters();
}

}  // namespace

FarFieldSample po_far_field(const PlateGeometry& plate, const IncidentWave& wave, const UnitVec3& a_r, double d_r,
                            const QuadratureSpec& q) {
  check_quadrature(q);
  if (!(d_r > 0.0)) throw DomainError("observation distance must be positive");
  const GaussLegendreRule rule = gauss_legendre(q.nodes_per_edge);
  const SphericalBasis basis = spherical_basis(a_r);
  const double k = wave.wavelength.wavenumber();
  const double h1 = 0.5 * plate.l1_len, h2 = 0.5 * plate.l2_len;

  Complex sum_theta{}, sum_phi{};
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const double beta = h2 * rule.nodes[j];
    Complex row_theta{}, row_phi{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double alpha = h1 * rule.nodes[i];
      const Vec3 r_prime = alpha * plate.frame.l1.vec() + beta * plate.frame.l2.vec();
      const CVec3 js = induced_current(wave, plate.frame.n, r_prime);
      const Complex radiation = std::polar(rule.weights[i], k * dot(r_prime, a_r));
      row_theta += project(js, basis.theta_hat) * radiation;
      row_phi += project(js, basis.phi_hat) * radiation;
    }
    sum_theta += rule.weights[j] * row_theta;
    sum_phi += rule.weights[j] * row_phi;
  }
  const double jacobian = h1 * h2;
  const Complex prefactor = Complex{0.0, -k * wave.eta} * std::polar(1.0, -k * d_r) / (4 * kPi * d_r);

  FarFieldSample out;
  out.e_theta = prefactor * jacobian * sum_theta;
  out.e_phi = prefactor * jacobian * sum_phi;
  out.d_r = d_r;
  out.far_field = d_r >= far_field_distance(plate, wave.wavelength);
  return out;
}

double po_rcs(const PlateGeometry& plate, const IncidentWave& wave, const UnitVec3& a_r, const QuadratureSpec& q,
              double d_r) {
  if (d_r <= 0.0) d_r = 100.0 * std::max(far_field_distance(plate, wave.wavelength), wave.wavelength.meters());
  const FarFieldSample f = po_far_field(plate, wave, a_r, d_r, q);
  const double scattered = std::norm(f.e_theta) + std::norm(f.e_phi);
  const double incident = wave.eta * wave.eta * wave.h0 * wave.h0;
  return 4 * kPi * d_r * d_r * scattered / incident;
}

Complex aperture_integral(const PlateGeometry& plate, const UnitVec3& a_t, const UnitVec3& a_r, Wavelength wl,
                          const QuadratureSpec& q) {
  check_quadrature(q);
  const GaussLegendreRule rule = gauss_legendre(q.nodes_per_edge);
  const double k = wl.wavenumber();
  const Vec3 deflection = a_r.vec() - a_t.vec();
  const double h1 = 0.5 * plate.l1_len, h2 = 0.5 * plate.l2_len;
  Complex sum{};
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    Complex row{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const Vec3 r_prime = h1 * rule.nodes[i] * plate.frame.l1.vec() + h2 * rule.nodes[j] * plate.frame.l2.vec();
      row += std::polar(rule.weights[i], k * dot(deflection, r_prime));
    }
    sum += rule.weights[j] * row;
  }
  return h1 * h2 * sum;
}

}  // namespace platekit::po
