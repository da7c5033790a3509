#pragma once

#include <array>
#include <string>
#include <vector>

#include "sta/km.hpp"

namespace sta::prop {

using km::CV;
using Four = std::array<double, 4>;  // contravariant p^mu
using Three = std::array<double, 3>;

// Momentum-space kernel (p P + m P e0) / (p^2 - m^2); throws within pole_tol of the mass shell
CV kernel_apply(const Four& p, const CV& P, double m, double pole_tol = 1e-9);
// the field operator for a mode exp(e21 eps p.x): d(X) e21 - m X e0 -> -eps p X - m X e0
CV momentum_operator(const Four& p, const CV& X, double m, int eps = -1);
// |momentum_operator(kernel_apply(P)) - P|
double defining_residual(const Four& p, const CV& P, double m);

// Pole terms at p0 = +E and (after p -> -p) at p0 = -E:
//   plus = (p P + m P e0) / 2E,  minus = (p P - m P e0) / 2E, with p = (E, p)
// forward and backward carry the factor e21 and the signs of the causal split.
struct CausalSplit {
  double E = 0;
  CV plus, minus;
  CV forward, backward;  // -plus e21, +minus e21
};
CausalSplit causal_split(const Three& p, double m, const CV& P);
// residues of kernel_apply in p0 by an n-point circle of radius r around +E and -E
struct ContourResidues {
  CV at_plus, at_minus;
};
ContourResidues contour_residues(const Three& p, double m, const CV& P, int n = 64, double radius = -1);
// max distance between the contour residues and the causal split terms (minus compared at -p)
double residue_mismatch(const Three& p, double m, const CV& P, int n = 64);

// Covariant Dirac fields in momentum space (standard representation), i g.d -> pslash
struct RewritingResidual {
  double first = 0;   // |(pslash - m) lambda - chi - (pslash lambda + m rho)| with chi = -m(lambda + rho)
  double second = 0;  // |(pslash - m) rho - kappa - (pslash rho - m lambda)| with kappa = m(lambda + rho)
};
RewritingResidual rewriting_residual(const Four& p, const Vec4& lambda, const Vec4& rho, double m);
Mat4 dirac_kernel(const Four& p, double m, double pole_tol = 1e-9);  // (pslash - m)^-1
Vec4 propagate_source(const Four& p, const Vec4& source, double m);
double dirac_kernel_inverse_residual(const Four& p, double m);

// Final-state amplitude q (p_f A K + m A K e0) e21 / 2E_f when the spatial momenta balance, zero otherwise
CV born_final_state(const CV& A, const Three& pA, const CV& K, const Three& p_in, const Three& p_f, double q,
                    double m, double tol = 1e-9);

// G(p) = gamma^5 gamma^mu n_mu(p), n_mu = (0, -sin phi, cos phi, 0), phi the azimuth of p about z
Three n_angular(const Three& p);
Three n_tau(const Three& p);          // (-t, 1, 0) sign(p_x) / sqrt(1 + t^2), t = p_y / p_x
Three n_tau_printed(const Three& p);  // (-t, t, 0) / sqrt(1 + t^2) as printed
Mat4 build_G(const Three& p);
Mat4 gamma5();  // i gamma^0 gamma^1 gamma^2 gamma^3

// Clifford basis of 4x4 matrices used for channel projection
struct Channel {
  std::string name;
  Mat4 B;
};
const std::vector<Channel>& channels();  // 1, g^mu, g^mu g^nu, g5 g^mu, g5
std::vector<cplx> project_channels(const Mat4& M);
int channel_index(const std::string& name);

struct FourierGridConfig {
  int grid = 256;                                   // radial and azimuthal points, power of two
  std::vector<double> eps{0.1, 0.05, 0.025, 0.0125};  // Gaussian regulator exp(-eps p^2)
  double r_min = 0.6, r_max = 6.0;                  // fit window in |Delta_perp|
  int radial_samples = 12;
  int azimuthal_samples = 16;
  double dz_probe = 0.3;  // off-plane offset for the ratio test
  double tail = 36.0;     // radial cutoff at exp(-tail)
  int threads = 0;        // 0: hardware concurrency

  // work per sample grows as grid^2 and memory as grid per thread
  static constexpr int max_grid = 8192;

  void validate() const;  // throws std::invalid_argument
  double cutoff(double eps) const;
  // smallest grid that resolves the radial oscillation up to r_max at the smallest eps
  int required_grid() const;
  double resolved_r_max() const;
};

// G_eps(Delta) = (2pi)^-3 int d^3p exp(i p.Delta) G(p) exp(-eps p^2), p_z integral in closed form
Mat4 fourier_G(const Three& delta, double eps, const FourierGridConfig& cfg);
// radial part of the transverse integral in closed form, for the cross-check of the quadrature:
// int_0^inf p J1(p r) exp(-eps p^2) dp
double radial_bessel_closed_form(double r, double eps);

struct FourierSample {
  Three delta{};
  double eps = 0;
  cplx c1, c2;  // coefficients of gamma5 gamma^1 and gamma5 gamma^2
  double norm = 0;
};

struct FourierReport {
  std::vector<FourierSample> samples;
  double peak = 0;
  double channel_leak = 0;    // largest other channel / peak
  double real_part_leak = 0;  // largest real part of c1, c2 / peak
  double parity_residual = 0; // largest |G(-Delta) + G(Delta)| / peak
  double radial_exponent = 0;
  double exponent_stderr = 0;       // least-squares standard error of the slope
  double quadrature_log_error = 0;  // largest |log(quadrature / closed form)| on the radial line
  double exponent_halfwidth = 0;    // 2 stderr plus the slope shift the quadrature error allows
  int required_grid = 0;
  bool degraded = false;            // grid below required_grid: the fit is attempted on an under-resolved transform
  double azimuthal_correlation = 0;
  std::vector<double> offplane_ratio;  // |G(dz)| / |G(0)| per eps
  bool offplane_decreasing = false;
  double seconds = 0;
};
FourierReport fourier_report(const FourierGridConfig& cfg);

enum class Locality { local, nonlocal, undetermined };
const char* name(Locality l);
struct DirectionVerdict {
  Three dir{};
  std::vector<double> magnitude;  // per eps
  Locality verdict = Locality::undetermined;
};
std::vector<DirectionVerdict> nonlocality_scan(const FourierGridConfig& cfg, const std::vector<Three>& dirs,
                                               double distance = 1.0);

}  // namespace sta::prop
