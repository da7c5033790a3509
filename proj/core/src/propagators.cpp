#include "sta/propagators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace sta::prop {

using ga::Multivector;

namespace {

constexpr double pi = std::numbers::pi;

double minkowski2(const Four& p) { return p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3]; }

CV vec(const Four& p) { return CV::spacetime(Multivector::vector(p[0], p[1], p[2], p[3])); }
CV e0() { return CV::spacetime(Multivector::gen(0)); }
CV e21() { return CV::spacetime(ga::gamma21()); }

double dist(const CV& a, const CV& b) { return (a - b).norm(); }

Mat4 slash(const Four& p) { return rep::standard().slash(p[0], p[1], p[2], p[3]); }

// Gauss-Legendre nodes and weights on [a, b] by Newton iteration on P_n
void gauss_legendre(int n, double a, double b, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5)), dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = 0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2 * k - 1) * z * p1 - (k - 1) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double half = 0.5 * (b - a), mid = 0.5 * (b + a);
    x[i] = mid - half * z;
    x[n - 1 - i] = mid + half * z;
    w[i] = w[n - 1 - i] = 2 * half / ((1 - z * z) * dp * dp);
  }
}

template <class F>
void parallel_for(std::size_t n, int threads, F&& f) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t t = std::min<std::size_t>(n, threads > 0 ? threads : hw);
  if (t <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k < t; ++k)
    pool.emplace_back([&, k] {
      for (std::size_t i = k; i < n; i += t) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

CV kernel_apply(const Four& p, const CV& P, double m, double pole_tol) {
  const double d = minkowski2(p) - m * m;
  if (std::abs(d) <= pole_tol * (1 + m * m))
    throw std::domain_error("kernel_apply: momentum on the mass shell; use causal_split");
  return (1.0 / d) * (vec(p) * P + m * (P * e0()));
}

CV momentum_operator(const Four& p, const CV& X, double m, int eps) {
  return double(-eps) * (vec(p) * X) - m * (X * e0());
}

double defining_residual(const Four& p, const CV& P, double m) {
  return dist(momentum_operator(p, kernel_apply(p, P, m), m), P);
}

CausalSplit causal_split(const Three& p, double m, const CV& P) {
  CausalSplit s;
  s.E = std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  const CV pv = vec({s.E, p[0], p[1], p[2]});
  s.plus = (0.5 / s.E) * (pv * P + m * (P * e0()));
  s.minus = (0.5 / s.E) * (pv * P - m * (P * e0()));
  s.forward = (-1.0) * (s.plus * e21());
  s.backward = s.minus * e21();
  return s;
}

ContourResidues contour_residues(const Three& p, double m, const CV& P, int n, double radius) {
  // kernel = (p0 A + B) / (p0^2 - E^2) with A = e0 P and B = -p.gamma P + m P e0
  const double E = std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  if (radius <= 0) radius = 0.25 * E;
  const CV A = e0() * P;
  const CV B = vec({0, p[0], p[1], p[2]}) * P + m * (P * e0());
  ContourResidues r;
  for (int sgn : {1, -1}) {
    // (1 / 2 pi i) closed integral, trapezoid on the circle p0 = c + radius e^{it}
    std::complex<double> s1 = 0, s0 = 0;
    const double c = sgn * E;
    for (int k = 0; k < n; ++k) {
      const double t = 2 * pi * k / n;
      const std::complex<double> u = std::polar(radius, t), z = c + u;
      const std::complex<double> f = 1.0 / (z * z - E * E);
      // dz / (2 pi i) = u dt / (2 pi)
      s1 += z * f * u / double(n);
      s0 += f * u / double(n);
    }
    (sgn > 0 ? r.at_plus : r.at_minus) = s1.real() * A + s0.real() * B;
  }
  return r;
}

double residue_mismatch(const Three& p, double m, const CV& P, int n) {
  const ContourResidues here = contour_residues(p, m, P, n);
  const ContourResidues there = contour_residues({-p[0], -p[1], -p[2]}, m, P, n);
  const CausalSplit s = causal_split(p, m, P);
  // the p0 = -E residue taken at -p is the backward term
  return std::max(dist(here.at_plus, s.plus), dist(there.at_minus, s.minus));
}

RewritingResidual rewriting_residual(const Four& p, const Vec4& lambda, const Vec4& rho, double m) {
  const Mat4 ps = slash(p);
  const Vec4 chi = -m * (lambda + rho), kappa = m * (lambda + rho);
  const Vec4 first_order_a = ps * lambda + m * rho, first_order_b = ps * rho - m * lambda;
  return {((ps * lambda - m * lambda) - chi - first_order_a).norm(),
          ((ps * rho - m * rho) - kappa - first_order_b).norm()};
}

Mat4 dirac_kernel(const Four& p, double m, double pole_tol) {
  const double d = minkowski2(p) - m * m;
  if (std::abs(d) <= pole_tol * (1 + m * m)) throw std::domain_error("dirac_kernel: on-shell source momentum");
  return (slash(p) + m * Mat4::Identity()) / d;
}

Vec4 propagate_source(const Four& p, const Vec4& source, double m) { return dirac_kernel(p, m) * source; }

double dirac_kernel_inverse_residual(const Four& p, double m) {
  return ((slash(p) - m * Mat4::Identity()) * dirac_kernel(p, m) - Mat4::Identity()).norm();
}

CV born_final_state(const CV& A, const Three& pA, const CV& K, const Three& p_in, const Three& p_f, double q,
                    double m, double tol) {
  for (int k = 0; k < 3; ++k)
    if (std::abs(p_f[k] - p_in[k] - pA[k]) > tol * (1 + std::abs(p_f[k]))) return CV{};
  const double Ef = std::sqrt(m * m + p_f[0] * p_f[0] + p_f[1] * p_f[1] + p_f[2] * p_f[2]);
  const CV AK = A * K;
  return (q / (2 * Ef)) * ((vec({Ef, p_f[0], p_f[1], p_f[2]}) * AK + m * (AK * e0())) * e21());
}

Three n_angular(const Three& p) {
  if (p[0] == 0.0 && p[1] == 0.0) throw std::domain_error("build_G: momentum on the polar axis");
  const double phi = std::atan2(p[1], p[0]);
  return {-std::sin(phi), std::cos(phi), 0.0};
}

Three n_tau(const Three& p) {
  if (p[0] == 0.0) throw std::domain_error("n_tau: p_x = 0");
  const double t = p[1] / p[0], s = (p[0] > 0 ? 1.0 : -1.0) / std::sqrt(1 + t * t);
  return {-t * s, s, 0.0};
}

Three n_tau_printed(const Three& p) {
  if (p[0] == 0.0) throw std::domain_error("n_tau_printed: p_x = 0");
  const double t = p[1] / p[0], s = 1.0 / std::sqrt(1 + t * t);
  return {-t * s, t * s, 0.0};
}

Mat4 gamma5() {
  const auto& r = rep::standard();
  return cplx(0, 1) * r.up[0] * r.up[1] * r.up[2] * r.up[3];
}

Mat4 build_G(const Three& p) {
  const Three n = n_angular(p);
  const auto& r = rep::standard();
  // n_mu gamma^mu with covariant n_mu = (0, n)
  return gamma5() * (n[0] * r.up[1] + n[1] * r.up[2] + n[2] * r.up[3]);
}

const std::vector<Channel>& channels() {
  static const std::vector<Channel> c = [] {
    const auto& r = rep::standard();
    std::vector<Channel> v;
    v.push_back({"1", Mat4::Identity()});
    for (int mu = 0; mu < 4; ++mu) v.push_back({"g" + std::to_string(mu), r.up[mu]});
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu)
        v.push_back({"g" + std::to_string(mu) + "g" + std::to_string(nu), r.up[mu] * r.up[nu]});
    for (int mu = 0; mu < 4; ++mu) v.push_back({"g5g" + std::to_string(mu), gamma5() * r.up[mu]});
    v.push_back({"g5", gamma5()});
    return v;
  }();
  return c;
}

std::vector<cplx> project_channels(const Mat4& M) {
  std::vector<cplx> out;
  for (const auto& ch : channels()) out.push_back((ch.B.inverse() * M).trace() / 4.0);
  return out;
}

int channel_index(const std::string& name) {
  const auto& c = channels();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown channel " + name);
}

void FourierGridConfig::validate() const {
  if (grid < 8 || (grid & (grid - 1))) throw std::invalid_argument("grid must be a power of two >= 8");
  if (eps.empty()) throw std::invalid_argument("eps schedule is empty");
  for (double e : eps)
    if (!(e > 0)) throw std::invalid_argument("eps must be positive");
  if (!(r_min > 0 && r_max > r_min)) throw std::invalid_argument("fit window needs 0 < r_min < r_max");
  if (radial_samples < 3 || azimuthal_samples < 4) throw std::invalid_argument("too few output samples");
  if (grid > max_grid) throw std::invalid_argument("grid exceeds the work budget of " + std::to_string(max_grid));
  if (!(tail > 0) || !(dz_probe > 0)) throw std::invalid_argument("tail and dz_probe must be positive");
}

double FourierGridConfig::cutoff(double e) const { return std::sqrt(tail / e); }

// the radial rule resolves exp(i p r) up to the cutoff with about one node per half wave plus margin
int FourierGridConfig::required_grid() const {
  return static_cast<int>(std::ceil(cutoff(*std::min_element(eps.begin(), eps.end())) * r_max / 2 + 16));
}

double FourierGridConfig::resolved_r_max() const {
  return std::max(0.0, 2.0 * (grid - 16) / cutoff(*std::min_element(eps.begin(), eps.end())));
}

Mat4 fourier_G(const Three& delta, double eps, const FourierGridConfig& cfg) {
  if (!(eps > 0)) throw std::invalid_argument("fourier_G: eps must be positive");
  const int n = cfg.grid;
  std::vector<double> px, pw;
  gauss_legendre(n, 0.0, cfg.cutoff(eps), px, pw);
  for (int k = 0; k < n; ++k) pw[k] *= px[k] * std::exp(-eps * px[k] * px[k]);

  const double r = std::hypot(delta[0], delta[1]), alpha = std::atan2(delta[1], delta[0]);
  const auto& rp = rep::standard();
  const Mat4 g51 = gamma5() * rp.up[1], g52 = gamma5() * rp.up[2];
  // transverse integral; G depends on the azimuth only, so accumulate the two n components
  cplx t1 = 0, t2 = 0;
  for (int j = 0; j < n; ++j) {
    const double phi = 2 * pi * j / n, c = r * std::cos(phi - alpha);
    cplx radial = 0;
    for (int k = 0; k < n; ++k) radial += pw[k] * std::polar(1.0, px[k] * c);
    radial *= 2 * pi / n;
    t1 += -std::sin(phi) * radial;
    t2 += std::cos(phi) * radial;
  }
  // p_z integral of exp(i p_z dz - eps p_z^2)
  const double fz = std::sqrt(pi / eps) * std::exp(-delta[2] * delta[2] / (4 * eps));
  const double pre = fz / std::pow(2 * pi, 3);
  return pre * (t1 * g51 + t2 * g52);
}

double radial_bessel_closed_form(double r, double eps) {
  const double z = r * r / (8 * eps);
  double d;  // exp(-z) (I0(z) - I1(z))
  if (z < 500)
    d = std::exp(-z) * (std::cyl_bessel_i(0.0, z) - std::cyl_bessel_i(1.0, z));
  else
    d = (1.0 / std::sqrt(2 * pi * z)) * (1 / (2 * z) + 3 / (16 * z * z));
  return r * std::sqrt(pi) / (8 * std::pow(eps, 1.5)) * d;
}

FourierReport fourier_report(const FourierGridConfig& cfg) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  FourierReport rep;
  const double emin = *std::min_element(cfg.eps.begin(), cfg.eps.end());
  rep.required_grid = cfg.required_grid();
  rep.degraded = cfg.grid < rep.required_grid;

  // in-plane samples: radial line along a generic direction plus an azimuthal ring
  struct Job {
    Three d;
    double eps;
    bool mirror;
  };
  std::vector<Job> jobs;
  const double beta = 0.37;
  for (int i = 0; i < cfg.radial_samples; ++i) {
    const double r = cfg.r_min * std::pow(cfg.r_max / cfg.r_min, double(i) / (cfg.radial_samples - 1));
    jobs.push_back({{r * std::cos(beta), r * std::sin(beta), 0}, emin, false});
  }
  const double rring = std::sqrt(cfg.r_min * cfg.r_max);
  for (int j = 0; j < cfg.azimuthal_samples; ++j) {
    const double a = 2 * pi * (j + 0.5) / cfg.azimuthal_samples;
    jobs.push_back({{rring * std::cos(a), rring * std::sin(a), 0}, emin, true});
  }
  for (double e : cfg.eps) {
    jobs.push_back({{rring * std::cos(beta), rring * std::sin(beta), 0}, e, false});
    jobs.push_back({{rring * std::cos(beta), rring * std::sin(beta), cfg.dz_probe}, e, false});
  }

  std::vector<Mat4> G(jobs.size()), Gm(jobs.size());
  parallel_for(jobs.size(), cfg.threads, [&](std::size_t i) {
    G[i] = fourier_G(jobs[i].d, jobs[i].eps, cfg);
    if (jobs[i].mirror) Gm[i] = fourier_G({-jobs[i].d[0], -jobs[i].d[1], -jobs[i].d[2]}, jobs[i].eps, cfg);
  });

  const int i51 = channel_index("g5g1"), i52 = channel_index("g5g2");
  double other = 0, realp = 0, parity = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto ch = project_channels(G[i]);
    FourierSample s{jobs[i].d, jobs[i].eps, ch[i51], ch[i52], G[i].norm()};
    rep.peak = std::max(rep.peak, std::max(std::abs(s.c1), std::abs(s.c2)));
    for (std::size_t k = 0; k < ch.size(); ++k)
      if (int(k) != i51 && int(k) != i52) other = std::max(other, std::abs(ch[k]));
    realp = std::max({realp, std::abs(s.c1.real()), std::abs(s.c2.real())});
    if (jobs[i].mirror) parity = std::max(parity, (Gm[i] + G[i]).norm());
    rep.samples.push_back(s);
  }
  rep.channel_leak = other / rep.peak;
  rep.real_part_leak = realp / rep.peak;
  rep.parity_residual = parity / rep.peak;

  // least-squares slope of log|c| against log r on the radial line
  {
    const int n = cfg.radial_samples;
    std::vector<double> xs(n), ys(n);
    double sx = 0, sy = 0, sxx = 0, sxy = 0, qerr = 0;
    for (int i = 0; i < n; ++i) {
      const auto& s = rep.samples[i];
      const double r = std::hypot(s.delta[0], s.delta[1]);
      const double mag = std::sqrt(std::norm(s.c1) + std::norm(s.c2));
      xs[i] = std::log(r);
      ys[i] = std::log(mag);
      sx += xs[i], sy += ys[i], sxx += xs[i] * xs[i], sxy += xs[i] * ys[i];
      // |c| = (2pi)^-2 sqrt(pi/eps) times the closed-form radial integral
      const double exact = radial_bessel_closed_form(r, emin) * std::sqrt(pi / emin) / std::pow(2 * pi, 2);
      qerr = std::max(qerr, std::abs(std::log(mag / exact)));
    }
    const double sxx_c = sxx - sx * sx / n;
    rep.radial_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icpt = (sy - rep.radial_exponent * sx) / n;
    double rss = 0;
    for (int i = 0; i < n; ++i) rss += std::pow(ys[i] - icpt - rep.radial_exponent * xs[i], 2);
    rep.exponent_stderr = std::sqrt(rss / (n - 2) / sxx_c);
    rep.quadrature_log_error = qerr;
    // a log error of q at the window ends moves the slope by at most 2q / ln(r_max / r_min)
    rep.exponent_halfwidth = 2 * rep.exponent_stderr + 2 * qerr / std::log(cfg.r_max / cfg.r_min);
  }
  // correlation of (Im c1, Im c2) with (-Delta_y, Delta_x)/|Delta|^3 on the ring
  {
    double dot = 0, na = 0, nb = 0;
    for (int j = 0; j < cfg.azimuthal_samples; ++j) {
      const auto& s = rep.samples[cfg.radial_samples + j];
      const double r = std::hypot(s.delta[0], s.delta[1]);
      const double ax = s.c1.imag(), ay = s.c2.imag();
      const double bx = -s.delta[1] / (r * r * r), by = s.delta[0] / (r * r * r);
      dot += ax * bx + ay * by;
      na += ax * ax + ay * ay;
      nb += bx * bx + by * by;
    }
    rep.azimuthal_correlation = dot / std::sqrt(na * nb);
  }
  {
    const std::size_t base = cfg.radial_samples + cfg.azimuthal_samples;
    for (std::size_t e = 0; e < cfg.eps.size(); ++e)
      rep.offplane_ratio.push_back(rep.samples[base + 2 * e + 1].norm / rep.samples[base + 2 * e].norm);
    // ordered by decreasing eps
    std::vector<std::pair<double, double>> byeps;
    for (std::size_t e = 0; e < cfg.eps.size(); ++e) byeps.push_back({cfg.eps[e], rep.offplane_ratio[e]});
    std::sort(byeps.begin(), byeps.end(), [](auto a, auto b) { return a.first > b.first; });
    rep.offplane_decreasing = byeps.size() >= 2;
    for (std::size_t e = 1; e < byeps.size(); ++e)
      rep.offplane_decreasing = rep.offplane_decreasing && byeps[e].second < byeps[e - 1].second;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

const char* name(Locality l) {
  switch (l) {
    case Locality::local: return "local";
    case Locality::nonlocal: return "nonlocal";
    default: return "undetermined";
  }
}

std::vector<DirectionVerdict> nonlocality_scan(const FourierGridConfig& cfg, const std::vector<Three>& dirs,
                                               double distance) {
  cfg.validate();
  std::vector<double> eps = cfg.eps;
  std::sort(eps.begin(), eps.end(), std::greater<>());
  std::vector<DirectionVerdict> out(dirs.size());
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    const double n = std::sqrt(dirs[d][0] * dirs[d][0] + dirs[d][1] * dirs[d][1] + dirs[d][2] * dirs[d][2]);
    if (n == 0) throw std::invalid_argument("nonlocality_scan: zero direction");
    out[d].dir = {dirs[d][0] / n, dirs[d][1] / n, dirs[d][2] / n};
    out[d].magnitude.assign(eps.size(), 0.0);
    for (std::size_t e = 0; e < eps.size(); ++e) jobs.push_back({d, e});
  }
  parallel_for(jobs.size(), cfg.threads, [&](std::size_t i) {
    const auto [d, e] = jobs[i];
    const Three x{out[d].dir[0] * distance, out[d].dir[1] * distance, out[d].dir[2] * distance};
    out[d].magnitude[e] = fourier_G(x, eps[e], cfg).norm();
  });
  // scale of the in-plane transform at this distance for the smallest eps
  const double scale = fourier_G({distance, 0, 0}, eps.back(), cfg).norm();
  for (auto& v : out) {
    const auto& m = v.magnitude;
    bool decreasing = true;
    for (std::size_t e = 1; e < m.size(); ++e) decreasing = decreasing && m[e] <= m[e - 1];
    if (m.back() <= 1e-10 * scale || (decreasing && m.back() < 0.1 * m.front()))
      v.verdict = Locality::local;
    else if (m.back() >= 0.5 * m.front())
      v.verdict = Locality::nonlocal;
  }
  return out;
}

}  // namespace sta::prop
