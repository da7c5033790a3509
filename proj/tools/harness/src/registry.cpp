#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <set>

#include "sta/harness/check.hpp"

namespace sta::harness {

const char* name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::flagged: return "flagged";
    default: return "fail";
  }
}

const char* name(Compare c) { return c == Compare::at_most ? "at_most" : "at_least"; }

struct SharedData {
  std::once_flag fourier_once, scan_once;
  prop::FourierReport fourier;
  std::vector<prop::DirectionVerdict> scan;
};

const prop::FourierReport& Context::fourier_report() {
  std::call_once(shared->fourier_once, [&] { shared->fourier = prop::fourier_report(fourier); });
  return shared->fourier;
}

const std::vector<prop::DirectionVerdict>& Context::nonlocality() {
  std::call_once(shared->scan_once, [&] {
    const double s = std::sqrt(0.5);
    shared->scan = prop::nonlocality_scan(fourier, {{0, 0, 1}, {1, 0, 0}, {s, 0, s}, {s, s, 0}});
  });
  return shared->scan;
}

std::shared_ptr<SharedData> make_shared_data() { return std::make_shared<SharedData>(); }

const std::vector<Anchor>& anchors() {
  static const std::vector<Anchor> a{
      {"generator-relations", "anticommutation of the spacetime generators with metric (+,-,-,-)"},
      {"pauli-subalgebra", "relative vectors sigma_k = gamma_k gamma_0 and the pseudoscalar"},
      {"contraction-exterior", "vector times blade as left contraction plus exterior product"},
      {"reverse", "reversion as an anti-automorphism"},
      {"scalar-product", "scalar product identity (KL).M = K.(M reverse(L))"},
      {"gamma-matrices", "standard and Weyl gamma matrices related by the change of basis"},
      {"matrix-representation", "faithful 4x4 complex representation"},
      {"exponential", "closed-form exponential of elements with scalar square"},
      {"spinor-map", "covariant spinor to operator spinor correspondence"},
      {"spinor-dictionary", "operator forms of gamma_mu, i, i gamma5, bar, dagger and complex conjugation"},
      {"charge-conjugation", "charge conjugation on operator and covariant spinors"},
      {"parity-operator", "parity at rest and in the momentum form p/m"},
      {"ideal-spinors", "ideal spinors psi (1 + gamma_0)/2"},
      {"dirac-hestenes", "Dirac equation and its Dirac-Hestenes form"},
      {"boost", "Clifford boost operator (p gamma_0 + m)/sqrt(2m(E+m))"},
      {"plane-wave-modes", "operator u and v modes"},
      {"helicity-states", "helicity eigenstates and their sigma_2 conjugates"},
      {"half-boost", "chiral boost blocks and their commutation with helicity"},
      {"elko-construction", "Elko spinors from dual-helicity Weyl blocks"},
      {"elko-boost-factor", "boost factor of lambda^s_{-+} along its momentum"},
      {"rho-lambda-identifications", "identifications of rho spinors with lambda spinors"},
      {"elko-parity", "parity action mapping Elko spinors into each other"},
      {"standard-rep-helicity", "helicity operator on Elko spinors in the standard representation"},
      {"dirac-operator", "vector derivative of plane-wave fields"},
      {"first-order-system", "coupled first-order system of the Elko octet"},
      {"klein-gordon", "Klein-Gordon equation for the Elko fields"},
      {"kg-counterexample", "Klein-Gordon solutions that violate the first-order system"},
      {"bilinears", "bilinear covariants and the Lounesto class"},
      {"majorana-currents", "Majorana current and axial current"},
      {"lagrangian-density", "Lagrangian density of the Elko fields"},
      {"multiform-derivatives", "multiform derivatives of the Lagrangian"},
      {"euler-lagrange", "Euler-Lagrange equations against the first-order system"},
      {"km-definition", "definition of the Clifford-valued K and M fields"},
      {"km-matrix", "2x2 matrix correspondences of K and M"},
      {"km-reverse", "reverse of Clifford-valued fields"},
      {"km-field-equations", "first-order equations of K and M"},
      {"km-projected", "projected fields F (1 + tau_3)/2 and their equations"},
      {"km-currents", "internal-valued currents F tau_1 gamma_0 reverse(F)"},
      {"km-conservation", "conservation of the K and M currents"},
      {"km-gauge-coupling", "coupling to the spin(3)-valued potential"},
      {"km-gauge-invariance", "global gauge invariance"},
      {"weyl-system", "two-component Weyl system and zero-momentum blocks"},
      {"majorana-incompatibility", "complex Majorana blocks cannot solve the Dirac system"},
      {"majorana-condition", "Majorana condition and its boost invariance"},
      {"majorana-dual-helicity", "Majorana spinors as dual-helicity objects"},
      {"quantum-majorana-rest", "zero-momentum spinors of the quantized Majorana field"},
      {"quantum-majorana-boost", "boosted Majorana mode spinors and the momentum-space Dirac equation"},
      {"grassmann-majorana", "Grassmann-valued Majorana blocks"},
      {"propagator-kernel", "momentum-space propagator kernel of the K and M fields"},
      {"causal-split", "causal split of the propagator into pole terms"},
      {"elko-dirac-propagator", "Dirac propagator for covariant Elko fields"},
      {"born-final-state", "first-order final state for a plane-wave potential"},
      {"g-field", "spacelike momentum-dependent field G(p)"},
      {"fourier-transform", "regularized Fourier transform of G(p)"},
      {"nonlocality-plane", "plane of nonlocality of the transform"},
      {"suite-coverage", "every in-scope relation is covered by a check"},
  };
  return a;
}

const std::vector<std::string>& module_names() {
  static const std::vector<std::string> m{"ga_core",   "spinor_repr", "wave_modes",         "field_eqs",   "lagrangian_check",
                                          "km_fields", "majorana_grassmann", "propagators", "cli_harness"};
  return m;
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> r = [] {
    std::vector<CheckDef> out;
    add_ga_checks(out);
    add_spinor_checks(out);
    add_modes_checks(out);
    add_fields_checks(out);
    add_lagrangian_checks(out);
    add_km_checks(out);
    add_majorana_checks(out);
    add_propagator_checks(out);
    add_harness_checks(out);
    std::set<std::string> names;
    for (const auto& d : out)
      if (!names.insert(d.name).second) throw std::logic_error("duplicate check name " + d.name);
    return out;
  }();
  return r;
}

void add_harness_checks(std::vector<CheckDef>& out) {
  out.push_back({"suite.anchor_coverage", "cli_harness", "suite-coverage", 0, Compare::at_most, 0, false,
                 [](Context&) {
                   // every check names a known anchor and every anchor has a check
                   std::set<std::string> keys, used;
                   for (const auto& a : anchors()) keys.insert(a.key);
                   Outcome o;
                   for (const auto& d : registry()) {
                     used.insert(d.anchor);
                     if (!keys.count(d.anchor)) {
                       o.residual += 1;
                       o.note += "unknown anchor " + d.anchor + "; ";
                     }
                   }
                   for (const auto& k : keys)
                     if (!used.count(k)) {
                       o.residual += 1;
                       o.note += "uncovered anchor " + k + "; ";
                     }
                   return o;
                 }});
}

std::uint64_t stable_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

CheckReport evaluate(const CheckDef& def, Context ctx, double tolerance) {
  CheckReport r;
  r.name = def.name;
  r.module = def.module;
  r.anchor = def.anchor;
  r.compare = def.compare;
  r.tolerance = tolerance;
  r.timing = def.timing;
  ctx.rng.seed(ctx.seed ^ stable_hash(def.name));
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Outcome o = def.run(ctx);
    r.residual = o.residual;
    r.note = o.note;
    r.literal_residual = o.literal;
    const bool ok = std::isfinite(o.residual) &&
                    (def.compare == Compare::at_most ? o.residual <= tolerance : o.residual >= tolerance);
    if (def.anomaly) {
      // the printed form must fail where the corrected one passes
      const bool literal_fails = !(o.literal <= tolerance);
      r.status = ok && literal_fails ? Status::flagged : Status::fail;
      if (ok && !literal_fails) r.note += (r.note.empty() ? "" : "; ") + std::string("printed form also passes");
    } else {
      r.status = ok ? Status::pass : Status::fail;
    }
  } catch (const std::exception& e) {
    r.status = Status::fail;
    r.residual = std::numeric_limits<double>::infinity();
    r.note = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace sta::harness
