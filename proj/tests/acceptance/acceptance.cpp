// Acceptance run: one PASS/FAIL line per criterion with the measured values,
// the tolerance and the runtime against its budget. Exit status is nonzero
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lfball/bcd.hpp"
#include "lfball/dynamics.hpp"
#include "lfball/errors.hpp"
#include "lfball/lfm.hpp"
#include "lfball/sampling.hpp"
#include "lfball/schur_agler.hpp"
#include "random_maps.hpp"

using namespace lfball;
using namespace lfball::testing;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool run_criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_budget = secs < budget_s;
  const bool pass = out.pass && in_budget;
  std::printf("criterion %d %s  %s: %s  [%.2f s, budget %.0f s%s]\n", id, pass ? "PASS" : "FAIL",
              name, out.detail.c_str(), secs, budget_s, in_budget ? "" : ", OVER BUDGET");
  std::fflush(stdout);
  return pass;
}

struct SampleMap {
  LinearFractionalMap phi;
  std::size_t m;
};

// 50 validated maps, m = 1..4 in turn, alternating general maps with
// non-elliptic ones built from half-space data.
std::vector<SampleMap> sample_maps() {
  Rng rng(20240917);
  std::vector<SampleMap> maps;
  for (std::size_t i = 0; i < 50; ++i) {
    const std::size_t m = 1 + i % 4;
    if (i % 2 == 0) maps.push_back({random_lfm(rng, m), m});
    else maps.push_back({random_nonelliptic(rng, m, i % 6 == 1), m});
  }
  return maps;
}

Outcome kernel_factorization_residual(const std::vector<SampleMap>& maps) {
  double worst = 0.0;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto& [phi, m] = maps[i];
    const KernelFactorization& f = phi.factorization();
    const auto pts = sample_ball(m, 400, 1000 + i);
    for (std::size_t k = 0; k < 200; ++k) {
      const BallPoint& z = pts[2 * k];
      const BallPoint& w = pts[2 * k + 1];
      worst = std::max(worst, std::abs(dbr_kernel(phi, z, w) - f.kernel(z.coords(), w.coords())));
    }
  }
  return {worst < 1e-9, fmt("max |k(z,w) - factored(z,w)| = %.3g over 50 maps x 200 pairs (tol 1e-9)", worst)};
}

Outcome schur_agler_membership(const std::vector<SampleMap>& maps) {
  double min_eig = INFINITY, min_eig_comp = INFINITY, identity_err = 0.0;
  std::size_t compositions = 0;
  const auto gram_min = [](const LinearFractionalMap& phi, std::size_t m, std::uint64_t seed) {
    const Kernel k = [&](const BallPoint& z, const BallPoint& w) { return dbr_kernel(phi, z, w); };
    return gram_positivity(k, sample_ball(m, 50, seed), 1e-8).min_eig;
  };
  for (std::size_t i = 0; i < maps.size(); ++i) {
    min_eig = std::min(min_eig, gram_min(maps[i].phi, maps[i].m, 2000 + i));
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = 0; j < maps.size(); ++j) {
      if (i == j || maps[i].m != maps[j].m) continue;
      const LinearFractionalMap& phi = maps[i].phi;
      const LinearFractionalMap& psi = maps[j].phi;
      const LinearFractionalMap comp = compose(phi, psi);
      const std::size_t m = maps[i].m;
      min_eig_comp = std::min(min_eig_comp, gram_min(comp, m, 3000 + 50 * i + j));
      // k^{phi o psi}(z, w) = k^phi(psi z, psi w) k^psi(z, w), each side from
      // its own factorization
      const auto pts = sample_ball(m, 20, 4000 + 50 * i + j);
      for (std::size_t k = 0; k + 1 < pts.size(); k += 2) {
        const BallPoint& z = pts[k];
        const BallPoint& w = pts[k + 1];
        const cplx lhs = comp.factorization().kernel(z.coords(), w.coords());
        const cplx rhs = phi.factorization().kernel(apply(psi, z.coords()), apply(psi, w.coords())) *
                         psi.factorization().kernel(z.coords(), w.coords());
        identity_err = std::max(identity_err, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
      ++compositions;
    }
  }
  const bool pass = min_eig >= -1e-8 && min_eig_comp >= -1e-8 && identity_err < 1e-10;
  return {pass, fmt("min Gram eig %.3g (maps), %.3g (%zu compositions), product identity err %.3g "
                    "(tol -1e-8 / 1e-10)",
                    min_eig, min_eig_comp, compositions, identity_err)};
}

Outcome norm_sandwich(const std::vector<SampleMap>& maps) {
  std::size_t cases = 0, failures = 0;
  double single_err = 0.0, worst_upper = -INFINITY;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto& [phi, m] = maps[i];
    std::vector<double> betas{1.0, static_cast<double>(m), static_cast<double>(m) + 1.0};
    betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
    for (const double beta : betas) {
      const SpaceParams params(m, beta);
      const NormBounds b = norm_bounds(eval(phi, BallPoint::origin(m)), params);
      for (const std::size_t size : {1u, 10u, 50u}) {
        std::vector<BallPoint> pts{BallPoint::origin(m)};
        for (BallPoint& z : sample_ball(m, size - 1, 5000 + 7 * i + size)) pts.push_back(std::move(z));
        const double g = gram_norm_lower_bound(phi, params, pts);
        ++cases;
        if (size == 1) single_err = std::max(single_err, std::abs(g - b.lower) / b.lower);
        worst_upper = std::max(worst_upper, g - b.upper);
        if (!(b.lower <= g * (1.0 + 1e-12) && g <= b.upper + 1e-9)) ++failures;
      }
    }
  }
  const bool pass = failures == 0 && single_err <= 1e-12;
  return {pass, fmt("%zu/%zu (map, beta, size) cases inside [lower, upper + 1e-9]; "
                    "max gram - upper = %.3g; size-1 relative error vs lower %.3g (tol 1e-12)",
                    cases - failures, cases, worst_upper, single_err)};
}

Outcome hyperbolic_radius() {
  struct Case {
    const char* name;
    LinearFractionalMap phi;
    double alpha;
  };
  const std::vector<Case> cases{{"automorphism r=0.5", disk_automorphism(0.5, 2), 1.0 / 3.0},
                                {"counterexample", bcd_to_ball(counterexample_map(0.25, 2)), 0.25}};
  bool pass = true;
  std::string detail;
  for (const Case& c : cases) {
    const ClassificationResult kind = classify(c.phi);
    const std::vector<double> ld = origin_log_defects(c.phi, kind, 500);
    const double r60 = std::exp(ld[60] - ld[59]);
    pass &= kind.kind == MapKind::hyperbolic && std::abs(r60 - c.alpha) < 1e-4;
    detail += fmt("%s: |r_60 - alpha| = %.2g", c.name, std::abs(r60 - c.alpha));
    for (const double beta : {1.0, 2.0, 3.0}) {
      const double s500 = spectral_radius_from_log_defects(ld, beta)[499];
      const double target = std::pow(c.alpha, -beta / 2.0);
      const double gap = std::abs(s500 - target) / target;
      pass &= gap < 0.02;
      detail += fmt(", beta=%g gap %.4f", beta, gap);
    }
    detail += "; ";
  }
  detail += "(tol 1e-4, 2%)";
  return {pass, detail};
}

Outcome elliptic_parabolic_radius() {
  const LinearFractionalMap rot = rotation_map(2);
  const ClassificationResult rk = classify(rot);
  const std::vector<double> rs =
      spectral_radius_from_log_defects(origin_log_defects(rot, rk, 500), 2.0);
  const bool rotation_ok =
      rk.kind == MapKind::elliptic && std::all_of(rs.begin(), rs.end(), [](double s) { return s == 1.0; });

  const LinearFractionalMap par = parabolic_map();
  const ClassificationResult pk = classify(par);
  const std::vector<double> ld = origin_log_defects(par, pk, 3000);
  bool pass = rotation_ok && pk.kind == MapKind::parabolic;
  std::string detail = fmt("rotation s_n == 1 for n <= 500: %s; parabolic",
                           rotation_ok ? "yes" : "no");
  for (const double beta : {1.0, 2.0, 3.0}) {
    const std::vector<double> s = spectral_radius_from_log_defects(ld, beta);
    bool decreasing = true;
    for (std::size_t n = 1; n < 500; ++n) decreasing &= s[n] <= s[n - 1];
    pass &= decreasing && s[499] < 1.02 && s.back() >= 1.0;
    detail += fmt(" beta=%g s_500 = %.5f%s,", beta, s[499], decreasing ? "" : " (not monotone)");
  }
  const double r = std::exp(ld[3000] - ld[2999]);
  pass &= std::abs(r - 1.0) < 1e-3;
  detail += fmt(" |r_3000 - 1| = %.2g (tol 1.02, 1e-3)", std::abs(r - 1.0));
  return {pass, detail};
}

Outcome closed_form_iterates() {
  Rng rng(6060);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const BCDMap map = random_bcd(rng, 2 + static_cast<std::size_t>(i % 3), i % 5 == 4);
    const std::vector<IterateData> direct = direct_iterates(map, 30);
    for (std::size_t n = 1; n <= 30; ++n) {
      const IterateData closed = closed_form_iterate(map, n);
      const IterateData& d = direct[n];
      const double diff = std::sqrt(std::norm(closed.x - d.x) + (closed.y - d.y).squared_norm());
      const double size = std::sqrt(std::norm(d.x) + d.y.squared_norm());
      worst = std::max(worst, diff / size);
    }
  }
  double recurrence = 0.0;
  for (const double alpha : {0.1, 0.25, 0.5, 0.9}) {
    for (std::size_t n = 0; n < 60; ++n) {
      recurrence = std::max(recurrence,
                            std::abs(beta_seq(alpha, n + 1) - (alpha * beta_seq(alpha, n) + 1.0)));
      const auto [pn, qn] = pq_coeffs(alpha, n);
      const auto [pn1, qn1] = pq_coeffs(alpha, n + 1);
      for (std::size_t k = 0; k <= n + 1; ++k) {
        const double p = k <= n ? pn[k] : 0.0;
        recurrence = std::max(recurrence, std::abs(pn1[k] - (alpha * p + 1.0)));
        const double zq = k >= 1 ? qn[k - 1] : 0.0;
        const double constant = k == 0 ? std::pow(alpha, static_cast<double>(n + 1)) : 0.0;
        recurrence = std::max(recurrence, std::abs(qn1[k] - (zq + constant)));
      }
      if (n >= 1) {
        const auto pm = pq_coeffs(alpha, n - 1).first;
        for (std::size_t k = 0; k <= n; ++k) {
          recurrence = std::max(recurrence, std::abs(qn[k] + (k < n ? pm[k] : 0.0) - pn[k]));
        }
      }
    }
  }
  return {worst < 1e-9 && recurrence < 1e-12,
          fmt("closed form vs direct max relative error %.3g over 20 maps, n <= 30 (tol 1e-9); "
              "recurrences and q_n + p_{n-1} = p_n max error %.3g (tol 1e-12)",
              worst, recurrence)};
}

Outcome counterexample() {
  const BCDMap map = counterexample_map(0.25, 2);
  const std::vector<double> t = restricted_defect_seq(map, 100);
  const double t_min = *std::min_element(t.begin(), t.end());
  const std::vector<IterateData> its = direct_iterates(map, 100);
  const RestrictednessReport rep = restrictedness_report(its, map.alpha());
  const cplx x = x_limit(map);
  const double x50_err = std::abs(its[50].x - 17.0);
  const bool pass = validate_bcd(map).valid && t_min > 1.0 && std::abs(t[0] - 4.0) < 1e-12 &&
                    !rep.special_limit_zero && std::abs(x - 17.0) < 1e-12 && x50_err < 1e-8 &&
                    x.real() >= 1.0;
  return {pass, fmt("min t_n (n <= 100) = %.6g, t_1 = %.15g, special_limit_zero = %s, x = %.15g%+.3gi, "
                    "|x_50 - 17| = %.3g (tol 1e-8)",
                    t_min, t[0], rep.special_limit_zero ? "true" : "false", x.real(), x.imag(),
                    x50_err)};
}

Outcome julia_inequality() {
  Rng rng(8080);
  std::size_t violations = 0, iter_violations = 0, ball_violations = 0, points = 0;
  double max_ratio = 0.0, max_iter = 0.0, max_ball = 0.0;
  std::size_t ball_steps = 0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t m = 1 + static_cast<std::size_t>(i % 4);
    const LinearFractionalMap phi = random_nonelliptic(rng, m, i % 5 == 2);
    const ClassificationResult c = classify(phi);
    const BoundaryPoint zeta = c.boundary_point();
    const JuliaReport rep = julia_check(phi, zeta, *c.alpha, sample_ball(m, 1000, 9000 + i, 0.99));
    violations += rep.violations;
    points += rep.points;
    max_ratio = std::max(max_ratio, rep.max_ratio);

    const HalfSpaceForm form = ball_to_bcd(phi, zeta);
    const IteratedJuliaReport deep =
        iterated_julia_check(direct_iterates(form.map, 200), form.map.alpha());
    iter_violations += deep.violations;
    max_iter = std::max(max_iter, deep.max_ratio);

    const Orbit o = orbit(phi, BallPoint::origin(m), 200);
    ball_steps += o.steps();
    const IteratedJuliaReport ball = iterated_julia_check(o, zeta, *c.alpha);
    ball_violations += ball.violations;
    max_ball = std::max(max_ball, ball.max_ratio);
  }
  const bool pass = violations == 0 && iter_violations == 0 && ball_violations == 0;
  return {pass, fmt("%zu violations over %zu points (max ratio %.12f, slack 1e-9); orbit bound: "
                    "%zu violations in half-space iterates n <= 200 (max Q_n/alpha^n %.9f), "
                    "%zu in ball orbits (%zu steps before precision limit, max %.9f)",
                    violations, points, max_ratio, iter_violations, max_iter, ball_violations,
                    ball_steps, max_ball)};
}

Outcome cayley_and_conjugation() {
  Rng rng(9090);
  double round_trip = 0.0, defect = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const BallPoint z = sample_ball_point(rng, 1 + static_cast<std::size_t>(i % 4), 0.99);
    const SiegelPoint w = cayley(z);
    round_trip = std::max(round_trip, (inverse_cayley(w).coords() - z.coords()).norm());
    const double identity = 4.0 / std::norm(w.w1() + 1.0) * w.height();
    defect = std::max(defect, std::abs(identity - z.defect()) / z.defect());
  }
  double conj = 0.0;
  std::size_t maps = 0;
  const auto check_map = [&](const BCDMap& map, std::uint64_t seed) {
    const LinearFractionalMap ball = bcd_to_ball(map);
    for (const BallPoint& z : sample_ball(map.dim(), 200, seed)) {
      const BallPoint direct = eval(ball, z);
      const BallPoint via = inverse_cayley(eval_bcd(map, cayley(z)));
      conj = std::max(conj, (direct.coords() - via.coords()).norm());
    }
    ++maps;
  };
  check_map(counterexample_map(0.25, 2), 1);
  for (int i = 0; i < 20; ++i) {
    check_map(random_bcd(rng, 1 + static_cast<std::size_t>(i % 4), i % 5 == 0), 100 + i);
  }
  const bool pass = round_trip < 1e-12 && defect < 1e-12 && conj < 1e-10;
  return {pass, fmt("round trip %.3g, defect identity (relative) %.3g over 1e4 points (tol 1e-12); "
                    "conjugation %.3g over %zu maps x 200 points (tol 1e-10)",
                    round_trip, defect, conj, maps)};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SampleMap> maps = sample_maps();
  int failed = 0;
  failed += !run_criterion(1, "kernel factorization", 10, [&] { return kernel_factorization_residual(maps); });
  failed += !run_criterion(2, "Schur-Agler membership", 30, [&] { return schur_agler_membership(maps); });
  failed += !run_criterion(3, "norm sandwich", 10, [&] { return norm_sandwich(maps); });
  failed += !run_criterion(4, "hyperbolic spectral radius", 5, hyperbolic_radius);
  failed += !run_criterion(5, "elliptic/parabolic radius 1", 5, elliptic_parabolic_radius);
  failed += !run_criterion(6, "closed-form iterates", 5, closed_form_iterates);
  failed += !run_criterion(7, "counterexample", 2, counterexample);
  failed += !run_criterion(8, "Julia inequality", 10, julia_inequality);
  failed += !run_criterion(9, "Cayley and conjugation", 5, cayley_and_conjugation);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 9 criteria passed, total %.2f s\n", 9 - failed, secs);
  return failed == 0 ? 0 : 1;
}
