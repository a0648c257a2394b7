#include <doctest.h>

#include <cmath>
#include <random>

#include "test_helpers.hpp"
#include "wqc/analysis.hpp"

using namespace wqc;
using test::max_abs_diff;

TEST_SUITE_BEGIN("analysis");

TEST_CASE("process fidelity of unitary channels") {
  std::mt19937 rng(79);
  const Operator u = expm(cplx(0, -1) * test::random_hermitian(4, rng));
  const SuperOp s = conjugation_superop(u);
  CHECK(process_fidelity(s, s) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("fidelity of identity against complete depolarization is 1/d^2") {
  const int d = 4;
  const SuperOp ident = SuperOp::Identity(d * d, d * d);
  // rho -> Tr(rho) I/d, i.e. vec(I) vec(I)^dag / d
  const Eigen::VectorXcd vi = vec(identity_op(d));
  const SuperOp depol = (vi * vi.adjoint()) / double(d);
  CHECK(process_fidelity(ident, depol) == doctest::Approx(1.0 / 16.0).epsilon(1e-13));
}

TEST_CASE("fidelity is linear in its second argument") {
  std::mt19937 rng(83);
  const SuperOp a = test::random_matrix(9, rng);
  const SuperOp b = test::random_matrix(9, rng);
  const SuperOp s = test::random_matrix(9, rng);
  // trace-real guard does not apply to generic matrices; symmetrize inputs
  const SuperOp sh = 0.5 * (s + s.adjoint());
  const SuperOp ah = 0.5 * (a + a.adjoint());
  const SuperOp bh = 0.5 * (b + b.adjoint());
  const double lhs = process_fidelity(sh, SuperOp(0.25 * ah + 0.75 * bh));
  const double rhs = 0.25 * process_fidelity(sh, ah) + 0.75 * process_fidelity(sh, bh);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));

  CHECK_THROWS_AS(process_fidelity(ah, SuperOp(test::random_matrix(4, rng))),
                  std::invalid_argument);
}

TEST_CASE("infidelity scale is clamped and monotone") {
  CHECK(neg_log10_infidelity(0.9) == doctest::Approx(1.0));
  CHECK(neg_log10_infidelity(0.99) > neg_log10_infidelity(0.9));
  CHECK(neg_log10_infidelity(1.0) == doctest::Approx(15.0).epsilon(1e-3));
  CHECK(neg_log10_infidelity(1.0 + 1e-9) == neg_log10_infidelity(1.0));
}

TEST_CASE("cptp report flags corruption") {
  std::mt19937 rng(89);
  const Operator u = expm(cplx(0, -1) * test::random_hermitian(4, rng));
  const SuperOp s = conjugation_superop(u);
  const CptpReport clean = cptp_report(s);
  CHECK(clean.trace_residual <= 1e-12);
  CHECK(clean.hermiticity_residual <= 1e-12);
  CHECK(clean.choi_min_eigenvalue >= -1e-12);

  SuperOp corrupted = s;
  corrupted(3, 5) += 0.1;
  const CptpReport bad = cptp_report(corrupted);
  CHECK((bad.trace_residual > 1e-6 || bad.hermiticity_residual > 1e-6 ||
         bad.choi_min_eigenvalue < -1e-6));
}

TEST_CASE("noisy channel at moderate noise stays trace preserving") {
  const SystemSpec spec = SystemSpec::defaults(1);
  const SuperOp chan =
      channel_superop(bch_sequence(select_tau(spec)), spec, NoiseParams{1e-4, 1e-4}, false);
  CHECK(cptp_report(chan).trace_residual <= 1e-10);
}

TEST_CASE("small robustness sweep has the expected shape") {
  const SystemSpec spec = SystemSpec::defaults(1);
  std::vector<double> ts = {1e-6, 1e-5, 1e-4, 1e-3};
  const SweepResult result = robustness_sweep(spec, ts);
  REQUIRE(result.points.size() == 4);
  CHECK(result.errors.empty());

  for (std::size_t i = 0; i < result.points.size(); ++i) {
    const auto& p = result.points[i];
    CHECK(p.t1 == ts[i]);
    CHECK(p.t2 == ts[i]);
    CHECK(p.fidelity_wqc >= p.fidelity_swap);
    CHECK(p.fidelity_wqc <= 1.0 + 1e-9);
    CHECK(p.fidelity_swap <= 1.0 + 1e-9);
    CHECK(p.fidelity_swap >= 0.0);
    if (i > 0) CHECK(p.fidelity_wqc >= result.points[i - 1].fidelity_wqc);
  }

  // vanishing-noise limit: both protocols approach unit fidelity
  CHECK(result.points.back().fidelity_wqc >= 1.0 - 1e-4);
  CHECK(result.points.back().fidelity_swap >= 1.0 - 1e-3);

  // deterministic re-run, byte for byte
  const SweepResult again = robustness_sweep(spec, ts);
  CHECK(sweep_to_csv(result) == sweep_to_csv(again));

  CHECK_THROWS_AS(robustness_sweep(spec, {}), std::invalid_argument);
  CHECK_THROWS_AS(robustness_sweep(spec, {1e-3, 1e-4}), std::invalid_argument);
}

TEST_CASE("csv format") {
  SweepResult r;
  r.points.push_back({1e-7, 1e-7, 0.25, 0.125, 0.124938736608, 0.057991946978});
  const std::string csv = sweep_to_csv(r);
  CHECK(csv.rfind("t1_s,t2_s,fidelity_wqc,fidelity_swap,neg_log10_infid_wqc,"
                  "neg_log10_infid_swap\n", 0) == 0);
  CHECK(csv.find("1e-07,1e-07,0.25,0.125,") != std::string::npos);
  // 12 significant digits, locale-independent decimal point
  CHECK(csv.find("0.124938736608") != std::string::npos);
}

TEST_CASE("loglog slope on a synthetic linear-in-gamma curve") {
  SweepResult r;
  for (double t1 : {1e-4, 2e-4, 4e-4, 1e-3}) {
    SweepPoint p;
    p.t1 = p.t2 = t1;
    p.fidelity_wqc = 1.0 - 1e-3 / t1 * 1e-4;  // infidelity proportional to 1/t1
    r.points.push_back(p);
  }
  CHECK(infidelity_loglog_slope(r, 0.0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(infidelity_loglog_slope(r, 1.0), std::invalid_argument);
}

TEST_SUITE_END();
