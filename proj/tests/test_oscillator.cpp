#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "anharmonic/families.hpp"
#include "anharmonic/numerics.hpp"
#include "anharmonic/states.hpp"
#include "anharmonic/verify.hpp"

using namespace anharmonic;

namespace {

template <typename F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    FAIL() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

std::vector<OscillatorModel> desk_models() {
  return {make_harmonic(),
          make_generalized_morse(1.0, 0.5),
          make_generalized_morse(1.2, 0.125),
          make_wei_hua(0.2, 1.0, 0.5),
          make_kratzer_fues(0.5),
          make_generalized_kratzer_fues(0.75, 0.5)};
}

}  // namespace

TEST(Superpotential, HarmonicIsMinusQ) {
  const auto h = make_harmonic();
  EXPECT_EQ(eval_superpotential(h, 2.0), -2.0);
  EXPECT_EQ(eval_superpotential(h, 0.0), 0.0);
  EXPECT_EQ(eval_superpotential_derivative(h, 123.0), -1.0);
  EXPECT_EQ(commutator_value(h, 7.0), 1.0);
}

TEST(Superpotential, MorseAtOrigin) {
  const auto m = make_generalized_morse(1.0, 0.5);
  EXPECT_DOUBLE_EQ(eval_superpotential(m, 0.0), 0.5);
  EXPECT_DOUBLE_EQ(eval_superpotential_derivative(m, 0.0), -1.0);
  EXPECT_DOUBLE_EQ(commutator_value(m, 0.0), 1.0);
}

TEST(Superpotential, KratzerAtTwo) {
  const auto k = make_kratzer_fues(0.5);
  EXPECT_NEAR(eval_superpotential(k, 2.0), -0.5, 1e-15);
  EXPECT_NEAR(eval_superpotential_derivative(k, 2.0), -0.25, 1e-15);
  EXPECT_NEAR(commutator_value(k, 2.0), 0.25, 1e-15);
}

TEST(Superpotential, OutsideDomainIsRejected) {
  const auto k = make_kratzer_fues(0.5);
  expect_error(ErrorKind::domain_violation, [&] { eval_superpotential(k, -2.0); });
  expect_error(ErrorKind::domain_violation, [&] { eval_superpotential(k, -3.0); });
  expect_error(ErrorKind::domain_violation, [&] { riccati_potential(k, -2.5); });
  const auto w = make_wei_hua(0.2, 1.0, 0.5);
  expect_error(ErrorKind::domain_violation, [&] { eval_superpotential_derivative(w, -1.2); });
  expect_error(ErrorKind::domain_violation, [&] { commutator_value(w, -1.2); });
}

TEST(RiccatiPotential, HarmonicValues) {
  const auto h = make_harmonic();
  EXPECT_EQ(riccati_potential(h, 1.0), 0.0);
  EXPECT_EQ(riccati_potential(h, 0.0), -0.5);
  EXPECT_DOUBLE_EQ(h.e0(), 0.5);
}

TEST(RiccatiPotential, MorseLimitAtLargeQ) {
  const auto m = make_generalized_morse(1.0, 0.5);
  EXPECT_NEAR(riccati_potential(m, 60.0), 0.125, 1e-15);
  EXPECT_NEAR(m.closed_form_potential(60.0), 0.125, 1e-15);
}

TEST(RiccatiPotential, ClosedFormAgreesForDeskModels) {
  for (const auto& m : desk_models()) {
    const auto g = auto_grid(m, 0.0, 4001);
    EXPECT_LT(riccati_max_residual(m, g), 1e-8) << m.descriptor();
    // Double precision is enough away from the Wei Hua pole.
    for (double q : {-0.5, 0.0, 0.5, 1.0, 3.0, 10.0}) {
      if (!m.domain().contains(q)) continue;
      EXPECT_NEAR(m.closed_form_potential(q), riccati_potential(m, q), 1e-12)
          << m.descriptor() << " q=" << q;
    }
  }
}

TEST(RiccatiPotential, MorseBelowTenToMinusTen) {
  const auto m = make_generalized_morse(1.0, 0.5);
  EXPECT_LT(riccati_max_residual(m, auto_grid(m, 0.0)), 1e-10);
}

TEST(Commutator, ExactlyMinusDerivative) {
  std::mt19937 rng(7);
  for (const auto& m : desk_models()) {
    std::uniform_real_distribution<double> q(std::max(m.domain().lower + 1e-3, -5.0), 30.0);
    for (int i = 0; i < 100; ++i) {
      const double v = q(rng);
      EXPECT_EQ(commutator_value(m, v), -eval_superpotential_derivative(m, v));
    }
  }
}

TEST(Commutator, ClosedExpressions) {
  const auto m = make_generalized_morse(1.3, 0.2);
  EXPECT_NEAR(commutator_value(m, 0.7), std::exp(-std::sqrt(0.4) * 0.7), 1e-15);
  const auto w = make_wei_hua(0.2, 1.0, 0.5);
  const auto& p = std::get<WeiHuaParams<double>>(w.params());
  for (double q : {-0.5, 0.0, 2.0}) {
    const double e = std::exp(-p.c1 * (q - p.q0));
    const double want = p.c * p.c1 * p.c1 / p.c2 * e / ((1 - p.c * e) * (1 - p.c * e));
    EXPECT_NEAR(commutator_value(w, q), want, 1e-12 * want);
  }
}

TEST(Commutator, PositiveForRandomValidParameters) {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int built = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    try {
      OscillatorModel m = make_harmonic();
      switch (trial % 4) {
        case 0: m = make_generalized_morse(0.1 + 3.0 * u(rng), 0.05 + 2.0 * u(rng)); break;
        case 1: m = make_wei_hua(-1.0 + 2.0 * u(rng), 0.2 + 2.0 * u(rng), -2.0 + 4.0 * u(rng)); break;
        case 2: m = make_kratzer_fues(0.05 + 0.9 * u(rng)); break;
        default: m = make_generalized_kratzer_fues(0.05 + 2.0 * u(rng), 0.05 + 0.9 * u(rng)); break;
      }
      ++built;
      const double lo = std::isfinite(m.domain().lower) ? m.domain().lower : -10.0;
      for (int k = 0; k < 20; ++k) {
        const double q = lo + (1e-6 + 30.0 * u(rng));
        const double c = commutator_value(m, q);
        if (std::isfinite(c)) {
          EXPECT_GT(c, 0.0) << m.descriptor() << " q=" << q;
        }
      }
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::invalid_params);
    }
  }
  EXPECT_GT(built, 1500);
}

TEST(Derivative, AnalyticMatchesNumericInterior) {
  for (const auto& m : desk_models()) {
    const double lo = std::isfinite(m.domain().lower) ? m.domain().lower + 0.5 : -6.0;
    const auto g = make_grid(lo, 20.0, 4001);
    const auto d = differentiate(sample(g, [&](double q) { return m.superpotential(q); }), 1);
    for (std::size_t i = 2; i + 2 < g.size(); ++i) {
      ASSERT_NEAR(d[i], m.superpotential_derivative(g[i]), 1e-6) << m.descriptor() << " " << g[i];
    }
  }
}

TEST(WeiHua, DerivedConstants) {
  const auto w = make_wei_hua(0.2, 1.0, 0.5);
  const auto& p = std::get<WeiHuaParams<double>>(w.params());
  EXPECT_NEAR(p.W, 1.4, 1e-15);
  EXPECT_NEAR(p.B, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(p.C, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(p.c, 7.0 / 3.0, 1e-14);
  EXPECT_NEAR(p.q0, -std::log(7.0), 1e-14);
  EXPECT_NEAR(w.domain().lower, -std::log(3.0), 1e-14);
  // 2D = (1 - c2) W^2.
  EXPECT_NEAR(*w.d_const(), 0.49, 1e-15);
}

TEST(WeiHua, RiccatiConsistentGroundEnergy) {
  // x(inf) = -c0/c1 fixes V - E0 -> c0^2/(2 c1^2) while V -> D, so E0 = D - 0.02.
  const auto w = make_wei_hua(0.2, 1.0, 0.5);
  EXPECT_NEAR(w.e0(), 0.47, 1e-15);
  EXPECT_NEAR(riccati_potential(w, 200.0), 0.02, 1e-15);
  EXPECT_NEAR(w.potential(200.0), *w.d_const(), 1e-15);
}

TEST(WeiHua, HighPrecisionOracle) {
  // Values from a 40-digit evaluation of x(q) = (c c1/c2)E/(1 - cE) - c0/c1.
  struct Row {
    double q, x, dx, v;
  };
  const Row rows[] = {
      {-0.5, 2.2402386198358469214, -5.4176208807050264395, -0.19947590345050308595},
      {0.0, 0.8, -1.5, -0.43},
      {0.5, 0.30682133211684396849, -0.63525526346119009625, -0.27055796680961771407},
      {2.0, -0.10551405025191226988, -0.098949747097986810019, -0.043908266148711871138},
      {10.0, -0.19996973292211727344, -0.000030267535930728344356, 0.019978813274506092294},
  };
  const auto w = make_wei_hua(0.2, 1.0, 0.5);
  for (const auto& r : rows) {
    EXPECT_NEAR(w.superpotential(r.q), r.x, 1e-14) << r.q;
    EXPECT_NEAR(w.superpotential_derivative(r.q), r.dx, 1e-14) << r.q;
    EXPECT_NEAR(w.closed_form_potential(r.q), r.v, 1e-14) << r.q;
  }
}

TEST(WeiHua, RejectsDegenerateParameters) {
  expect_error(ErrorKind::invalid_params, [] { make_wei_hua(0.5, 1.0, 0.5); });  // B/W = C
  expect_error(ErrorKind::invalid_params, [] { make_wei_hua(0.2, 0.0, 0.5); });
  expect_error(ErrorKind::invalid_params, [] { make_wei_hua(0.2, 1.0, 0.0); });
  expect_error(ErrorKind::invalid_params, [] { make_wei_hua(0.2, 1.0, 1.0); });
  expect_error(ErrorKind::invalid_params, [] { make_wei_hua(0.2, 1.0, -1.0); });   // c1^2 + c2 = 0
  expect_error(ErrorKind::invalid_params, [] { make_wei_hua(-0.5, 1.0, 0.5); });   // W = 0
  expect_error(ErrorKind::invalid_params, [] { make_wei_hua(NAN, 1.0, 0.5); });
}

TEST(WeiHua, NegativeCHasWholeLineDomain) {
  const auto w = make_wei_hua(0.2, 1.0, -0.5);
  EXPECT_LT(std::get<WeiHuaParams<double>>(w.params()).c, 0.0);
  EXPECT_FALSE(std::isfinite(w.domain().lower));
  EXPECT_LT(riccati_max_residual(w, make_grid(-10.0, 30.0, 801)), 1e-8);
}

TEST(Morse, DerivedConstants) {
  const auto m = make_generalized_morse(1.0, 0.5);
  const auto& p = std::get<MorseParams<double>>(m.params());
  EXPECT_DOUBLE_EQ(p.c0, 0.5);
  EXPECT_DOUBLE_EQ(p.c1, 1.0);
  EXPECT_DOUBLE_EQ(m.e0(), 0.375);
  EXPECT_DOUBLE_EQ(*m.d_const(), 0.5);

  const auto m2 = make_generalized_morse(1.0, 0.125);
  const auto& p2 = std::get<MorseParams<double>>(m2.params());
  EXPECT_DOUBLE_EQ(p2.c1, 0.5);
  EXPECT_DOUBLE_EQ(p2.c0, 0.875);
  EXPECT_DOUBLE_EQ(eval_superpotential(m2, 0.0), 0.25);
}

TEST(Morse, RejectsNonDecayingParameters) {
  expect_error(ErrorKind::invalid_params, [] { make_generalized_morse(1.0, 2.0); });
  expect_error(ErrorKind::invalid_params, [] { make_generalized_morse(1.0, 1.0); });
  expect_error(ErrorKind::invalid_params, [] { make_generalized_morse(1.0, 0.0); });
  expect_error(ErrorKind::invalid_params, [] { make_generalized_morse(1.0, -0.1); });
  expect_error(ErrorKind::invalid_params, [] { make_generalized_morse(INFINITY, 0.5); });
}

TEST(Morse, ReducesToStandardMorseAtSEqualsOne) {
  // Standard Morse in the dimensionless coordinate: V = (1 - e^{-c1 q})^2/(4 x_e),
  // E0 = (1 - x_e/2)/2, psi0 ∝ exp(-e^{-c1 q}/c1^2 - (1 - x_e) q/c1).
  for (double xe : {0.125, 0.5, 0.8}) {
    const auto m = make_generalized_morse(1.0, xe);
    const double c1 = std::sqrt(2.0 * xe);
    const double shift = -m.log_ground_state(0.0) + (-1.0 / (c1 * c1));
    for (double q = -3.0; q <= 30.0; q += 0.37) {
      const double e = std::exp(-c1 * q);
      const double v = (1.0 - e) * (1.0 - e) / (4.0 * xe);
      EXPECT_NEAR(m.potential(q), v, 1e-12 * std::max(1.0, v)) << xe << " " << q;
      EXPECT_NEAR(m.superpotential(q), (e - (1.0 - xe)) / c1, 1e-12) << q;
      const double log_std = -e / (c1 * c1) - (1.0 - xe) / c1 * q;
      EXPECT_NEAR(m.log_ground_state(q) + shift, log_std, 1e-12 * std::max(1.0, std::abs(log_std)));
    }
    EXPECT_NEAR(m.e0(), 0.5 * (1.0 - xe / 2.0), 1e-15);
  }
}

TEST(Kratzer, GeneralizedConstants) {
  const auto k = make_generalized_kratzer_fues(0.75, 0.5);
  const auto& p = std::get<KratzerParams<double>>(k.params());
  EXPECT_NEAR(p.s, 0.0, 1e-15);
  EXPECT_NEAR(2.0 * *k.d_const(), 3.0, 1e-14);
  EXPECT_NEAR(2.0 * k.e0(), 0.75, 1e-15);
  EXPECT_DOUBLE_EQ(eval_superpotential(k, 0.0), 0.5);
  EXPECT_DOUBLE_EQ(k.domain().lower, -2.0);
}

TEST(Kratzer, PlainConstants) {
  const auto k = make_kratzer_fues(0.5);
  const auto& p = std::get<KratzerParams<double>>(k.params());
  EXPECT_DOUBLE_EQ(p.c0, 0.75);
  EXPECT_NEAR(2.0 * *k.d_const(), 3.0, 1e-14);
}

TEST(Kratzer, RejectsOutOfRange) {
  expect_error(ErrorKind::invalid_params, [] { make_generalized_kratzer_fues(0.5, 1.2); });
  expect_error(ErrorKind::invalid_params, [] { make_generalized_kratzer_fues(0.5, 0.0); });
  expect_error(ErrorKind::invalid_params, [] { make_generalized_kratzer_fues(0.0, 0.5); });
  expect_error(ErrorKind::invalid_params, [] { make_kratzer_fues(1.0); });
  expect_error(ErrorKind::invalid_params, [] { make_kratzer_fues(-0.5); });
}

TEST(Kratzer, GeneralizedWithSZeroEqualsPlain) {
  for (double c1 : {0.2, 0.5, 0.9}) {
    const auto a = make_generalized_kratzer_fues(1.0 - c1 * c1, c1);
    const auto b = make_kratzer_fues(c1);
    for (double q = -1.0 / c1 + 0.01; q < 40.0; q += 0.173) {
      EXPECT_NEAR(a.superpotential(q), b.superpotential(q), 1e-12);
      EXPECT_NEAR(a.superpotential_derivative(q), b.superpotential_derivative(q), 1e-12);
      EXPECT_NEAR(a.potential(q), b.potential(q), 1e-12 * std::max(1.0, std::abs(b.potential(q))));
      EXPECT_NEAR(a.log_ground_state(q), b.log_ground_state(q), 1e-12);
    }
  }
}

TEST(Kratzer, WellMatchesClosedShape) {
  // V - E0 = D [(c1 q - s)/(1 + c1 q)]^2 - E0 with s = 0.
  const auto k = make_kratzer_fues(0.5);
  for (double q : {-1.5, 0.0, 1.0, 4.0}) {
    const double r = 0.5 * q / (1.0 + 0.5 * q);
    EXPECT_NEAR(k.closed_form_potential(q), 1.5 * r * r - 0.375, 1e-14);
  }
}

TEST(PhysicalMorse, SpectroscopicConstants) {
  auto r = morse_dimensionless_from_physical({8.0, 1.0, 1.0, 1.0});
  EXPECT_DOUBLE_EQ(r.omega_e, 4.0);
  EXPECT_DOUBLE_EQ(r.x_e, 0.125);
  r = morse_dimensionless_from_physical({8.0, 2.0, 1.0, 1.0});
  EXPECT_DOUBLE_EQ(r.omega_e, 8.0);
  EXPECT_DOUBLE_EQ(r.x_e, 0.25);
  expect_error(ErrorKind::invalid_params, [] { morse_dimensionless_from_physical({0.0, 1.0, 1.0, 1.0}); });
  expect_error(ErrorKind::invalid_params, [] { morse_dimensionless_from_physical({1.0, 1.0, -1.0, 1.0}); });
}

TEST(Models, DeterministicAndDescribed) {
  const auto a = make_wei_hua(0.2, 1.0, 0.5);
  const auto b = make_wei_hua(0.2, 1.0, 0.5);
  for (double q = -1.0; q < 50.0; q += 0.77) {
    EXPECT_EQ(a.superpotential(q), b.superpotential(q));
    EXPECT_EQ(a.closed_form_potential(q), b.closed_form_potential(q));
  }
  EXPECT_EQ(a.descriptor(), "weihua(c0=0.2,c1=1,c2=0.5)");
  EXPECT_EQ(make_harmonic().descriptor(), "harmonic");
  EXPECT_EQ(make_kratzer_fues(0.5).descriptor(), "kratzer(c1=0.5)");
  EXPECT_EQ(make_generalized_morse(1.2, 0.125).descriptor(), "morse(s=1.2,xe=0.125)");
}

TEST(Models, ExtendedPrecisionRebuildAgrees) {
  for (const auto& m : desk_models()) {
    const auto wide = rebuild<extended_real>(m);
    for (double q : {-0.5, 0.3, 2.0, 9.0}) {
      if (!m.domain().contains(q)) continue;
      EXPECT_NEAR(static_cast<double>(wide.superpotential(q)), m.superpotential(q), 1e-13);
      EXPECT_NEAR(static_cast<double>(wide.log_ground_state(q)), m.log_ground_state(q), 1e-12);
    }
  }
}
