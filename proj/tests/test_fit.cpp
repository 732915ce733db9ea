#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "anharmonic/fit.hpp"

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

ExpansionParams params(double r_e, double s, double c0, std::vector<double> c = {}) {
  ExpansionParams p;
  p.r_e = r_e;
  p.s = s;
  p.c0 = c0;
  p.c = std::move(c);
  return p;
}

std::vector<PotentialSample> synthesize(const ExpansionParams& truth, double lo, double hi, int count) {
  std::vector<PotentialSample> out;
  for (int i = 0; i < count; ++i) {
    const double r = lo + (hi - lo) * i / (count - 1);
    out.push_back({r, eval_expansion(truth, r)});
  }
  return out;
}

ExpansionParams perturbed(const ExpansionParams& truth, double factor) {
  auto p = truth;
  p.r_e *= factor;
  p.c0 /= factor;
  for (auto& c : p.c) c *= factor;
  return p;
}

}  // namespace

TEST(Expansion, VanishesAtEquilibrium) {
  const auto p = params(1.0, 0.0, 2.0);
  EXPECT_EQ(eval_expansion(p, 1.0), 0.0);
  const auto q = params(1.2, 0.1, 3.0, {-0.2, 0.05});
  EXPECT_EQ(eval_expansion(q, q.equilibrium()), 0.0);
}

TEST(Expansion, DissociationLimit) {
  EXPECT_NEAR(eval_expansion(params(1.0, 0.0, 2.0), 1e12), 2.0, 1e-9);
  EXPECT_NEAR(eval_expansion(params(1.0, 0.0, 2.0, {-0.5}), 1e12), 1.0, 1e-9);
}

TEST(Expansion, KnownValue) {
  // u = (2 - 1)/2 = 0.5: 2 * 0.25 * (1 - 0.5 * 0.5) = 0.375
  EXPECT_DOUBLE_EQ(eval_expansion(params(1.0, 0.0, 2.0, {-0.5}), 2.0), 0.375);
}

TEST(Expansion, RejectsNonPositiveR) {
  expect_error(ErrorKind::invalid_input, [] { eval_expansion(params(1.0, 0.0, 2.0), 0.0); });
  expect_error(ErrorKind::invalid_input, [] { eval_expansion(params(1.0, 0.0, 2.0), -1.0); });
}

TEST(ConvergenceRadius, Examples) {
  EXPECT_DOUBLE_EQ(convergence_radius_lower(1.0, 0.0), 0.5);
  EXPECT_DOUBLE_EQ(convergence_radius_lower(0.5, 0.0), 0.25);
  EXPECT_DOUBLE_EQ(convergence_radius_lower(1.0, 3.0), 2.0);
  // |u| < 1 exactly above the radius.
  const auto p = params(1.0, 3.0, 1.0);
  const double r = convergence_radius_lower(1.0, 3.0);
  EXPECT_NEAR(std::abs((r - p.equilibrium()) / r), 1.0, 1e-15);
}

TEST(ConvergenceRadius, RejectsBadParams) {
  expect_error(ErrorKind::invalid_params, [] { convergence_radius_lower(0.0, 0.0); });
  expect_error(ErrorKind::invalid_params, [] { convergence_radius_lower(1.0, -1.0); });
  expect_error(ErrorKind::invalid_params, [] { convergence_radius_lower(NAN, 0.0); });
}

TEST(Gradient, MatchesFiniteDifferences) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::uniform_real_distribution<double> pos(0.6, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = params(pos(rng), 0.3 * u(rng), pos(rng), {u(rng), u(rng)});
    const double r = pos(rng) + 0.5;
    const auto g = expansion_gradient(p, r);
    ASSERT_EQ(g.size(), 5u);
    auto probe = [&](int which, double delta) {
      auto q = p;
      double* slot = which == 0 ? &q.r_e : which == 1 ? &q.s : which == 2 ? &q.c0 : &q.c[which - 3];
      *slot += delta;
      return eval_expansion(q, r);
    };
    for (int j = 0; j < 5; ++j) {
      const double h = 1e-6;
      const double fd = (probe(j, h) - probe(j, -h)) / (2 * h);
      EXPECT_NEAR(g[j], fd, 1e-6 * (1.0 + std::abs(fd))) << "param " << j;
    }
  }
}

TEST(Fit, RoundTripMorseLike) {
  const auto truth = params(1.2, 0.1, 3.0);
  const auto data = synthesize(truth, 0.8, 6.0, 50);
  for (double f : {0.8, 1.2}) {
    const auto fit = fit_expansion(data, 0, perturbed(truth, f));
    ASSERT_TRUE(fit.converged);
    EXPECT_NEAR(fit.params.r_e, 1.2, 1e-4);
    EXPECT_NEAR(fit.params.c0, 3.0, 1e-4);
    EXPECT_LT(fit.scaled_rss, 1e-18);
    EXPECT_EQ(fit.params.s, 0.1);
  }
}

TEST(Fit, RoundTripWithOneCorrection) {
  const auto truth = params(1.2, 0.1, 3.0, {-0.2});
  const auto data = synthesize(truth, 0.8, 6.0, 50);
  for (double f : {0.8, 1.2}) {
    const auto fit = fit_expansion(data, 1, perturbed(truth, f));
    ASSERT_TRUE(fit.converged);
    EXPECT_NEAR(fit.params.r_e, 1.2, 1e-4);
    EXPECT_NEAR(fit.params.c0, 3.0, 1e-4);
    EXPECT_NEAR(fit.params.c[0], -0.2, 1e-4);
    EXPECT_LT(fit.scaled_rss, 1e-18);
  }
}

TEST(Fit, DefaultStartRecoversEquilibrium) {
  // With s held at 0 only r_e (s + 1) is identifiable.
  const auto truth = params(1.2, 0.1, 3.0, {-0.2});
  const auto fit = fit_expansion(synthesize(truth, 0.8, 6.0, 50), 1);
  ASSERT_TRUE(fit.converged);
  EXPECT_EQ(fit.params.s, 0.0);
  EXPECT_NEAR(fit.params.equilibrium(), truth.equilibrium(), 1e-6);
  EXPECT_NEAR(fit.params.c0, 3.0, 1e-6);
  EXPECT_EQ(eval_expansion(fit.params, fit.params.equilibrium()), 0.0);
}

TEST(Fit, RssNeverIncreases) {
  const auto truth = params(1.2, 0.1, 3.0, {-0.2});
  std::mt19937 rng(11);
  std::normal_distribution<double> noise(0.0, 1e-3);
  auto data = synthesize(truth, 0.8, 6.0, 60);
  for (auto& d : data) d.v += noise(rng);
  const auto fit = fit_expansion(data, 1, perturbed(truth, 1.3));
  ASSERT_GE(fit.rss_history.size(), 2u);
  for (std::size_t i = 1; i < fit.rss_history.size(); ++i) {
    EXPECT_LE(fit.rss_history[i], fit.rss_history[i - 1]);
  }
  EXPECT_TRUE(fit.converged);
  EXPECT_GT(fit.rss, 0.0);
  EXPECT_NEAR(fit.params.r_e, 1.2, 1e-2);
}

TEST(Fit, IterationCapReportsNonConvergence) {
  const auto truth = params(1.2, 0.1, 3.0, {-0.2});
  FitOptions opt;
  opt.max_iterations = 1;
  const auto fit = fit_expansion(synthesize(truth, 0.8, 6.0, 50), 1, perturbed(truth, 1.3), opt);
  EXPECT_FALSE(fit.converged);
  EXPECT_EQ(fit.iterations, 1);
}

TEST(Fit, Underdetermined) {
  const std::vector<PotentialSample> two = {{1.0, 0.0}, {2.0, 1.0}};
  expect_error(ErrorKind::underdetermined, [&] { fit_expansion(two, 0); });
  const std::vector<PotentialSample> same = {{1.0, 0.0}, {1.0, 1.0}, {1.0, 2.0}, {1.0, 3.0}};
  expect_error(ErrorKind::underdetermined, [&] { fit_expansion(same, 0); });
  const std::vector<PotentialSample> four = {{1.0, 0.0}, {2.0, 1.0}, {3.0, 2.0}, {4.0, 3.0}};
  expect_error(ErrorKind::underdetermined, [&] { fit_expansion(four, 2); });
}

TEST(Fit, RejectsBadData) {
  const std::vector<PotentialSample> zero_r = {{0.0, 1.0}, {1.0, 0.0}, {2.0, 1.0}};
  expect_error(ErrorKind::invalid_input, [&] { fit_expansion(zero_r, 0); });
  const std::vector<PotentialSample> nan_v = {{0.5, NAN}, {1.0, 0.0}, {2.0, 1.0}};
  expect_error(ErrorKind::invalid_input, [&] { fit_expansion(nan_v, 0); });
}

TEST(Fit, InitOrderMismatch) {
  const auto data = synthesize(params(1.0, 0.0, 1.0), 0.8, 4.0, 20);
  expect_error(ErrorKind::invalid_params, [&] { fit_expansion(data, 1, params(1.0, 0.0, 1.0)); });
}

TEST(Fit, Deterministic) {
  const auto data = synthesize(params(1.2, 0.1, 3.0, {-0.2}), 0.8, 6.0, 50);
  const auto a = fit_expansion(data, 1);
  const auto b = fit_expansion(data, 1);
  EXPECT_EQ(a.params.r_e, b.params.r_e);
  EXPECT_EQ(a.rss, b.rss);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(InitialGuess, VertexAndPlateau) {
  const auto truth = params(1.5, 0.0, 2.0);
  const auto p = initial_guess(synthesize(truth, 0.9, 20.0, 200), 2);
  EXPECT_NEAR(p.r_e, 1.5, 0.05);
  // The top decile still sits below the plateau.
  EXPECT_NEAR(p.c0, 2.0, 0.4);
  EXPECT_EQ(p.c.size(), 2u);
}

TEST(ReadSamples, CommentsAndHeader) {
  std::istringstream in("# bond scan\nr,v\n0.9, 0.5\n\n1.0,0 # minimum\n1.5,+0.25\n");
  const auto d = read_samples(in);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0].r, 0.9);
  EXPECT_EQ(d[0].v, 0.5);
  EXPECT_EQ(d[2].v, 0.25);
}

TEST(ReadSamples, Malformed) {
  for (const char* text : {"1.0\n", "1.0,abc\n", "1.0,2.0,3.0\n", "0.9,0.5\nr,v\n"}) {
    std::istringstream in(text);
    expect_error(ErrorKind::invalid_input, [&] { read_samples(in); });
  }
  std::istringstream header_only("r,v\n");
  EXPECT_TRUE(read_samples(header_only).empty());
}
