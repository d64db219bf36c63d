#include <doctest.h>

#include <cmath>

#include "rkdg/dg_function.hpp"
#include "rkdg/norms.hpp"
#include "test_support.hpp"

using namespace rkdg;
using testing::scalar;

namespace {

// Piecewise-linear function with given left/right traces at every node of
// a uniform mesh: element k is linear from right[k] to left[k+1].
DGFunction piecewise_linear(const std::shared_ptr<const Mesh1D>& mesh,
                            const std::vector<double>& start,
                            const std::vector<double>& end) {
  return l2_project(
      [&](double x) {
        const std::size_t k = std::min<std::size_t>(
            static_cast<std::size_t>((x - mesh->node(0)) / mesh->element_size(0)),
            mesh->num_elements() - 1);
        const double s = (x - mesh->node(k)) / mesh->element_size(k);
        return scalar(start[k] + s * (end[k] - start[k]));
      },
      mesh, 1, 1);
}

}  // namespace

TEST_SUITE("dg_function") {

TEST_CASE("constants are reproduced everywhere") {
  const auto mesh = testing::jittered(6, 3);
  const DGFunction f = l2_project([](double) { return scalar(3.0); }, mesh, 2, 1);
  for (double x : {0.0, 0.11, 0.5, 0.93}) {
    CHECK(f.evaluate(x, Side::Right)[0] == doctest::Approx(3.0).epsilon(1e-14));
  }
  for (std::size_t i = 0; i < mesh->num_nodes(); ++i) {
    const auto [jump, avg] = jump_avg(f, i);
    CHECK(std::abs(jump[0]) < 1e-13);
    CHECK(avg[0] == doctest::Approx(3.0));
  }
}

TEST_CASE("linear polynomial evaluates exactly") {
  const auto mesh = testing::uniform(4, 0.0, 4.0);
  const DGFunction f = l2_project([](double x) { return scalar(x); }, mesh, 1, 1);
  CHECK(f.evaluate(0.5)[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(f.evaluate_dx(2.7)[0] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("one-sided traces and jump/average at a discontinuity") {
  const auto mesh = testing::uniform(4, 0.0, 1.0);
  // Node 2 (x = 0.5): left trace 2, right trace 0.5.
  const DGFunction f =
      piecewise_linear(mesh, {0.0, 0.0, 0.5, 0.5}, {0.0, 2.0, 0.5, 0.0});
  CHECK(f.evaluate(0.5, Side::Left)[0] == doctest::Approx(2.0));
  CHECK(f.evaluate(0.5, Side::Right)[0] == doctest::Approx(0.5));
  CHECK(f.trace(2, Side::Left)[0] == doctest::Approx(2.0));
  CHECK(f.trace(2, Side::Right)[0] == doctest::Approx(0.5));
  const auto [jump, avg] = jump_avg(f, 2);
  CHECK(jump[0] == doctest::Approx(1.5));
  CHECK(avg[0] == doctest::Approx(1.25));
}

TEST_CASE("antisymmetric traces give zero average") {
  const auto mesh = testing::uniform(4, 0.0, 1.0);
  const double a = 0.7;
  const DGFunction f =
      piecewise_linear(mesh, {0.0, 0.0, a, 0.0}, {0.0, -a, 0.0, 0.0});
  const auto [jump, avg] = jump_avg(f, 2);
  CHECK(jump[0] == doctest::Approx(-2 * a));
  CHECK(std::abs(avg[0]) < 1e-14);
}

TEST_CASE("interior evaluation approaches the one-sided traces") {
  const auto mesh = testing::jittered(5, 11);
  const DGFunction f = testing::random_dg(mesh, 3, 2, 5);
  const double x = mesh->node(2);
  for (int c = 0; c < 2; ++c) {
    CHECK(f.evaluate(x - 1e-10)[c] ==
          doctest::Approx(f.trace(2, Side::Left)[c]).epsilon(1e-7));
    CHECK(f.evaluate(x + 1e-10)[c] ==
          doctest::Approx(f.trace(2, Side::Right)[c]).epsilon(1e-7));
  }
}

TEST_CASE("projection is idempotent") {
  const auto mesh = testing::jittered(7, 2);
  const DGFunction f = testing::random_dg(mesh, 2, 2, 9);
  const DGFunction g = l2_project(
      [&](double x) {
        return f.evaluate(x, mesh->node_index(x) >= 0 ? Side::Right : Side::Interior);
      },
      mesh, 2, 2);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(std::abs(f.coefficients()[i] - g.coefficients()[i]) < 1e-12);
  }
}

TEST_CASE("mean of sin on [0, pi] is 2 / pi") {
  // Two elements (the minimum); both halves of [0, pi] have mean 2 / pi.
  const auto mesh = std::make_shared<const Mesh1D>(
      std::vector<double>{0.0, M_PI / 2, M_PI}, true);
  const DGFunction f =
      l2_project([](double x) { return scalar(std::sin(x)); }, mesh, 0, 1, 12);
  CHECK(f.evaluate(1.0)[0] == doctest::Approx(2.0 / M_PI).epsilon(1e-12));
  CHECK(f.evaluate(2.5)[0] == doctest::Approx(2.0 / M_PI).epsilon(1e-12));
}

TEST_CASE("L2 norm of constants and Parseval identity") {
  const auto mesh = testing::jittered(6, 4, 0.0, 3.0);
  DGFunction zero(mesh, 2, 1);
  CHECK(l2_norm(zero) == 0.0);
  const DGFunction c = l2_project([](double) { return scalar(2.0); }, mesh, 2, 1);
  CHECK(l2_norm(c) == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-13));
  const DGFunction r = testing::random_dg(mesh, 3, 1, 1);
  const double quad = l2_distance(r, [](double) { return scalar(0.0); });
  CHECK(l2_norm(r) == doctest::Approx(quad).epsilon(1e-12));
}

TEST_CASE("per-component distance and masked norm") {
  const auto mesh = testing::uniform(8, 0.0, 2.0);
  DGFunction f(mesh, 1, 2);
  const State d = l2_distance_components(f, [](double) {
    State s(2);
    s << 1.0, 3.0;
    return s;
  });
  CHECK(d[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(d[1] == doctest::Approx(3.0 * std::sqrt(2.0)));
  const DGFunction g = testing::random_dg(mesh, 1, 2, 3);
  CHECK(l2_norm(g, {true, true}) == doctest::Approx(l2_norm(g)));
  CHECK(l2_norm(g, {false, true}) < l2_norm(g));
}

TEST_CASE("time norms by Gauss quadrature") {
  const std::vector<double> times = {0.0, 0.3, 1.0};
  CHECK(l1_in_time([](double t) { return t; }, times, 2) == doctest::Approx(0.5));
  CHECK(l2_in_time([](double t) { return t; }, times, 2) ==
        doctest::Approx(std::sqrt(1.0 / 3.0)));
  const std::vector<double> v = {1.0, 4.0, 2.0};
  CHECK(linf_over_times(v) == 4.0);
}

TEST_CASE("arithmetic requires matching spaces") {
  const auto mesh = testing::uniform(4);
  DGFunction a(mesh, 1, 1), b(mesh, 2, 1);
  CHECK_THROWS(a += b);
  const DGFunction r = raise_degree(testing::random_dg(mesh, 1, 1, 2), 3);
  CHECK(r.degree() == 3);
  CHECK(r(0, 3, 0) == 0.0);
}

}  // TEST_SUITE
