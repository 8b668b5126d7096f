#include <doctest.h>

#include <cmath>

#include "semigraph/charpoly.hpp"
#include "semigraph/families.hpp"
#include "semigraph/matrix.hpp"
#include "semigraph/spectrum.hpp"
#include "testutil.hpp"

using namespace semigraph;

TEST_CASE("star generator structure") {
  const Semigraph g = gen_star(3);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 4);
  CHECK(g.label(0) == "v1");
  // center v1 is interior of the through-edge and an end of every spoke
  CHECK(classify_vertex(g, 0) == VertexClass::MiddleEnd);
  const EdgeCensus c = edge_census(g);
  CHECK(c.full == 1);
  CHECK(c.half_one_partial == 3);
  CHECK(c.quarter == 0);
  CHECK(is_connected(g));
  CHECK_THROWS_AS(gen_star(0), ValidationError);
}

TEST_CASE("tree generator structure") {
  const Semigraph g = gen_tree3(4);
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 4);
  // the shared root is an end of every edge
  CHECK(classify_vertex(g, 0) == VertexClass::PureEnd);
  const EdgeCensus c = edge_census(g);
  CHECK(c.full == 4);
  CHECK(c.total() == 4);
  CHECK(is_connected(g));
  CHECK_THROWS_AS(gen_tree3(0), ValidationError);
}

TEST_CASE("exact eigenvalue rendering") {
  CHECK(ExactEigenvalue{0, 0, 0}.str() == "0");
  CHECK(ExactEigenvalue{Rational(1, 2), 0, 0}.str() == "1/2");
  CHECK(ExactEigenvalue{Rational(5, 2), Rational(-1, 2), 5}.str() == "5/2 - 1/2*sqrt(5)");
  CHECK(ExactEigenvalue{Rational(5, 2), Rational(1, 2), 5}.str() == "5/2 + 1/2*sqrt(5)");
  CHECK(ExactEigenvalue{Rational(5, 2), Rational(1, 2), 5}.value() ==
        doctest::Approx(2.5 + 0.5 * std::sqrt(5.0)));
  CHECK(ExactEigenvalue{Rational(5, 2), Rational(1, 2), 5}.is_rational() == false);
}

TEST_CASE("star closed form matches the numeric spectrum") {
  for (std::int64_t n : {1, 2, 3, 4, 5, 10, 25}) {
    const Semigraph g = gen_star(n);
    const Spectrum s = eigenvalues_sym(laplacian(g));
    const std::vector<double> closed = star_spectrum_closed(n).values();
    CHECK(testutil::sorted_max_deviation(testutil::to_std(s.values), closed) <= 1e-7);
  }
}

TEST_CASE("star half cluster has multiplicity n-1") {
  const Spectrum s = eigenvalues_sym(laplacian(gen_star(10)));
  const auto clusters = multiplicity_clusters(s);
  bool found = false;
  for (const auto& [value, count] : clusters) {
    if (std::abs(value - 0.5) < 1e-6) {
      CHECK(count == 9);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("star exact characteristic polynomial identity") {
  for (std::int64_t n : {1, 2, 3, 7, 12}) {
    const CharPoly direct = charpoly_exact(laplacian(gen_star(n)));
    const Polynomial closed = star_spectrum_closed(n).expand();
    CHECK(direct == closed);
  }
}

TEST_CASE("tree closed form matches the numeric spectrum") {
  for (std::int64_t n : {1, 2, 3, 4, 5, 10, 25}) {
    const Semigraph g = gen_tree3(n);
    const Spectrum s = eigenvalues_sym(laplacian(g));
    const std::vector<double> closed = tree3_spectrum_closed(n).values();
    CHECK(testutil::sorted_max_deviation(testutil::to_std(s.values), closed) <= 1e-7);
  }
}

TEST_CASE("tree spot values at n=1") {
  const Spectrum s = eigenvalues_sym(laplacian(gen_tree3(1)));
  CHECK(testutil::sorted_max_deviation(testutil::to_std(s.values), {0.0, 3.0, 5.0}) <= 1e-9);
}

TEST_CASE("tree exact characteristic polynomial identity") {
  for (std::int64_t n : {1, 2, 3, 7, 12}) {
    const CharPoly direct = charpoly_exact(laplacian(gen_tree3(n)));
    const Polynomial closed = tree3_spectrum_closed(n).expand();
    CHECK(direct == closed);
  }
}

TEST_CASE("tree n=2 charpoly in lowest terms") {
  // lambda (lambda^2-5lambda+5) (lambda^2-11lambda+25)
  const CharPoly p = charpoly_exact(laplacian(gen_tree3(2)));
  const std::vector<std::string> want = {"0", "125", "-180", "85", "-16", "1"};
  REQUIRE(p.degree() == 5);
  for (int k = 0; k <= 5; ++k) CHECK(rational_str(p.coeff(k)) == want[k]);
}

TEST_CASE("surd pairs expand to rational quadratics") {
  const ClosedFormSpectrum s = tree3_spectrum_closed(3);
  REQUIRE(s.fixed.size() == 3);  // 0, and the conjugate pair
  CHECK(s.fixed[1].second == 2);
  CHECK(s.fixed[2].second == 2);
  const Polynomial p = s.expand();
  CHECK(p.degree() == 7);
  CHECK(p.is_monic());
  // (lambda^2 - 5 lambda + 5)^2 divides it: check both surd roots numerically
  const double root = (5.0 - std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(p(root)) < 1e-9);
}

TEST_CASE("cubic solver recovers exact real roots") {
  // lambda^3 - 3 lambda^2: roots {0, 0, 3}
  const auto r = solve_cubic_real(-3, 0, 0);
  CHECK(r[0] == doctest::Approx(0.0));
  CHECK(r[1] == doctest::Approx(0.0));
  CHECK(r[2] == doctest::Approx(3.0));

  // (lambda-1)(lambda-2)(lambda-3)
  const auto s = solve_cubic_real(-6, 11, -6);
  CHECK(s[0] == doctest::Approx(1.0));
  CHECK(s[1] == doctest::Approx(2.0));
  CHECK(s[2] == doctest::Approx(3.0));

  // triple root (lambda-2)^3
  const auto t = solve_cubic_real(-6, 12, -8);
  for (double x : t) CHECK(x == doctest::Approx(2.0));

  // rational coefficients with irrational roots
  const auto u = solve_cubic_real(Rational(-19, 2), 25, Rational(-25, 2));
  CHECK(u[2] == doctest::Approx(5.0));

  CHECK_THROWS_AS(solve_cubic_real(0, 1, 1), ValidationError);  // one real root only
}

TEST_CASE("quadratic solver recovers exact real roots") {
  const auto r = solve_quadratic_real(-5, 5);
  CHECK(r[0] == doctest::Approx((5.0 - std::sqrt(5.0)) / 2.0));
  CHECK(r[1] == doctest::Approx((5.0 + std::sqrt(5.0)) / 2.0));

  const auto d = solve_quadratic_real(-4, 4);
  CHECK(d[0] == doctest::Approx(2.0));
  CHECK(d[1] == doctest::Approx(2.0));

  CHECK_THROWS_AS(solve_quadratic_real(0, 1), ValidationError);  // complex pair
}

TEST_CASE("closed spectra order accounting") {
  for (std::int64_t n : {1, 4}) {
    const ClosedFormSpectrum star = star_spectrum_closed(n);
    std::int64_t total = star.residual.degree();
    for (const auto& [v, mult] : star.fixed) total += mult;
    CHECK(total == star.order);
    CHECK(star.order == n + 3);

    const ClosedFormSpectrum tree = tree3_spectrum_closed(n);
    total = tree.residual.degree();
    for (const auto& [v, mult] : tree.fixed) total += mult;
    CHECK(total == tree.order);
    CHECK(tree.order == 2 * n + 1);
  }
}
