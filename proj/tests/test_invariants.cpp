#include "coxinv/errors.hpp"
#include "coxinv/invariants.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <cmath>
#include <numbers>

using namespace coxinv;

namespace {

oracle::Vec random_vec(SampleRng& rng, std::size_t n, double scale = 1.0) {
  oracle::Vec x(n);
  for (auto& v : x) v = rng.uniform(-scale, scale);
  return x;
}

Point pt(const oracle::Vec& v) { return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())); }

// Worst |f(gx) - f(x)| / (1 + |f(x)|) over the oracle group and sample points.
double finite_invariance_defect(const Invariant& f, const RootSystem& rs, int samples, std::uint64_t seed) {
  auto group = oracle::group_closure(oracle::doubles(rs.simple_roots()));
  double worst = 0;
  for (int s = 0; s < samples; ++s) {
    SampleRng rng(seed, 1, static_cast<std::uint64_t>(s));
    auto x = random_vec(rng, rs.ambient_dim(), 2.0);
    const double fx = f.value(pt(x));
    for (const auto& g : group)
      worst = std::max(worst, std::abs(f.value(pt(oracle::apply(g, x))) - fx) / (1 + std::abs(fx)));
  }
  return worst;
}

// Same for the affine group, with the generating reflections and coroot
// translations written out directly.
double affine_invariance_defect(const Invariant& f, const RootSystem& rs, int samples, std::uint64_t seed) {
  auto simple = oracle::doubles(rs.simple_roots());
  auto theta = oracle::doubles(rs.highest_root());
  auto coroots = oracle::doubles(rs.simple_coroots());
  double worst = 0;
  for (int s = 0; s < samples; ++s) {
    SampleRng rng(seed, 2, static_cast<std::uint64_t>(s));
    auto x = random_vec(rng, rs.ambient_dim(), 2.0);
    const double fx = f.value(pt(x));
    std::vector<oracle::Vec> images;
    for (const auto& a : simple) images.push_back(oracle::reflect(x, a));
    images.push_back(oracle::reflect_affine(x, theta, 1.0));
    for (const auto& c : coroots) {
      auto y = x;
      const double k = static_cast<double>(rng.integer(-3, 3));
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += k * c[i];
      images.push_back(y);
    }
    for (const auto& y : images) worst = std::max(worst, std::abs(f.value(pt(y)) - fx) / (1 + std::abs(fx)));
  }
  return worst;
}

void check_derivatives(const Invariant& f, std::size_t n, std::uint64_t seed) {
  for (int s = 0; s < 20; ++s) {
    SampleRng rng(seed, 3, static_cast<std::uint64_t>(s));
    auto x = random_vec(rng, n);
    auto fd = oracle::fd_gradient([&](const oracle::Vec& y) { return f.value(pt(y)); }, x);
    Point g = f.gradient(pt(x));
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(g(static_cast<Eigen::Index>(i)) - fd[i]) <= 1e-6 * (1 + std::abs(fd[i])));
    Eigen::MatrixXd h = f.hessian(pt(x));
    for (std::size_t j = 0; j < n; ++j) {
      auto fdj = oracle::fd_gradient(
          [&](const oracle::Vec& y) { return f.gradient(pt(y))(static_cast<Eigen::Index>(j)); }, x);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) - fdj[i]) <=
              1e-5 * (1 + std::abs(fdj[i])));
    }
    CHECK(f.laplacian(pt(x)) == doctest::Approx(h.trace()));
  }
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  auto p = (x + y).pow(2);
  CHECK(p.terms().size() == 3);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK((p - p).is_zero());
  CHECK(p.evaluate({1, 2}) == Scalar(9));
  auto q = p + Polynomial::constant(2, 1);
  CHECK_FALSE(q.is_homogeneous());
  // (x + y)^2 composed with the swap is unchanged
  CHECK(p.compose(reflection_in({1, -1})) == p);
  // x o (x -> x + 1) = x + 1
  Isometry shift{Matrix::identity(2), {1, 0}};
  CHECK(x.compose(shift) == x + Polynomial::constant(2, 1));
  auto e = x.embed(1, 3);
  CHECK(e.evaluate({5, 7, 11}) == Scalar(7));
  CHECK(Polynomial::linear_form({2, 3}).evaluate({1, 1}) == Scalar(5));
}

TEST_CASE("reynolds examples") {
  auto a2 = FiniteCoxeterGroup(build_root_system(RootType::A, 2));
  Polynomial r2(3);
  for (std::size_t i = 0; i < 3; ++i) r2 = r2 + Polynomial::variable(3, i).pow(2);
  CHECK(reynolds(r2, a2) == r2);

  auto a1 = FiniteCoxeterGroup(build_root_system(RootType::A, 1));
  CHECK(reynolds(Polynomial::variable(2, 0) - Polynomial::variable(2, 1), a1).is_zero());

  auto gamma1 = fundamental_weights(a2.root_system())[0];
  auto p = reynolds(Polynomial::linear_form(gamma1).pow(3), a2);
  CHECK_FALSE(p.is_zero());
  CHECK(p.degree() == 3);
  CHECK(p.exact());
  CHECK(finite_invariance_defect(Invariant(p), a2.root_system(), 100, 7) < 1e-12);

  // projection
  CHECK(reynolds(p, a2) == p);
  auto g2 = FiniteCoxeterGroup(build_root_system(RootType::G, 2));
  auto q = reynolds(Polynomial::variable(3, 0).pow(4) + Polynomial::variable(3, 1) * Polynomial::variable(3, 2), g2);
  CHECK(reynolds(q, g2) == q);

  auto aff = AffineWeylGroup(build_root_system(RootType::A, 1));
  CHECK_THROWS_AS(reynolds(r2, aff), NotFinite);
}

TEST_CASE("chevalley degrees match the classification") {
  struct Case {
    RootType t;
    int rank, m;
  };
  std::vector<Case> cases{{RootType::A, 1, 0}, {RootType::A, 2, 0}, {RootType::B, 2, 0}, {RootType::G, 2, 0},
                          {RootType::A, 3, 0}, {RootType::B, 3, 0}, {RootType::C, 3, 0}, {RootType::D, 4, 0},
                          {RootType::I2, 2, 5}, {RootType::I2, 2, 8}};
  for (const auto& c : cases) {
    auto rs = build_root_system(c.t, c.rank, c.m);
    CAPTURE(rs.label());
    FiniteCoxeterGroup g(rs);
    auto sys = chevalley_generators(g);
    CHECK(sys.degrees() == rs.classified_degrees());
    CHECK(sys.generators.size() == rs.rank());
    CHECK(sys.jacobian_rank == rs.rank());
    CHECK(sys.jacobian_det > 1e-8);
    for (const auto& f : sys.generators) {
      CHECK(f.polynomial().is_homogeneous());
      CHECK(finite_invariance_defect(f, rs, 60, 11) < 1e-10);
    }
  }
}

TEST_CASE("chevalley A1 is proportional to the squared root pairing") {
  auto sys = chevalley_generators(FiniteCoxeterGroup(build_root_system(RootType::A, 1)));
  REQUIRE(sys.generators.size() == 1);
  const auto& p = sys.generators[0].polynomial();
  auto ref = Polynomial::linear_form({1, -1}).pow(2);
  const Scalar ratio = p.terms().begin()->second / ref.terms().begin()->second;
  CHECK(p == ref.scaled(ratio));
}

TEST_CASE("chevalley A2 values agree along orbits") {
  auto rs = build_root_system(RootType::A, 2);
  auto sys = chevalley_generators(FiniteCoxeterGroup(rs));
  auto group = oracle::group_closure(oracle::doubles(rs.simple_roots()));
  REQUIRE(group.size() == 6);
  oracle::Vec x{0.3, -0.7, 0.25};
  for (const auto& f : sys.generators)
    for (const auto& g : group) CHECK(std::abs(f.value(pt(oracle::apply(g, x))) - f.value(pt(x))) < 1e-12);
}

TEST_CASE("polynomial derivatives match finite differences") {
  auto rs = build_root_system(RootType::B, 2);
  auto sys = chevalley_generators(FiniteCoxeterGroup(rs));
  for (const auto& f : sys.generators) check_derivatives(f, 2, 5);
}

TEST_CASE("averaging operator") {
  AffineWeylGroup a1(build_root_system(RootType::A, 1));
  auto one = averaging_operator(TrigInvariant::Weight{0}, a1);
  CHECK(one.terms().size() == 1);
  CHECK(one.evaluate(Point::Constant(2, 0.37)).real() == doctest::Approx(1.0));

  auto c = averaging_operator(TrigInvariant::Weight{1}, a1);
  CHECK(c.real());
  CHECK(c.terms().size() == 2);
  CHECK(c.terms().at({1}) == std::complex<double>(0.5));
  CHECK(c.terms().at({-1}) == std::complex<double>(0.5));

  AffineWeylGroup a2(build_root_system(RootType::A, 2));
  auto x1 = averaging_operator(TrigInvariant::Weight{1, 0}, a2);
  CHECK_FALSE(x1.real());
  CHECK(x1.terms().size() == 3);
  CHECK_FALSE(x1.conjugate_symmetric());
  CHECK_THROWS_AS(Invariant{x1}, Error);

  // Fourier finiteness: term count equals the ambient orbit size of the weight.
  for (auto [t, n] : std::vector<std::pair<RootType, int>>{{RootType::A, 2}, {RootType::B, 2}, {RootType::G, 2},
                                                           {RootType::A, 3}, {RootType::B, 3}}) {
    auto rs = build_root_system(t, n);
    AffineWeylGroup g(rs);
    auto group = oracle::group_closure(oracle::doubles(rs.simple_roots()));
    auto weights = fundamental_weights(rs);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      std::vector<oracle::Vec> orbit;
      for (const auto& m : group) {
        auto v = oracle::apply(m, oracle::doubles(weights[i]));
        if (!oracle::contains(orbit, v)) orbit.push_back(v);
      }
      TrigInvariant::Weight w(n, 0);
      w[i] = 1;
      CHECK(averaging_operator(w, g).terms().size() == orbit.size());
    }
  }

  // ambient input
  auto gamma1 = fundamental_weights(a2.root_system())[0];
  CHECK(averaging_operator(gamma1, a2).terms() == x1.terms());
  CHECK_THROWS_AS(averaging_operator(Scalar::fraction(1, 2) * gamma1, a2), WeightNotInLattice);
  CHECK_THROWS_AS(averaging_operator(Vector{1, 1, 1}, a2), WeightNotInLattice);
}

TEST_CASE("weight involution") {
  using P = std::vector<int>;
  CHECK(weight_involution(AffineWeylGroup(build_root_system(RootType::A, 1))) == P{0});
  CHECK(weight_involution(AffineWeylGroup(build_root_system(RootType::A, 2))) == P{1, 0});
  CHECK(weight_involution(AffineWeylGroup(build_root_system(RootType::B, 2))) == P{0, 1});
  CHECK(weight_involution(AffineWeylGroup(build_root_system(RootType::G, 2))) == P{0, 1});
  CHECK(weight_involution(AffineWeylGroup(build_root_system(RootType::A, 3))) == P{2, 1, 0});
  CHECK(weight_involution(AffineWeylGroup(build_root_system(RootType::D, 5))) == P{0, 1, 2, 4, 3});
  CHECK(weight_involution(AffineWeylGroup(build_root_system(RootType::E, 6))) == P{5, 1, 4, 3, 2, 0});
}

TEST_CASE("real generators") {
  SUBCASE("A1 is a cosine") {
    auto rs = build_root_system(RootType::A, 1);
    auto sys = real_generators(AffineWeylGroup(rs));
    REQUIRE(sys.generators.size() == 1);
    CHECK(sys.p == 1);
    CHECK(sys.q == 0);
    auto gamma = oracle::doubles(fundamental_weights(rs)[0]);
    auto coroot = oracle::doubles(rs.simple_coroots()[0]);
    for (int s = 0; s < 50; ++s) {
      SampleRng rng(3, 4, static_cast<std::uint64_t>(s));
      auto x = random_vec(rng, 2, 3.0);
      const double y = sys.generators[0].value(pt(x));
      CHECK(y == doctest::Approx(std::cos(2 * std::numbers::pi * oracle::dot(gamma, x))).epsilon(1e-12));
      oracle::Vec neg{-x[0], -x[1]}, shifted{x[0] + coroot[0], x[1] + coroot[1]};
      CHECK(std::abs(sys.generators[0].value(pt(neg)) - y) < 1e-12);
      CHECK(std::abs(sys.generators[0].value(pt(shifted)) - y) < 1e-12);
    }
  }
  SUBCASE("A2 splits into real and imaginary parts") {
    auto sys = real_generators(AffineWeylGroup(build_root_system(RootType::A, 2)));
    CHECK(sys.p == 0);
    CHECK(sys.q == 1);
    CHECK(sys.involution == std::vector<int>{1, 0});
    REQUIRE(sys.info.size() == 2);
    CHECK(sys.info[0].part == "re");
    CHECK(sys.info[0].weight_index == 0);
    CHECK(sys.info[1].part == "im");
    CHECK(sys.info[1].weight_index == 1);
  }
  SUBCASE("B2 has no pairs") {
    auto sys = real_generators(AffineWeylGroup(build_root_system(RootType::B, 2)));
    CHECK(sys.p == 2);
    CHECK(sys.q == 0);
  }
  for (auto [t, n] : std::vector<std::pair<RootType, int>>{
           {RootType::A, 1}, {RootType::A, 2}, {RootType::B, 2}, {RootType::G, 2}, {RootType::A, 3}}) {
    auto rs = build_root_system(t, n);
    CAPTURE(rs.label());
    auto sys = real_generators(AffineWeylGroup(rs));
    CHECK(sys.generators.size() == static_cast<std::size_t>(n));
    CHECK(sys.jacobian_rank == static_cast<std::size_t>(n));
    CHECK(sys.jacobian_det > 1e-8);
    for (const auto& f : sys.generators) {
      CHECK(f.trig().real());
      CHECK(f.trig().conjugate_symmetric());
      CHECK(affine_invariance_defect(f, rs, 200, 9) < 1e-10);
      for (int s = 0; s < 50; ++s) {
        SampleRng rng(9, 5, static_cast<std::uint64_t>(s));
        CHECK(std::abs(f.trig().evaluate(pt(random_vec(rng, rs.ambient_dim(), 2.0))).imag()) < 1e-12);
      }
      check_derivatives(f, rs.ambient_dim(), 13);
    }
  }
}

TEST_CASE("designated points are interior") {
  for (auto [t, n] : std::vector<std::pair<RootType, int>>{{RootType::A, 2}, {RootType::B, 3}, {RootType::G, 2}}) {
    auto rs = build_root_system(t, n);
    auto x = designated_point(rs, true);
    for (const auto& a : rs.simple_roots()) CHECK(dot(x, a) > Scalar(0));
    CHECK(dot(x, rs.highest_root()) < Scalar(1));
  }
}
