#include "coxinv/errors.hpp"
#include "coxinv/reflection_group.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace coxinv;

namespace {

Vector random_rational_point(SampleRng& rng, std::size_t n) {
  Vector x(n);
  for (auto& v : x) v = Scalar::fraction(rng.integer(-200, 200), 97);
  return x;
}

Vector apply_word(const std::vector<Isometry>& gens, const std::vector<int>& word, Vector x) {
  for (int i : word) x = gens[i].apply(x);
  return x;
}

bool dominant(const RootSystem& rs, const oracle::Vec& x) {
  for (const auto& a : rs.simple_roots())
    if (oracle::dot(x, oracle::doubles(a)) < -1e-12) return false;
  return true;
}

}  // namespace

TEST_CASE("reflection_in") {
  auto s = reflection_in({1, -1});
  CHECK(s.apply({1, 0}) == Vector{0, 1});
  CHECK(s.compose(s) == Isometry::identity(2));

  auto t = reflection_in({1, 2}, Scalar::fraction(3, 2));
  Vector on{Scalar::fraction(1, 2), Scalar::fraction(1, 2)};  // <on, (1,2)> = 3/2
  CHECK(t.apply(on) == on);
  CHECK(t.compose(t) == Isometry::identity(2));
  CHECK(t.is_orthogonal());
  CHECK_THROWS_AS(reflection_in({0, 0}), ZeroVector);
}

TEST_CASE("isometry group axioms") {
  FiniteCoxeterGroup w(build_root_system(RootType::B, 2));
  AffineWeylGroup aw(build_root_system(RootType::B, 2));
  Isometry g = aw.element(w.elements()[5].linear, {1, -2});
  Isometry h = aw.generators().back();
  CHECK(g.compose(g.inverse()) == Isometry::identity(2));
  CHECK(g.compose(h).compose(g) == g.compose(h.compose(g)));
  CHECK(g.compose(h).inverse() == h.inverse().compose(g.inverse()));
}

TEST_CASE("enumeration matches the closure oracle") {
  FiniteCoxeterGroup a1(build_root_system(RootType::A, 1));
  CHECK(enumerate(a1).size() == 2);

  auto a2rs = build_root_system(RootType::A, 2);
  FiniteCoxeterGroup a2(a2rs);
  auto oracle_a2 = oracle::group_closure(oracle::doubles(a2rs.simple_roots()));
  CHECK(oracle_a2.size() == 6);
  CHECK(enumerate(a2).size() == 6);

  auto b3rs = build_root_system(RootType::B, 3);
  FiniteCoxeterGroup b3(b3rs);
  CHECK(oracle::group_closure(oracle::doubles(b3rs.simple_roots())).size() == 48);
  CHECK(enumerate(b3).size() == 48);

  // no duplicates, every element permutes the roots
  std::set<std::string> keys;
  auto roots = b3rs.roots();
  for (const auto& g : b3.elements()) {
    keys.insert(key_of(g.linear));
    CHECK(g.is_orthogonal());
    for (const auto& a : roots) CHECK(std::find(roots.begin(), roots.end(), g.apply(a)) != roots.end());
  }
  CHECK(keys.size() == 48);

  AffineWeylGroup aff(build_root_system(RootType::A, 2));
  CHECK_THROWS_AS(enumerate(aff), NotFinite);
}

TEST_CASE("orders equal the classified orders up to rank 4") {
  std::vector<RootSystem> systems = {
      build_root_system(RootType::A, 1), build_root_system(RootType::A, 3), build_root_system(RootType::A, 4),
      build_root_system(RootType::B, 4), build_root_system(RootType::C, 3), build_root_system(RootType::D, 4),
      build_root_system(RootType::F, 4), build_root_system(RootType::G, 2)};
  for (int m = 2; m <= 8; ++m) systems.push_back(build_root_system(RootType::I2, 2, m));
  for (const auto& rs : systems) {
    CAPTURE(rs.label());
    CHECK(FiniteCoxeterGroup(rs).order() == rs.classified_order());
  }
}

TEST_CASE("decompose") {
  SUBCASE("A2 in R^3") {
    FiniteCoxeterGroup a2(build_root_system(RootType::A, 2));
    auto d = decompose(a2.generators(), 3);
    REQUIRE(d.fixed_basis.size() == 1);
    CHECK(d.fixed_basis[0] == Vector{1, 1, 1});
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].basis.size() == 2);
    CHECK(d.factors[0].label == "A2");
    CHECK(decomposition_residual(d, a2.generators()).is_zero());
  }
  SUBCASE("two commuting A1 in R^4") {
    std::vector<Isometry> gens = {reflection_in({1, -1, 0, 0}), reflection_in({0, 0, 1, -1})};
    auto d = decompose(gens, 4);
    CHECK(d.fixed_basis.size() == 2);
    REQUIRE(d.factors.size() == 2);
    CHECK(d.factors[0].label == "A1");
    CHECK(d.factors[1].label == "A1");
    CHECK(decomposition_residual(d, gens).is_zero());
  }
  SUBCASE("trivial group") {
    auto d = decompose({}, 3);
    CHECK(d.fixed_basis.size() == 3);
    CHECK(d.factors.empty());
  }
  SUBCASE("labels") {
    for (auto [t, r] : std::vector<std::pair<RootType, int>>{
             {RootType::B, 3}, {RootType::C, 3}, {RootType::D, 4}, {RootType::F, 4}, {RootType::G, 2}, {RootType::E, 6}}) {
      FiniteCoxeterGroup w(build_root_system(t, r));
      auto d = decompose(w.generators(), w.dim());
      REQUIRE(d.factors.size() == 1);
      std::string expected = w.root_system().label();
      if (expected[0] == 'C') expected[0] = 'B';
      CHECK(d.factors[0].label == expected);
    }
    FiniteCoxeterGroup i5(build_root_system(RootType::I2, 2, 5));
    CHECK(decompose(i5.generators(), 2).factors[0].label == "I2(5)");
  }
  SUBCASE("rejects non-reflections") {
    Isometry rot = Isometry::identity(2);
    rot.linear = Matrix::from_rows({{0, -1}, {1, 0}});
    CHECK_THROWS_AS(decompose({rot}, 2), NotReflections);
    CHECK_THROWS_AS(decompose({reflection_in({1, 0}, Scalar(1))}, 2), NotReflections);
    CHECK_THROWS_AS(decompose({Isometry::identity(2)}, 2), NotReflections);
  }
}

TEST_CASE("fold_to_chamber") {
  FiniteCoxeterGroup a1(build_root_system(RootType::A, 1));
  auto r = a1.fold({0, 1});
  CHECK(r.point == Vector{1, 0});
  CHECK(r.word.size() == 1);
  auto dom = a1.fold({3, 1});
  CHECK(dom.point == Vector{3, 1});
  CHECK(dom.word.empty());

  // B2: fold agrees with a scan of the enumerated orbit for the dominant member.
  auto b2rs = build_root_system(RootType::B, 2);
  FiniteCoxeterGroup b2(b2rs);
  auto group = oracle::group_closure(oracle::doubles(b2rs.simple_roots()));
  for (int s = 0; s < 50; ++s) {
    SampleRng rng(11, 0, s);
    Vector x = random_rational_point(rng, 2);
    auto res = b2.fold(x);
    CHECK(res.word.size() <= b2rs.positive_roots().size());
    CHECK(apply_word(b2.generators(), res.word, x) == res.point);
    oracle::Vec found;
    for (const auto& g : group) {
      auto y = oracle::apply(g, oracle::doubles(x));
      if (dominant(b2rs, y)) {
        found = y;
        break;
      }
    }
    CHECK(oracle::near(found, oracle::doubles(res.point)));
  }
}

TEST_CASE("fold_to_alcove") {
  auto a1rs = build_root_system(RootType::A, 1);
  AffineWeylGroup a1(a1rs);
  const Vector gamma = fundamental_weights(a1rs)[0];
  auto res = a1.fold(Scalar::fraction(23, 10) * gamma);
  CHECK(res.point == Scalar::fraction(3, 10) * gamma);
  CHECK(dot(res.point, a1rs.simple_roots()[0]) == Scalar::fraction(3, 10));

  auto inside = a1.fold(Scalar::fraction(1, 2) * gamma);
  CHECK(inside.word.empty());
  CHECK(inside.point == Scalar::fraction(1, 2) * gamma);

  CHECK_THROWS_AS(AffineWeylGroup(build_root_system(RootType::I2, 2, 5)), NotCrystallographic);

  // A2~: compare with a bounded orbit scan (3 lattice shells).
  auto a2rs = build_root_system(RootType::A, 2);
  AffineWeylGroup a2(a2rs);
  auto group = oracle::group_closure(oracle::doubles(a2rs.simple_roots()));
  auto coroots = oracle::doubles(a2rs.simple_coroots());
  auto theta = oracle::doubles(a2rs.highest_root());
  for (int s = 0; s < 30; ++s) {
    SampleRng rng(5, 0, s);
    Vector x = random_rational_point(rng, 3);
    auto r = a2.fold(x);
    // translation then word reproduces the fold
    Vector y = x - a2.lattice_vector(r.shift);
    CHECK(apply_word(a2.generators(), r.word, y) == r.point);
    std::vector<oracle::Vec> hits;
    for (const auto& g : group)
      for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j) {
          auto z = oracle::apply(g, oracle::doubles(x));
          for (std::size_t k = 0; k < 3; ++k) z[k] += i * coroots[0][k] + j * coroots[1][k];
          if (dominant(a2rs, z) && oracle::dot(z, theta) <= 1 + 1e-12) hits.push_back(z);
        }
    REQUIRE_FALSE(hits.empty());
    for (const auto& h : hits) CHECK(oracle::near(h, oracle::doubles(r.point)));
  }
}

TEST_CASE("orbit_equal") {
  auto a2rs = build_root_system(RootType::A, 2);
  FiniteCoxeterGroup a2(a2rs);
  Vector x{Scalar::fraction(3, 7), Scalar::fraction(-1, 5), Scalar::fraction(2, 9)};
  for (const auto& g : a2.elements()) CHECK(orbit_equal(a2, x, g.apply(x)));
  auto w = fundamental_weights(a2rs);
  Vector p = w[0] + Scalar::fraction(1, 3) * w[1];
  Vector q = Scalar::fraction(1, 2) * w[0] + w[1];
  CHECK_FALSE(orbit_equal(a2, p, q));

  AffineWeylGroup aa2(a2rs);
  CHECK(orbit_equal(aa2, x, x + aa2.lattice_vector({2, -1})));
  CHECK_FALSE(orbit_equal(aa2, Scalar::fraction(1, 4) * p, Scalar::fraction(1, 4) * q));
}

TEST_CASE("semidirect structure") {
  for (auto t : {RootType::A, RootType::B, RootType::G}) {
    auto rs = build_root_system(t, 2);
    AffineWeylGroup aw(rs);
    const auto& elems = aw.finite_part().elements();
    for (int s = 0; s < 40; ++s) {
      SampleRng rng(3, 1, s);
      const auto& w = elems[rng.integer(0, elems.size() - 1)];
      std::vector<long long> gamma{rng.integer(-4, 4), rng.integer(-4, 4)};
      Isometry g = aw.element(w.linear, gamma);
      auto f = aw.factor(g);
      CHECK(f.linear == w.linear);
      CHECK(f.lattice == gamma);
      // w t_gamma w^-1 = t_{w gamma}
      Isometry t = aw.element(Matrix::identity(aw.dim()), gamma);
      Isometry conj = w.compose(t).compose(w.inverse());
      CHECK(conj.linear == Matrix::identity(aw.dim()));
      CHECK(conj.translation == w.apply(aw.lattice_vector(gamma)));
    }
    // generators are group elements
    for (const auto& g : aw.generators()) CHECK_NOTHROW(aw.factor(g));
  }
}

TEST_CASE("fold is idempotent and constant on orbits (exact)") {
  for (auto [t, r, affine] : std::vector<std::tuple<RootType, int, bool>>{
           {RootType::A, 2, false}, {RootType::B, 3, false}, {RootType::G, 2, false},
           {RootType::A, 2, true}, {RootType::B, 2, true}, {RootType::G, 2, true}}) {
    auto rs = build_root_system(t, r);
    CoxeterGroup group({{rs, affine}}, 0);
    CAPTURE(rs.label());
    CAPTURE(affine);
    for (int s = 0; s < 200; ++s) {
      SampleRng rng(17, affine, s);
      Vector x = random_rational_point(rng, group.dim());
      Isometry g = group.random_element(rng, 3);
      Vector f = group.fold(x);
      CHECK(group.fold(f) == f);
      CHECK(group.fold(g.apply(x)) == f);
    }
  }
}

TEST_CASE("product group sampling stays inside the fundamental domain") {
  CoxeterGroup g({{build_root_system(RootType::A, 2), false}, {build_root_system(RootType::G, 2), true}}, 1);
  CHECK(g.dim() == 7);
  CHECK(g.generators().size() == 5);
  for (int s = 0; s < 100; ++s) {
    SampleRng rng(9, 0, s);
    Vector x = g.random_interior_point(rng, 1e-3);
    for (double d : g.wall_distances(x)) CHECK(d >= 1e-3);
    auto f = g.fold(x);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs((f[i] - x[i]).to_double()) < 1e-12);
  }
}
