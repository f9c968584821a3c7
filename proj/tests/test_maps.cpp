#include <stdexcept>
#include <string>
#include <vector>

#include "cremona/maps.hpp"
#include "cremona/monoid.hpp"
#include "cremona/rng.hpp"
#include "cremona/surface.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

MultiPoly mp5(const std::string& text) { return MultiPoly::parse(text, kMaxVars); }
MultiPoly mp4(const std::string& text) { return MultiPoly::parse(text, 4); }
BiForm bf(const std::string& text) { return BiForm::parse(text); }

Monoid quadric() { return make_monoid(mp5("x0*x4 - x1*x2"), {0, 4}); }

ParamSurface segre() {
  return make_surface({bf("s*u"), bf("s*v"), bf("t*u"), bf("t*v")});
}

ParamSurface quadric_slice() {
  return make_surface({bf("s*u"), bf("s*v"), bf("t*u"), bf("s*u"), bf("t*v")});
}

RationalMap coordinate_identity() {
  return make_rational_map({mp4("x0"), mp4("x1"), mp4("x2"), mp4("x3")});
}

std::vector<Rational> pt(std::initializer_list<long> xs) {
  std::vector<Rational> p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

}  // namespace

TEST_CASE("map construction validates its input") {
  CHECK_THROWS_AS(make_rational_map({mp4("x0")}), std::invalid_argument);
  CHECK_THROWS_AS(make_rational_map({MultiPoly(4), MultiPoly(4)}), std::invalid_argument);
  CHECK_THROWS_AS(make_rational_map({mp4("x0"), mp4("x1^2")}), std::invalid_argument);
  CHECK_THROWS_AS(make_rational_map({mp4("x0"), mp5("x0")}), std::invalid_argument);

  RationalMap m = make_rational_map({mp4("x0"), MultiPoly(4), mp4("x2")});
  CHECK(m.source_dim == 3);
  CHECK(m.target_dim == 2);
  CHECK(m.degree() == 1);
  CHECK(coordinate_identity().degree() == 1);
}

TEST_CASE("evaluation and projective comparison") {
  RationalMap id = coordinate_identity();
  std::vector<Rational> p = pt({1, 2, 3, 4});
  CHECK(eval_map(id, p) == p);
  CHECK_THROWS_AS(eval_map(id, pt({1, 2, 3})), std::invalid_argument);

  CHECK(projectively_equal(pt({1, 2}), pt({2, 4})));
  CHECK(projectively_equal(pt({0, 3, 0}), pt({0, -1, 0})));
  CHECK_FALSE(projectively_equal(pt({1, 2}), pt({2, 5})));
  CHECK_FALSE(projectively_equal(pt({0, 0}), pt({0, 1})));
  CHECK_FALSE(projectively_equal(pt({1, 2}), pt({1, 2, 0})));
}

TEST_CASE("compose substitutes components into a form") {
  MultiPoly f = mp4("x0*x1 - x2*x3");
  std::vector<MultiPoly> args{mp4("x0"), mp4("x1"), mp4("x2"), mp4("x3")};
  CHECK(compose(f, args) == f);

  std::vector<MultiPoly> sq{mp4("x1 + x2"), mp4("x0"), mp4("x0"), mp4("x0")};
  CHECK(compose(mp4("x0^2"), sq) == mp4("x1^2 + 2*x1*x2 + x2^2"));
  CHECK(compose(MultiPoly(4), args).is_zero());
  CHECK_THROWS_AS(compose(f, {mp4("x0"), mp4("x1")}), std::invalid_argument);
}

TEST_CASE("section of a monoid at p0") {
  RationalMap s = monoid_section(quadric());
  std::vector<MultiPoly> expect{mp4("x0*x1"), mp4("x0*x3"), mp4("x1*x3"),
                                mp4("x2*x3"), mp4("x3^2")};
  CHECK(s.components == expect);
  CHECK(compose(quadric().form, s.components).is_zero());

  // Vertex only at p0, nontrivial linear piece x1 + x4.
  Monoid f = make_monoid(mp5("x0*x1 + x0*x4 + x2^2 + x3*x4"), {0});
  RationalMap t = monoid_section(f);
  std::vector<MultiPoly> texp{mp4("-x1^2 - x2*x3"), mp4("x0^2 + x0*x3"),
                              mp4("x0*x1 + x1*x3"), mp4("x0*x2 + x2*x3"),
                              mp4("x0*x3 + x3^2")};
  CHECK(t.components == texp);
  CHECK(compose(f.form, t.components).is_zero());

  // Defensive preconditions, reachable only through raw aggregates.
  CHECK_THROWS_AS(monoid_section(Monoid{mp5("x1*x4 - x2*x3"), 2, {4}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(monoid_section(Monoid{mp5("x1*x2"), 2, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(monoid_section(Monoid{mp5("x0*x1"), 2, {0}}), std::domain_error);
}

TEST_CASE("the quadric monoid gives the standard degree 2 pair") {
  CremonaMap w = cremona_from_monoid(quadric());
  std::vector<MultiPoly> fwd{mp4("x0*x1"), mp4("x0*x3"), mp4("x1*x3"), mp4("x2*x3")};
  std::vector<MultiPoly> inv{mp4("x0*x1"), mp4("x0*x2"), mp4("x0*x3"), mp4("x1*x2")};
  CHECK(w.forward.components == fwd);
  CHECK(w.inverse.components == inv);
  CHECK(w.forward_degree == 2);
  CHECK(w.inverse_degree == 2);

  // Symbolic composition is the identity times a fixed sextic factor.
  MultiPoly back = mp4("x0*x1*x3");
  MultiPoly there = mp4("x0*x1*x2");
  for (int k = 0; k < 4; ++k) {
    MultiPoly yk = MultiPoly::variable(4, k);
    CHECK(compose(w.inverse.components[static_cast<std::size_t>(k)], w.forward.components) ==
          back * yk);
    CHECK(compose(w.forward.components[static_cast<std::size_t>(k)], w.inverse.components) ==
          there * yk);
  }

  CHECK(verify_cremona(w, 100, 777));

  CremonaMap wrong{w.forward, w.forward, quadric(), 2, 2};
  CHECK_FALSE(verify_cremona(wrong, 20, 991));
}

TEST_CASE("numeric round trips match the symbolic composition") {
  CremonaMap w = cremona_from_monoid(quadric());
  std::vector<MultiPoly> h;
  for (int k = 0; k < 4; ++k)
    h.push_back(compose(w.inverse.components[static_cast<std::size_t>(k)],
                        w.forward.components));
  Rng rng(20250819);
  int checked = 0;
  while (checked < 20) {
    std::vector<Rational> p;
    for (int i = 0; i < 4; ++i) p.push_back(rng.rational(50));
    std::vector<Rational> q = eval_map(w.forward, p);
    bool qz = true, hz = true;
    std::vector<Rational> via;
    std::array<Rational, kMaxVars> a{};
    for (int i = 0; i < 4; ++i) a[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
    for (const auto& c : q) qz = qz && (c == 0);
    for (const auto& hk : h) {
      via.push_back(hk.eval(a));
      hz = hz && (via.back() == 0);
    }
    if (qz || hz) continue;
    CHECK(eval_map(w.inverse, q) == via);
    CHECK(projectively_equal(via, p));
    ++checked;
  }
}

TEST_CASE("identity map transports a surface unchanged") {
  CremonaMap id{coordinate_identity(), coordinate_identity(), quadric(), 1, 1};
  CHECK(verify_cremona(id, 10, 5));
  ParamSurface s = segre();
  ParamSurface out = apply_to_surface(id, s);
  CHECK(out.forms() == s.forms());
}

TEST_CASE("the quadric map sends a generic plane to a quadric") {
  CremonaMap w = cremona_from_monoid(quadric());
  ParamSurface plane = make_surface({bf("s*u"), bf("s*v"), bf("t*v"), bf("s*u + s*v + t*v")});
  ParamSurface out = apply_to_surface(w, plane);
  Rng rng(333);
  CHECK(image_degree(out, rng) == 2);
}

TEST_CASE("degenerate images under transport are rejected") {
  CremonaMap w = cremona_from_monoid(quadric());
  // Lies in the fundamental plane x0 = 0; the image drops to a line.
  ParamSurface flat = make_surface({BiForm(1, 1), bf("s*u"), bf("s*v"), bf("t*v")});
  CHECK_THROWS_AS(apply_to_surface(w, flat), std::invalid_argument);

  ParamSurface big =
      make_surface({bf("s*u"), bf("s*v"), bf("t*u"), bf("t*v"), bf("s*u + t*v")});
  CHECK_THROWS_AS(apply_to_surface(w, big), std::invalid_argument);
}

TEST_CASE("pipeline monoid from a sliced quadric") {
  Rng rng(91003);
  auto m = find_double_vertex_monoid(quadric_slice(), 2, rng);
  REQUIRE(m.has_value());

  RationalMap sec = monoid_section(*m);
  CHECK(compose(m->form, sec.components).is_zero());

  CremonaMap w = cremona_from_monoid(*m);
  CHECK(w.forward_degree <= 2);
  CHECK(w.inverse_degree <= 2);
  CHECK(w.forward_degree >= 1);
  CHECK(verify_cremona(w, 50, 4242));
}

TEST_CASE("degenerate monoid forms are rejected") {
  CHECK_THROWS_AS(cremona_from_monoid(make_monoid(mp5("x0*x4 - x1*x2"), {0})),
                  std::invalid_argument);
  // No x0 anywhere: the denominator at p0 vanishes identically.
  CHECK_THROWS_AS(cremona_from_monoid(Monoid{mp5("x1*x4 - x2*x3"), 2, {0, 4}}),
                  std::invalid_argument);
  // x0*x1*x4 factors; the residual piece collapses the forward map.
  CHECK_THROWS_AS(cremona_from_monoid(make_monoid(mp5("x0*x1*x4"), {0, 4})),
                  std::domain_error);
  // x1 divides every component.
  CHECK_THROWS_AS(cremona_from_monoid(make_monoid(mp5("x0*x1*x4 + x1*x2*x3"), {0, 4})),
                  std::domain_error);
}

TEST_CASE("monoids without the middle piece still give maps") {
  CremonaMap w = cremona_from_monoid(make_monoid(mp5("x0*x1 + x2*x4 + x3^2"), {0, 4}));
  std::vector<MultiPoly> fwd{mp4("-x1*x3 - x2^2"), mp4("x0^2"), mp4("x0*x1"), mp4("x0*x2")};
  std::vector<MultiPoly> inv{mp4("x1*x2"), mp4("x2^2"), mp4("x2*x3"), mp4("-x0*x1 - x3^2")};
  CHECK(w.forward.components == fwd);
  CHECK(w.inverse.components == inv);
  CHECK(verify_cremona(w, 50, 616));
}

TEST_CASE("a cubic double vertex monoid gives a degree 3 pair") {
  CremonaMap w = cremona_from_monoid(make_monoid(mp5("x0*x1*x4 + x2^3"), {0, 4}));
  CHECK(w.forward_degree == 3);
  CHECK(w.inverse_degree == 3);
  CHECK(verify_cremona(w, 50, 31337));
}
