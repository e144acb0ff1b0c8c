/*
   Copyright 2026 The tanvar Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "doctest.h"
#include "tanvar/error.hpp"
#include "tanvar/varieties/spec.hpp"

using namespace tanvar;

namespace {

Field prime() { return Field(FieldConfig::prime_field()); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Unsupported;
}

std::pair<int, std::int64_t> dim_deg(const VarietyHandle& x) {
  const auto& h = hilbert_data(x);
  return {h.projective_dimension, h.degree};
}

}  // namespace

TEST_CASE("rational normal curves") {
  for (unsigned d = 1; d <= 5; ++d) {
    auto c = rational_normal_curve(prime(), d);
    CHECK(dim_deg(c) == std::pair<int, std::int64_t>{1, d});
  }
  auto cubic = rational_normal_curve(prime(), 3);
  // Twisted cubic: three quadrics.
  CHECK(implicitize(cubic).size() == 3);
  Rng rng(5);
  CHECK(param_degree(cubic, rng) == 1);
  CHECK(degree_by_slicing(cubic, rng) == 3);
}

TEST_CASE("scrolls, Veronese and Segre") {
  Rng rng(11);
  CHECK(dim_deg(rational_normal_scroll(prime(), {1, 2}, rng)) == std::pair<int, std::int64_t>{2, 3});
  CHECK(dim_deg(rational_normal_scroll(prime(), {2, 3}, rng)) == std::pair<int, std::int64_t>{2, 5});
  CHECK(dim_deg(rational_normal_scroll(prime(), {1, 1, 1}, rng)) == std::pair<int, std::int64_t>{3, 3});
  CHECK(dim_deg(veronese(prime(), 2)) == std::pair<int, std::int64_t>{2, 4});
  CHECK(dim_deg(segre(prime(), 1, 1)) == std::pair<int, std::int64_t>{2, 2});
  CHECK(dim_deg(segre(prime(), 2, 2)) == std::pair<int, std::int64_t>{4, 6});
  auto s = rational_normal_scroll(prime(), {2, 3}, rng);
  CHECK(param_degree(s, rng) == 1);
  CHECK(degree_by_slicing(s, rng) == 5);
}

TEST_CASE("non-injective parametrization") {
  auto c = custom_variety(prime(), {"t"}, {"1", "t^2", "t^4"}, {}, std::nullopt);
  Rng rng(2);
  CHECK(param_degree(c, rng) == 2);
  CHECK(dim_deg(c) == std::pair<int, std::int64_t>{1, 2});
  CHECK(degree_by_slicing(c, rng) == 2);
}

TEST_CASE("constrained custom parametrization") {
  // Conic as the image of the circle-like locus u^2 + v^2 = 1 under the
  // identity-with-one.
  auto c = custom_variety(prime(), {"u", "v"}, {"1", "u", "v"}, {"u^2 + v^2 - 1"}, std::nullopt);
  CHECK(c.dim() == 1);
  CHECK(dim_deg(c) == std::pair<int, std::int64_t>{1, 2});
  Rng rng(4);
  CHECK(degree_by_slicing(c, rng) == 2);
  // A linear chart removes a parameter.
  auto plane = custom_variety(prime(), {"a", "b", "c"}, {"a", "b", "c"}, {"a + 2*b + 3*c - 1"}, std::nullopt);
  CHECK(plane.require_param().nparams() == 2);
  CHECK_FALSE(plane.require_param().constrained());
  CHECK(dim_deg(plane) == std::pair<int, std::int64_t>{2, 1});
}

TEST_CASE("invalid custom specifications") {
  CHECK(kind_of([] { custom_variety(prime(), {"_t"}, {"1", "_t"}, {}, std::nullopt); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { custom_variety(prime(), {"t"}, {"1", "s"}, {}, std::nullopt); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([] { custom_variety(prime(), {"t"}, {"1", "t"}, {"2"}, std::nullopt); }) == ErrorKind::InvalidSpec);
  // Claimed dimension 2 for a curve.
  auto bad = custom_variety(prime(), {"s", "t"}, {"1", "s + t", "(s + t)^2"}, {}, std::size_t{2});
  CHECK(kind_of([&] { implicitize(bad); }) == ErrorKind::ImageDegenerate);
}

TEST_CASE("projection of the twisted cubic") {
  Field f = prime();
  auto cubic = rational_normal_curve(f, 3);
  Rng rng(8);
  // From the point (1,0,0,0) on the curve: a conic.
  LinearSpace on_curve(f, {{f.one(), f.zero(), f.zero(), f.zero()}}, 3);
  auto conic = project(cubic, on_curve, rng);
  CHECK(dim_deg(conic) == std::pair<int, std::int64_t>{1, 2});
  // From a general point: a nodal plane cubic.
  LinearSpace general(f, {{f.from_int(1), f.from_int(2), f.from_int(5), f.from_int(7)}}, 3);
  auto nodal = project(cubic, general, rng);
  CHECK(dim_deg(nodal) == std::pair<int, std::int64_t>{1, 3});
  // Ideal route agrees.
  auto by_ideal = project_ideal(implicitize(cubic), general);
  CHECK(ideals_equal(by_ideal, implicitize(nodal)));
}

TEST_CASE("center containing the variety") {
  Field f = prime();
  Rng rng(1);
  auto ln = linear_variety(LinearSpace::coordinate(f, 1, 3));
  CHECK(kind_of([&] { project(ln, LinearSpace::coordinate(f, 1, 3), rng); }) == ErrorKind::CenterContainsVariety);
  VarietyHandle by_ideal("line", std::nullopt, implicitize(ln));
  CHECK(kind_of([&] { project(by_ideal, LinearSpace::coordinate(f, 1, 3), rng); }) ==
        ErrorKind::CenterContainsVariety);
}

TEST_CASE("cones and joins") {
  Field f = prime();
  Rng rng(3);
  // S(0,0,3): cone over the twisted cubic with a line as vertex.
  auto cone = cone_join(LinearSpace::coordinate(f, 1, 1), rational_normal_curve(f, 3));
  CHECK(cone.ambient_dim() == 5);
  CHECK(dim_deg(cone) == std::pair<int, std::int64_t>{3, 3});
  // Join of two skew lines is P^3; join of two conics in skew planes has degree 4.
  auto j = cone_join(rational_normal_curve(f, 1), rational_normal_curve(f, 1));
  CHECK(dim_deg(j) == std::pair<int, std::int64_t>{3, 1});
  auto jc = cone_join(rational_normal_curve(f, 2), rational_normal_curve(f, 2));
  CHECK(dim_deg(jc) == std::pair<int, std::int64_t>{3, 4});
}

TEST_CASE("osculating scrolls and Verra surfaces") {
  Field f = prime();
  Rng rng(21);
  auto tan_cubic = osculating_scroll(rational_normal_curve(f, 3), 1, rng);
  CHECK(dim_deg(tan_cubic) == std::pair<int, std::int64_t>{2, 4});
  auto tan_quartic = osculating_scroll(rational_normal_curve(f, 4), 1, rng);
  CHECK(dim_deg(tan_quartic) == std::pair<int, std::int64_t>{2, 6});
  auto v = verra(f, 5, rng);
  CHECK(v.ambient_dim() == 5);
  CHECK(degree_by_slicing(v, rng) == 5);
  CHECK(dim_deg(v) == std::pair<int, std::int64_t>{2, 5});
}

TEST_CASE("Roth surface degree by slicing") {
  Field f = prime();
  Rng rng(13);
  auto r = roth(f, 2, 5, rng);
  CHECK(r.ambient_dim() == 5);
  CHECK(degree_by_slicing(r, rng) == 7);
  auto r4 = roth(f, 1, 4, rng);
  CHECK(degree_by_slicing(r4, rng) == 3);
}

TEST_CASE("multiplicity of hypersurfaces") {
  Field f = prime();
  auto amb = ambient_ring(f, 2);
  Ideal nodal(amb, {parse_poly("x1^2*x0 - x2^2*(x2 + x0)", amb)});
  auto s = [&](std::int64_t v) { return f.from_int(v); };
  CHECK(multiplicity_at(nodal, {s(1), s(0), s(0)}, {}) == 2);
  CHECK(multiplicity_at(nodal, {s(0), s(1), s(0)}, {}) == 1);
  CHECK(multiplicity_at(nodal, {s(1), s(1), s(1)}, {}) == 0);
  Ideal cusp(amb, {parse_poly("x1^3 - x0*x2^2", amb)});
  CHECK(multiplicity_at(cusp, {s(1), s(0), s(0)}, {}) == 2);
  CHECK(multiplicity_at(cusp, {s(0), s(0), s(1)}, {}) == 1);
  Ideal two(amb, {parse_poly("x0", amb), parse_poly("x1", amb)});
  CHECK(kind_of([&] { multiplicity_at(two, {s(0), s(0), s(1)}, {}); }) == ErrorKind::NotHypersurface);
  CHECK(kind_of([&] { multiplicity_at(nodal, {s(0), s(0), s(0)}, {}); }) == ErrorKind::PointNotOnAmbient);
  CHECK(kind_of([&] { multiplicity_at(nodal, {s(0), s(1)}, {}); }) == ErrorKind::PointNotOnAmbient);
}

TEST_CASE("parameter points are regular") {
  Field f = prime();
  Rng rng(17);
  auto s = rational_normal_scroll(f, {1, 2}, rng);
  const auto& pm = s.require_param();
  for (int i = 0; i < 5; ++i) {
    auto u = regular_parameter_point(pm, rng);
    CHECK(rank_of(f, pm.lifted_tangent_space(u), pm.psi.size()) == 3);
  }
  auto r = roth(f, 2, 5, rng);
  auto u = regular_parameter_point(r.require_param(), rng);
  for (const auto& g : r.require_param().constraints.generators()) CHECK(f.is_zero(evaluate(g, u)));
}

TEST_CASE("JSON specifications") {
  Field f = prime();
  Rng rng(23);
  auto make = [&](const char* text) { return make_variety(nlohmann::json::parse(text), f, rng); };
  CHECK(dim_deg(make(R"({"type":"rnc","d":3})")) == std::pair<int, std::int64_t>{1, 3});
  CHECK(dim_deg(make(R"({"type":"scroll","a":[1,2]})")) == std::pair<int, std::int64_t>{2, 3});
  CHECK(dim_deg(make(R"({"type":"scroll","a":[0,2]})")) == std::pair<int, std::int64_t>{2, 2});
  CHECK(dim_deg(make(R"({"type":"veronese","n":2})")) == std::pair<int, std::int64_t>{2, 4});
  CHECK(dim_deg(make(R"({"type":"segre","a":1,"b":2})")) == std::pair<int, std::int64_t>{3, 3});
  CHECK(dim_deg(make(R"({"type":"osculating","curve":{"type":"rnc","d":3},"k":1})")) ==
        std::pair<int, std::int64_t>{2, 4});
  CHECK(dim_deg(make(R"({"type":"custom","vars":["s","t"],"psi":["1","s","t","s*t"]})")) ==
        std::pair<int, std::int64_t>{2, 2});
  CHECK(dim_deg(make(R"({"type":"linear","rows":[[1,0,0,0],[0,1,"1/2",0]]})")) == std::pair<int, std::int64_t>{1, 1});
  CHECK(make(R"({"type":"verra","d":5})").ambient_dim() == 5);
  CHECK(make(R"({"type":"verra","e":2})").name() == "Verra(5)");
  // Quadric cone over a conic, and the cone over the tangent surface of the
  // twisted cubic with a line as vertex.
  CHECK(dim_deg(make(R"({"type":"cone","vertex":{"type":"linear","dim":0},"base":{"type":"rnc","d":2}})")) ==
        std::pair<int, std::int64_t>{2, 2});
  auto c4 = make(R"({"type":"cone","vertex":{"type":"linear","dim":1},
                     "base":{"type":"osculating","curve":{"type":"rnc","d":3},"k":1}})");
  CHECK(dim_deg(c4) == std::pair<int, std::int64_t>{4, 4});
  CHECK(dim_deg(make(R"({"type":"project","of":{"type":"rnc","d":3},"center":"point_on_variety"})")) ==
        std::pair<int, std::int64_t>{1, 2});
  CHECK(dim_deg(make(R"({"type":"project","of":{"type":"rnc","d":4},"center":"random_point"})")) ==
        std::pair<int, std::int64_t>{1, 4});
  // Verra quintic projected from a point of the cone over the twisted cubic
  // with vertex the line: a scroll of degree 5 in P^4.
  auto vp = make(R"({"type":"project","of":{"type":"verra","d":5},"center":[[1,2,4,8,3,5]]})");
  CHECK(vp.ambient_dim() == 4);
  CHECK(degree_by_slicing(vp, rng) == 5);
}

TEST_CASE("malformed JSON specifications") {
  Field f = prime();
  Rng rng(1);
  auto kind = [&](const char* text) {
    return kind_of([&] { make_variety(nlohmann::json::parse(text), f, rng); });
  };
  CHECK(kind(R"({"type":"nope"})") == ErrorKind::InvalidSpec);
  CHECK(kind(R"({"type":"rnc"})") == ErrorKind::InvalidSpec);
  CHECK(kind(R"({"type":"rnc","d":-1})") == ErrorKind::InvalidSpec);
  CHECK(kind(R"({"type":"scroll","a":[1,-2]})") == ErrorKind::InvalidSpec);
  CHECK(kind(R"({"type":"roth","b":0,"N":5})") == ErrorKind::InvalidSpec);
  CHECK(kind(R"({"type":"custom","vars":["t"],"psi":"1"})") == ErrorKind::InvalidSpec);
  CHECK(kind(R"({"type":"project","of":{"type":"rnc","d":3},"center":[[1,0,0]]})") == ErrorKind::DimensionMismatch);
  CHECK(kind(R"({"type":"project","of":{"type":"rnc","d":3},"center":[["x",0,0,0]]})") == ErrorKind::InvalidSpec);
  CHECK(kind(R"([1,2])") == ErrorKind::InvalidSpec);
}

TEST_CASE("projection degree formula") {
  // deg X = deg(pi|X) * deg(X_p) + mult_p X.
  Field f = prime();
  Rng rng(31);
  auto s = [&](std::int64_t v) { return f.from_int(v); };
  auto quadric = segre(f, 1, 1);
  const Ideal& q = implicitize(quadric);
  const std::int64_t dq = hilbert_data(quadric).degree;
  std::vector<Vector> centers{{s(1), s(0), s(0), s(0)}, {s(1), s(2), s(3), s(5)}};
  for (const auto& p : centers) {
    auto img = project(quadric, LinearSpace(f, {p}, 3), rng);
    const std::int64_t pdeg = param_degree(img, rng);
    CHECK(dq == pdeg * hilbert_data(img).degree + multiplicity_at(q, p));
  }
  // Nodal plane cubic x1^2 x0 = x2^2 (x2 + x0), node at (1:0:0).
  auto nodal = custom_variety(f, {"t"}, {"1", "t^3 - t", "t^2 - 1"}, {}, std::nullopt);
  const Ideal& cubic = implicitize(nodal);
  for (const auto& p : std::vector<Vector>{{s(1), s(0), s(0)}, {s(1), s(6), s(3)}}) {
    auto line = project(nodal, LinearSpace(f, {p}, 2), rng);
    CHECK(3 == param_degree(line, rng) * hilbert_data(line).degree + multiplicity_at(cubic, p));
  }
  CHECK(multiplicity_at(cubic, {s(1), s(0), s(0)}) == 2);
  auto rnc4 = rational_normal_curve(f, 4);
  auto img = project(rnc4, LinearSpace(f, {rng.vector(f, 5)}, 4), rng);
  CHECK(4 == param_degree(img, rng) * hilbert_data(img).degree + 0);
}
