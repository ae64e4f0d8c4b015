#include <doctest.h>

#include <algorithm>
#include <random>

#include "hydro/criteria.hpp"
#include "hydro/error.hpp"
#include "hydro/report_json.hpp"

using namespace hydro;

namespace {
Exponent ex(double v, double band = 0.0) {
  Exponent e;
  e.value = v;
  e.band = band;
  e.defined = true;
  return e;
}

RegularityReport report(double iso, double vert, double hor, double w_sigma = -0.8) {
  RegularityReport r;
  r.alpha_iso = ex(iso);
  r.alpha_vertical = ex(vert);
  r.beta_horizontal = ex(hor);
  r.alpha_oblique = ex(iso);
  r.log_holder_growth_half = 1.0;
  r.log_holder_gamma_half = 1.0;
  r.w_decay = ex(w_sigma);
  r.w_plane_decay = ex(w_sigma);
  r.gradient_l8 = ex(iso);
  r.besov_9_4 = ex(iso);
  return r;
}

DefectSweep sweep(double slope, double band) {
  DefectSweep s;
  s.epsilons = {0.25, 0.1, 0.05, 0.025};
  s.d_l1 = {1, 1, 1, 1};
  s.fit.slope = slope;
  s.fit.band = band;
  return s;
}

const CriterionVerdict& find(const std::vector<CriterionVerdict>& v, const std::string& id) {
  for (const auto& x : v)
    if (x.id == id) return x;
  throw std::runtime_error("no verdict " + id);
}
}  // namespace

TEST_CASE("isotropic alpha = 0.6") {
  const RegularityReport r = report(0.6, 0.6, 0.6);
  const DefectSweep ok = sweep(0.19, 0.02), low = sweep(0.1, 0.02);
  const auto v = criterion_engine(r, &ok, {"P3.1"});
  REQUIRE(v.size() == 1);
  CHECK(v[0].hypothesis_holds);
  CHECK(*v[0].predicted == doctest::Approx(0.2));
  CHECK(v[0].tolerance == doctest::Approx(0.05));
  CHECK(*v[0].pass);
  CHECK_FALSE(*criterion_engine(r, &low, {"P3.1"})[0].pass);
  CHECK_FALSE(criterion_engine(r, &ok, {"P4.11"})[0].pass.has_value());
}

TEST_CASE("anisotropic split") {
  const RegularityReport r = report(0.45, 0.45, 1.2);
  const DefectSweep s = sweep(0.3, 0.1);
  const auto v = criterion_engine(r, &s, {"P3.1", "P3.6"});
  CHECK_FALSE(find(v, "P3.1").hypothesis_holds);
  CHECK_FALSE(find(v, "P3.1").pass.has_value());
  const auto& p36 = find(v, "P3.6");
  CHECK(p36.hypothesis_holds);
  CHECK(p36.proof_derived);
  CHECK(*p36.predicted == doctest::Approx(0.1));
  CHECK(*p36.pass);
}

TEST_CASE("smooth fields satisfy every hypothesis") {
  RegularityReport r;
  r.log_holder_growth_half = 1.0;
  r.w_decay = Exponent{};
  r.w_plane_decay = Exponent{};
  r.gradient_l8 = Exponent{};
  r.besov_9_4 = Exponent{};
  const DefectSweep s = sweep(2.0, 0.05);
  for (const auto& v : criterion_engine(r, &s)) {
    CHECK(v.hypothesis_holds);
    if (v.predicted) {
      CHECK(*v.predicted > 0.0);
      CHECK(*v.pass);
    }
  }
  DefectSweep zero = sweep(0.0, 0.0);
  zero.degenerate = true;
  for (const auto& v : criterion_engine(r, &zero))
    if (v.predicted) CHECK(*v.pass);
}

TEST_CASE("pessimistic edge and tolerance") {
  RegularityReport r = report(0.52, 0.52, 0.52);
  r.alpha_iso.band = 0.05;
  CHECK_FALSE(criterion_engine(r, nullptr, {"P3.1"})[0].hypothesis_holds);
  const DefectSweep wide = sweep(0.0, 0.3);
  r.alpha_iso.band = 0.0;
  const auto v = criterion_engine(r, &wide, {"P3.1"});
  CHECK(v[0].tolerance == doctest::Approx(0.3));
  CHECK(*v[0].pass);
}

TEST_CASE("errors") {
  RegularityReport r = report(0.6, 0.6, 0.6);
  CHECK_THROWS_AS(criterion_engine(r, nullptr, {"P9.9"}), Error);
  r.w_decay.reset();
  try {
    criterion_engine(r, nullptr, {"P3.5"});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompleteInput);
  }
  CHECK_NOTHROW(criterion_engine(r, nullptr, {"P3.1"}));
}

TEST_CASE("monotonicity: raising exponents never breaks a hypothesis") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.6), bump(0.0, 0.4);
  for (int trial = 0; trial < 500; ++trial) {
    RegularityReport a = report(u(rng), u(rng), u(rng), -u(rng));
    a.gradient_l8 = ex(u(rng));
    a.besov_9_4 = ex(u(rng));
    RegularityReport b = a;
    b.alpha_iso.value += bump(rng);
    b.alpha_vertical.value += bump(rng);
    b.beta_horizontal.value += bump(rng);
    b.w_decay->value -= bump(rng);
    b.w_plane_decay->value -= bump(rng);
    b.gradient_l8->value += bump(rng);
    b.besov_9_4->value += bump(rng);
    const auto va = criterion_engine(a, nullptr), vb = criterion_engine(b, nullptr);
    for (std::size_t n = 0; n < va.size(); ++n)
      if (va[n].hypothesis_holds) CHECK(vb[n].hypothesis_holds);
  }
}

TEST_CASE("verdict table order and CSV") {
  const auto v = criterion_engine(report(0.8, 0.8, 0.8), nullptr);
  REQUIRE(v.size() == criterion_ids().size());
  for (std::size_t n = 0; n < v.size(); ++n) CHECK(v[n].id == criterion_ids()[n]);
  const std::string csv = verdicts_csv(v);
  CHECK(csv.rfind("id,hypothesis_holds,predicted,measured,tolerance,pass,spatial_only,proof_derived,inputs,note\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(v.size()) + 1);
}
