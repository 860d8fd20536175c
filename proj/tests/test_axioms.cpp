#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "pcmkit/axioms.hpp"
#include "pcmkit/builtin.hpp"
#include "pcmkit/error.hpp"
#include "pcmkit/generator.hpp"
#include "pcmkit/indices.hpp"

using namespace pcmkit;

namespace {

Sampler saaty3(std::uint64_t seed) {
  GeneratorSpec spec;
  spec.n = 3;
  spec.seed = seed;
  return [spec](std::uint64_t id) { return generate_one(spec, id); };
}

AxiomOptions opts(Axiom2Bound bound, std::size_t samples = 300) {
  AxiomOptions o;
  o.bound = bound;
  o.samples = samples;
  return o;
}

double log_ratio_3(const Pcm& m) { return std::log(m(0, 2) / (m(0, 1) * m(1, 2))); }

}  // namespace

TEST_CASE("log grid") {
  const auto xs = log_grid({0.1, 40.0, 401});
  REQUIRE(xs.size() == 401);
  CHECK(xs.front() == 0.1);
  CHECK(xs.back() == 40.0);
  for (std::size_t t = 1; t < xs.size(); ++t) CHECK(xs[t] > xs[t - 1]);
  CHECK(xs[200] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(log_grid({2.0, 2.0, 5}).size() == 1);
  CHECK_THROWS_AS(log_grid({-1.0, 2.0, 5}), Error);
}

TEST_CASE("unimodality") {
  const double down_up[] = {5, 3, 1, 1, 2, 8};
  auto u = analyze_unimodal(down_up);
  CHECK(u.unimodal);
  CHECK(u.argmin == 2);
  const double two_dips[] = {5, 1, 3, 0.5, 4};
  CHECK_FALSE(analyze_unimodal(two_dips).unimodal);
  const double flat[] = {1, 1, 1};
  CHECK(analyze_unimodal(flat).unimodal);
  CHECK_FALSE(analyze_unimodal(std::span<const double>{}).unimodal);
}

TEST_CASE("CI satisfies the axioms with the relaxed bound but not the strict one") {
  const auto ci_f = index_function(IndexKind::ci);
  const auto relaxed = check_axioms(ci_f, saaty3(11), opts(Axiom2Bound::relaxed));
  CHECK(relaxed.all_hold());
  REQUIRE(relaxed.axiom3_quasiconvex_along_entries.has_value());
  CHECK(*relaxed.axiom3_quasiconvex_along_entries);
  CHECK(relaxed.witnesses.empty());

  const auto strict = check_axioms(ci_f, saaty3(11), opts(Axiom2Bound::strict_unit));
  CHECK(strict.axiom1_holds);
  CHECK_FALSE(strict.axiom2_holds);
  REQUIRE_FALSE(strict.witnesses.empty());
  CHECK(strict.witnesses.front().axiom == 2);
  CHECK(strict.witnesses.front().value >= 1.0);
  CHECK(strict.witnesses.size() <= 8);
}

TEST_CASE("CI reaches values above one on the Saaty grid") {
  // Exhaustive over the 17^3 scale triples, lambda from the cubic.
  double worst = 0.0;
  for (std::size_t a = 0; a < kSaatyScaleSize; ++a)
    for (std::size_t b = 0; b < kSaatyScaleSize; ++b)
      for (std::size_t c = 0; c < kSaatyScaleSize; ++c) {
        const UpperEntry u[] = {{{0, 1}, saaty_value(a)}, {{0, 2}, saaty_value(c)},
                                {{1, 2}, saaty_value(b)}};
        const Pcm m = make_pcm(u);
        if (is_consistent(m)) continue;
        const double lambda = oracle::lambda_max_3x3_bisection(m, 3.0 + 1e-12, 12.0);
        worst = std::max(worst, (lambda - 3.0) / 2.0);
      }
  CHECK(worst > 1.0);
  // a12 = a23 = 9, a13 = 1/9: c = 9, lambda = 1 + 9 + 1/9.
  CHECK(worst == doctest::Approx((9.0 + 1.0 / 9.0 - 2.0) / 2.0).epsilon(1e-9));
}

TEST_CASE("K satisfies the axioms with the strict bound") {
  const auto rep = check_axioms(index_function(IndexKind::k), saaty3(12),
                                opts(Axiom2Bound::strict_unit));
  CHECK(rep.all_hold());
  CHECK(rep.samples == 300);
}

TEST_CASE("violations are detected with witnesses") {
  SUBCASE("nonzero on consistent matrices") {
    const IndexFunction shifted = [](const Pcm& m) { return 0.5 + k_index(m).value / 4; };
    const auto rep = check_axioms(shifted, saaty3(1), opts(Axiom2Bound::strict_unit, 50));
    CHECK_FALSE(rep.axiom1_holds);
    CHECK(rep.axiom2_holds);
    REQUIRE_FALSE(rep.witnesses.empty());
    CHECK(rep.witnesses.front().axiom == 1);
    CHECK(is_consistent(rep.witnesses.front().matrix));
  }
  SUBCASE("several local minima along a13") {
    const IndexFunction wavy = [](const Pcm& m) {
      const double s = std::sin(3.0 * log_ratio_3(m));
      return s * s;
    };
    const auto rep = check_axioms(wavy, saaty3(2), opts(Axiom2Bound::relaxed, 50));
    CHECK(rep.axiom1_holds);
    REQUIRE(rep.axiom3_quasiconvex_along_entries.has_value());
    CHECK_FALSE(*rep.axiom3_quasiconvex_along_entries);
    CHECK_FALSE(rep.all_hold());
  }
  SUBCASE("minimum away from the consistent value") {
    const IndexFunction offset = [](const Pcm& m) {
      const double d = log_ratio_3(m) - 1.0;
      return d * d;
    };
    const auto rep = check_axioms(offset, saaty3(3), opts(Axiom2Bound::relaxed, 50));
    CHECK_FALSE(*rep.axiom3_quasiconvex_along_entries);
  }
  SUBCASE("no scan for larger matrices") {
    GeneratorSpec spec;
    spec.n = 5;
    const auto rep = check_axioms(index_function(IndexKind::k),
                                  [spec](std::uint64_t id) { return generate_one(spec, id); },
                                  opts(Axiom2Bound::strict_unit, 50));
    CHECK_FALSE(rep.axiom3_quasiconvex_along_entries.has_value());
    CHECK(rep.all_hold());
  }
}

TEST_CASE("serial and parallel axiom checks agree") {
  auto o = opts(Axiom2Bound::strict_unit, 200);
  const auto ci_f = index_function(IndexKind::ci);
  o.exec = Exec::serial;
  const auto a = check_axioms(ci_f, saaty3(9), o);
  o.exec = Exec::parallel;
  const auto b = check_axioms(ci_f, saaty3(9), o);
  CHECK(a.axiom2_holds == b.axiom2_holds);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t t = 0; t < a.witnesses.size(); ++t) {
    CHECK(a.witnesses[t].sample == b.witnesses[t].sample);
    CHECK(a.witnesses[t].value == b.witnesses[t].value);
  }
}
