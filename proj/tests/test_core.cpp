#include "doctest.h"

#include <cmath>
#include <variant>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pcmkit/builtin.hpp"
#include "pcmkit/error.hpp"
#include "pcmkit/pcm.hpp"

using namespace pcmkit;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected pcmkit::Error");
  return Errc::parse_error;
}

}  // namespace

TEST_CASE("make_pcm fills the lower triangle with reciprocals") {
  const UpperEntry two[] = {{{0, 1}, 2.0}};
  const Pcm m = make_pcm(two);
  CHECK(m.order() == 2);
  CHECK(m(0, 0) == 1.0);
  CHECK(m(0, 1) == 2.0);
  CHECK(m(1, 0) == 0.5);
  CHECK(is_consistent(m));

  const UpperEntry three[] = {{{0, 1}, 1.0}, {{0, 2}, 2.0}, {{1, 2}, 1.0}};
  const Pcm a = make_pcm(three);
  CHECK(a(2, 0) == 0.5);
  CHECK(a(2, 1) == 1.0);
  CHECK_FALSE(is_consistent(a));
}

TEST_CASE("construction errors") {
  CHECK(code_of([] {
          const UpperEntry u[] = {{{0, 1}, -1.0}};
          make_pcm(u);
        }) == Errc::non_positive_entry);
  CHECK(code_of([] {
          const UpperEntry u[] = {{{0, 1}, 0.0}};
          make_pcm(u);
        }) == Errc::non_positive_entry);
  CHECK(code_of([] {
          const UpperEntry u[] = {{{0, 1}, std::nan("")}};
          make_pcm(u);
        }) == Errc::non_positive_entry);
  CHECK(code_of([] {
          const UpperEntry u[] = {{{0, 1}, 2.0}, {{0, 2}, 2.0}};
          make_pcm(u);
        }) == Errc::incomplete_upper_triangle);
  CHECK(code_of([] {
          const UpperEntry u[] = {{{0, 1}, 2.0}, {{0, 1}, 3.0}};
          make_pcm(u);
        }) == Errc::incomplete_upper_triangle);
  CHECK(code_of([] {
          const UpperEntry u[] = {{{1, 0}, 2.0}};
          make_pcm(u);
        }) == Errc::incomplete_upper_triangle);
  CHECK(code_of([] { builtin::a_ks(5, 1.0).with_entry(0, 4, -2.0); }) ==
        Errc::non_positive_entry);
}

TEST_CASE("error messages use 1-based positions") {
  try {
    const UpperEntry u[] = {{{0, 1}, 2.0}, {{0, 2}, 2.0}};
    make_pcm(u);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(2,3)") != std::string::npos);
  }
}

TEST_CASE("consistency of small examples") {
  const UpperEntry u[] = {{{0, 1}, 2.0}, {{0, 2}, 4.0}, {{1, 2}, 2.0}};
  CHECK(is_consistent(make_pcm(u)));
  CHECK(is_consistent(builtin::frame3(1.5)));
  CHECK(max_triad_phi(builtin::frame3(1.5)) == 0.0);
  CHECK_FALSE(is_consistent(builtin::a_ks(3, 2.0)));
  CHECK(is_consistent(Pcm::uniform(7)));
}

TEST_CASE("local inconsistency of a triad") {
  CHECK(local_inconsistency(2, 3, 7) == doctest::Approx(1.0 / 7.0).epsilon(1e-15));
  CHECK(local_inconsistency(2, 3, 6) == 0.0);
  // Both branches of the min: path larger or smaller than the direct entry.
  CHECK(local_inconsistency(1, 1, 2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(local_inconsistency(1, 1, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  for (double r : {1e-6, 0.01, 0.5, 0.99, 1.0, 1.01, 3.0, 1e6}) {
    const double phi = local_inconsistency(1.0, 1.0, r);
    CHECK(phi >= 0.0);
    CHECK(phi < 1.0);
  }
}

TEST_CASE("triads enumerate i<j<k lexicographically") {
  const auto t = triads(builtin::perturbation5());
  REQUIRE(t.size() == 10);
  CHECK(t.front().i == 0);
  CHECK(t.front().j == 1);
  CHECK(t.front().k == 2);
  CHECK(t.back().i == 2);
  CHECK(t.back().j == 3);
  CHECK(t.back().k == 4);
  for (std::size_t s = 1; s < t.size(); ++s) {
    const auto a = std::tuple(t[s - 1].i, t[s - 1].j, t[s - 1].k);
    const auto b = std::tuple(t[s].i, t[s].j, t[s].k);
    CHECK(a < b);
  }
  CHECK(triads(Pcm::uniform(3)).size() == 1);
  CHECK(code_of([] { triads(Pcm::uniform(2)); }) == Errc::order_too_small);
  CHECK(code_of([] { inconsistent_triad_ratio(Pcm::uniform(2)); }) == Errc::order_too_small);
}

TEST_CASE("each upper position lies in exactly n-2 triads") {
  for (std::size_t n = 3; n <= 10; ++n) {
    CHECK(triad_count(n) == n * (n - 1) * (n - 2) / 6);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        CHECK(oracle::triads_containing(n, p, q) == n - 2);
        // Same count via the library's triad list.
        std::size_t c = 0;
        for (const auto& t : triads(Pcm::uniform(n)))
          c += (t.i == p && t.j == q) || (t.j == p && t.k == q) || (t.i == p && t.k == q);
        CHECK(c == n - 2);
      }
  }
}

TEST_CASE("inconsistent triad ratio") {
  CHECK(inconsistent_triad_ratio(builtin::a1()) == doctest::Approx(0.3));
  CHECK(inconsistent_triad_ratio(builtin::a2()) == 1.0);
  CHECK(inconsistent_triad_ratio(builtin::frame3(1.5)) == 0.0);
  for (double x : {2.0, 0.5, 3.0})
    for (std::size_t n = 3; n <= 20; ++n) {
      const double law = 6.0 / static_cast<double>((n - 1) * n);
      CHECK(std::abs(inconsistent_triad_ratio(builtin::a_ks(n, x)) - law) <= 1e-12);
    }
}

TEST_CASE("builtin catalog") {
  const Pcm p = builtin::perturbation5();
  CHECK(p(0, 4) == 7.0);
  CHECK(local_inconsistency(p(0, 1), p(1, 4), p(0, 4)) == doctest::Approx(1.0 / 7.0));

  const Pcm ks = builtin::a_ks(5, 2.0);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) CHECK(ks(i, j) == (i == 0 && j == 4 ? 2.0 : 1.0));
  CHECK(builtin::a1()(0, 4) == 2.001);

  // Displayed 5x5 prefix of A4 with alpha = 2.
  const double a2_upper[5][5] = {{1, 1, 2, 1, 2},
                                 {0, 1, 1, 2, 1},
                                 {0, 0, 1, 1, 2},
                                 {0, 0, 0, 1, 1},
                                 {0, 0, 0, 0, 1}};
  const Pcm a2 = builtin::a2();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) CHECK(a2(i, j) == a2_upper[i][j]);

  const auto inc = builtin::incomplete4();
  CHECK(inc.order() == 4);
  CHECK(inc.missing() == std::vector<Position>{{0, 2}, {0, 3}});
  CHECK(inc.known().at({1, 2}) == doctest::Approx(1.0 / 3.0));
  CHECK(inc.is_connected());
}

TEST_CASE("by_name parses catalog expressions") {
  CHECK(std::get<Pcm>(builtin::by_name("A_KS(10,2)")) == builtin::a_ks(10, 2.0));
  CHECK(std::get<Pcm>(builtin::by_name("A1")) == builtin::a1());
  CHECK(std::get<Pcm>(builtin::by_name("A3(8, 2, 0.25)")) == builtin::a3(8, 2.0, 0.25));
  CHECK(std::get<Pcm>(builtin::by_name("A4(6,3)")) == builtin::a4(6, 3.0));
  CHECK(std::get<Pcm>(builtin::by_name("frame3(7)")) == builtin::frame3(7.0));
  CHECK(std::holds_alternative<IncompletePcm>(builtin::by_name("incomplete4")));
  CHECK(code_of([] { builtin::by_name("A9"); }) == Errc::unknown_name);
  CHECK(code_of([] { builtin::by_name("A_KS(2,2)"); }) == Errc::bad_parameter);
  CHECK(code_of([] { builtin::by_name("A_KS(5,-1)"); }) == Errc::bad_parameter);
  CHECK(code_of([] { builtin::by_name("frame3(0)"); }) == Errc::bad_parameter);
  CHECK_FALSE(builtin::signatures().empty());
}

TEST_CASE("transpose and permutation keep every triad's phi") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto ms = test::ensemble(GeneratorKind::saaty_uniform, n, 20, 100 + n);
    for (std::size_t t = 0; t < ms.size(); ++t) {
      const Pcm& m = ms[t];
      const auto a = triads(m), b = triads(m.transposed());
      for (std::size_t s = 0; s < a.size(); ++s) CHECK(a[s].phi == doctest::Approx(b[s].phi).epsilon(1e-13));
      const auto p = test::random_permutation(n, t);
      CHECK(max_triad_phi(m.permuted(p)) == doctest::Approx(max_triad_phi(m)).epsilon(1e-13));
      CHECK(m.transposed().transposed() == m);
    }
  }
}

TEST_CASE("exact consistency matches the ratio matrix of power-of-two weights") {
  // Powers of two keep every ratio exact, so tolerance 0 is meaningful.
  Rng rng(5);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 3 + rng.below(6);
    std::vector<double> e(n);
    for (auto& x : e) x = static_cast<double>(static_cast<int>(rng.below(9)) - 4);
    std::vector<double> grid(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) grid[i * n + j] = std::exp2(e[i] - e[j]);
    const Pcm m = Pcm::from_upper_of(n, grid);
    CHECK(is_consistent(m, 0.0));
    const Pcm bumped = m.with_entry(0, n - 1, m(0, n - 1) * 2.0);
    CHECK_FALSE(is_consistent(bumped, 0.0));
  }
}

TEST_CASE("incomplete matrices") {
  // Two blocks {1,2} and {3,4} with no comparison between them.
  std::map<Position, double> known{{{0, 1}, 2.0}, {{2, 3}, 3.0}};
  const IncompletePcm split(4, known, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK_FALSE(split.is_connected());
  std::map<Position, double> star{{{0, 1}, 2.0}, {{0, 2}, 3.0}, {{0, 3}, 4.0}};
  const IncompletePcm joined(4, star, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(joined.is_connected());

  CHECK(code_of([] { IncompletePcm(3, {{{0, 1}, 2.0}}, {{0, 2}}); }) ==
        Errc::incomplete_upper_triangle);
  CHECK(code_of([] { IncompletePcm(3, {{{0, 1}, 2.0}}, {{0, 1}, {0, 2}, {1, 2}}); }) ==
        Errc::incomplete_upper_triangle);
  CHECK(code_of([] { IncompletePcm(3, {{{0, 1}, -2.0}}, {{0, 2}, {1, 2}}); }) ==
        Errc::non_positive_entry);

  const auto inc = builtin::incomplete4();
  const double fill[] = {5.0, 6.0};
  const Pcm f = inc.fill(fill);
  CHECK(f(0, 2) == 5.0);
  CHECK(f(3, 0) == doctest::Approx(1.0 / 6.0));
  CHECK(f(0, 1) == 2.0);
}
