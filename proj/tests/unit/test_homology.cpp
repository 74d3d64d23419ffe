#include "algebras.hpp"
#include "doctest.h"
#include "stabeq/errors.hpp"
#include "stabeq/homology/homology.hpp"

using namespace stabeq;

namespace {

const Field kQ = Field::rationals();
const Field kF101 = Field::prime(101);

bool iso(const Module& x, const Module& y) { return is_isomorphic(x, y).isomorphic; }

Module on(const AlgebraPtr& a, const Module& m) {
  REQUIRE(same_algebra(*a, *m.algebra()));
  return Module(a, m.dim(), m.actions());
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("bounds print as numbers, infinity or lower bounds") {
    CHECK(Bound::exact(3).to_string() == "3");
    CHECK(Bound::infinite().to_string() == "inf");
    CHECK(Bound::at_least(5).to_string() == ">=5");
    CHECK(Bound::exact(2) == Bound::exact(2));
    CHECK_FALSE(Bound::exact(2) == Bound::at_least(2));
  }

  TEST_CASE("truncated polynomial ring: the simple is its own syzygy and transpose") {
    for (Field f : {kQ, kF101}) {
      auto a = testalg::a1(f);
      Module s = simple_module(a, 0);
      CHECK(iso(syzygy(s), s));
      CHECK(iso(cosyzygy(s), s));
      CHECK(projective_dimension(s, 16) == Bound::infinite());
      CHECK(iso(on(a, dual(transpose(s))), s));
      CHECK(iso(tau(s), s));
      CHECK(iso(tau_inverse(s), s));
      CHECK(ext1(s, s).dim == 1);
      ShortExact seq = ar_sequence(s);
      CHECK(seq.is_exact());
      CHECK_FALSE(seq.splits());
      CHECK(seq.socle_dimension == 1);
      CHECK(iso(seq.middle, Module::regular(a)));
      CHECK(is_node(s));
      CHECK_FALSE(is_projective(s));
      CHECK(is_projective(Module::regular(a)));
      CHECK(is_injective(Module::regular(a)));
    }
  }

  TEST_CASE("two-cycle algebra: almost split sequences and the node") {
    auto a = testalg::a2(kQ);
    Module s1 = simple_module(a, 0), s2 = simple_module(a, 1);
    Module p2 = projective_module(a, 1), i2 = injective_module(a, 1);
    CHECK(iso(tau(s2), s1));
    CHECK(iso(tau(s1), s2));
    CHECK(iso(tau_inverse(s1), s2));

    ShortExact e2 = ar_sequence(s2);
    CHECK(e2.is_exact());
    CHECK_FALSE(e2.splits());
    CHECK(iso(e2.left, s1));
    CHECK(iso(e2.middle, p2));
    ShortExact e1 = ar_sequence(s1);
    CHECK(e1.is_exact());
    CHECK(iso(e1.left, s2));
    CHECK(iso(e1.middle, i2));
    CHECK(e1.middle_summands.size() == 1);

    CHECK(is_node(s1));
    CHECK_FALSE(is_node(s2));
    CHECK_FALSE(is_node(projective_module(a, 0)));
  }

  TEST_CASE("projective dimensions of simples") {
    auto a = testalg::a2(kQ);
    CHECK(projective_dimension(simple_module(a, 0), 16) == Bound::exact(1));
    CHECK(projective_dimension(simple_module(a, 1), 16) == Bound::exact(2));
    CHECK(projective_dimension(projective_module(a, 1), 16) == Bound::exact(0));

    auto r = testalg::linear_a3_rad2(kQ);
    CHECK(projective_dimension(simple_module(r, 0), 16) == Bound::exact(2));
    CHECK(projective_dimension(simple_module(r, 1), 16) == Bound::exact(1));
    CHECK(projective_dimension(simple_module(r, 2), 16) == Bound::exact(0));

    auto c = testalg::sect32_c(kQ);
    for (std::size_t v = 0; v < 6; ++v) {
      Bound b = projective_dimension(simple_module(c, v), 16);
      CHECK(b.is_exact());
      CHECK(b.value <= 1);
    }
    CHECK(projective_dimension(simple_module(testalg::a1(kQ), 0), 0) == Bound::at_least(1));
  }

  TEST_CASE("minimal resolutions compose to zero") {
    auto a = testalg::a2(kQ);
    Resolution r = minimal_resolution(simple_module(a, 1), Direction::projective, 8);
    CHECK(r.terminated);
    REQUIRE(r.terms.size() == 3);
    CHECK(r.terms[0].dim() == 2);
    CHECK(r.terms[1].dim() == 3);
    CHECK(r.terms[2].dim() == 2);
    CHECK(r.differentials[0].is_surjective());
    for (std::size_t k = 1; k < r.differentials.size(); ++k) {
      CHECK(r.differentials[k].is_valid());
      CHECK((r.differentials[k - 1].map * r.differentials[k].map).is_zero());
    }
    CHECK(r.differentials.back().is_injective());

    Resolution inj = minimal_resolution(simple_module(a, 0), Direction::injective, 8);
    CHECK(inj.terminated);
    CHECK(inj.differentials[0].is_injective());
    for (std::size_t k = 1; k < inj.differentials.size(); ++k) {
      CHECK((inj.differentials[k].map * inj.differentials[k - 1].map).is_zero());
    }

    Resolution capped = minimal_resolution(simple_module(testalg::a1(kQ), 0), Direction::projective, 4);
    CHECK_FALSE(capped.terminated);
    CHECK(capped.terms.size() == 4);
  }

  TEST_CASE("first extension groups between simples count arrows") {
    for (auto a : {testalg::a2(kQ), testalg::closing_a(kQ), testalg::closing_b(kF101), testalg::sect32_b(kQ),
                   testalg::sect32_c(kQ)}) {
      const auto& counts = a->structure().arrow_counts;
      std::size_t n = a->vertex_count();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(ext1(simple_module(a, i), simple_module(a, j)).dim == counts[i][j]);
        }
      }
    }
  }

  TEST_CASE("extensions vanish against projective and injective modules") {
    auto a = testalg::closing_a(kQ);
    for (std::size_t v = 0; v < 3; ++v) {
      for (std::size_t w = 0; w < 3; ++w) {
        CHECK(ext1(projective_module(a, v), simple_module(a, w)).dim == 0);
        CHECK(ext1(simple_module(a, w), injective_module(a, v)).dim == 0);
      }
    }
  }

  TEST_CASE("syzygy is additive and strips projectives") {
    auto a = testalg::closing_a(kQ);
    Module s1 = simple_module(a, 0), s3 = simple_module(a, 2), p2 = projective_module(a, 1);
    Module sum = direct_sum(a, {s1, s3, p2}).module;
    Module both = direct_sum(a, {syzygy(s1), syzygy(s3)}).module;
    CHECK(iso(syzygy(sum), both));
    CHECK(iso(strip_projectives(sum), direct_sum(a, {s1, s3}).module));
    CHECK(strip_projectives(p2).is_zero());
    CHECK(strip_injectives(injective_module(a, 0)).is_zero());
  }

  TEST_CASE("transpose is an involution on non-projective modules") {
    for (auto a : {testalg::a2(kQ), testalg::closing_a(kQ), testalg::sect32_a(kQ), testalg::closing_b(kQ)}) {
      for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        Module s = simple_module(a, v);
        if (is_projective(s)) continue;
        Module tt = transpose(transpose(s));
        CHECK(tt.algebra() == a);
        CHECK(iso(tt, s));
        CHECK(iso(tau_inverse(tau(s)), s));
      }
    }
  }

  TEST_CASE("Nakayama functor sends projectives to injectives") {
    for (auto a : {testalg::sect32_a(kQ), testalg::closing_a(kQ), testalg::sect32_c(kF101)}) {
      for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        Module n = nakayama(projective_module(a, v));
        CHECK(n.is_valid());
        CHECK(iso(on(a, n), injective_module(a, v)));
      }
    }
  }

  TEST_CASE("on a symmetric algebra tau agrees with the second syzygy") {
    auto a = testalg::truncated_loop(kQ, 3);
    Module reg = Module::regular(a);
    for (std::size_t k = 1; k <= 2; ++k) {
      Module m = quotient_module(reg, a->structure().radical_powers[k - 1]).target;
      CHECK(iso(tau(m), syzygy(syzygy(on(a, nakayama(m))))));
    }
  }

  TEST_CASE("radical of a local endomorphism ring") {
    auto a = testalg::truncated_loop(kQ, 3);
    CHECK(radical_of_endomorphisms(Module::regular(a)).size() == 2);
    CHECK(radical_of_endomorphisms(simple_module(a, 0)).empty());
  }

  TEST_CASE("almost split sequences over the four-cycle algebra") {
    auto a = testalg::sect32_a(kF101);
    for (std::size_t v = 0; v < 4; ++v) {
      Module s = simple_module(a, v);
      if (is_projective(s)) continue;
      ShortExact seq = ar_sequence(s);
      CHECK(seq.is_exact());
      CHECK_FALSE(seq.splits());
      CHECK(seq.socle_dimension == 1);
      CHECK(iso(seq.left, tau(s)));
    }
  }

  TEST_CASE("almost split sequences need a non-projective end term") {
    auto a = testalg::a2(kQ);
    CHECK_THROWS_AS(ar_sequence(projective_module(a, 0)), InvalidArgument);
  }
}
