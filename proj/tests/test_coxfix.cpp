#include <doctest.h>

#include <set>

#include "rootfold/catalog.hpp"
#include "rootfold/coxfix.hpp"

using namespace rootfold;

TEST_CASE("complex sizes: A2, A1, A1+A1") {
  RootDatum a2 = make_named("A2");
  CoxeterComplex c = build_complex(a2, bourbaki_base(a2));
  CHECK(c.chamber_count() == 6);
  std::size_t vertices = 0;
  for (const auto& s : c.simplices)
    if (s.type != 0) ++vertices;
  CHECK(vertices == 6);  // two vertex types, three cosets each

  RootDatum a1 = make_named("A1");
  CoxeterComplex c1 = build_complex(a1, bourbaki_base(a1));
  CHECK(c1.chamber_count() == 2);
  CHECK(c1.simplices.size() == 2);  // the 0-sphere

  RootDatum aa = make_named("A1+A1");
  CoxeterComplex caa = build_complex(aa, bourbaki_base(aa));
  CHECK(caa.chamber_count() == 4);
  std::size_t vv = 0;
  for (const auto& s : caa.simplices)
    if (s.type != 0) ++vv;
  CHECK(vv == 4);
}

TEST_CASE("face relation sanity on A2") {
  RootDatum a2 = make_named("A2");
  CoxeterComplex c = build_complex(a2, bourbaki_base(a2));
  // every chamber has exactly one face of each vertex type
  for (const auto& s : c.simplices) {
    if (s.type != 0) continue;
    int faces = 0;
    for (const auto& f : c.simplices)
      if (f.type != 0 && c.is_face(f, s)) ++faces;
    CHECK(faces == 2);
  }
  // every vertex is a face of exactly |W_J| chambers
  for (const auto& f : c.simplices) {
    if (f.type == 0) continue;
    int chambers = 0;
    for (const auto& s : c.simplices)
      if (s.type == 0 && c.is_face(f, s)) ++chambers;
    CHECK(chambers == 2);
  }
}

TEST_CASE("fixed subcomplex of the A2 swap has 2 simplices") {
  RootDatum a2 = make_named("A2");
  CoxeterComplex c = build_complex(a2, bourbaki_base(a2));
  ActionGroup g = close_group(a2, named_action(a2, "swap"));
  ComplexAction a = complex_action(c, g);
  auto fixed = fixed_subcomplex(c, a);
  CHECK(fixed.size() == 2);

  ActionGroup triv = close_group(a2, {});
  ComplexAction at = complex_action(c, triv);
  CHECK(fixed_subcomplex(c, at).size() == c.simplices.size());
}

TEST_CASE("fixed subcomplex of the A1+A1 factor swap") {
  RootDatum aa = make_named("A1+A1");
  CoxeterComplex c = build_complex(aa, bourbaki_base(aa));
  ActionGroup g = close_group(aa, named_action(aa, "copyswap"));
  ComplexAction a = complex_action(c, g);
  CHECK(fixed_subcomplex(c, a).size() == 2);
}

TEST_CASE("a non-quasisemisimple action fixes no chamber") {
  RootDatum a1 = make_named("A1");
  CoxeterComplex c = build_complex(a1, bourbaki_base(a1));
  ActionGroup g = close_group(a1, named_action(a1, "minus1"));
  ComplexAction a = complex_action(c, g);
  for (const auto& s : fixed_subcomplex(c, a)) CHECK(s.type != 0);
}

TEST_CASE("comparison with the folded complex: A2 swap, p = 3") {
  RootDatum a2 = make_named("A2");
  ActionGroup g = close_group(a2, named_action(a2, "swap"));
  PositiveSystem pos = positive_system_of_simple(a2, bourbaki_base(a2));
  TwoStageResult t = two_stage_geometric(a2, g, pos);
  CoxeterComplex c = build_complex(a2, bourbaki_base(a2));
  ComplexAction a = complex_action(c, g);
  CoxeterCompareReport rep = compare_with_folded(c, a, t, 3);
  CHECK(rep.ok);
  CHECK(rep.fixed_simplices == 2);
  CHECK(rep.folded_simplices == 2);  // A1 complex: the 0-sphere
  CHECK(rep.fixed_chambers == rep.folded_weyl_order);
}

TEST_CASE("comparison with the folded complex: D4 triality, |W^tau| = 12 = |W(G2)|") {
  RootDatum d4 = make_named("D4");
  ActionGroup g = close_group(d4, named_action(d4, "triality"));
  PositiveSystem pos = positive_system_of_simple(d4, bourbaki_base(d4));
  TwoStageResult t = two_stage_geometric(d4, g, pos);
  CoxeterComplex c = build_complex(d4, bourbaki_base(d4));
  ComplexAction a = complex_action(c, g);
  CoxeterCompareReport rep = compare_with_folded(c, a, t, 1);
  CHECK(rep.ok);
  CHECK(rep.fixed_chambers == 12);
  CHECK(rep.folded_weyl_order == 12);
}

TEST_CASE("comparison across catalog entries at small scale") {
  for (const CatalogEntry& e : standard_catalog()) {
    if (weyl_group(e.datum).order() > 400) continue;
    SimpleSystem delta = simple_system(e.datum, e.stable);
    CoxeterComplex c = build_complex(e.datum, delta);
    ComplexAction a = complex_action(c, e.group);
    TwoStageResult t = two_stage_geometric(e.datum, e.group, e.stable);
    for (int p : {1, 2, 3}) {
      CoxeterCompareReport rep = compare_with_folded(c, a, t, p);
      CHECK(rep.ok);
      CHECK(rep.fixed_chambers == rep.folded_weyl_order);
    }
  }
}

TEST_CASE("E6 flip: the fixed subcomplex has the size of the full F4 complex") {
  RootDatum e6 = make_named("E6");
  CoxeterComplex c = build_complex(e6, bourbaki_base(e6));
  CHECK(c.chamber_count() == 51840);
  ActionGroup g = close_group(e6, named_action(e6, "flip"));
  ComplexAction a = complex_action(c, g);
  auto fixed = fixed_subcomplex(c, a);
  std::size_t fixed_chambers = 0;
  for (const auto& s : fixed)
    if (s.type == 0) ++fixed_chambers;
  CHECK(fixed_chambers == 1152);  // |W(F4)|
  RootDatum f4 = make_named("F4");
  CoxeterComplex cf = build_complex(f4, bourbaki_base(f4));
  CHECK(fixed.size() == cf.simplices.size());
  CHECK(cf.simplices.size() == 5088);
}
