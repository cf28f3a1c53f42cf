#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "paracoh/catalog.hpp"
#include "paracoh/cohomology.hpp"

using namespace paracoh;

namespace {

ParaStructure<Rational> structure_of(const char* name) {
  const CatalogEntry& e = catalog_get(name);
  LieAlgebra g = e.algebra();
  return validate_para(e.k_matrix(e.default_structure()), g);
}

}  // namespace

TEST_CASE("betti numbers") {
  CHECK(betti(parse_algebra("(0,0,0,0)"), 2) == 6);
  CHECK(betti(parse_algebra("(0^4,12,13)"), 2) == 9);
  CHECK(betti(parse_algebra("(0,0,0,12,13,24)"), 2) == 6);
  // degree edges
  LieAlgebra g = parse_algebra("(0,0,12,13)");
  CHECK(betti(g, 0) == 1);
  CHECK(betti(g, 4) == 1);
  CHECK_THROWS_AS(betti(g, 5), Error);
}

TEST_CASE("subgroup dimensions: the six-dimensional pure-not-full example") {
  LieAlgebra g = catalog_get("ex2.5").algebra();
  ParaStructure<Rational> ps = structure_of("ex2.5");
  SubgroupReport<Rational> rep = subgroup_dims(g, ps, 2);
  CHECK(rep.betti == 9);
  CHECK(rep.dim_plus == 4);
  CHECK(rep.dim_minus == 4);
  CHECK(rep.intersection_dim == 0);
  CHECK(rep.pure);
  CHECK(!rep.full);
  CHECK(!rep.pure_and_full);

  auto span_of = [&](const std::vector<Form<Rational>>& forms) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : forms) rows.push_back(f.coords(2));
    return Subspace<Rational>::span(static_cast<int>(binomial(6, 2)), rows);
  };
  CHECK(span_of(rep.plus_reps) ==
        span_of({parse_form(6, "e14"), parse_form(6, "e15"), parse_form(6, "e23"), parse_form(6, "e36")}));
  CHECK(span_of(rep.minus_reps) ==
        span_of({parse_form(6, "e16"), parse_form(6, "e24"), parse_form(6, "e25"), parse_form(6, "e34")}));
}

TEST_CASE("subgroup dimensions: solvable endpoint and almost structures") {
  // K0 on the solvable algebra: dims (0, 2), pure and full
  DeformationFamily fam = catalog_get("ex2.17").family("K_t");
  ParaStructure<Rational> k0 = validate_para(evaluate_family(fam, Rational(0)), fam.g);
  SubgroupReport<Rational> rep0 = subgroup_dims(fam.g, k0, 2);
  CHECK(rep0.dim_plus == 0);
  CHECK(rep0.dim_minus == 2);
  CHECK(rep0.pure_and_full);

  // the almost structure: [e14] lies in both subgroups
  const CatalogEntry& e28 = catalog_get("ex2.8");
  LieAlgebra g = e28.algebra();
  ParaStructure<Rational> ps = validate_para(e28.k_matrix("K"), g);
  SubgroupReport<Rational> rep = subgroup_dims(g, ps, 2);
  CHECK(rep.intersection_dim >= 1);
  CHECK(!rep.pure);
  CHECK(!rep.full);
  // certificate: e14 is closed, plus-type, and equals e1^(e4+e2) - d e3 with
  // e1^(e4+e2) of minus type
  Form<Rational> e14 = parse_form(4, "e14");
  CHECK(cdiff(g, e14).is_zero());
  CHECK(k_action_on_form(ps, e14) == e14);
  Form<Rational> minus_rep = parse_form(4, "e14 + e12");
  CHECK(k_action_on_form(ps, minus_rep) == -minus_rep);
  CHECK(class_equal(g, e14, minus_rep));
}

TEST_CASE("equal classes with different-type representatives (non-pure fixture)") {
  LieAlgebra g = catalog_get("ex2.6").algebra();
  ParaStructure<Rational> ps = structure_of("ex2.6");
  SubgroupReport<Rational> rep = subgroup_dims(g, ps, 2);
  CHECK(!rep.pure);
  CHECK(rep.intersection_dim >= 1);
  // [e13] = [e13 - d e5] = -[e14]
  Form<Rational> e13 = parse_form(6, "e13");
  Form<Rational> e14 = parse_form(6, "e14");
  CHECK(class_equal(g, e13, -e14));
  CHECK(k_action_on_form(ps, e13) == e13);
  CHECK(k_action_on_form(ps, e14) == -e14);
  CHECK(!class_equal(g, e13, Form<Rational>(6)));  // the class is nonzero
  // stage-4 fullness fails (implied by non-purity at stage 2 through duality)
  CHECK(!subgroup_dims(g, ps, 4).full);
}

TEST_CASE("pq subgroups refine the parity subgroups for integrable structures") {
  LieAlgebra g = catalog_get("ex2.5").algebra();
  ParaStructure<Rational> ps = structure_of("ex2.5");
  CHECK(pq_subgroup(g, ps, 0, 0).dim == 1);

  for (int ell = 0; ell <= 4; ++ell) {
    SubgroupReport<Rational> rep = subgroup_dims(g, ps, ell);
    int even_sum = 0, odd_sum = 0;
    for (int p = 0; p <= ell; ++p) {
      int q = ell - p;
      int d = pq_subgroup(g, ps, p, q).dim;
      (q % 2 == 0 ? even_sum : odd_sum) += d;
    }
    CHECK(even_sum == rep.dim_plus);
    CHECK(odd_sum == rep.dim_minus);
  }

  // torus with the standard split: H^{(1,1)} has dimension 4
  LieAlgebra torus = parse_algebra("(0,0,0,0)");
  ParaStructure<Rational> pt = validate_para(parse_k("(+,+,-,-)", 4), torus);
  CHECK(pq_subgroup(torus, pt, 1, 1).dim == 4);

  // refuses on almost structures
  const CatalogEntry& e28 = catalog_get("ex2.8");
  LieAlgebra g4 = e28.algebra();
  ParaStructure<Rational> almost = validate_para(e28.k_matrix("K"), g4);
  CHECK_THROWS_AS(pq_subgroup(g4, almost, 1, 1), NotIntegrable);
}

TEST_CASE("homology subgroups") {
  // torus: boundary vanishes, homology mirrors cohomology
  LieAlgebra torus = parse_algebra("(0,0,0,0)");
  ParaStructure<Rational> pt = validate_para(parse_k("(+,+,-,-)", 4), torus);
  for (int ell = 0; ell <= 4; ++ell) {
    SubgroupReport<Rational> hom = homology_subgroups(torus, pt, ell);
    SubgroupReport<Rational> coh = subgroup_dims(torus, pt, ell);
    CHECK(hom.betti == coh.betti);
    CHECK(hom.dim_plus == coh.dim_plus);
    CHECK(hom.dim_minus == coh.dim_minus);
    CHECK(hom.pure_and_full);
  }

  // the pure-not-full fixture is NOT pure at stage 2 on the homology side:
  // B_2 = span{e26 - e35, e45, e46, e56} by transposing d on degree two, so
  // [e26] = [e35] is a nonzero class with representatives of both types and
  // the dimensions come out (5, 5) against b_2 = 9 (hand-checked oracle)
  LieAlgebra g5 = catalog_get("ex2.5").algebra();
  ParaStructure<Rational> ps5 = structure_of("ex2.5");
  SubgroupReport<Rational> hom5 = homology_subgroups(g5, ps5, 2);
  CHECK(hom5.side == Side::homology);
  CHECK(hom5.betti == 9);
  CHECK(hom5.dim_plus == 5);
  CHECK(hom5.dim_minus == 5);
  CHECK(!hom5.pure);
  CHECK(hom5.intersection_dim == 1);
  {
    // certificate: e26 and e35 are del-closed, of opposite K-type, and their
    // difference bounds (it is the image under del of a 3-multivector)
    Form<Rational> e26 = Form<Rational>::monomial(6, {2, 6});
    Form<Rational> e35 = Form<Rational>::monomial(6, {3, 5});
    CHECK(boundary(g5, e26).is_zero());
    CHECK(boundary(g5, e35).is_zero());
    ComplexSlice<Rational> h2 = chain_slice<Rational>(g5, 2);
    CHECK(h2.b.contains((e26 - e35).coords(2)));
    CHECK(!h2.b.contains(e26.coords(2)));
    CHECK(multivector_plus_subspace(ps5, 2).contains(e26.coords(2)));
    CHECK(multivector_minus_subspace(ps5, 2).contains(e35.coords(2)));
  }
  // diagram consistency: non-pure homology at stage 2 forces non-C-full at
  // stage 2 in cohomology (the fixture is indeed not full there)
  CHECK(!subgroup_dims(g5, ps5, 2).full);

  // non-pure at stage 2 in cohomology forces non-full at stage 2 in homology
  // (contrapositive of the horizontal arrow) for the ex2.6 fixture
  LieAlgebra g6 = catalog_get("ex2.6").algebra();
  ParaStructure<Rational> ps6 = structure_of("ex2.6");
  SubgroupReport<Rational> coh4 = subgroup_dims(g6, ps6, 4);
  SubgroupReport<Rational> hom4 = homology_subgroups(g6, ps6, 4);
  CHECK(!coh4.full);
  // homology Betti numbers agree with cohomology (perfect pairing)
  for (int ell = 0; ell <= 6; ++ell) {
    CHECK(chain_slice<Rational>(g6, ell).betti == cochain_slice<Rational>(g6, ell).betti);
  }
  (void)hom4;
}

TEST_CASE("cup products") {
  LieAlgebra torus = parse_algebra("(0,0,0,0)");
  Form<Rational> c = cup(torus, parse_form(4, "e12"), parse_form(4, "e34"));
  CHECK(c == parse_form(4, "e1234"));
  CHECK(!class_equal(torus, c, Form<Rational>(4)));

  // [e34]^2 = 0 on the solvable fixture
  LieAlgebra gs = parse_algebra("(0,0,23,-24)");
  CHECK(cup(gs, parse_form(4, "e34"), parse_form(4, "e34")).is_zero());
  // while [e12][e34] spans the top degree and is not exact
  Form<Rational> top = cup(gs, parse_form(4, "e12"), parse_form(4, "e34"));
  CHECK(top == parse_form(4, "e1234"));
  CHECK(!class_equal(gs, top, Form<Rational>(4)));

  CHECK_THROWS_AS(cup(gs, parse_form(4, "e13"), parse_form(4, "e12")), NotClosed);
}

TEST_CASE("cup products descend to classes") {
  std::mt19937_64 rng(103);
  LieAlgebra g = catalog_get("ex2.6").algebra();
  ComplexSlice<Rational> s2 = cochain_slice<Rational>(g, 2);
  for (int i = 0; i < 60; ++i) {
    // random closed 2-forms
    std::uniform_int_distribution<int> pick(0, s2.z.dim() - 1);
    Form<Rational> a = Form<Rational>::from_coords(6, 2, s2.z.basis_vector(pick(rng)));
    Form<Rational> b = Form<Rational>::from_coords(6, 2, s2.z.basis_vector(pick(rng)));
    // change a by an exact form
    Form<Rational> db = cdiff(g, oracles::random_form(rng, 6, 1));
    Form<Rational> lhs = cup(g, a + db, b);
    Form<Rational> rhs = cup(g, a, b);
    CHECK(class_equal(g, lhs, rhs));
  }
}

TEST_CASE("top pairing") {
  LieAlgebra torus = parse_algebra("(0,0,0,0)");
  CHECK(top_pairing(torus, parse_form(4, "e12"), parse_form(4, "e12")) == Rational(1));

  // the pairing matrix between H^2 and H_2 bases of (0^4,12,13) is square
  // and nonsingular
  LieAlgebra g = catalog_get("ex2.5").algebra();
  ComplexSlice<Rational> coh = cochain_slice<Rational>(g, 2);
  ComplexSlice<Rational> hom = chain_slice<Rational>(g, 2);
  std::vector<std::vector<Rational>> h_coh = complement_basis(coh.b, coh.z);
  std::vector<std::vector<Rational>> h_hom = complement_basis(hom.b, hom.z);
  REQUIRE(h_coh.size() == h_hom.size());
  int b2 = static_cast<int>(h_coh.size());
  Matrix<Rational> pairing(b2, b2);
  for (int i = 0; i < b2; ++i) {
    for (int j = 0; j < b2; ++j) {
      pairing(i, j) = top_pairing(g, Form<Rational>::from_coords(6, 2, h_coh[static_cast<std::size_t>(i)]),
                                  Form<Rational>::from_coords(6, 2, h_hom[static_cast<std::size_t>(j)]));
    }
  }
  CHECK(!determinant(pairing).is_zero());

  // exact forms pair to zero with any del-closed multivector
  std::mt19937_64 rng(107);
  for (int i = 0; i < 40; ++i) {
    Form<Rational> exact = cdiff(g, oracles::random_form(rng, 6, 1));
    if (exact.is_zero()) continue;
    std::uniform_int_distribution<int> pick(0, hom.z.dim() - 1);
    Form<Rational> v = Form<Rational>::from_coords(6, 2, hom.z.basis_vector(pick(rng)));
    CHECK(top_pairing(g, exact, v).is_zero());
  }
  CHECK_THROWS_AS(top_pairing(g, parse_form(6, "e45"), parse_form(6, "e12")), NotClosed);
}

TEST_CASE("poincare duality for unimodular fixtures") {
  for (const char* name : {"torus4", "heis3R", "filiform4", "ex2.5", "ex2.6", "ex2.17", "jump-sci", "prod-heis3"}) {
    LieAlgebra g = catalog_get(name).algebra();
    REQUIRE(is_unimodular(g));
    for (int ell = 0; ell <= g.dim(); ++ell) {
      CHECK(betti(g, ell) == betti(g, g.dim() - ell));
    }
  }
  // ...and it genuinely fails without unimodularity
  LieAlgebra bad = parse_algebra("(0,0,0,13+34)");
  CHECK(betti(bad, 0) == 1);
  CHECK(betti(bad, 4) == 0);
}

TEST_CASE("implication diagram between cohomology and homology verdicts") {
  // horizontal arrows hold for every algebra (perfect pairing argument);
  // vertical arrows additionally need unimodularity
  for (const std::string& name : catalog_names()) {
    const CatalogEntry& entry = catalog_get(name);
    LieAlgebra g = entry.algebra();
    if (g.dim() % 2 != 0) continue;
    bool uni = is_unimodular(g);
    for (const auto& [sname, spec] : entry.structures) {
      if (spec.kind == KSpec::Kind::family) continue;
      ParaStructure<Rational> ps = validate_para(parse_k(spec.value, g.dim()), g);
      for (int ell = 0; ell <= g.dim(); ++ell) {
        SubgroupReport<Rational> coh = subgroup_dims(g, ps, ell);
        SubgroupReport<Rational> hom_same = homology_subgroups(g, ps, ell);
        SubgroupReport<Rational> coh_dual = subgroup_dims(g, ps, g.dim() - ell);
        SubgroupReport<Rational> hom_dual = homology_subgroups(g, ps, g.dim() - ell);
        if (coh.full) CHECK(hom_same.pure);
        if (hom_dual.full) CHECK(coh_dual.pure);
        if (uni) {
          if (coh.full) CHECK(hom_dual.full);
          if (hom_same.pure) CHECK(coh_dual.pure);
          if (coh.full) CHECK(coh_dual.pure);
        }
      }
    }
  }
}

TEST_CASE("Abelian structures are pure at stage 2") {
  std::mt19937_64 rng(109);
  int tested = 0;
  for (const char* name : {"torus4", "heis3R", "filiform4", "ex2.5", "torus6"}) {
    LieAlgebra g = catalog_get(name).algebra();
    for (int i = 0; i < 25; ++i) {
      auto ps = random_paracomplex(g, rng(), true, 2000);
      if (!ps || !is_abelian_structure(*ps, g)) continue;
      ++tested;
      CHECK(subgroup_dims(g, *ps, 2).pure);
    }
  }
  CHECK(tested > 40);
}

TEST_CASE("product structures are pure-and-full at every stage") {
  // [g+, g-] = 0 forces the Kunneth decomposition
  LieAlgebra prod = catalog_get("prod-heis3").algebra();
  ParaStructure<Rational> ps = validate_para(parse_k("(+,+,+,-,-,-)", 6), prod);
  for (int ell = 0; ell <= 6; ++ell) {
    CHECK(subgroup_dims(prod, ps, ell).pure_and_full);
    CHECK(homology_subgroups(prod, ps, ell).pure_and_full);
  }

  LieAlgebra torus = direct_sum(parse_algebra("(0,0)"), parse_algebra("(0,0)"));
  ParaStructure<Rational> pt = validate_para(parse_k("(+,+,-,-)", 4), torus);
  for (int ell = 0; ell <= 4; ++ell) {
    CHECK(subgroup_dims(torus, pt, ell).pure_and_full);
  }
}

TEST_CASE("subgroup sums never exceed the Betti number") {
  std::mt19937_64 rng(113);
  for (const char* name : {"heis3R", "filiform4", "ex2.5", "ex2.6"}) {
    LieAlgebra g = catalog_get(name).algebra();
    for (int i = 0; i < 10; ++i) {
      auto ps = random_paracomplex(g, rng(), false, 200);
      if (!ps) continue;
      for (int ell = 0; ell <= g.dim(); ++ell) {
        SubgroupReport<Rational> rep = subgroup_dims(g, *ps, ell);
        CHECK(rep.dim_plus + rep.dim_minus - rep.intersection_dim <= rep.betti);
        CHECK(rep.intersection_dim <= std::min(rep.dim_plus, rep.dim_minus));
        CHECK(rep.full == (rep.dim_plus + rep.dim_minus - rep.intersection_dim == rep.betti));
        CHECK(rep.pure == (rep.intersection_dim == 0));
      }
    }
  }
}
