mod support;

use secantlab::betti::{graded_betti, table_predicates};
use secantlab::groebner::is_groebner_basis;
use secantlab::hilbert::hilbert_function;
use secantlab::polyring::{parse_poly, Field, MonomialOrder, Scalar};
use secantlab::projsec::{
    choose_center, compare_loci, project, ruled_join_variety, secant_locus_conductor, secant_locus_incidence,
    singular_locus, Agreement, CenterSpec, JoinKind,
};
use secantlab::varieties::{
    grassmann_g14_section, implicitize, random_complete_intersection, scroll, segre,
    veronese, Parametrization,
};
use secantlab::Ideal;
use support::*;

#[test]
fn koszul_tables_match_brute_force_resolutions() {
    for (name, ideal, top) in oracle_cases() {
        let table = graded_betti(&ideal, None).unwrap();
        assert!(
            table.entries().all(|((i, j), _)| i + j <= top),
            "{name}: degree bound {top} too small"
        );
        let oracle = brute_force_betti(&ideal, top);
        let ours: std::collections::BTreeMap<_, _> = table.entries().collect();
        assert_eq!(ours, oracle, "{name}");
    }
}

#[test]
fn secant_methods_agree_on_the_corpus() {
    let mut distinct = 0;
    for (x, spec, seed) in corpus_centers() {
        let q = choose_center(&x, &spec, seed).unwrap();
        let a = secant_locus_incidence(&x, &q).unwrap();
        let b = secant_locus_conductor(&x, &q).unwrap();
        assert_eq!(compare_loci(&a.ideal, &b.ideal).unwrap(), Agreement::Equal, "{} {spec:?}", x.name());
        assert_eq!(a.s, b.s);
        distinct += 1;
    }
    assert!(distinct >= 8);
}

#[test]
fn twisted_cubic_basis_is_its_three_minors() {
    let x = scroll(&[3]).unwrap();
    let basis = x.ideal().groebner_basis(MonomialOrder::Grevlex).unwrap();
    assert_eq!(basis.len(), 3);
    assert!(basis.iter().all(|g| g.degree() == Some(2)));
    // every S-pair reduces to zero, checked by hand on the three minors
    let minors = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"];
    for m in minors {
        let f = parse_poly(m, x.ring()).unwrap();
        assert!(x.ideal().contains(&f).unwrap());
    }
    assert!(is_groebner_basis(&basis));
}

#[test]
fn implicitized_conic_vanishes_on_its_parametrization() {
    let x = veronese(1, 2).unwrap();
    let p = x.parametrization().unwrap();
    let ideal = implicitize(p, x.ring()).unwrap();
    let f = Field::Rational;
    for (s, t) in [(1, 2), (-3, 5), (7, 0), (2, -9)] {
        let pt = p.evaluate(&[f.from_i64(s), f.from_i64(t)]).unwrap();
        assert!(ideal.gens().iter().all(|g| g.evaluate(&pt).unwrap().is_zero()));
    }
    assert_eq!(ideal.gens().len(), 1);
}

/// Hilbert function by counting standard monomials of the leading ideal.
fn counted_hilbert(ideal: &Ideal, j: usize) -> usize {
    let lead: Vec<Vec<u16>> = ideal
        .leading_monomials()
        .unwrap()
        .iter()
        .map(|m| m.exps().to_vec())
        .collect();
    standard_monomial_count(&lead, ideal.ring().nvars(), j)
}

#[test]
fn hilbert_functions_by_monomial_counting() {
    let cubic = scroll(&[3]).unwrap();
    for j in 0..=5 {
        assert_eq!(counted_hilbert(cubic.ideal(), j), 3 * j + 1);
        assert_eq!(hilbert_function(cubic.ideal(), j as u32).unwrap(), 3 * j as u64 + 1);
    }
    let v22 = veronese(2, 2).unwrap();
    for j in 0..=5u64 {
        let forms = choose(2 * j + 2, 2);
        assert_eq!(counted_hilbert(v22.ideal(), j as usize) as u64, forms);
        assert_eq!(hilbert_function(v22.ideal(), j as u32).unwrap(), forms);
    }
    assert_eq!(choose(7, 2) - choose(6, 2), 6);
    assert_eq!(v22.ideal().gens().len(), 6);
    assert_eq!((v22.dim().unwrap(), v22.degree().unwrap()), (2, 4));

    let s12 = segre(1, 2).unwrap();
    for j in 0..=4u64 {
        assert_eq!(hilbert_function(s12.ideal(), j as u32).unwrap(), (j + 1) * choose(j + 2, 2));
    }
    assert_eq!((s12.degree().unwrap(), s12.codim().unwrap()), (3, 2));

    let s22 = segre(2, 2).unwrap();
    assert_eq!(s22.ideal().gens().len(), 9);
    assert_eq!((s22.dim().unwrap(), s22.degree().unwrap()), (4, choose(4, 2) as i64));

    let quartic = veronese(1, 4).unwrap();
    for j in 0..=5 {
        assert_eq!(counted_hilbert(quartic.ideal(), j), 4 * j + 1);
    }
}

#[test]
fn complete_intersection_degrees() {
    let curve = random_complete_intersection(4, &[2, 2], 3).unwrap();
    for j in 1..=5 {
        assert_eq!(hilbert_function(curve.ideal(), j).unwrap(), 4 * j as u64);
    }
    let surface = random_complete_intersection(6, &[2, 2, 2], 3).unwrap();
    // (1 - t^2)^3 / (1 - t)^6 = (1 + t)^3 / (1 - t)^3, degree 2^3
    assert_eq!(surface.degree().unwrap(), 8);
    assert_eq!(surface.dim().unwrap(), 2);
}

#[test]
fn scroll_tables() {
    let s12 = scroll(&[1, 2]).unwrap();
    assert_eq!(s12.ideal().gens().len(), 3);
    assert_eq!(s12.degree().unwrap(), 3);
    let t = graded_betti(s12.ideal(), None).unwrap();
    assert_eq!(t.regularity(), 2);
    let s22 = scroll(&[2, 2]).unwrap();
    let t = graded_betti(s22.ideal(), None).unwrap();
    let pred = table_predicates(&t, 5, 2).unwrap();
    assert!(pred.acm);
    assert_eq!((s22.dim().unwrap(), s22.degree().unwrap()), (2, 4));
}

#[test]
fn del_pezzo_sections_do_not_depend_on_the_seed() {
    let a = grassmann_g14_section(3, 1).unwrap();
    let b = grassmann_g14_section(3, 99).unwrap();
    let ta: Vec<_> = graded_betti(a.ideal(), None).unwrap().entries().collect();
    let tb: Vec<_> = graded_betti(b.ideal(), None).unwrap().entries().collect();
    assert_eq!(ta, tb);
    assert_eq!((a.dim().unwrap(), a.degree().unwrap()), (b.dim().unwrap(), b.degree().unwrap()));
    assert_eq!(ta, vec![((0, 0), 1), ((1, 1), 5), ((2, 1), 5), ((3, 2), 1)]);
}

#[test]
fn cubic_parametrization_matches_fifty_points() {
    let x = veronese(1, 3).unwrap();
    let p: &Parametrization = x.parametrization().unwrap();
    let ideal = implicitize(p, x.ring()).unwrap();
    assert_eq!(ideal.gens().len(), 3);
    assert!(ideal.same_ideal(x.ideal()).unwrap());
    let f = Field::Rational;
    for k in 0..50i64 {
        let pt = p.evaluate(&[f.from_i64(k - 25), f.from_i64(3 * k + 1)]).unwrap();
        assert!(ideal.gens().iter().all(|g| g.evaluate(&pt).unwrap().is_zero()));
    }
}

#[test]
fn sampled_points_do_not_collide() {
    let x = veronese(2, 2).unwrap();
    let mut collisions = 0;
    for seed in 0..100u64 {
        let a = secantlab::varieties::random_point(&x, Field::Rational, 2 * seed).unwrap();
        let b = secantlab::varieties::random_point(&x, Field::Rational, 2 * seed + 1).unwrap();
        let proportional = (0..a.len()).all(|i| (0..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]));
        collisions += usize::from(proportional);
    }
    assert_eq!(collisions, 0);
}

#[test]
fn projected_quartic_curve_from_a_secant_point() {
    let x = veronese(1, 4).unwrap();
    let q = choose_center(&x, &CenterSpec::OnSecant, 2).unwrap();
    let image = project(&x, &q).unwrap().image;
    let h = image.ideal().hilbert().unwrap();
    assert_eq!(h.degree, 4);
    // P(j) = 4j + 1 - p_a
    assert_eq!(1 - h.hilbert_polynomial(0), 1);
}

#[test]
fn veronese_surface_from_a_point_off_the_secant_variety() {
    let x = veronese(2, 2).unwrap();
    let q = choose_center(&x, &CenterSpec::GeneralOffSecant, 5).unwrap();
    let p = project(&x, &q).unwrap();
    assert!(p.birational);
    assert_eq!(p.image.degree().unwrap(), 4);
    // 6 = h0(O_X(1)) linear forms on X, only 5 on P^4
    assert_eq!(hilbert_function(p.image.ideal(), 1).unwrap(), 5);
    let t = graded_betti(p.image.ideal(), None).unwrap();
    assert_eq!(table_predicates(&t, 4, 2).unwrap().depth, 1);
    let sigma = secant_locus_incidence(&x, &q).unwrap();
    assert_eq!(sigma.s, -1);
}

#[test]
fn midpoint_of_a_secant_line_to_the_quartic_curve() {
    let x = veronese(1, 4).unwrap();
    let f = Field::Rational;
    let q: Vec<Scalar> = [1, 0, 0, 0, 1].iter().map(|&c| f.from_i64(c)).collect();
    let sigma = secant_locus_incidence(&x, &q).unwrap();
    assert_eq!(sigma.s, 0);
    assert_eq!(sigma.length().unwrap(), Some(2));
    for end in [[1, 0, 0, 0, 0], [0, 0, 0, 0, 1]] {
        let pt: Vec<Scalar> = end.iter().map(|&c| f.from_i64(c)).collect();
        assert!(sigma.ideal.gens().iter().all(|g| g.evaluate(&pt).unwrap().is_zero()));
    }
}

#[test]
fn lambda_lies_in_the_singular_locus() {
    let x = veronese(2, 2).unwrap();
    let q = choose_center(&x, &CenterSpec::OnSecant, 4).unwrap();
    let lambda = secant_locus_conductor(&x, &q).unwrap().lambda.unwrap();
    let image = project(&x, &q).unwrap().image;
    let sing = singular_locus(image.ideal()).unwrap();
    // V(Λ) ⊂ V(Sing) iff every generator of the singular ideal lies in I(Λ)
    for g in sing.gens() {
        assert!(lambda.contains(g).unwrap());
    }
}

#[test]
fn secant_variety_of_the_veronese_surface() {
    let x = veronese(2, 2).unwrap();
    let sec = ruled_join_variety(&x, JoinKind::Secant).unwrap();
    let det = parse_poly("x0*x3*x5 + 2*x1*x2*x4 - x0*x4^2 - x3*x2^2 - x5*x1^2", x.ring()).unwrap();
    assert!(sec.same_ideal(&Ideal::new(x.ring(), vec![det]).unwrap()).unwrap());
    assert_eq!(sec.hilbert().unwrap().projective_dim(), 4);
}
