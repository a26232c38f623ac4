mod support;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use secantlab::betti::graded_betti;
use secantlab::hilbert::hilbert_function;
use secantlab::polyring::{Field, IdealFile, Matrix, MonomialOrder, PolynomialRing, RingExt, Scalar};
use secantlab::projsec::{classify_quadric, Frame};
use secantlab::stratify::{stratification_survey, SurveyConfig};
use secantlab::varieties::{implicitize, scroll, segre, veronese, Variety};
use secantlab::{Ideal, Polynomial};
use support::*;

#[test]
fn groebner_postconditions_on_the_corpus() {
    for x in corpus() {
        let basis = x.ideal().groebner_basis(MonomialOrder::Grevlex).unwrap();
        groebner_postconditions(x.ideal().gens(), &basis).unwrap_or_else(|e| panic!("{}: {e}", x.name()));
    }
}

#[test]
fn euler_identity_on_every_corpus_table() {
    for x in corpus() {
        let table = graded_betti(x.ideal(), None).unwrap();
        let h = x.ideal().hilbert().unwrap();
        assert!(table.euler_identity_holds(&h.numerator), "{}", x.name());
    }
}

fn parametrized() -> Vec<Variety> {
    vec![
        veronese(1, 3).unwrap(),
        veronese(1, 4).unwrap(),
        veronese(2, 2).unwrap(),
        segre(1, 2).unwrap(),
        scroll(&[1, 2]).unwrap(),
        scroll(&[2, 2]).unwrap(),
        secantlab::varieties::grassmann_g14_section(0, 1).unwrap(),
    ]
}

#[test]
fn elimination_agrees_with_evaluation_mod_p() {
    let field = Field::Prime(32003);
    for x in parametrized() {
        let x = x.change_field(field).unwrap();
        let p = x.parametrization().unwrap();
        let ideal = implicitize(p, x.ring()).unwrap();
        assert!(ideal.same_ideal(x.ideal()).unwrap(), "{}", x.name());
        let mut rng = ChaCha8Rng::seed_from_u64(0x32003);
        for _ in 0..100 {
            let src: Vec<Scalar> = (0..p.source_ring.nvars())
                .map(|_| field.from_i64(rng.gen_range(0..32003)))
                .collect();
            let pt = p.evaluate(&src).unwrap();
            for g in ideal.gens() {
                assert!(g.evaluate(&pt).unwrap().is_zero(), "{}", x.name());
            }
        }
    }
}

#[test]
fn surveys_are_byte_identical() {
    for x in [veronese(2, 2).unwrap(), segre(1, 2).unwrap(), veronese(1, 3).unwrap()] {
        let config = SurveyConfig {
            trials: 12,
            on_secant: 4,
            seed: 21,
            ..SurveyConfig::default()
        };
        let a = stratification_survey(&x, &config).unwrap().to_json();
        let b = stratification_survey(&x, &config).unwrap().to_json();
        assert_eq!(a, b);
    }
}

fn small_ideal(coeffs: Vec<i64>) -> Ideal {
    let ring = PolynomialRing::standard(4, Field::Rational);
    let f = ring.field();
    let quads: Vec<Vec<usize>> = vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3], vec![1, 1], vec![2, 2]];
    let gens: Vec<Polynomial> = coeffs
        .chunks(quads.len())
        .map(|c| {
            quads.iter().zip(c).fold(ring.zero(), |acc, (m, &k)| {
                acc.add(&ring.var(m[0]).mul(&ring.var(m[1])).scale(&f.from_i64(k)))
            })
        })
        .filter(|p: &Polynomial| !p.is_zero())
        .collect();
    Ideal::new(&ring, gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_bases_satisfy_postconditions(coeffs in prop::collection::vec(-3i64..=3, 12..=18)) {
        let ideal = small_ideal(coeffs);
        prop_assume!(!ideal.gens().is_empty());
        let basis = ideal.groebner_basis(MonomialOrder::Grevlex).unwrap();
        prop_assert!(groebner_postconditions(ideal.gens(), &basis).is_ok());
    }

    #[test]
    fn random_tables_satisfy_euler(coeffs in prop::collection::vec(-2i64..=2, 12..=18)) {
        let ideal = small_ideal(coeffs);
        prop_assume!(!ideal.gens().is_empty());
        let table = graded_betti(&ideal, None).unwrap();
        prop_assert!(table.euler_identity_holds(&ideal.hilbert().unwrap().numerator));
    }

    #[test]
    fn linear_changes_keep_hilbert_functions(
        coeffs in prop::collection::vec(-2i64..=2, 12),
        entries in prop::collection::vec(-3i64..=3, 16),
    ) {
        let ideal = small_ideal(coeffs);
        prop_assume!(!ideal.gens().is_empty());
        let f = Field::Rational;
        let m: Matrix = entries.chunks(4).map(|r| r.iter().map(|&c| f.from_i64(c)).collect()).collect();
        if let Ok(moved) = ideal.apply_linear_change(&m) {
            for j in 0..=5 {
                prop_assert_eq!(hilbert_function(&ideal, j).unwrap(), hilbert_function(&moved, j).unwrap());
            }
        }
    }

    #[test]
    fn frame_round_trip(q in prop::collection::vec(-4i64..=4, 5), y in prop::collection::vec(-6i64..=6, 4)) {
        prop_assume!(q.iter().any(|&c| c != 0));
        let f = Field::Rational;
        let ring = PolynomialRing::standard(5, f);
        let q: Vec<Scalar> = q.iter().map(|&c| f.from_i64(c)).collect();
        let y: Vec<Scalar> = y.iter().map(|&c| f.from_i64(c)).collect();
        let frame = Frame::new(&ring, &q).unwrap();
        let x = frame.lift_point(&y).unwrap();
        prop_assert_eq!(frame.project_point(&x).unwrap(), y.clone());
        let shifted: Vec<Scalar> = x.iter().zip(&q).map(|(a, b)| a + &(b * &f.from_i64(3))).collect();
        prop_assert_eq!(frame.project_point(&shifted).unwrap(), y);
    }

    #[test]
    fn quadric_rank_is_invariant(diag in prop::collection::vec(-3i64..=3, 4), entries in prop::collection::vec(-2i64..=2, 16)) {
        let f = Field::Rational;
        let ring = PolynomialRing::standard(4, f);
        let q = (0..4).fold(ring.zero(), |acc, k| acc.add(&ring.var(k).pow(2).scale(&f.from_i64(diag[k]))));
        prop_assume!(!q.is_zero());
        let rank = diag.iter().filter(|&&d| d != 0).count();
        let ideal = Ideal::new(&ring, vec![q]).unwrap();
        let m: Matrix = entries.chunks(4).map(|r| r.iter().map(|&c| f.from_i64(c)).collect()).collect();
        if let Ok(moved) = ideal.apply_linear_change(&m) {
            let c = classify_quadric(&moved).unwrap();
            prop_assert_eq!(c.quadric().map(|c| c.rank), Some(rank));
        }
    }

    #[test]
    fn ideal_files_round_trip(coeffs in prop::collection::vec(-5i64..=5, 6..=12)) {
        let ideal = small_ideal(coeffs);
        let text = IdealFile::format(ideal.ring(), ideal.gens(), Some("random"));
        let back = IdealFile::parse(&text).unwrap();
        prop_assert_eq!(back.polys, ideal.gens().to_vec());
    }
}
