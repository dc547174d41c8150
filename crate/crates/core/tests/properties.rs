use hopf_kernel::coquasitriangular::verify_cqt;
use hopf_kernel::hopf::compute_antipode;
use hopf_kernel::laurent::{LaurentElement, LaurentHopf, Mono};
use hopf_kernel::quasitriangular::{drinfeld_elements, minimal_subhopf, verify_qt};
use hopf_kernel::{presets, Bialgebra, Element, FinHopfAlgebra, Hopf, RMatrix, Scalar, Vector};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn h4_element() -> impl Strategy<Value = Element> {
    prop::collection::vec(scalar(), 4).prop_map(|cs| Element::from_terms(cs.into_iter().enumerate()))
}

fn mono() -> impl Strategy<Value = Mono> {
    (-7i64..=7, 0u8..2).prop_map(|(i, j)| Mono::new(i, j))
}

fn laurent_element() -> impl Strategy<Value = LaurentElement> {
    prop::collection::vec((mono(), scalar()), 0..4).prop_map(Vector::from_terms)
}

fn h4() -> FinHopfAlgebra {
    presets::sweedler4()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sweedler_antipode_reverses_products(x in h4_element(), y in h4_element()) {
        let h = h4();
        prop_assert_eq!(h.antipode(&h.mul(&x, &y)), h.mul(&h.antipode(&y), &h.antipode(&x)));
    }

    #[test]
    fn sweedler_comultiplication_is_multiplicative(x in h4_element(), y in h4_element()) {
        let h = h4();
        prop_assert_eq!(h.comul(&h.mul(&x, &y)), h.tensor_mul(&h.comul(&x), &h.comul(&y)));
    }

    #[test]
    fn sweedler_s4_is_identity(x in h4_element()) {
        let h = h4();
        prop_assert_eq!(h.antipode_pow(&x, 4), x);
    }

    #[test]
    fn sweedler_r_family(n in -5i64..=5, d in 1i64..=3) {
        let h = h4();
        let xi = Scalar::ratio(n, d);
        let r = RMatrix::new(&h, presets::sweedler_r(&h, &xi)).unwrap();
        prop_assert!(verify_qt(&h, &r).passed());
        let qt = drinfeld_elements(&h, &r).unwrap();
        prop_assert_eq!(qt.u, h.element("g").unwrap());
        let min = minimal_subhopf(&h, &r).unwrap();
        prop_assert!(min.report.passed());
        prop_assert_eq!(min.algebra.dim(), if n == 0 { 2 } else { 4 });
        let again = minimal_subhopf(&min.algebra, &min.r).unwrap();
        prop_assert_eq!(again.algebra.dim(), min.algebra.dim());
    }

    #[test]
    fn laurent_associative(x in laurent_element(), y in laurent_element(), z in laurent_element()) {
        let h = LaurentHopf::new();
        prop_assert_eq!(h.mul(&h.mul(&x, &y), &z), h.mul(&x, &h.mul(&y, &z)));
    }

    #[test]
    fn laurent_antipode_inverse_and_order(x in laurent_element()) {
        let h = LaurentHopf::new();
        prop_assert_eq!(h.antipode(&h.antipode_inv(&x)), x.clone());
        prop_assert_eq!(h.antipode_pow(&x, 4), x);
    }

    #[test]
    fn laurent_braiding_on_random_triples(a in mono(), b in mono(), c in mono()) {
        let h = LaurentHopf::new();
        prop_assert!(verify_cqt(&h, &h.braiding(), &[a, b, c]).passed());
    }

    #[test]
    fn laurent_integral(m in mono()) {
        let h = LaurentHopf::new();
        let lambda = h.lambda();
        let lhs = hopf_kernel::structure::hit_left(&h, &lambda, &Vector::basis(m));
        prop_assert_eq!(lhs, h.unit().scale(&lambda.at(&m)));
    }
}

#[test]
fn computed_antipode_matches_tables() {
    for alg in [presets::group_algebra(2), presets::group_algebra(4), presets::sweedler4(), presets::sweedler4().dual_hopf()] {
        let solved = compute_antipode(alg.constants()).unwrap();
        assert_eq!(&solved, alg.antipode_matrix(), "{}", alg.name());
    }
}

#[test]
fn prime_field_sweedler() {
    let h = h4().over_field(hopf_kernel::Field::prime(7).unwrap()).unwrap();
    let (data, report) = hopf_kernel::cofrobenius::analyze(&h).unwrap();
    assert!(report.passed(), "{report}");
    assert_eq!(data.a, h.element("g").unwrap());
    let r = RMatrix::new(&h, presets::sweedler_r(&h, &Scalar::from(1))).unwrap();
    assert!(verify_qt(&h, &r).passed());
}
