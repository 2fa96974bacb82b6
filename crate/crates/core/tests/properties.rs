use num::{BigRational, Complex};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use unitary_radon::ball::{dual_exact, invert_holomorphic, reconstruct, szego_radon};
use unitary_radon::bipoly::{fischer, sphere_inner};
use unitary_radon::clifford::hermitian::herm_reconstruct;
use unitary_radon::clifford::Multivector;
use unitary_radon::fock::{bargmann_radon, fock_dual_exact, fock_inner, fock_invert, FockElement};
use unitary_radon::geometry::cayley_tuple;
use unitary_radon::io::{parse_polynomial, serialize_polynomial};
use unitary_radon::random::{random_harmonic, random_hmonogenic, random_holomorphic};
use unitary_radon::realspace::{l2_dual_exact, l2_inner, l2_invert, segal_bargmann, segal_bargmann_inv};
use unitary_radon::{BiPoly, Monomial, MultiIndex, CQ};

const N: usize = 2;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=6).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

fn scalar() -> impl Strategy<Value = CQ> {
    (rational(), rational()).prop_map(|(re, im)| Complex::new(re, im))
}

fn index() -> impl Strategy<Value = MultiIndex> {
    prop::collection::vec(0u32..=2, N).prop_map(MultiIndex::new)
}

fn poly() -> impl Strategy<Value = BiPoly<CQ>> {
    prop::collection::vec((index(), index(), scalar()), 0..5)
        .prop_map(|terms| BiPoly::from_terms(N, terms.into_iter().map(|(a, b, c)| (Monomial::new(a, b), c))).unwrap())
}

fn multivector() -> impl Strategy<Value = Multivector<CQ>> {
    prop::collection::vec((0u32..16, scalar()), 0..5).prop_map(Multivector::from_blades)
}

fn harmonic(seed: u64, max: u32) -> BiPoly<CQ> {
    random_harmonic(&mut ChaCha20Rng::seed_from_u64(seed), N, max)
}

fn holomorphic(seed: u64, max: u32) -> BiPoly<CQ> {
    random_holomorphic(&mut ChaCha20Rng::seed_from_u64(seed), N, max)
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn polynomial_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert!(a.mul(&b).unwrap() == b.mul(&a).unwrap());
        prop_assert!(a.mul(&b).unwrap().mul(&c).unwrap() == a.mul(&b.mul(&c).unwrap()).unwrap());
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert!(left == right);
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn clifford_product_is_associative(a in multivector(), b in multivector(), c in multivector()) {
        prop_assert!(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)));
    }

    #[test]
    fn dagger_reverses_products(a in multivector(), b in multivector()) {
        prop_assert!(a.mul(&b).dagger() == b.dagger().mul(&a.dagger()));
        prop_assert!(a.dagger().dagger() == a);
    }

    #[test]
    fn polynomial_documents_round_trip(p in poly()) {
        let text = serialize_polynomial(&p);
        prop_assert!(parse_polynomial(&text).unwrap() == p);
        prop_assert_eq!(serialize_polynomial(&parse_polynomial(&text).unwrap()), text);
    }

    #[test]
    fn inner_products_are_hermitian(a in poly(), b in poly()) {
        prop_assert_eq!(sphere_inner(&a, &b).unwrap(), sphere_inner(&b, &a).unwrap().conj());
        prop_assert_eq!(fischer(&a, &b).unwrap(), fischer(&b, &a).unwrap().conj());
    }
}

proptest! {
    #![proptest_config(config(8))]

    #[test]
    fn ball_projection_is_an_orthogonal_projection(seed in any::<u64>(), tuple_seed in 0u64..1000) {
        let t = cayley_tuple(N, tuple_seed).unwrap();
        let f = harmonic(seed, 3);
        let g = harmonic(seed ^ 1, 3);
        let pf = szego_radon(&f, &t).unwrap().reconstructed;
        let pg = szego_radon(&g, &t).unwrap().reconstructed;
        prop_assert!(szego_radon(&pf, &t).unwrap().reconstructed == pf);
        prop_assert_eq!(sphere_inner(&pf, &g).unwrap(), sphere_inner(&f, &pg).unwrap());
    }

    #[test]
    fn fock_projection_is_an_orthogonal_projection(seed in any::<u64>(), tuple_seed in 0u64..1000) {
        let t = cayley_tuple(N, tuple_seed).unwrap();
        let f = FockElement::new(holomorphic(seed, 3)).unwrap();
        let g = FockElement::new(holomorphic(seed ^ 1, 3)).unwrap();
        let pf = bargmann_radon(&f, &t).unwrap().reconstructed;
        let pg = bargmann_radon(&g, &t).unwrap().reconstructed;
        prop_assert!(bargmann_radon(&pf, &t).unwrap().reconstructed == pf);
        prop_assert_eq!(fock_inner(&pf, &g).unwrap(), fock_inner(&f, &pg).unwrap());
    }

    #[test]
    fn dual_then_invert_is_the_identity(seed in any::<u64>()) {
        let f = holomorphic(seed, 4);
        prop_assert!(invert_holomorphic(&dual_exact(&f, N).unwrap(), N).unwrap() == f);
        let h = harmonic(seed, 3);
        prop_assert!(reconstruct(&h, N).unwrap() == h);
        let e = FockElement::new(f).unwrap();
        prop_assert!(fock_invert(&fock_dual_exact(&e, N).unwrap(), N).unwrap() == e);
        let x = segal_bargmann_inv(&e);
        prop_assert!(l2_invert(&l2_dual_exact(&x, N).unwrap(), N).unwrap() == x);
    }

    #[test]
    fn segal_bargmann_is_an_isometry(a in any::<u64>(), b in any::<u64>()) {
        let f = segal_bargmann_inv(&FockElement::new(holomorphic(a, 3)).unwrap());
        let g = segal_bargmann_inv(&FockElement::new(holomorphic(b, 3)).unwrap());
        prop_assert_eq!(l2_inner(&f, &g).unwrap(), fock_inner(&segal_bargmann(&f), &segal_bargmann(&g)).unwrap());
        prop_assert!(segal_bargmann_inv(&segal_bargmann(&f)) == f);
    }
}

proptest! {
    #![proptest_config(config(4))]

    #[test]
    fn hermitian_reconstruction_is_the_identity(seed in any::<u64>(), j in 1usize..N) {
        let f = random_hmonogenic(&mut ChaCha20Rng::seed_from_u64(seed), N, j, 2);
        prop_assert!(herm_reconstruct(&f, N, j).unwrap() == f);
    }
}
