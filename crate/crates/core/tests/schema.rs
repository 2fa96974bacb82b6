use std::path::PathBuf;

use num::{BigRational, Complex};
use unitary_radon::io::{
    parse_clifford, parse_herm_polynomial, parse_hermite, parse_polynomial, parse_tuple, serialize_clifford,
    serialize_herm_polynomial, serialize_hermite, serialize_polynomial,
};
use unitary_radon::{Monomial, MultiIndex, CQ};

fn read(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

const POLYNOMIALS: &[&str] = &[
    "polynomial_z1.json",
    "polynomial_z1_integer_literals.json",
    "polynomial_zero.json",
    "polynomial_duplicates.json",
    "polynomial_not_harmonic.json",
    "fock_wave_axis_2.json",
    "ball_wave_axis_1_1_third.json",
];

const CANONICAL: &[&str] = &[
    "polynomial_z1.json",
    "polynomial_zero.json",
    "polynomial_not_harmonic.json",
    "fock_wave_axis_2.json",
    "ball_wave_axis_1_1_third.json",
];

#[test]
fn polynomial_documents_round_trip() {
    for name in POLYNOMIALS {
        let p = parse_polynomial(&read(name)).unwrap();
        let again = parse_polynomial(&serialize_polynomial(&p)).unwrap();
        assert!(p == again, "{name}");
    }
}

#[test]
fn canonical_documents_are_reproduced_byte_for_byte() {
    for name in CANONICAL {
        let text = read(name);
        let p = parse_polynomial(&text).unwrap();
        assert_eq!(serialize_polynomial(&p), text.trim_end(), "{name}");
    }
    let text = read("hermite_mixed.json");
    assert_eq!(serialize_hermite(&parse_hermite(&text).unwrap()), text.trim_end());
    let text = read("clifford_vector.json");
    assert_eq!(serialize_clifford(&parse_clifford(&text).unwrap()), text.trim_end());
    let text = read("hermitian_wave_axis_1_0.json");
    assert_eq!(
        serialize_herm_polynomial(&parse_herm_polynomial(&text).unwrap()),
        text.trim_end()
    );
}

#[test]
fn integer_literals_parse_like_floats() {
    let a = parse_polynomial(&read("polynomial_z1.json")).unwrap();
    let b = parse_polynomial(&read("polynomial_z1_integer_literals.json")).unwrap();
    assert!(a == b);
}

#[test]
fn duplicate_monomials_are_summed() {
    let p = parse_polynomial(&read("polynomial_duplicates.json")).unwrap();
    assert_eq!(p.len(), 2);
    let m = Monomial::new(MultiIndex::new(vec![1, 0]), MultiIndex::new(vec![0, 1]));
    let c: &CQ = p.coeff(&m).unwrap();
    assert_eq!(*c, Complex::new(q(5, 6), q(0, 1)));
    let m = Monomial::new(MultiIndex::new(vec![0, 1]), MultiIndex::new(vec![1, 0]));
    assert_eq!(*p.coeff(&m).unwrap(), Complex::new(q(0, 1), q(-2, 1)));
}

#[test]
fn cancelling_terms_leave_nothing() {
    let text = r#"{"n":1,"terms":[{"alpha":[1],"beta":[0],"re":1,"im":0},{"alpha":[1],"beta":[0],"re":-1,"im":0}]}"#;
    assert!(parse_polynomial(text).unwrap().is_zero());
}

#[test]
fn rationals_survive_a_round_trip() {
    let text = r#"{"n":1,"terms":[{"alpha":[2],"beta":[0],"re":{"num":"1000000000000000000000000000001","den":"3"},"im":{"num":-1,"den":3}}]}"#;
    let p = parse_polynomial(text).unwrap();
    let out = serialize_polynomial(&p);
    assert!(
        out.contains(r#""num":"1000000000000000000000000000001","den":"3""#),
        "{out}"
    );
    assert!(parse_polynomial(&out).unwrap() == p);
}

#[test]
fn unknown_fields_are_rejected_with_a_path() {
    let text = r#"{"n":2,"terms":[{"alpha":[1,0],"beta":[0,0],"re":1,"im":0},{"alpha":[1,0],"beta":[0,0],"re":1,"im":0,"weight":2}]}"#;
    let err = parse_polynomial(text).unwrap_err().to_string();
    assert!(err.contains("terms[1]"), "{err}");
    let err = parse_polynomial(r#"{"n":2,"terms":[],"degree":3}"#)
        .unwrap_err()
        .to_string();
    assert!(err.contains("degree"), "{err}");
}

#[test]
fn wrong_lengths_and_dimensions_are_rejected() {
    let err = parse_polynomial(r#"{"n":2,"terms":[{"alpha":[1],"beta":[0,0],"re":1,"im":0}]}"#)
        .unwrap_err()
        .to_string();
    assert!(err.contains("terms[0].alpha"), "{err}");
    assert!(parse_polynomial(r#"{"n":0,"terms":[]}"#).is_err());
    assert!(parse_polynomial(r#"{"n":1,"terms":[{"alpha":[1],"beta":[0],"re":{"num":1,"den":0},"im":0}]}"#).is_err());
}

#[test]
fn non_finite_numbers_are_rejected() {
    for bad in ["1e400", "NaN", "Infinity", "-1e999"] {
        let text = format!(r#"{{"n":1,"terms":[{{"alpha":[1],"beta":[0],"re":{bad},"im":0}}]}}"#);
        assert!(parse_polynomial(&text).is_err(), "{bad}");
    }
}

#[test]
fn tuple_documents_parse() {
    for name in ["tuple_axis.json", "tuple_haar.json", "tuple_explicit.json"] {
        parse_tuple(&read(name)).unwrap();
    }
    assert!(parse_tuple(r#"{"axis":[0,1],"haar_seed":2}"#).is_err());
}
