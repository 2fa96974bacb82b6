//! JSON documents for polynomials, Hermite expansions, tuples and Clifford
//! numbers.
//!
//! Coefficients are written as plain numbers when the value is an exact
//! binary float and as `{"num": "..", "den": ".."}` otherwise, so parsing a
//! serialized document gives back the same exact value.

use num::{BigInt, BigRational, Complex, ToPrimitive, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bipoly::{BiPoly, Monomial, MultiIndex};
use crate::clifford::{HermPoly, Multivector};
use crate::error::{Error, Result};
use crate::geometry::{axis_tuple, sample_stiefel, StiefelTuple};
use crate::realspace::HermiteExpansion;
use crate::scalar::{Scalar, C64, CQ};

/// A real number in a document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Float(f64),
    Exact { num: IntText, den: IntText },
}

/// An integer written either as a JSON number or as a decimal string.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntText {
    Int(i64),
    Text(String),
}

impl IntText {
    fn value(&self, path: &str) -> Result<BigInt> {
        match self {
            IntText::Int(k) => Ok(BigInt::from(*k)),
            IntText::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::parse(path, format!("{s:?} is not an integer"))),
        }
    }
}

impl Number {
    pub fn from_rational(x: &BigRational) -> Number {
        if let Some(f) = x.to_f64() {
            if f.is_finite() && BigRational::from_float(f).as_ref() == Some(x) {
                return Number::Float(f);
            }
        }
        Number::Exact {
            num: IntText::Text(x.numer().to_string()),
            den: IntText::Text(x.denom().to_string()),
        }
    }

    pub fn to_rational(&self, path: &str) -> Result<BigRational> {
        match self {
            Number::Float(f) => BigRational::from_float(*f).ok_or_else(|| Error::parse(path, "non-finite number")),
            Number::Exact { num, den } => {
                let d = den.value(path)?;
                if d.is_zero() {
                    return Err(Error::parse(path, "zero denominator"));
                }
                Ok(BigRational::new(num.value(path)?, d))
            }
        }
    }
}

/// Scalars that can be written to and read from documents.
pub trait JsonScalar: Scalar {
    fn to_parts(&self) -> (Number, Number);
    fn from_parts(re: &Number, im: &Number, path: &str) -> Result<Self>;
}

impl JsonScalar for CQ {
    fn to_parts(&self) -> (Number, Number) {
        (Number::from_rational(&self.re), Number::from_rational(&self.im))
    }

    fn from_parts(re: &Number, im: &Number, path: &str) -> Result<Self> {
        Ok(Complex::new(
            re.to_rational(&format!("{path}.re"))?,
            im.to_rational(&format!("{path}.im"))?,
        ))
    }
}

impl JsonScalar for C64 {
    fn to_parts(&self) -> (Number, Number) {
        (Number::Float(self.re), Number::Float(self.im))
    }

    fn from_parts(re: &Number, im: &Number, path: &str) -> Result<Self> {
        Ok(CQ::from_parts(re, im, path)?.to_c64())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub re: Number,
    pub im: Number,
}

/// `{"n", "terms": [{"alpha", "beta", "re", "im"}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialDoc {
    pub n: usize,
    pub terms: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HermiteTermDoc {
    pub index: Vec<u32>,
    pub re: Number,
    pub im: Number,
}

/// `{"n", "coeffs": [{"index", "re", "im"}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HermiteDoc {
    pub n: usize,
    pub coeffs: Vec<HermiteTermDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BladeDoc {
    pub mask: u32,
    pub re: Number,
    pub im: Number,
}

/// `{"blades": [{"mask", "re", "im"}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliffordDoc {
    pub blades: Vec<BladeDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HermTermDoc {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub blades: Vec<BladeDoc>,
}

/// Clifford-valued polynomial: `{"n", "terms": [{"alpha", "beta", "blades"}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HermPolyDoc {
    pub n: usize,
    pub terms: Vec<HermTermDoc>,
}

/// `{"axis": [i, j]}`, `{"t": [[re, im], ..], "s": [..]}` or `{"haar_seed": k}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum TupleDoc {
    Axis { axis: [usize; 2] },
    Explicit { t: Vec<[f64; 2]>, s: Vec<[f64; 2]> },
    Haar { haar_seed: u64 },
}

fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::parse(path, e.into_inner().to_string())
    })
}

fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("documents serialize")
}

fn check_len(len: usize, n: usize, path: &str) -> Result<()> {
    if len == n {
        Ok(())
    } else {
        Err(Error::parse(path, format!("expected {n} entries, found {len}")))
    }
}

fn monomial(alpha: &[u32], beta: &[u32], n: usize, path: &str) -> Result<Monomial> {
    check_len(alpha.len(), n, &format!("{path}.alpha"))?;
    check_len(beta.len(), n, &format!("{path}.beta"))?;
    Ok(Monomial::new(
        MultiIndex::new(alpha.to_vec()),
        MultiIndex::new(beta.to_vec()),
    ))
}

fn require_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::parse("n", "dimension must be positive"))
    } else {
        Ok(())
    }
}

impl PolynomialDoc {
    /// Builds the polynomial; duplicate monomials are summed.
    pub fn to_poly<S: JsonScalar>(&self) -> Result<BiPoly<S>> {
        require_n(self.n)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (i, t) in self.terms.iter().enumerate() {
            let path = format!("terms[{i}]");
            terms.push((
                monomial(&t.alpha, &t.beta, self.n, &path)?,
                S::from_parts(&t.re, &t.im, &path)?,
            ));
        }
        BiPoly::from_terms(self.n, terms)
    }

    /// Canonical document: monomials in increasing order, no zero terms.
    pub fn from_poly<S: JsonScalar>(p: &BiPoly<S>) -> Self {
        PolynomialDoc {
            n: p.n(),
            terms: p
                .terms()
                .map(|(m, c)| {
                    let (re, im) = c.to_parts();
                    TermDoc {
                        alpha: m.alpha.parts().to_vec(),
                        beta: m.beta.parts().to_vec(),
                        re,
                        im,
                    }
                })
                .collect(),
        }
    }
}

impl HermiteDoc {
    pub fn to_expansion<S: JsonScalar>(&self) -> Result<HermiteExpansion<S>> {
        require_n(self.n)?;
        let mut terms = Vec::with_capacity(self.coeffs.len());
        for (i, t) in self.coeffs.iter().enumerate() {
            let path = format!("coeffs[{i}]");
            check_len(t.index.len(), self.n, &format!("{path}.index"))?;
            terms.push((MultiIndex::new(t.index.clone()), S::from_parts(&t.re, &t.im, &path)?));
        }
        HermiteExpansion::from_terms(self.n, terms)
    }

    pub fn from_expansion<S: JsonScalar>(f: &HermiteExpansion<S>) -> Self {
        HermiteDoc {
            n: f.n(),
            coeffs: f
                .coeffs()
                .iter()
                .map(|(a, c)| {
                    let (re, im) = c.to_parts();
                    HermiteTermDoc {
                        index: a.parts().to_vec(),
                        re,
                        im,
                    }
                })
                .collect(),
        }
    }
}

fn blades_to_multivector<S: JsonScalar>(blades: &[BladeDoc], path: &str) -> Result<Multivector<S>> {
    let mut out = Multivector::zero();
    for (i, b) in blades.iter().enumerate() {
        out.add_blade(b.mask, S::from_parts(&b.re, &b.im, &format!("{path}[{i}]"))?);
    }
    Ok(out)
}

fn multivector_to_blades<S: JsonScalar>(x: &Multivector<S>) -> Vec<BladeDoc> {
    x.blades()
        .map(|(mask, c)| {
            let (re, im) = c.to_parts();
            BladeDoc { mask, re, im }
        })
        .collect()
}

impl CliffordDoc {
    pub fn to_multivector<S: JsonScalar>(&self) -> Result<Multivector<S>> {
        blades_to_multivector(&self.blades, "blades")
    }

    pub fn from_multivector<S: JsonScalar>(x: &Multivector<S>) -> Self {
        CliffordDoc {
            blades: multivector_to_blades(x),
        }
    }
}

impl HermPolyDoc {
    /// Builds the polynomial; blades must fit in `2n` generators.
    pub fn to_poly<S: JsonScalar>(&self) -> Result<HermPoly<S>> {
        require_n(self.n)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (i, t) in self.terms.iter().enumerate() {
            let path = format!("terms[{i}]");
            let c = blades_to_multivector(&t.blades, &format!("{path}.blades"))?;
            if c.generator_span() > 2 * self.n {
                return Err(Error::parse(
                    format!("{path}.blades"),
                    format!("blade uses a generator beyond e_{}", 2 * self.n),
                ));
            }
            terms.push((monomial(&t.alpha, &t.beta, self.n, &path)?, c));
        }
        BiPoly::from_terms(self.n, terms)
    }

    pub fn from_poly<S: JsonScalar>(p: &HermPoly<S>) -> Self {
        HermPolyDoc {
            n: p.n(),
            terms: p
                .terms()
                .map(|(m, c)| HermTermDoc {
                    alpha: m.alpha.parts().to_vec(),
                    beta: m.beta.parts().to_vec(),
                    blades: multivector_to_blades(c),
                })
                .collect(),
        }
    }
}

/// A resolved tuple: exact for axis tuples, floating otherwise.
#[derive(Clone, Debug)]
pub enum Tuple {
    Exact(StiefelTuple<CQ>),
    Float(StiefelTuple<C64>),
}

impl Tuple {
    pub fn n(&self) -> usize {
        match self {
            Tuple::Exact(t) => t.n(),
            Tuple::Float(t) => t.n(),
        }
    }

    pub fn to_c64(&self) -> StiefelTuple<C64> {
        match self {
            Tuple::Exact(t) => t.to_c64(),
            Tuple::Float(t) => t.clone(),
        }
    }
}

impl TupleDoc {
    pub fn resolve(&self, n: usize) -> Result<Tuple> {
        match self {
            TupleDoc::Axis { axis } => Ok(Tuple::Exact(axis_tuple(n, axis[0], axis[1])?)),
            TupleDoc::Explicit { t, s } => {
                check_len(t.len(), n, "t")?;
                check_len(s.len(), n, "s")?;
                let conv = |v: &[[f64; 2]]| v.iter().map(|c| Complex::new(c[0], c[1])).collect();
                Ok(Tuple::Float(StiefelTuple::new(conv(t), conv(s))?))
            }
            TupleDoc::Haar { haar_seed } => Ok(Tuple::Float(sample_stiefel(n, *haar_seed)?)),
        }
    }

    pub fn from_tuple(tuple: &StiefelTuple<C64>) -> Self {
        let conv = |v: &[C64]| v.iter().map(|c| [c.re, c.im]).collect();
        TupleDoc::Explicit {
            t: conv(tuple.t()),
            s: conv(tuple.s()),
        }
    }
}

/// Parses a polynomial document with exact coefficients.
pub fn parse_polynomial(text: &str) -> Result<BiPoly<CQ>> {
    from_json::<PolynomialDoc>(text)?.to_poly()
}

pub fn serialize_polynomial<S: JsonScalar>(p: &BiPoly<S>) -> String {
    to_json(&PolynomialDoc::from_poly(p))
}

pub fn parse_hermite(text: &str) -> Result<HermiteExpansion<CQ>> {
    from_json::<HermiteDoc>(text)?.to_expansion()
}

pub fn serialize_hermite<S: JsonScalar>(f: &HermiteExpansion<S>) -> String {
    to_json(&HermiteDoc::from_expansion(f))
}

pub fn parse_clifford(text: &str) -> Result<Multivector<CQ>> {
    from_json::<CliffordDoc>(text)?.to_multivector()
}

pub fn serialize_clifford<S: JsonScalar>(x: &Multivector<S>) -> String {
    to_json(&CliffordDoc::from_multivector(x))
}

pub fn parse_herm_polynomial(text: &str) -> Result<HermPoly<CQ>> {
    from_json::<HermPolyDoc>(text)?.to_poly()
}

pub fn serialize_herm_polynomial<S: JsonScalar>(p: &HermPoly<S>) -> String {
    to_json(&HermPolyDoc::from_poly(p))
}

pub fn parse_tuple(text: &str) -> Result<TupleDoc> {
    from_json(text)
}

pub fn serialize_tuple(tuple: &StiefelTuple<C64>) -> String {
    to_json(&TupleDoc::from_tuple(tuple))
}

/// Lower-case hex SHA-256 of `bytes`.
pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::spinor_basis;
    use crate::geometry::cayley_tuple;
    use crate::random::{random_harmonic, random_hmonogenic};
    use crate::scalar::{cq, qf};
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn polynomial_examples() {
        let p = parse_polynomial(r#"{"n":2,"terms":[{"alpha":[1,0],"beta":[0,0],"re":1,"im":0}]}"#).unwrap();
        assert_eq!(p, BiPoly::z(2, 0));
        assert!(parse_polynomial(r#"{"n":2,"terms":[]}"#).unwrap().is_zero());
        let dup = parse_polynomial(
            r#"{"n":2,"terms":[{"alpha":[1,0],"beta":[0,1],"re":1,"im":0},{"alpha":[1,0],"beta":[0,1],"re":0.5,"im":-2}]}"#,
        )
        .unwrap();
        assert_eq!(dup.terms().next().unwrap().1, &Complex::new(qf(3, 2), qf(-2, 1)));
    }

    #[test]
    fn schema_violations_name_the_path() {
        let err = parse_polynomial(r#"{"n":2,"terms":[{"alpha":[1],"beta":[0,0],"re":1,"im":0}]}"#).unwrap_err();
        assert!(
            matches!(err, Error::Parse { ref path, .. } if path == "terms[0].alpha"),
            "{err}"
        );
        let err = parse_polynomial(r#"{"n":2,"terms":[{"alpha":[1,0],"beta":[0,0],"re":"x","im":0}]}"#).unwrap_err();
        assert!(
            matches!(err, Error::Parse { ref path, .. } if path.starts_with("terms[0]")),
            "{err}"
        );
        assert!(parse_polynomial(r#"{"n":2,"terms":[{"alpha":[1,0],"beta":[0,0],"re":1e999,"im":0}]}"#).is_err());
        assert!(parse_polynomial(r#"{"n":2,"terms":[],"extra":1}"#).is_err());
        assert!(
            parse_polynomial(r#"{"n":2,"terms":[{"alpha":[0,0],"beta":[0,0],"re":{"num":1,"den":0},"im":0}]}"#)
                .is_err()
        );
    }

    #[test]
    fn exact_round_trips() {
        let mut rng = ChaCha20Rng::seed_from_u64(4);
        for n in 2..=3 {
            let p = random_harmonic(&mut rng, n, 3).scale(&Complex::new(qf(1, 3), qf(0, 1)));
            let text = serialize_polynomial(&p);
            assert_eq!(parse_polynomial(&text).unwrap(), p);
            assert_eq!(serialize_polynomial(&parse_polynomial(&text).unwrap()), text);
        }
        let f = HermiteExpansion::from_terms(2, [(MultiIndex::new(vec![2, 1]), cq(3, -1))]).unwrap();
        assert_eq!(parse_hermite(&serialize_hermite(&f)).unwrap(), f);
        let x = spinor_basis::<CQ>(2, 1)[1].clone();
        assert_eq!(parse_clifford(&serialize_clifford(&x)).unwrap(), x);
        let h = random_hmonogenic(&mut rng, 2, 1, 2);
        assert_eq!(parse_herm_polynomial(&serialize_herm_polynomial(&h)).unwrap(), h);
    }

    #[test]
    fn tuples() {
        let axis = parse_tuple(r#"{"axis":[0,1]}"#).unwrap().resolve(3).unwrap();
        assert!(matches!(axis, Tuple::Exact(_)));
        let haar = parse_tuple(r#"{"haar_seed":7}"#).unwrap().resolve(2).unwrap();
        let text = serialize_tuple(&haar.to_c64());
        let back = parse_tuple(&text).unwrap().resolve(2).unwrap().to_c64();
        assert_eq!(back.t(), haar.to_c64().t());
        let bad = parse_tuple(r#"{"t":[[1,0],[0,0]],"s":[[1,0],[0,0]]}"#)
            .unwrap()
            .resolve(2);
        assert!(matches!(bad, Err(Error::InvalidTuple(_))), "{bad:?}");
        assert!(parse_tuple(r#"{"axis":[0,0]}"#).unwrap().resolve(2).is_err());
        let _ = cayley_tuple(2, 0);
    }

    #[test]
    fn digest_is_sha256() {
        assert_eq!(
            digest(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
