//! Exact truth-value algebra for the five residuated-lattice structures:
//! Boolean, Gödel, Goguen (product), Łukasiewicz, and the finite chain
//! `{a_0, ..., a_n}`. All five are linearly ordered, so meet and join are
//! min and max; tensor and residuum differ per structure.

use crate::{FzaError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::str::FromStr;

/// Which residuated-lattice structure truth values live in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum LatticeKind {
    Boolean,
    Godel,
    Product,
    Lukasiewicz,
    /// Carrier `{a_0, ..., a_n}` represented as indices `0..=n`; requires n >= 1.
    Chain(u32),
}

/// An exact truth degree: a rational in [0,1] for the unit-interval
/// structures, or an integer index for a chain. Values do not carry their
/// kind; the kind travels with the automaton.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TruthValue {
    Rational(BigRational),
    Chain(u32),
}

impl TruthValue {
    pub fn rational(num: i64, den: i64) -> Self {
        TruthValue::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn chain(index: u32) -> Self {
        TruthValue::Chain(index)
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruthValue::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            TruthValue::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            TruthValue::Chain(k) => write!(f, "a{k}"),
        }
    }
}

impl LatticeKind {
    pub fn zero(&self) -> TruthValue {
        match self {
            LatticeKind::Chain(_) => TruthValue::Chain(0),
            _ => TruthValue::Rational(BigRational::zero()),
        }
    }

    pub fn one(&self) -> TruthValue {
        match self {
            LatticeKind::Chain(n) => TruthValue::Chain(*n),
            _ => TruthValue::Rational(BigRational::one()),
        }
    }

    pub fn is_one(&self, v: &TruthValue) -> bool {
        *v == self.one()
    }

    pub fn is_zero(&self, v: &TruthValue) -> bool {
        *v == self.zero()
    }

    /// Checks that `v` belongs to this lattice's carrier.
    pub fn check_member(&self, v: &TruthValue) -> Result<()> {
        match (self, v) {
            (LatticeKind::Boolean, TruthValue::Rational(r)) => {
                if r.is_zero() || r.is_one() {
                    Ok(())
                } else {
                    Err(FzaError::IncompatibleValue(format!(
                        "{v} is not in {{0, 1}}"
                    )))
                }
            }
            (LatticeKind::Godel | LatticeKind::Product | LatticeKind::Lukasiewicz, TruthValue::Rational(r)) => {
                if *r >= BigRational::zero() && *r <= BigRational::one() {
                    Ok(())
                } else {
                    Err(FzaError::IncompatibleValue(format!(
                        "{v} is outside [0, 1]"
                    )))
                }
            }
            (LatticeKind::Chain(n), TruthValue::Chain(k)) => {
                if k <= n {
                    Ok(())
                } else {
                    Err(FzaError::IncompatibleValue(format!(
                        "a{k} is outside the chain 0..={n}"
                    )))
                }
            }
            _ => Err(FzaError::IncompatibleValue(format!(
                "{v} has the wrong representation for this lattice"
            ))),
        }
    }

    fn pair<'a>(
        &self,
        x: &'a TruthValue,
        y: &'a TruthValue,
    ) -> Result<(&'a TruthValue, &'a TruthValue)> {
        self.check_member(x)?;
        self.check_member(y)?;
        Ok((x, y))
    }

    /// Lattice meet; min on every structure used here.
    pub fn meet(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue> {
        let (x, y) = self.pair(x, y)?;
        Ok(if self.le(x, y) { x.clone() } else { y.clone() })
    }

    /// Lattice join; max on every structure used here.
    pub fn join(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue> {
        let (x, y) = self.pair(x, y)?;
        Ok(if self.le(x, y) { y.clone() } else { x.clone() })
    }

    /// The monoid multiplication of the structure.
    pub fn tensor(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue> {
        self.pair(x, y)?;
        Ok(match (self, x, y) {
            (LatticeKind::Boolean | LatticeKind::Godel, _, _) => {
                if self.le(x, y) { x.clone() } else { y.clone() }
            }
            (LatticeKind::Product, TruthValue::Rational(a), TruthValue::Rational(b)) => {
                TruthValue::Rational(a * b)
            }
            (LatticeKind::Lukasiewicz, TruthValue::Rational(a), TruthValue::Rational(b)) => {
                let s = a + b - BigRational::one();
                if s < BigRational::zero() {
                    TruthValue::Rational(BigRational::zero())
                } else {
                    TruthValue::Rational(s)
                }
            }
            (LatticeKind::Chain(n), TruthValue::Chain(k), TruthValue::Chain(l)) => {
                TruthValue::Chain((k + l).saturating_sub(*n))
            }
            _ => unreachable!("check_member admits only matching representations"),
        })
    }

    /// The residuum, the unique adjoint of tensor.
    pub fn residuum(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue> {
        self.pair(x, y)?;
        Ok(match (self, x, y) {
            (LatticeKind::Boolean, _, _) | (LatticeKind::Godel, _, _) => {
                if self.le(x, y) {
                    self.one()
                } else {
                    y.clone()
                }
            }
            (LatticeKind::Product, TruthValue::Rational(a), TruthValue::Rational(b)) => {
                if a <= b {
                    self.one()
                } else {
                    TruthValue::Rational(b / a)
                }
            }
            (LatticeKind::Lukasiewicz, TruthValue::Rational(a), TruthValue::Rational(b)) => {
                let s = BigRational::one() - a + b;
                if s > BigRational::one() {
                    self.one()
                } else {
                    TruthValue::Rational(s)
                }
            }
            (LatticeKind::Chain(n), TruthValue::Chain(k), TruthValue::Chain(l)) => {
                TruthValue::Chain((*n - *k + *l).min(*n))
            }
            _ => unreachable!("check_member admits only matching representations"),
        })
    }

    /// Biresiduum: `(x -> y) ∧ (y -> x)`.
    pub fn biresiduum(&self, x: &TruthValue, y: &TruthValue) -> Result<TruthValue> {
        let a = self.residuum(x, y)?;
        let b = self.residuum(y, x)?;
        self.meet(&a, &b)
    }

    /// Carrier order; total on all five structures.
    pub fn le(&self, x: &TruthValue, y: &TruthValue) -> bool {
        match (x, y) {
            (TruthValue::Rational(a), TruthValue::Rational(b)) => a <= b,
            (TruthValue::Chain(a), TruthValue::Chain(b)) => a <= b,
            _ => false,
        }
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeKind::Boolean => write!(f, "boolean"),
            LatticeKind::Godel => write!(f, "godel"),
            LatticeKind::Product => write!(f, "product"),
            LatticeKind::Lukasiewicz => write!(f, "lukasiewicz"),
            LatticeKind::Chain(n) => write!(f, "chain:{n}"),
        }
    }
}

impl FromStr for LatticeKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "boolean" => Ok(LatticeKind::Boolean),
            "godel" => Ok(LatticeKind::Godel),
            "product" => Ok(LatticeKind::Product),
            "lukasiewicz" => Ok(LatticeKind::Lukasiewicz),
            _ => {
                if let Some(n) = s.strip_prefix("chain:") {
                    let n: u32 = n
                        .parse()
                        .map_err(|_| format!("bad chain size `{n}`"))?;
                    if n == 0 {
                        return Err("chain size must be >= 1".into());
                    }
                    Ok(LatticeKind::Chain(n))
                } else {
                    Err(format!("unknown lattice kind `{s}`"))
                }
            }
        }
    }
}

/// Parses a truth value from the shared textual syntax: integers, decimal
/// literals, fractions `p/q`, or `a<k>` / plain integers for chains.
/// Decimals are converted to exact rationals, never to floats.
pub fn parse_value(s: &str, kind: LatticeKind) -> Result<TruthValue> {
    let v = parse_value_raw(s, kind)?;
    kind.check_member(&v)?;
    Ok(v)
}

fn parse_value_raw(s: &str, kind: LatticeKind) -> Result<TruthValue> {
    let err = |msg: String| FzaError::Semantic(msg);
    if let LatticeKind::Chain(_) = kind {
        let digits = s.strip_prefix('a').unwrap_or(s);
        let k: u32 = digits
            .parse()
            .map_err(|_| err(format!("bad chain value `{s}`")))?;
        return Ok(TruthValue::Chain(k));
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.parse().map_err(|_| err(format!("bad fraction `{s}`")))?;
        let q: BigInt = q.parse().map_err(|_| err(format!("bad fraction `{s}`")))?;
        if q.is_zero() {
            return Err(err(format!("zero denominator in `{s}`")));
        }
        return Ok(TruthValue::Rational(BigRational::new(p, q)));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let int = if int.is_empty() { "0" } else { int };
        let combined = format!("{int}{frac}");
        let num: BigInt = combined
            .parse()
            .map_err(|_| err(format!("bad decimal `{s}`")))?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(TruthValue::Rational(BigRational::new(num, den)));
    }
    let n: BigInt = s.parse().map_err(|_| err(format!("bad value `{s}`")))?;
    Ok(TruthValue::Rational(BigRational::from_integer(n)))
}
