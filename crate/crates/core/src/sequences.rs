//! Polynomials in `t` over `Z[q^{±1}]` and normalized sequences of them.
//!
//! A normalized sequence has a monic degree-`n` polynomial at every index `n`
//! and starts with the constant `1`. Two sequences are built in: the
//! Chebyshev polynomials with `T_0 = 1`, `T_1 = t`, `T_n = t T_{n-1} - T_{n-2}`
//! (so `T_2 = t^2 - 2`), and the monomials `t^n`. Custom sequences are tables
//! of polynomials, optionally falling back to a built-in sequence for
//! indices the table does not mention.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::LaurentPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("custom sequence: P_{index} must be monic of degree {index}, got {found}")]
    NotNormalized { index: usize, found: String },
    #[error("custom sequence: P_0 must be the constant 1, got {0}")]
    BadConstantTerm(String),
    #[error("custom sequence has no polynomial at index {0} and no fallback")]
    MissingTerm(usize),
    #[error("invalid sequence description: {0}")]
    Parse(String),
}

/// A polynomial `Σ coeffs[i] t^i`. Trailing zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct UniPoly {
    coeffs: Vec<LaurentPoly>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    pub fn constant(c: LaurentPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(LaurentPoly::one(), 1)
    }

    pub fn monomial(c: LaurentPoly, degree: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(LaurentPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Convenience constructor from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| LaurentPoly::constant(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> LaurentPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&LaurentPoly> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(LaurentPoly::is_one)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplication by `t`.
    pub fn shift_up(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(LaurentPoly::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn eval_q1(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(LaurentPoly::eval_q1).collect()
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![LaurentPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::from_coeffs(out)
    }
}

fn fmt_coeff_term(f: &mut fmt::Formatter<'_>, c: &LaurentPoly, deg: usize, first: bool) -> fmt::Result {
    let t_part = match deg {
        0 => String::new(),
        1 => "t".to_string(),
        d => format!("t^{d}"),
    };
    let (sign, body) = match c.as_monomial() {
        Some((k, _)) if k < &BigInt::zero() => ("-", (-c).to_string()),
        _ => ("+", c.to_string()),
    };
    if first {
        if sign == "-" {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    let is_unit = c.is_one() || (-c).is_one();
    if deg == 0 {
        write!(f, "{body}")
    } else if is_unit {
        write!(f, "{t_part}")
    } else if c.num_terms() > 1 {
        write!(f, "({body}){t_part}")
    } else {
        write!(f, "{body}{t_part}")
    }
}

/// Descending powers of `t`, e.g. `t^3 - 3t`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            fmt_coeff_term(f, c, deg, first)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

/// `T_n` with the normalized convention `T_0 = 1`.
pub fn chebyshev(n: usize) -> UniPoly {
    match n {
        0 => UniPoly::one(),
        1 => UniPoly::t(),
        _ => {
            // T_2 = t^2 - 2 breaks the plain recursion from T_0 = 1, so start there.
            let mut prev = UniPoly::t();
            let mut cur = UniPoly::from_ints(&[-2, 0, 1]);
            for _ in 2..n {
                let next = &cur.shift_up() - &prev;
                prev = std::mem::replace(&mut cur, next);
            }
            cur
        }
    }
}

/// The monomial `t^n`.
pub fn power(n: usize) -> UniPoly {
    UniPoly::monomial(LaurentPoly::one(), n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BuiltinSequence {
    Chebyshev,
    Power,
}

impl BuiltinSequence {
    pub fn term(self, n: usize) -> UniPoly {
        match self {
            BuiltinSequence::Chebyshev => chebyshev(n),
            BuiltinSequence::Power => power(n),
        }
    }
}

/// A normalized sequence of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceSpec {
    Chebyshev,
    Power,
    /// Explicit polynomials by index; indices absent from `terms` come from
    /// `fallback`.
    Custom {
        terms: BTreeMap<usize, UniPoly>,
        fallback: Option<BuiltinSequence>,
    },
}

impl SequenceSpec {
    /// Validates and builds a custom sequence.
    pub fn custom(terms: BTreeMap<usize, UniPoly>, fallback: Option<BuiltinSequence>) -> Result<Self, SequenceError> {
        for (&n, p) in &terms {
            if n == 0 {
                if *p != UniPoly::one() {
                    return Err(SequenceError::BadConstantTerm(p.to_string()));
                }
            } else if p.degree() != Some(n) || !p.is_monic() {
                return Err(SequenceError::NotNormalized {
                    index: n,
                    found: p.to_string(),
                });
            }
        }
        if fallback.is_none() && !terms.contains_key(&0) {
            return Err(SequenceError::MissingTerm(0));
        }
        Ok(SequenceSpec::Custom { terms, fallback })
    }

    /// Chebyshev everywhere except the given overrides.
    pub fn chebyshev_with(overrides: impl IntoIterator<Item = (usize, UniPoly)>) -> Result<Self, SequenceError> {
        Self::custom(overrides.into_iter().collect(), Some(BuiltinSequence::Chebyshev))
    }

    /// Monomials everywhere except the given overrides.
    pub fn power_with(overrides: impl IntoIterator<Item = (usize, UniPoly)>) -> Result<Self, SequenceError> {
        Self::custom(overrides.into_iter().collect(), Some(BuiltinSequence::Power))
    }

    pub fn term(&self, n: usize) -> Result<UniPoly, SequenceError> {
        match self {
            SequenceSpec::Chebyshev => Ok(chebyshev(n)),
            SequenceSpec::Power => Ok(power(n)),
            SequenceSpec::Custom { terms, fallback } => match (terms.get(&n), fallback) {
                (Some(p), _) => Ok(p.clone()),
                (None, Some(b)) => Ok(b.term(n)),
                (None, None) => Err(SequenceError::MissingTerm(n)),
            },
        }
    }

    pub fn name(&self) -> String {
        match self {
            SequenceSpec::Chebyshev => "chebyshev".into(),
            SequenceSpec::Power => "power".into(),
            SequenceSpec::Custom { terms, fallback } => {
                let base = match fallback {
                    Some(BuiltinSequence::Chebyshev) => "chebyshev",
                    Some(BuiltinSequence::Power) => "power",
                    None => "table",
                };
                let idx: Vec<String> = terms.keys().map(|k| k.to_string()).collect();
                format!("custom({base}; overrides {})", idx.join(","))
            }
        }
    }

    /// Parses the JSON description of a custom sequence.
    ///
    /// Two shapes are accepted: an array whose `n`-th entry lists the
    /// coefficients of `P_n` from `t^0` upwards, or an object
    /// `{"base": "chebyshev" | "power", "overrides": {"<n>": [...]}}`.
    /// A coefficient is either an integer or a Laurent polynomial object
    /// such as `{"-1": 1, "1": 1}`.
    pub fn from_json(text: &str) -> Result<Self, SequenceError> {
        let file: SequenceFile = serde_json::from_str(text).map_err(|e| SequenceError::Parse(e.to_string()))?;
        match file {
            SequenceFile::Table(rows) => {
                let terms = rows
                    .into_iter()
                    .enumerate()
                    .map(|(n, row)| (n, coeff_row(row)))
                    .collect();
                Self::custom(terms, None)
            }
            SequenceFile::Overrides { base, overrides } => {
                let mut terms = BTreeMap::new();
                for (k, row) in overrides {
                    let n: usize = k
                        .parse()
                        .map_err(|_| SequenceError::Parse(format!("bad index {k:?}")))?;
                    terms.insert(n, coeff_row(row));
                }
                Self::custom(terms, Some(base))
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffEntry {
    Int(i64),
    Poly(LaurentPoly),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SequenceFile {
    Table(Vec<Vec<CoeffEntry>>),
    Overrides {
        base: BuiltinSequence,
        #[serde(default)]
        overrides: BTreeMap<String, Vec<CoeffEntry>>,
    },
}

fn coeff_row(row: Vec<CoeffEntry>) -> UniPoly {
    UniPoly::from_coeffs(
        row.into_iter()
            .map(|c| match c {
                CoeffEntry::Int(i) => LaurentPoly::constant(i),
                CoeffEntry::Poly(p) => p,
            })
            .collect(),
    )
}

/// Coefficients `c_k` with `p = Σ c_k seq[k]`, length `deg(p) + 1`.
///
/// Every `seq[k]` is monic of degree `k`, so the expansion is a triangular
/// back-substitution from the top degree down.
pub fn to_basis(p: &UniPoly, seq: &SequenceSpec) -> Result<Vec<LaurentPoly>, SequenceError> {
    let Some(deg) = p.degree() else {
        return Ok(Vec::new());
    };
    let mut rem = p.clone();
    let mut out = vec![LaurentPoly::zero(); deg + 1];
    for k in (0..=deg).rev() {
        let c = rem.coeff(k);
        if c.is_zero() {
            continue;
        }
        rem = &rem - &seq.term(k)?.scale(&c);
        out[k] = c;
    }
    debug_assert!(rem.is_zero());
    Ok(out)
}

/// Rebuilds `Σ c_k seq[k]`.
pub fn from_basis(coeffs: &[LaurentPoly], seq: &SequenceSpec) -> Result<UniPoly, SequenceError> {
    let mut acc = UniPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &seq.term(k)?.scale(c);
        }
    }
    Ok(acc)
}

/// Structure constants of `seq[m] * seq[n]` in the basis `{seq[k]}`.
pub fn product_in_basis(seq: &SequenceSpec, m: usize, n: usize) -> Result<Vec<LaurentPoly>, SequenceError> {
    let prod = &seq.term(m)? * &seq.term(n)?;
    to_basis(&prod, seq)
}

/// Integer view of a coefficient vector, used when reporting at `q = 1`.
pub fn eval_coeffs_q1(coeffs: &[LaurentPoly]) -> Vec<BigInt> {
    coeffs.iter().map(LaurentPoly::eval_q1).collect()
}

/// True iff every coefficient is the integer `1` or `0`.
pub fn is_zero_one(coeffs: &[LaurentPoly]) -> bool {
    coeffs.iter().all(|c| c.is_zero() || c.is_one())
}
