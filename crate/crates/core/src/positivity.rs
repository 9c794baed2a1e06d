//! Necessary conditions for positivity of twisted lamination bases.
//!
//! Two obstructions are mechanized. On a once-holed torus with curves `z`,
//! `z'` meeting once, expanding `P_1(z') P_n(z)` and rewriting `t = P_1(t) - a`
//! produces a constant term `d` which must lie in `R_+` while `-d` does too,
//! so `d = 0` and then `a = 0`. On the ladder disk the arc sequence must expand
//! with `R_+` coefficients in powers of `t`, checked against the resolved
//! diagrams of `x^k y_n` modulo the boundary ideal.
//!
//! Reports only certify violations or consistency with these necessary
//! conditions; they never claim that a sequence is positive.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::diagram::{build_d1_xy, build_xk_yn, build_zkn};
use crate::laurent::LaurentPoly;
use crate::sequences::{product_in_basis, to_basis, SequenceError, SequenceSpec};
use crate::skein::{normal_form, IdealSpec, Resolver, SkeinError, SkeinVector};

/// Largest `n` for which arc constraints are cross-checked on diagrams.
pub const MAX_DIAGRAM_N: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PositivityError {
    #[error("coefficient list must be nonempty and end in 1 (monic), got {0}")]
    NotMonic(String),
    #[error("n must be at least 1")]
    ZeroIndex,
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Skein(#[from] SkeinError),
}

/// Formal basis fragment of the once-holed torus used in the expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorusSymbol {
    /// `P_n(z)`.
    Pn,
    /// `P_1(z')`.
    P1Prime,
    /// `P_1(z_{1,k})`, `k >= 1`.
    P1Pos(usize),
    /// `P_1(z_{1,-k})`, `k >= 1`.
    P1Neg(usize),
    /// The empty link.
    Unit,
}

impl fmt::Display for TorusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorusSymbol::Pn => write!(f, "P_n(z)"),
            TorusSymbol::P1Prime => write!(f, "P_1(z')"),
            TorusSymbol::P1Pos(k) => write!(f, "P_1(z_{{1,{k}}})"),
            TorusSymbol::P1Neg(k) => write!(f, "P_1(z_{{1,-{k}}})"),
            TorusSymbol::Unit => write!(f, "1"),
        }
    }
}

/// Expands `P_1(z') P_n(z)` where `P_1 = t + a` and `P_n = Σ c_k T_k`.
///
/// Zero coefficients are omitted; the unit coefficient is
/// `d = -a c_0 - Σ_{k>=1} a c_k (q^k + q^-k)`.
pub fn torus_expansion(
    a: &LaurentPoly,
    c: &[LaurentPoly],
) -> Result<BTreeMap<TorusSymbol, LaurentPoly>, PositivityError> {
    if !c.last().is_some_and(LaurentPoly::is_one) {
        let shown: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        return Err(PositivityError::NotMonic(format!("[{}]", shown.join(", "))));
    }
    let mut out = BTreeMap::new();
    let mut put = |s, v: LaurentPoly| {
        if !v.is_zero() {
            out.insert(s, v);
        }
    };
    put(TorusSymbol::Pn, a.clone());
    put(TorusSymbol::P1Prime, c[0].clone());
    let mut d = -(a * &c[0]);
    for (k, ck) in c.iter().enumerate().skip(1) {
        let e = k as i64;
        put(TorusSymbol::P1Pos(k), ck.shift(e));
        put(TorusSymbol::P1Neg(k), ck.shift(-e));
        d -= &(a * &(ck * &(LaurentPoly::q_pow(e) + LaurentPoly::q_pow(-e))));
    }
    put(TorusSymbol::Unit, d);
    Ok(out)
}

/// Constant term `d` of [`torus_expansion`].
pub fn torus_constant(a: &LaurentPoly, c: &[LaurentPoly]) -> Result<LaurentPoly, PositivityError> {
    Ok(torus_expansion(a, c)?.remove(&TorusSymbol::Unit).unwrap_or_default())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    Consistent,
    ForcesAZero,
    Contradiction,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::Consistent => "consistent",
            Conclusion::ForcesAZero => "forces a = 0",
            Conclusion::Contradiction => "contradiction",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Once-holed torus expansion of `P_1(z') P_n(z)`.
    Minimality,
    /// Arc sequence on the ladder disk.
    ArcCondition,
    /// `Q_1(x) Q_1(y)` on the disk with four marked points.
    DiskProduct,
}

/// A quantity required to lie in the positive cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub label: String,
    pub value: LaurentPoly,
    pub requirement: Requirement,
    pub satisfied: bool,
}

/// Membership in the positive cone of the ground ring, serialized as the
/// cone's name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Requirement {
    LaurentCone,
    IntegerCone,
}

impl fmt::Display for Requirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Requirement::LaurentCone => "Z_+[q^±1]",
            Requirement::IntegerCone => "Z_+",
        })
    }
}

impl Serialize for Requirement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Constraint {
    fn new(label: impl Into<String>, value: LaurentPoly) -> Self {
        let satisfied = value.is_positive();
        Constraint {
            label: label.into(),
            value,
            requirement: Requirement::LaurentCone,
            satisfied,
        }
    }

    fn specialize_q1(&self) -> Self {
        let value = LaurentPoly::constant(self.value.eval_q1());
        Constraint {
            label: self.label.clone(),
            satisfied: value.is_positive(),
            value,
            requirement: Requirement::IntegerCone,
        }
    }
}

/// A diagram computation compared with the value the argument relies on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub label: String,
    pub expected: SkeinVector,
    pub computed: SkeinVector,
    pub agrees: bool,
}

impl CrossCheck {
    fn new(label: impl Into<String>, expected: SkeinVector, computed: SkeinVector) -> Self {
        CrossCheck {
            label: label.into(),
            agrees: expected == computed,
            expected,
            computed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionEntry {
    pub symbol: String,
    pub coeff: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstraintReport {
    pub check: CheckKind,
    pub sequence: String,
    pub n: usize,
    /// Constant term of the degree-one member, when it enters the argument.
    pub a: Option<LaurentPoly>,
    /// Coefficients of the degree-`n` member in the basis the argument uses.
    pub c: Vec<LaurentPoly>,
    pub expansion: Vec<ExpansionEntry>,
    pub constraints: Vec<Constraint>,
    pub cross_checks: Vec<CrossCheck>,
    pub specialized_q1: bool,
    pub conclusion: Conclusion,
    #[serde(skip)]
    on_success: Conclusion,
}

impl ConstraintReport {
    fn finish(mut self) -> Self {
        let failed = self.constraints.iter().any(|c| !c.satisfied) || self.cross_checks.iter().any(|c| !c.agrees);
        self.conclusion = if failed {
            Conclusion::Contradiction
        } else {
            self.on_success
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.conclusion != Conclusion::Contradiction
    }

    pub fn violations(&self) -> impl Iterator<Item = &Constraint> {
        self.constraints.iter().filter(|c| !c.satisfied)
    }

    pub fn constraint(&self, label: &str) -> Option<&Constraint> {
        self.constraints.iter().find(|c| c.label == label)
    }

    /// Every value evaluated at `q = 1` and checked against `Z_+`.
    pub fn specialize_q1(&self) -> Self {
        let q1 = |p: &LaurentPoly| LaurentPoly::constant(p.eval_q1());
        ConstraintReport {
            check: self.check,
            sequence: self.sequence.clone(),
            n: self.n,
            a: self.a.as_ref().map(q1),
            c: self.c.iter().map(q1).collect(),
            expansion: self
                .expansion
                .iter()
                .map(|e| ExpansionEntry {
                    symbol: e.symbol.clone(),
                    coeff: q1(&e.coeff),
                })
                .collect(),
            constraints: self.constraints.iter().map(Constraint::specialize_q1).collect(),
            cross_checks: self
                .cross_checks
                .iter()
                .map(|x| CrossCheck::new(x.label.clone(), x.expected.specialize_q1(), x.computed.specialize_q1()))
                .collect(),
            specialized_q1: true,
            conclusion: self.conclusion,
            on_success: self.on_success,
        }
        .finish()
    }
}

pub const LABEL_D: &str = "constant term d";
pub const LABEL_NEG_D: &str = "-d";

fn torus_label(s: TorusSymbol) -> String {
    format!("coefficient of {s}")
}

/// The torus obstruction for `P_1 = t + a` and `P_n = Σ c_k T_k`.
pub fn minimality_constraints(seq: &SequenceSpec, n: usize) -> Result<ConstraintReport, PositivityError> {
    if n == 0 {
        return Err(PositivityError::ZeroIndex);
    }
    let a = seq.term(1)?.coeff(0);
    let c = to_basis(&seq.term(n)?, &SequenceSpec::Chebyshev)?;
    let expansion = torus_expansion(&a, &c)?;
    let d = expansion.get(&TorusSymbol::Unit).cloned().unwrap_or_default();
    let mut constraints: Vec<Constraint> = expansion
        .iter()
        .filter(|(s, _)| **s != TorusSymbol::Unit)
        .map(|(s, v)| Constraint::new(torus_label(*s), v.clone()))
        .collect();
    constraints.push(Constraint::new(LABEL_D, d.clone()));
    constraints.push(Constraint::new(LABEL_NEG_D, -d));
    Ok(ConstraintReport {
        check: CheckKind::Minimality,
        sequence: seq.name(),
        n,
        a: Some(a),
        c,
        expansion: expansion
            .into_iter()
            .map(|(s, coeff)| ExpansionEntry {
                symbol: s.to_string(),
                coeff,
            })
            .collect(),
        constraints,
        cross_checks: Vec::new(),
        specialized_q1: false,
        conclusion: Conclusion::Consistent,
        on_success: Conclusion::Consistent,
    }
    .finish())
}

/// The torus obstruction with `a` left unknown.
///
/// Only `P_n` is read. If every `c_k` lies in `R_+` then, because `c_n = 1`
/// and `q^n + q^-n` is nonzero, `d` and `-d` can both lie in `R_+` only when
/// `a = 0`; the report then concludes [`Conclusion::ForcesAZero`].
pub fn minimality_constraints_symbolic(seq: &SequenceSpec, n: usize) -> Result<ConstraintReport, PositivityError> {
    if n == 0 {
        return Err(PositivityError::ZeroIndex);
    }
    let c = to_basis(&seq.term(n)?, &SequenceSpec::Chebyshev)?;
    let expansion = torus_expansion(&LaurentPoly::zero(), &c)?;
    let constraints = c
        .iter()
        .enumerate()
        .map(|(k, ck)| Constraint::new(format!("c_{k}"), ck.clone()))
        .collect();
    Ok(ConstraintReport {
        check: CheckKind::Minimality,
        sequence: seq.name(),
        n,
        a: None,
        c,
        expansion: expansion
            .into_iter()
            .map(|(s, coeff)| ExpansionEntry {
                symbol: s.to_string(),
                coeff,
            })
            .collect(),
        constraints,
        cross_checks: Vec::new(),
        specialized_q1: false,
        conclusion: Conclusion::ForcesAZero,
        on_success: Conclusion::ForcesAZero,
    }
    .finish())
}

/// Diagram value of `x^k y_n` mod the ladder ideal next to the value
/// `q^-kn z_{k,n}` that the arc argument relies on.
pub fn ladder_cross_check(resolver: &Resolver, k: usize, n: usize) -> Result<CrossCheck, PositivityError> {
    let computed = resolver.resolve_all_mod(&build_xk_yn(k, n).map_err(SkeinError::from)?, &IdealSpec::ladder(n))?;
    let expected = normal_form(&build_zkn(k, n).map_err(SkeinError::from)?)?
        .to_vector()
        .scale(&LaurentPoly::q_pow(-((k * n) as i64)));
    Ok(CrossCheck::new(
        format!("x^{k} y_{n} mod I = q^-{} z_{{{k},{n}}}", k * n),
        expected,
        computed,
    ))
}

/// The arc obstruction: `Q_n = Σ c_k t^k` needs `c_k ∈ R_+`.
///
/// Constraints cover `0 <= k <= min(k_max, n)`. With a resolver and
/// `n <= MAX_DIAGRAM_N`, each `1 <= k <= min(k_max, n)` is also cross-checked
/// on the ladder disk.
pub fn q_constraints(
    seq: &SequenceSpec,
    n: usize,
    k_max: usize,
    verify: Option<&Resolver>,
) -> Result<ConstraintReport, PositivityError> {
    if n == 0 {
        return Err(PositivityError::ZeroIndex);
    }
    let c = to_basis(&seq.term(n)?, &SequenceSpec::Power)?;
    let top = k_max.min(n);
    let mut expansion = Vec::new();
    let mut constraints = Vec::new();
    for (k, ck) in c.iter().enumerate().take(top + 1) {
        constraints.push(Constraint::new(format!("c_{k}"), ck.clone()));
        let coeff = ck.shift(-((k * n) as i64));
        if !coeff.is_zero() {
            expansion.push(ExpansionEntry {
                symbol: format!("z_{{{k},{n}}}"),
                coeff,
            });
        }
    }
    let mut cross_checks = Vec::new();
    if let Some(resolver) = verify.filter(|_| n <= MAX_DIAGRAM_N) {
        for k in 1..=top {
            cross_checks.push(ladder_cross_check(resolver, k, n)?);
        }
    }
    Ok(ConstraintReport {
        check: CheckKind::ArcCondition,
        sequence: seq.name(),
        n,
        a: None,
        c,
        expansion,
        constraints,
        cross_checks,
        specialized_q1: false,
        conclusion: Conclusion::Consistent,
        on_success: Conclusion::Consistent,
    }
    .finish())
}

/// `Q_1(x) Q_1(y) = a Q_1(x) + a Q_1(y) - a^2` modulo the boundary arcs of
/// the disk with four marked points, where `Q_1 = t + a`.
pub fn d1_constraints(seq: &SequenceSpec, verify: Option<&Resolver>) -> Result<ConstraintReport, PositivityError> {
    let a = seq.term(1)?.coeff(0);
    let unit = -(&a * &a);
    let constraints = vec![
        Constraint::new("coefficient of Q_1(x)", a.clone()),
        Constraint::new("coefficient of Q_1(y)", a.clone()),
        Constraint::new("constant term -a^2", unit.clone()),
    ];
    let expansion = [("Q_1(x)", a.clone()), ("Q_1(y)", a.clone()), ("1", unit)]
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(s, coeff)| ExpansionEntry {
            symbol: s.into(),
            coeff,
        })
        .collect();
    let mut cross_checks = Vec::new();
    if let Some(resolver) = verify {
        let d = build_d1_xy();
        let computed = resolver.resolve_all_mod(&d, &IdealSpec::all_boundary(d.surface()))?;
        cross_checks.push(CrossCheck::new(
            "x y mod boundary arcs = 0",
            SkeinVector::zero(),
            computed,
        ));
    }
    Ok(ConstraintReport {
        check: CheckKind::DiskProduct,
        sequence: seq.name(),
        n: 1,
        a: Some(a),
        c: Vec::new(),
        expansion,
        constraints,
        cross_checks,
        specialized_q1: false,
        conclusion: Conclusion::Consistent,
        on_success: Conclusion::Consistent,
    }
    .finish())
}

/// Structure constants of one product `seq[m] seq[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub m: usize,
    pub n: usize,
    pub coeffs: Vec<LaurentPoly>,
    pub all_positive: bool,
}

impl AuditRow {
    pub fn specialize_q1(&self) -> Self {
        let coeffs: Vec<LaurentPoly> = self.coeffs.iter().map(|c| LaurentPoly::constant(c.eval_q1())).collect();
        AuditRow {
            m: self.m,
            n: self.n,
            all_positive: coeffs.iter().all(LaurentPoly::is_positive),
            coeffs,
        }
    }
}

/// Expands every product `seq[m] seq[n]`, `1 <= m, n <= max_n`, in the
/// basis `{seq[k]}`. Rows come out ordered by `(m, n)`.
pub fn structure_constant_audit(seq: &SequenceSpec, max_n: usize) -> Result<Vec<AuditRow>, SequenceError> {
    let pairs: Vec<(usize, usize)> = (1..=max_n).flat_map(|m| (1..=max_n).map(move |n| (m, n))).collect();
    pairs
        .into_par_iter()
        .map(|(m, n)| {
            let coeffs = product_in_basis(seq, m, n)?;
            Ok(AuditRow {
                m,
                n,
                all_positive: coeffs.iter().all(LaurentPoly::is_positive),
                coeffs,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::UniPoly;

    fn lp(n: i64) -> LaurentPoly {
        LaurentPoly::constant(n)
    }

    fn qq(e: i64) -> LaurentPoly {
        LaurentPoly::q_pow(e)
    }

    fn p1_plus_one() -> SequenceSpec {
        SequenceSpec::chebyshev_with([(1, UniPoly::from_ints(&[1, 1]))]).unwrap()
    }

    #[test]
    fn expansion_examples() {
        let e = torus_expansion(&lp(0), &[lp(0), lp(0), lp(1)]).unwrap();
        assert_eq!(
            e,
            BTreeMap::from([(TorusSymbol::P1Pos(2), qq(2)), (TorusSymbol::P1Neg(2), qq(-2))])
        );

        let e = torus_expansion(&lp(1), &[lp(0), lp(1)]).unwrap();
        assert_eq!(
            e,
            BTreeMap::from([
                (TorusSymbol::Pn, lp(1)),
                (TorusSymbol::P1Pos(1), qq(1)),
                (TorusSymbol::P1Neg(1), qq(-1)),
                (TorusSymbol::Unit, -(qq(1) + qq(-1))),
            ])
        );

        let e = torus_expansion(&lp(0), &[lp(0), lp(1)]).unwrap();
        assert_eq!(
            e,
            BTreeMap::from([(TorusSymbol::P1Pos(1), qq(1)), (TorusSymbol::P1Neg(1), qq(-1))])
        );

        assert!(matches!(
            torus_expansion(&lp(0), &[lp(1), lp(2)]),
            Err(PositivityError::NotMonic(_))
        ));
        assert!(torus_expansion(&lp(0), &[]).is_err());
    }

    #[test]
    fn minimality_examples() {
        let r = minimality_constraints(&SequenceSpec::Chebyshev, 3).unwrap();
        assert_eq!(r.conclusion, Conclusion::Consistent);
        assert_eq!(r.c, vec![lp(0), lp(0), lp(0), lp(1)]);

        let r = minimality_constraints(&SequenceSpec::Power, 2).unwrap();
        assert_eq!(r.c, vec![lp(2), lp(0), lp(1)]);
        assert_eq!(r.conclusion, Conclusion::Consistent);

        // P_1 = t + 1 = T_1 + T_0, so c = (1, 1) and d = -1 - q - q^-1
        let r = minimality_constraints(&p1_plus_one(), 1).unwrap();
        assert_eq!(r.conclusion, Conclusion::Contradiction);
        assert_eq!(r.c, vec![lp(1), lp(1)]);
        let d = r.constraint(LABEL_D).unwrap();
        assert!(!d.satisfied);
        assert_eq!(d.value, -(lp(1) + qq(1) + qq(-1)));
        assert_eq!(r.violations().count(), 1);

        let r = minimality_constraints(&p1_plus_one(), 2).unwrap();
        assert_eq!(r.constraint(LABEL_D).unwrap().value, -(qq(2) + qq(-2)));
        assert_eq!(r.conclusion, Conclusion::Contradiction);
    }

    #[test]
    fn symbolic_minimality() {
        let r = minimality_constraints_symbolic(&SequenceSpec::Power, 4).unwrap();
        assert_eq!(r.conclusion, Conclusion::ForcesAZero);
        let bad = SequenceSpec::chebyshev_with([(2, UniPoly::from_ints(&[-3, 0, 1]))]).unwrap();
        let r = minimality_constraints_symbolic(&bad, 2).unwrap();
        assert_eq!(r.conclusion, Conclusion::Contradiction);
        assert_eq!(r.violations().map(|c| c.label.as_str()).collect::<Vec<_>>(), ["c_0"]);
    }

    #[test]
    fn arc_examples() {
        let r = q_constraints(&SequenceSpec::Power, 2, 2, None).unwrap();
        assert_eq!(r.c, vec![lp(0), lp(0), lp(1)]);
        assert_eq!(r.conclusion, Conclusion::Consistent);

        let seq = SequenceSpec::power_with([(2, UniPoly::from_ints(&[-1, 0, 1]))]).unwrap();
        let r = q_constraints(&seq, 2, 2, None).unwrap();
        assert_eq!(r.conclusion, Conclusion::Contradiction);
        assert_eq!(r.constraint("c_0").unwrap().value, lp(-1));

        let r = q_constraints(&SequenceSpec::Chebyshev, 2, 2, None).unwrap();
        assert_eq!(r.conclusion, Conclusion::Contradiction);
        assert_eq!(r.constraint("c_0").unwrap().value, lp(-2));
    }

    #[test]
    fn arc_cross_checks() {
        let resolver = Resolver::default();
        for n in 1..=3 {
            let r = q_constraints(&SequenceSpec::Power, n, n, Some(&resolver)).unwrap();
            assert_eq!(r.cross_checks.len(), n);
            assert!(r.cross_checks.iter().all(|c| c.agrees), "{r:?}");
            assert!(r.passed());
        }
        // beyond the diagram range only coefficients are read
        let r = q_constraints(&SequenceSpec::Power, 6, 6, Some(&resolver)).unwrap();
        assert!(r.cross_checks.is_empty());
        assert_eq!(r.constraints.len(), 7);
    }

    #[test]
    fn d1() {
        let r = d1_constraints(&SequenceSpec::Power, Some(&Resolver::default())).unwrap();
        assert_eq!(r.conclusion, Conclusion::Consistent);
        assert!(r.cross_checks[0].agrees);
        let seq = SequenceSpec::power_with([(1, UniPoly::from_ints(&[2, 1]))]).unwrap();
        let r = d1_constraints(&seq, None).unwrap();
        assert_eq!(r.conclusion, Conclusion::Contradiction);
        assert_eq!(r.constraint("constant term -a^2").unwrap().value, lp(-4));
    }

    #[test]
    fn q1_specialization() {
        let r = minimality_constraints(&p1_plus_one(), 1).unwrap().specialize_q1();
        assert!(r.specialized_q1);
        assert_eq!(r.constraint(LABEL_D).unwrap().value, lp(-3));
        assert_eq!(r.constraint(LABEL_D).unwrap().requirement, Requirement::IntegerCone);
        assert_eq!(r.conclusion, Conclusion::Contradiction);
        let r = minimality_constraints(&SequenceSpec::Chebyshev, 5)
            .unwrap()
            .specialize_q1();
        assert_eq!(r.conclusion, Conclusion::Consistent);
    }

    #[test]
    fn audits() {
        assert!(structure_constant_audit(&SequenceSpec::Chebyshev, 6)
            .unwrap()
            .iter()
            .all(|r| r.all_positive));
        assert!(structure_constant_audit(&SequenceSpec::Power, 6)
            .unwrap()
            .iter()
            .all(|r| r.all_positive));
        let seq = SequenceSpec::chebyshev_with([(1, UniPoly::t()), (2, UniPoly::from_ints(&[0, -1, 1]))]).unwrap();
        let rows = structure_constant_audit(&seq, 2).unwrap();
        let row = rows.iter().find(|r| (r.m, r.n) == (1, 2)).unwrap();
        assert!(!row.all_positive);
        assert!(row.coeffs.contains(&lp(-1)));
        assert_eq!(
            rows.iter().map(|r| (r.m, r.n)).collect::<Vec<_>>(),
            [(1, 1), (1, 2), (2, 1), (2, 2)]
        );
    }

    #[test]
    fn report_json_fields() {
        let r = minimality_constraints(&SequenceSpec::Chebyshev, 1).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        for k in [
            "check",
            "sequence",
            "n",
            "a",
            "c",
            "expansion",
            "constraints",
            "cross_checks",
            "specialized_q1",
            "conclusion",
        ] {
            assert!(keys.contains(&k), "{k}");
        }
        assert_eq!(v["conclusion"], "consistent");
        assert_eq!(v["constraints"][0]["requirement"], "Z_+[q^±1]");
    }
}
