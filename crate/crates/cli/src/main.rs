//! `skeinpos`: verify skein identities and positivity constraints.
//!
//! Exit status is 0 when every check passes, 1 when one fails and 2 for
//! usage errors, including diagrams over the crossing cap.

mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;
use skeinpos_core::diagram::{
    build_core_stack, build_d1_xy, build_kink, build_theta_over_cores, build_xk_yn, build_zkn, Sign,
};
use skeinpos_core::positivity::{
    d1_constraints, minimality_constraints, minimality_constraints_symbolic, q_constraints, structure_constant_audit,
    MAX_DIAGRAM_N,
};
use skeinpos_core::skein::{normal_form, BasisElement, DEFAULT_CROSSING_CAP};
use skeinpos_core::{Diagram, IdealSpec, LaurentPoly, Resolver, SequenceSpec, SkeinError, SkeinVector};

use report::{add_audit_row, add_constraints, status, vector_json, Format, Report};

#[derive(Parser)]
#[command(name = "skeinpos", version, about = "Exact skein computations and positivity checks")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Refuse diagrams with more crossings than this.
    #[arg(long, global = true, default_value_t = DEFAULT_CROSSING_CAP)]
    crossing_cap: usize,
    /// Worker threads for state expansion and audits.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Evaluate every coefficient at q = 1.
    #[arg(long, global = true)]
    q1: bool,
    /// `chebyshev`, `power`, or a JSON file describing a custom sequence.
    #[arg(long, global = true)]
    seq: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check theta_0 • P_n(z) = q^n theta_n + q^-n theta_-n on the marked annulus.
    VerifyEq1 {
        #[arg(long)]
        n: usize,
        /// Check every index from 1 to n.
        #[arg(long)]
        all: bool,
    },
    /// Check x^k y_n = q^-kn z_{k,n} modulo the ladder ideal.
    VerifyZkn {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Check that x y vanishes modulo the boundary arcs of the disk with four marked points.
    VerifyD1,
    /// Structure constants of P_m P_n for 1 <= m, n <= max-n.
    Audit {
        #[arg(long)]
        max_n: usize,
    },
    /// The once-holed torus obstruction for P_1 and P_n.
    Minimality {
        #[arg(long)]
        n: usize,
        /// Leave the constant term of P_1 unknown.
        #[arg(long)]
        symbolic: bool,
    },
    /// The arc obstruction for Q_n, cross-checked on the ladder disk.
    ArcConstraints {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k_max: Option<usize>,
        /// Skip the diagram cross-check.
        #[arg(long)]
        no_diagrams: bool,
    },
    /// Resolve a builder diagram: theta:K, cores:K, xkyn:K,N, zkn:K,N, d1, kink:+ or kink:-.
    Resolve {
        diagram: String,
        /// Quotient to apply on disks: `ladder` or `boundary`.
        #[arg(long)]
        ideal: Option<String>,
    },
}

enum Failure {
    Usage(String),
}

impl From<SkeinError> for Failure {
    fn from(e: SkeinError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

struct Ctx {
    resolver: Resolver,
    q1: bool,
}

impl Ctx {
    fn show(&self, v: &SkeinVector) -> SkeinVector {
        if self.q1 {
            v.specialize_q1()
        } else {
            v.clone()
        }
    }
}

fn load_seq(arg: Option<&str>, default: SequenceSpec) -> Result<SequenceSpec, Failure> {
    match arg {
        None => Ok(default),
        Some("chebyshev") => Ok(SequenceSpec::Chebyshev),
        Some("power") => Ok(SequenceSpec::Power),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?;
            SequenceSpec::from_json(&text).map_err(|e| usage(format!("{path}: {e}")))
        }
    }
}

fn check_cap(ctx: &Ctx, crossings: usize) -> Result<(), Failure> {
    if crossings > ctx.resolver.crossing_cap {
        return Err(SkeinError::CrossingCapExceeded {
            crossings,
            cap: ctx.resolver.crossing_cap,
        }
        .into());
    }
    Ok(())
}

fn verify_eq1(ctx: &Ctx, seq: &SequenceSpec, n: usize, all: bool) -> Result<Report, Failure> {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    check_cap(ctx, n)?;
    let mut r = Report::new("verify-eq1", vec!["n", "lhs", "rhs", "status"]);
    r.set("sequence", json!(seq.name()));
    r.line("identity: theta_0 • P_n(z) = q^n theta_n + q^-n theta_-n in the marked annulus");
    r.line(format!("sequence: {}", seq.name()));
    for m in if all { 1..=n } else { n..=n } {
        let p = seq.term(m).map_err(|e| usage(e.to_string()))?;
        let lhs = ctx.show(&ctx.resolver.theta_bullet(&p)?);
        let e = m as i64;
        let mut rhs = SkeinVector::term(BasisElement::AioArc(e), LaurentPoly::q_pow(e));
        rhs.add_term(BasisElement::AioArc(-e), LaurentPoly::q_pow(-e));
        let rhs = ctx.show(&rhs);
        let ok = lhs == rhs;
        r.line(format!("n = {m}"));
        r.line(format!("  lhs: {lhs}"));
        r.line(format!("  rhs: {rhs}"));
        r.line(format!("  {}", status(ok)));
        r.row(vec![m.to_string(), lhs.to_string(), rhs.to_string(), status(ok).into()]);
        r.push(
            "cases",
            json!({ "n": m, "lhs": vector_json(&lhs), "rhs": vector_json(&rhs), "passed": ok }),
        );
        r.fail_if(!ok);
    }
    Ok(r)
}

fn verify_zkn(ctx: &Ctx, k: usize, n: usize) -> Result<Report, Failure> {
    if k == 0 || n == 0 || k > n {
        return Err(usage("need 1 <= k <= n"));
    }
    check_cap(ctx, k * n)?;
    let d = build_xk_yn(k, n).map_err(SkeinError::from)?;
    let (lhs, stats) = ctx.resolver.resolve_with_stats(&d, Some(&IdealSpec::ladder(n)))?;
    let z = normal_form(&build_zkn(k, n).map_err(SkeinError::from)?)?.to_vector();
    let rhs = z.scale(&LaurentPoly::q_pow(-((k * n) as i64)));
    let (lhs, rhs) = (ctx.show(&lhs), ctx.show(&rhs));
    let ok = lhs == rhs;
    let mut r = Report::new("verify-zkn", vec!["k", "n", "lhs", "rhs", "states", "status"]);
    r.line(format!(
        "identity: x^k y_n = q^-kn z_{{k,n}} mod (gamma_0, ..., gamma_{{n-1}}) on the ladder disk, k = {k}, n = {n}"
    ));
    r.line(format!("z_{{{k},{n}}} = {z}"));
    r.line(format!("lhs: {lhs}"));
    r.line(format!("rhs: {rhs}"));
    r.line(format!(
        "states: {} ({} with a trivial arc, {} in the ideal)",
        stats.states, stats.zero_by_trivial_arc, stats.zero_by_ideal
    ));
    r.row(vec![
        k.to_string(),
        n.to_string(),
        lhs.to_string(),
        rhs.to_string(),
        stats.states.to_string(),
        status(ok).into(),
    ]);
    r.set("k", json!(k));
    r.set("n", json!(n));
    r.set("lhs", vector_json(&lhs));
    r.set("rhs", vector_json(&rhs));
    r.set("stats", serde_json::to_value(&stats).expect("stats serialize"));
    r.fail_if(!ok);
    Ok(r)
}

fn verify_d1(ctx: &Ctx, seq: &SequenceSpec) -> Result<Report, Failure> {
    let d = build_d1_xy();
    let v = ctx.show(
        &ctx.resolver
            .resolve_all_mod(&d, &IdealSpec::all_boundary(d.surface()))?,
    );
    let mut r = Report::new("verify-d1", vec!["label", "value", "requirement", "status"]);
    r.line("identity: x y = 0 mod the boundary arcs of the disk with marked points p0, p1, p2, q1");
    r.line(format!("x y mod boundary: {v}"));
    r.set("xy_mod_boundary", vector_json(&v));
    r.fail_if(!v.is_zero());
    let mut c = d1_constraints(seq, Some(&ctx.resolver)).map_err(|e| usage(e.to_string()))?;
    if ctx.q1 {
        c = c.specialize_q1();
    }
    add_constraints(
        &mut r,
        "Q_1(x) Q_1(y) = a Q_1(x) + a Q_1(y) - a^2 mod boundary, Q_1 = t + a",
        &c,
    );
    Ok(r)
}

fn audit(ctx: &Ctx, seq: &SequenceSpec, max_n: usize) -> Result<Report, Failure> {
    if max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    let rows = structure_constant_audit(seq, max_n).map_err(|e| usage(e.to_string()))?;
    let mut r = Report::new("audit", vec!["m", "n", "coefficients", "status"]);
    r.line(format!(
        "structure constants of P_m P_n in the basis (P_0, P_1, ...), sequence {}",
        seq.name()
    ));
    r.set("sequence", json!(seq.name()));
    for row in rows {
        add_audit_row(&mut r, &if ctx.q1 { row.specialize_q1() } else { row });
    }
    Ok(r)
}

fn minimality(ctx: &Ctx, seq: &SequenceSpec, n: usize, symbolic: bool) -> Result<Report, Failure> {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let c = if symbolic {
        minimality_constraints_symbolic(seq, n)
    } else {
        minimality_constraints(seq, n)
    }
    .map_err(|e| usage(e.to_string()))?;
    let c = if ctx.q1 { c.specialize_q1() } else { c };
    let mut r = Report::new("minimality", vec!["label", "value", "requirement", "status"]);
    add_constraints(
        &mut r,
        "P_1(z') P_n(z) = a P_n(z) + c_0 P_1(z') + Σ c_k (q^k P_1(z_{1,k}) + q^-k P_1(z_{1,-k})) + d, P_1 = t + a, P_n = Σ c_k T_k",
        &c,
    );
    Ok(r)
}

fn arc_constraints(
    ctx: &Ctx,
    seq: &SequenceSpec,
    n: usize,
    k_max: Option<usize>,
    diagrams: bool,
) -> Result<Report, Failure> {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let k_max = k_max.unwrap_or(n);
    if diagrams && n <= MAX_DIAGRAM_N {
        check_cap(ctx, k_max.min(n) * n)?;
    }
    let c = q_constraints(seq, n, k_max, diagrams.then_some(&ctx.resolver)).map_err(|e| match e {
        skeinpos_core::positivity::PositivityError::Skein(s) => Failure::from(s),
        e => usage(e.to_string()),
    })?;
    let c = if ctx.q1 { c.specialize_q1() } else { c };
    let mut r = Report::new("arc-constraints", vec!["label", "value", "requirement", "status"]);
    add_constraints(
        &mut r,
        "Q_n(x) y_n = Σ c_k q^-kn z_{k,n} mod I on the ladder disk, Q_n = Σ c_k t^k",
        &c,
    );
    Ok(r)
}

fn parse_pair(s: &str) -> Result<(usize, usize), Failure> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| usage(format!("expected K,N, got {s:?}")))?;
    let p = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| usage(format!("not a number: {x:?}")))
    };
    Ok((p(a)?, p(b)?))
}

fn parse_diagram(spec: &str) -> Result<(Diagram, Option<usize>), Failure> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let num = || {
        arg.parse::<usize>()
            .map_err(|_| usage(format!("expected a number after {kind}:")))
    };
    let bad = |e: skeinpos_core::DiagramError| usage(e.to_string());
    Ok(match kind {
        "theta" => (build_theta_over_cores(num()?), None),
        "cores" => (build_core_stack(num()?), None),
        "xkyn" => {
            let (k, n) = parse_pair(arg)?;
            (build_xk_yn(k, n).map_err(bad)?, Some(n))
        }
        "zkn" => {
            let (k, n) = parse_pair(arg)?;
            (build_zkn(k, n).map_err(bad)?, Some(n))
        }
        "d1" => (build_d1_xy(), Some(1)),
        "kink" => match arg {
            "+" => (build_kink(Sign::Positive), None),
            "-" => (build_kink(Sign::Negative), None),
            _ => return Err(usage("kink takes + or -")),
        },
        _ => return Err(usage(format!("unknown diagram {spec:?}"))),
    })
}

fn resolve(ctx: &Ctx, spec: &str, ideal: Option<&str>) -> Result<Report, Failure> {
    let (d, ladder_n) = parse_diagram(spec)?;
    check_cap(ctx, d.num_crossings())?;
    let ideal = match ideal {
        None => None,
        Some("boundary") => Some(IdealSpec::all_boundary(d.surface())),
        Some("ladder") => Some(IdealSpec::ladder(
            ladder_n.ok_or_else(|| usage("the ladder ideal needs a ladder disk"))?,
        )),
        Some(other) => return Err(usage(format!("unknown ideal {other:?}"))),
    };
    let (v, stats) = ctx.resolver.resolve_with_stats(&d, ideal.as_ref())?;
    let v = ctx.show(&v);
    let mut r = Report::new("resolve", vec!["basis", "coeff"]);
    r.line(format!(
        "{spec}: {} crossings, {} states",
        stats.crossings, stats.states
    ));
    r.line(v.to_string());
    for (b, c) in v.iter() {
        r.row(vec![b.to_string(), c.to_string()]);
    }
    r.set("diagram", d.to_json());
    r.set("value", vector_json(&v));
    r.set("stats", serde_json::to_value(&stats).expect("stats serialize"));
    Ok(r)
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    if cli.threads == Some(0) {
        return Err(usage("--threads must be positive"));
    }
    if let Some(t) = cli.threads {
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let ctx = Ctx {
        resolver: Resolver {
            crossing_cap: cli.crossing_cap,
            threads: None,
        },
        q1: cli.q1,
    };
    let seq = cli.seq.as_deref();
    match &cli.command {
        Command::VerifyEq1 { n, all } => verify_eq1(&ctx, &load_seq(seq, SequenceSpec::Chebyshev)?, *n, *all),
        Command::VerifyZkn { k, n } => verify_zkn(&ctx, *k, *n),
        Command::VerifyD1 => verify_d1(&ctx, &load_seq(seq, SequenceSpec::Power)?),
        Command::Audit { max_n } => audit(&ctx, &load_seq(seq, SequenceSpec::Chebyshev)?, *max_n),
        Command::Minimality { n, symbolic } => {
            minimality(&ctx, &load_seq(seq, SequenceSpec::Chebyshev)?, *n, *symbolic)
        }
        Command::ArcConstraints { n, k_max, no_diagrams } => {
            arc_constraints(&ctx, &load_seq(seq, SequenceSpec::Power)?, *n, *k_max, !no_diagrams)
        }
        Command::Resolve { diagram, ideal } => resolve(&ctx, diagram, ideal.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let passed = report.passed;
            print!("{}", report.render(cli.format));
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
