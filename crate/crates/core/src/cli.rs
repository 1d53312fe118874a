//! Command-line front end.
//!
//! Exit codes: 0 success, 1 `verify` rejected the candidate, 2 usage or parse
//! error, 3 positive search cap exhausted, 4 condition or precondition
//! violation.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{classify_triple, Classification, Infinitude, PointOrder, Verdict};
use crate::curve::{build_curve, CurvePoint};
use crate::error::Error;
use crate::families::{
    family_first, family_first_invert, family_second, family_second_invert, genus_zero_invert,
    genus_zero_solution, genus_zero_triple, FamilyKind, FamilyParams,
};
use crate::oracle::{brute_force_cube_solutions, brute_force_solutions, curve_point_probe};
use crate::rat::{rat_parse, Rat};
use crate::stream::{
    cube_stream, positive_cube_stream, positive_stream, solution_stream, SolutionRecord, Source,
    DEFAULT_CAP,
};
use crate::triple::{verify_sum_cubes, verify_sum_product, Triple};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_CONDITION: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Human,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "sumprod",
    version,
    about = "Rational triples with equal sum and equal product"
)]
pub struct CliConfig {
    /// Output format; `json` prints one object per line.
    #[arg(long, value_enum, default_value = "human", global = true)]
    pub format: OutputMode,

    #[command(subcommand)]
    pub command: Command,
}

fn parse_rat(text: &str) -> Result<Rat, String> {
    rat_parse(text).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct TripleArgs {
    #[arg(value_parser = parse_rat, allow_hyphen_values = true)]
    pub a: Rat,
    #[arg(value_parser = parse_rat, allow_hyphen_values = true)]
    pub b: Rat,
    #[arg(value_parser = parse_rat, allow_hyphen_values = true)]
    pub c: Rat,
}

impl TripleArgs {
    fn triple(&self) -> Triple {
        Triple::new(self.a.clone(), self.b.clone(), self.c.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    First,
    Second,
    Genus0,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify (a, b, c) and report the curve and torsion structure.
    Classify(TripleArgs),
    /// Stream verified solutions as they are found.
    Solve {
        #[command(flatten)]
        triple: TripleArgs,
        /// Number of records to print.
        #[arg(long, default_value_t = 10)]
        limit: usize,
        /// Only all-positive solutions.
        #[arg(long)]
        positive: bool,
        /// Solve the equal cube-sum system instead.
        #[arg(long)]
        cubes: bool,
        /// Candidates examined before a positive search gives up.
        #[arg(long, env = "SUMPROD_CAP", default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Skip the permutations of (a, b, c).
        #[arg(long)]
        nontrivial: bool,
    },
    /// Evaluate or invert a parametrized family.
    Param {
        family: FamilyArg,
        /// Scale (`r`, or `c` for genus0).
        #[arg(value_parser = parse_rat, allow_hyphen_values = true, required_unless_present = "invert")]
        scale: Option<Rat>,
        #[arg(value_parser = parse_rat, allow_hyphen_values = true, required_unless_present = "invert")]
        t: Option<Rat>,
        /// Recover the parameters of the triple `A B C` instead.
        #[arg(
            long,
            num_args = 3,
            value_names = ["A", "B", "C"],
            value_parser = parse_rat,
            allow_hyphen_values = true,
            conflicts_with_all = ["scale", "t"]
        )]
        invert: Option<Vec<Rat>>,
        /// Also evaluate the genus-zero solution at this `u`.
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        u: Option<Rat>,
    },
    /// Check whether (x, y, z) solves the system for (a, b, c).
    Verify {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(value_parser = parse_rat, allow_hyphen_values = true)]
        x: Rat,
        #[arg(value_parser = parse_rat, allow_hyphen_values = true)]
        y: Rat,
        #[arg(value_parser = parse_rat, allow_hyphen_values = true)]
        z: Rat,
        #[arg(long)]
        cubes: bool,
    },
    /// Exhaustive search over one coordinate of bounded height.
    Oracle {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long)]
        height: u64,
        #[arg(long)]
        cubes: bool,
        /// Map the solutions to the curve and report point orders.
        #[arg(long, conflicts_with = "cubes")]
        probe: bool,
    },
}

enum Failure {
    Io(io::Error),
    Lib(Error),
    Usage(String),
    Rejected,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = Result<(), Failure>;

/// Parses `args` (program name first) and runs the command, writing to `out`
/// and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&config, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Rejected) => EXIT_REJECTED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::CapExhausted { .. } => EXIT_CAP,
                Error::Parse(_) => EXIT_USAGE,
                _ => EXIT_CONDITION,
            }
        }
    }
}

fn dispatch(config: &CliConfig, out: &mut dyn Write) -> CmdResult {
    let mode = config.format;
    match &config.command {
        Command::Classify(t) => cmd_classify(&t.triple(), mode, out),
        Command::Solve {
            triple,
            limit,
            positive,
            cubes,
            cap,
            nontrivial,
        } => cmd_solve(
            &triple.triple(),
            *limit,
            *positive,
            *cubes,
            *cap,
            *nontrivial,
            mode,
            out,
        ),
        Command::Param {
            family,
            scale,
            t,
            invert,
            u,
        } => match (invert, scale, t) {
            (Some(v), _, _) => cmd_param_invert(
                *family,
                &Triple::new(v[0].clone(), v[1].clone(), v[2].clone()),
                mode,
                out,
            ),
            (None, Some(r), Some(t)) => cmd_param(*family, r, t, u.as_ref(), mode, out),
            _ => Err(Failure::Usage(
                "param needs <SCALE> <T> or --invert A B C".into(),
            )),
        },
        Command::Verify {
            triple,
            x,
            y,
            z,
            cubes,
        } => {
            let cand = Triple::new(x.clone(), y.clone(), z.clone());
            cmd_verify(&triple.triple(), &cand, *cubes, mode, out)
        }
        Command::Oracle {
            triple,
            height,
            cubes,
            probe,
        } => cmd_oracle(&triple.triple(), *height, *cubes, *probe, mode, out),
    }
}

fn s(r: &Rat) -> Value {
    Value::String(r.to_string())
}

fn triple_json(t: &Triple) -> Value {
    json!([s(&t.first), s(&t.second), s(&t.third)])
}

fn point_json(pt: &CurvePoint) -> Value {
    match pt {
        CurvePoint::Infinity => json!("infinity"),
        CurvePoint::Affine { u, v } => json!({"u": s(u), "v": s(v)}),
    }
}

fn family_kind_name(kind: FamilyKind) -> &'static str {
    match kind {
        FamilyKind::GenusZero => "genus0",
        FamilyKind::First => "first",
        FamilyKind::Second => "second",
    }
}

fn family_json(fp: &FamilyParams) -> Value {
    let scale_name = match fp.kind {
        FamilyKind::GenusZero => "c",
        _ => "r",
    };
    json!({"kind": family_kind_name(fp.kind), scale_name: s(&fp.scale), "t": s(&fp.t)})
}

fn verdict_name(v: &Verdict) -> &'static str {
    match v {
        Verdict::NotPairwiseDistinct => "NotPairwiseDistinct",
        Verdict::ProductZero => "ProductZero",
        Verdict::GenusZero { .. } => "GenusZero",
        Verdict::Elliptic(_) => "Elliptic",
    }
}

fn infinite_name(i: Infinitude) -> &'static str {
    match i {
        Infinitude::Yes => "Yes",
        Infinitude::Unknown => "Unknown",
    }
}

fn torsion_name(c: &Classification) -> Option<&'static str> {
    c.torsion().map(|t| match t {
        crate::classify::Torsion::Z12 => "Z12",
        crate::classify::Torsion::Z9 => "Z9",
        crate::classify::Torsion::ZxZ3 => "ZxZ3",
    })
}

fn cmd_classify(t: &Triple, mode: OutputMode, out: &mut dyn Write) -> CmdResult {
    let c = classify_triple(t);
    let curve = build_curve(&t.sum(), &t.product());
    let disc = curve.discriminant();
    match mode {
        OutputMode::Json => {
            let v = json!({
                "triple": triple_json(t),
                "verdict": verdict_name(&c.verdict),
                "torsion": torsion_name(&c),
                "solutions_infinite": infinite_name(c.solutions_infinite),
                "first_violations": c.first_violations.iter().map(triple_json).collect::<Vec<_>>(),
                "second_violations": c.second_violations.iter().map(triple_json).collect::<Vec<_>>(),
                "family": c.family.as_ref().map(family_json),
                "curve": {"a4": s(&curve.a4), "a6": s(&curve.a6), "discriminant": s(&disc)},
            });
            writeln!(out, "{v}")?;
        }
        OutputMode::Human => {
            writeln!(out, "triple: {t}")?;
            match &c.verdict {
                Verdict::GenusZero { scale, t } => {
                    writeln!(out, "verdict: GenusZero (c = {scale}, t = {t})")?
                }
                v => writeln!(out, "verdict: {}", verdict_name(v))?,
            }
            if let Some(name) = torsion_name(&c) {
                writeln!(out, "torsion: {name}")?;
            }
            for v in &c.first_violations {
                writeln!(out, "violates A(B-C)^3 != B(C-A)^3 at {v}")?;
            }
            for v in &c.second_violations {
                writeln!(out, "violates AB^2+BC^2+CA^2 != 3ABC at {v}")?;
            }
            if let Some(fp) = &c.family {
                if !matches!(c.verdict, Verdict::GenusZero { .. }) {
                    writeln!(
                        out,
                        "family: {} (r = {}, t = {})",
                        family_kind_name(fp.kind),
                        fp.scale,
                        fp.t
                    )?;
                }
            }
            writeln!(out, "curve: v^2 = u^3 + ({})u + ({})", curve.a4, curve.a6)?;
            writeln!(out, "discriminant: {disc}")?;
            writeln!(out, "infinite: {}", infinite_name(c.solutions_infinite))?;
        }
    }
    Ok(())
}

fn source_json(src: &Source) -> Value {
    match src {
        Source::Group { m, k } => json!({"kind": "group", "m": m, "k": k}),
        Source::Constant => json!({"kind": "constant"}),
        Source::GenusZero { u } => json!({"kind": "genus_zero", "u": s(u)}),
        Source::ProductZero { x } => json!({"kind": "product_zero", "x": s(x)}),
    }
}

fn write_record(rec: &SolutionRecord, mode: OutputMode, out: &mut dyn Write) -> io::Result<()> {
    match mode {
        OutputMode::Json => {
            let v = json!({
                "x": s(&rec.triple.first),
                "y": s(&rec.triple.second),
                "z": s(&rec.triple.third),
                "source": source_json(&rec.source),
                "verified": rec.verified,
            });
            writeln!(out, "{v}")?;
        }
        OutputMode::Human => writeln!(out, "{}  [{}]", rec.triple, rec.source)?,
    }
    out.flush()
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve(
    t: &Triple,
    limit: usize,
    positive: bool,
    cubes: bool,
    cap: usize,
    nontrivial: bool,
    mode: OutputMode,
    out: &mut dyn Write,
) -> CmdResult {
    if positive {
        let stream = if cubes {
            positive_cube_stream(t, limit, cap)?
        } else {
            positive_stream(t, limit, cap)?
        };
        for rec in stream {
            write_record(&rec?, mode, out)?;
        }
        return Ok(());
    }
    let stream = if cubes {
        cube_stream(t)?
    } else {
        solution_stream(t)?
    };
    let stream = if nontrivial {
        stream.nontrivial()
    } else {
        stream
    };
    for rec in stream.take(limit) {
        write_record(&rec, mode, out)?;
    }
    Ok(())
}

fn cmd_param_invert(
    family: FamilyArg,
    t: &Triple,
    mode: OutputMode,
    out: &mut dyn Write,
) -> CmdResult {
    let fp = match family {
        FamilyArg::First => family_first_invert(t)?,
        FamilyArg::Second => family_second_invert(t)?,
        FamilyArg::Genus0 => genus_zero_invert(t)?,
    };
    match mode {
        OutputMode::Json => writeln!(out, "{}", family_json(&fp))?,
        OutputMode::Human => {
            let name = if fp.kind == FamilyKind::GenusZero {
                "c"
            } else {
                "r"
            };
            writeln!(out, "{name} = {}, t = {}", fp.scale, fp.t)?
        }
    }
    Ok(())
}

fn cmd_param(
    family: FamilyArg,
    r: &Rat,
    param: &Rat,
    u: Option<&Rat>,
    mode: OutputMode,
    out: &mut dyn Write,
) -> CmdResult {
    let t = match family {
        FamilyArg::First => family_first(r, param)?,
        FamilyArg::Second => family_second(r, param)?,
        FamilyArg::Genus0 => genus_zero_triple(r, param)?,
    };
    let solution = match (family, u) {
        (FamilyArg::Genus0, Some(u)) => Some(genus_zero_solution(r, param, u)?),
        (_, Some(_)) => return Err(Failure::Usage("--u applies only to genus0".into())),
        _ => None,
    };
    match mode {
        OutputMode::Json => {
            let mut v = json!({"triple": triple_json(&t)});
            if let Some(sol) = &solution {
                v["solution"] = triple_json(sol);
            }
            writeln!(out, "{v}")?;
        }
        OutputMode::Human => {
            writeln!(out, "{t}")?;
            if let Some(sol) = &solution {
                writeln!(out, "solution: {sol}")?;
            }
        }
    }
    Ok(())
}

fn cmd_verify(
    reference: &Triple,
    cand: &Triple,
    cubes: bool,
    mode: OutputMode,
    out: &mut dyn Write,
) -> CmdResult {
    let ok = if cubes {
        verify_sum_cubes(reference, cand)
    } else {
        verify_sum_product(reference, cand)
    };
    match mode {
        OutputMode::Json => writeln!(out, "{}", json!({"verified": ok}))?,
        OutputMode::Human => writeln!(out, "{}", if ok { "ok" } else { "not a solution" })?,
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Rejected)
    }
}

fn cmd_oracle(
    t: &Triple,
    height: u64,
    cubes: bool,
    probe: bool,
    mode: OutputMode,
    out: &mut dyn Write,
) -> CmdResult {
    if probe {
        let report = curve_point_probe(t, height)?;
        for pp in &report.points {
            let order = match pp.order {
                PointOrder::Finite(n) => n.to_string(),
                PointOrder::InfiniteOrder => "infinite".to_string(),
            };
            match mode {
                OutputMode::Json => writeln!(
                    out,
                    "{}",
                    json!({"triple": triple_json(&pp.triple), "point": point_json(&pp.point), "order": order})
                )?,
                OutputMode::Human => writeln!(out, "{} -> {}  order {order}", pp.triple, pp.point)?,
            }
        }
        if mode == OutputMode::Human {
            let verdict = if report.found_infinite_order() {
                "point of infinite order found: infinitely many solutions"
            } else {
                "no point of infinite order within the bound (inconclusive)"
            };
            writeln!(out, "{verdict}")?;
        }
        return Ok(());
    }
    let report = if cubes {
        brute_force_cube_solutions(t, height)?
    } else {
        brute_force_solutions(t, height)?
    };
    for sol in &report.solutions {
        match mode {
            OutputMode::Json => writeln!(
                out,
                "{}",
                json!({"x": s(&sol.first), "y": s(&sol.second), "z": s(&sol.third)})
            )?,
            OutputMode::Human => writeln!(out, "{sol}")?,
        }
    }
    Ok(())
}
