//! The `mreg` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grading::{
    check_positive_grading, find_positive_coarsening_vector, positive_vectors_in_box,
    CoarseningVector, Multidegree,
};
use crate::groebner::default_order;
use crate::localcoh::{a_invariants_hochster, hochster_support};
use crate::points::{
    b_regularity_region, connections_check, generic_position_check, hilbert_table,
    res_reg_vector_points,
};
use crate::problem::Problem;
use crate::regularity::ModuleAnalysis;
use crate::resolution::{minimal_free_resolution_with, ResolutionLimits};

#[derive(Parser, Debug)]
#[command(name = "mreg", version, about = "Multigraded regularity through coarsening vectors")]
struct Cli {
    /// Coefficient field: `q` or `p:<prime>`; overrides the problem file.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Longest resolution allowed.
    #[arg(long, global = true)]
    max_length: Option<usize>,
    /// Largest coarse shift degree allowed in a resolution.
    #[arg(long, global = true)]
    max_degree: Option<i64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Is the grading positive, and which coarsening vector would be used.
    Check { file: PathBuf },
    /// Coarsened variable degrees and coarse Betti numbers.
    Coarsen(VArgs),
    /// Minimal multigraded free resolution with its differentials.
    Resolve { file: PathBuf },
    /// Multigraded Betti table, plus the coarse table when `--v` is given.
    Betti {
        file: PathBuf,
        #[arg(long, value_parser = parse_vector)]
        v: Option<CoarseningVector>,
    },
    /// Regularity number, a-invariants and syzygy degree bounds.
    Regnum {
        #[command(flatten)]
        va: VArgs,
        #[arg(long, default_value_t = 2)]
        imax: usize,
        /// Also list the bounded degree sets.
        #[arg(long)]
        degrees: bool,
    },
    /// Degree set allowed for minimal i-th syzygies; several `--v` intersect.
    Bounds {
        file: PathBuf,
        #[arg(long, value_parser = parse_vector)]
        v: Vec<CoarseningVector>,
        #[arg(long, default_value_t = 0)]
        i: usize,
    },
    /// A minimal family of coarsening vectors among those in a box.
    Minvectors {
        file: PathBuf,
        #[arg(long = "box", default_value_t = 5)]
        bound: i64,
        #[arg(long, default_value_t = 2)]
        imax: usize,
    },
    /// Compare regularity numbers and bound sets under v and d v.
    ScalarCheck {
        #[command(flatten)]
        va: VArgs,
        #[arg(long, default_value_t = 2)]
        d: i64,
        #[arg(long, default_value_t = 2)]
        imax: usize,
    },
    /// Hochster support and a-invariants of a Stanley-Reisner quotient.
    Hochster {
        #[command(flatten)]
        va: VArgs,
        #[arg(long)]
        i: Option<usize>,
    },
    /// Point sets in products of projective spaces.
    Points {
        #[command(subcommand)]
        command: PointsCommand,
    },
}

#[derive(Args, Debug)]
struct VArgs {
    file: PathBuf,
    /// Coarsening vector, e.g. `1,3`; defaults to the suggested one.
    #[arg(long, value_parser = parse_vector)]
    v: Option<CoarseningVector>,
}

#[derive(Subcommand, Debug)]
enum PointsCommand {
    Hilbert(BoxArgs),
    Bregularity(BoxArgs),
    Resvector { file: PathBuf },
    Generic(BoxArgs),
    Connections(BoxArgs),
}

#[derive(Args, Debug)]
struct BoxArgs {
    file: PathBuf,
    /// Box corner `(N, ..., N)`; defaults to the number of points.
    #[arg(long = "box")]
    bound: Option<i64>,
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    Field::parse(s).map_err(|e| e.to_string())
}

fn parse_vector(s: &str) -> std::result::Result<CoarseningVector, String> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(CoarseningVector::new)
}

struct Output {
    json: Value,
    table: String,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable report")
}

/// Integers outside the exactly representable double range become strings.
pub fn exact_numbers(v: Value) -> Value {
    const LIMIT: i128 = (1 << 53) - 1;
    match v {
        Value::Number(n) => {
            let big = n
                .as_i64()
                .map(|x| x as i128)
                .or_else(|| n.as_u64().map(|x| x as i128));
            match big {
                Some(x) if x.abs() > LIMIT => Value::String(x.to_string()),
                _ => Value::Number(n),
            }
        }
        Value::Array(a) => Value::Array(a.into_iter().map(exact_numbers).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, exact_numbers(v))).collect()),
        other => other,
    }
}

fn render_table(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut w = vec![0; width];
    for r in rows {
        for (k, c) in r.iter().enumerate() {
            w[k] = w[k].max(c.chars().count());
        }
    }
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(k, c)| format!("{c:>width$}", width = w[k]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn kv_table(pairs: &[(&str, String)]) -> String {
    let rows: Vec<Vec<String>> = pairs
        .iter()
        .map(|(k, v)| vec![k.to_string(), v.clone()])
        .collect();
    render_table(&rows)
}

fn fmt_opt(x: Option<i64>) -> String {
    x.map_or("-inf".into(), |x| x.to_string())
}

fn join<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

struct Ctx {
    field: Option<Field>,
    limits: ResolutionLimits,
}

impl Ctx {
    fn load(&self, file: &std::path::Path) -> Result<Problem> {
        Problem::from_path(file, self.field)
    }

    fn analysis(&self, pr: &Problem) -> Result<ModuleAnalysis> {
        ModuleAnalysis::with_limits(&pr.ring, &pr.presentation()?, &self.limits)
    }

    fn vector(&self, pr: &Problem, v: &Option<CoarseningVector>) -> Result<CoarseningVector> {
        let v = match v {
            Some(v) => v.clone(),
            None => find_positive_coarsening_vector(pr.ring.degrees())?,
        };
        if v.rank() != pr.ring.rank() {
            return Err(Error::Input(format!(
                "vector {v} has length {}, grading has rank {}",
                v.rank(),
                pr.ring.rank()
            )));
        }
        if !v.is_positive_for(pr.ring.degrees()) {
            return Err(Error::NotPositive(format!("{v} is not a positive coarsening vector")));
        }
        Ok(v)
    }
}

fn box_of(x: &crate::points::PointSet, n: Option<i64>) -> Result<Multidegree> {
    let n = n.unwrap_or(x.len() as i64);
    if n < 0 {
        return Err(Error::Input("box must be nonnegative".into()));
    }
    Ok(Multidegree(vec![n; x.dims().len()]))
}

fn betti_rows(b: &crate::resolution::BettiTable) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["i".into(), "degree".into(), "beta".into()]];
    for (i, a, n) in b.iter() {
        rows.push(vec![i.to_string(), a.to_string(), n.to_string()]);
    }
    rows
}

fn dispatch(cmd: Command, ctx: &Ctx) -> Result<Output> {
    match cmd {
        Command::Check { file } => {
            let pr = ctx.load(&file)?;
            let positive = check_positive_grading(pr.ring.degrees());
            let suggested = if positive {
                Some(find_positive_coarsening_vector(pr.ring.degrees())?)
            } else {
                None
            };
            Ok(Output {
                json: json!({"positive": positive, "suggested_v": suggested}),
                table: kv_table(&[
                    ("positive", positive.to_string()),
                    ("suggested_v", suggested.map_or("none".into(), |v| v.to_string())),
                ]),
            })
        }
        Command::Coarsen(va) => {
            let pr = ctx.load(&va.file)?;
            let v = ctx.vector(&pr, &va.v)?;
            let degs = v.vdegs(pr.ring.degrees())?;
            let m = ctx.analysis(&pr)?;
            let bz = m.betti().coarsen(&v);
            let mut table = kv_table(&[("v", v.to_string()), ("degrees", join(&degs))]);
            table.push_str(&render_table(&betti_rows(&bz)));
            Ok(Output {
                json: json!({"v": v, "degrees": degs, "betti": bz.entries()}),
                table,
            })
        }
        Command::Resolve { file } => {
            let pr = ctx.load(&file)?;
            let order = default_order(&pr.ring)?;
            let res = minimal_free_resolution_with(&pr.ring, &pr.presentation()?, &order, &ctx.limits)?;
            let levels: Vec<Value> = (0..=res.length())
                .map(|i| {
                    let d: Vec<Vec<String>> =
                        res.differential(i).iter().map(|c| c.to_strings(&pr.ring)).collect();
                    json!({"i": i, "shifts": res.shifts(i), "differential": d})
                })
                .collect();
            let mut rows = vec![vec!["i".to_string(), "rank".into(), "shifts".into()]];
            for i in 0..=res.length() {
                rows.push(vec![i.to_string(), res.rank(i).to_string(), join(res.shifts(i))]);
            }
            Ok(Output {
                json: json!({"length": res.length(), "levels": levels}),
                table: render_table(&rows),
            })
        }
        Command::Betti { file, v } => {
            let pr = ctx.load(&file)?;
            let m = ctx.analysis(&pr)?;
            let b = m.betti();
            let mut json = json!({"betti": b.entries()});
            let mut table = render_table(&betti_rows(&b));
            if v.is_some() {
                let v = ctx.vector(&pr, &v)?;
                let bz = b.coarsen(&v);
                json["v"] = to_value(&v);
                json["coarse"] = to_value(&bz.entries());
                table.push('\n');
                table.push_str(&render_table(&betti_rows(&bz)));
            }
            Ok(Output { json, table })
        }
        Command::Regnum { va, imax, degrees } => {
            let pr = ctx.load(&va.file)?;
            let v = ctx.vector(&pr, &va.v)?;
            let m = ctx.analysis(&pr)?;
            let rep = m.report(&v, imax, degrees)?;
            let mut pairs = vec![
                ("v", rep.v.to_string()),
                ("c", rep.c.to_string()),
                ("s", rep.s.to_string()),
                ("sigma", rep.sigma.to_string()),
                ("regnum", rep.regnum.to_string()),
                ("lower_bound", rep.lower_bound.to_string()),
                (
                    "a_invariants",
                    rep.a_invariants.values().iter().map(|&a| fmt_opt(a)).collect::<Vec<_>>().join(" "),
                ),
            ];
            let bounds: Vec<String> = rep.bounds.iter().map(|b| format!("{}:{}", b.i, b.bound)).collect();
            pairs.push(("bounds", bounds.join(" ")));
            Ok(Output {
                json: to_value(&rep),
                table: kv_table(&pairs),
            })
        }
        Command::Bounds { file, v, i } => {
            let pr = ctx.load(&file)?;
            let vs = if v.is_empty() {
                vec![ctx.vector(&pr, &None)?]
            } else {
                v.iter().map(|x| ctx.vector(&pr, &Some(x.clone()))).collect::<Result<_>>()?
            };
            let m = ctx.analysis(&pr)?;
            let set = m.intersect_degree_bounds(&vs, i)?;
            let mut rows = vec![vec!["degree".to_string()]];
            rows.extend(set.degrees().iter().map(|d| vec![d.to_string()]));
            Ok(Output {
                json: json!({
                    "i": i,
                    "vectors": set.vectors,
                    "bounds": set.bounds,
                    "bases": set.bases,
                    "degrees": set.degrees(),
                }),
                table: render_table(&rows),
            })
        }
        Command::Minvectors { file, bound, imax } => {
            let pr = ctx.load(&file)?;
            if !check_positive_grading(pr.ring.degrees()) {
                return Err(Error::NotPositive("the grading is not positive".into()));
            }
            let cands = positive_vectors_in_box(pr.ring.degrees(), bound);
            if cands.is_empty() {
                return Err(Error::ResourceLimit(format!(
                    "no positive coarsening vector with coordinates in [-{bound}, {bound}]"
                )));
            }
            let m = ctx.analysis(&pr)?;
            let chosen = m.minimal_coarsening_set(&cands, 0..=imax)?;
            Ok(Output {
                json: json!({
                    "box": bound,
                    "imax": imax,
                    "candidates": cands.len(),
                    "vectors": chosen,
                    "certified_over": "candidate family",
                }),
                table: kv_table(&[
                    ("candidates", cands.len().to_string()),
                    ("vectors", join(&chosen)),
                ]),
            })
        }
        Command::ScalarCheck { va, d, imax } => {
            let pr = ctx.load(&va.file)?;
            let v = ctx.vector(&pr, &va.v)?;
            let m = ctx.analysis(&pr)?;
            let rep = m.scalar_report(&v, d, 0..=imax)?;
            Ok(Output {
                json: to_value(&rep),
                table: kv_table(&[
                    ("regnum_v", rep.regnum_v.to_string()),
                    ("regnum_dv", rep.regnum_dv.to_string()),
                    ("predicted", rep.predicted.to_string()),
                    ("holds", rep.holds.to_string()),
                ]),
            })
        }
        Command::Hochster { va, i } => {
            let pr = ctx.load(&va.file)?;
            let v = ctx.vector(&pr, &va.v)?;
            let k = pr.complex()?;
            let is: Vec<usize> = match i {
                Some(i) => vec![i],
                None => (0..=pr.ring.nvars()).collect(),
            };
            let names = pr.ring.names();
            let mut support = Vec::new();
            let mut rows = vec![vec!["i".to_string(), "face".into(), "rank".into()]];
            for &i in &is {
                let faces: Vec<Value> = hochster_support(&k, &pr.ring, i)?
                    .into_iter()
                    .map(|(f, r)| {
                        let f: Vec<&str> = f.iter().map(|&j| names[j].as_str()).collect();
                        rows.push(vec![i.to_string(), format!("{{{}}}", f.join(",")), r.to_string()]);
                        json!({"face": f, "rank": r})
                    })
                    .collect();
                support.push(json!({"i": i, "faces": faces}));
            }
            let a = a_invariants_hochster(&k, &pr.ring, &v)?;
            Ok(Output {
                json: json!({"v": v, "support": support, "a_invariants": a}),
                table: render_table(&rows),
            })
        }
        Command::Points { command } => points(command, ctx),
    }
}

fn points(cmd: PointsCommand, ctx: &Ctx) -> Result<Output> {
    match cmd {
        PointsCommand::Hilbert(b) => {
            let pr = ctx.load(&b.file)?;
            let x = pr.points()?;
            let hi = box_of(x, b.bound)?;
            let table = hilbert_table(x, &hi)?;
            let mut out = String::new();
            if hi.rank() == 2 {
                // rows are j from the top down, columns i, as usually printed
                let (ni, nj) = (hi.0[0] as usize + 1, hi.0[1] as usize + 1);
                let mut rows = Vec::new();
                for j in (0..nj).rev() {
                    rows.push((0..ni).map(|i| table[i * nj + j].1.to_string()).collect());
                }
                out = render_table(&rows);
            } else {
                let rows: Vec<Vec<String>> =
                    table.iter().map(|(d, h)| vec![d.to_string(), h.to_string()]).collect();
                out.push_str(&render_table(&rows));
            }
            let values: Vec<Value> =
                table.iter().map(|(d, h)| json!({"degree": d, "value": h})).collect();
            Ok(Output {
                json: json!({"points": x.len(), "box": hi, "values": values}),
                table: out,
            })
        }
        PointsCommand::Bregularity(b) => {
            let pr = ctx.load(&b.file)?;
            let x = pr.points()?;
            let reg = b_regularity_region(x, &box_of(x, b.bound)?)?;
            Ok(Output {
                json: json!({"box": reg.bound, "minimal": reg.minimal}),
                table: kv_table(&[("minimal", join(&reg.minimal))]),
            })
        }
        PointsCommand::Resvector { file } => {
            let pr = ctx.load(&file)?;
            let r = res_reg_vector_points(pr.points()?)?;
            Ok(Output {
                json: json!({"resolution_vector": r}),
                table: kv_table(&[("resolution_vector", r.to_string())]),
            })
        }
        PointsCommand::Generic(b) => {
            let pr = ctx.load(&b.file)?;
            let x = pr.points()?;
            let g = generic_position_check(x, &box_of(x, b.bound)?)?;
            Ok(Output {
                json: json!({"generic": g}),
                table: kv_table(&[("generic", g.to_string())]),
            })
        }
        PointsCommand::Connections(b) => {
            let pr = ctx.load(&b.file)?;
            let x = pr.points()?;
            let rep = connections_check(x, &box_of(x, b.bound)?)?;
            Ok(Output {
                json: to_value(&rep),
                table: kv_table(&[
                    ("d", rep.d.to_string()),
                    ("m", rep.m.to_string()),
                    ("resolution_vector", rep.resolution_vector.to_string()),
                    ("holds", rep.holds.to_string()),
                ]),
            })
        }
    }
}

/// Runs the command line, writing results to `out` and diagnostics to `err`; returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    let ctx = Ctx {
        field: cli.field,
        limits: ResolutionLimits {
            max_length: cli.max_length,
            max_degree: cli.max_degree,
        },
    };
    match dispatch(cli.command, &ctx) {
        Ok(o) => {
            let text = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&exact_numbers(o.json)).unwrap();
                    s.push('\n');
                    s
                }
                Format::Table => o.table,
            };
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary.
pub fn main_exit_code() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_become_strings() {
        let v = exact_numbers(json!({"a": [1, 9007199254740992i64, -9007199254740991i64]}));
        assert_eq!(v, json!({"a": [1, "9007199254740992", -9007199254740991i64]}));
    }

    #[test]
    fn vectors_parse() {
        assert_eq!(parse_vector("1, -3").unwrap(), CoarseningVector::new(vec![1, -3]));
        assert!(parse_vector("1,x").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run(["mreg", "frobnicate"], &mut o, &mut e), 2);
        assert_eq!(run(["mreg", "check", "/nonexistent.json"], &mut o, &mut e), 2);
    }
}
