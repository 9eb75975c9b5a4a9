//! Command-line front end for `ramify`.
//!
//! Exit codes: 0 for success or a true predicate, 1 for a false predicate or
//! a verification with violations, 2 for usage, parse and operation errors.

pub mod expr;
pub mod report;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ramify::enumerate::{self, NegativeKind};
use ramify::{construct, Exec, Field, ProjectivePoint, RamificationProfile, RationalFunction};

use expr::ExprError;
use report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "ramify",
    version,
    about = "Ramification and descent of rational functions over finite fields"
)]
struct Cli {
    /// Seed for randomized factorization.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FnArgs {
    /// Field, `p` or `p^n`.
    #[arg(long)]
    field: String,
    /// Rational function in x, e.g. "(x^3+x^2)/(5*x-3)".
    #[arg(long = "fn")]
    function: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Char3Simple,
    Char2All,
    Char3Nonsimple,
    FtClassify,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Wronskian h g' - g h'.
    Wr(FnArgs),
    /// Standard form of the equivalence class.
    Std(FnArgs),
    /// Ramification profile over the splitting field of the Wronskian.
    Ram(FnArgs),
    /// Whether two functions are equivalent under post-composition.
    Equiv {
        #[arg(long)]
        field: String,
        #[arg(long)]
        fn1: String,
        #[arg(long)]
        fn2: String,
    },
    /// Whether the class has a representative over F_{p^m}.
    Descends {
        #[command(flatten)]
        f: FnArgs,
        #[arg(long)]
        sub: u32,
    },
    /// Simply ramified cubic with rational ramification that does not descend.
    SearchCex {
        #[arg(long)]
        field: String,
    },
    /// Family with constant Wronskian over F_{q^r}.
    CwFamily {
        #[command(flatten)]
        f: FnArgs,
        #[arg(long, default_value_t = 2)]
        ext: u32,
        #[arg(long)]
        count: Option<usize>,
    },
    /// Classes with a prescribed ramification divisor.
    Fiber {
        #[arg(long)]
        field: String,
        #[arg(long)]
        degree: usize,
        /// Comma list of points, `inf` allowed, optional `:length` suffix.
        #[arg(long)]
        points: String,
    },
    /// Exhaustive verification runs.
    Verify {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        field: String,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = 1)]
        sub: u32,
        #[arg(long, default_value_t = 2)]
        ext: u32,
        #[arg(long)]
        count: Option<usize>,
        /// Single base class for the family modes.
        #[arg(long = "fn")]
        function: Option<String>,
    },
}

/// Error tagged with the flag it came from.
#[derive(Debug, thiserror::Error)]
#[error("{flag}: {source}")]
pub struct CliError {
    pub flag: &'static str,
    #[source]
    pub source: ExprError,
}

trait Flag<T> {
    fn flag(self, flag: &'static str) -> Result<T, CliError>;
}

impl<T, E: Into<ExprError>> Flag<T> for Result<T, E> {
    fn flag(self, flag: &'static str) -> Result<T, CliError> {
        self.map_err(|e| CliError {
            flag,
            source: e.into(),
        })
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(r) => Outcome {
            code: r.code,
            stdout: r.render(cli.json),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn field(spec: &str) -> Result<Field, CliError> {
    expr::parse_field(spec).flag("--field")
}

fn function(spec: &str, f: &Field, flag: &'static str) -> Result<RationalFunction, CliError> {
    expr::parse_ratfunc(spec, f).flag(flag)
}

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let seed = cli.seed;
    match &cli.command {
        Command::Wr(a) => {
            let k = field(&a.field)?;
            let f = function(&a.function, &k, "--fn")?;
            let w = f.wronskian().flag("--fn")?;
            let (m, lc) = f.wronskian_monic().flag("--fn")?;
            let mut r = Report::new(&k, "wr");
            r.degree = Some(f.degree());
            r.result = json!({"wronskian": w.to_string(), "monic": m.to_string(), "leading": lc.to_string()});
            r.lines = vec![format!("Wr = {w}"), format!("monic: {m}")];
            Ok(r)
        }
        Command::Std(a) => {
            let k = field(&a.field)?;
            let f = function(&a.function, &k, "--fn")?;
            let s = f.standard_form();
            let mut r = Report::new(&k, "std");
            r.degree = Some(f.degree());
            r.result = report::form_json(&s);
            r.lines = vec![s.to_string()];
            Ok(r)
        }
        Command::Ram(a) => {
            let k = field(&a.field)?;
            let f = function(&a.function, &k, "--fn")?;
            let p = f.ramification_profile().flag("--fn")?;
            let simple = f.is_simply_ramified().flag("--fn")?;
            let mut r = Report::new(&k, "ram");
            r.degree = Some(f.degree());
            let mut res = report::profile_json(&p);
            res["simply_ramified"] = json!(simple);
            r.result = res;
            r.lines = vec![p.to_string()];
            if p.field() != &k {
                r.lines
                    .push(format!("points over {}", report::field_text(p.field())));
            }
            Ok(r)
        }
        Command::Equiv {
            field: fs,
            fn1,
            fn2,
        } => {
            let k = field(fs)?;
            let a = function(fn1, &k, "--fn1")?;
            let b = function(fn2, &k, "--fn2")?;
            let eq = a.is_equivalent(&b).flag("--fn2")?;
            Ok(predicate(&k, "equiv", Some(a.degree()), eq))
        }
        Command::Descends { f: a, sub } => {
            let k = field(&a.field)?;
            let f = function(&a.function, &k, "--fn")?;
            let d = f.descends_to(*sub).flag("--sub")?;
            Ok(predicate(&k, "descends", Some(f.degree()), d))
        }
        Command::SearchCex { field: fs } => {
            let k = field(fs)?;
            let w = construct::search_counterexample(&k, seed).flag("--field")?;
            let mut r = Report::new(&k, "search-cex");
            r.degree = Some(3);
            let wj = json!({
                "c": w.c.to_string(),
                "u": w.u.to_string(),
                "extension": report::field_json(&w.extension),
                "function": w.function.to_string(),
                "standard_form": w.function.standard_form().to_string(),
                "profile": report::profile_json(&w.profile),
                "descends": w.descends,
            });
            r.result = wj.clone();
            r.witnesses.push(wj);
            r.lines = vec![
                format!("c = {}", w.c),
                format!("u = {} in {}", w.u, report::field_text(&w.extension)),
                format!("f_u = {}", w.function),
                format!("profile {}", w.profile),
                format!("descends: {}", w.descends),
            ];
            Ok(r)
        }
        Command::CwFamily { f: a, ext, count } => {
            let k = field(&a.field)?;
            let f = function(&a.function, &k, "--fn")?;
            let (point, moved) = construct::family_base(&f).flag("--fn")?;
            let n = match count {
                Some(c) => *c,
                None => construct::usable_parameters(&moved, *ext).flag("--ext")?,
            };
            let members = construct::family_witness_batch(&moved, *ext, n, Exec::default())
                .flag("--count")?;
            let (wronskian, _) = moved.to_ratfunc().wronskian_monic().flag("--fn")?;
            let summary = enumerate::FamilySummary {
                base: f.standard_form(),
                point,
                moved,
                wronskian,
                members,
            };
            Ok(family_report(&k, f.degree(), "cw-family", &summary, n))
        }
        Command::Fiber {
            field: fs,
            degree,
            points,
        } => {
            let k = field(fs)?;
            let entries = parse_points(points, &k)?;
            let div = RamificationProfile::new(&k, *degree, entries).flag("--points")?;
            let rep =
                enumerate::fiber_by_ramification(&k, &div, Exec::default()).flag("--degree")?;
            let mut r = enumeration_report(&rep, "fiber");
            r.code = 0;
            r.lines = rep.forms().map(|s| s.to_string()).collect();
            r.lines
                .push(format!("{} classes with profile {div}", rep.classes.len()));
            Ok(r)
        }
        Command::Verify {
            mode,
            field: fs,
            degree,
            sub,
            ext,
            count,
            function: fnspec,
        } => {
            let k = field(fs)?;
            let need_degree = || degree.ok_or_else(|| missing("--degree"));
            let exec = Exec::default();
            match mode {
                Mode::Char3Simple => {
                    let rep = enumerate::verify_char3_simple(&k, need_degree()?, *sub, exec)
                        .flag("--field")?;
                    Ok(enumeration_report(&rep, "verify char3-simple"))
                }
                Mode::FtClassify => {
                    let rep = enumerate::classify_faber_thompson(&k, exec).flag("--field")?;
                    let mut r = enumeration_report(&rep, "verify ft-classify");
                    r.witnesses = rep
                        .matches
                        .iter()
                        .map(|m| json!({"u": m.u.to_string(), "standard_form": m.form.to_string()}))
                        .collect();
                    Ok(r)
                }
                Mode::Char2All | Mode::Char3Nonsimple => {
                    let kind = if *mode == Mode::Char2All {
                        NegativeKind::Char2All
                    } else {
                        NegativeKind::Char3NonSimple
                    };
                    if let Some(spec) = fnspec {
                        let f = function(spec, &k, "--fn")?;
                        let s = enumerate::low_char_family(kind, &f, *ext, *count, exec)
                            .flag("--fn")?;
                        let want = count.unwrap_or(s.members.len());
                        return Ok(family_report(&k, f.degree(), "verify family", &s, want));
                    }
                    let rep = enumerate::verify_low_char_negative(
                        kind,
                        &k,
                        need_degree()?,
                        *ext,
                        *count,
                        exec,
                    )
                    .flag("--field")?;
                    let mut r = enumeration_report(&rep, "verify family");
                    r.witnesses = rep.families.iter().map(report::family_json).collect();
                    Ok(r)
                }
            }
        }
    }
}

fn missing(flag: &'static str) -> CliError {
    CliError {
        flag,
        source: ExprError::Parse {
            pos: 0,
            msg: "required for this mode".into(),
        },
    }
}

fn predicate(k: &Field, op: &'static str, degree: Option<usize>, value: bool) -> Report {
    let mut r = Report::new(k, op);
    r.degree = degree;
    r.result = json!(value);
    r.lines = vec![value.to_string()];
    r.code = if value { 0 } else { 1 };
    r
}

fn family_report(
    k: &Field,
    degree: usize,
    op: &'static str,
    s: &enumerate::FamilySummary,
    want: usize,
) -> Report {
    let mut r = Report::new(k, op);
    r.degree = Some(degree);
    let nd = s.non_descending();
    r.result = report::family_json(s);
    r.witnesses = s.members.iter().map(report::member_json).collect();
    r.lines = vec![
        format!("base {} moved to {} (point {})", s.base, s.moved, s.point),
        format!("monic Wr = {}", s.wronskian),
    ];
    r.lines.extend(s.members.iter().map(|w| {
        format!(
            "t = {}: {}{}",
            w.parameter,
            w.standard_form,
            if w.descends { " (descends)" } else { "" }
        )
    }));
    r.lines
        .push(format!("{} members, {nd} non-descending", s.members.len()));
    if nd < want {
        r.violations
            .push(json!({"diagnostic": format!("{nd} of {want} members fail to descend")}));
        r.code = 1;
    }
    r
}

fn enumeration_report(rep: &enumerate::EnumerationReport, op: &'static str) -> Report {
    let mut r = Report::new(&rep.field, op);
    r.degree = Some(rep.degree);
    r.result = report::enumeration_result(rep);
    r.witnesses = rep.classes.iter().map(report::class_json).collect();
    r.violations = rep.violations.iter().map(report::violation_json).collect();
    r.lines = vec![rep.to_string()];
    r.lines.extend(
        rep.violations
            .iter()
            .map(|v| format!("violation: {} ({})", v.form, v.diagnostic)),
    );
    r.lines.push(format!("{} violations", rep.violations.len()));
    r.code = if rep.is_verified() { 0 } else { 1 };
    r
}

fn parse_points(spec: &str, k: &Field) -> Result<Vec<(ProjectivePoint, u32)>, CliError> {
    let mut out = Vec::new();
    for item in spec.split(',') {
        let (pt, len) = match item.rsplit_once(':') {
            Some((p, l)) => {
                let l = l.trim().parse::<u32>().map_err(|_| CliError {
                    flag: "--points",
                    source: ExprError::Parse {
                        pos: 0,
                        msg: format!("bad length in {item:?}"),
                    },
                })?;
                (p.trim(), l)
            }
            None => (item.trim(), 1),
        };
        let point = if pt == "inf" {
            ProjectivePoint::Infinity
        } else {
            ProjectivePoint::Affine(expr::parse_element(pt, k).flag("--points")?)
        };
        out.push((point, len));
    }
    Ok(out)
}
