mod args;
mod config;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use gtboson::basisgen::{basis_from_branching, basis_set, pn1_bruteforce, pn1_closed, u2_basis_closed, u3_basis_closed, u4_basis_closed};
use gtboson::coupling::{isoscalar_table, su2_pattern, su2_threej, su3_table, Normalization};
use gtboson::gelfand::{enumerate_patterns, weyl_dimension, GelfandPattern, IrrepLabel};
use gtboson::selftest::{self, SUITES};

use args::{BasisMethod, Cli, Command, Format, NormArg, Pn1Method};
use config::Config;

pub enum Failure {
    /// Invalid label, pattern or other rejected input.
    Domain(String),
    /// Malformed arguments.
    Usage(String),
}

impl From<gtboson::error::Error> for Failure {
    fn from(e: gtboson::error::Error) -> Self {
        match e {
            gtboson::error::Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome<T> = Result<T, Failure>;

struct Settings {
    format: Format,
    group: Option<String>,
    normalization: Option<NormArg>,
    jobs: Option<usize>,
    output: Option<PathBuf>,
}

fn settings(cli: &Cli) -> Outcome<Settings> {
    let cfg = match &cli.global.config {
        Some(p) => Config::load(p).map_err(Failure::Usage)?,
        None => Config::default(),
    };
    let dir = cli.global.output_dir.clone().or(cfg.output_dir);
    let output = cli.global.output.clone().map(|p| match &dir {
        Some(d) if p.is_relative() => d.join(p),
        _ => p,
    });
    Ok(Settings {
        format: cli.global.format.or(cfg.format).unwrap_or(Format::Text),
        group: cfg.group,
        normalization: cfg.normalization,
        jobs: cli.global.jobs.or(cfg.jobs),
        output,
    })
}

/// `(n, special)` from `u<n>` / `su<n>`.
fn parse_group(g: &str) -> Outcome<(usize, bool)> {
    let g = g.trim().to_ascii_lowercase();
    let (rest, special) = match g.strip_prefix("su") {
        Some(r) => (r, true),
        None => (g.strip_prefix('u').unwrap_or(""), false),
    };
    match rest.parse::<usize>() {
        Ok(n) if n >= 1 => Ok((n, special)),
        _ => Err(Failure::Usage(format!("unknown group {g:?}; expected u<n> or su<n>"))),
    }
}

fn parse_ints(s: &str, what: &str) -> Outcome<Vec<i64>> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Failure::Usage(format!("bad {what} entry {x:?} in {s:?}"))))
        .collect()
}

fn parse_label(s: &str, group: Option<&str>) -> Outcome<IrrepLabel> {
    let mut h = parse_ints(s, "label")?;
    if let Some(g) = group {
        let (n, special) = parse_group(g)?;
        if special && h.len() + 1 == n {
            h.push(0);
        }
        if h.len() != n {
            return Err(Failure::Domain(format!("label {s} has {} entries but {g} needs {n}", h.len())));
        }
        if special {
            let last = *h.last().expect("n ≥ 1");
            h.iter_mut().for_each(|x| *x -= last);
        }
    }
    Ok(IrrepLabel::new(h)?)
}

fn parse_pattern(s: &str) -> Outcome<GelfandPattern> {
    Ok(GelfandPattern::parse_compact(s)?)
}

/// Twice a non-negative or negative half-integer: `1`, `0.5`, `-3/2`.
fn parse_half(s: &str) -> Outcome<i64> {
    let s = s.trim();
    let bad = || Failure::Usage(format!("{s:?} is not an integer or half-integer"));
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let twice = if let Some((n, d)) = body.split_once('/') {
        let n: i64 = n.parse().map_err(|_| bad())?;
        match d {
            "1" => 2 * n,
            "2" => n,
            _ => return Err(bad()),
        }
    } else if let Some((i, f)) = body.split_once('.') {
        let i: i64 = if i.is_empty() { 0 } else { i.parse().map_err(|_| bad())? };
        match f.trim_end_matches('0') {
            "" => 2 * i,
            "5" => 2 * i + 1,
            _ => return Err(bad()),
        }
    } else {
        2 * body.parse::<i64>().map_err(|_| bad())?
    };
    Ok(if neg { -twice } else { twice })
}

fn parse_halves(s: &str) -> Outcome<[i64; 3]> {
    let v = s.split(',').map(parse_half).collect::<Outcome<Vec<_>>>()?;
    v.try_into().map_err(|_| Failure::Usage(format!("expected three values in {s:?}")))
}

fn triple(labels: &args::TripleArgs, default_group: Option<&str>) -> Outcome<[IrrepLabel; 3]> {
    let group = labels.group.as_deref().or(default_group).unwrap_or("su3");
    if parse_group(group)?.0 != 3 {
        return Err(Failure::Domain(format!("coupling tables are available for su3 only, not {group}")));
    }
    if labels.label.len() != 3 {
        return Err(Failure::Usage(format!("expected three --label values, got {}", labels.label.len())));
    }
    let v = labels.label.iter().map(|l| parse_label(l, Some(group))).collect::<Outcome<Vec<_>>>()?;
    Ok(v.try_into().expect("three labels"))
}

fn run(cli: &Cli) -> Outcome<(String, bool)> {
    let st = settings(cli)?;
    let f = st.format;
    let group = |g: &Option<String>| g.clone().or_else(|| st.group.clone());
    let text = match &cli.command {
        Command::Patterns(a) => {
            let l = parse_label(&a.label, group(&a.group).as_deref())?;
            render::patterns(&enumerate_patterns(&l), f)?
        }
        Command::Dim(a) => {
            let l = parse_label(&a.label, group(&a.group).as_deref())?;
            render::dim(&l, &weyl_dimension(&l), f)?
        }
        Command::Basis { group: g, label, pattern, method } => {
            let set = match (label, pattern) {
                (Some(l), _) => {
                    let l = parse_label(l, group(g).as_deref())?;
                    match method {
                        BasisMethod::Kernel => basis_set(&l)?,
                        BasisMethod::Closed => {
                            enumerate_patterns(&l).iter().map(closed_basis).collect::<Outcome<Vec<_>>>()?
                        }
                    }
                }
                (None, Some(p)) => {
                    let p = parse_pattern(p)?;
                    vec![match method {
                        BasisMethod::Kernel => basis_from_branching(&p)?,
                        BasisMethod::Closed => closed_basis(&p)?,
                    }]
                }
                (None, None) => return Err(Failure::Usage("basis needs --label or --pattern".into())),
            };
            render::basis(&set, f)?
        }
        Command::Pn1 { pattern, method } => {
            let p = parse_pattern(pattern)?;
            let v = match method {
                Pn1Method::Closed => pn1_closed(&p)?,
                Pn1Method::Bruteforce => pn1_bruteforce(&p)?,
            };
            render::pn1(&p, &v, f)?
        }
        Command::Threej { j, m } => {
            let (j, m) = (parse_halves(j)?, parse_halves(m)?);
            let ps = [0, 1, 2].map(|i| su2_pattern(j[i], m[i]));
            let ps = ps.into_iter().collect::<Result<Vec<_>, _>>()?;
            let v = su2_threej([&ps[0], &ps[1], &ps[2]])?;
            render::threej(&j, &m, &v, f)?
        }
        Command::Su3cg { labels, normalization } => {
            let l = triple(labels, st.group.as_deref())?;
            let t = su3_table(&l, st.jobs)?;
            let norm = match normalization.or(st.normalization).unwrap_or(NormArg::ThreeJ) {
                NormArg::ThreeJ => Normalization::ThreeJ,
                NormArg::Cg => Normalization::Cg,
            };
            render::table(&t.with_normalization(norm), f)?
        }
        Command::Isoscalar { labels } => {
            let l = triple(labels, st.group.as_deref())?;
            let t = su3_table(&l, st.jobs)?;
            render::isoscalar(&isoscalar_table(&t)?, f)?
        }
        Command::Selftest { suite } => {
            if let Some(s) = suite {
                if !SUITES.iter().any(|(n, g)| n == s || g == s) {
                    return Err(Failure::Usage(format!("unknown suite {s:?}")));
                }
            }
            let report = selftest::run(suite.as_deref(), st.jobs);
            let text = render::report(&report, f)?;
            emit(&st, &text)?;
            return Ok((text, report.ok()));
        }
    };
    emit(&st, &text)?;
    Ok((text, true))
}

fn closed_basis(p: &GelfandPattern) -> Outcome<gtboson::basisgen::BasisPolynomial> {
    Ok(match p.n() {
        2 => u2_basis_closed(p)?,
        3 => u3_basis_closed(p)?,
        4 => u4_basis_closed(p)?,
        _ => basis_from_branching(p)?,
    })
}

fn emit(st: &Settings, text: &str) -> Outcome<()> {
    let io = |e: std::io::Error| Failure::Domain(format!("cannot write output: {e}"));
    match &st.output {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(io)?;
            }
            std::fs::write(path, text).map_err(io)
        }
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(io),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((_, true)) => ExitCode::SUCCESS,
        Ok((_, false)) => ExitCode::from(1),
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_integers() {
        assert_eq!(parse_half("0.5").ok(), Some(1));
        assert_eq!(parse_half("-3/2").ok(), Some(-3));
        assert_eq!(parse_half("2").ok(), Some(4));
        assert_eq!(parse_half("1.50").ok(), Some(3));
        assert!(parse_half("0.25").is_err());
        assert!(parse_half("1/3").is_err());
    }

    #[test]
    fn groups_and_labels() {
        assert_eq!(parse_group("SU3").ok(), Some((3, true)));
        assert_eq!(parse_group("u4").ok(), Some((4, false)));
        assert!(parse_group("so3").is_err());
        assert_eq!(parse_label("3,1", Some("su3")).ok().map(|l| l.h().to_vec()), Some(vec![3, 1, 0]));
        assert_eq!(parse_label("4,3,3", Some("su3")).ok().map(|l| l.h().to_vec()), Some(vec![1, 0, 0]));
        assert!(matches!(parse_label("1,0", Some("u3")), Err(Failure::Domain(_))));
    }
}
