use gtboson::basisgen::BasisPolynomial;
use gtboson::coupling::{CouplingTable, IsoscalarEntry};
use gtboson::exact::ratio_string;
use gtboson::gelfand::{GelfandPattern, IrrepLabel};
use std::fmt::Display;
use gtboson::polyengine::SqrtRational;
use gtboson::selftest::Report;
use serde::Serialize;
use serde_json::json;

use crate::args::Format;
use crate::Failure;

fn to_json<T: Serialize + ?Sized>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v).map(|s| s + "\n").map_err(|e| Failure::Domain(e.to_string()))
}

fn to_csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, Failure> {
    let err = |e: String| Failure::Domain(format!("csv: {e}"));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| err(e.to_string()))?;
    for r in rows {
        w.write_record(&r).map_err(|e| err(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| err(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| err(e.to_string()))
}

fn rows_compact(rows: &[Vec<i64>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn patterns(ps: &[GelfandPattern], f: Format) -> Result<String, Failure> {
    match f {
        Format::Json => to_json(ps),
        Format::Csv => to_csv(&["pattern"], ps.iter().map(|p| vec![p.to_compact()])),
        Format::Text => Ok(ps.iter().map(|p| p.to_compact() + "\n").collect()),
    }
}

pub fn dim(l: &IrrepLabel, d: &impl Display, f: Format) -> Result<String, Failure> {
    match f {
        Format::Json => to_json(&json!({ "label": l, "dimension": d.to_string() })),
        Format::Csv => to_csv(&["label", "dimension"], [vec![l.to_string(), d.to_string()]]),
        Format::Text => Ok(format!("{d}\n")),
    }
}

pub fn basis(set: &[BasisPolynomial], f: Format) -> Result<String, Failure> {
    match f {
        Format::Json => to_json(set),
        Format::Csv => to_csv(
            &["pattern", "norm_sq", "poly"],
            set.iter().map(|b| vec![b.pattern.to_compact(), ratio_string(&b.norm_sq), b.poly.to_string()]),
        ),
        Format::Text => Ok(set
            .iter()
            .map(|b| format!("{}  norm_sq={}\n  {}\n", b.pattern, ratio_string(&b.norm_sq), b.poly))
            .collect()),
    }
}

pub fn pn1(p: &GelfandPattern, v: &impl Display, f: Format) -> Result<String, Failure> {
    match f {
        Format::Json => to_json(&json!({ "pattern": p, "value": v.to_string() })),
        Format::Csv => to_csv(&["pattern", "value"], [vec![p.to_compact(), v.to_string()]]),
        Format::Text => Ok(format!("{v}\n")),
    }
}

fn half(twice: i64) -> String {
    if twice % 2 == 0 {
        (twice / 2).to_string()
    } else {
        format!("{twice}/2")
    }
}

pub fn threej(j: &[i64; 3], m: &[i64; 3], v: &SqrtRational, f: Format) -> Result<String, Failure> {
    match f {
        Format::Json => to_json(v),
        Format::Csv => {
            let mut row: Vec<String> = j.iter().chain(m).map(|&x| half(x)).collect();
            row.push(v.to_compact());
            to_csv(&["j1", "j2", "j3", "m1", "m2", "m3", "value"], [row])
        }
        Format::Text => Ok(format!("{}\n", v.to_compact())),
    }
}

pub fn table(t: &CouplingTable, f: Format) -> Result<String, Failure> {
    match f {
        Format::Json => to_json(t),
        Format::Csv => Ok(t.to_csv()?),
        Format::Text => {
            let labels: Vec<String> = t.labels.iter().map(IrrepLabel::to_string).collect();
            let mut s = format!("# {} rho={:?} normalization={:?}\n", labels.join(" x "), t.rho_values, t.normalization);
            for e in &t.entries {
                s += &format!("{} | {} | {} | {} | {}\n", e.patterns[0], e.patterns[1], e.patterns[2], e.rho, e.value);
            }
            Ok(s)
        }
    }
}

pub fn isoscalar(entries: &[IsoscalarEntry], f: Format) -> Result<String, Failure> {
    match f {
        Format::Json => to_json(entries),
        Format::Csv => to_csv(
            &["rows1", "rows2", "rows3", "rho", "value"],
            entries.iter().map(|e| {
                let mut r: Vec<String> = e.rows.iter().map(|x| rows_compact(std::slice::from_ref(x))).collect();
                r.push(e.rho.to_string());
                r.push(e.value.to_compact());
                r
            }),
        ),
        Format::Text => Ok(entries
            .iter()
            .map(|e| {
                let rows: Vec<String> = e.rows.iter().map(|x| rows_compact(std::slice::from_ref(x))).collect();
                format!("{} | {} | {} | {} | {}\n", rows[0], rows[1], rows[2], e.rho, e.value)
            })
            .collect()),
    }
}

pub fn report(r: &Report, f: Format) -> Result<String, Failure> {
    match f {
        Format::Json => to_json(&json!({
            "ok": r.ok(),
            "suites": r.suites.iter().map(|s| json!({
                "name": s.name,
                "group": s.group,
                "passed": s.passed,
                "failures": s.failures,
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => to_csv(
            &["suite", "group", "passed", "failed"],
            r.suites.iter().map(|s| vec![s.name.to_string(), s.group.to_string(), s.passed.to_string(), s.failures.len().to_string()]),
        ),
        Format::Text => Ok(r.to_string()),
    }
}
