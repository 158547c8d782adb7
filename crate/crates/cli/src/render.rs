use std::fmt::Write;

use serde_json::{json, Value};

use crate::args::Format;
use m0chow_core::relations::{Relation, RelationSet};
use m0chow_core::verify::CheckReport;
use m0chow_core::Int;

pub struct Presentation {
    pub set: RelationSet,
    pub full: bool,
}

pub struct GcdRow {
    pub i: u32,
    pub gcd: Int,
    pub prime: Option<u32>,
    pub consistent: bool,
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json output");
    s.push('\n');
    s
}

fn relation_json(rel: &Relation, r: u32, d: u32) -> Value {
    json!({
        "name": rel.label(),
        "i": rel.i,
        "k": rel.k,
        "r": r,
        "d": d,
        "degree": rel.degree(r),
        "path": rel.path,
        "checked_by": rel.checked_by,
        "poly": rel.poly,
        "text": rel.poly.to_string(),
    })
}

pub fn presentations(docs: &[Presentation], format: Format) -> String {
    match format {
        Format::Json => {
            let results: Vec<Value> = docs
                .iter()
                .map(|p| {
                    json!({
                        "r": p.set.r,
                        "d": p.set.d,
                        "ring": "Z",
                        "full": p.full,
                        "generators": p.set.relations.iter().map(|rel| relation_json(rel, p.set.r, p.set.d)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            pretty(&json!({ "command": "present", "results": results }))
        }
        Format::Latex => {
            let mut out = String::new();
            for p in docs {
                let (r, d) = (p.set.r, p.set.d);
                let gens: Vec<String> = p.set.relations.iter().map(|rel| rel.poly.latex().to_string()).collect();
                writeln!(
                    out,
                    "A^*\\left(\\overline{{\\mathcal{{M}}}}_{{0}}(\\mathbb{{P}}^{{{r}}}, {d})\\right) \\cong \\mathbb{{Z}}[c_1, c_2] \\Big/ \\left( {} \\right)",
                    gens.join(",\\ ")
                )
                .unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for p in docs {
                let (r, d) = (p.set.r, p.set.d);
                let n = p.set.relations.len();
                writeln!(out, "r = {r}, d = {d}: Z[c1, c2] / ({n} generators)").unwrap();
                for rel in &p.set.relations {
                    writeln!(out, "  {:<13} deg {:>3}  {}", rel.label(), rel.degree(r), rel.poly).unwrap();
                }
            }
            out
        }
    }
}

pub fn alphas(rels: &[(u32, u32, Relation)], format: Format) -> String {
    match format {
        Format::Json => {
            let results: Vec<Value> = rels.iter().map(|(r, d, rel)| relation_json(rel, *r, *d)).collect();
            pretty(&json!({ "command": "alpha", "results": results }))
        }
        Format::Latex => rels
            .iter()
            .map(|(r, d, rel)| format!("\\alpha_{{{},{}}}^{{{r},{d}}} = {}\n", rel.i, rel.k, rel.poly.latex()))
            .collect(),
        Format::Text => rels
            .iter()
            .map(|(r, d, rel)| format!("alpha_{{{},{}}}^{{{r},{d}}} = {}\n", rel.i, rel.k, rel.poly))
            .collect(),
    }
}

pub fn check_report(report: &CheckReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(report).expect("report serializes");
            v["command"] = json!("verify");
            pretty(&v)
        }
        Format::Latex | Format::Text => {
            let mut out = String::new();
            for f in &report.failures {
                writeln!(out, "FAIL {f}").unwrap();
            }
            let status = if report.passed { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{status} verify {}: {} cells, {} failing",
                report.kind,
                report.cells.len(),
                report.failures.len()
            )
            .unwrap();
            out
        }
    }
}

pub fn gcd_rows(rows: &[GcdRow], format: Format) -> String {
    match format {
        Format::Json => {
            let results: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "i": r.i,
                        "gcd": r.gcd.to_string(),
                        "is_prime_power": r.prime.is_some(),
                        "p": r.prime,
                        "consistent": r.consistent,
                    })
                })
                .collect();
            pretty(&json!({ "command": "gcd-binomials", "results": results }))
        }
        Format::Latex | Format::Text => rows
            .iter()
            .map(|r| {
                let class = match r.prime {
                    Some(p) => format!("prime power of {p}"),
                    None => "not a prime power".to_string(),
                };
                let flag = if r.consistent { "" } else { "  MISMATCH" };
                format!("i = {}: gcd {}, {class}{flag}\n", r.i, r.gcd)
            })
            .collect(),
    }
}
