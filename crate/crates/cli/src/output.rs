use std::fmt::Write as _;

use anyhow::Result;
use serde::Serialize;

use cyclotomic_blocks::residue::format_rational;
use cyclotomic_blocks::sweep::SweepReport;
use cyclotomic_blocks::{Multipartition, R1Report, RpnReport};

use crate::Format;

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

fn compact<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)?)
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

#[derive(Serialize)]
struct Enumeration<'a> {
    n: usize,
    r: usize,
    count: usize,
    multipartitions: &'a [Multipartition],
}

pub fn enumeration(n: usize, r: usize, all: &[Multipartition], fmt: Format) -> Result<String> {
    match fmt {
        Format::Json => json(&Enumeration { n, r, count: all.len(), multipartitions: all }),
        Format::Csv => csv_text(
            &["index", "multipartition"],
            all.iter().enumerate().map(|(i, m)| Ok(vec![i.to_string(), compact(m)?])).collect::<Result<_>>()?,
        ),
        Format::Table => {
            let mut s = format!("{} multipartitions of n={n}, r={r}\n", all.len());
            for (i, m) in all.iter().enumerate() {
                writeln!(s, "{i:>5}  {m}")?;
            }
            Ok(s)
        }
    }
}

pub fn r1_report(rep: &R1Report, fmt: Format) -> Result<String> {
    match fmt {
        Format::Json => json(rep),
        Format::Csv => {
            let mut rows = Vec::new();
            for (b, block) in rep.blocks.iter().enumerate() {
                for m in block {
                    rows.push(vec![b.to_string(), compact(m)?]);
                }
            }
            csv_text(&["block", "multipartition"], rows)
        }
        Format::Table => {
            let mut s = format!(
                "G({},1,{}) with h={} k=[{}]: {} block(s)\n",
                rep.r,
                rep.n,
                format_rational(&rep.params.h()),
                rep.params.k().iter().map(format_rational).collect::<Vec<_>>().join(","),
                rep.blocks.len()
            );
            for (b, block) in rep.blocks.iter().enumerate() {
                let members: Vec<String> = block.iter().map(ToString::to_string).collect();
                writeln!(s, "block {b} (size {}): {}", block.len(), members.join(" "))?;
            }
            writeln!(s, "{}", rep.note)?;
            Ok(s)
        }
    }
}

pub fn rpn_report(rep: &RpnReport, fmt: Format) -> Result<String> {
    let gamma = rep.gamma.clone().unwrap_or_default();
    let in_gamma = |m: &Multipartition| gamma.binary_search(m).is_ok();
    match fmt {
        Format::Json => json(rep),
        Format::Csv => {
            let mut rows = Vec::new();
            for (b, block) in rep.blocks.iter().enumerate() {
                for l in block {
                    rows.push(vec![
                        b.to_string(),
                        compact(&l.rep)?,
                        l.j.to_string(),
                        l.period.to_string(),
                        in_gamma(&l.rep).to_string(),
                    ]);
                }
            }
            csv_text(&["block", "rep", "j", "period", "in_gamma"], rows)
        }
        Format::Table => {
            let mut s = format!(
                "G({},{},{}) with h={} k=[{}]: {} label(s), {} block(s)\n",
                rep.r,
                rep.p.unwrap_or(1),
                rep.n,
                format_rational(&rep.params.h()),
                rep.params.k().iter().map(format_rational).collect::<Vec<_>>().join(","),
                rep.blocks.iter().map(Vec::len).sum::<usize>(),
                rep.blocks.len()
            );
            for (b, block) in rep.blocks.iter().enumerate() {
                let members: Vec<String> = block
                    .iter()
                    .map(|l| format!("{}<{}>{}", l.rep, l.j, if in_gamma(&l.rep) { "*" } else { "" }))
                    .collect();
                writeln!(s, "block {b} (size {}): {}", block.len(), members.join(" "))?;
            }
            writeln!(s, "(* marks labels whose multipartition is alone in its residue class)")?;
            writeln!(s, "{}", rep.note)?;
            Ok(s)
        }
    }
}

pub fn sweep<W: Serialize>(rep: &SweepReport<W>, fmt: Format) -> Result<String> {
    match fmt {
        Format::Json => json(rep),
        Format::Csv => {
            let mut rows = Vec::new();
            for f in &rep.failures {
                rows.push(vec![
                    rep.check.clone(),
                    f.n.to_string(),
                    f.r.to_string(),
                    f.p.map(|p| p.to_string()).unwrap_or_default(),
                    f.h.clone(),
                    f.k.join(" "),
                    compact(&f.detail)?,
                ]);
            }
            csv_text(&["check", "n", "r", "p", "h", "k", "detail"], rows)
        }
        Format::Table => {
            let mut s = format!(
                "{}: {} instance(s), {}\n",
                rep.check,
                rep.instances,
                if rep.pass { "all pass".to_string() } else { format!("{} counterexample(s)", rep.failures.len()) }
            );
            for f in &rep.failures {
                writeln!(
                    s,
                    "  n={} r={} p={} h={} k=[{}]: {}",
                    f.n,
                    f.r,
                    f.p.map(|p| p.to_string()).unwrap_or_else(|| "-".into()),
                    f.h,
                    f.k.join(","),
                    compact(&f.detail)?
                )?;
            }
            Ok(s)
        }
    }
}
