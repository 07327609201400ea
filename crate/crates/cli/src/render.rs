//! Text and JSON renderings of command results.

use std::fmt::Write as _;
use std::io::{self, Write as _};

use nsq_core::explore::{self, Census, ExperimentRecord};
use nsq_core::rank::HalvingReason;
use nsq_core::{
    Error, FamilyInstance, NumericalSemigroup, QuotientRep, RankBounds, RankCertificate,
};
use serde::Serialize;
use serde_json::{json, Value};

/// Gap lists longer than this are summarised in text output.
const MAX_LISTED_GAPS: u64 = 100;

pub enum Output {
    Text(String),
    Json(Value),
}

impl Output {
    /// Writes to stdout. A closed pipe is not an error.
    pub fn print(&self) -> io::Result<()> {
        let mut stdout = io::stdout().lock();
        let written = match self {
            Output::Text(text) => stdout.write_all(text.as_bytes()),
            Output::Json(value) => {
                let text = serde_json::to_string_pretty(value).expect("json values serialize");
                writeln!(stdout, "{text}")
            }
        }
        .and_then(|()| stdout.flush());
        match written {
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
            other => other,
        }
    }
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("library types serialize")
}

fn joined(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// `⟨3,4,5⟩  m=3  F=2  g=2`, or the content for non-primitive semigroups.
fn summary_line(s: &NumericalSemigroup) -> String {
    if s.is_primitive() {
        format!(
            "{s}  m={}  F={}  g={}",
            s.multiplicity(),
            s.frobenius(),
            s.genus()
        )
    } else {
        format!("{s}  m={}  content={}", s.multiplicity(), s.content())
    }
}

pub fn semigroup(s: &NumericalSemigroup, json: bool) -> Output {
    if json {
        Output::Json(to_value(s))
    } else {
        Output::Text(format!("{}\n", joined(s.min_gens())))
    }
}

pub fn analysis(s: &NumericalSemigroup, json: bool) -> Output {
    let gaps = s.is_primitive().then(|| s.gaps().expect("primitive"));
    if json {
        return Output::Json(json!({
            "semigroup": s,
            "embedding_dimension": s.embedding_dimension(),
            "med": s.is_med(),
            "apery": s.apery(),
            "gaps": gaps,
        }));
    }
    let mut out = String::new();
    writeln!(out, "{}", summary_line(s)).unwrap();
    writeln!(out, "e={}  med={}", s.embedding_dimension(), s.is_med()).unwrap();
    if let Some(gaps) = gaps {
        if s.genus() <= MAX_LISTED_GAPS {
            writeln!(out, "gaps: {}", joined(&gaps)).unwrap();
        } else {
            writeln!(out, "gaps: {} (not listed)", s.genus()).unwrap();
        }
        writeln!(out, "apery({}): {}", s.multiplicity(), joined(s.apery())).unwrap();
    }
    Output::Text(out)
}

fn rep_text(r: &QuotientRep) -> String {
    let base = format!("{}:{}", joined(r.numerator.as_slice()), r.denominator);
    match r.scale {
        1 => base,
        m => format!("{m}*{base}"),
    }
}

pub fn rep(r: &QuotientRep, json: bool) -> Output {
    if json {
        Output::Json(to_value(r))
    } else {
        Output::Text(format!("{}\n", rep_text(r)))
    }
}

pub fn verification(s: &NumericalSemigroup, r: &QuotientRep, ok: bool, json: bool) -> Output {
    if json {
        Output::Json(json!({ "semigroup": s, "rep": r, "verified": ok }))
    } else {
        Output::Text(format!("{ok}\n"))
    }
}

fn describe(cert: &RankCertificate) -> String {
    match cert {
        RankCertificate::FullRank { table, .. } => format!(
            "full rank: no generator subset sum lies in the semigroup of the others ({} subsets)",
            table.len()
        ),
        RankCertificate::NotKQuotient { k, elements, table } => {
            let odd = table
                .iter()
                .filter(|r| matches!(r.reason, HalvingReason::OddSum))
                .count();
            format!(
                "not a {k}-quotient: no subset of {} halves into the semigroup ({odd} odd sums, {} halves outside)",
                joined(elements),
                table.len() - odd
            )
        }
        RankCertificate::PmOrdering { ordering } => {
            format!("2-quotient ordering {}", joined(ordering))
        }
        RankCertificate::NoPmOrdering { .. } => {
            "no 2-quotient ordering of the generators".to_string()
        }
        RankCertificate::Representation { rep } => format!("representation {}", rep_text(rep)),
        RankCertificate::Trivial { note } => note.clone(),
        RankCertificate::Inconclusive { reason, .. } => format!("inconclusive: {reason}"),
    }
}

pub fn rank(s: &NumericalSemigroup, bounds: &RankBounds, json: bool) -> Output {
    if json {
        return Output::Json(json!({ "semigroup": s, "bounds": bounds }));
    }
    let mut out = String::new();
    if bounds.exact {
        writeln!(out, "{s}  rank {} (exact)", bounds.lower).unwrap();
    } else {
        writeln!(out, "{s}  rank in [{}, {}]", bounds.lower, bounds.upper).unwrap();
    }
    writeln!(
        out,
        "lower {}: {}",
        bounds.lower,
        describe(&bounds.lower_certificate)
    )
    .unwrap();
    writeln!(
        out,
        "upper {}: {}",
        bounds.upper,
        describe(&bounds.upper_certificate)
    )
    .unwrap();
    if bounds.budget_exhausted {
        writeln!(out, "search budget exhausted before the bounds met").unwrap();
    }
    Output::Text(out)
}

/// A verifier's proof table, kept as JSON, and its row count.
pub struct Proof {
    value: Value,
    rows: usize,
}

impl Proof {
    pub fn new<T: Serialize>(proof: &T, rows: usize) -> Self {
        Self {
            value: to_value(proof),
            rows,
        }
    }
}

pub fn family(
    inst: &FamilyInstance,
    s: &NumericalSemigroup,
    proof: Option<Proof>,
    json: bool,
) -> Output {
    if json {
        return Output::Json(json!({
            "instance": inst,
            "semigroup": s,
            "proof": proof.map(|p| p.value),
        }));
    }
    let mut out = String::new();
    writeln!(out, "{}", joined(s.min_gens())).unwrap();
    writeln!(out, "witnesses: {}", joined(&inst.witnesses)).unwrap();
    if let Some(n) = inst.threshold {
        writeln!(out, "N = {n}").unwrap();
    }
    if let Some(p) = proof {
        writeln!(out, "verified: {} witnesses checked", p.rows).unwrap();
    }
    Output::Text(out)
}

pub fn genus_counts(counts: &[u64], json: bool) -> Output {
    if json {
        return Output::Json(json!({ "counts": counts }));
    }
    let mut out = String::from("genus count\n");
    for (g, c) in counts.iter().enumerate() {
        writeln!(out, "{g} {c}").unwrap();
    }
    Output::Text(out)
}

pub fn population(m: u32, g: u32, members: &[NumericalSemigroup], json: bool) -> Output {
    if json {
        return Output::Json(json!({
            "multiplicity": m,
            "genus": g,
            "count": members.len(),
            "semigroups": members,
        }));
    }
    let mut out = String::new();
    for s in members {
        writeln!(out, "{}", summary_line(s)).unwrap();
    }
    writeln!(out, "{} semigroups", members.len()).unwrap();
    Output::Text(out)
}

pub fn census(census: &Census, json: bool) -> Output {
    if json {
        return Output::Json(to_value(census));
    }
    let mut out = String::new();
    for row in &census.rows {
        let rank = if row.bounds.exact {
            row.bounds.lower.to_string()
        } else {
            format!("[{}, {}]", row.bounds.lower, row.bounds.upper)
        };
        writeln!(
            out,
            "⟨{}⟩  e={}  med={}  rank {rank}",
            joined(&row.gens),
            row.embedding_dimension,
            row.med
        )
        .unwrap();
    }
    writeln!(
        out,
        "{} semigroups  med {:.3}  full rank {:.3}  rank<=2 {:.3}  budget exhausted {}",
        census.rows.len(),
        census.med_fraction,
        census.full_rank_fraction,
        census.rank_le_2_fraction,
        census.budget_exhausted
    )
    .unwrap();
    Output::Text(out)
}

pub fn experiment(records: &[ExperimentRecord], json: bool) -> Result<Output, Error> {
    if json {
        return Ok(Output::Json(to_value(&records)));
    }
    let mut buf = Vec::new();
    explore::write_csv(records, &mut buf)?;
    Ok(Output::Text(
        String::from_utf8(buf).expect("csv output is utf-8"),
    ))
}
