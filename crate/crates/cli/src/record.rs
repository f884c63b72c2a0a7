//! Flat output records and their CSV / JSON-lines encodings.

use std::io::{BufRead, Write};

use anyhow::{Context, Result};
use double_angle::bisector::family_bisector;
use double_angle::family::is_primitive;
use double_angle::triangle::{classify, cosines};
use double_angle::{FamilyMember, Rational};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Jsonl,
}

/// One family member. Exact rationals are `p/q` strings; the `approx_*`
/// columns are rounded degrees for display and are present only when
/// requested.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub perimeter: u64,
    pub l: u64,
    pub k: u64,
    pub m: u64,
    pub d: Option<u64>,
    pub primitive: bool,
    pub angle_class: String,
    pub branch: String,
    pub r: Option<u64>,
    pub dc: Option<u64>,
    pub cos_a: String,
    pub cos_b: String,
    pub cos_c: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx_angle_a_deg: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx_angle_b_deg: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx_angle_c_deg: Option<String>,
}

const BASE_HEADER: [&str; 16] = [
    "a",
    "b",
    "c",
    "perimeter",
    "l",
    "k",
    "m",
    "d",
    "primitive",
    "angle_class",
    "branch",
    "r",
    "dc",
    "cos_a",
    "cos_b",
    "cos_c",
];
const APPROX_HEADER: [&str; 3] = [
    "approx_angle_a_deg",
    "approx_angle_b_deg",
    "approx_angle_c_deg",
];

fn integral(q: Option<Rational>) -> Option<u64> {
    q?.to_integer().and_then(|n| u64::try_from(n).ok())
}

/// Degrees from an exact cosine, three decimals. Display only.
pub fn approx_degrees(cos: &Rational) -> String {
    format!("{:.3}", cos.to_f64().clamp(-1.0, 1.0).acos().to_degrees())
}

impl OutputRecord {
    /// `bisector_record` fills `d`, `r` and `dc` for integral-bisector
    /// members.
    pub fn from_member(member: &FamilyMember, bisector_record: bool, approx: bool) -> Result<Self> {
        let t = member.triangle;
        let cos = cosines(&t).with_context(|| format!("cosines of {t}"))?;
        let class = classify(&t).with_context(|| format!("classifying {t}"))?;
        let (d, r, dc) = if bisector_record {
            let data = match member.bisector {
                Some(data) => data,
                None => family_bisector(&t)?,
            };
            (
                member.params.bisector_params().map(|bp| bp.d),
                integral(data.r),
                integral(Some(data.dc)),
            )
        } else {
            (None, None, None)
        };
        let degrees = |q: &Rational| approx.then(|| approx_degrees(q));
        Ok(OutputRecord {
            a: t.a(),
            b: t.b(),
            c: t.c(),
            perimeter: u64::try_from(t.perimeter()).context("perimeter exceeds 64 bits")?,
            l: member.params.l,
            k: member.params.k,
            m: member.params.m,
            d,
            primitive: is_primitive(&t),
            angle_class: class.to_string(),
            branch: member.branch.to_string(),
            r,
            dc,
            cos_a: cos.cos_a.to_string(),
            cos_b: cos.cos_b.to_string(),
            cos_c: cos.cos_c.to_string(),
            approx_angle_a_deg: degrees(&cos.cos_a),
            approx_angle_b_deg: degrees(&cos.cos_b),
            approx_angle_c_deg: degrees(&cos.cos_c),
        })
    }
}

/// Writes the header (always, even with no records) then one row per record.
pub fn write_csv<W: Write>(out: W, records: &[OutputRecord], approx: bool) -> Result<()> {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    let mut header: Vec<&str> = BASE_HEADER.to_vec();
    if approx {
        header.extend(APPROX_HEADER);
    }
    writer.write_record(&header)?;
    for record in records {
        writer.serialize(record)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn write_jsonl<W: Write>(mut out: W, records: &[OutputRecord]) -> Result<()> {
    for record in records {
        serde_json::to_writer(&mut out, record)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_records<W: Write>(
    out: W,
    records: &[OutputRecord],
    format: Format,
    approx: bool,
) -> Result<()> {
    match format {
        Format::Csv => write_csv(out, records, approx),
        Format::Jsonl => write_jsonl(out, records),
    }
}

pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<OutputRecord>> {
    let mut reader = csv::Reader::from_reader(input);
    reader
        .deserialize()
        .map(|row| row.context("malformed CSV record"))
        .collect()
}

pub fn read_jsonl<R: BufRead>(input: R) -> Result<Vec<OutputRecord>> {
    input
        .lines()
        .filter(|line| !matches!(line, Ok(l) if l.trim().is_empty()))
        .map(|line| {
            let line = line?;
            serde_json::from_str(&line).context("malformed JSON record")
        })
        .collect()
}
