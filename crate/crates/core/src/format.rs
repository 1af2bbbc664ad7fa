//! Text and JSON encodings of presentations.
//!
//! Native format, one presentation per line, whitespace-insensitive:
//!
//! ```text
//! n=6; P1:1-3,4-6; P2:2-6,3-5; P3:1-5,2-4
//! ```
//!
//! JSON mirror: `{"n":6,"pages":[[[1,3],[4,6]],[[2,6],[3,5]],[[1,5],[2,4]]]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::{PresentationData, ThreePagePresentation, PAGES};

/// Parses the native format without checking presentation rules beyond
/// syntax and index range.
pub fn parse_data(text: &str) -> Result<PresentationData> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut fields = compact.split(';').filter(|f| !f.is_empty());
    let head = fields.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let n: u32 = head
        .strip_prefix("n=")
        .ok_or_else(|| Error::Parse(format!("expected `n=<int>`, found `{head}`")))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad point count in `{head}`")))?;
    let mut pages: [Option<Vec<(u32, u32)>>; PAGES] = Default::default();
    for field in fields {
        let (label, body) = field
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `P<k>:...`, found `{field}`")))?;
        let idx = match label {
            "P1" => 0,
            "P2" => 1,
            "P3" => 2,
            _ => return Err(Error::Parse(format!("unknown page label `{label}`"))),
        };
        if pages[idx].is_some() {
            return Err(Error::Parse(format!("page {label} given twice")));
        }
        let mut arcs = Vec::new();
        for item in body.split(',').filter(|s| !s.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("expected `i-j`, found `{item}`")))?;
            let a: u32 = a.parse().map_err(|_| Error::Parse(format!("bad index in `{item}`")))?;
            let b: u32 = b.parse().map_err(|_| Error::Parse(format!("bad index in `{item}`")))?;
            for x in [a, b] {
                if x == 0 || x > n {
                    return Err(Error::Parse(format!("index {x} out of range 1..={n}")));
                }
            }
            if a == b {
                return Err(Error::Parse(format!("degenerate arc `{item}`")));
            }
            arcs.push((a.min(b), a.max(b)));
        }
        pages[idx] = Some(arcs);
    }
    let mut out = PresentationData { n, ..Default::default() };
    for (i, p) in pages.into_iter().enumerate() {
        out.pages[i] = p.ok_or_else(|| Error::Parse(format!("missing page P{}", i + 1)))?;
    }
    Ok(out)
}

/// Parses and validates.
pub fn parse(text: &str) -> Result<ThreePagePresentation> {
    ThreePagePresentation::try_from(parse_data(text)?)
}

/// Serializes in the normalized native form (sorted arcs, single spaces).
pub fn serialize(p: &ThreePagePresentation) -> String {
    serialize_data(&p.to_data())
}

pub fn serialize_data(d: &PresentationData) -> String {
    let mut out = format!("n={}", d.n);
    for (i, page) in d.pages.iter().enumerate() {
        let mut arcs = page.clone();
        arcs.sort();
        let body: Vec<String> = arcs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        out.push_str(&format!("; P{}:{}", i + 1, body.join(",")));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct JsonPresentation {
    n: u32,
    pages: Vec<Vec<[u32; 2]>>,
}

pub fn to_json(p: &ThreePagePresentation) -> String {
    let d = p.to_data();
    let j = JsonPresentation {
        n: d.n,
        pages: d.pages.iter().map(|pg| pg.iter().map(|&(a, b)| [a, b]).collect()).collect(),
    };
    serde_json::to_string(&j).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<ThreePagePresentation> {
    let j: JsonPresentation = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if j.pages.len() != PAGES {
        return Err(Error::Parse(format!("expected 3 pages, found {}", j.pages.len())));
    }
    let mut d = PresentationData { n: j.n, ..Default::default() };
    for (i, pg) in j.pages.into_iter().enumerate() {
        d.pages[i] = pg.into_iter().map(|[a, b]| (a, b)).collect();
    }
    ThreePagePresentation::try_from(d)
}

/// Accepts either encoding, choosing by the first non-space character.
pub fn parse_any(text: &str) -> Result<ThreePagePresentation> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        parse(text)
    }
}
