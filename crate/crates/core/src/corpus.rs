//! Benchmark corpus: six fixed polynomials (four real of degree 29 to 44,
//! two Gaussian-rational of degree 10) plus loading of user corpora.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::format::{parse_poly, AnyPoly};
use crate::number::{parse_rat, GaussRat};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: String,
    pub poly: AnyPoly,
}

const P1: &[&str] = &[
    "-85/68", "70/5", "88/79", "29/75", "80/51", "-66/52", "9/71", "-14/61", "-27/64", "-100/83",
    "1/53", "-23/85", "83/98", "48/16", "-89/25", "-100/5", "36/28", "1/1", "43/99", "-29/32",
    "74/97", "9/5", "20/70", "-89/27", "-33/48", "16/33", "84/63", "96/89", "22/69", "95/97",
];

const P2: &[&str] = &[
    "-34", "-28", "5", "-39", "83", "-89", "-49", "94", "-66", "18", "75", "84", "-98", "-68",
    "12", "46", "-43", "98", "24", "-30", "10", "-88", "54", "79", "-29", "12", "-55", "-46",
    "-18", "50",
];

const P3: &[&str] = &[
    "9/30", "-65/82", "-94/68", "9/33", "-56/83", "-22/35", "73/31", "69/2", "-58/43", "71/22",
    "-75/44", "2/49", "24/40", "33/62", "-17/2", "-39/82", "-55/43", "-26/47", "46/4", "-48/26",
    "35/83", "-50/100", "-60/65", "66/36", "-43/76", "30/24", "18/28", "-96/51", "49/42", "-41/89",
    "81/90", "-65/57", "-70/64", "-50/26", "91/40", "52/68", "-91/99", "-79/59", "15/93", "-56/42",
    "-20/59", "50/62", "-27/77", "28/53", "-36/75",
];

const P4: &[&str] = &[
    "-20", "-6", "-50", "-95", "35", "-64", "77", "-56", "18", "-94", "-74", "-69", "-62", "-93",
    "-4", "-41", "-47", "-48", "-95", "-41", "29", "76", "70", "-67", "-91", "-93", "-55", "-34",
    "-67", "-61", "-8", "32", "8", "-33", "-27", "-8", "88", "53", "-28", "-66", "-72", "-46",
    "15", "-19", "29",
];

const P5: &[(&str, &str)] = &[
    ("-93/47", "-49/8"),
    ("187/47", "547/88"),
    ("-203/67", "538/11"),
    ("2/67", "-1181/24"),
    ("133/81", "-25/24"),
    ("2111/5670", "71/12"),
    ("5949/70", "-64/15"),
    ("-305/3", "18/5"),
    ("4067/255", "-411/89"),
    ("-9/68", "2669/4895"),
    ("-3/20", "4/55"),
];

const P6: &[(&str, &str)] = &[
    ("51", "-83"),
    ("-82", "29"),
    ("-37", "-6"),
    ("1", "45"),
    ("145", "-57"),
    ("-10", "17"),
    ("-39", "22"),
    ("40", "-35"),
    ("-112", "-27"),
    ("106", "-2"),
    ("-63", "97"),
];

fn real(id: &str, cs: &[&str]) -> CorpusEntry {
    let coeffs = cs
        .iter()
        .map(|c| parse_rat(c).expect("valid literal"))
        .collect();
    CorpusEntry {
        id: id.to_string(),
        poly: AnyPoly::Real(Poly::new(coeffs)),
    }
}

fn complex(id: &str, cs: &[(&str, &str)]) -> CorpusEntry {
    let coeffs = cs
        .iter()
        .map(|(re, im)| GaussRat::new(parse_rat(re).unwrap(), parse_rat(im).unwrap()))
        .collect();
    CorpusEntry {
        id: id.to_string(),
        poly: AnyPoly::Complex(Poly::new(coeffs)),
    }
}

/// P1–P4 (real) and P5–P6 (complex).
pub fn builtin() -> Vec<CorpusEntry> {
    vec![
        real("P1", P1),
        real("P2", P2),
        real("P3", P3),
        real("P4", P4),
        complex("P5", P5),
        complex("P6", P6),
    ]
}

/// Loads every `*.json` polynomial file in `dir`, ids taken from file stems,
/// sorted by id. Files ending in `.spec.json` (ground-truth sidecars) are skipped.
pub fn load_dir(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let rd = fs::read_dir(dir)
        .map_err(|e| Error::Parse(format!("cannot read corpus {}: {e}", dir.display())))?;
    let mut out = Vec::new();
    for ent in rd {
        let path = ent
            .map_err(|e| Error::Parse(format!("cannot read corpus entry: {e}")))?
            .path();
        let name = path
            .file_name()
            .and_then(|n| n.to_str())
            .unwrap_or_default();
        if !name.ends_with(".json") || name.ends_with(".spec.json") {
            continue;
        }
        let text = fs::read_to_string(&path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        let poly =
            parse_poly(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        out.push(CorpusEntry {
            id: name.trim_end_matches(".json").to_string(),
            poly,
        });
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}
