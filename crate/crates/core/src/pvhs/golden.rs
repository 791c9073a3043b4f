//! The reference weight tables of the 27-dimensional `E6` and the
//! 56-dimensional `E7` representations, compared as sets against the
//! computed weight systems.

use std::collections::BTreeSet;
use std::path::Path;

use crate::error::{Error, Result};
use crate::repchar::{Characters, IrrepLabel};
use crate::rootsys::{Family, RootSystem, WeightVector};

pub const DEFAULT_GOLDEN: &str = include_str!("../../data/golden_tables.txt");

/// Rows in file order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenTables {
    pub e6: Vec<Vec<i64>>,
    pub e7: Vec<Vec<i64>>,
}

/// One line per weight, `E6 (a1,...,a6)` or `E7 (a1,...,a7)`; `#` starts a
/// comment line.
pub fn parse_golden(text: &str) -> Result<GoldenTables> {
    let mut tables = GoldenTables { e6: Vec::new(), e7: Vec::new() };
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |why: &str| Error::Golden(format!("line {}: {why}: {raw:?}", lineno + 1));
        let (tag, tuple) = line.split_once(char::is_whitespace).ok_or_else(|| bad("missing tuple"))?;
        let w: WeightVector = tuple.trim().parse().map_err(|_| bad("malformed tuple"))?;
        if w.charge != 0 {
            return Err(bad("unexpected charge"));
        }
        let (dest, len) = match tag {
            "E6" => (&mut tables.e6, 6),
            "E7" => (&mut tables.e7, 7),
            _ => return Err(bad("unknown tag")),
        };
        if w.coords.len() != len {
            return Err(bad("wrong tuple length"));
        }
        dest.push(w.coords);
    }
    Ok(tables)
}

/// The tables shipped with the crate.
pub fn golden_tables() -> GoldenTables {
    parse_golden(DEFAULT_GOLDEN).expect("embedded golden tables parse")
}

pub fn load_golden(path: &Path) -> Result<GoldenTables> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Golden(format!("cannot read {}: {e}", path.display())))?;
    parse_golden(&text)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GoldenReport {
    pub e6_matched: usize,
    pub e7_matched: usize,
    /// One entry per offending tuple.
    pub mismatches: Vec<String>,
}

impl GoldenReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn compare(tag: &str, rs: &RootSystem, node: usize, rows: &[Vec<i64>], report: &mut GoldenReport) -> Result<usize> {
    let label = IrrepLabel::from_weight(WeightVector::fundamental(rs.rank(), node)?)?;
    let computed = Characters::new(rs).weight_system(&label)?;
    let mut seen = BTreeSet::new();
    let mut matched = 0;
    for row in rows {
        let w = WeightVector::new(row.clone(), 0);
        if !seen.insert(row.clone()) {
            report.mismatches.push(format!("{tag} {w}: listed twice"));
            continue;
        }
        match computed.get(&w) {
            0 => report.mismatches.push(format!("{tag} {w}: not a weight of ω{node}")),
            1 => matched += 1,
            m => report.mismatches.push(format!("{tag} {w}: computed multiplicity {m}")),
        }
    }
    for (w, _) in computed.sorted() {
        if !seen.contains(&w.coords) {
            report.mismatches.push(format!("{tag} {w}: weight missing from the table"));
        }
    }
    Ok(matched)
}

pub fn verify_golden(tables: &GoldenTables) -> Result<GoldenReport> {
    let mut report = GoldenReport::default();
    let e6 = RootSystem::simple(Family::E6, 6)?;
    let e7 = RootSystem::simple(Family::E7, 7)?;
    report.e6_matched = compare("E6", &e6, 1, &tables.e6, &mut report)?;
    report.e7_matched = compare("E7", &e7, 7, &tables.e7, &mut report)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_match() {
        let t = golden_tables();
        assert_eq!((t.e6.len(), t.e7.len()), (27, 56));
        assert_eq!(t.e6[0], vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(t.e6[26], vec![0, 0, 0, 0, 0, -1]);
        assert_eq!(t.e7[0], vec![0, 0, 0, 0, 0, 0, 1]);
        let r = verify_golden(&t).unwrap();
        assert!(r.pass(), "{:?}", r.mismatches);
        assert_eq!((r.e6_matched, r.e7_matched), (27, 56));
    }

    #[test]
    fn tampered_tuple_is_named() {
        let text = DEFAULT_GOLDEN.replacen("E6 (0,0,0,0,0,-1)", "E6 (0,0,0,0,-1,-1)", 1);
        let r = verify_golden(&parse_golden(&text).unwrap()).unwrap();
        assert!(!r.pass());
        assert!(r.mismatches.iter().any(|m| m.contains("(0,0,0,0,-1,-1)")));
        assert!(r.mismatches.iter().any(|m| m.contains("(0,0,0,0,0,-1)") && m.contains("missing")));
    }

    #[test]
    fn malformed_lines_are_rejected() {
        assert!(parse_golden("E8 (1,0)").is_err());
        assert!(parse_golden("E6 (1,0,0)").is_err());
        assert!(parse_golden("E6").is_err());
        assert!(parse_golden("# only a comment\n").unwrap().e6.is_empty());
    }
}
