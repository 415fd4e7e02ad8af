//! Tree degree sequences and their text grammar (`8,3,3,3,2,1*11`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A tree degree sequence, always stored nonincreasing.
///
/// For `n >= 2` every entry is at least 1 and the entries sum to `2(n - 1)`;
/// the single-vertex tree is the sequence `(0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DegreeSequence {
    degrees: Vec<u32>,
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<u32>) -> Result<Self> {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let n = degrees.len();
        match n {
            0 => return Err(Error::NotATreeSequence("empty sequence".into())),
            1 if degrees[0] == 0 => return Ok(DegreeSequence { degrees }),
            1 => {
                return Err(Error::NotATreeSequence(
                    "the single-vertex tree has degree sequence (0)".into(),
                ))
            }
            _ => {}
        }
        if degrees[n - 1] < 1 {
            return Err(Error::NotATreeSequence(format!(
                "{} has a degree-0 vertex",
                fmt_degrees(&degrees)
            )));
        }
        let sum: u64 = degrees.iter().map(|&d| u64::from(d)).sum();
        if sum != 2 * (n as u64 - 1) {
            return Err(Error::NotATreeSequence(format!(
                "{} sums to {sum}, a tree on {n} vertices needs {}",
                fmt_degrees(&degrees),
                2 * (n - 1)
            )));
        }
        Ok(DegreeSequence { degrees })
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    /// Number of internal (degree >= 2) vertices.
    pub fn k(&self) -> usize {
        self.degrees.iter().take_while(|&&d| d >= 2).count()
    }

    /// `d_i` with the 1-based indexing of `d_1 >= d_2 >= ...`.
    pub fn d(&self, i: usize) -> u32 {
        self.degrees[i - 1]
    }

    pub fn internal_degrees(&self) -> &[u32] {
        &self.degrees[..self.k()]
    }

    /// Pendant counts `d_i - 2` of the internal vertices, nonincreasing.
    pub fn pendant_counts(&self) -> Vec<u32> {
        self.internal_degrees().iter().map(|d| d - 2).collect()
    }
}

fn fmt_degrees(degrees: &[u32]) -> String {
    let parts: Vec<String> = degrees.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Parses `int (, int)*` where each entry may carry a `*m` repeat suffix.
    fn from_str(text: &str) -> Result<Self> {
        let mut degrees = Vec::new();
        for item in text.split(',') {
            let item = item.trim();
            let (value, repeat) = match item.split_once('*') {
                Some((v, m)) => (v.trim(), m.trim()),
                None => (item, "1"),
            };
            let value: u32 = value
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree {item:?} in {text:?}")))?;
            let repeat: usize = repeat
                .parse()
                .map_err(|_| Error::Parse(format!("bad repeat count in {item:?}")))?;
            if repeat == 0 {
                return Err(Error::Parse(format!("zero repeat count in {item:?}")));
            }
            degrees.extend(std::iter::repeat_n(value, repeat));
        }
        DegreeSequence::new(degrees)
    }
}

impl fmt::Display for DegreeSequence {
    /// Compact form using the repeat suffix for runs, e.g. `8,3*3,2,1*11`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for run in self.degrees.chunk_by(|a, b| a == b) {
            if run.len() == 1 {
                parts.push(run[0].to_string());
            } else {
                parts.push(format!("{}*{}", run[0], run.len()));
            }
        }
        f.write_str(&parts.join(","))
    }
}

impl TryFrom<Vec<u32>> for DegreeSequence {
    type Error = Error;

    fn try_from(degrees: Vec<u32>) -> Result<Self> {
        DegreeSequence::new(degrees)
    }
}

impl From<DegreeSequence> for Vec<u32> {
    fn from(ds: DegreeSequence) -> Self {
        ds.degrees
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<DegreeSequence> {
        s.parse()
    }

    #[test]
    fn parses_repeat_suffix() {
        assert_eq!(parse("3,2,1*3").unwrap().degrees(), &[3, 2, 1, 1, 1]);
        assert_eq!(parse("2,2,1,1").unwrap().degrees(), &[2, 2, 1, 1]);
        let big = parse("8,3,3,3,2,1*11").unwrap();
        assert_eq!(big.n(), 16);
        assert_eq!(big.k(), 5);
        assert_eq!(big.pendant_counts(), vec![6, 1, 1, 1, 0]);
    }

    #[test]
    fn sorts_input() {
        assert_eq!(parse("1, 2, 1, 3 ,1").unwrap().degrees(), &[3, 2, 1, 1, 1]);
    }

    #[test]
    fn rejects_non_tree_sequences() {
        assert!(matches!(parse("3,3,1,1"), Err(Error::NotATreeSequence(_))));
        assert!(matches!(parse("2,2,0,1,1"), Err(Error::NotATreeSequence(_))));
        assert!(matches!(parse("1"), Err(Error::NotATreeSequence(_))));
        assert!(matches!(parse("0,0"), Err(Error::NotATreeSequence(_))));
    }

    #[test]
    fn rejects_malformed_text() {
        for bad in ["", "a,1", "2,,1", "1*x", "1*0", "-1,3", "2*"] {
            assert!(matches!(parse(bad), Err(Error::Parse(_))), "{bad:?}");
        }
    }

    #[test]
    fn tiny_sequences() {
        let one = parse("0").unwrap();
        assert_eq!((one.n(), one.k()), (1, 0));
        let two = parse("1,1").unwrap();
        assert_eq!((two.n(), two.k()), (2, 0));
    }

    #[test]
    fn display_round_trips() {
        for s in ["8,3*3,2,1*11", "0", "1*2", "3,2,1*3"] {
            let ds = parse(s).unwrap();
            assert_eq!(ds.to_string(), s);
            assert_eq!(parse(&ds.to_string()).unwrap(), ds);
        }
    }

    #[test]
    fn serde_as_plain_array() {
        let ds = parse("3,2,1*3").unwrap();
        let json = serde_json::to_string(&ds).unwrap();
        assert_eq!(json, "[3,2,1,1,1]");
        let back: DegreeSequence = serde_json::from_str(&json).unwrap();
        assert_eq!(back, ds);
        assert!(serde_json::from_str::<DegreeSequence>("[3,3,1,1]").is_err());
    }
}
