//! Betti tables of 3-regular resolutions and their renderings.

use std::fmt;

use serde::{Deserialize, Serialize};

/// One row of a Betti table. Entry `k` holds the value at homological
/// degree `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Strand(pub Vec<u64>);

impl Strand {
    pub fn zeros(len: usize) -> Self {
        Strand(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at homological degree `i`; zero outside the stored range.
    pub fn at(&self, i: i64) -> u64 {
        if i < 1 {
            return 0;
        }
        self.0.get(i as usize - 1).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// Resized to `len` entries, truncating only zeros.
    pub fn resized(&self, len: usize) -> Option<Strand> {
        if self.0.iter().skip(len).any(|&v| v != 0) {
            return None;
        }
        let mut v = self.0.clone();
        v.resize(len, 0);
        Some(Strand(v))
    }
}

impl From<Vec<u64>> for Strand {
    fn from(v: Vec<u64>) -> Self {
        Strand(v)
    }
}

/// Betti table with `b_{0,0} = 1` and only the quadratic strand
/// `quad[i-1] = b_{i,i+1}` and cubic strand `cubic[i-1] = b_{i,i+2}`, for
/// `i = 1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiTable {
    pub n: usize,
    pub quad: Strand,
    pub cubic: Strand,
}

/// A single entry `b_{i,j}` that differs between two tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDiff {
    pub i: usize,
    pub j: usize,
    pub left: u64,
    pub right: u64,
}

impl BettiTable {
    /// Strands shorter than `n` are zero-padded.
    pub fn new(n: usize, quad: impl Into<Strand>, cubic: impl Into<Strand>) -> Self {
        let mut quad = quad.into();
        let mut cubic = cubic.into();
        quad.0.resize(n.max(quad.len()), 0);
        cubic.0.resize(n.max(cubic.len()), 0);
        BettiTable { n, quad, cubic }
    }

    /// `b_{i,j}`, zero off the two strands.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        match (i, j) {
            (0, 0) => 1,
            (0, _) => 0,
            _ if j == i + 1 => self.quad.at(i as i64),
            _ if j == i + 2 => self.cubic.at(i as i64),
            _ => 0,
        }
    }

    pub fn total(&self, i: usize) -> u64 {
        if i == 0 {
            1
        } else {
            self.quad.at(i as i64) + self.cubic.at(i as i64)
        }
    }

    /// Last homological degree with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        (1..=self.quad.len().max(self.cubic.len()))
            .rev()
            .find(|&i| self.total(i) != 0)
            .unwrap_or(0)
    }

    pub fn totals(&self) -> Vec<u64> {
        (0..=self.projective_dimension()).map(|i| self.total(i)).collect()
    }

    /// Entries that differ, in (i, j) order.
    pub fn diff(&self, other: &BettiTable) -> Vec<EntryDiff> {
        let top = self.quad.len().max(self.cubic.len()).max(other.quad.len()).max(other.cubic.len());
        let mut out = Vec::new();
        if self.n != other.n {
            // ambient mismatch is reported as a difference in b_{0,0}'s neighbor
            out.push(EntryDiff {
                i: 0,
                j: 0,
                left: self.n as u64,
                right: other.n as u64,
            });
        }
        for i in 1..=top {
            for j in [i + 1, i + 2] {
                let (l, r) = (self.get(i, j), other.get(i, j));
                if l != r {
                    out.push(EntryDiff { i, j, left: l, right: r });
                }
            }
        }
        out
    }

    /// Paper-style layout: header of homological degrees, a `T` totals row,
    /// then rows 0..=2 with `-` for zeros.
    pub fn render_text(&self) -> String {
        let cols = self.projective_dimension();
        let last_row = if !self.cubic.is_zero() {
            2
        } else if !self.quad.is_zero() {
            1
        } else {
            0
        };
        let mut rows: Vec<Vec<String>> = Vec::new();
        let mut header = vec!["-".to_string()];
        header.extend((0..=cols).map(|i| i.to_string()));
        rows.push(header);
        let mut totals = vec!["T".to_string()];
        totals.extend((0..=cols).map(|i| self.total(i).to_string()));
        rows.push(totals);
        for r in 0..=last_row {
            let mut row = vec![r.to_string()];
            row.extend((0..=cols).map(|i| match self.get(i, i + r) {
                0 => "-".to_string(),
                v => v.to_string(),
            }));
            rows.push(row);
        }
        let width: Vec<usize> = (0..=cols + 1).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(1)).collect();
        let mut out = String::new();
        for (k, row) in rows.iter().enumerate() {
            let mut line = format!("{:>w$} |", row[0], w = width[0]);
            for c in 1..row.len() {
                line.push_str(&format!(" {:>w$}", row[c], w = width[c]));
            }
            out.push_str(&line);
            out.push('\n');
            if k == 0 {
                out.push_str(&"-".repeat(line.len()));
                out.push('\n');
            }
        }
        out
    }

    /// Nonzero entries as `row,col,value` where row is `j - i`.
    pub fn render_csv(&self) -> String {
        let mut out = String::from("row,col,value\n");
        out.push_str("0,0,1\n");
        for r in 1..=2 {
            for i in 1..=self.projective_dimension() {
                let v = self.get(i, i + r);
                if v != 0 {
                    out.push_str(&format!("{r},{i},{v}\n"));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ladder() -> BettiTable {
        BettiTable::new(5, vec![8, 12, 6, 1, 0], vec![0, 3, 5, 2, 0])
    }

    #[test]
    fn accessors() {
        let t = ladder();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(2, 3), 12);
        assert_eq!(t.get(4, 6), 2);
        assert_eq!(t.get(2, 5), 0);
        assert_eq!(t.totals(), vec![1, 8, 15, 11, 3]);
        assert_eq!(t.projective_dimension(), 4);
    }

    #[test]
    fn text_layout() {
        let text = ladder().render_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "- | 0 1  2  3 4");
        assert_eq!(lines[2], "T | 1 8 15 11 3");
        assert_eq!(lines[3], "0 | 1 -  -  - -");
        assert_eq!(lines[4], "1 | - 8 12  6 1");
        assert_eq!(lines[5], "2 | - -  3  5 2");
    }

    #[test]
    fn csv_and_json() {
        let t = ladder();
        let csv = t.render_csv();
        assert!(csv.starts_with("row,col,value\n0,0,1\n1,1,8\n"));
        assert!(csv.contains("2,4,2\n"));
        let back = BettiTable::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert_eq!(t.to_json(), r#"{"n":5,"quad":[8,12,6,1,0],"cubic":[0,3,5,2,0]}"#);
    }

    #[test]
    fn diffs() {
        let a = ladder();
        let mut b = ladder();
        b.cubic.0[1] = 4;
        assert_eq!(
            a.diff(&b),
            vec![EntryDiff {
                i: 2,
                j: 4,
                left: 3,
                right: 4
            }]
        );
        assert!(a.diff(&a).is_empty());
    }
}
