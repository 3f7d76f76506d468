use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// A partition, stored as its weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition(parts.into_iter().filter(|&p| p > 0).collect()))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn single_row(n: usize) -> Self {
        Partition(if n == 0 { vec![] } else { vec![n] })
    }

    pub fn single_column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let w = self.part(0);
        Partition((0..w).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Prepend a column of height `h`: the first `h` rows grow by one.
    pub fn inflate(&self, h: usize) -> Self {
        let rows = self.len().max(h);
        Partition((0..rows).map(|i| self.part(i) + usize::from(i < h)).collect())
    }

    /// Strip a first column of height exactly `h`, if the diagram has `h` rows.
    pub fn strip_column(&self, h: usize) -> Option<Self> {
        (self.len() == h).then(|| Partition(self.0.iter().map(|&p| p - 1).filter(|&p| p > 0).collect()))
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().enumerate().all(|(i, &p)| p <= self.0[i])
    }

    /// Cells `(row, col)`, 0-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.0[i] - j - 1;
        let leg = self.0[i + 1..].iter().filter(|&&p| p > j).count();
        arm + leg + 1
    }

    /// Rows from which a corner box can be removed.
    pub fn corners(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.part(i + 1) < self.0[i]).collect()
    }

    pub fn remove_box(&self, row: usize) -> Self {
        let mut p = self.0.clone();
        p[row] -= 1;
        if p[row] == 0 {
            p.pop();
        }
        Partition(p)
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn syt_count(&self) -> u128 {
        let n = self.weight();
        let mut num: u128 = (1..=n as u128).product();
        let hooks: u128 = self.cells().map(|(i, j)| self.hook(i, j) as u128).product();
        num /= hooks;
        num
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("partition part {t:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_bounded(n, usize::MAX)
}

/// Partitions of `n` with at most `rows` parts, reverse lexicographic.
pub fn partitions_bounded(n: usize, rows: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, rows: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == rows {
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, p, rows, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, rows, &mut Vec::new(), &mut out);
    out
}

/// A standard Young tableau, rows listed top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.weight();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &e in row {
                if e == 0 || e > n || std::mem::replace(&mut seen[e], true) {
                    return Err(Error::Shape(format!("entries must be exactly 1..{n}")));
                }
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Shape("rows must increase".into()));
            }
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(lo, hi)| lo <= hi) {
                return Err(Error::Shape("columns must increase".into()));
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    fn row_of(&self) -> Vec<usize> {
        let mut at = vec![0; self.size() + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &e in row {
                at[e] = i;
            }
        }
        at
    }

    /// Entries `j` with `j+1` on a strictly lower row.
    pub fn descents(&self) -> Vec<usize> {
        let at = self.row_of();
        (1..self.size()).filter(|&j| at[j + 1] > at[j]).collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", rows.join(" / "))
    }
}

pub fn major_index(t: &StandardTableau) -> usize {
    t.descents().iter().sum()
}

/// All standard tableaux of shape λ, in row-reading lexicographic order.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.weight();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    // place 1..n; entry k goes at the end of any row that stays a partition
    fn go(k: usize, n: usize, shape: &Partition, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
        if k > n {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for i in 0..rows.len() {
            let len = rows[i].len();
            if len < shape.part(i) && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(k);
                go(k + 1, n, shape, rows, out);
                rows[i].pop();
            }
        }
    }
    go(1, n, shape, &mut rows, &mut out);
    out.sort();
    out
}

/// Distribution of the major index over SYT(λ): entry `k` counts tableaux with maj = k.
///
/// Built by removing the largest entry, tracking which row it sat in.
pub fn maj_distribution(shape: &Partition) -> Vec<u128> {
    let mut memo = HashMap::new();
    let n = shape.weight();
    let mut total = vec![0u128; n * n.saturating_sub(1) / 2 + 1];
    for row in shape.corners() {
        for (k, c) in maj_rec(shape, row, &mut memo).iter().enumerate() {
            total[k] += c;
        }
    }
    if n == 0 {
        total[0] = 1;
    }
    total
}

// tableaux of `shape` whose largest entry sits at the end of `row`
fn maj_rec(shape: &Partition, row: usize, memo: &mut HashMap<(Partition, usize), Vec<u128>>) -> Vec<u128> {
    if let Some(v) = memo.get(&(shape.clone(), row)) {
        return v.clone();
    }
    let n = shape.weight();
    let mut out = vec![0u128; n * n.saturating_sub(1) / 2 + 1];
    if n == 1 {
        out[0] = 1;
    } else {
        let rest = shape.remove_box(row);
        for prev in rest.corners() {
            // n−1 is a descent when n sits strictly lower
            let shift = if row > prev { n - 1 } else { 0 };
            for (k, c) in maj_rec(&rest, prev, memo).iter().enumerate() {
                if *c > 0 {
                    out[k + shift] += c;
                }
            }
        }
    }
    memo.insert((shape.clone(), row), out.clone());
    out
}

/// Number of SYT(λ) with maj ≡ `residue` (mod `modulus`).
pub fn maj_class_count(shape: &Partition, modulus: usize, residue: usize) -> u128 {
    maj_distribution(shape)
        .iter()
        .enumerate()
        .filter(|(k, _)| k % modulus == residue % modulus)
        .map(|(_, c)| c)
        .sum()
}
