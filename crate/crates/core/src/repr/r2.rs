//! Rank two: GL_2 shapes (a,b), a ≥ b, and the θ counting function.

use num_bigint::BigInt;
use serde::Serialize;

use super::modules::{decompose, j_shapes, Module};
use super::partition::Partition;
use crate::exactmath::{binomial, divisors, moebius, Rational};

/// θ(a,b) = (1/(a+b)) Σ_{d | gcd(a,b)} μ(d) C((a+b)/d, a/d); zero off the quadrant.
pub fn r2_theta(a: i64, b: i64) -> Rational {
    if a < 0 || b < 0 || a + b == 0 {
        return Rational::zero();
    }
    let g = num_integer::gcd(a, b) as u64;
    let n = (a + b) as u64;
    let s: BigInt = divisors(g)
        .into_iter()
        .map(|d| BigInt::from(moebius(d).unwrap()) * binomial(n / d, a as u64 / d))
        .sum();
    Rational::from_big_ratio(s, BigInt::from(n))
}

fn th(a: i64, b: i64) -> i64 {
    r2_theta(a, b).to_i64().expect("θ is an integer")
}

/// Multiplicity of (a,b) in J_{a+b} from the printed difference θ(a,b) − θ(a−1,b+1).
pub fn theta_j_printed(a: i64, b: i64) -> i64 {
    th(a, b) - th(a - 1, b + 1)
}

/// The other orientation, θ(a,b) − θ(a+1,b−1).
pub fn theta_j_corrected(a: i64, b: i64) -> i64 {
    th(a, b) - th(a + 1, b - 1)
}

/// Printed M-formula: θ(a+1,b) − θ(a−1,b+2) for a > b, θ(a+1,b) − θ(a,b+1) for a = b.
pub fn theta_m_printed(a: i64, b: i64) -> i64 {
    if a > b {
        th(a + 1, b) - th(a - 1, b + 2)
    } else {
        th(a + 1, b) - th(a, b + 1)
    }
}

/// J_{n+1}(a+1,b) + [a>b]·J_{n+1}(a,b+1), written through θ.
pub fn theta_m_corrected(a: i64, b: i64) -> i64 {
    if a > b {
        th(a, b + 1) - th(a + 2, b - 1)
    } else {
        th(a + 1, b) - th(a + 2, b - 1)
    }
}

/// Closed forms for the totals: i_n and a_n.
pub fn theta_totals(n: i64) -> (i64, i64) {
    if n % 2 == 0 {
        (th(n / 2, n / 2), 2 * th(n / 2 + 1, n / 2))
    } else {
        (th((n + 1) / 2, (n - 1) / 2), th((n + 1) / 2, (n + 1) / 2) + th((n + 3) / 2, (n - 1) / 2))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct R2Cell {
    pub a: usize,
    pub b: usize,
    pub j: u64,
    pub m: u64,
    pub j_printed_formula: i64,
    pub j_corrected_formula: i64,
    pub m_printed_formula: i64,
    pub m_corrected_formula: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct R2Row {
    pub n: usize,
    /// Cells in the order (n,0), (n−1,1), …
    pub cells: Vec<R2Cell>,
    pub j_total: u64,
    pub m_total: u64,
    pub j_total_formula: i64,
    pub m_total_formula: i64,
}

fn mult_of(entries: &[(Partition, u64)], a: usize, b: usize) -> u64 {
    let p = Partition::new(vec![a, b]).unwrap();
    entries.iter().find(|(s, _)| *s == p).map_or(0, |(_, m)| *m)
}

/// Multiplicities of (a,b) in J_n and M_n, counted by tableaux.
pub fn r2_multiplicities(n: usize) -> R2Row {
    let j: Vec<(Partition, u64)> = j_shapes(2, n).into_iter().map(|(p, m)| (p, m as u64)).collect();
    let m: Vec<(Partition, u64)> = decompose(2, n, Module::M, false)
        .expect("r = 2 is in range")
        .entries
        .into_iter()
        .map(|e| (e.shape, e.multiplicity))
        .collect();
    let cells: Vec<R2Cell> = (0..=n / 2)
        .map(|b| {
            let a = n - b;
            let (ai, bi) = (a as i64, b as i64);
            R2Cell {
                a,
                b,
                j: mult_of(&j, a, b),
                m: mult_of(&m, a, b),
                j_printed_formula: theta_j_printed(ai, bi),
                j_corrected_formula: theta_j_corrected(ai, bi),
                m_printed_formula: theta_m_printed(ai, bi),
                m_corrected_formula: theta_m_corrected(ai, bi),
            }
        })
        .collect();
    let (jt, mt) = theta_totals(n as i64);
    R2Row {
        n,
        j_total: cells.iter().map(|c| c.j).sum(),
        m_total: cells.iter().map(|c| c.m).sum(),
        j_total_formula: jt,
        m_total_formula: mt,
        cells,
    }
}

/// Printed multiplicities of (n−k,k) in J_n, n = 1..12; `None` for blank cells.
pub const PRINTED_R2_J: [[Option<u64>; 7]; 12] = {
    const N: Option<u64> = None;
    [
        [Some(1), N, N, N, N, N, N],
        [N, Some(1), N, N, N, N, N],
        [N, Some(1), N, N, N, N, N],
        [N, Some(1), N, N, N, N, N],
        [N, Some(1), Some(1), N, N, N, N],
        [N, Some(1), Some(1), Some(1), N, N, N],
        [N, Some(1), Some(2), Some(2), N, N, N],
        [N, Some(1), Some(2), Some(4), Some(1), N, N],
        [N, Some(1), Some(3), Some(5), Some(5), N, N],
        [N, Some(1), Some(3), Some(8), Some(8), Some(5), N],
        [N, Some(1), Some(4), Some(10), Some(15), Some(12), N],
        [N, Some(1), Some(4), Some(13), Some(22), Some(26), Some(9)],
    ]
};

/// Printed multiplicities of (n−k,k) in M_n, n = 1..12.
pub const PRINTED_R2_M: [[Option<u64>; 7]; 12] = {
    const N: Option<u64> = None;
    [
        [Some(1), N, N, N, N, N, N],
        [Some(1), Some(1), N, N, N, N, N],
        [Some(1), Some(1), N, N, N, N, N],
        [Some(1), Some(2), Some(1), N, N, N, N],
        [Some(1), Some(2), Some(2), N, N, N, N],
        [Some(1), Some(3), Some(4), Some(2), N, N, N],
        [Some(1), Some(3), Some(6), Some(5), N, N, N],
        [Some(1), Some(4), Some(8), Some(10), Some(5), N, N],
        [Some(1), Some(4), Some(11), Some(16), Some(13), N, N],
        [Some(1), Some(5), Some(14), Some(25), Some(37), Some(12), N],
        [Some(1), Some(5), Some(17), Some(35), Some(48), Some(35), N],
        [Some(1), Some(6), Some(21), Some(49), Some(77), Some(77), Some(33)],
    ]
};

pub const PRINTED_R2_J_TOTALS: [u64; 12] = [1, 1, 1, 1, 2, 3, 5, 8, 14, 25, 42, 75];
pub const PRINTED_R2_M_TOTALS: [u64; 12] = [1, 2, 2, 4, 5, 10, 15, 28, 45, 84, 141, 264];

#[derive(Clone, Debug, Serialize)]
pub struct R2Mismatch {
    pub table: &'static str,
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub printed: u64,
    pub computed: u64,
}

/// Compare computed rows with every printed entry and total.
pub fn r2_compare_printed(rows: &[R2Row]) -> Vec<R2Mismatch> {
    let mut out = Vec::new();
    for row in rows.iter().filter(|r| (1..=12).contains(&r.n)) {
        let n = row.n;
        for k in 0..7 {
            let cell = row.cells.get(k);
            let (a, b) = (n.saturating_sub(k), k);
            for (table, printed, computed) in [
                ("J", PRINTED_R2_J[n - 1][k], cell.map_or(0, |c| c.j)),
                ("M", PRINTED_R2_M[n - 1][k], cell.map_or(0, |c| c.m)),
            ] {
                if let Some(p) = printed {
                    if p != computed {
                        out.push(R2Mismatch { table, n, a, b, printed: p, computed });
                    }
                }
            }
        }
        for (table, printed, computed) in
            [("J total", PRINTED_R2_J_TOTALS[n - 1], row.j_total), ("M total", PRINTED_R2_M_TOTALS[n - 1], row.m_total)]
        {
            if printed != computed {
                out.push(R2Mismatch { table, n, a: n, b: 0, printed, computed });
            }
        }
    }
    out
}
