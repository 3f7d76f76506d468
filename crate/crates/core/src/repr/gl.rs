use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::Partition;

/// Dimension of the irreducible GL_r module W_λ (hook-content formula).
pub fn gl_dimension(shape: &Partition, r: usize) -> BigInt {
    if shape.len() > r {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, j) in shape.cells() {
        num *= BigInt::from(r + j - i);
        den *= BigInt::from(shape.hook(i, j));
    }
    num / den
}

/// Visit every semistandard filling of λ with entries `1..=r`,
/// passing the content vector (entry `k−1` = number of `k`'s).
pub fn for_each_ssyt(shape: &Partition, r: usize, mut f: impl FnMut(&[usize])) {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut fill: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    let mut content = vec![0; r];
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        r: usize,
        fill: &mut Vec<Vec<usize>>,
        content: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if idx == cells.len() {
            f(content);
            return;
        }
        let (i, j) = cells[idx];
        let lo_row = if j > 0 { fill[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { fill[i - 1][j] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=r {
            fill[i][j] = v;
            content[v - 1] += 1;
            go(idx + 1, cells, r, fill, content, f);
            content[v - 1] -= 1;
        }
    }
    go(0, &cells, r, &mut fill, &mut content, &mut f);
}

/// Number of semistandard tableaux with entries ≤ r; equals `gl_dimension`.
pub fn ssyt_count(shape: &Partition, r: usize) -> BigInt {
    let mut n = BigInt::zero();
    for_each_ssyt(shape, r, |_| n += 1);
    n
}

/// The Schur polynomial s_λ(t_1,…,t_r) at an integer point.
pub fn schur_eval(shape: &Partition, t: &[i64]) -> BigInt {
    let mut total = BigInt::zero();
    for_each_ssyt(shape, t.len(), |content| {
        let mut m = BigInt::one();
        for (c, &x) in content.iter().zip(t) {
            m *= BigInt::from(x).pow(*c as u32);
        }
        total += m;
    });
    total
}

/// Power sum p_d(t) = Σ t_i^d.
pub fn power_sum(t: &[i64], d: u32) -> BigInt {
    t.iter().map(|&x| BigInt::from(x).pow(d)).sum()
}

fn horizontal_strips(shape: &[usize], m: usize) -> Vec<Vec<usize>> {
    // shape has a trailing zero row so the strip may open a new row
    let mut out = Vec::new();
    let mut add = vec![0; shape.len()];
    fn go(i: usize, left: usize, shape: &[usize], add: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == shape.len() {
            if left == 0 {
                out.push(add.clone());
            }
            return;
        }
        let cap = if i == 0 { left } else { (shape[i - 1] - shape[i]).min(left) };
        for a in 0..=cap {
            add[i] = a;
            go(i + 1, left - a, shape, add, out);
        }
        add[i] = 0;
    }
    go(0, m, shape, &mut add, &mut out);
    out
}

/// Littlewood–Richardson coefficients `c^λ_{μν}` for all λ, by enumerating
/// LR skew tableaux of shape λ/μ and content ν.
pub fn lr_coefficients(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    let rows = mu.len() + nu.len();
    let mut shape: Vec<usize> = (0..rows).map(|i| mu.part(i)).collect();
    // counts[i][k] = number of letter k+1 in row i
    let mut counts = vec![vec![0usize; nu.len()]; rows];
    fn go(
        k: usize,
        nu: &Partition,
        shape: &mut Vec<usize>,
        counts: &mut Vec<Vec<usize>>,
        out: &mut BTreeMap<Partition, u64>,
    ) {
        if k == nu.len() {
            if lattice(counts) {
                let lam = Partition::new(shape.clone()).expect("strips keep shapes");
                *out.entry(lam).or_insert(0) += 1;
            }
            return;
        }
        // letter k+1 may only appear from row k on
        for add in horizontal_strips(shape, nu.part(k)) {
            if add[..k].iter().any(|&a| a > 0) {
                continue;
            }
            for (i, a) in add.iter().enumerate() {
                shape[i] += a;
                counts[i][k] = *a;
            }
            go(k + 1, nu, shape, counts, out);
            for (i, a) in add.iter().enumerate() {
                shape[i] -= a;
                counts[i][k] = 0;
            }
        }
    }
    go(0, nu, &mut shape, &mut counts, &mut out);
    out
}

// reading rows top to bottom, right to left, every prefix has #k ≥ #(k+1)
fn lattice(counts: &[Vec<usize>]) -> bool {
    let l = counts.first().map_or(0, Vec::len);
    let mut seen = vec![0usize; l];
    for row in counts {
        for k in (0..l).rev() {
            for _ in 0..row[k] {
                seen[k] += 1;
                if k > 0 && seen[k] > seen[k - 1] {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn dims() {
        assert_eq!(gl_dimension(&p("1"), 5), BigInt::from(5));
        assert_eq!(gl_dimension(&p("2,2"), 3), BigInt::from(6));
        assert_eq!(gl_dimension(&p("1,1,1,1"), 3), BigInt::zero());
        assert_eq!(ssyt_count(&p("3,2"), 3), gl_dimension(&p("3,2"), 3));
    }

    #[test]
    fn pieri() {
        let lr = lr_coefficients(&p("1"), &p("1"));
        assert_eq!(lr.len(), 2);
        assert_eq!(lr[&p("2")], 1);
        assert_eq!(lr[&p("1,1")], 1);
        let lr = lr_coefficients(&p("2,1"), &p("2,1"));
        assert_eq!(lr[&p("3,2,1")], 2);
        assert_eq!(lr.values().sum::<u64>(), 8);
    }
}
