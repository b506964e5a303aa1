//! Deliberately naive reference implementations, kept independent of the
//! library so that sweeps compare two different computations.

pub type Rows = Vec<Vec<usize>>;

/// Schensted insertion with a linear scan for the bumped entry.
pub fn naive_rsk(w: &[usize]) -> (Rows, Rows) {
    let mut p: Rows = Vec::new();
    let mut q: Rows = Vec::new();
    for (step, &x) in w.iter().enumerate() {
        let mut x = x;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(j) => {
                    std::mem::swap(&mut p[row][j], &mut x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    (p, q)
}

pub fn naive_q(w: &[usize]) -> Rows {
    naive_rsk(w).1
}

pub fn reversed(w: &[usize]) -> Vec<usize> {
    w.iter().rev().copied().collect()
}

pub fn naive_in_r(w: &[usize]) -> bool {
    naive_q(w) == naive_q(&reversed(w))
}

/// `(k, 1^k)` with `2k - 1 = n`.
pub fn naive_symmetric_hook(rows: &Rows) -> bool {
    let k = rows.len();
    rows[0].len() == k && rows[1..].iter().all(|r| r.len() == 1)
}

pub fn naive_first_row_property(rows: &Rows) -> bool {
    let n: usize = rows.iter().map(Vec::len).sum();
    rows[0]
        .iter()
        .filter(|&&i| i > 1)
        .all(|&i| rows.iter().any(|r| r[0] == n + 2 - i))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `2^{(n-1)/2} C(n-1, (n-1)/2)` for odd `n`, 0 for even `n`.
pub fn r_formula(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        0
    } else {
        let h = (n - 1) / 2;
        (1u64 << h) * binomial(n - 1, h)
    }
}

/// `φ_{a,b}` straight from its case definition.
pub fn naive_phi(a: usize, b: usize, w: &[usize]) -> Vec<usize> {
    let (c, d) = (a.min(b), a.max(b));
    let mut out = vec![a];
    for &v in w {
        out.push(if v < c {
            v
        } else if v < d - 1 {
            v + 1
        } else {
            v + 2
        });
    }
    out.push(b);
    out
}

/// Every permutation of `1..=n` by Heap's algorithm (order differs from the
/// library's lexicographic sweep on purpose).
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
        heap(k - 1, a, out);
    }
    let mut a: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}
