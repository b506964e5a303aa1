//! Schensted row insertion and the RSK map `w ↦ (P(w), Q(w))`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::tableau::{Cell, Grid, Tableau};

/// How the bumped entry is located within a row.
///
/// Rows are sorted, so `Binary` is the default; `Linear` is the literal
/// left-to-right scan and serves as a differential oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BumpSearch {
    #[default]
    Binary,
    Linear,
}

impl BumpSearch {
    /// Index of the leftmost entry greater than `x`, or `row.len()`.
    fn find(self, row: &[usize], x: usize) -> usize {
        match self {
            BumpSearch::Binary => row.partition_point(|&u| u < x),
            BumpSearch::Linear => row.iter().position(|&u| x < u).unwrap_or(row.len()),
        }
    }
}

/// Result of `T ← x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionOutcome {
    pub grid: Grid,
    /// The cell added to the shape.
    pub new_cell: Cell,
    /// One cell per visited row: where an entry was replaced, ending with
    /// `new_cell`. Informational only.
    pub bump_path: Vec<Cell>,
}

/// Row-inserts `x` into `rows` in place and returns the bump path.
fn insert_rows(rows: &mut Vec<Vec<usize>>, mut x: usize, search: BumpSearch) -> Vec<Cell> {
    let mut path = Vec::new();
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![x]);
            path.push(Cell::new(r + 1, 1));
            return path;
        }
        let row = &mut rows[r];
        let k = search.find(row, x);
        path.push(Cell::new(r + 1, k + 1));
        if k == row.len() {
            row.push(x);
            return path;
        }
        std::mem::swap(&mut row[k], &mut x);
        r += 1;
    }
}

/// Schensted insertion `grid ← x`.
pub fn row_insert(grid: &Grid, x: usize) -> Result<InsertionOutcome> {
    row_insert_with(grid, x, BumpSearch::default())
}

pub fn row_insert_with(grid: &Grid, x: usize, search: BumpSearch) -> Result<InsertionOutcome> {
    if x == 0 {
        return Err(Error::ZeroEntry {
            cell: Cell::new(1, grid.first_row().len() + 1),
        });
    }
    if grid.contains_value(x) {
        return Err(Error::AlreadyPresent { value: x });
    }
    let mut grid = grid.clone();
    let bump_path = insert_rows(grid.rows_mut(), x, search);
    let new_cell = *bump_path.last().expect("insertion visits at least one row");
    Ok(InsertionOutcome {
        grid,
        new_cell,
        bump_path,
    })
}

/// An insertion/recording pair of equal shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TableauPair {
    #[serde(rename = "P")]
    pub p: Tableau,
    #[serde(rename = "Q")]
    pub q: Tableau,
}

impl TableauPair {
    pub fn new(p: Tableau, q: Tableau) -> Result<Self> {
        if p.shape() != q.shape() {
            return Err(Error::ShapeMismatch {
                p: p.shape(),
                q: q.shape(),
            });
        }
        Ok(TableauPair { p, q })
    }
}

/// `w ↦ (P(w), Q(w))`: insert `w_1, ..., w_n` in turn, writing `i` into Q
/// at the cell created by step `i`.
pub fn rsk(w: &Permutation) -> TableauPair {
    rsk_with(w, BumpSearch::default())
}

pub fn rsk_with(w: &Permutation, search: BumpSearch) -> TableauPair {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (i, &x) in w.entries().iter().enumerate() {
        let path = insert_rows(&mut p, x, search);
        let cell = path[path.len() - 1];
        if cell.row > q.len() {
            q.push(Vec::new());
        }
        q[cell.row - 1].push(i + 1);
    }
    TableauPair {
        p: Tableau::from_rows_unchecked(p),
        q: Tableau::from_rows_unchecked(q),
    }
}

/// Recovers the unique `w` with `rsk(w) == pair` by reverse bumping.
pub fn inverse_rsk(pair: &TableauPair) -> Permutation {
    let n = pair.p.size();
    let mut p = pair.p.rows().to_vec();
    let mut q = pair.q.rows().to_vec();
    let mut w = vec![0; n];
    for step in (1..=n).rev() {
        let r = q
            .iter()
            .position(|row| row.last() == Some(&step))
            .expect("largest recording entry sits at the end of a row");
        q[r].pop();
        let mut y = p[r].pop().expect("shapes agree");
        if q[r].is_empty() {
            q.pop();
            p.pop();
        }
        for row in p[..r].iter_mut().rev() {
            let k = row.partition_point(|&u| u < y) - 1;
            std::mem::swap(&mut row[k], &mut y);
        }
        w[step - 1] = y;
    }
    Permutation::from_entries_unchecked(w)
}

/// Length of the longest strictly increasing subsequence (patience sorting).
pub fn longest_increasing(w: &Permutation) -> usize {
    let mut tops: Vec<usize> = Vec::new();
    for &x in w.entries() {
        let k = tops.partition_point(|&t| t < x);
        if k == tops.len() {
            tops.push(x);
        } else {
            tops[k] = x;
        }
    }
    tops.len()
}

pub fn longest_decreasing(w: &Permutation) -> usize {
    longest_increasing(&w.complement())
}

/// Largest size handled by the allocation-free recorder below.
pub(crate) const FAST_MAX: usize = 16;

/// Fixed-capacity insertion tableau that reports only the row in which each
/// insertion ended. Since cells of a row are filled left to right, that row
/// sequence determines Q completely.
#[derive(Clone)]
pub(crate) struct RowRecorder {
    rows: [[u8; FAST_MAX]; FAST_MAX],
    lens: [u8; FAST_MAX],
}

impl RowRecorder {
    pub(crate) fn new() -> Self {
        RowRecorder {
            rows: [[0; FAST_MAX]; FAST_MAX],
            lens: [0; FAST_MAX],
        }
    }

    /// Inserts `x` and returns the 0-based row of the new cell.
    #[inline]
    pub(crate) fn insert(&mut self, mut x: u8) -> usize {
        let mut r = 0;
        loop {
            let len = self.lens[r] as usize;
            let row = &mut self.rows[r];
            let mut k = 0;
            while k < len && row[k] < x {
                k += 1;
            }
            if k == len {
                row[len] = x;
                self.lens[r] += 1;
                return r;
            }
            std::mem::swap(&mut row[k], &mut x);
            r += 1;
        }
    }

    pub(crate) fn row_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.lens
            .iter()
            .take_while(|&&l| l > 0)
            .map(|&l| l as usize)
    }
}

/// `Q(w) == Q(w^r)`, step by step: the two recording tableaux agree exactly
/// when every insertion of `w` and of `w^r` lands in the same row.
pub(crate) fn recording_matches_reverse(entries: &[usize]) -> bool {
    let n = entries.len();
    if n > FAST_MAX {
        let w = Permutation::from_entries_unchecked(entries.to_vec());
        return rsk(&w).q == rsk(&w.reverse()).q;
    }
    let mut fwd = RowRecorder::new();
    let mut rev = RowRecorder::new();
    for i in 0..n {
        if fwd.insert(entries[i] as u8) != rev.insert(entries[n - 1 - i] as u8) {
            return false;
        }
    }
    true
}

/// Row lengths of the common shape of `P(w)` and `Q(w)`.
pub(crate) fn recording_shape(entries: &[usize]) -> Vec<usize> {
    if entries.len() > FAST_MAX {
        let w = Permutation::from_entries_unchecked(entries.to_vec());
        return rsk(&w).q.shape().parts().to_vec();
    }
    let mut rec = RowRecorder::new();
    for &x in entries {
        rec.insert(x as u8);
    }
    rec.row_lengths().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::iterate_sn;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn grid(rows: &[&[usize]]) -> Grid {
        Grid::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn syt(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn insertion_steps_of_52314() {
        let out = row_insert(&grid(&[&[5]]), 2).unwrap();
        assert_eq!(out.grid, grid(&[&[2], &[5]]));
        assert_eq!(out.new_cell, Cell::new(2, 1));

        let out = row_insert(&grid(&[&[2, 3], &[5]]), 1).unwrap();
        assert_eq!(out.grid, grid(&[&[1, 3], &[2], &[5]]));
        assert_eq!(out.new_cell, Cell::new(3, 1));
        assert_eq!(
            out.bump_path,
            [Cell::new(1, 1), Cell::new(2, 1), Cell::new(3, 1)]
        );

        let out = row_insert(&grid(&[&[1, 3], &[2], &[5]]), 4).unwrap();
        assert_eq!(out.grid, grid(&[&[1, 3, 4], &[2], &[5]]));
        assert_eq!(out.new_cell, Cell::new(1, 3));
    }

    #[test]
    fn insertion_rejects_present_value() {
        assert_eq!(
            row_insert(&grid(&[&[1, 3]]), 3),
            Err(Error::AlreadyPresent { value: 3 })
        );
        assert!(row_insert(&Grid::empty(), 0).is_err());
        assert_eq!(
            row_insert(&Grid::empty(), 7).unwrap().new_cell,
            Cell::new(1, 1)
        );
    }

    #[test]
    fn rsk_examples() {
        let pair = rsk(&p("52314"));
        assert_eq!(pair.p, syt(&[&[1, 3, 4], &[2], &[5]]));
        assert_eq!(pair.q, syt(&[&[1, 3, 5], &[2], &[4]]));

        let pair = rsk(&Permutation::identity(6));
        assert_eq!(pair.p, Tableau::single_row(6));
        assert_eq!(pair.q, Tableau::single_row(6));

        let pair = rsk(&p("12543"));
        assert_eq!(pair.p, syt(&[&[1, 2, 3], &[4], &[5]]));
        assert_eq!(pair.q, syt(&[&[1, 2, 3], &[4], &[5]]));
    }

    #[test]
    fn inverse_examples() {
        let pair = TableauPair::new(
            syt(&[&[1, 3, 4], &[2], &[5]]),
            syt(&[&[1, 3, 5], &[2], &[4]]),
        )
        .unwrap();
        assert_eq!(inverse_rsk(&pair), p("52314"));
        let pair = TableauPair::new(Tableau::single_row(4), Tableau::single_row(4)).unwrap();
        assert_eq!(inverse_rsk(&pair), Permutation::identity(4));
        assert!(matches!(
            TableauPair::new(Tableau::single_row(2), Tableau::single_row(2).transpose()),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn subsequence_examples() {
        assert_eq!(longest_increasing(&p("52314")), 3);
        assert_eq!(longest_decreasing(&p("52314")), 3);
        assert_eq!(longest_increasing(&Permutation::identity(7)), 7);
        assert_eq!(longest_decreasing(&Permutation::identity(7)), 1);
        let down = Permutation::identity(7).reverse();
        assert_eq!(longest_increasing(&down), 1);
        assert_eq!(longest_decreasing(&down), 7);
    }

    #[test]
    fn linear_and_binary_search_agree() {
        for n in 1..=7 {
            for w in iterate_sn(n) {
                assert_eq!(
                    rsk_with(&w, BumpSearch::Linear),
                    rsk_with(&w, BumpSearch::Binary)
                );
            }
        }
    }

    #[test]
    fn bijection_and_shape_agreement() {
        for n in 1..=7 {
            for w in iterate_sn(n) {
                let pair = rsk(&w);
                assert_eq!(pair.p.shape(), pair.q.shape());
                assert_eq!(inverse_rsk(&pair), w);
            }
        }
    }

    #[test]
    fn fast_recorder_matches_full_rsk() {
        for n in 1..=7 {
            for w in iterate_sn(n) {
                let q = rsk(&w).q;
                assert_eq!(recording_shape(w.entries()), q.shape().parts());
                assert_eq!(
                    recording_matches_reverse(w.entries()),
                    q == rsk(&w.reverse()).q,
                    "{w}"
                );
            }
        }
    }

    #[test]
    fn reverse_transposes_insertion_tableau() {
        for n in 1..=7 {
            for w in iterate_sn(n) {
                assert_eq!(rsk(&w.reverse()).p, rsk(&w).p.transpose());
            }
        }
    }
}
