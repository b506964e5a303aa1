//! Forward jeu de taquin slides, the delta operator, and evacuation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tableau::{Cell, Grid, Shape, Tableau};

/// A filling of `λ/μ`: `None` marks the cells of `μ` still empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewConfiguration {
    rows: Vec<Vec<Option<usize>>>,
}

impl SkewConfiguration {
    /// Checks that the empty cells form a partition `μ` inside the
    /// partition `λ` and that filled cells increase along rows and columns.
    pub fn new(rows: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let mut prev_holes = usize::MAX;
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::EmptyRow { row: i + 1 });
            }
            if i > 0 && row.len() > rows[i - 1].len() {
                return Err(Error::NotAPartition {
                    row: i + 1,
                    len: row.len(),
                });
            }
            let holes = row.iter().take_while(|c| c.is_none()).count();
            if let Some(j) = row[holes..].iter().position(Option::is_none) {
                return Err(Error::InvalidHole {
                    cell: Cell::new(i + 1, holes + j + 1),
                });
            }
            if holes > prev_holes {
                return Err(Error::InvalidHole {
                    cell: Cell::new(i + 1, holes),
                });
            }
            prev_holes = holes;
            for (j, v) in row.iter().enumerate() {
                let Some(v) = *v else { continue };
                let cell = Cell::new(i + 1, j + 1);
                if v == 0 {
                    return Err(Error::ZeroEntry { cell });
                }
                if j > 0 && row[j - 1].is_some_and(|l| l >= v) {
                    return Err(Error::RowOrder { cell });
                }
                if i > 0 && rows[i - 1][j].is_some_and(|u| u >= v) {
                    return Err(Error::ColumnOrder { cell });
                }
            }
        }
        Ok(SkewConfiguration { rows })
    }

    /// `grid` with the cell at `hole` emptied.
    pub fn with_hole(grid: &Grid, hole: Cell) -> Result<Self> {
        if grid.get(hole).is_none() {
            return Err(Error::InvalidHole { cell: hole });
        }
        let mut rows: Vec<Vec<Option<usize>>> = grid
            .rows()
            .iter()
            .map(|r| r.iter().copied().map(Some).collect())
            .collect();
        rows[hole.row - 1][hole.col - 1] = None;
        SkewConfiguration::new(rows)
    }

    pub fn rows(&self) -> &[Vec<Option<usize>>] {
        &self.rows
    }

    pub fn outer_shape(&self) -> Shape {
        Shape::from_parts_unchecked(self.rows.iter().map(Vec::len).collect())
    }

    fn is_hole(&self, i: usize, j: usize) -> bool {
        self.rows
            .get(i)
            .and_then(|r| r.get(j))
            .is_some_and(Option::is_none)
    }

    /// The underlying grid once no holes remain.
    pub fn into_grid(self) -> Option<Grid> {
        let rows = self
            .rows
            .into_iter()
            .map(|r| r.into_iter().collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(Grid::from_rows_unchecked(rows))
    }
}

/// One forward slide starting from the inner corner `alpha`.
///
/// The hole repeatedly takes the smaller of its lower and right neighbours
/// until it has neither; that final cell leaves the shape and is returned.
pub fn jdt_slide(config: &SkewConfiguration, alpha: Cell) -> Result<(SkewConfiguration, Cell)> {
    let (i0, j0) = (alpha.row.wrapping_sub(1), alpha.col.wrapping_sub(1));
    if !config.is_hole(i0, j0) || config.is_hole(i0, j0 + 1) || config.is_hole(i0 + 1, j0) {
        return Err(Error::InvalidHole { cell: alpha });
    }
    let mut rows = config.rows.clone();
    let (mut i, mut j) = (i0, j0);
    loop {
        let below = rows.get(i + 1).and_then(|r| r.get(j)).copied().flatten();
        let right = rows[i].get(j + 1).copied().flatten();
        let (ni, nj) = match (below, right) {
            (None, None) => break,
            (Some(_), None) => (i + 1, j),
            (None, Some(_)) => (i, j + 1),
            (Some(b), Some(r)) if b < r => (i + 1, j),
            (Some(_), Some(_)) => (i, j + 1),
        };
        rows[i][j] = rows[ni][nj].take();
        (i, j) = (ni, nj);
    }
    rows[i].pop();
    if rows[i].is_empty() {
        rows.pop();
    }
    Ok((SkewConfiguration { rows }, Cell::new(i + 1, j + 1)))
}

/// `Δ`: erase the minimal entry and slide its hole out. Labels are kept, so
/// `Δ` of a tableau on `1..=n` is a tableau on `2..=n`.
pub fn delta(grid: &Grid) -> Result<(Grid, Cell)> {
    if grid.is_empty() {
        return Err(Error::EmptyTableau);
    }
    // Rows and columns increase, so the minimum is at (1,1).
    let corner = Cell::new(1, 1);
    let config = SkewConfiguration::with_hole(grid, corner)?;
    let (slid, vacated) = jdt_slide(&config, corner)?;
    let grid = slid.into_grid().expect("single hole was filled");
    Ok((grid, vacated))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvacuationTrace {
    /// Cell vacated when passing from `Δ^i T` to `Δ^{i+1} T`, for `i = 0..n`.
    pub vacated_cells: Vec<Cell>,
    pub evacuation: Tableau,
}

pub fn evacuation_trace(t: &Tableau) -> EvacuationTrace {
    let n = t.size();
    let mut out: Vec<Vec<usize>> = t.rows().iter().map(|r| vec![0; r.len()]).collect();
    let mut vacated_cells = Vec::with_capacity(n);
    let mut current = t.as_grid().clone();
    for i in 0..n {
        let (next, cell) = delta(&current).expect("nonempty until the last step");
        out[cell.row - 1][cell.col - 1] = n - i;
        vacated_cells.push(cell);
        current = next;
    }
    EvacuationTrace {
        vacated_cells,
        evacuation: Tableau::from_rows_unchecked(out),
    }
}

/// Schützenberger evacuation `ε(T)`.
pub fn evacuation(t: &Tableau) -> Tableau {
    evacuation_trace(t).evacuation
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(rows: &[&[usize]]) -> Grid {
        Grid::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn syt(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn skew(rows: &[&[Option<usize>]]) -> SkewConfiguration {
        SkewConfiguration::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn slides_from_worked_example() {
        let c = skew(&[&[None, Some(3), Some(5)], &[Some(2)], &[Some(4)]]);
        let (out, cell) = jdt_slide(&c, Cell::new(1, 1)).unwrap();
        assert_eq!(out.into_grid().unwrap(), grid(&[&[2, 3, 5], &[4]]));
        assert_eq!(cell, Cell::new(3, 1));

        let c = skew(&[&[None, Some(3), Some(5)], &[Some(4)]]);
        let (out, cell) = jdt_slide(&c, Cell::new(1, 1)).unwrap();
        assert_eq!(out.into_grid().unwrap(), grid(&[&[3, 5], &[4]]));
        assert_eq!(cell, Cell::new(1, 3));

        let c = skew(&[&[None]]);
        let (out, cell) = jdt_slide(&c, Cell::new(1, 1)).unwrap();
        assert_eq!(out.into_grid().unwrap(), Grid::empty());
        assert_eq!(cell, Cell::new(1, 1));
    }

    #[test]
    fn slide_in_larger_skew_shape() {
        // λ/μ = (3,2)/(2): slide from (1,2), the only inner corner.
        let c = skew(&[&[None, None, Some(4)], &[Some(1), Some(3)]]);
        let (out, cell) = jdt_slide(&c, Cell::new(1, 2)).unwrap();
        assert_eq!(out.rows(), &[vec![None, Some(3), Some(4)], vec![Some(1)]]);
        assert_eq!(cell, Cell::new(2, 2));
        assert_eq!(
            jdt_slide(&c, Cell::new(1, 1)),
            Err(Error::InvalidHole {
                cell: Cell::new(1, 1)
            })
        );
    }

    #[test]
    fn slide_rejects_bad_holes() {
        let c = skew(&[&[Some(1), Some(2)]]);
        assert!(jdt_slide(&c, Cell::new(1, 1)).is_err());
        assert!(jdt_slide(&c, Cell::new(0, 0)).is_err());
        assert!(SkewConfiguration::new(vec![vec![Some(1), None]]).is_err());
        assert!(SkewConfiguration::new(vec![vec![Some(1)], vec![None]]).is_err());
        assert!(SkewConfiguration::with_hole(&grid(&[&[1]]), Cell::new(2, 1)).is_err());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(
            delta(&grid(&[&[1, 3, 5], &[2], &[4]])).unwrap(),
            (grid(&[&[2, 3, 5], &[4]]), Cell::new(3, 1))
        );
        assert_eq!(
            delta(&grid(&[&[2, 3, 5], &[4]])).unwrap(),
            (grid(&[&[3, 5], &[4]]), Cell::new(1, 3))
        );
        assert_eq!(
            delta(&grid(&[&[1]])).unwrap(),
            (Grid::empty(), Cell::new(1, 1))
        );
        assert_eq!(delta(&Grid::empty()), Err(Error::EmptyTableau));
    }

    #[test]
    fn evacuation_examples() {
        let trace = evacuation_trace(&syt(&[&[1, 3, 5], &[2], &[4]]));
        assert_eq!(trace.evacuation, syt(&[&[1, 2, 4], &[3], &[5]]));
        assert_eq!(
            trace.vacated_cells,
            [
                Cell::new(3, 1),
                Cell::new(1, 3),
                Cell::new(2, 1),
                Cell::new(1, 2),
                Cell::new(1, 1)
            ]
        );
        assert_eq!(evacuation(&syt(&[&[1]])), syt(&[&[1]]));
        assert_eq!(evacuation(&Tableau::single_row(6)), Tableau::single_row(6));
        assert_eq!(evacuation(&Tableau::empty()), Tableau::empty());
    }

    #[test]
    fn evacuation_is_shape_preserving_involution() {
        for n in 1..=8 {
            for s in Shape::partitions(n) {
                for t in crate::tableau::enumerate_syt(&s) {
                    let e = evacuation(&t);
                    assert_eq!(e.shape(), s);
                    assert_eq!(evacuation(&e), t);
                }
            }
        }
    }
}
