//! Partitions, cells, and (standard) Young tableaux in English notation.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition `λ = (λ_1 ≥ λ_2 ≥ ... > 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for (i, &len) in parts.iter().enumerate() {
            if len == 0 {
                return Err(Error::EmptyRow { row: i + 1 });
            }
            if i > 0 && len > parts[i - 1] {
                return Err(Error::NotAPartition { row: i + 1, len });
            }
        }
        Ok(Shape(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        Shape(parts)
    }

    pub fn empty() -> Self {
        Shape(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && self.0.get(cell.row - 1).is_some_and(|&l| cell.col <= l)
    }

    /// `λ'_j = #{ i : λ_i ≥ j }`
    pub fn conjugate(&self) -> Shape {
        let width = self.0.first().copied().unwrap_or(0);
        Shape(
            (1..=width)
                .map(|j| self.0.iter().take_while(|&&l| l >= j).count())
                .collect(),
        )
    }

    /// `(k, 1^{n-k})` with `k < n`, plus the single cell `(1)`.
    pub fn is_hook(&self) -> bool {
        match self.0.as_slice() {
            [] => false,
            [1] => true,
            [_] => false,
            [_, rest @ ..] => rest.iter().all(|&l| l == 1),
        }
    }

    pub fn is_symmetric_hook(&self) -> bool {
        self.is_hook() && self.conjugate() == *self
    }

    /// `((n+1)/2, 1^{(n-1)/2})` for odd `n`, `None` otherwise.
    pub fn symmetric_hook(n: usize) -> Option<Shape> {
        if n.is_multiple_of(2) {
            return None;
        }
        let arm = n.div_ceil(2);
        let mut parts = vec![arm];
        parts.extend(std::iter::repeat_n(1, n - arm));
        Some(Shape(parts))
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn partitions(n: usize) -> Vec<Shape> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
            if rem == 0 {
                out.push(Shape(cur.clone()));
                return;
            }
            for part in (1..=rem.min(max)).rev() {
                cur.push(part);
                go(rem - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Cells `(i, j)` that can be added while staying a partition.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut cells = Vec::new();
        for (i, &len) in self.0.iter().enumerate() {
            if i == 0 || self.0[i - 1] > len {
                cells.push(Cell::new(i + 1, len + 1));
            }
        }
        cells.push(Cell::new(self.0.len() + 1, 1));
        cells
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Shape::new(parts)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Self {
        s.0
    }
}

/// A 1-based `(row, column)` position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn transpose(self) -> Self {
        Cell::new(self.col, self.row)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl From<Cell> for [usize; 2] {
    fn from(c: Cell) -> Self {
        [c.row, c.col]
    }
}

impl From<[usize; 2]> for Cell {
    fn from([row, col]: [usize; 2]) -> Self {
        Cell { row, col }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RowsRepr {
    Object { rows: Vec<Vec<usize>> },
    Bare(Vec<Vec<usize>>),
}

#[derive(Serialize)]
struct RowsRef<'a> {
    rows: &'a [Vec<usize>],
}

/// A partition-shaped filling by distinct positive labels, strictly
/// increasing along rows and down columns.
///
/// Labels need not be `1..=n`: intermediate states of insertion and of the
/// delta operator live here.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Grid {
    rows: Vec<Vec<usize>>,
}

impl Grid {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        check_shape(&rows)?;
        let mut seen = std::collections::HashSet::new();
        for (cell, v) in cells_of(&rows) {
            if v == 0 {
                return Err(Error::ZeroEntry { cell });
            }
            if !seen.insert(v) {
                return Err(Error::DuplicateEntry { value: v, cell });
            }
        }
        check_order(&rows)?;
        Ok(Grid { rows })
    }

    pub fn empty() -> Self {
        Grid::default()
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(Grid::new(rows.clone()).is_ok(), "invalid grid {rows:?}");
        Grid { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<usize>> {
        &mut self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .copied()
    }

    /// Cell holding `value`, if any.
    pub fn position(&self, value: usize) -> Option<Cell> {
        cells_of(&self.rows)
            .find(|&(_, v)| v == value)
            .map(|(c, _)| c)
    }

    pub fn contains_value(&self, value: usize) -> bool {
        self.rows.iter().any(|r| r.contains(&value))
    }

    pub fn first_row(&self) -> &[usize] {
        self.rows.first().map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn first_column(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0]).collect()
    }

    /// Entries in row-major order.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn transpose(&self) -> Grid {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|j| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > j)
                    .map(|r| r[j])
                    .collect()
            })
            .collect();
        Grid { rows }
    }

    /// Relabels entries by relative order so they become `1..=n`.
    pub fn standardize(&self) -> Tableau {
        let mut labels = self.reading_word();
        labels.sort_unstable();
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| labels.binary_search(v).unwrap() + 1)
                    .collect()
            })
            .collect();
        Tableau(Grid { rows })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Grid::new(rows_from_json(text)?)
    }

    /// Same input forms as [`Tableau::from_text`].
    pub fn from_text(text: &str) -> Result<Self> {
        Grid::new(rows_from_text(text)?)
    }
}

impl fmt::Display for Grid {
    /// One row per line, entries right-aligned and space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("(empty)");
        }
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            f.write_str(&line.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Grid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RowsRef { rows: &self.rows }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Grid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match RowsRepr::deserialize(d)? {
            RowsRepr::Object { rows } | RowsRepr::Bare(rows) => {
                Grid::new(rows).map_err(serde::de::Error::custom)
            }
        }
    }
}

/// A standard Young tableau: a [`Grid`] whose labels are exactly `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Tableau(Grid);

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        check_shape(&rows)?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (cell, v) in cells_of(&rows) {
            if v == 0 || v > n {
                return Err(Error::EntryOutOfRange { value: v, cell, n });
            }
            if seen[v] {
                return Err(Error::DuplicateEntry { value: v, cell });
            }
            seen[v] = true;
        }
        check_order(&rows)?;
        Ok(Tableau(Grid { rows }))
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    /// Single row `1 2 ... n`.
    pub fn single_row(n: usize) -> Self {
        if n == 0 {
            return Tableau::empty();
        }
        Tableau(Grid {
            rows: vec![(1..=n).collect()],
        })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(Tableau::new(rows.clone()).is_ok(), "invalid SYT {rows:?}");
        Tableau(Grid { rows })
    }

    /// Accepts a grid whose labels happen to be `1..=n`.
    pub fn try_from_grid(grid: Grid) -> Result<Self> {
        Tableau::new(grid.rows)
    }

    pub fn as_grid(&self) -> &Grid {
        &self.0
    }

    pub fn into_grid(self) -> Grid {
        self.0
    }

    pub fn transpose(&self) -> Tableau {
        Tableau(self.0.transpose())
    }

    /// Parses `{"rows": [[...]]}` or a bare `[[...]]`.
    pub fn from_json(text: &str) -> Result<Self> {
        Tableau::new(rows_from_json(text)?)
    }

    /// One row per line, entries separated by whitespace or commas.
    pub fn from_ascii(text: &str) -> Result<Self> {
        Tableau::new(rows_from_ascii(text)?)
    }

    /// JSON when the text starts with `[` or `{`, ASCII rows otherwise.
    pub fn from_text(text: &str) -> Result<Self> {
        Tableau::new(rows_from_text(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableau serializes")
    }
}

impl Deref for Tableau {
    type Target = Grid;
    fn deref(&self) -> &Grid {
        &self.0
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match RowsRepr::deserialize(d)? {
            RowsRepr::Object { rows } | RowsRepr::Bare(rows) => {
                Tableau::new(rows).map_err(serde::de::Error::custom)
            }
        }
    }
}

fn rows_from_json(text: &str) -> Result<Vec<Vec<usize>>> {
    let repr: RowsRepr =
        serde_json::from_str(text).map_err(|e| Error::TableauSyntax(e.to_string()))?;
    match repr {
        RowsRepr::Object { rows } | RowsRepr::Bare(rows) => Ok(rows),
    }
}

fn rows_from_ascii(text: &str) -> Result<Vec<Vec<usize>>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            line.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::TableauSyntax(format!("{t:?} is not an entry")))
                })
                .collect()
        })
        .collect()
}

fn rows_from_text(text: &str) -> Result<Vec<Vec<usize>>> {
    match text.trim_start().chars().next() {
        Some('[') | Some('{') => rows_from_json(text),
        _ => rows_from_ascii(text),
    }
}

fn cells_of(rows: &[Vec<usize>]) -> impl Iterator<Item = (Cell, usize)> + '_ {
    rows.iter().enumerate().flat_map(|(i, r)| {
        r.iter()
            .enumerate()
            .map(move |(j, &v)| (Cell::new(i + 1, j + 1), v))
    })
}

fn check_shape(rows: &[Vec<usize>]) -> Result<()> {
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
    }
    Ok(())
}

fn check_order(rows: &[Vec<usize>]) -> Result<()> {
    for (i, row) in rows.iter().enumerate() {
        for j in 0..row.len() {
            if j > 0 && row[j - 1] >= row[j] {
                return Err(Error::RowOrder {
                    cell: Cell::new(i + 1, j + 1),
                });
            }
            if i > 0 && rows[i - 1][j] >= row[j] {
                return Err(Error::ColumnOrder {
                    cell: Cell::new(i + 1, j + 1),
                });
            }
        }
    }
    Ok(())
}

/// Every SYT of shape `shape`, sorted lexicographically by the row-major
/// reading word.
pub fn enumerate_syt(shape: &Shape) -> Vec<Tableau> {
    fn fill(
        target: &[usize],
        rows: &mut Vec<Vec<usize>>,
        next: usize,
        n: usize,
        out: &mut Vec<Tableau>,
    ) {
        if next > n {
            out.push(Tableau(Grid { rows: rows.clone() }));
            return;
        }
        for i in 0..target.len() {
            let len = rows.get(i).map_or(0, Vec::len);
            let above = if i == 0 {
                usize::MAX
            } else {
                rows.get(i - 1).map_or(0, Vec::len)
            };
            if len < target[i] && len < above {
                if i == rows.len() {
                    rows.push(Vec::new());
                }
                rows[i].push(next);
                fill(target, rows, next + 1, n, out);
                rows[i].pop();
                if rows[i].is_empty() {
                    rows.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    fill(shape.parts(), &mut Vec::new(), 1, shape.size(), &mut out);
    out.sort_by_cached_key(|t| t.reading_word());
    out
}

/// `f^λ` by the hook-length formula.
pub fn count_syt(shape: &Shape) -> u64 {
    let n = shape.size();
    let conj = shape.conjugate();
    let mut hooks: Vec<u128> = Vec::with_capacity(n);
    for (i, &len) in shape.parts().iter().enumerate() {
        for j in 0..len {
            let arm = len - j - 1;
            let leg = conj.parts()[j] - i - 1;
            hooks.push((arm + leg + 1) as u128);
        }
    }
    // n <= 20 keeps n! well inside u128.
    let numerator: u128 = (1..=n as u128).product();
    let denominator: u128 = hooks.iter().product();
    (numerator / denominator) as u64
}
