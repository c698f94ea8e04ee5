//! Quasigroups as Latin squares and loops as quasigroups with a detected
//! two-sided identity.

use std::fmt::Write as _;

use crate::error::{Error, Line, Result};
use crate::perm::Perm;

/// Largest supported order.
pub const MAX_ORDER: usize = 256;

/// Multiplication table of a finite quasigroup on `{0..n-1}`;
/// `mul(x, y)` is the entry in row `x`, column `y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    order: usize,
    cells: Vec<usize>,
}

impl CayleyTable {
    /// Validates a square matrix as a Latin square.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order, max: MAX_ORDER });
        }
        let mut cells = Vec::with_capacity(order * order);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != order {
                return Err(Error::NonSquare { row, len: r.len(), order });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(Error::EntryOutOfRange { row, col, value, order });
                }
            }
            cells.extend_from_slice(r);
        }
        let table = CayleyTable { order, cells };
        table.check_latin()?;
        Ok(table)
    }

    /// Builds a table from a closure; the result is still validated.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..order).map(|x| (0..order).map(|y| f(x, y)).collect()).collect();
        Self::from_rows(&rows)
    }

    /// Caller guarantees the cells form a Latin square of the given order.
    pub(crate) fn from_cells_unchecked(order: usize, cells: Vec<usize>) -> Self {
        let t = CayleyTable { order, cells };
        debug_assert!(t.check_latin().is_ok());
        t
    }

    fn check_latin(&self) -> Result<()> {
        let n = self.order;
        let mut seen = vec![usize::MAX; n];
        for x in 0..n {
            for y in 0..n {
                let v = self.mul(x, y);
                if seen[v] == x {
                    return Err(Error::LatinViolation { line: Line::Row, index: x, value: v });
                }
                seen[v] = x;
            }
        }
        seen.fill(usize::MAX);
        for y in 0..n {
            for x in 0..n {
                let v = self.mul(x, y);
                if seen[v] == y {
                    return Err(Error::LatinViolation { line: Line::Column, index: y, value: v });
                }
                seen[v] = y;
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.order + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.cells[x * self.order..(x + 1) * self.order]
    }

    pub fn column(&self, y: usize) -> Vec<usize> {
        (0..self.order).map(|x| self.mul(x, y)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|x| self.row(x).to_vec()).collect()
    }

    /// The unique `y` with `x·y = z`.
    pub fn left_div(&self, x: usize, z: usize) -> usize {
        self.row(x).iter().position(|&v| v == z).expect("Latin row")
    }

    /// The unique `x` with `x·y = z`.
    pub fn right_div(&self, z: usize, y: usize) -> usize {
        (0..self.order).find(|&x| self.mul(x, y) == z).expect("Latin column")
    }

    fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.order {
            return Err(Error::ElementOutOfRange { element: x, order: self.order });
        }
        Ok(())
    }

    /// Scans for a two-sided identity element.
    pub fn find_identity(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    pub fn parse_tbl(text: &str) -> Result<Self> {
        read_table_file(text)
    }

    pub fn to_tbl(&self) -> String {
        write_table_file(self)
    }
}

impl std::fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CayleyTable(order {})", self.order)?;
        for x in 0..self.order {
            writeln!(f, "  {:?}", self.row(x))?;
        }
        Ok(())
    }
}

pub fn from_table<R: AsRef<[usize]>>(rows: &[R]) -> Result<CayleyTable> {
    CayleyTable::from_rows(rows)
}

/// A quasigroup together with its verified identity element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LoopStructure {
    table: CayleyTable,
    identity: usize,
}

pub fn as_loop(q: CayleyTable) -> Result<LoopStructure> {
    LoopStructure::new(q)
}

impl LoopStructure {
    pub fn new(table: CayleyTable) -> Result<Self> {
        let identity = table.find_identity().ok_or(Error::NoIdentity)?;
        Ok(LoopStructure { table, identity })
    }

    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        Self::new(CayleyTable::from_rows(rows)?)
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn into_table(self) -> CayleyTable {
        self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn order(&self) -> usize {
        self.table.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table.mul(x, y)
    }

    pub fn square(&self, x: usize) -> usize {
        self.mul(x, x)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// `L_x : y ↦ x·y`.
    pub fn left_translation(&self, x: usize) -> Result<Perm> {
        self.table.check_element(x)?;
        Ok(Perm::from_images_unchecked(self.table.row(x).to_vec()))
    }

    /// `R_x : y ↦ y·x`.
    pub fn right_translation(&self, x: usize) -> Result<Perm> {
        self.table.check_element(x)?;
        Ok(Perm::from_images_unchecked(self.table.column(x)))
    }

    /// `[R_0, R_1, ..., R_{n-1}]`.
    pub fn right_translations(&self) -> Vec<Perm> {
        self.elements().map(|x| Perm::from_images_unchecked(self.table.column(x))).collect()
    }

    pub fn left_translations(&self) -> Vec<Perm> {
        self.elements().map(|x| Perm::from_images_unchecked(self.table.row(x).to_vec())).collect()
    }

    /// Left-normed powers `x^0 = e`, `x^(k+1) = x·x^k`, up to the first
    /// return to `e`. The returned length is the period of the sequence.
    fn left_normed_powers(&self, x: usize) -> Vec<usize> {
        let mut powers = vec![self.identity];
        let mut cur = self.mul(x, self.identity);
        while cur != self.identity {
            powers.push(cur);
            cur = self.mul(x, cur);
        }
        powers
    }

    /// Checks that every bracketing of every power of `x` agrees.
    ///
    /// Writing `p(k)` for the left-normed power, every bracketing of `x^k`
    /// splits as `B·B'` with sizes `i + j = k`, so by induction all
    /// bracketings agree iff `p(i)·p(j) = p(i+j)` for all `i, j ≥ 1`. The
    /// sequence `p` is periodic with the cycle length `t` of `e` under `L_x`,
    /// so `1 ≤ i, j ≤ t` suffices. On failure returns `(i, j, p(i)·p(j), p(i+j))`.
    pub(crate) fn power_ambiguity(&self, x: usize) -> Option<(usize, usize, usize, usize)> {
        let p = self.left_normed_powers(x);
        let t = p.len();
        for i in 1..=t {
            for j in 1..=t {
                let product = self.mul(p[i % t], p[j % t]);
                let expected = p[(i + j) % t];
                if product != expected {
                    return Some((i, j, product, expected));
                }
            }
        }
        None
    }

    /// Number of distinct powers of `x` (its order, when powers are unambiguous).
    pub fn element_order(&self, x: usize) -> Result<usize> {
        self.table.check_element(x)?;
        Ok(self.left_normed_powers(x).len())
    }

    /// `x^m` for any integer `m`. Negative powers are `x^m = x^k \ e` with
    /// `k = -m`. Fails if the powers of `x` depend on bracketing.
    pub fn element_power(&self, x: usize, m: i64) -> Result<usize> {
        self.table.check_element(x)?;
        if let Some((i, j, product, expected)) = self.power_ambiguity(x) {
            return Err(Error::PowerAmbiguity {
                x,
                left_exp: i,
                right_exp: j,
                total: i + j,
                product,
                expected,
            });
        }
        let p = self.left_normed_powers(x);
        let t = p.len() as u64;
        let forward = p[(m.unsigned_abs() % t) as usize];
        if m >= 0 {
            Ok(forward)
        } else {
            Ok(self.table.left_div(forward, self.identity))
        }
    }
}

/// Parses the `.tbl` format: the order on the first content line, then one
/// line of space-separated entries per row. Lines starting with `#` are
/// comments.
pub fn read_table_file(text: &str) -> Result<CayleyTable> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('#'));
    let fmt_err = |line: usize, message: String| Error::TableFormat { line, message };

    let (first, header) = lines.next().ok_or_else(|| fmt_err(1, "missing order line".into()))?;
    let order: usize = header
        .trim()
        .parse()
        .map_err(|_| fmt_err(first, format!("order {:?} is not a decimal integer", header.trim())))?;
    if order == 0 {
        return Err(Error::EmptyTable);
    }
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge { order, max: MAX_ORDER });
    }

    let mut rows = Vec::with_capacity(order);
    for (lineno, line) in lines {
        if rows.len() == order {
            if line.trim().is_empty() {
                continue;
            }
            return Err(fmt_err(lineno, "unexpected content after the last row".into()));
        }
        let row = line
            .split(' ')
            .map(|tok| tok.parse::<usize>().map_err(|_| fmt_err(lineno, format!("token {tok:?} is not a decimal integer"))))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != order {
            return Err(fmt_err(lineno, format!("expected {order} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != order {
        return Err(fmt_err(text.lines().count() + 1, format!("expected {order} rows, found {}", rows.len())));
    }
    CayleyTable::from_rows(&rows)
}

pub fn write_table_file(table: &CayleyTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", table.order());
    for x in 0..table.order() {
        let row: Vec<String> = table.row(x).iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}
