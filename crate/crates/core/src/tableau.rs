//! Tableaux, the signature rule and highest-weight crystals `B(λ)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{self, Crystal, CrystalGraph};
use crate::lie::{Direction, Letter, TypeSpec, Weight};
use crate::{Error, Result};

/// Rows of letters, top row first. Rows are nonempty and weakly decrease
/// in length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn new(spec: &TypeSpec, rows: Vec<Vec<Letter>>) -> Result<Tableau> {
        if rows.len() > spec.n() {
            return Err(Error::MalformedTableau {
                reason: format!("{} rows, at most {} allowed", rows.len(), spec.n()),
            });
        }
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::MalformedTableau { reason: format!("row {} is empty", r + 1) });
            }
            if r > 0 && row.len() > rows[r - 1].len() {
                return Err(Error::MalformedTableau {
                    reason: format!("row {} is longer than row {}", r + 1, r),
                });
            }
            for &x in row {
                spec.check_letter(x)?;
            }
        }
        Ok(Tableau { rows })
    }

    /// Builds a tableau from signed letter codes.
    pub fn from_codes<R: AsRef<[i32]>>(spec: &TypeSpec, rows: &[R]) -> Result<Tableau> {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&c| Letter::new(c)).collect())
            .collect();
        Tableau::new(spec, rows)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Letter>>) -> Tableau {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Letter>> {
        self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn box_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Length of row `r` (0-based), zero past the last row.
    pub(crate) fn row_len(&self, r: usize) -> usize {
        self.rows.get(r).map_or(0, Vec::len)
    }

    /// Box coordinates `(row, column)` in far-eastern order: columns from
    /// right to left, each column top to bottom.
    pub fn reading_positions(&self) -> Vec<(usize, usize)> {
        let width = self.rows.first().map_or(0, Vec::len);
        let mut out = Vec::with_capacity(self.box_count());
        for c in (0..width).rev() {
            for (r, row) in self.rows.iter().enumerate() {
                if c < row.len() {
                    out.push((r, c));
                } else {
                    break;
                }
            }
        }
        out
    }

    pub fn far_eastern_reading(&self) -> Vec<Letter> {
        self.reading_positions().into_iter().map(|(r, c)| self.rows[r][c]).collect()
    }

    /// Count of letter `x` in row `r` (0-based).
    pub fn count_in_row(&self, r: usize, x: Letter) -> usize {
        self.rows.get(r).map_or(0, |row| row.iter().filter(|&&y| y == x).count())
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<Letter>> {
        &mut self.rows
    }
}

impl fmt::Display for Tableau {
    /// One bracketed row per line: `[1 1 -3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("\n")?;
            }
            f.write_str("[")?;
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// Reduced `i`-signature of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Signature {
    /// Surviving 1s (all to the left of the surviving 0s).
    pub ones: usize,
    /// Surviving 0s.
    pub zeros: usize,
    /// Letter owning the leftmost surviving 0; where `f̃_i` acts.
    pub lower_at: Option<usize>,
    /// Letter owning the rightmost surviving 1; where `ẽ_i` acts.
    pub raise_at: Option<usize>,
}

/// Signature rule: `ε_i` 1s then `φ_i` 0s under each letter, then cancel
/// `(0, 1)` pairs until the sequence reads `1…10…0`.
pub fn i_signature(spec: &TypeSpec, i: usize, word: &[Letter]) -> Result<Signature> {
    spec.check_index(i)?;
    let positions = word.iter().map(|&x| spec.pos(x)).collect::<Result<Vec<_>>>()?;
    Ok(signature_unchecked(spec, i, &positions))
}

fn signature_unchecked(spec: &TypeSpec, i: usize, positions: &[usize]) -> Signature {
    // unmatched 0s, as owning letter indices
    let mut open: Vec<usize> = Vec::new();
    let mut sig = Signature::default();
    for (k, &p) in positions.iter().enumerate() {
        let (eps, phi) = spec.eps_phi_unchecked(i, p);
        for _ in 0..eps {
            if open.pop().is_none() {
                sig.ones += 1;
                sig.raise_at = Some(k);
            }
        }
        for _ in 0..phi {
            open.push(k);
        }
    }
    sig.zeros = open.len();
    sig.lower_at = open.first().copied();
    sig
}

/// Signature of a tableau's far-eastern reading, with the acting box
/// translated back to `(row, column)`.
fn tableau_signature(spec: &TypeSpec, i: usize, t: &Tableau) -> (Signature, Vec<(usize, usize)>) {
    let cells = t.reading_positions();
    let positions: Vec<usize> = cells.iter().map(|&(r, c)| spec.pos(t.rows[r][c]).expect("legal letter")).collect();
    (signature_unchecked(spec, i, &positions), cells)
}

/// Applies `f̃_i`/`ẽ_i` and reports the box that changed.
pub(crate) fn act(spec: &TypeSpec, i: usize, t: &Tableau, dir: Direction) -> Option<(Tableau, (usize, usize))> {
    let (sig, cells) = tableau_signature(spec, i, t);
    let at = match dir {
        Direction::Lower => sig.lower_at,
        Direction::Raise => sig.raise_at,
    }?;
    let (r, c) = cells[at];
    let p = spec.pos(t.rows[r][c]).expect("legal letter");
    let q = spec.step_unchecked(i, p, dir)?;
    let mut out = t.clone();
    out.rows[r][c] = spec.alphabet()[q];
    Some((out, (r, c)))
}

/// Kashiwara operator on a tableau via the far-eastern reading.
pub fn apply_plain(spec: &TypeSpec, i: usize, t: &Tableau, dir: Direction) -> Result<Option<Tableau>> {
    spec.check_index(i)?;
    Ok(act(spec, i, t, dir).map(|(t, _)| t))
}

/// `wt`, `ε` and `φ` of an element, indexed by `i - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stats {
    pub wt: Weight,
    pub eps: Vec<i64>,
    pub phi: Vec<i64>,
}

pub fn tableau_weight(spec: &TypeSpec, t: &Tableau) -> Weight {
    let mut wt = Weight::zero(spec.rank());
    for row in &t.rows {
        for &x in row {
            wt += spec.weight_unchecked(x);
        }
    }
    wt
}

pub fn tableau_stats(spec: &TypeSpec, t: &Tableau) -> Stats {
    let wt = tableau_weight(spec, t);
    let (mut eps, mut phi) = (Vec::with_capacity(spec.rank()), Vec::with_capacity(spec.rank()));
    for i in spec.indices() {
        let (sig, _) = tableau_signature(spec, i, t);
        eps.push(sig.ones as i64);
        phi.push(sig.zeros as i64);
    }
    Stats { wt, eps, phi }
}

/// Weight of the filling of `shape` that puts letter `i` in every box of
/// row `i`.
pub fn shape_weight(spec: &TypeSpec, shape: &[usize]) -> Weight {
    let mut wt = Weight::zero(spec.rank());
    for (r, &len) in shape.iter().enumerate() {
        wt += &(spec.weight_unchecked(Letter::unbarred(r + 1)) * len as i64);
    }
    wt
}

/// Row lengths of the shape whose [`shape_weight`] is `λ`.
pub fn shape_for_weight(spec: &TypeSpec, lambda: &Weight) -> Result<Vec<usize>> {
    if let Some(reason) = spec.hat_dominance_violation(lambda)? {
        return Err(Error::NotHatDominant { reason });
    }
    let n = spec.n();
    let mut lengths = vec![0i64; n];
    // triangular solve, bottom row first
    for r in (0..n).rev() {
        let diag = spec.weight_unchecked(Letter::unbarred(r + 1))[r];
        let rest: i64 = (r + 1..n).map(|s| lengths[s] * spec.weight_unchecked(Letter::unbarred(s + 1))[r]).sum();
        let rhs = lambda[r] - rest;
        if diag <= 0 || rhs % diag != 0 {
            return Err(Error::NotHatDominant { reason: format!("no shape has weight {lambda}") });
        }
        lengths[r] = rhs / diag;
    }
    let shape: Vec<usize> = lengths.into_iter().map(|l| l as usize).collect();
    if shape_weight(spec, &shape) != *lambda {
        return Err(Error::NotHatDominant { reason: format!("no shape has weight {lambda}") });
    }
    Ok(shape.into_iter().filter(|&l| l > 0).collect())
}

/// `u_λ`: row `i` filled with letter `i`.
pub fn highest_weight_tableau(spec: &TypeSpec, lambda: &Weight) -> Result<Tableau> {
    let shape = shape_for_weight(spec, lambda)?;
    Ok(Tableau {
        rows: shape.iter().enumerate().map(|(r, &len)| vec![Letter::unbarred(r + 1); len]).collect(),
    })
}

/// The crystal `B(λ)` generated from `u_λ` by the plain operators.
#[derive(Debug, Clone)]
pub struct HighestWeightCrystal<'a> {
    spec: &'a TypeSpec,
    lambda: Weight,
    top: Tableau,
}

impl<'a> HighestWeightCrystal<'a> {
    pub fn new(spec: &'a TypeSpec, lambda: Weight) -> Result<Self> {
        let top = highest_weight_tableau(spec, &lambda)?;
        Ok(HighestWeightCrystal { spec, lambda, top })
    }

    pub fn spec(&self) -> &TypeSpec {
        self.spec
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn top(&self) -> &Tableau {
        &self.top
    }

    /// Whether `t` lies in `B(λ)`: same shape as `u_λ` and raising to the
    /// top reaches `u_λ`.
    pub fn contains(&self, t: &Tableau) -> bool {
        if t.shape() != self.top.shape() {
            return false;
        }
        let mut cur = t.clone();
        'climb: loop {
            for i in self.spec.indices() {
                if let Some((up, _)) = act(self.spec, i, &cur, Direction::Raise) {
                    cur = up;
                    continue 'climb;
                }
            }
            break;
        }
        cur == self.top
    }
}

impl Crystal for HighestWeightCrystal<'_> {
    type Element = Tableau;

    fn rank(&self) -> usize {
        self.spec.rank()
    }

    fn apply(&self, i: usize, x: &Tableau, dir: Direction) -> Result<Option<Tableau>> {
        apply_plain(self.spec, i, x, dir)
    }

    fn weight(&self, x: &Tableau) -> Result<Weight> {
        Ok(tableau_weight(self.spec, x))
    }

    fn highest(&self) -> Result<Tableau> {
        Ok(self.top.clone())
    }
}

pub fn bfs_highest_weight(spec: &TypeSpec, lambda: &Weight, depth: Option<usize>) -> Result<CrystalGraph<Tableau>> {
    graph::bfs(&HighestWeightCrystal::new(spec, lambda.clone())?, depth)
}
