//! `B(∞)` as marginally large tableaux.
//!
//! Large tableaux are grouped into classes that agree on the number of
//! `j`-boxes (`j ≻ i`) in every row `i`; each class has exactly one
//! marginally large member, which is the representative used here.
//! Kashiwara operators act as on ordinary tableaux, followed by inserting or
//! removing a trivial column `1, 2, …, r` whenever the result would leave
//! the set of marginally large tableaux.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{self, Crystal, CrystalGraph};
use crate::lie::{Direction, Family, Letter, TypeSpec, Weight};
use crate::tableau::{self, shape_for_weight, shape_weight, tableau_stats, tableau_weight, Stats, Tableau};
use crate::{Error, Result};

/// A tableau that satisfies every representative condition for its
/// family; see [`is_valid_representative`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarginallyLarge(Tableau);

impl MarginallyLarge {
    pub fn new(spec: &TypeSpec, t: Tableau) -> Result<MarginallyLarge> {
        match representative_violation(spec, &t) {
            None => Ok(MarginallyLarge(t)),
            Some(reason) => Err(Error::InvalidRepresentative { reason }),
        }
    }

    pub fn from_codes<R: AsRef<[i32]>>(spec: &TypeSpec, rows: &[R]) -> Result<MarginallyLarge> {
        MarginallyLarge::new(spec, Tableau::from_codes(spec, rows)?)
    }

    pub fn as_tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn into_tableau(self) -> Tableau {
        self.0
    }
}

impl AsRef<Tableau> for MarginallyLarge {
    fn as_ref(&self) -> &Tableau {
        &self.0
    }
}

impl fmt::Display for MarginallyLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// For each row `i`: (number of `i`-boxes in row `i`) − (length of row
/// `i + 1`). `None` unless there are exactly `n` rows.
fn excesses(spec: &TypeSpec, t: &Tableau) -> Option<Vec<i64>> {
    let n = spec.n();
    if t.rows().len() != n {
        return None;
    }
    Some(
        (0..n)
            .map(|r| t.count_in_row(r, Letter::unbarred(r + 1)) as i64 - t.row_len(r + 1) as i64)
            .collect(),
    )
}

fn first_non_large_row(spec: &TypeSpec, t: &Tableau) -> Option<usize> {
    match excesses(spec, t) {
        None => Some(t.rows().len().min(spec.n()) + 1),
        Some(ex) => ex.iter().position(|&e| e <= 0).map(|r| r + 1),
    }
}

/// `n` nonempty rows, and row `i` holds more `i`-boxes than row `i + 1`
/// holds boxes.
pub fn is_large(spec: &TypeSpec, t: &Tableau) -> bool {
    excesses(spec, t).is_some_and(|ex| ex.iter().all(|&e| e > 0))
}

/// Large with every excess exactly one.
pub fn is_marginally_large(spec: &TypeSpec, t: &Tableau) -> bool {
    excesses(spec, t).is_some_and(|ex| ex.iter().all(|&e| e == 1))
}

pub fn is_valid_representative(spec: &TypeSpec, t: &Tableau) -> bool {
    representative_violation(spec, t).is_none()
}

fn representative_violation(spec: &TypeSpec, t: &Tableau) -> Option<String> {
    let n = spec.n();
    if t.rows().len() != n {
        return Some(format!("expected {n} rows, found {}", t.rows().len()));
    }
    if t.rows().iter().flatten().any(|&x| !spec.contains(x)) {
        return Some(String::from("letter outside the alphabet"));
    }
    for (r, row) in t.rows().iter().enumerate() {
        let i = r + 1;
        if r > 0 && row.len() > t.row_len(r - 1) {
            return Some(format!("row {i} is longer than row {r}"));
        }
        if row[0] != Letter::unbarred(i) {
            return Some(format!("row {i} must start with {i}"));
        }
        if row.windows(2).any(|p| spec.order_unchecked(p[0]) > spec.order_unchecked(p[1])) {
            return Some(format!("row {i} is not weakly increasing"));
        }
        let zeros = row.iter().filter(|x| **x == Letter::ZERO).count();
        match spec.family() {
            Family::A => {}
            Family::B | Family::C | Family::D => {
                let bound = spec.order_unchecked(Letter::barred(i));
                if row.iter().any(|&x| spec.order_unchecked(x) > bound) {
                    return Some(format!("row {i} has an entry beyond -{i}"));
                }
                if zeros > 1 {
                    return Some(format!("row {i} has more than one 0"));
                }
                if spec.family() == Family::D
                    && row.contains(&Letter::unbarred(n + 1))
                    && row.contains(&Letter::barred(n + 1))
                {
                    return Some(format!("row {i} holds both {} and -{}", n + 1, n + 1));
                }
            }
            Family::G => {
                if i == 2 && row.iter().any(|x| !matches!(x.code(), 2 | 3)) {
                    return Some(String::from("row 2 may only hold 2 and 3"));
                }
                if zeros > 1 {
                    return Some(String::from("row 1 has more than one 0"));
                }
            }
        }
    }
    if !is_marginally_large(spec, t) {
        return Some(String::from("not marginally large"));
    }
    None
}

/// The representative of `u_∞`: row `i` holds `n - i + 1` copies of `i`.
pub fn t_infinity(spec: &TypeSpec) -> MarginallyLarge {
    let n = spec.n();
    MarginallyLarge(Tableau::from_rows_unchecked(
        (1..=n).map(|i| vec![Letter::unbarred(i); n - i + 1]).collect(),
    ))
}

/// Letters of row `r` other than `r + 1`, in row order.
fn nontrivial(row: &[Letter], r: usize) -> impl Iterator<Item = Letter> + '_ {
    row.iter().copied().filter(move |&x| x != Letter::unbarred(r + 1))
}

fn nontrivial_counts(spec: &TypeSpec, t: &Tableau, r: usize) -> Vec<usize> {
    let mut counts = vec![0; spec.alphabet().len()];
    for x in nontrivial(&t.rows()[r], r) {
        counts[spec.pos(x).expect("legal letter")] += 1;
    }
    counts
}

/// Whether two large tableaux have the same number of `j`-boxes in row `i`
/// for every `j ≻ i`.
pub fn related(spec: &TypeSpec, t1: &Tableau, t2: &Tableau) -> Result<bool> {
    for t in [t1, t2] {
        if let Some(row) = first_non_large_row(spec, t) {
            return Err(Error::NotLarge { row });
        }
    }
    if t1.rows().len() != t2.rows().len() {
        return Err(Error::Mismatch { reason: String::from("different numbers of rows") });
    }
    Ok((0..spec.n()).all(|r| nontrivial_counts(spec, t1, r) == nontrivial_counts(spec, t2, r)))
}

/// Rebuilds row `r` with `count` leading `(r+1)`-boxes.
fn refill(row: &[Letter], r: usize, count: usize) -> Vec<Letter> {
    let mut out = vec![Letter::unbarred(r + 1); count];
    out.extend(nontrivial(row, r));
    out
}

/// The marginally large tableau related to a large `t`.
pub fn canonicalize(spec: &TypeSpec, t: &Tableau) -> Result<MarginallyLarge> {
    if let Some(row) = first_non_large_row(spec, t) {
        return Err(Error::NotLarge { row });
    }
    let n = spec.n();
    let mut rows = vec![Vec::new(); n];
    for r in (0..n).rev() {
        let below = rows.get(r + 1).map_or(0, Vec::len);
        rows[r] = refill(&t.rows()[r], r, below + 1);
    }
    MarginallyLarge::new(spec, Tableau::from_rows_unchecked(rows))
}

/// The tableau of shape `λ` related to `t`, changing only the count of
/// `i`-boxes in each row `i`. Each row `i` must keep at least as many
/// `i`-boxes as row `i + 1` has boxes; the result is large when every such
/// count is strictly larger.
pub fn pad(spec: &TypeSpec, t: &MarginallyLarge, lambda: &Weight) -> Result<Tableau> {
    let shape = shape_for_weight(spec, lambda)?;
    let n = spec.n();
    let t = t.as_tableau();
    if shape.len() != n {
        return Err(Error::ShapeTooSmall { row: shape.len() + 1 });
    }
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let others = nontrivial(&t.rows()[r], r).count();
        let below = shape.get(r + 1).copied().unwrap_or(0);
        if shape[r] < others || shape[r] - others < below {
            return Err(Error::ShapeTooSmall { row: r + 1 });
        }
        rows.push(refill(&t.rows()[r], r, shape[r] - others));
    }
    Ok(Tableau::from_rows_unchecked(rows))
}

fn revalidate(spec: &TypeSpec, t: &MarginallyLarge) -> Result<()> {
    match representative_violation(spec, t.as_tableau()) {
        None => Ok(()),
        Some(reason) => Err(Error::InvalidRepresentative { reason }),
    }
}

fn internal(spec: &TypeSpec, t: Tableau, what: &str) -> Result<MarginallyLarge> {
    MarginallyLarge::new(spec, t).map_err(|e| Error::Internal { reason: format!("{what}: {e}") })
}

/// `f̃_i` on a representative. Never zero.
pub fn binfty_lower(spec: &TypeSpec, i: usize, t: &MarginallyLarge) -> Result<MarginallyLarge> {
    spec.check_index(i)?;
    revalidate(spec, t)?;
    let (mut out, (r, c)) = tableau::act(spec, i, t.as_tableau(), Direction::Lower)
        .ok_or_else(|| Error::Internal { reason: format!("f{i} vanished on a large tableau") })?;
    if !is_large(spec, &out) {
        // the acted box was the last trivial box of row r; restore largeness
        // with a column 1..=r+1 just left of it
        for (k, row) in out.rows_mut().iter_mut().take(r + 1).enumerate() {
            row.insert(c, Letter::unbarred(k + 1));
        }
    }
    internal(spec, out, "lowering left the representatives")
}

/// `ẽ_i` on a representative.
pub fn binfty_raise(spec: &TypeSpec, i: usize, t: &MarginallyLarge) -> Result<Option<MarginallyLarge>> {
    spec.check_index(i)?;
    revalidate(spec, t)?;
    let Some((mut out, (r, c))) = tableau::act(spec, i, t.as_tableau(), Direction::Raise) else {
        return Ok(None);
    };
    if !is_marginally_large(spec, &out) {
        let trivial_column = out.row_len(r + 1) <= c
            && (0..=r).all(|k| out.rows()[k].get(c) == Some(&Letter::unbarred(k + 1)));
        if !trivial_column {
            return Err(Error::Internal { reason: format!("e{i} changed a box outside a removable column") });
        }
        for row in out.rows_mut().iter_mut().take(r + 1) {
            row.remove(c);
        }
    }
    internal(spec, out, "raising left the representatives").map(Some)
}

/// `wt = wt(T) − λ(T)`, `ε_i` from the signature, `φ_i = ε_i + ⟨h_i, wt⟩`.
pub fn binfty_stats(spec: &TypeSpec, t: &MarginallyLarge) -> Stats {
    let t = t.as_tableau();
    let plain = tableau_stats(spec, t);
    let wt = &plain.wt - &shape_weight(spec, &t.shape());
    let phi = plain.eps.iter().zip(wt.as_slice()).map(|(e, w)| e + w).collect();
    Stats { wt, eps: plain.eps, phi }
}

pub fn binfty_weight(spec: &TypeSpec, t: &MarginallyLarge) -> Weight {
    let t = t.as_tableau();
    &tableau_weight(spec, t) - &shape_weight(spec, &t.shape())
}

/// `B(∞)` on marginally large representatives.
#[derive(Debug, Clone, Copy)]
pub struct InfinityCrystal<'a> {
    spec: &'a TypeSpec,
}

impl<'a> InfinityCrystal<'a> {
    pub fn new(spec: &'a TypeSpec) -> Self {
        InfinityCrystal { spec }
    }

    pub fn spec(&self) -> &TypeSpec {
        self.spec
    }
}

impl Crystal for InfinityCrystal<'_> {
    type Element = MarginallyLarge;

    fn rank(&self) -> usize {
        self.spec.rank()
    }

    fn apply(&self, i: usize, x: &MarginallyLarge, dir: Direction) -> Result<Option<MarginallyLarge>> {
        match dir {
            Direction::Lower => binfty_lower(self.spec, i, x).map(Some),
            Direction::Raise => binfty_raise(self.spec, i, x),
        }
    }

    fn weight(&self, x: &MarginallyLarge) -> Result<Weight> {
        Ok(binfty_weight(self.spec, x))
    }

    fn highest(&self) -> Result<MarginallyLarge> {
        Ok(t_infinity(self.spec))
    }
}

pub fn bfs_binfty(spec: &TypeSpec, depth: usize) -> Result<CrystalGraph<MarginallyLarge>> {
    graph::bfs(&InfinityCrystal::new(spec), Some(depth))
}
