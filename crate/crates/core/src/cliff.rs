//! `B(∞)` inside `B(∞) ⊗ B(1) ⊗ ⋯ ⊗ B(n)`, where each `B(i)` is a tensor
//! product of elementary crystals `B_j = { b_j(k) }`, and the explicit
//! bijection with marginally large tableaux. Classical families only.
//!
//! Element `u_∞ ⊗ β_1 ⊗ ⋯ ⊗ β_n` is stored as the tuples of exponents
//! `k_{i,•}`, where `β_i` is a tensor of factors `b_j(-k)`. The factor order
//! of `β_i` is fixed per family:
//!
//! * A: `k_{i,n}, …, k_{i,i}` on `B_n ⊗ ⋯ ⊗ B_i`;
//! * B, C: `k_{i,(i+1)‾}, …, k_{i,n̄}, k_{i,n}, …, k_{i,i}` on
//!   `B_i ⊗ ⋯ ⊗ B_{n-1} ⊗ B_n ⊗ ⋯ ⊗ B_i`;
//! * D (`i < n`): `k_{i,(i+1)‾}, …, k_{i,n̄}, k_{i,n+1}, k_{i,n}, …, k_{i,i}` on
//!   `B_i ⊗ ⋯ ⊗ B_{n-1} ⊗ B_{n+1} ⊗ B_n ⊗ ⋯ ⊗ B_i`, and `k_{n,n+1}, k_{n,n}`
//!   on `B_{n+1} ⊗ B_n`.
//!
//! Elementary crystals follow the usual convention for `b_j(-k)`:
//! `ε_j = k`, `φ_j = -k`, `wt = -k α_j` and `ε_i = φ_i = -∞` for `i ≠ j`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::binfty::MarginallyLarge;
use crate::graph::Crystal;
use crate::lie::{Direction, Family, Letter, TypeSpec, Weight};
use crate::tableau::Tableau;
use crate::{Error, Result};

/// Exponent tuples, `factors[i - 1]` holding `β_i` in factor order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffElement {
    factors: Vec<Vec<u64>>,
}

impl CliffElement {
    /// Wraps raw tuples; no chain checks (see [`validate_cliff`]).
    pub fn new(factors: Vec<Vec<u64>>) -> CliffElement {
        CliffElement { factors }
    }

    pub fn factors(&self) -> &[Vec<u64>] {
        &self.factors
    }

    /// `β_i`, 1-based.
    pub fn beta(&self, i: usize) -> &[u64] {
        &self.factors[i - 1]
    }

    pub fn into_factors(self) -> Vec<Vec<u64>> {
        self.factors
    }

    /// `k_{i,j}` where `j` is the second subscript as a letter (`-r` for
    /// `r̄`).
    pub fn get(&self, spec: &TypeSpec, i: usize, j: Letter) -> Option<u64> {
        let at = layout(spec, i).iter().position(|&(_, key)| key == j)?;
        self.factors.get(i - 1)?.get(at).copied()
    }
}

impl fmt::Display for CliffElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, beta) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}:{beta:?}", i + 1)?;
        }
        Ok(())
    }
}

fn classical(spec: &TypeSpec) -> Result<()> {
    if spec.family() == Family::G {
        Err(Error::Unsupported { reason: "the tensor realization covers A, B, C and D only" })
    } else {
        Ok(())
    }
}

/// Factors of `β_i` as `(operator index of B_j, second subscript of k)`.
pub fn layout(spec: &TypeSpec, i: usize) -> Vec<(usize, Letter)> {
    let n = spec.n();
    let (u, b) = (Letter::unbarred, Letter::barred);
    let mut out = Vec::new();
    let descending = |out: &mut Vec<(usize, Letter)>, from: usize| {
        for r in (i..=from).rev() {
            out.push((r, u(r)));
        }
    };
    match spec.family() {
        Family::A => descending(&mut out, n),
        Family::B | Family::C => {
            for r in i + 1..=n {
                out.push((r - 1, b(r)));
            }
            descending(&mut out, n);
        }
        Family::D => {
            if i == n {
                out.push((n + 1, u(n + 1)));
                out.push((n, u(n)));
            } else {
                for r in i + 1..=n {
                    out.push((r - 1, b(r)));
                }
                out.push((n + 1, u(n + 1)));
                descending(&mut out, n);
            }
        }
        Family::G => {}
    }
    out
}

/// `Ψ(u_∞)`: every exponent zero.
pub fn cliff_zero(spec: &TypeSpec) -> Result<CliffElement> {
    classical(spec)?;
    Ok(CliffElement { factors: (1..=spec.n()).map(|i| vec![0; layout(spec, i).len()]).collect() })
}

fn shape_violation(spec: &TypeSpec, c: &CliffElement) -> Option<alloc::string::String> {
    if c.factors.len() != spec.n() {
        return Some(format!("expected {} tuples, found {}", spec.n(), c.factors.len()));
    }
    for i in 1..=spec.n() {
        let want = layout(spec, i).len();
        if c.factors[i - 1].len() != want {
            return Some(format!("tuple {i} has length {}, expected {want}", c.factors[i - 1].len()));
        }
    }
    None
}

fn nondecreasing(v: &[i128]) -> bool {
    v.windows(2).all(|p| p[0] <= p[1])
}

fn chain_violation(spec: &TypeSpec, c: &CliffElement) -> Option<alloc::string::String> {
    if spec.family() == Family::G {
        return Some(alloc::string::String::from("family G has no tensor realization"));
    }
    if let Some(reason) = shape_violation(spec, c) {
        return Some(reason);
    }
    let n = spec.n();
    for i in 1..=n {
        let beta: Vec<i128> = c.factors[i - 1].iter().map(|&k| i128::from(k)).collect();
        let bars = n.saturating_sub(i);
        let ok = match spec.family() {
            Family::A | Family::C => nondecreasing(&beta),
            Family::B => {
                // k_{i,n}/2 compared exactly by doubling the other entries
                let scaled: Vec<i128> =
                    beta.iter().enumerate().map(|(k, &v)| if k == bars { v } else { 2 * v }).collect();
                nondecreasing(&scaled)
            }
            Family::D if i == n => true,
            Family::D => {
                let (k_np1, k_n) = (beta[bars], beta[bars + 1]);
                let (lo, hi) = (k_np1.min(k_n), k_np1.max(k_n));
                nondecreasing(&beta[..bars])
                    && beta[bars - 1] <= lo
                    && hi <= beta[bars + 2]
                    && nondecreasing(&beta[bars + 2..])
            }
            Family::G => unreachable!(),
        };
        if !ok {
            return Some(format!("tuple {i} violates its inequality chain"));
        }
    }
    None
}

/// Membership in the image of `B(∞)`.
pub fn validate_cliff(spec: &TypeSpec, c: &CliffElement) -> bool {
    chain_violation(spec, c).is_none()
}

fn check(spec: &TypeSpec, c: &CliffElement) -> Result<()> {
    classical(spec)?;
    match chain_violation(spec, c) {
        None => Ok(()),
        Some(reason) => Err(Error::InvalidCliff { reason }),
    }
}

/// `ε_i`/`φ_i` with `None` standing for `-∞`.
type Ext = Option<i64>;

fn ext_max(a: Ext, b: Ext) -> Ext {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn ext_add(a: Ext, d: i64) -> Ext {
    a.map(|x| x + d)
}

/// Kashiwara operator on `u_∞ ⊗ β_1 ⊗ ⋯ ⊗ β_n`, left-associated, using the
/// two-factor rule: `f̃_i` acts on the left part iff `φ_i(left) > ε_i(right)`,
/// `ẽ_i` iff `φ_i(left) ≥ ε_i(right)`.
pub fn cliff_step(spec: &TypeSpec, i: usize, c: &CliffElement, dir: Direction) -> Result<Option<CliffElement>> {
    check(spec, c)?;
    spec.check_index(i)?;
    let mut slots: Vec<(usize, usize, usize)> = Vec::new();
    for row in 1..=spec.n() {
        for (at, (j, _)) in layout(spec, row).into_iter().enumerate() {
            slots.push((row - 1, at, j));
        }
    }
    let k_of = |&(row, at, _): &(usize, usize, usize)| c.factors[row][at] as i64;
    // phi[m] = φ_i of u_∞ ⊗ (first m factors)
    let mut phi: Vec<Ext> = Vec::with_capacity(slots.len() + 1);
    phi.push(Some(0));
    for slot in &slots {
        let (k, j) = (k_of(slot), slot.2);
        let own: Ext = if j == i { Some(-k) } else { None };
        let shift = -k * spec.cartan(i, j);
        let prev = *phi.last().expect("nonempty");
        phi.push(ext_max(own, ext_add(prev, shift)));
    }
    let mut target = None;
    for m in (0..slots.len()).rev() {
        let slot = &slots[m];
        let eps: Ext = if slot.2 == i { Some(k_of(slot)) } else { None };
        let go_left = match dir {
            Direction::Lower => phi[m] > eps,
            Direction::Raise => phi[m] >= eps,
        };
        if !go_left {
            target = Some(*slot);
            break;
        }
    }
    let Some((row, at, _)) = target else {
        return match dir {
            Direction::Raise => Ok(None),
            Direction::Lower => Err(Error::Internal { reason: format!("f{i} reached u_inf on {c}") }),
        };
    };
    let mut out = c.clone();
    let k = &mut out.factors[row][at];
    match dir {
        Direction::Lower => *k += 1,
        Direction::Raise => {
            *k = k.checked_sub(1).ok_or_else(|| Error::Internal { reason: format!("e{i} drove an exponent negative on {c}") })?
        }
    }
    if let Some(reason) = chain_violation(spec, &out) {
        return Err(Error::Internal { reason: format!("f/e{i} left the image: {reason}") });
    }
    Ok(Some(out))
}

/// `-Σ k α_j` over all factors `b_j(-k)`.
pub fn cliff_weight(spec: &TypeSpec, c: &CliffElement) -> Result<Weight> {
    check(spec, c)?;
    let mut wt = Weight::zero(spec.rank());
    for row in 1..=spec.n() {
        for (&k, (j, _)) in c.factors[row - 1].iter().zip(layout(spec, row)) {
            wt -= &(spec.simple_root(j) * k as i64);
        }
    }
    Ok(wt)
}

/// Letter counts of a tableau, `b(i, j)` = number of `j` in row `i`.
struct Counts<'a> {
    t: &'a Tableau,
}

impl Counts<'_> {
    fn b(&self, i: usize, code: i64) -> i64 {
        self.t.count_in_row(i - 1, Letter::new(code as i32)) as i64
    }

    fn bar(&self, i: usize, j: usize) -> i64 {
        self.b(i, -(j as i64))
    }

    fn sum_unbarred(&self, i: usize, from: usize, to: usize) -> i64 {
        (from..=to).map(|j| self.b(i, j as i64)).sum()
    }

    fn sum_barred(&self, i: usize, from: usize, to: usize) -> i64 {
        (from..=to).map(|j| self.bar(i, j)).sum()
    }
}

/// Exponents of the element matching a marginally large tableau.
pub fn tableau_to_cliff(spec: &TypeSpec, t: &MarginallyLarge) -> Result<CliffElement> {
    classical(spec)?;
    let n = spec.n();
    let cnt = Counts { t: t.as_tableau() };
    let mut factors = Vec::with_capacity(n);
    for i in 1..=n {
        let k = |key: Letter| -> i64 {
            let r = key.code().unsigned_abs() as usize;
            match spec.family() {
                Family::A => cnt.sum_unbarred(i, r + 1, n + 1),
                Family::B if i == n => 2 * cnt.bar(n, n) + cnt.b(n, 0),
                Family::C if i == n => cnt.bar(n, n),
                Family::D if i == n => {
                    if r == n {
                        cnt.b(n, n as i64 + 1) + cnt.bar(n, n)
                    } else {
                        cnt.bar(n, n) + cnt.bar(n, n + 1)
                    }
                }
                _ if key.is_barred() => cnt.sum_barred(i, i, r - 1),
                Family::B if r == n => 2 * cnt.sum_barred(i, i, n) + cnt.b(i, 0),
                Family::B => cnt.sum_unbarred(i, r + 1, n) + cnt.b(i, 0) + cnt.sum_barred(i, i, n),
                Family::C if r == n => cnt.sum_barred(i, i, n),
                Family::C => cnt.sum_unbarred(i, r + 1, n) + cnt.sum_barred(i, i, n),
                Family::D if r == n + 1 => cnt.sum_barred(i, i, n + 1),
                Family::D if r == n => cnt.b(i, n as i64 + 1) + cnt.sum_barred(i, i, n),
                Family::D => cnt.sum_unbarred(i, r + 1, n + 1) + cnt.sum_barred(i, i, n + 1),
                Family::G => unreachable!(),
            }
        };
        factors.push(layout(spec, i).into_iter().map(|(_, key)| k(key) as u64).collect());
    }
    let c = CliffElement { factors };
    if let Some(reason) = chain_violation(spec, &c) {
        return Err(Error::Internal { reason: format!("tableau image fails the chains: {reason}") });
    }
    Ok(c)
}

/// Marginally large tableau of an element; inverse of [`tableau_to_cliff`].
pub fn cliff_to_tableau(spec: &TypeSpec, c: &CliffElement) -> Result<MarginallyLarge> {
    check(spec, c)?;
    let n = spec.n();
    let k = |i: usize, key: Letter| -> i64 { c.get(spec, i, key).expect("layout key") as i64 };
    let ku = |i: usize, r: usize| k(i, Letter::unbarred(r));
    let kb = |i: usize, r: usize| k(i, Letter::barred(r));
    let (u, b) = (|j: usize| j as i64, |j: usize| -(j as i64));
    let half_floor = |twice: i64| twice.div_euclid(2);

    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        // (letter code, count), trivial letter first
        let mut counts: Vec<(i64, i64)> = Vec::new();
        match spec.family() {
            Family::A => {
                counts.push((u(i), (n - i + 1) as i64 + (i + 1..=n).map(|r| ku(r, r)).sum::<i64>()));
                for j in i + 1..=n {
                    counts.push((u(j), ku(i, j - 1) - ku(i, j)));
                }
                counts.push((u(n + 1), ku(i, n)));
            }
            Family::B if i == n => {
                let knn = ku(n, n);
                counts.push((u(n), 1));
                counts.push((0, knn - 2 * half_floor(knn)));
                counts.push((b(n), half_floor(knn)));
            }
            Family::B => {
                let trivial = (n - i + 1) as i64 + half_floor(ku(n, n) + 1) + (i + 1..n).map(|r| ku(r, r)).sum::<i64>();
                counts.push((u(i), trivial));
                for j in i + 1..n {
                    counts.push((u(j), ku(i, j - 1) - ku(i, j)));
                }
                let twice_a = 2 * ku(i, n - 1) - ku(i, n);
                let twice_b = ku(i, n) - 2 * kb(i, n);
                let (a_floor, b_floor) = (half_floor(twice_a), half_floor(twice_b));
                counts.push((u(n), a_floor));
                counts.push((0, (twice_a + twice_b) / 2 - (a_floor + b_floor)));
                counts.push((b(n), b_floor));
                for j in (i + 1..n).rev() {
                    counts.push((b(j), kb(i, j + 1) - kb(i, j)));
                }
                counts.push((b(i), kb(i, i + 1)));
            }
            Family::C if i == n => {
                counts.push((u(n), 1));
                counts.push((b(n), ku(n, n)));
            }
            Family::C => {
                counts.push((u(i), (n - i + 1) as i64 + (i + 1..=n).map(|r| ku(r, r)).sum::<i64>()));
                for j in i + 1..=n {
                    counts.push((u(j), ku(i, j - 1) - ku(i, j)));
                }
                counts.push((b(n), ku(i, n) - kb(i, n)));
                for j in (i + 1..n).rev() {
                    counts.push((b(j), kb(i, j + 1) - kb(i, j)));
                }
                counts.push((b(i), kb(i, i + 1)));
            }
            Family::D if i == n => {
                let (kn, kn1) = (ku(n, n), ku(n, n + 1));
                counts.push((u(n), 1));
                counts.push((u(n + 1), (kn - kn1).max(0)));
                counts.push((b(n + 1), (kn1 - kn).max(0)));
                counts.push((b(n), kn - (kn - kn1).max(0)));
            }
            Family::D => {
                let top = ku(n, n) + (ku(n, n + 1) - ku(n, n)).max(0);
                let trivial = top + (n - i + 1) as i64 + (i + 1..n).map(|r| ku(r, r)).sum::<i64>();
                let (kn, kn1) = (ku(i, n), ku(i, n + 1));
                counts.push((u(i), trivial));
                for j in i + 1..n {
                    counts.push((u(j), ku(i, j - 1) - ku(i, j)));
                }
                counts.push((u(n), ku(i, n - 1) - kn - (kn1 - kn).max(0)));
                counts.push((u(n + 1), (kn - kn1).max(0)));
                counts.push((b(n + 1), (kn1 - kn).max(0)));
                counts.push((b(n), kn - kb(i, n) - (kn - kn1).max(0)));
                for j in (i + 1..n).rev() {
                    counts.push((b(j), kb(i, j + 1) - kb(i, j)));
                }
                counts.push((b(i), kb(i, i + 1)));
            }
            Family::G => unreachable!(),
        }
        let mut row = Vec::new();
        for (code, count) in counts {
            if count < 0 {
                return Err(Error::Internal { reason: format!("negative count of {code} in row {i} for {c}") });
            }
            row.extend(core::iter::repeat_n(Letter::new(code as i32), count as usize));
        }
        rows.push(row);
    }
    // counts were pushed in ≺ order already; sorting guards the D middle pair
    for row in &mut rows {
        row.sort_by_key(|&x| (spec.order_unchecked(x), -x.code()));
    }
    let t = Tableau::new(spec, rows)?;
    MarginallyLarge::new(spec, t).map_err(|e| Error::Internal { reason: format!("image of {c}: {e}") })
}

/// The tensor realization as a crystal.
#[derive(Debug, Clone, Copy)]
pub struct CliffModel<'a> {
    spec: &'a TypeSpec,
}

impl<'a> CliffModel<'a> {
    pub fn new(spec: &'a TypeSpec) -> Result<Self> {
        classical(spec)?;
        Ok(CliffModel { spec })
    }
}

impl Crystal for CliffModel<'_> {
    type Element = CliffElement;

    fn rank(&self) -> usize {
        self.spec.rank()
    }

    fn apply(&self, i: usize, x: &CliffElement, dir: Direction) -> Result<Option<CliffElement>> {
        cliff_step(self.spec, i, x, dir)
    }

    fn weight(&self, x: &CliffElement) -> Result<Weight> {
        cliff_weight(self.spec, x)
    }

    fn highest(&self) -> Result<CliffElement> {
        cliff_zero(self.spec)
    }
}
