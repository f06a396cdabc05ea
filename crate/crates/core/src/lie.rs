//! Families, alphabets, letter crystals and Cartan data.
//!
//! Every family is described by its letter crystal: the lowering arrows
//! between the letters of the alphabet. Weights, `ε_i`/`φ_i` of letters and
//! the Cartan matrix are all derived from those arrows.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    /// The family `D_{n+1}`: tableaux have `n` rows and the rank is `n + 1`.
    D,
    G,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::A, Family::B, Family::C, Family::D, Family::G];

    pub fn tag(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G => "G",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.tag() == tag)
    }

    /// Whether letter `0` is part of the alphabet.
    pub fn has_zero(self) -> bool {
        matches!(self, Family::B | Family::G)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A box entry: `i` for the unbarred letter, `-i` for `ī`, `0` for the zero
/// letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub const ZERO: Letter = Letter(0);

    pub const fn new(code: i32) -> Letter {
        Letter(code)
    }

    pub const fn unbarred(i: usize) -> Letter {
        Letter(i as i32)
    }

    pub const fn barred(i: usize) -> Letter {
        Letter(-(i as i32))
    }

    pub const fn code(self) -> i32 {
        self.0
    }

    pub const fn is_barred(self) -> bool {
        self.0 < 0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Raise,
    Lower,
}

/// Integer weight, coordinate `i` holding the value on `h_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Weight {
        Weight(coords)
    }

    pub fn zero(len: usize) -> Weight {
        Weight(vec![0; len])
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }
}

impl From<Vec<i64>> for Weight {
    fn from(coords: Vec<i64>) -> Self {
        Weight(coords)
    }
}

impl Index<usize> for Weight {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        debug_assert_eq!(self.len(), rhs.len());
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        debug_assert_eq!(self.len(), rhs.len());
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<i64> for &Weight {
    type Output = Weight;

    fn mul(self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Complete description of one family at one size.
///
/// Indices `i` in the public API are 1-based, as in `I = {1, …, rank}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeSpec {
    family: Family,
    n: usize,
    rank: usize,
    alphabet: Vec<Letter>,
    /// Order rank under `≺`, parallel to `alphabet`.
    order: Vec<usize>,
    /// `slot[code + offset]` is the alphabet position of a letter code.
    slot: Vec<Option<usize>>,
    offset: i32,
    lower: Vec<Vec<Option<usize>>>,
    raise: Vec<Vec<Option<usize>>>,
    eps: Vec<Vec<u8>>,
    phi: Vec<Vec<u8>>,
    weights: Vec<Weight>,
    /// `cartan[i][j] = ⟨h_i, α_j⟩`.
    cartan: Vec<Vec<i64>>,
    roots: Vec<Weight>,
}

impl TypeSpec {
    pub fn new(family: Family, n: usize) -> Result<TypeSpec> {
        if n == 0 {
            return Err(Error::UnsupportedType { family, n, reason: "n must be at least 1" });
        }
        if family == Family::G && n != 2 {
            return Err(Error::UnsupportedType { family, n, reason: "G only exists with n = 2" });
        }
        let rank = if family == Family::D { n + 1 } else { n };
        let alphabet = alphabet(family, n);
        let offset = (n + 1) as i32;
        let mut slot = vec![None; 2 * (n + 1) + 1];
        for (pos, x) in alphabet.iter().enumerate() {
            slot[(x.code() + offset) as usize] = Some(pos);
        }
        let mut order: Vec<usize> = (0..alphabet.len()).collect();
        if family == Family::D {
            // n+1 and its bar sit on the same level
            for (pos, x) in alphabet.iter().enumerate() {
                if x.code() < 0 && x.code().unsigned_abs() as usize <= n {
                    order[pos] -= 1;
                }
            }
            order[n + 1] = n;
        }

        let size = alphabet.len();
        let mut lower = vec![vec![None; size]; rank];
        let mut raise = vec![vec![None; size]; rank];
        for (i, x, y) in arrows(family, n) {
            let pos = |l: Letter| slot[(l.code() + offset) as usize].expect("arrow letter in alphabet");
            let (px, py) = (pos(x), pos(y));
            debug_assert!(lower[i - 1][px].is_none() && raise[i - 1][py].is_none());
            lower[i - 1][px] = Some(py);
            raise[i - 1][py] = Some(px);
        }

        let mut eps = vec![vec![0u8; size]; rank];
        let mut phi = vec![vec![0u8; size]; rank];
        for i in 0..rank {
            for x in 0..size {
                let (mut up, mut cur) = (0u8, x);
                while let Some(prev) = raise[i][cur] {
                    up += 1;
                    cur = prev;
                }
                let (mut down, mut cur) = (0u8, x);
                while let Some(next) = lower[i][cur] {
                    down += 1;
                    cur = next;
                }
                eps[i][x] = up;
                phi[i][x] = down;
            }
        }
        let weights: Vec<Weight> = (0..size)
            .map(|x| Weight((0..rank).map(|i| i64::from(phi[i][x]) - i64::from(eps[i][x])).collect()))
            .collect();

        // α_j = wt(x) - wt(f_j x), identical for every arrow of colour j
        let mut roots: Vec<Option<Weight>> = vec![None; rank];
        for j in 0..rank {
            for x in 0..size {
                if let Some(y) = lower[j][x] {
                    let alpha = &weights[x] - &weights[y];
                    match &roots[j] {
                        Some(prev) if *prev != alpha => {
                            return Err(Error::Internal {
                                reason: format!("inconsistent simple root {} for {family}{n}", j + 1),
                            })
                        }
                        _ => roots[j] = Some(alpha),
                    }
                }
            }
        }
        let roots: Vec<Weight> = roots
            .into_iter()
            .map(|r| r.ok_or(Error::Internal { reason: format!("colour without arrows in {family}{n}") }))
            .collect::<Result<_>>()?;
        let cartan: Vec<Vec<i64>> = (0..rank).map(|i| (0..rank).map(|j| roots[j][i]).collect()).collect();
        for (i, row) in cartan.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                let ok = if i == j { a == 2 } else { a <= 0 && (a == 0) == (cartan[j][i] == 0) };
                if !ok {
                    return Err(Error::Internal { reason: format!("derived Cartan matrix of {family}{n} is not generalized Cartan") });
                }
            }
        }

        Ok(TypeSpec { family, n, rank, alphabet, order, slot, offset, lower, raise, eps, phi, weights, cartan, roots })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of tableau rows.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Size of the index set `I`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Letters in `≺` order.
    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn indices(&self) -> core::ops::RangeInclusive<usize> {
        1..=self.rank
    }

    /// `⟨h_i, α_j⟩`, 1-based.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// The simple root `α_i` as a weight; equals column `i` of the Cartan matrix.
    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.roots[i - 1]
    }

    pub fn contains(&self, x: Letter) -> bool {
        self.position(x).is_some()
    }

    pub(crate) fn position(&self, x: Letter) -> Option<usize> {
        let k = x.code() + self.offset;
        if k < 0 {
            return None;
        }
        self.slot.get(k as usize).copied().flatten()
    }

    pub(crate) fn pos(&self, x: Letter) -> Result<usize> {
        self.position(x).ok_or(Error::IllegalLetter { letter: x, family: self.family, n: self.n })
    }

    pub fn check_letter(&self, x: Letter) -> Result<()> {
        self.pos(x).map(|_| ())
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank })
        } else {
            Ok(())
        }
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank {
            Err(Error::WeightLength { expected: self.rank, found: w.len() })
        } else {
            Ok(())
        }
    }

    /// Position of `x` under `≺`. Equal ranks only occur for `n+1` and its
    /// bar in family D.
    pub fn order_rank(&self, x: Letter) -> Result<usize> {
        Ok(self.order[self.pos(x)?])
    }

    pub(crate) fn order_unchecked(&self, x: Letter) -> usize {
        self.order[self.position(x).expect("legal letter")]
    }

    pub fn letter_step(&self, i: usize, x: Letter, dir: Direction) -> Result<Option<Letter>> {
        self.check_index(i)?;
        let p = self.pos(x)?;
        Ok(self.step_unchecked(i, p, dir).map(|q| self.alphabet[q]))
    }

    pub(crate) fn step_unchecked(&self, i: usize, pos: usize, dir: Direction) -> Option<usize> {
        match dir {
            Direction::Lower => self.lower[i - 1][pos],
            Direction::Raise => self.raise[i - 1][pos],
        }
    }

    /// `(ε_i(x), φ_i(x))` in the letter crystal.
    pub fn letter_eps_phi(&self, i: usize, x: Letter) -> Result<(u8, u8)> {
        self.check_index(i)?;
        let p = self.pos(x)?;
        Ok((self.eps[i - 1][p], self.phi[i - 1][p]))
    }

    pub(crate) fn eps_phi_unchecked(&self, i: usize, pos: usize) -> (u8, u8) {
        (self.eps[i - 1][pos], self.phi[i - 1][pos])
    }

    pub fn letter_weight(&self, x: Letter) -> Result<&Weight> {
        Ok(&self.weights[self.pos(x)?])
    }

    pub(crate) fn weight_unchecked(&self, x: Letter) -> &Weight {
        &self.weights[self.position(x).expect("legal letter")]
    }

    /// Membership in the restricted dominant cone.
    pub fn is_hat_dominant(&self, lambda: &Weight) -> Result<bool> {
        Ok(self.hat_dominance_violation(lambda)?.is_none())
    }

    pub(crate) fn hat_dominance_violation(&self, lambda: &Weight) -> Result<Option<alloc::string::String>> {
        self.check_weight(lambda)?;
        if let Some(i) = lambda.as_slice().iter().position(|&c| c < 0) {
            return Ok(Some(format!("coordinate {} is negative", i + 1)));
        }
        let n = self.n;
        match self.family {
            Family::B if lambda[n - 1] % 2 != 0 => Ok(Some(format!("coordinate {n} must be even"))),
            Family::D if lambda[n - 1] != lambda[n] => {
                Ok(Some(format!("coordinates {n} and {} must be equal", n + 1)))
            }
            _ => Ok(None),
        }
    }
}

fn alphabet(family: Family, n: usize) -> Vec<Letter> {
    let unbarred = (1..=n).map(Letter::unbarred);
    let barred = (1..=n).rev().map(Letter::barred);
    match family {
        Family::A => (1..=n + 1).map(Letter::unbarred).collect(),
        Family::B => unbarred.chain([Letter::ZERO]).chain(barred).collect(),
        Family::C => unbarred.chain(barred).collect(),
        Family::D => unbarred
            .chain([Letter::unbarred(n + 1), Letter::barred(n + 1)])
            .chain(barred)
            .collect(),
        Family::G => [1, 2, 3, 0, -3, -2, -1].into_iter().map(Letter::new).collect(),
    }
}

/// Lowering arrows `(i, x, f_i x)` of the letter crystal.
fn arrows(family: Family, n: usize) -> Vec<(usize, Letter, Letter)> {
    let (u, b) = (Letter::unbarred, Letter::barred);
    let mut out = Vec::new();
    match family {
        Family::A => {
            for i in 1..=n {
                out.push((i, u(i), u(i + 1)));
            }
        }
        Family::B | Family::C | Family::D => {
            for i in 1..n {
                out.push((i, u(i), u(i + 1)));
                out.push((i, b(i + 1), b(i)));
            }
            match family {
                Family::B => {
                    out.push((n, u(n), Letter::ZERO));
                    out.push((n, Letter::ZERO, b(n)));
                }
                Family::C => out.push((n, u(n), b(n))),
                _ => {
                    out.push((n, u(n), u(n + 1)));
                    out.push((n, b(n + 1), b(n)));
                    out.push((n + 1, u(n), b(n + 1)));
                    out.push((n + 1, u(n + 1), b(n)));
                }
            }
        }
        Family::G => {
            let z = Letter::ZERO;
            out.extend([
                (1, u(1), u(2)),
                (2, u(2), u(3)),
                (1, u(3), z),
                (1, z, b(3)),
                (2, b(3), b(2)),
                (1, b(2), b(1)),
            ]);
        }
    }
    out
}
