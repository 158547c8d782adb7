//! Row echelon forms with transform tracking.
//!
//! Over `Z` this is the Hermite normal form (positive pivots, entries above
//! each pivot reduced into `[0, pivot)`); over `Q` it is the reduced row
//! echelon form. Both are canonical for the row span, so spans can be
//! compared by comparing forms.

use num_integer::Integer;
use num_traits::{One, Signed};

use crate::coeff::{Coeff, Int, Rat};

/// The operations the echelon algorithm needs from its coefficient ring.
pub trait EchelonRing: Coeff {
    /// Euclidean size; elimination pivots on the smallest nonzero entry.
    fn size(&self) -> Int;
    /// Quotient used to clear `a` below a pivot `p`.
    fn quo(a: &Self, p: &Self) -> Self;
    /// Quotient used to reduce `a` above a pivot `p` into canonical range.
    fn reduce_quo(a: &Self, p: &Self) -> Self;
    /// Unit `u` with `u * p` the normalized pivot.
    fn normalizer(p: &Self) -> Self;
}

impl EchelonRing for Int {
    fn size(&self) -> Int {
        self.abs()
    }
    fn quo(a: &Self, p: &Self) -> Self {
        a.div_floor(p)
    }
    fn reduce_quo(a: &Self, p: &Self) -> Self {
        a.div_floor(p)
    }
    fn normalizer(p: &Self) -> Self {
        if p.is_negative() {
            -Int::one()
        } else {
            Int::one()
        }
    }
}

impl EchelonRing for Rat {
    fn size(&self) -> Int {
        Int::one()
    }
    fn quo(a: &Self, p: &Self) -> Self {
        a / p
    }
    fn reduce_quo(a: &Self, p: &Self) -> Self {
        a / p
    }
    fn normalizer(p: &Self) -> Self {
        p.recip()
    }
}

/// Echelon form of a list of rows, with each echelon row written as a
/// combination of the input rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<C> {
    pub ncols: usize,
    pub nrows_in: usize,
    /// Nonzero echelon rows, pivots strictly increasing.
    pub rows: Vec<Vec<C>>,
    pub pivots: Vec<usize>,
    /// `rows[k] = sum_j transform[k][j] * input[j]`.
    pub transform: Vec<Vec<C>>,
}

fn axpy<C: Coeff>(dst: &mut [C], a: &C, src: &[C]) {
    for (x, y) in dst.iter_mut().zip(src) {
        if !y.is_zero() {
            *x = x.clone() + a.clone() * y.clone();
        }
    }
}

impl<C: EchelonRing> Echelon<C> {
    pub fn new(input: &[Vec<C>], ncols: usize) -> Self {
        let m = input.len();
        let mut a: Vec<Vec<C>> = input.to_vec();
        let mut t: Vec<Vec<C>> = (0..m)
            .map(|i| (0..m).map(|j| if i == j { C::one() } else { C::zero() }).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut k = 0;
        for c in 0..ncols {
            if k == m {
                break;
            }
            loop {
                let best = (k..m).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| a[i][c].size());
                let Some(best) = best else { break };
                a.swap(k, best);
                t.swap(k, best);
                let mut done = true;
                for i in k + 1..m {
                    if a[i][c].is_zero() {
                        continue;
                    }
                    let q = -C::quo(&a[i][c], &a[k][c]);
                    let (top, bottom) = a.split_at_mut(i);
                    axpy(&mut bottom[0], &q, &top[k]);
                    let (ttop, tbottom) = t.split_at_mut(i);
                    axpy(&mut tbottom[0], &q, &ttop[k]);
                    if !a[i][c].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if k == m || a[k][c].is_zero() {
                continue;
            }
            let u = C::normalizer(&a[k][c]);
            if !u.is_one() {
                a[k] = a[k].iter().map(|x| x.clone() * u.clone()).collect();
                t[k] = t[k].iter().map(|x| x.clone() * u.clone()).collect();
            }
            for i in 0..k {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = -C::reduce_quo(&a[i][c], &a[k][c]);
                if q.is_zero() {
                    continue;
                }
                let (top, bottom) = a.split_at_mut(k);
                axpy(&mut top[i], &q, &bottom[0]);
                let (ttop, tbottom) = t.split_at_mut(k);
                axpy(&mut ttop[i], &q, &tbottom[0]);
            }
            pivots.push(c);
            k += 1;
        }
        a.truncate(k);
        t.truncate(k);
        Echelon { ncols, nrows_in: m, rows: a, pivots, transform: t }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Writes `v` as a combination of the input rows, if it lies in their
    /// span (over `Z`: the lattice they generate).
    pub fn solve(&self, v: &[C]) -> Option<Vec<C>> {
        assert_eq!(v.len(), self.ncols);
        let mut rest = v.to_vec();
        let mut coeffs = vec![C::zero(); self.nrows_in];
        let mut next = 0;
        for c in 0..self.ncols {
            if next < self.pivots.len() && self.pivots[next] == c {
                let p = &self.rows[next][c];
                if !rest[c].is_zero() {
                    let q = rest[c].try_div(p)?;
                    axpy(&mut rest, &-q.clone(), &self.rows[next]);
                    axpy(&mut coeffs, &q, &self.transform[next]);
                }
                next += 1;
            } else if !rest[c].is_zero() {
                return None;
            }
        }
        debug_assert!(rest.iter().all(|x| x.is_zero()));
        Some(coeffs)
    }

    pub fn contains(&self, v: &[C]) -> bool {
        self.solve(v).is_some()
    }

    /// Same row span (lattice over `Z`).
    pub fn same_span(&self, other: &Self) -> bool {
        self.ncols == other.ncols && self.pivots == other.pivots && self.rows == other.rows
    }

    /// Product of the pivots: the index of the lattice in its saturation
    /// when the rank is full. Over `Q` always `1`.
    pub fn pivot_product(&self) -> C {
        self.pivots
            .iter()
            .zip(&self.rows)
            .fold(C::one(), |acc, (&c, row)| acc * row[c].clone())
    }
}
