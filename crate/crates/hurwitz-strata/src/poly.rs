//! Exact sparse multivariate polynomials over the rationals, used only for
//! symbolic identity verification. Terms are kept in a BTreeMap keyed by the
//! exponent vector, so equality and iteration order are canonical.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num::Zero;

use crate::exact::{Rat, rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, value: Rat) -> Self {
        let mut p = SparsePoly::zero(nvars);
        if !value.is_zero() {
            p.terms.insert(vec![0; nvars], value);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        SparsePoly::constant(nvars, rat(1))
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        assert!(index < nvars);
        let mut exps = vec![0u32; nvars];
        exps[index] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, rat(1));
        SparsePoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, exps: Vec<u32>, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rat) -> SparsePoly {
        if factor.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    pub fn pow(&self, exponent: u32) -> SparsePoly {
        let mut acc = SparsePoly::one(self.nvars);
        for _ in 0..exponent {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut total = Rat::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            total += term;
        }
        total
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self + &rhs.scale(&rat(-1))
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = SparsePoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert(exps, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_from;

    #[test]
    fn basic_arithmetic() {
        let x = SparsePoly::var(0, 2);
        let y = SparsePoly::var(1, 2);
        let sum = &x + &y;
        let sq = &sum * &sum;
        // (x+y)^2 = x^2 + 2xy + y^2
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.eval(&[rat(2), rat(3)]), rat(25));
        assert_eq!(sum.pow(2), sq);
        assert!((&sq - &sq).is_zero());
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = SparsePoly::var(0, 1);
        let a = &x + &SparsePoly::one(1);
        let b = &x - &SparsePoly::one(1);
        let diff = &(&a * &b) - &x.pow(2);
        // (x+1)(x-1) - x^2 = -1
        assert_eq!(diff, SparsePoly::constant(1, rat(-1)));
    }

    #[test]
    fn eval_with_rationals() {
        let x = SparsePoly::var(0, 1);
        let p = &x.pow(3) + &x.scale(&rat_from(1, 2));
        assert_eq!(p.eval(&[rat_from(1, 2)]), rat_from(3, 8));
    }
}
