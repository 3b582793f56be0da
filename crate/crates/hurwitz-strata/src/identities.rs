//! Symbolic and exact-evaluation verification of the combinatorial
//! identities behind the node-class degree: the ordered split-sum identity
//! in the variables t_i, its sum-dependence property, Abel set polynomials and
//! their binomial-type convolution, the classical Abel identity, and the
//! x^2 y^2 coefficient identity.

use num::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{binomial, int, ipow, rat, rat_pow, Rat};
use crate::poly::SparsePoly;

pub const MAX_SYMBOLIC_SPLIT_M: u64 = 7;
pub const MAX_SYMBOLIC_ABEL_M: u64 = 6;
pub const MAX_CLASSICAL_ABEL_N: u64 = 12;

fn check_nonzero(t: &[Rat]) -> Result<()> {
    if t.iter().any(|v| v.is_zero()) {
        return Err(Error::domain("zero value in point assignment"));
    }
    Ok(())
}

fn subset_sum(t: &[Rat], mask: u32) -> Rat {
    let mut sum = Rat::zero();
    for (i, v) in t.iter().enumerate() {
        if mask & (1 << i) != 0 {
            sum += v;
        }
    }
    sum
}

/// Left side of the split-sum identity: sum over ordered partitions of
/// {1..m} into two nonempty subsets I, J of t_I^{|I|-2} t_J^{|J|-2}.
pub fn kazarian_lhs(t: &[Rat]) -> Result<Rat> {
    let m = t.len();
    if m < 2 {
        return Err(Error::domain("split sum needs at least 2 variables"));
    }
    check_nonzero(t)?;
    let full: u32 = (1 << m) - 1;
    let mut total = Rat::zero();
    for mask in 1..full {
        let i_size = mask.count_ones() as i64;
        let j_size = m as i64 - i_size;
        let ti = subset_sum(t, mask);
        let tj = subset_sum(t, full & !mask);
        if (ti.is_zero() && i_size < 2) || (tj.is_zero() && j_size < 2) {
            return Err(Error::domain("zero subset sum at negative exponent"));
        }
        total += rat_pow(&ti, i_size - 2)? * rat_pow(&tj, j_size - 2)?;
    }
    Ok(total)
}

/// Right side of the split-sum identity:
/// t_M^{m-4} (2 t_M sum(1/t_i) - (m-2)(m-3)).
pub fn kazarian_rhs(t: &[Rat]) -> Result<Rat> {
    let m = t.len() as i64;
    if m < 2 {
        return Err(Error::domain("split sum needs at least 2 variables"));
    }
    check_nonzero(t)?;
    let t_m: Rat = t.iter().sum();
    if t_m.is_zero() && m < 4 {
        return Err(Error::domain("zero total at negative exponent"));
    }
    let inv_sum: Rat = t.iter().map(|v| v.recip()).sum();
    Ok(rat_pow(&t_m, m - 4)? * (rat(2) * &t_m * inv_sum - rat((m - 2) * (m - 3))))
}

/// Product of all variables as a polynomial in m variables (nvars may
/// exceed m; extra slots stay unused).
fn product_of_vars(m: usize, nvars: usize) -> SparsePoly {
    let mut acc = SparsePoly::one(nvars);
    for i in 0..m {
        acc = &acc * &SparsePoly::var(i, nvars);
    }
    acc
}

fn subset_sum_poly(mask: u32, m: usize, nvars: usize) -> SparsePoly {
    let mut acc = SparsePoly::zero(nvars);
    for i in 0..m {
        if mask & (1 << i) != 0 {
            acc = &acc + &SparsePoly::var(i, nvars);
        }
    }
    acc
}

/// Symbolic verification of the split-sum identity with denominators
/// cleared: both sides are multiplied by prod(t_i), and additionally by
/// t_M^{4-m} when m < 4, then expanded and compared exactly.
pub fn kazarian_cleared_check(m: u64) -> Result<bool> {
    if !(2..=MAX_SYMBOLIC_SPLIT_M).contains(&m) {
        return Err(Error::resource(format!(
            "symbolic expansion supported for 2 <= m <= {MAX_SYMBOLIC_SPLIT_M}, got {m}"
        )));
    }
    let m = m as usize;
    let full: u32 = (1 << m) - 1;
    // cleared split term: for |I| = 1 the pole cancels against prod(t_i)
    let cleared_side = |mask: u32| -> SparsePoly {
        let size = mask.count_ones();
        if size == 1 {
            SparsePoly::one(m)
        } else {
            let mut acc = subset_sum_poly(mask, m, m).pow(size - 2);
            for i in 0..m {
                if mask & (1 << i) != 0 {
                    acc = &acc * &SparsePoly::var(i, m);
                }
            }
            acc
        }
    };
    let mut lhs = SparsePoly::zero(m);
    for mask in 1..full {
        lhs = &lhs + &(&cleared_side(mask) * &cleared_side(full & !mask));
    }
    let t_m = subset_sum_poly(full, m, m);
    // 2 t_M sum_i prod_{j != i} t_j  -  (m-2)(m-3) prod t
    let mut inv_sum_cleared = SparsePoly::zero(m);
    for i in 0..m {
        let mut prod = SparsePoly::one(m);
        for j in 0..m {
            if j != i {
                prod = &prod * &SparsePoly::var(j, m);
            }
        }
        inv_sum_cleared = &inv_sum_cleared + &prod;
    }
    let c = ((m as i64) - 2) * ((m as i64) - 3);
    let bracket = &(&t_m * &inv_sum_cleared).scale(&rat(2))
        - &product_of_vars(m, m).scale(&rat(c));
    let (lhs, rhs) = if m < 4 {
        (&lhs * &t_m.pow((4 - m) as u32), bracket)
    } else {
        (lhs, &t_m.pow((m - 4) as u32) * &bracket)
    };
    Ok(lhs == rhs)
}

/// The polynomial part of the split sum: lhs minus twice the pole series,
/// 2 t_M^{m-3} sum(1/t_i). Depends only on the sum of the variables.
pub fn l42_difference(t: &[Rat]) -> Result<Rat> {
    let m = t.len() as i64;
    let t_m: Rat = t.iter().sum();
    if t_m.is_zero() && m < 3 {
        return Err(Error::domain("zero total at negative exponent"));
    }
    let inv_sum: Rat = t.iter().map(|v| v.recip()).sum();
    Ok(kazarian_lhs(t)? - rat(2) * rat_pow(&t_m, m - 3)? * inv_sum)
}

/// Checks that the difference expression takes equal values on each pair of
/// assignments with equal length and equal total.
pub fn l42_sum_dependence_check(samples: &[(Vec<Rat>, Vec<Rat>)]) -> Result<bool> {
    for (a, b) in samples {
        if a.len() != b.len() {
            return Err(Error::domain("pair members have different lengths"));
        }
        let sum_a: Rat = a.iter().sum();
        let sum_b: Rat = b.iter().sum();
        if sum_a != sum_b {
            return Err(Error::domain("pair members have different totals"));
        }
        check_nonzero(a)?;
        check_nonzero(b)?;
        if l42_difference(a)? != l42_difference(b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Abel set polynomial value x (x + t_sum)^{size-1}, with the empty-set
/// convention P = 1 (which needs x != 0).
pub fn abel_set_poly(subset_size: u64, t_sum: &Rat, x: &Rat) -> Result<Rat> {
    if subset_size == 0 {
        if x.is_zero() {
            return Err(Error::domain("empty-set Abel polynomial needs x != 0"));
        }
        return Ok(Rat::one());
    }
    Ok(x * rat_pow(&(x + t_sum), subset_size as i64 - 1)?)
}

/// Evaluation form of the set-indexed binomial identity:
/// sum over all ordered splits I ⊔ J = M (empty sides allowed) of
/// (P_I(x)/x)(P_J(y)/y) = P_M(x+y)/(xy).
pub fn abel_set_binomial_check(t: &[Rat], x: &Rat, y: &Rat) -> Result<bool> {
    let xy_sum = x + y;
    if x.is_zero() || y.is_zero() || xy_sum.is_zero() {
        return Err(Error::domain("x, y, x+y must all be nonzero"));
    }
    let m = t.len();
    let full: u32 = if m == 0 { 0 } else { (1 << m) - 1 };
    let mut lhs = Rat::zero();
    for mask in 0..=full {
        let i_size = mask.count_ones() as i64;
        let j_size = m as i64 - i_size;
        let ti = subset_sum(t, mask);
        let tj = subset_sum(t, full & !mask);
        lhs += rat_pow(&(x + ti), i_size - 1)? * rat_pow(&(y + tj), j_size - 1)?;
    }
    let t_m = subset_sum(t, full);
    let rhs = xy_sum.clone() * rat_pow(&(xy_sum + t_m), m as i64 - 1)? / (x * y);
    Ok(lhs == rhs)
}

/// Symbolic form of the set-indexed binomial identity, cleared of the
/// 1/x and 1/y poles: variables t_1..t_m, x, y.
pub fn abel_set_binomial_symbolic(m: u64) -> Result<bool> {
    if m > MAX_SYMBOLIC_ABEL_M {
        return Err(Error::resource(format!(
            "symbolic expansion supported for m <= {MAX_SYMBOLIC_ABEL_M}, got {m}"
        )));
    }
    let m = m as usize;
    let nvars = m + 2;
    let x = SparsePoly::var(m, nvars);
    let y = SparsePoly::var(m + 1, nvars);
    let full: u32 = if m == 0 { 0 } else { (1 << m) - 1 };
    let t_m = subset_sum_poly(full, m, nvars);
    // one side of a split term times xy clears both poles: a nonempty side
    // contributes the full set polynomial, an empty side contributes 1
    let side = |mask: u32, v: &SparsePoly| -> SparsePoly {
        let size = mask.count_ones();
        if size == 0 {
            SparsePoly::one(nvars)
        } else {
            let shifted = v + &subset_sum_poly(mask, m, nvars);
            v * &shifted.pow(size - 1)
        }
    };
    let mut lhs = SparsePoly::zero(nvars);
    for mask in 0..=full {
        lhs = &lhs + &(&side(mask, &x) * &side(full & !mask, &y));
    }
    let rhs = if m == 0 {
        SparsePoly::one(nvars)
    } else {
        let xy = &x + &y;
        &xy * &(&xy + &t_m).pow(m as u32 - 1)
    };
    Ok(lhs == rhs)
}

/// Classical Abel binomial identity, expanded symbolically in x and y:
/// (x+y)(x+y+n)^{n-1} = sum_{i+j=n} C(n,i) x(x+i)^{i-1} y(y+j)^{j-1},
/// with the i = 0 and j = 0 factors equal to 1.
pub fn abel_classical_check(n: u64) -> Result<bool> {
    if !(1..=MAX_CLASSICAL_ABEL_N).contains(&n) {
        return Err(Error::resource(format!(
            "classical identity checked for 1 <= n <= {MAX_CLASSICAL_ABEL_N}, got {n}"
        )));
    }
    let x = SparsePoly::var(0, 2);
    let y = SparsePoly::var(1, 2);
    let q = |v: &SparsePoly, k: u64| -> SparsePoly {
        if k == 0 {
            SparsePoly::one(2)
        } else {
            v * &(v + &SparsePoly::constant(2, rat(k as i64))).pow(k as u32 - 1)
        }
    };
    let xy = &x + &y;
    let lhs = &xy * &(&xy + &SparsePoly::constant(2, rat(n as i64))).pow(n as u32 - 1);
    let mut rhs = SparsePoly::zero(2);
    for i in 0..=n {
        let coeff = Rat::from_integer(binomial(n as i64, i as i64)?);
        rhs = &rhs + &(&q(&x, i) * &q(&y, n - i)).scale(&coeff);
    }
    Ok(lhs == rhs)
}

/// Both sides of the x^2 y^2 coefficient identity, computed independently:
/// sum_{i+j=m, i,j >= 1} C(m,i) i^{i-2} j^{j-2}  vs  m^{m-4}(m^2 + 5m - 6).
pub fn split_coefficient_identity(m: u64) -> Result<(Rat, Rat)> {
    if m < 2 {
        return Err(Error::domain(format!("coefficient identity needs m >= 2, got {m}")));
    }
    let mi = m as i64;
    let mut lhs = Rat::zero();
    for i in 1..m {
        let j = m - i;
        lhs += Rat::from_integer(binomial(mi, i as i64)?)
            * ipow(&int(i as i64), i as i64 - 2)?
            * ipow(&int(j as i64), j as i64 - 2)?;
    }
    let rhs = ipow(&int(mi), mi - 4)? * rat(mi * mi + 5 * mi - 6);
    Ok((lhs, rhs))
}

/// A nonzero rational with small numerator and denominator.
pub fn random_nonzero_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let num: i64 = rng.gen_range(-9..=9);
        if num == 0 {
            continue;
        }
        let den: i64 = rng.gen_range(1..=9);
        return Rat::new(int(num), int(den));
    }
}

/// An assignment of m nonzero rationals with nonzero total.
pub fn random_assignment(rng: &mut ChaCha8Rng, m: usize) -> Vec<Rat> {
    loop {
        let t: Vec<Rat> = (0..m).map(|_| random_nonzero_rat(rng)).collect();
        let total: Rat = t.iter().sum();
        if !total.is_zero() && proper_subset_sums_admissible(&t) {
            return t;
        }
    }
}

/// Rejects assignments where some subset sum vanishes at a pole of the
/// split sum (a singleton complement of a zero-sum subset).
fn proper_subset_sums_admissible(t: &[Rat]) -> bool {
    let m = t.len();
    let full: u32 = (1 << m) - 1;
    for mask in 1..full {
        if mask.count_ones() == 1 && subset_sum(t, mask).is_zero() {
            return false;
        }
    }
    true
}
