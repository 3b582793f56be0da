//! Degrees of the basic cohomology classes over genus-0 moduli spaces:
//! psi-class integrals, the Segre-weighted direct integral, the closed
//! forms for pushforwards of zeta and psi powers, and the node class
//! delta_{0,0} via both its closed form and its subdiagram split sum.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, int, ipow, multinomial, Int, Rat};
use crate::partition::Partition;

/// Integral of psi_1^{l_1} ... psi_m^{l_m} over the genus-0 moduli space
/// with m marked points: the multinomial coefficient (m-3 choose l).
/// Requires m >= 3 and sum(l) = m - 3.
pub fn psi_integral(exponents: &[u64]) -> Result<Int> {
    let m = exponents.len();
    if m < 3 {
        return Err(Error::domain(format!(
            "psi integral needs at least 3 marked points, got {m}"
        )));
    }
    let dim = (m - 3) as u64;
    let total: u64 = exponents.iter().sum();
    if total != dim {
        return Err(Error::domain(format!(
            "psi exponents sum to {total}, moduli dimension is {dim}"
        )));
    }
    multinomial(dim, exponents)
}

/// Total variant for series expansions: zero instead of an error when the
/// exponents miss the moduli dimension (still requires m >= 3).
pub fn psi_integral_or_zero(exponents: &[u64]) -> Result<Int> {
    let m = exponents.len();
    if m < 3 {
        return Err(Error::domain(format!(
            "psi integral needs at least 3 marked points, got {m}"
        )));
    }
    let total: u64 = exponents.iter().sum();
    if total != (m - 3) as u64 {
        return Ok(Int::zero());
    }
    psi_integral(exponents)
}

fn compositions(total: u64, slots: usize) -> Vec<Vec<u64>> {
    fn rec(total: u64, slots: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for v in 0..=total {
            prefix.push(v);
            rec(total - v, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, slots, &mut Vec::new(), &mut out);
    out
}

/// Direct evaluation of the Segre-weighted integral over the (m+1)-pointed
/// moduli space: prod(k_i^{k_i}/k_i!) times the sum over exponent vectors
/// (l_1..l_m, k) with sum(l) = m - 2 - k of the psi integral weighted by
/// prod k_i^{l_i}. Zero when k > m - 2. Requires m >= 2.
pub fn segre_degree(kappa: &Partition, numerator_psi_power: u64) -> Result<Rat> {
    let m = kappa.len();
    if m < 2 {
        return Err(Error::domain(format!(
            "direct Segre integral needs at least 2 poles, got {m}"
        )));
    }
    let k = numerator_psi_power;
    if k > (m - 2) as u64 {
        return Ok(Rat::zero());
    }
    let remaining = (m - 2) as u64 - k;
    let mut sum = Int::zero();
    for l in compositions(remaining, m) {
        let mut exps = l.clone();
        exps.push(k);
        let integral = psi_integral(&exps)?;
        let mut weighted = integral;
        for (i, &li) in l.iter().enumerate() {
            weighted *= num::pow::pow(int(kappa.parts()[i] as i64), li as usize);
        }
        sum += weighted;
    }
    Ok(Rat::from_integer(sum) * kappa.prod_weight())
}

/// Closed form for the pushforward of any power of zeta:
/// n^{m-2} prod(k_i^{k_i}/k_i!). Independent of the power.
pub fn deg_pzeta(kappa: &Partition) -> Rat {
    let n = kappa.size() as i64;
    let m = kappa.len() as i64;
    ipow(&int(n), m - 2).expect("n >= 1") * kappa.prod_weight()
}

/// Closed form for the pushforward of psi^k:
/// C(m-2, k) n^{m-2-k} prod(k_i^{k_i}/k_i!). The binomial is taken in the
/// falling-factorial sense so the formula stays a polynomial identity in m;
/// for m >= 2 and k > m - 2 it vanishes as expected.
pub fn deg_ppsi(kappa: &Partition, k: u64) -> Rat {
    let n = kappa.size() as i64;
    let m = kappa.len() as i64;
    let mut coeff = Rat::one();
    for i in 0..k as i64 {
        coeff *= Rat::from_integer(int(m - 2 - i));
    }
    coeff /= Rat::from_integer(factorial(k as i64).expect("k >= 0"));
    coeff * ipow(&int(n), m - 2 - k as i64).expect("n >= 1") * kappa.prod_weight()
}

/// Closed form for the degree of delta_{0,0}:
/// (n sum(1/k_i) - (m-2)(m-3)/2) n^{m-4} prod(k_i^{k_i}/k_i!).
pub fn delta00_closed(kappa: &Partition) -> Rat {
    let n = kappa.size() as i64;
    let m = kappa.len() as i64;
    let inv_sum: Rat = kappa
        .parts()
        .iter()
        .map(|&k| Rat::new(Int::one(), int(k as i64)))
        .sum();
    let bracket = Rat::from_integer(int(n)) * inv_sum
        - Rat::new(int((m - 2) * (m - 3)), int(2));
    bracket * ipow(&int(n), m - 4).expect("n >= 1") * kappa.prod_weight()
}

/// Degree of delta_{0,0} as the sum over ordered proper subdiagram splits,
/// each diagram pair contributing once per orientation with its set-split
/// multiplicity. A single pole has no proper splits and the sum is zero,
/// matching the vanishing closed form.
pub fn delta00_split_sum(kappa: &Partition) -> Result<Rat> {
    if kappa.is_empty() {
        return Err(Error::domain("split sum needs a nonempty profile"));
    }
    let mut sum = Rat::zero();
    for split in kappa.ordered_splits(true) {
        let side = |p: &Partition| -> Rat {
            ipow(&int(p.size() as i64), p.len() as i64 - 2).expect("nonempty side")
        };
        sum += side(&split.left) * side(&split.right) * Rat::from_integer(split.multiplicity);
    }
    Ok(sum * Rat::new(Int::one(), int(2)) * kappa.prod_weight())
}
