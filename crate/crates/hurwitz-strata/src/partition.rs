//! Partitions (Young diagrams) and their diagram operations: automorphism
//! orders, the diagram sum, ordered subdiagram splits with set-split
//! multiplicities, and conjugacy-class sizes in the symmetric group.

use std::fmt;

use num::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{factorial, int, ipow, Int, Rat};

/// A partition stored canonically: parts positive, non-increasing.
/// The empty partition is allowed internally (it shows up as one side of
/// an improper split) but is rejected by `parse`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn one_part(n: u64) -> Self {
        Partition { parts: vec![n] }
    }

    /// Parses either a comma list ("3,1,1") or exponent form ("1^2 3^1").
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::parse("empty partition"));
        }
        let mut parts = Vec::new();
        if text.contains('^') {
            for token in text.split_whitespace() {
                let (value, count) = token
                    .split_once('^')
                    .ok_or_else(|| Error::parse(format!("bad exponent token '{token}'")))?;
                let value: u64 = value
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(format!("bad part value '{value}'")))?;
                let count: u64 = count
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(format!("bad multiplicity '{count}'")))?;
                if value == 0 {
                    return Err(Error::parse("zero part in partition"));
                }
                parts.extend(std::iter::repeat(value).take(count as usize));
            }
        } else {
            for token in text.split(',') {
                let value: u64 = token
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(format!("bad part value '{token}'")))?;
                if value == 0 {
                    return Err(Error::parse("zero part in partition"));
                }
                parts.push(value);
            }
        }
        if parts.is_empty() {
            return Err(Error::parse("empty partition"));
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Sum of parts (the n being partitioned).
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Distinct part values with multiplicities, largest value first.
    pub fn multiplicities(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// |Aut|: product of factorials of part multiplicities.
    pub fn aut_order(&self) -> Int {
        self.multiplicities()
            .iter()
            .map(|&(_, c)| factorial(c as i64).expect("nonnegative"))
            .product()
    }

    /// The centralizer order z = (prod of parts) * (prod of multiplicities!).
    pub fn z_order(&self) -> Int {
        let parts_prod: Int = self.parts.iter().map(|&p| int(p as i64)).product();
        parts_prod * self.aut_order()
    }

    /// Size of the conjugacy class of this cycle type in S_n, n = size().
    pub fn class_size(&self) -> Int {
        factorial(self.size() as i64).expect("nonnegative") / self.z_order()
    }

    /// prod over parts of k^k / k!.
    pub fn prod_weight(&self) -> Rat {
        let mut acc = Rat::one();
        for &k in &self.parts {
            let num = ipow(&int(k as i64), k as i64).expect("positive base");
            acc *= num / Rat::from_integer(factorial(k as i64).expect("nonnegative"));
        }
        acc
    }

    /// Diagram sum: union of the part multisets.
    pub fn combine(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// All ordered pairs (mu, lambda) of subdiagrams with mu + lambda = self,
    /// each distinct diagram pair listed once per orientation, carrying the
    /// set-split multiplicity |Aut(self)| / (|Aut(mu)| |Aut(lambda)|).
    /// With `proper` both sides must be nonempty.
    pub fn ordered_splits(&self, proper: bool) -> Vec<SplitPair> {
        let mults = self.multiplicities();
        let mut out = Vec::new();
        let mut counts = vec![0u64; mults.len()];
        loop {
            let mut left_parts = Vec::new();
            let mut right_parts = Vec::new();
            for (i, &(v, c)) in mults.iter().enumerate() {
                left_parts.extend(std::iter::repeat(v).take(counts[i] as usize));
                right_parts.extend(std::iter::repeat(v).take((c - counts[i]) as usize));
            }
            let left = Partition { parts: left_parts };
            let right = Partition { parts: right_parts };
            if !(proper && (left.is_empty() || right.is_empty())) {
                let multiplicity =
                    self.aut_order() / (left.aut_order() * right.aut_order());
                out.push(SplitPair {
                    left,
                    right,
                    multiplicity,
                });
            }
            // odometer over per-value counts
            let mut i = 0;
            loop {
                if i == counts.len() {
                    return out;
                }
                if counts[i] < mults[i].1 {
                    counts[i] += 1;
                    break;
                }
                counts[i] = 0;
                i += 1;
            }
        }
    }

    /// Exponent-form text, e.g. "1^2 3^1".
    pub fn exponent_form(&self) -> String {
        self.multiplicities()
            .iter()
            .rev()
            .map(|&(v, c)| format!("{v}^{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// One ordered subdiagram decomposition of a parent partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPair {
    pub left: Partition,
    pub right: Partition,
    pub multiplicity: Int,
}

/// Number of ordered set splits I ⊔ J = {1..m} with part multisets
/// (mu, lam); requires mu + lam = tau.
pub fn split_multiplicity(tau: &Partition, mu: &Partition, lam: &Partition) -> Result<Int> {
    if &mu.combine(lam) != tau {
        return Err(Error::domain(format!(
            "({mu}) + ({lam}) does not reconstitute ({tau})"
        )));
    }
    Ok(tau.aut_order() / (mu.aut_order() * lam.aut_order()))
}

/// All partitions of n in deterministic (lexicographically decreasing) order.
pub fn enumerate_partitions(n: u64) -> Vec<Partition> {
    fn rec(remaining: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
