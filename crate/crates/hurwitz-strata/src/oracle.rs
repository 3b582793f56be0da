//! Independent ground truth for Hurwitz numbers: exact symmetric-group
//! character tables by the Murnaghan-Nakayama rule, tuple counts with
//! identity product by the Frobenius formula, and transitive counts either
//! by direct enumeration (small n) or by a connectedness sieve over orbit
//! decompositions.

use std::collections::HashMap;

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, format_rat, rat_is_integer, Int, Rat};
use crate::partition::{enumerate_partitions, Partition};

pub const DEFAULT_SIEVE_BOUND: u64 = 12;
pub const DEFAULT_DFS_BOUND: u64 = 6;

/// An ordered list of conjugacy classes of S_n, all of the same size n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTuple {
    pub n: u64,
    pub classes: Vec<Partition>,
}

impl ClassTuple {
    pub fn new(classes: Vec<Partition>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::domain("class tuple must be nonempty"));
        }
        let n = classes[0].size();
        if n == 0 {
            return Err(Error::domain("classes must partition a positive integer"));
        }
        if classes.iter().any(|c| c.size() != n) {
            return Err(Error::domain(
                "all classes must partition the same integer",
            ));
        }
        Ok(ClassTuple { n, classes })
    }

    /// Parses "3,1;2,1,1;2,1,1" into a tuple.
    pub fn parse(text: &str) -> Result<Self> {
        let classes = text
            .split(';')
            .map(Partition::parse)
            .collect::<Result<Vec<_>>>()?;
        ClassTuple::new(classes)
    }
}

/// How to count transitive tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    /// Direct enumeration of permutation tuples. Exponential; small n only.
    Dfs,
    /// Frobenius count minus tuples fixing a proper orbit, recursively.
    Sieve,
}

/// Exact irreducible character table of S_n. Rows are irreps, columns are
/// conjugacy classes, both indexed by partitions of n in the order produced
/// by `enumerate_partitions`.
pub struct CharacterTable {
    pub n: u64,
    pub labels: Vec<Partition>,
    index: HashMap<Vec<u64>, usize>,
    values: Vec<Vec<Int>>,
    class_sizes: Vec<Int>,
}

impl CharacterTable {
    pub fn new(n: u64) -> Self {
        let labels = enumerate_partitions(n);
        let index: HashMap<Vec<u64>, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, p)| (p.parts().to_vec(), i))
            .collect();
        let class_sizes: Vec<Int> = labels.iter().map(|p| p.class_size()).collect();
        let mut memo: HashMap<(Vec<u64>, Vec<u64>), Int> = HashMap::new();
        let mut values = Vec::with_capacity(labels.len());
        for irrep in &labels {
            let row: Vec<Int> = labels
                .iter()
                .map(|class| mn_character(irrep.parts(), class.parts(), &mut memo))
                .collect();
            values.push(row);
        }
        CharacterTable {
            n,
            labels,
            index,
            values,
            class_sizes,
        }
    }

    pub fn class_index(&self, p: &Partition) -> Option<usize> {
        self.index.get(p.parts()).copied()
    }

    /// Character value chi_irrep(class).
    pub fn value(&self, irrep: &Partition, class: &Partition) -> Option<&Int> {
        let i = self.class_index(irrep)?;
        let j = self.class_index(class)?;
        Some(&self.values[i][j])
    }

    pub fn dimension(&self, irrep_idx: usize) -> &Int {
        // identity class 1^n is last in enumeration order
        &self.values[irrep_idx][self.labels.len() - 1]
    }

    pub fn class_size(&self, class_idx: usize) -> &Int {
        &self.class_sizes[class_idx]
    }

    /// Row and column orthogonality, used as a self-check in tests.
    pub fn check_orthogonality(&self) -> bool {
        let n_fact = factorial(self.n as i64).expect("nonnegative");
        let k = self.labels.len();
        for a in 0..k {
            for b in a..k {
                let sum: Int = (0..k)
                    .map(|c| &self.class_sizes[c] * &self.values[a][c] * &self.values[b][c])
                    .sum();
                let expected = if a == b { n_fact.clone() } else { Int::zero() };
                if sum != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// Murnaghan-Nakayama recursion over border-strip removals, with the
/// partition encoded through its beta set (first-column hook contents).
fn mn_character(
    irrep: &[u64],
    class: &[u64],
    memo: &mut HashMap<(Vec<u64>, Vec<u64>), Int>,
) -> Int {
    if class.is_empty() {
        debug_assert!(irrep.is_empty());
        return Int::one();
    }
    let key = (irrep.to_vec(), class.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let strip = class[0];
    let rest = &class[1..];
    let len = irrep.len();
    // beta[i] = irrep[i] + (len - 1 - i), strictly decreasing
    let beta: Vec<u64> = irrep
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i) as u64)
        .collect();
    let mut total = Int::zero();
    for (pos, &b) in beta.iter().enumerate() {
        if b < strip {
            continue;
        }
        let target = b - strip;
        if beta.contains(&target) {
            continue;
        }
        // height = number of beta entries strictly between target and b
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut new_beta = beta.clone();
        new_beta[pos] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let new_irrep: Vec<u64> = new_beta
            .iter()
            .enumerate()
            .filter_map(|(i, &x)| {
                let part = x as i64 - (len - 1 - i) as i64;
                (part > 0).then_some(part as u64)
            })
            .collect();
        let sub = mn_character(&new_irrep, rest, memo);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Full oracle output for one class tuple.
#[derive(Clone, Debug, Serialize)]
pub struct OracleResult {
    pub count_all: String,
    pub count_transitive: String,
    pub h: String,
    pub genus: Option<i64>,
}

/// Shared state for oracle queries: character tables per n and a memo for
/// the transitivity sieve. Tables are built once per n and reused.
pub struct Oracle {
    sieve_bound: u64,
    dfs_bound: u64,
    tables: HashMap<u64, CharacterTable>,
    sieve_memo: HashMap<(u64, Vec<Vec<u64>>), Int>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new()
    }
}

impl Oracle {
    pub fn new() -> Self {
        Oracle::with_bounds(DEFAULT_SIEVE_BOUND, DEFAULT_DFS_BOUND)
    }

    pub fn with_bounds(sieve_bound: u64, dfs_bound: u64) -> Self {
        Oracle {
            sieve_bound,
            dfs_bound,
            tables: HashMap::new(),
            sieve_memo: HashMap::new(),
        }
    }

    pub fn character_table(&mut self, n: u64) -> Result<&CharacterTable> {
        if n == 0 || n > self.sieve_bound {
            return Err(Error::resource(format!(
                "character table for n = {n} outside 1..={}",
                self.sieve_bound
            )));
        }
        Ok(self.tables.entry(n).or_insert_with(|| CharacterTable::new(n)))
    }

    /// Frobenius count of tuples (g_1, ..., g_s), g_i in C_i, with identity
    /// product: (prod |C_i| / n!) sum over irreps of prod chi(C_i) / dim^{s-2}.
    pub fn product_count(&mut self, t: &ClassTuple) -> Result<Int> {
        let classes = t.classes.clone();
        let n = t.n;
        let table = self.character_table(n)?;
        let s = classes.len() as i64;
        let idx: Vec<usize> = classes
            .iter()
            .map(|c| {
                table
                    .class_index(c)
                    .ok_or_else(|| Error::internal(format!("class {c} missing from table")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut sum = Rat::zero();
        for i in 0..table.labels.len() {
            let mut prod = Rat::one();
            for &j in &idx {
                prod *= Rat::from_integer(table.values[i][j].clone());
            }
            if prod.is_zero() {
                continue;
            }
            let dim = table.dimension(i).clone();
            sum += prod / crate::exact::ipow(&dim, s - 2)?;
        }
        let mut prefactor = Rat::new(Int::one(), factorial(n as i64)?);
        for &j in &idx {
            prefactor *= Rat::from_integer(table.class_size(j).clone());
        }
        let count = prefactor * sum;
        if !rat_is_integer(&count) {
            return Err(Error::internal(format!(
                "non-integral Frobenius count {} for {:?}",
                format_rat(&count),
                t
            )));
        }
        if count.numer().is_negative() {
            return Err(Error::internal(format!(
                "negative Frobenius count for {t:?}"
            )));
        }
        Ok(count.to_integer())
    }

    /// Count of identity-product tuples whose generated group is transitive.
    pub fn transitive_count(&mut self, t: &ClassTuple, method: CountMethod) -> Result<Int> {
        match method {
            CountMethod::Dfs => {
                if t.n > self.dfs_bound {
                    return Err(Error::resource(format!(
                        "dfs method limited to n <= {}, got {}",
                        self.dfs_bound, t.n
                    )));
                }
                Ok(dfs_transitive_count(t))
            }
            CountMethod::Sieve => {
                if t.n > self.sieve_bound {
                    return Err(Error::resource(format!(
                        "sieve method limited to n <= {}, got {}",
                        self.sieve_bound, t.n
                    )));
                }
                self.sieve_transitive(t.n, &t.classes)
            }
        }
    }

    fn sieve_transitive(&mut self, n: u64, classes: &[Partition]) -> Result<Int> {
        let mut key: Vec<Vec<u64>> = classes.iter().map(|c| c.parts().to_vec()).collect();
        key.sort();
        if let Some(v) = self.sieve_memo.get(&(n, key.clone())) {
            return Ok(v.clone());
        }
        let tuple = ClassTuple::new(classes.to_vec())?;
        let mut count = self.product_count(&tuple)?;
        // subtract tuples whose orbit through point 1 is a proper subset O,
        // |O| = k: choose the rest of O, split every class cycle type into
        // its O part (a partition of k) and its complement part, then count
        // transitive tuples on O times identity-product tuples elsewhere.
        for k in 1..n {
            let choose = binomial(n as i64 - 1, k as i64 - 1)?;
            let mut grouped: Vec<(Partition, u64)> = Vec::new();
            for c in classes {
                match grouped.iter_mut().find(|(p, _)| p == c) {
                    Some((_, cnt)) => *cnt += 1,
                    None => grouped.push((c.clone(), 1)),
                }
            }
            // per distinct class, the admissible splits at orbit size k
            let options: Vec<Vec<(Partition, Partition)>> = grouped
                .iter()
                .map(|(p, _)| {
                    p.ordered_splits(false)
                        .into_iter()
                        .filter(|s| s.left.size() == k)
                        .map(|s| (s.left, s.right))
                        .collect()
                })
                .collect();
            if options.iter().any(|o| o.is_empty()) {
                continue;
            }
            let mut total_k = Int::zero();
            // distribute each class's multiplicity over its split options
            let mut assignment: Vec<Vec<u64>> = Vec::new();
            self.sum_over_assignments(
                k,
                n - k,
                &grouped,
                &options,
                0,
                &mut assignment,
                &mut total_k,
            )?;
            count -= choose * total_k;
        }
        if count.is_negative() {
            return Err(Error::internal(format!(
                "negative sieve count for n={n} classes {key:?}"
            )));
        }
        self.sieve_memo.insert((n, key), count.clone());
        Ok(count)
    }

    #[allow(clippy::too_many_arguments)]
    fn sum_over_assignments(
        &mut self,
        k: u64,
        rest: u64,
        grouped: &[(Partition, u64)],
        options: &[Vec<(Partition, Partition)>],
        depth: usize,
        assignment: &mut Vec<Vec<u64>>,
        total: &mut Int,
    ) -> Result<()> {
        if depth == grouped.len() {
            let mut weight = Int::one();
            let mut orbit_classes: Vec<Partition> = Vec::new();
            let mut rest_classes: Vec<Partition> = Vec::new();
            for (g, counts) in assignment.iter().enumerate() {
                let mult = grouped[g].1;
                // multinomial over which of the identical classes take which split
                let mut remaining = mult as i64;
                for (o, &c) in counts.iter().enumerate() {
                    weight *= binomial(remaining, c as i64)?;
                    remaining -= c as i64;
                    for _ in 0..c {
                        orbit_classes.push(options[g][o].0.clone());
                        rest_classes.push(options[g][o].1.clone());
                    }
                }
            }
            let on_orbit = self.sieve_transitive(k, &orbit_classes)?;
            if on_orbit.is_zero() {
                *total += Int::zero();
                return Ok(());
            }
            let elsewhere = if rest == 0 {
                Int::one()
            } else {
                self.product_count(&ClassTuple::new(rest_classes)?)?
            };
            *total += weight * on_orbit * elsewhere;
            return Ok(());
        }
        let mult = grouped[depth].1;
        let nopts = options[depth].len();
        for counts in compositions(mult, nopts) {
            assignment.push(counts);
            self.sum_over_assignments(k, rest, grouped, options, depth + 1, assignment, total)?;
            assignment.pop();
        }
        Ok(())
    }

    /// Hurwitz number by the covering definition: transitive count / n!,
    /// plus the genus from Riemann-Hurwitz. An odd total branching defect
    /// (no coverings possible) yields h = 0 with no genus; a negative genus
    /// short-circuits to 0.
    pub fn hurwitz_oracle(&mut self, t: &ClassTuple) -> Result<(Rat, Option<i64>)> {
        let n = t.n as i64;
        let defect: i64 = t.classes.iter().map(|c| n - c.len() as i64).sum();
        if defect % 2 != 0 {
            return Ok((Rat::zero(), None));
        }
        let genus = (defect - 2 * n + 2) / 2;
        if genus < 0 {
            return Ok((Rat::zero(), Some(genus)));
        }
        let transitive = self.transitive_count(t, CountMethod::Sieve)?;
        let h = Rat::new(transitive, factorial(n)?);
        Ok((h, Some(genus)))
    }

    /// Full report (both counts, h, genus) for the CLI.
    pub fn query(&mut self, t: &ClassTuple, method: CountMethod) -> Result<OracleResult> {
        let n = t.n as i64;
        let count_all = self.product_count(t)?;
        let defect: i64 = t.classes.iter().map(|c| n - c.len() as i64).sum();
        let genus = (defect % 2 == 0).then(|| (defect - 2 * n + 2) / 2);
        let count_transitive = self.transitive_count(t, method)?;
        let h = Rat::new(count_transitive.clone(), factorial(n)?);
        Ok(OracleResult {
            count_all: count_all.to_string(),
            count_transitive: count_transitive.to_string(),
            h: format_rat(&h),
            genus,
        })
    }
}

/// All vectors of nonnegative integers of length `slots` summing to `total`.
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

/// Cycle type of a permutation given as images on 0..n.
fn cycle_type(perm: &[u8]) -> Vec<u64> {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i] as usize;
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

fn all_perms_by_type(n: usize) -> HashMap<Vec<u64>, Vec<Vec<u8>>> {
    let mut out: HashMap<Vec<u64>, Vec<Vec<u8>>> = HashMap::new();
    let mut perm: Vec<u8> = (0..n as u8).collect();
    loop {
        out.entry(cycle_type(&perm)).or_default().push(perm.clone());
        // next lexicographic permutation
        let mut i = n.wrapping_sub(2);
        while i != usize::MAX && perm[i] >= perm[i + 1] {
            i = i.wrapping_sub(1);
        }
        if i == usize::MAX {
            break;
        }
        let mut j = n - 1;
        while perm[j] <= perm[i] {
            j -= 1;
        }
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    out
}

struct Dsu {
    parent: Vec<u8>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n as u8).collect(),
        }
    }
    fn find(&mut self, i: u8) -> u8 {
        let mut i = i;
        while self.parent[i as usize] != i {
            let p = self.parent[i as usize];
            self.parent[i as usize] = self.parent[p as usize];
            i = self.parent[i as usize];
        }
        i
    }
    fn union(&mut self, a: u8, b: u8) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra as usize] = rb;
        }
    }
    fn connected_count(&mut self) -> usize {
        let n = self.parent.len();
        (0..n as u8).filter(|&i| self.find(i) == i).count()
    }
}

/// Brute-force transitive count: enumerates elements for all classes but a
/// largest one (rotated to the last slot, a product-preserving bijection)
/// and checks the forced last element's cycle type and joint transitivity.
fn dfs_transitive_count(t: &ClassTuple) -> Int {
    let n = t.n as usize;
    let perms = all_perms_by_type(n);
    // cyclic rotation keeps both the identity product and transitivity
    let s = t.classes.len();
    let max_pos = (0..s)
        .max_by_key(|&i| t.classes[i].class_size())
        .expect("nonempty");
    let rotated: Vec<&Partition> = (1..=s).map(|i| &t.classes[(max_pos + i) % s]).collect();
    let last_type = rotated[s - 1].parts().to_vec();
    let empty: Vec<Vec<u8>> = Vec::new();
    let pools: Vec<&Vec<Vec<u8>>> = rotated[..s - 1]
        .iter()
        .map(|c| perms.get(c.parts()).unwrap_or(&empty))
        .collect();

    let mut count = Int::zero();
    let identity: Vec<u8> = (0..n as u8).collect();
    // stack entry: (product so far, dsu state)
    fn rec(
        pools: &[&Vec<Vec<u8>>],
        depth: usize,
        product: &[u8],
        dsu: &Dsu,
        last_type: &[u64],
        count: &mut Int,
    ) {
        let n = product.len();
        if depth == pools.len() {
            // forced last element: inverse of the running product
            if cycle_type(product) != last_type {
                return;
            }
            let mut dsu = Dsu {
                parent: dsu.parent.clone(),
            };
            // the inverse has the same cycles as the product
            for i in 0..n as u8 {
                dsu.union(i, product[i as usize]);
            }
            if dsu.connected_count() == 1 {
                *count += 1;
            }
            return;
        }
        for g in pools[depth] {
            let mut next_prod = vec![0u8; n];
            for i in 0..n {
                next_prod[i] = g[product[i] as usize];
            }
            let mut next_dsu = Dsu {
                parent: dsu.parent.clone(),
            };
            for i in 0..n as u8 {
                next_dsu.union(i, g[i as usize]);
            }
            rec(pools, depth + 1, &next_prod, &next_dsu, last_type, count);
        }
    }
    rec(
        &pools,
        0,
        &identity,
        &Dsu::new(n),
        &last_type,
        &mut count,
    );
    count
}
