//! Finite groups as verified multiplication tables.

use crate::error::{Error, Result};

/// A finite group: multiplication table over element indices, with the
/// identity and inverse table precomputed. Construction verifies the
/// group axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Verifies closure, associativity, identity, and inverses; reports the
    /// first failing witness otherwise.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if labels.len() != n {
            return Err(Error::NotAGroup("label count differs from order".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {i} has wrong length")));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::NotAGroup(format!("entry ({i},{j}) out of range")));
                }
                flat.push(v);
            }
        }
        // identity
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| flat[e * n + a] == a && flat[a * n + e] == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        // associativity
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if flat[flat[a * n + b] * n + c] != flat[a * n + flat[b * n + c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        // inverses
        let mut inverse = vec![0usize; n];
        for a in 0..n {
            match (0..n).find(|&b| flat[a * n + b] == identity && flat[b * n + a] == identity) {
                Some(b) => inverse[a] = b,
                None => {
                    return Err(Error::NotAGroup(format!("no inverse for {}", labels[a])));
                }
            }
        }
        Ok(FiniteGroup { order: n, table: flat, identity, inverse, labels })
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::from_table(vec![vec![0]], vec!["e".into()]).unwrap()
    }

    /// ℤ/nℤ with elements labelled by residues.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n > 0);
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let labels = (0..n).map(|a| a.to_string()).collect();
        FiniteGroup::from_table(table, labels).unwrap()
    }

    /// The symmetric group on `n` points (permutations in lexicographic
    /// one-line order, composed right to left), labelled in cycle notation
    /// with 1-based points.
    pub fn symmetric(n: usize) -> FiniteGroup {
        assert!(n >= 1 && n <= 6, "desk-scale symmetric groups only");
        let perms = permutations(n);
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        // (a∘b)(x) = a(b(x))
                        let comp: Vec<usize> = (0..n).map(|x| a[b[x]]).collect();
                        index_of(&comp)
                    })
                    .collect()
            })
            .collect();
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroup::from_table(table, labels).unwrap()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    /// Checks that the listed element indices form a subgroup.
    pub fn verify_subgroup(&self, members: &[usize]) -> Result<()> {
        if !members.contains(&self.identity) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for &a in members {
            if a >= self.order {
                return Err(Error::NotASubgroup(format!("index {a} out of range")));
            }
            if !members.contains(&self.inv(a)) {
                return Err(Error::NotASubgroup(format!("inverse of {} missing", self.labels[a])));
            }
            for &b in members {
                if !members.contains(&self.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!(
                        "not closed: {}·{}",
                        self.labels[a], self.labels[b]
                    )));
                }
            }
        }
        Ok(())
    }

    /// The subgroup on the given indices as a group in its own right.
    pub fn subgroup(&self, members: &[usize]) -> Result<FiniteGroup> {
        self.verify_subgroup(members)?;
        let pos = |g: usize| members.iter().position(|&m| m == g).unwrap();
        let table = members
            .iter()
            .map(|&a| members.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        let labels = members.iter().map(|&m| self.labels[m].clone()).collect();
        FiniteGroup::from_table(table, labels)
    }

    /// All homomorphisms from this group into the cyclic group `𝔽_p^×`,
    /// each returned as the tuple of unit values indexed by group element.
    pub fn characters(&self, p: u64) -> Vec<Vec<u64>> {
        let units: Vec<u64> = (1..p).collect();
        let mut homs = Vec::new();
        let mut assign = vec![1u64; self.order];
        self.character_search(&units, p, 0, &mut assign, &mut homs);
        homs.sort();
        homs
    }

    fn character_search(
        &self,
        units: &[u64],
        p: u64,
        next: usize,
        assign: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if next == self.order {
            for a in 0..self.order {
                for b in 0..self.order {
                    let lhs = assign[a] * assign[b] % p;
                    if lhs != assign[self.mul(a, b)] {
                        return;
                    }
                }
            }
            out.push(assign.clone());
            return;
        }
        if next == self.identity {
            assign[next] = 1;
            self.character_search(units, p, next + 1, assign, out);
            return;
        }
        for &u in units {
            assign[next] = u;
            self.character_search(units, p, next + 1, assign, out);
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap_permute(&mut cur, n, &mut all);
    all.sort();
    all
}

fn heap_permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(cur, k - 1, out);
        if k % 2 == 0 {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        out.push('(');
        for c in cyc {
            out.push_str(&(c + 1).to_string());
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups() {
        let z2 = FiniteGroup::cyclic(2);
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.mul(1, 1), 0);
        assert_eq!(z2.inv(1), 1);
    }

    #[test]
    fn symmetric_three() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        // conjugating (13) by (12) gives (23)
        let find = |lbl: &str| s3.labels().iter().position(|l| l == lbl).unwrap();
        let t12 = find("(12)");
        let t13 = find("(13)");
        let t23 = find("(23)");
        assert_eq!(s3.mul(s3.mul(t12, t13), t12), t23);
        assert!(s3.verify_subgroup(&[s3.identity(), t12]).is_ok());
        assert!(s3.verify_subgroup(&[s3.identity(), t12, t13]).is_err());
    }

    #[test]
    fn bad_tables_rejected() {
        // latin square that is not associative (order 5 loop)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let labels = (0..5).map(|i| i.to_string()).collect();
        assert!(matches!(
            FiniteGroup::from_table(t, labels),
            Err(Error::NotAGroup(_))
        ));
    }

    #[test]
    fn characters_match_orders() {
        // |Hom(ℤ/2, 𝔽₃^×)| = 2, |Hom(ℤ/3, 𝔽₅^×)| = 1
        assert_eq!(FiniteGroup::cyclic(2).characters(3).len(), 2);
        assert_eq!(FiniteGroup::cyclic(3).characters(5).len(), 1);
        assert_eq!(FiniteGroup::trivial().characters(7).len(), 1);
    }
}
