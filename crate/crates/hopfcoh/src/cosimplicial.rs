//! The generic non-abelian cohomology engine for a three-level
//! pre-cosimplicial diagram of groups
//!
//! ```text
//!   A⁰ ⇉ A¹ ⇶ A²
//! ```
//!
//! with coface maps `dⁱ` satisfying `dⁱdʲ = dʲdⁱ⁻¹` for `i > j`.
//! `ℍ⁰` is the equalizer of `(d⁰, d¹)` on `A⁰`; `ℤ¹` is the set of
//! `X ∈ A¹` with `d²(X)·d⁰(X) = d¹(X)`; `ℍ¹` is the orbit space of `ℤ¹`
//! under the right action `X ⇀ x = d¹(x⁻¹)·X·d⁰(x)`, pointed by the
//! orbit of the unit.
//!
//! The same engine drives the Hopf-side unit-group diagram, classical
//! group cohomology, the Hom-space diagram of the restricted theory, and
//! quotient diagrams of cosets.

use std::collections::BTreeMap;

use crate::error::Result;

/// A three-level diagram of groups, with enumerable level 0 and an
/// enumerable (pre-filtered, invertible) candidate set at level 1.
pub trait GroupDiagram {
    type L0: Clone + Eq + Ord;
    type L1: Clone + Eq + Ord;
    type L2: Clone + Eq;

    fn unit1(&self) -> Self::L1;
    fn mul0(&self, a: &Self::L0, b: &Self::L0) -> Self::L0;
    fn inv0(&self, a: &Self::L0) -> Self::L0;
    fn mul1(&self, a: &Self::L1, b: &Self::L1) -> Self::L1;
    fn mul2(&self, a: &Self::L2, b: &Self::L2) -> Self::L2;

    fn d0_level0(&self, x: &Self::L0) -> Self::L1;
    fn d1_level0(&self, x: &Self::L0) -> Self::L1;
    fn d0_level1(&self, x: &Self::L1) -> Self::L2;
    fn d1_level1(&self, x: &Self::L1) -> Self::L2;
    fn d2_level1(&self, x: &Self::L1) -> Self::L2;

    /// All elements of the level-0 group, sorted.
    fn level0_elements(&self) -> Result<Vec<Self::L0>>;

    /// Candidate 1-cochains: invertible, and restricted by any lossless
    /// prefilter the instance can justify. Sorted.
    fn cocycle_candidates(&self) -> Result<Vec<Self::L1>>;
}

/// The equalizer `{x ∈ A⁰ | d⁰(x) = d¹(x)}`, sorted.
pub fn h0<D: GroupDiagram>(diagram: &D) -> Result<Vec<D::L0>> {
    let mut out: Vec<D::L0> = diagram
        .level0_elements()?
        .into_iter()
        .filter(|x| diagram.d0_level0(x) == diagram.d1_level0(x))
        .collect();
    out.sort();
    Ok(out)
}

/// All 1-cocycles among the candidates, sorted.
pub fn z1<D: GroupDiagram>(diagram: &D) -> Result<Vec<D::L1>> {
    let mut out: Vec<D::L1> = diagram
        .cocycle_candidates()?
        .into_iter()
        .filter(|x| cocycle_relation_holds(diagram, x))
        .collect();
    out.sort();
    Ok(out)
}

pub fn cocycle_relation_holds<D: GroupDiagram>(diagram: &D, x: &D::L1) -> bool {
    let lhs = diagram.mul2(&diagram.d2_level1(x), &diagram.d0_level1(x));
    lhs == diagram.d1_level1(x)
}

/// The right action `X ⇀ x = d¹(x⁻¹)·X·d⁰(x)`.
pub fn act<D: GroupDiagram>(diagram: &D, x1: &D::L1, x0: &D::L0) -> D::L1 {
    let xinv = diagram.inv0(x0);
    let left = diagram.d1_level0(&xinv);
    let right = diagram.d0_level0(x0);
    diagram.mul1(&diagram.mul1(&left, x1), &right)
}

/// One orbit of the level-0 action on cocycles. `members` is sorted;
/// `witnesses[i]` is a group element moving `representative` onto
/// `members[i]`.
#[derive(Debug, Clone)]
pub struct Orbit<L1, L0> {
    pub representative: L1,
    pub members: Vec<L1>,
    pub witnesses: Vec<L0>,
}

/// The pointed set `ℍ¹`: orbits of cocycles, the distinguished orbit (of
/// the unit) first, remaining orbits sorted by representative.
#[derive(Debug, Clone)]
pub struct H1<L1, L0> {
    pub orbits: Vec<Orbit<L1, L0>>,
}

impl<L1: Clone + Eq + Ord, L0: Clone> H1<L1, L0> {
    pub fn class_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn representatives(&self) -> Vec<L1> {
        self.orbits.iter().map(|o| o.representative.clone()).collect()
    }

    /// Index of the orbit containing the given cocycle, if any.
    pub fn class_of(&self, x: &L1) -> Option<usize> {
        self.orbits
            .iter()
            .position(|o| o.members.binary_search(x).is_ok())
    }
}

/// Computes `ℍ¹` by breadth-first orbit closure, using every level-0
/// element as a generator. Representatives are the lexicographically
/// least orbit members, so the output is independent of enumeration
/// order.
pub fn h1<D: GroupDiagram>(diagram: &D) -> Result<H1<D::L1, D::L0>> {
    let cocycles = z1(diagram)?;
    let units = diagram.level0_elements()?;
    h1_from_parts(diagram, &cocycles, &units)
}

/// Orbit partition for precomputed cocycle and unit lists.
pub fn h1_from_parts<D: GroupDiagram>(
    diagram: &D,
    cocycles: &[D::L1],
    units: &[D::L0],
) -> Result<H1<D::L1, D::L0>> {
    let identity0 = units
        .iter()
        .find(|x| {
            let one = diagram.mul0(x, x);
            one == **x && diagram.inv0(x) == **x
        })
        .cloned()
        .unwrap_or_else(|| {
            // fall back: x·x⁻¹ for any x
            let x = units.first().expect("level 0 group is nonempty");
            diagram.mul0(x, &diagram.inv0(x))
        });

    let mut assigned: BTreeMap<D::L1, bool> = BTreeMap::new();
    let mut orbits = Vec::new();
    for start in cocycles {
        if assigned.contains_key(start) {
            continue;
        }
        // closure with witnesses relative to `start`
        let mut members: BTreeMap<D::L1, D::L0> = BTreeMap::new();
        members.insert(start.clone(), identity0.clone());
        let mut frontier = vec![start.clone()];
        while let Some(current) = frontier.pop() {
            let wit_current = members.get(&current).expect("frontier member").clone();
            for u in units {
                let next = act(diagram, &current, u);
                if !members.contains_key(&next) {
                    let w = diagram.mul0(&wit_current, u);
                    members.insert(next.clone(), w);
                    frontier.push(next);
                }
            }
        }
        // canonical representative = least member; rebase witnesses
        let representative = members.keys().next().expect("orbit nonempty").clone();
        let to_rep = members.get(&representative).unwrap().clone();
        let rep_inv = diagram.inv0(&to_rep);
        let mut sorted_members = Vec::with_capacity(members.len());
        let mut witnesses = Vec::with_capacity(members.len());
        for (m, w) in &members {
            // start ⇀ to_rep = rep, start ⇀ w = m  ⟹  rep ⇀ (to_rep⁻¹·w) = m
            let rebased = diagram.mul0(&rep_inv, w);
            if act(diagram, &representative, &rebased) != *m {
                return Err(crate::error::Error::AxiomError {
                    name: "orbit witness moves the representative onto the member".into(),
                    witness: "orbit closure".into(),
                });
            }
            sorted_members.push(m.clone());
            witnesses.push(rebased);
        }
        for m in members.keys() {
            assigned.insert(m.clone(), true);
        }
        orbits.push(Orbit { representative, members: sorted_members, witnesses });
    }

    // distinguished orbit first, the rest by representative
    let unit = diagram.unit1();
    orbits.sort_by(|a, b| {
        let da = a.members.binary_search(&unit).is_ok();
        let db = b.members.binary_search(&unit).is_ok();
        db.cmp(&da).then_with(|| a.representative.cmp(&b.representative))
    });
    Ok(H1 { orbits })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Toy diagram: levels are ℤ/nℤ written multiplicatively via addition,
    /// all cofaces the identity except d⁰ at level 0 doubling. Then the
    /// cocycle relation reads X + 0 = X (all cocycles) and the action is
    /// X ⇀ x = X + x.
    struct Toy {
        n: u64,
    }

    impl GroupDiagram for Toy {
        type L0 = u64;
        type L1 = u64;
        type L2 = u64;

        fn unit1(&self) -> u64 {
            0
        }
        fn mul0(&self, a: &u64, b: &u64) -> u64 {
            (a + b) % self.n
        }
        fn inv0(&self, a: &u64) -> u64 {
            (self.n - a) % self.n
        }
        fn mul1(&self, a: &u64, b: &u64) -> u64 {
            (a + b) % self.n
        }
        fn mul2(&self, a: &u64, b: &u64) -> u64 {
            (a + b) % self.n
        }
        fn d0_level0(&self, x: &u64) -> u64 {
            (2 * x) % self.n
        }
        fn d1_level0(&self, x: &u64) -> u64 {
            *x
        }
        fn d0_level1(&self, _x: &u64) -> u64 {
            0
        }
        fn d1_level1(&self, x: &u64) -> u64 {
            *x
        }
        fn d2_level1(&self, x: &u64) -> u64 {
            *x
        }
        fn level0_elements(&self) -> Result<Vec<u64>> {
            Ok((0..self.n).collect())
        }
        fn cocycle_candidates(&self) -> Result<Vec<u64>> {
            Ok((0..self.n).collect())
        }
    }

    #[test]
    fn toy_diagram() {
        let d = Toy { n: 5 };
        // equalizer of x ↦ 2x and id is {0}
        assert_eq!(h0(&d).unwrap(), vec![0]);
        // action x ⇀ t = -t + x + 2t = x + t is transitive: one orbit
        let h1 = h1(&d).unwrap();
        assert_eq!(h1.class_count(), 1);
        assert_eq!(h1.orbits[0].representative, 0);
        assert_eq!(h1.orbits[0].members.len(), 5);
        // witnesses verified: rep ⇀ w = member
        for (m, w) in h1.orbits[0].members.iter().zip(&h1.orbits[0].witnesses) {
            assert_eq!(act(&d, &h1.orbits[0].representative, w), *m);
        }
    }

    #[test]
    fn action_is_right_action() {
        let d = Toy { n: 7 };
        for x in 0..7 {
            assert_eq!(act(&d, &x, &0), x);
            for a in 0..7 {
                for b in 0..7 {
                    let one_step = act(&d, &x, &d.mul0(&a, &b));
                    let two_step = act(&d, &act(&d, &x, &a), &b);
                    assert_eq!(one_step, two_step);
                }
            }
        }
    }
}
