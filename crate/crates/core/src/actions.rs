//! Continuous group actions on finite spaces, orbits, and instance
//! validation.

use crate::groups::TopGroup;
use crate::sets::IdxSet;
use crate::spaces::FiniteSpace;
use crate::validate::{ValidationReport, Violation};

/// A group action given by its full table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    group: TopGroup,
    space: FiniteSpace,
    /// `table[g][x] = g·x`, `order` rows of `n_points` entries.
    table: Vec<Vec<usize>>,
}

/// Orbit decomposition of the point set. Blocks are sorted by least
/// representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    pub blocks: Vec<IdxSet>,
    /// `block_of[x]` = index of the block containing `x`.
    pub block_of: Vec<usize>,
}

impl OrbitPartition {
    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    /// Least point of each block, in block order.
    pub fn representatives(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.first().unwrap()).collect()
    }
}

impl GroupAction {
    pub fn new(group: TopGroup, space: FiniteSpace, table: Vec<Vec<usize>>) -> GroupAction {
        assert_eq!(table.len(), group.order(), "one table row per group element");
        for row in &table {
            assert_eq!(row.len(), space.n_points(), "one entry per point");
            for &p in row {
                assert!(p < space.n_points().max(1), "action target {p} out of range");
            }
        }
        GroupAction { group, space, table }
    }

    /// The trivial action of `group` on `space`.
    pub fn trivial(group: TopGroup, space: FiniteSpace) -> GroupAction {
        let row: Vec<usize> = (0..space.n_points()).collect();
        let table = vec![row; group.order()];
        GroupAction::new(group, space, table)
    }

    /// Action of `group` through a permutation representation: `perms[g]`
    /// is the one-line image of each point under `g`.
    pub fn from_permutations(
        group: TopGroup,
        space: FiniteSpace,
        perms: Vec<Vec<usize>>,
    ) -> GroupAction {
        GroupAction::new(group, space, perms)
    }

    pub fn group(&self) -> &TopGroup {
        &self.group
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.table[g][x]
    }

    /// Image of a point set under `g`.
    pub fn apply_set(&self, g: usize, a: IdxSet) -> IdxSet {
        a.iter().map(|x| self.apply(g, x)).collect()
    }

    /// Full orbit of `x`.
    pub fn orbit_of(&self, x: usize) -> IdxSet {
        (0..self.group.order()).map(|g| self.apply(g, x)).collect()
    }

    /// Orbit decomposition; blocks sorted by least representative.
    pub fn orbit_partition(&self) -> OrbitPartition {
        let n = self.space.n_points();
        let mut block_of = vec![usize::MAX; n];
        let mut blocks = Vec::new();
        for x in 0..n {
            if block_of[x] == usize::MAX {
                let orbit = self.orbit_of(x);
                let idx = blocks.len();
                for y in orbit.iter() {
                    block_of[y] = idx;
                }
                blocks.push(orbit);
            }
        }
        OrbitPartition { blocks, block_of }
    }

    /// Validates the space, the group, and the action laws; every violated
    /// invariant is listed with a witnessing tuple.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = self.space.violations();
        violations.extend(self.group.violations());

        let n = self.space.n_points();
        let e = self.group.identity();
        for x in 0..n {
            if self.apply(e, x) != x {
                violations.push(Violation::new(
                    "action",
                    "identity-acts-trivially",
                    format!("identity moves point {x} to {}", self.apply(e, x)),
                ));
            }
        }
        'compat: for g in 0..self.group.order() {
            for h in 0..self.group.order() {
                for x in 0..n {
                    let stepwise = self.apply(g, self.apply(h, x));
                    let combined = self.apply(self.group.mul(g, h), x);
                    if stepwise != combined {
                        violations.push(Violation::new(
                            "action",
                            "compatibility",
                            format!("(g,h,x)=({g},{h},{x}): g·(h·x)={stepwise} but (gh)·x={combined}"),
                        ));
                        break 'compat;
                    }
                }
            }
        }
        for g in 0..self.group.order() {
            for (i, b) in self.space.basis().iter().enumerate() {
                let image = self.apply_set(g, *b);
                if !self.space.is_open(image) {
                    violations.push(Violation::new(
                        "action",
                        "homeomorphism",
                        format!("element {g} maps basis[{i}]={b} to non-open {image}"),
                    ));
                }
            }
        }
        ValidationReport { violations }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_swap_on_discrete2() -> GroupAction {
        GroupAction::from_permutations(
            TopGroup::cyclic(2),
            FiniteSpace::discrete(2),
            vec![vec![0, 1], vec![1, 0]],
        )
    }

    #[test]
    fn orbit_examples() {
        let trivial = GroupAction::trivial(TopGroup::trivial(), FiniteSpace::discrete(3));
        let p = trivial.orbit_partition();
        assert_eq!(p.blocks.len(), 3);

        let swap = z2_swap_on_discrete2();
        let p = swap.orbit_partition();
        assert_eq!(p.blocks, vec![IdxSet::full(2)]);

        let idle = GroupAction::trivial(TopGroup::cyclic(2), FiniteSpace::discrete(2));
        let p = idle.orbit_partition();
        assert_eq!(p.blocks.len(), 2);
    }

    #[test]
    fn validate_z3_rotation() {
        let z3 = TopGroup::cyclic(3);
        let rot = GroupAction::from_permutations(
            z3,
            FiniteSpace::discrete(3),
            vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
        );
        assert!(rot.validate().is_valid());
        assert_eq!(rot.orbit_partition().blocks.len(), 1);
    }

    #[test]
    fn broken_associativity_named() {
        let mut mult = vec![0, 1, 1, 0];
        mult[3] = 1; // 1·1 = 1: breaks inverses
        let broken = TopGroup::new(2, mult, 0, vec![0, 1], crate::groups::default_chain(2));
        let action = GroupAction::trivial(broken, FiniteSpace::discrete(2));
        let report = action.validate();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| v.scope == "group"));
    }

    #[test]
    fn non_homeomorphism_named() {
        // On Sierpiński space the swap is not a homeomorphism: it maps the
        // open {1} to the non-open {0}.
        let action = GroupAction::from_permutations(
            TopGroup::cyclic(2),
            FiniteSpace::sierpinski(),
            vec![vec![0, 1], vec![1, 0]],
        );
        let report = action.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.rule == "homeomorphism"));
    }

    #[test]
    fn homeomorphisms_commute_with_closure() {
        let swap = z2_swap_on_discrete2();
        for g in 0..2 {
            for mask in 0..4usize {
                let a = IdxSet::from_indices((0..2).filter(|i| mask >> i & 1 == 1));
                let lhs = swap.apply_set(g, swap.space().closure(a));
                let rhs = swap.space().closure(swap.apply_set(g, a));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
