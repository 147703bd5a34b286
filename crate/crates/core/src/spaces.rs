//! Finite topological spaces presented by a basis of open sets.
//!
//! A finite space is determined by the minimal open set ("core") around
//! each point; cores encode the specialization preorder. Closure, interior,
//! density and category all reduce to core computations.

use crate::sets::IdxSet;
use crate::validate::Violation;

/// A finite point set `{0, .., n_points-1}` with a distinguished basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    n_points: usize,
    basis: Vec<IdxSet>,
    /// `cores[x]` = intersection of all basis sets containing `x`.
    cores: Vec<IdxSet>,
}

/// Topological classification of a point set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointSetReport {
    pub set: IdxSet,
    pub is_open: bool,
    pub is_closed: bool,
    pub is_dense: bool,
    pub is_comeager: bool,
    pub is_meager: bool,
}

impl FiniteSpace {
    /// Builds a space from a basis. Indices must lie below `n_points`;
    /// semantic invariants (covering, intersection closure) are checked by
    /// [`FiniteSpace::violations`], not here.
    pub fn new(n_points: usize, basis: Vec<IdxSet>) -> FiniteSpace {
        assert!(n_points <= crate::sets::MAX_INDEX);
        let full = IdxSet::full(n_points);
        for b in &basis {
            assert!(b.is_subset(full), "basis set {b} not within {n_points} points");
        }
        let cores = (0..n_points)
            .map(|x| {
                basis
                    .iter()
                    .filter(|b| b.contains(x))
                    .fold(full, |acc, b| acc.inter(*b))
            })
            .collect();
        FiniteSpace { n_points, basis, cores }
    }

    /// Discrete topology: every singleton open.
    pub fn discrete(n: usize) -> FiniteSpace {
        FiniteSpace::new(n, (0..n).map(IdxSet::singleton).collect())
    }

    /// Indiscrete topology: only the whole space open.
    pub fn indiscrete(n: usize) -> FiniteSpace {
        FiniteSpace::new(n, vec![IdxSet::full(n)])
    }

    /// Two points where `{1}` is open and `{0}` is not.
    pub fn sierpinski() -> FiniteSpace {
        FiniteSpace::new(2, vec![IdxSet::singleton(1), IdxSet::full(2)])
    }

    /// Builds a space whose basis is the given family of minimal open sets,
    /// one per point. `cores[x]` must contain `x`; transitivity
    /// (`y in cores[x]` implies `cores[y] subset of cores[x]`) makes the
    /// family an actual basis and is checked by `violations`.
    pub fn from_cores(cores: &[IdxSet]) -> FiniteSpace {
        FiniteSpace::new(cores.len(), cores.to_vec())
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn basis(&self) -> &[IdxSet] {
        &self.basis
    }

    pub fn points(&self) -> IdxSet {
        IdxSet::full(self.n_points)
    }

    /// The minimal open set containing `x`: intersection of all basis sets
    /// containing `x`.
    pub fn core_open(&self, x: usize) -> IdxSet {
        assert!(x < self.n_points, "point {x} out of range");
        self.cores[x]
    }

    /// `{ z : core_open(z) meets A }`.
    pub fn closure(&self, a: IdxSet) -> IdxSet {
        (0..self.n_points)
            .filter(|&z| self.cores[z].intersects(a))
            .collect()
    }

    /// Complement of the closure of the complement.
    pub fn interior(&self, a: IdxSet) -> IdxSet {
        self.closure(a.complement(self.n_points))
            .complement(self.n_points)
    }

    pub fn is_open(&self, a: IdxSet) -> bool {
        self.interior(a) == a
    }

    pub fn is_closed(&self, a: IdxSet) -> bool {
        self.closure(a) == a
    }

    /// Dense means meeting every nonempty basis set.
    pub fn is_dense(&self, a: IdxSet) -> bool {
        self.basis
            .iter()
            .all(|b| b.is_empty() || b.intersects(a))
    }

    /// Classifies `A`: comeager means containing a dense open set, which is
    /// equivalent to the interior being dense; meager means the complement
    /// is comeager.
    pub fn category_report(&self, a: IdxSet) -> PointSetReport {
        let interior = self.interior(a);
        let co_interior = self.interior(a.complement(self.n_points));
        PointSetReport {
            set: a,
            is_open: interior == a,
            is_closed: self.is_closed(a),
            is_dense: self.is_dense(a),
            is_comeager: self.is_dense(interior),
            is_meager: self.is_dense(co_interior),
        }
    }

    /// Space-level invariant violations: nonemptiness, covering, and closure
    /// of the open-set family under pairwise intersection.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.n_points == 0 {
            out.push(Violation::new("space", "nonempty", "space has no points"));
            return out;
        }
        let covered = self
            .basis
            .iter()
            .fold(IdxSet::EMPTY, |acc, b| acc.union(*b));
        for x in covered.complement(self.n_points).iter() {
            out.push(Violation::new(
                "space",
                "basis-covers",
                format!("point {x} lies in no basis set"),
            ));
        }
        for (i, b1) in self.basis.iter().enumerate() {
            for (j, b2) in self.basis.iter().enumerate().skip(i) {
                let meet = b1.inter(*b2);
                for x in meet.iter() {
                    let ok = self
                        .basis
                        .iter()
                        .any(|b3| b3.contains(x) && b3.is_subset(meet));
                    if !ok {
                        out.push(Violation::new(
                            "space",
                            "basis-intersection",
                            format!("no basis set fits point {x} inside basis[{i}] ∩ basis[{j}]"),
                        ));
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> IdxSet {
        IdxSet::from_indices(v.iter().copied())
    }

    #[test]
    fn core_open_examples() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(s.core_open(1), set(&[1]));
        assert_eq!(s.core_open(0), set(&[0, 1]));
        let d = FiniteSpace::discrete(3);
        assert_eq!(d.core_open(2), set(&[2]));
    }

    #[test]
    fn core_is_contained_in_every_basis_neighborhood() {
        for space in [
            FiniteSpace::sierpinski(),
            FiniteSpace::discrete(4),
            FiniteSpace::indiscrete(3),
            FiniteSpace::from_cores(&[set(&[0, 1, 2]), set(&[1, 2]), set(&[2])]),
        ] {
            for x in 0..space.n_points() {
                for b in space.basis() {
                    if b.contains(x) {
                        assert!(space.core_open(x).is_subset(*b));
                    }
                }
            }
        }
    }

    #[test]
    fn closure_examples() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(s.closure(set(&[1])), set(&[0, 1]));
        assert_eq!(s.closure(set(&[0])), set(&[0]));
        assert_eq!(s.closure(IdxSet::EMPTY), IdxSet::EMPTY);
    }

    #[test]
    fn discrete_space_is_rigid() {
        let d = FiniteSpace::discrete(4);
        for x in 0..4 {
            assert_eq!(d.core_open(x), IdxSet::singleton(x));
        }
        for mask in 0..16usize {
            let a = IdxSet::from_indices((0..4).filter(|i| mask >> i & 1 == 1));
            assert_eq!(d.closure(a), a);
            assert_eq!(d.interior(a), a);
        }
    }

    #[test]
    fn category_examples() {
        let d = FiniteSpace::discrete(2);
        let r = d.category_report(set(&[0]));
        assert!(!r.is_dense && !r.is_comeager);

        let i = FiniteSpace::indiscrete(2);
        let r = i.category_report(set(&[0]));
        assert!(r.is_dense && !r.is_comeager);

        let s = FiniteSpace::sierpinski();
        let r = s.category_report(set(&[1]));
        assert!(r.is_dense && r.is_comeager && r.is_open);
    }

    #[test]
    fn comeager_and_meager_exclusive_on_small_spaces() {
        for space in [
            FiniteSpace::discrete(4),
            FiniteSpace::indiscrete(4),
            FiniteSpace::sierpinski(),
            FiniteSpace::from_cores(&[set(&[0, 1]), set(&[1]), set(&[2])]),
        ] {
            let n = space.n_points();
            for mask in 0..(1usize << n) {
                let a = IdxSet::from_indices((0..n).filter(|i| mask >> i & 1 == 1));
                let r = space.category_report(a);
                assert!(!(r.is_comeager && r.is_meager), "A={a} on {n} points");
                if r.is_comeager {
                    assert!(r.is_dense, "comeager must be dense: A={a}");
                }
                if r.is_open && r.is_dense {
                    assert!(r.is_comeager);
                }
            }
        }
    }

    #[test]
    fn empty_space_vacuously_dense_but_flagged() {
        let e = FiniteSpace::new(0, vec![]);
        assert!(e.is_dense(IdxSet::EMPTY));
        assert!(e.violations().iter().any(|v| v.rule == "nonempty"));
    }

    #[test]
    fn bad_basis_reported() {
        // {0,1} and {1,2} overlap in {1} but no basis set fits inside.
        let s = FiniteSpace::new(3, vec![set(&[0, 1]), set(&[1, 2])]);
        assert!(s
            .violations()
            .iter()
            .any(|v| v.rule == "basis-intersection"));
    }
}
