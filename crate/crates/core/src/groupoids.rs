//! Finite groupoids with a topology on arrows, the action-groupoid
//! construction, restriction, and object-level orbits.
//!
//! Objects are stored as a flagged subset of arrows (their identity
//! arrows), so every object-valued map returns arrow indices.

use crate::actions::{GroupAction, OrbitPartition};
use crate::sets::IdxSet;
use crate::validate::Violation;

/// A finite groupoid: arrows with source/range, partial composition,
/// inversion, and a basis of arrow sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    n_arrows: usize,
    objects: IdxSet,
    src: Vec<usize>,
    rng: Vec<usize>,
    /// `comp[gamma * n_arrows + rho]`, defined exactly on composable pairs.
    comp: Vec<Option<usize>>,
    inv: Vec<usize>,
    basis: Vec<IdxSet>,
}

impl FiniteGroupoid {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        n_arrows: usize,
        objects: IdxSet,
        src: Vec<usize>,
        rng: Vec<usize>,
        comp: Vec<Option<usize>>,
        inv: Vec<usize>,
        basis: Vec<IdxSet>,
    ) -> FiniteGroupoid {
        assert!(n_arrows <= crate::sets::MAX_INDEX);
        assert_eq!(src.len(), n_arrows);
        assert_eq!(rng.len(), n_arrows);
        assert_eq!(comp.len(), n_arrows * n_arrows);
        assert_eq!(inv.len(), n_arrows);
        let all = IdxSet::full(n_arrows);
        assert!(objects.is_subset(all));
        for &a in src.iter().chain(rng.iter()).chain(inv.iter()) {
            assert!(a < n_arrows.max(1), "arrow index {a} out of range");
        }
        for c in comp.iter().flatten() {
            assert!(*c < n_arrows, "composite index out of range");
        }
        for b in &basis {
            assert!(b.is_subset(all));
        }
        FiniteGroupoid {
            n_arrows,
            objects,
            src,
            rng,
            comp,
            inv,
            basis,
        }
    }

    /// Builds the composition table from a list of `(gamma, rho, composite)`
    /// triples.
    pub fn from_comp_triples(
        n_arrows: usize,
        objects: IdxSet,
        src: Vec<usize>,
        rng: Vec<usize>,
        triples: &[(usize, usize, usize)],
        inv: Vec<usize>,
        basis: Vec<IdxSet>,
    ) -> FiniteGroupoid {
        let mut comp = vec![None; n_arrows * n_arrows];
        for &(g, r, c) in triples {
            comp[g * n_arrows + r] = Some(c);
        }
        FiniteGroupoid::new(n_arrows, objects, src, rng, comp, inv, basis)
    }

    pub fn n_arrows(&self) -> usize {
        self.n_arrows
    }

    pub fn objects(&self) -> IdxSet {
        self.objects
    }

    pub fn is_object(&self, a: usize) -> bool {
        self.objects.contains(a)
    }

    pub fn src(&self, a: usize) -> usize {
        self.src[a]
    }

    pub fn rng(&self, a: usize) -> usize {
        self.rng[a]
    }

    pub fn compose(&self, gamma: usize, rho: usize) -> Option<usize> {
        self.comp[gamma * self.n_arrows + rho]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn basis(&self) -> &[IdxSet] {
        &self.basis
    }

    /// Composition triples in lexicographic order, for serialization.
    pub fn comp_triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for g in 0..self.n_arrows {
            for r in 0..self.n_arrows {
                if let Some(c) = self.comp[g * self.n_arrows + r] {
                    out.push((g, r, c));
                }
            }
        }
        out
    }

    /// An arrow set is open when every member has a basic neighborhood
    /// inside it.
    pub fn is_open(&self, s: IdxSet) -> bool {
        s.iter()
            .all(|a| self.basis.iter().any(|b| b.contains(a) && b.is_subset(s)))
    }

    /// Every violated groupoid axiom with a witness; empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.n_arrows;
        for o in self.objects.iter() {
            if self.src[o] != o || self.rng[o] != o {
                out.push(Violation::new(
                    "groupoid",
                    "object-identity",
                    format!("object {o} has src {} / rng {}", self.src[o], self.rng[o]),
                ));
            }
        }
        for a in 0..n {
            if !self.objects.contains(self.src[a]) || !self.objects.contains(self.rng[a]) {
                out.push(Violation::new(
                    "groupoid",
                    "endpoints-are-objects",
                    format!("arrow {a}"),
                ));
            }
        }
        for g in 0..n {
            for r in 0..n {
                let composable = self.src[g] == self.rng[r];
                match self.compose(g, r) {
                    Some(c) if !composable => out.push(Violation::new(
                        "groupoid",
                        "composition-domain",
                        format!("non-composable pair ({g},{r}) has composite {c}"),
                    )),
                    Some(c) => {
                        if self.src[c] != self.src[r] || self.rng[c] != self.rng[g] {
                            out.push(Violation::new(
                                "groupoid",
                                "composition-typing",
                                format!("({g},{r}) -> {c}"),
                            ));
                        }
                    }
                    None if composable => out.push(Violation::new(
                        "groupoid",
                        "composition-missing",
                        format!("composable pair ({g},{r}) has no composite"),
                    )),
                    None => {}
                }
            }
        }
        'assoc: for g in 0..n {
            for r in 0..n {
                let Some(gr) = self.compose(g, r) else { continue };
                for t in 0..n {
                    let Some(rt) = self.compose(r, t) else { continue };
                    if self.compose(gr, t) != self.compose(g, rt) {
                        out.push(Violation::new(
                            "groupoid",
                            "associativity",
                            format!("arrows ({g},{r},{t})"),
                        ));
                        break 'assoc;
                    }
                }
            }
        }
        for a in 0..n {
            if self.compose(a, self.src[a]) != Some(a) || self.compose(self.rng[a], a) != Some(a) {
                out.push(Violation::new(
                    "groupoid",
                    "identity-neutral",
                    format!("arrow {a}"),
                ));
            }
            let i = self.inv[a];
            if self.compose(i, a) != Some(self.src[a]) || self.compose(a, i) != Some(self.rng[a]) {
                out.push(Violation::new("groupoid", "inverse", format!("arrow {a}")));
            }
        }
        let covered = self.basis.iter().fold(IdxSet::EMPTY, |acc, b| acc.union(*b));
        if covered != IdxSet::full(n) && n > 0 {
            out.push(Violation::new(
                "groupoid",
                "basis-covers",
                format!("arrows {} lie in no basic set", covered.complement(n)),
            ));
        }
        for (i, b1) in self.basis.iter().enumerate() {
            for (j, b2) in self.basis.iter().enumerate().skip(i) {
                let meet = b1.inter(*b2);
                for a in meet.iter() {
                    if !self.basis.iter().any(|b| b.contains(a) && b.is_subset(meet)) {
                        out.push(Violation::new(
                            "groupoid",
                            "basis-intersection",
                            format!("arrow {a} in basis[{i}] ∩ basis[{j}]"),
                        ));
                    }
                }
            }
        }
        // Continuity/openness of the operations on basic sets.
        for (i, b1) in self.basis.iter().enumerate() {
            let image: IdxSet = b1.iter().map(|a| self.inv[a]).collect();
            if !self.is_open(image) {
                out.push(Violation::new(
                    "groupoid",
                    "inversion-open",
                    format!("inv(basis[{i}]) = {image} is not open"),
                ));
            }
            for (j, b2) in self.basis.iter().enumerate() {
                let mut product = IdxSet::EMPTY;
                for g in b1.iter() {
                    for r in b2.iter() {
                        if let Some(c) = self.compose(g, r) {
                            product.insert(c);
                        }
                    }
                }
                if !self.is_open(product) {
                    out.push(Violation::new(
                        "groupoid",
                        "composition-open",
                        format!("basis[{i}]·basis[{j}] = {product} is not open"),
                    ));
                }
            }
        }
        // Traces of basic sets on the object set must again behave as a
        // basis of the object subspace.
        let traces: Vec<IdxSet> = self.basis.iter().map(|b| b.inter(self.objects)).collect();
        for (i, t1) in traces.iter().enumerate() {
            for (j, t2) in traces.iter().enumerate().skip(i) {
                let meet = t1.inter(*t2);
                for o in meet.iter() {
                    if !traces.iter().any(|t| t.contains(o) && t.is_subset(meet)) {
                        out.push(Violation::new(
                            "groupoid",
                            "object-subspace",
                            format!("object {o} in trace[{i}] ∩ trace[{j}]"),
                        ));
                    }
                }
            }
        }
        out
    }

    /// Orbit decomposition of the object set: two objects share a block
    /// exactly when some arrow connects them. `block_of` is indexed by
    /// arrow index and is `usize::MAX` off the object set.
    pub fn orbit_partition(&self) -> OrbitPartition {
        let mut block_of = vec![usize::MAX; self.n_arrows];
        let mut blocks: Vec<IdxSet> = Vec::new();
        for o in self.objects.iter() {
            if block_of[o] != usize::MAX {
                continue;
            }
            let mut block = IdxSet::singleton(o);
            let mut frontier = vec![o];
            while let Some(z) = frontier.pop() {
                for a in 0..self.n_arrows {
                    let other = if self.src[a] == z {
                        self.rng[a]
                    } else if self.rng[a] == z {
                        self.src[a]
                    } else {
                        continue;
                    };
                    if !block.contains(other) {
                        block.insert(other);
                        frontier.push(other);
                    }
                }
            }
            let idx = blocks.len();
            for z in block.iter() {
                block_of[z] = idx;
            }
            blocks.push(block);
        }
        OrbitPartition { blocks, block_of }
    }
}

/// The action groupoid of a group action: arrows are pairs `(h, z)` indexed
/// `h * n_points + z`, objects the pairs `(identity, z)`. The basis is the
/// family of rectangles `(g·V) × U` with `V` a chain element and `U` a
/// basis set of the space.
pub fn action_groupoid(action: &GroupAction) -> FiniteGroupoid {
    let group = action.group();
    let space = action.space();
    let n = space.n_points();
    let order = group.order();
    let n_arrows = order * n;
    assert!(n_arrows <= crate::sets::MAX_INDEX, "action groupoid too large");
    let e = group.identity();
    let arrow = |h: usize, z: usize| h * n + z;

    let mut objects = IdxSet::EMPTY;
    for z in 0..n {
        objects.insert(arrow(e, z));
    }
    let mut src = vec![0; n_arrows];
    let mut rng = vec![0; n_arrows];
    let mut inv = vec![0; n_arrows];
    let mut comp = vec![None; n_arrows * n_arrows];
    for h in 0..order {
        for z in 0..n {
            let a = arrow(h, z);
            src[a] = arrow(e, z);
            rng[a] = arrow(e, action.apply(h, z));
            inv[a] = arrow(group.inverse(h), action.apply(h, z));
        }
    }
    for h in 0..order {
        for x in 0..n {
            let gamma = arrow(h, x);
            for h2 in 0..order {
                for y in 0..n {
                    if action.apply(h2, y) == x {
                        let rho = arrow(h2, y);
                        comp[gamma * n_arrows + rho] = Some(arrow(group.mul(h, h2), y));
                    }
                }
            }
        }
    }

    let mut basis: Vec<IdxSet> = Vec::new();
    for v in group.filter_chain() {
        for g in 0..order {
            let translated: IdxSet = v.iter().map(|h| group.mul(g, h)).collect();
            for u in space.basis() {
                let mut rect = IdxSet::EMPTY;
                for h in translated.iter() {
                    for z in u.iter() {
                        rect.insert(arrow(h, z));
                    }
                }
                if !basis.contains(&rect) {
                    basis.push(rect);
                }
            }
        }
    }

    FiniteGroupoid::new(n_arrows, objects, src, rng, comp, inv, basis)
}

/// The restriction of a groupoid to a subset of its objects: arrows with
/// both endpoints inside, with the induced structure and the subspace
/// basis.
pub fn restrict_groupoid(g: &FiniteGroupoid, objects: IdxSet) -> FiniteGroupoid {
    assert!(
        objects.is_subset(g.objects()),
        "restriction set must consist of objects"
    );
    let kept: Vec<usize> = (0..g.n_arrows())
        .filter(|&a| objects.contains(g.src(a)) && objects.contains(g.rng(a)))
        .collect();
    let mut new_index = vec![usize::MAX; g.n_arrows()];
    for (i, &a) in kept.iter().enumerate() {
        new_index[a] = i;
    }
    let n = kept.len();
    let mut src = vec![0; n];
    let mut rng = vec![0; n];
    let mut inv = vec![0; n];
    let mut comp = vec![None; n * n];
    let mut new_objects = IdxSet::EMPTY;
    for (i, &a) in kept.iter().enumerate() {
        src[i] = new_index[g.src(a)];
        rng[i] = new_index[g.rng(a)];
        inv[i] = new_index[g.inverse(a)];
        if g.is_object(a) {
            new_objects.insert(i);
        }
    }
    for (i, &a) in kept.iter().enumerate() {
        for (j, &b) in kept.iter().enumerate() {
            if let Some(c) = g.compose(a, b) {
                if new_index[c] != usize::MAX {
                    comp[i * n + j] = Some(new_index[c]);
                }
            }
        }
    }
    let kept_set = IdxSet::from_indices(kept.iter().copied());
    let mut basis = Vec::new();
    for b in g.basis() {
        let trace: IdxSet = b.inter(kept_set).iter().map(|a| new_index[a]).collect();
        if !trace.is_empty() && !basis.contains(&trace) {
            basis.push(trace);
        }
    }
    FiniteGroupoid::new(n, new_objects, src, rng, comp, inv, basis)
}

/// Groupoid local orbit: the smallest set of objects inside `u` containing
/// `x` and closed under following arrows of `u` whose range stays in
/// `u ∩ G⁰`. Panics when `x` is not an object inside `u`.
pub fn groupoid_local_orbit(g: &FiniteGroupoid, x: usize, u: IdxSet) -> IdxSet {
    assert!(g.is_object(x), "base point must be an object");
    assert!(u.contains(x), "base object {x} must lie in U");
    let object_window = u.inter(g.objects());
    let mut orbit = IdxSet::singleton(x);
    let mut frontier = vec![x];
    while let Some(z) = frontier.pop() {
        for a in u.iter() {
            if g.src(a) != z {
                continue;
            }
            let w = g.rng(a);
            if object_window.contains(w) && !orbit.contains(w) {
                orbit.insert(w);
                frontier.push(w);
            }
        }
    }
    orbit
}

/// A group viewed as a one-object groupoid; the basis is the family of
/// translates of the chain elements.
pub fn group_as_groupoid(group: &crate::groups::TopGroup) -> FiniteGroupoid {
    let order = group.order();
    let e = group.identity();
    let src = vec![e; order];
    let rng = vec![e; order];
    let inv: Vec<usize> = (0..order).map(|a| group.inverse(a)).collect();
    let mut comp = vec![None; order * order];
    for a in 0..order {
        for b in 0..order {
            comp[a * order + b] = Some(group.mul(a, b));
        }
    }
    let mut basis = Vec::new();
    for v in group.filter_chain() {
        for g in 0..order {
            let translated: IdxSet = v.iter().map(|h| group.mul(g, h)).collect();
            if !basis.contains(&translated) {
                basis.push(translated);
            }
        }
    }
    FiniteGroupoid::new(order, IdxSet::singleton(e), src, rng, comp, inv, basis)
}

/// The pair groupoid on `k` objects: one arrow `(i, j)` from `j` to `i`
/// for every pair, with the discrete basis.
pub fn pair_groupoid(k: usize) -> FiniteGroupoid {
    let n = k * k;
    let arrow = |i: usize, j: usize| i * k + j;
    let mut objects = IdxSet::EMPTY;
    let mut src = vec![0; n];
    let mut rng = vec![0; n];
    let mut inv = vec![0; n];
    let mut comp = vec![None; n * n];
    for i in 0..k {
        objects.insert(arrow(i, i));
        for j in 0..k {
            src[arrow(i, j)] = arrow(j, j);
            rng[arrow(i, j)] = arrow(i, i);
            inv[arrow(i, j)] = arrow(j, i);
        }
    }
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                comp[arrow(i, j) * n + arrow(j, l)] = Some(arrow(i, l));
            }
        }
    }
    let basis = (0..n).map(IdxSet::singleton).collect();
    FiniteGroupoid::new(n, objects, src, rng, comp, inv, basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::TopGroup;
    use crate::spaces::FiniteSpace;

    fn z3_rotation() -> GroupAction {
        GroupAction::from_permutations(
            TopGroup::cyclic(3),
            FiniteSpace::discrete(3),
            vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
        )
    }

    #[test]
    fn group_as_one_object_groupoid_is_valid() {
        let g = group_as_groupoid(&TopGroup::cyclic(2));
        assert!(g.validate().is_empty());
        assert_eq!(g.objects().len(), 1);
    }

    #[test]
    fn pair_groupoid_is_valid() {
        let g = pair_groupoid(2);
        assert!(g.validate().is_empty());
        assert_eq!(g.n_arrows(), 4);
        assert_eq!(g.orbit_partition().blocks.len(), 1);
    }

    #[test]
    fn missing_composition_entry_is_named() {
        let mut g = pair_groupoid(2);
        g.comp[0] = None; // (0,0)∘(0,0) erased
        assert!(g
            .validate()
            .iter()
            .any(|v| v.rule == "composition-missing" || v.rule == "identity-neutral"));
    }

    #[test]
    fn action_groupoid_shapes() {
        let swap = GroupAction::from_permutations(
            TopGroup::cyclic(2),
            FiniteSpace::discrete(2),
            vec![vec![0, 1], vec![1, 0]],
        );
        let g = action_groupoid(&swap);
        assert_eq!(g.n_arrows(), 4);
        assert_eq!(g.objects().len(), 2);
        assert!(g.validate().is_empty());

        let idle = GroupAction::trivial(TopGroup::trivial(), FiniteSpace::discrete(3));
        let g = action_groupoid(&idle);
        assert_eq!(g.n_arrows(), 3);
        assert_eq!(g.objects().len(), 3);
    }

    #[test]
    fn action_groupoid_composition_unrolled() {
        let rot = z3_rotation();
        let g = action_groupoid(&rot);
        let n = 3;
        let arrow = |h: usize, z: usize| h * n + z;
        // (g,1)∘(g,0): the source point of the left factor must be the
        // image of the right factor; the composite applies the product.
        assert_eq!(g.compose(arrow(1, 1), arrow(1, 0)), Some(arrow(2, 0)));
    }

    #[test]
    fn orbit_partition_matches_action_orbits() {
        let rot = z3_rotation();
        let g = action_groupoid(&rot);
        let gp = g.orbit_partition();
        let ap = rot.orbit_partition();
        assert_eq!(gp.blocks.len(), ap.blocks.len());
    }

    #[test]
    fn disjoint_isotropy_copies_have_separate_orbits() {
        // Z2 acting trivially on two discrete points: the action groupoid
        // is a disjoint union of two copies of Z2, one per point.
        let idle = GroupAction::trivial(TopGroup::cyclic(2), FiniteSpace::discrete(2));
        let g = action_groupoid(&idle);
        let partition = g.orbit_partition();
        assert_eq!(partition.blocks.len(), 2);
        let iso = restrict_groupoid(&g, IdxSet::singleton(0));
        assert_eq!(iso.n_arrows(), 2); // the full Z2 survives as isotropy
        assert!(iso.validate().is_empty());
    }

    #[test]
    fn restriction_examples() {
        let g = pair_groupoid(3);
        let objs: Vec<usize> = g.objects().iter().collect();
        let small = restrict_groupoid(&g, IdxSet::from_indices([objs[0], objs[1]]));
        assert_eq!(small.n_arrows(), 4);
        assert!(small.validate().is_empty());

        let point = restrict_groupoid(&g, IdxSet::singleton(objs[2]));
        assert_eq!(point.n_arrows(), 1); // isotropy of the pair groupoid is trivial

        // Restriction to all objects is the identity.
        let same = restrict_groupoid(&g, g.objects());
        assert_eq!(same, g);

        // Restricting the swap action groupoid to one point kills the swap
        // arrows.
        let swap = GroupAction::from_permutations(
            TopGroup::cyclic(2),
            FiniteSpace::discrete(2),
            vec![vec![0, 1], vec![1, 0]],
        );
        let ag = action_groupoid(&swap);
        let one = restrict_groupoid(&ag, IdxSet::singleton(0));
        assert_eq!(one.n_arrows(), 1);
        assert_eq!(one.orbit_partition().blocks.len(), 1);
    }

    #[test]
    fn inversion_is_an_involution_swapping_endpoints() {
        for g in [pair_groupoid(3), action_groupoid(&z3_rotation())] {
            for a in 0..g.n_arrows() {
                let i = g.inverse(a);
                assert_eq!(g.inverse(i), a);
                assert_eq!(g.src(i), g.rng(a));
                assert_eq!(g.rng(i), g.src(a));
            }
        }
    }

    #[test]
    fn local_orbit_examples() {
        let rot = z3_rotation();
        let g = action_groupoid(&rot);
        let x = 0; // object (e, 0)

        // Whole arrow space: the full orbit.
        let everything = IdxSet::full(g.n_arrows());
        assert_eq!(groupoid_local_orbit(&g, x, everything), g.objects());

        // Objects only: no non-identity arrows to follow.
        assert_eq!(groupoid_local_orbit(&g, x, g.objects()), IdxSet::singleton(x));

        // Rectangle {e,g} × {0,1}: the walk 0 -> 1 stays inside, 1 -> 2
        // leaves the window.
        let n = 3;
        let arrow = |h: usize, z: usize| h * n + z;
        let rect = IdxSet::from_indices([arrow(0, 0), arrow(0, 1), arrow(1, 0), arrow(1, 1)]);
        let lo = groupoid_local_orbit(&g, x, rect);
        assert_eq!(lo, IdxSet::from_indices([arrow(0, 0), arrow(0, 1)]));
    }

    #[test]
    fn coarse_chain_breaks_openness_of_inversion() {
        // With the indiscrete chain on Z2 the swap groupoid's rectangles
        // cannot make inversion open; the validator reports it as data.
        let z2 = TopGroup::cyclic(2).with_chain(vec![IdxSet::full(2)]);
        let swap = GroupAction::from_permutations(
            z2,
            FiniteSpace::discrete(2),
            vec![vec![0, 1], vec![1, 0]],
        );
        let g = action_groupoid(&swap);
        assert!(g.validate().iter().any(|v| v.rule == "inversion-open"));
    }
}
