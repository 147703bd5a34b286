//! Finite groups carrying a descending identity-neighborhood chain.
//!
//! The chain `V_0 ⊇ V_1 ⊇ … ⊇ V_m` stands in for a neighborhood basis of
//! the identity; the group is Hausdorff exactly when the chain reaches the
//! singleton `{identity}`.

use crate::sets::IdxSet;
use crate::validate::Violation;

/// A finite group given by its multiplication table plus a filter chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopGroup {
    order: usize,
    /// Row-major: `mult[g * order + h] = g·h`.
    mult: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
    filter_chain: Vec<IdxSet>,
}

impl TopGroup {
    pub fn new(
        order: usize,
        mult: Vec<usize>,
        identity: usize,
        inv: Vec<usize>,
        filter_chain: Vec<IdxSet>,
    ) -> TopGroup {
        assert!(order <= crate::sets::MAX_INDEX);
        assert_eq!(mult.len(), order * order, "mult table must be order×order");
        assert_eq!(inv.len(), order, "inverse table must have one entry per element");
        assert!(identity < order.max(1), "identity out of range");
        for &v in &mult {
            assert!(v < order, "mult entry {v} out of range");
        }
        for &v in &inv {
            assert!(v < order, "inv entry {v} out of range");
        }
        let full = IdxSet::full(order);
        for v in &filter_chain {
            assert!(v.is_subset(full), "chain element {v} out of range");
        }
        TopGroup {
            order,
            mult,
            identity,
            inv,
            filter_chain,
        }
    }

    /// Derives identity and inverses from the table. Panics if the table is
    /// not a group; intended for the built-in constructors.
    pub fn from_mult_table(order: usize, mult: Vec<usize>, filter_chain: Vec<IdxSet>) -> TopGroup {
        assert_eq!(mult.len(), order * order);
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| mult[e * order + g] == g && mult[g * order + e] == g))
            .expect("table has no identity");
        let inv = (0..order)
            .map(|g| {
                (0..order)
                    .find(|&h| mult[g * order + h] == identity && mult[h * order + g] == identity)
                    .expect("element has no inverse")
            })
            .collect();
        TopGroup::new(order, mult, identity, inv, filter_chain)
    }

    /// The one-element group.
    pub fn trivial() -> TopGroup {
        TopGroup::from_mult_table(1, vec![0], vec![IdxSet::singleton(0)])
    }

    /// Cyclic group of order `k` with the discrete (Hausdorff) chain.
    pub fn cyclic(k: usize) -> TopGroup {
        let mut mult = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                mult[i * k + j] = (i + j) % k;
            }
        }
        TopGroup::from_mult_table(k, mult, default_chain(k))
    }

    /// Z2 × Z2 with elements numbered 0=(0,0), 1=(1,0), 2=(0,1), 3=(1,1).
    pub fn klein_four() -> TopGroup {
        let mut mult = vec![0; 16];
        for i in 0..4 {
            for j in 0..4 {
                mult[i * 4 + j] = i ^ j;
            }
        }
        TopGroup::from_mult_table(4, mult, default_chain(4))
    }

    /// Symmetric group on three letters; elements are the permutations of
    /// `{0,1,2}` in lexicographic one-line order, composed as
    /// `(g·h)(i) = g(h(i))`.
    pub fn symmetric3() -> TopGroup {
        let perms = s3_permutations();
        let mut mult = vec![0; 36];
        for (gi, g) in perms.iter().enumerate() {
            for (hi, h) in perms.iter().enumerate() {
                let composed = [g[h[0]], g[h[1]], g[h[2]]];
                let k = perms.iter().position(|p| *p == composed).unwrap();
                mult[gi * 6 + hi] = k;
            }
        }
        TopGroup::from_mult_table(6, mult, default_chain(6))
    }

    /// Same group, different chain.
    pub fn with_chain(&self, filter_chain: Vec<IdxSet>) -> TopGroup {
        TopGroup::new(
            self.order,
            self.mult.clone(),
            self.identity,
            self.inv.clone(),
            filter_chain,
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mult[g * self.order + h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn elements(&self) -> IdxSet {
        IdxSet::full(self.order)
    }

    pub fn filter_chain(&self) -> &[IdxSet] {
        &self.filter_chain
    }

    /// Last (smallest) chain element.
    pub fn chain_last(&self) -> IdxSet {
        *self.filter_chain.last().expect("chain is nonempty")
    }

    /// Hausdorff means the chain reaches `{identity}`.
    pub fn is_hausdorff(&self) -> bool {
        self.filter_chain.last() == Some(&IdxSet::singleton(self.identity))
    }

    /// Group and chain invariant violations with witnessing tuples.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.order;
        if n == 0 {
            out.push(Violation::new("group", "nonempty", "group has no elements"));
            return out;
        }
        'assoc: for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    if self.mul(self.mul(g, h), k) != self.mul(g, self.mul(h, k)) {
                        out.push(Violation::new(
                            "group",
                            "associativity",
                            format!("(g,h,k)=({g},{h},{k})"),
                        ));
                        break 'assoc;
                    }
                }
            }
        }
        for g in 0..n {
            if self.mul(self.identity, g) != g || self.mul(g, self.identity) != g {
                out.push(Violation::new("group", "identity", format!("element {g}")));
            }
            if self.mul(g, self.inv[g]) != self.identity || self.mul(self.inv[g], g) != self.identity
            {
                out.push(Violation::new("group", "inverse", format!("element {g}")));
            }
        }
        if self.filter_chain.is_empty() {
            out.push(Violation::new("group", "chain-nonempty", "filter chain is empty"));
            return out;
        }
        if self.filter_chain[0] != self.elements() {
            out.push(Violation::new(
                "group",
                "chain-starts-full",
                format!("V_0 = {}", self.filter_chain[0]),
            ));
        }
        for (i, v) in self.filter_chain.iter().enumerate() {
            if !v.contains(self.identity) {
                out.push(Violation::new(
                    "group",
                    "chain-contains-identity",
                    format!("V_{i} = {v}"),
                ));
            }
            if i > 0 && !v.is_subset(self.filter_chain[i - 1]) {
                out.push(Violation::new(
                    "group",
                    "chain-descending",
                    format!("V_{i} not within V_{}", i - 1),
                ));
            }
        }
        out
    }
}

/// `[G, {identity}]`, collapsing to `[{identity}]` for the trivial group.
pub fn default_chain(order: usize) -> Vec<IdxSet> {
    // Identity is element 0 for every built-in constructor.
    if order <= 1 {
        vec![IdxSet::singleton(0)]
    } else {
        vec![IdxSet::full(order), IdxSet::singleton(0)]
    }
}

/// One-line forms of the six permutations of `{0,1,2}` in lex order.
pub fn s3_permutations() -> Vec<[usize; 3]> {
    vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_tables() {
        let z3 = TopGroup::cyclic(3);
        assert_eq!(z3.identity(), 0);
        assert_eq!(z3.mul(1, 2), 0);
        assert_eq!(z3.inverse(1), 2);
        assert!(z3.is_hausdorff());
        assert!(z3.violations().is_empty());
    }

    #[test]
    fn symmetric3_is_a_group() {
        let s3 = TopGroup::symmetric3();
        assert!(s3.violations().is_empty());
        assert_eq!(s3.order(), 6);
        // (01) then (12): first swap 0,1 then swap 1,2.
        let t01 = 2; // [1,0,2]
        let t12 = 1; // [0,2,1]
        let composed = s3.mul(t12, t01);
        // g(h(i)): h=[1,0,2], g=[0,2,1] -> [g(1),g(0),g(2)] = [2,0,1]
        assert_eq!(s3_permutations()[composed], [2, 0, 1]);
    }

    #[test]
    fn klein_four_involutions() {
        let v = TopGroup::klein_four();
        assert!(v.violations().is_empty());
        for g in 0..4 {
            assert_eq!(v.inverse(g), g);
        }
    }

    #[test]
    fn broken_associativity_reported() {
        // Corrupt one entry of Z3.
        let z3 = TopGroup::cyclic(3);
        let mut mult: Vec<usize> = (0..9).map(|i| z3.mul(i / 3, i % 3)).collect();
        mult[3 + 1] = 1; // 1·1 = 1 breaks the cyclic structure
        let broken = TopGroup::new(3, mult, 0, vec![0, 2, 1], default_chain(3));
        assert!(broken.violations().iter().any(|v| v.rule == "associativity"
            || v.rule == "inverse"));
    }

    #[test]
    fn chain_rules() {
        let z2 = TopGroup::cyclic(2);
        let bad = z2.with_chain(vec![IdxSet::singleton(0), IdxSet::full(2)]);
        assert!(bad.violations().iter().any(|v| v.rule == "chain-starts-full"
            || v.rule == "chain-descending"));
        let coarse = z2.with_chain(vec![IdxSet::full(2)]);
        assert!(coarse.violations().is_empty());
        assert!(!coarse.is_hausdorff());
    }
}
