//! Concrete instance families with independent brute-force oracles: finite
//! relational structures under the logic action (atomic fragment), finite
//! injective sequences under index permutation, and diagonal unitaries with
//! symbolic eigenvalue labels.

use std::collections::BTreeSet;

use itertools::Itertools;
use thiserror::Error;

use crate::arena_build::ArenaBuilder;
use crate::solver::{solve_closed_game, Player};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("structures have different languages")]
    LanguageMismatch,
    #[error("sequence is not injective")]
    NotInjective,
    #[error("sequences have different lengths")]
    LengthMismatch,
}

/// One interpreted relation symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub arity: usize,
    pub tuples: BTreeSet<Vec<usize>>,
}

/// A finite relational structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelStructure {
    pub universe_size: usize,
    pub relations: Vec<Relation>,
}

impl RelStructure {
    pub fn new(universe_size: usize, relations: Vec<Relation>) -> RelStructure {
        for r in &relations {
            for t in &r.tuples {
                assert_eq!(t.len(), r.arity, "tuple arity mismatch in {}", r.name);
                for &v in t {
                    assert!(v < universe_size, "tuple entry {v} outside the universe");
                }
            }
        }
        RelStructure {
            universe_size,
            relations,
        }
    }

    /// A structure with one binary relation `E`.
    pub fn binary(universe_size: usize, edges: &[(usize, usize)]) -> RelStructure {
        let tuples = edges.iter().map(|&(a, b)| vec![a, b]).collect();
        RelStructure::new(
            universe_size,
            vec![Relation {
                name: "E".to_string(),
                arity: 2,
                tuples,
            }],
        )
    }

    pub fn language(&self) -> Vec<(&str, usize)> {
        self.relations
            .iter()
            .map(|r| (r.name.as_str(), r.arity))
            .collect()
    }

    pub fn same_language(&self, other: &RelStructure) -> bool {
        self.language() == other.language()
    }
}

fn all_tuples(universe: usize, arity: usize) -> Vec<Vec<usize>> {
    std::iter::repeat_n(0..universe, arity)
        .multi_cartesian_product()
        .collect()
}

/// Whether a map defined on `0..map.len()` preserves and reflects every
/// relation on tuples drawn from its domain.
fn partial_map_consistent(a: &RelStructure, b: &RelStructure, map: &[usize]) -> bool {
    for (ra, rb) in a.relations.iter().zip(&b.relations) {
        for t in all_tuples(map.len(), ra.arity) {
            let image: Vec<usize> = t.iter().map(|&i| map[i]).collect();
            if ra.tuples.contains(&t) != rb.tuples.contains(&image) {
                return false;
            }
        }
    }
    true
}

/// Brute-force search for an embedding (an injective map preserving and
/// reflecting every relation); returns the first injection in
/// lexicographic order.
pub fn f_embedding_exists(
    a: &RelStructure,
    b: &RelStructure,
) -> Result<Option<Vec<usize>>, ModelError> {
    if !a.same_language(b) {
        return Err(ModelError::LanguageMismatch);
    }
    if a.universe_size > b.universe_size {
        return Ok(None);
    }
    Ok((0..b.universe_size)
        .permutations(a.universe_size)
        .find(|inj| partial_map_consistent(a, b, inj)))
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum ExtendKey {
    Demand(Vec<usize>),
    Extend(Vec<usize>),
}

/// Solves the one-sided extension game: Player I demands the next element
/// of the left universe, Player II answers with an image, and any
/// consistency breach strands Player II. Player I runs out of demands
/// exactly when the map is total.
fn extension_game_value(
    n_left: usize,
    n_right: usize,
    legal: impl Fn(&[usize], usize) -> bool,
) -> bool {
    let mut b: ArenaBuilder<ExtendKey> = ArenaBuilder::new();
    let initial = b.intern(
        ExtendKey::Demand(Vec::new()),
        Player::I,
        true,
        "start".to_string(),
    );
    let mut cursor = 0;
    while cursor < b.len() {
        match b.key(cursor).clone() {
            ExtendKey::Demand(map) => {
                if map.len() < n_left {
                    let to = b.intern(
                        ExtendKey::Extend(map.clone()),
                        Player::II,
                        true,
                        format!("extend past {} elements", map.len()),
                    );
                    b.add_move(cursor, to);
                }
            }
            ExtendKey::Extend(map) => {
                for img in 0..n_right {
                    if !legal(&map, img) {
                        continue;
                    }
                    let mut next = map.clone();
                    next.push(img);
                    let label = format!("mapped {} elements", next.len());
                    let to = b.intern(ExtendKey::Demand(next), Player::I, true, label);
                    b.add_move(cursor, to);
                }
            }
        }
        cursor += 1;
    }
    solve_closed_game(&b.finish(initial)).ii_wins()
}

/// Game formulation of embeddability: rounds extend a partial injective
/// atomic-preserving-and-reflecting map element by element. Coincides with
/// [`f_embedding_exists`].
pub fn logic_becker_game(a: &RelStructure, b: &RelStructure) -> Result<bool, ModelError> {
    if !a.same_language(b) {
        return Err(ModelError::LanguageMismatch);
    }
    Ok(extension_game_value(
        a.universe_size,
        b.universe_size,
        |map, img| {
            if map.contains(&img) {
                return false;
            }
            let mut next = map.to_vec();
            next.push(img);
            partial_map_consistent(a, b, &next)
        },
    ))
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum BnfKey {
    /// Player I picks any element of either structure.
    Demand(Vec<(usize, usize)>),
    /// Player II answers the demanded element (side: false = left).
    Respond(Vec<(usize, usize)>, bool, usize),
}

/// Whether a set of matched pairs is a partial isomorphism.
fn pairs_consistent(a: &RelStructure, b: &RelStructure, pairs: &[(usize, usize)]) -> bool {
    // Injective in both coordinates.
    for (i, &(x1, y1)) in pairs.iter().enumerate() {
        for &(x2, y2) in &pairs[i + 1..] {
            if x1 == x2 || y1 == y2 {
                return false;
            }
        }
    }
    let dom: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    for (ra, rb) in a.relations.iter().zip(&b.relations) {
        for idx in all_tuples(pairs.len(), ra.arity) {
            let t: Vec<usize> = idx.iter().map(|&i| dom[i]).collect();
            let image: Vec<usize> = idx.iter().map(|&i| pairs[i].1).collect();
            if ra.tuples.contains(&t) != rb.tuples.contains(&image) {
                return false;
            }
        }
    }
    true
}

/// Unbounded back-and-forth game on two finite structures: Player I
/// challenges with an element of either side, Player II matches it. Player
/// II wins the endless game exactly when the structures are isomorphic.
pub fn logic_hjorth_game(a: &RelStructure, b: &RelStructure) -> Result<bool, ModelError> {
    if !a.same_language(b) {
        return Err(ModelError::LanguageMismatch);
    }
    let mut builder: ArenaBuilder<BnfKey> = ArenaBuilder::new();
    let initial = builder.intern(
        BnfKey::Demand(Vec::new()),
        Player::I,
        true,
        "start".to_string(),
    );
    let mut cursor = 0;
    while cursor < builder.len() {
        match builder.key(cursor).clone() {
            BnfKey::Demand(pairs) => {
                for elt in 0..a.universe_size {
                    let to = builder.intern(
                        BnfKey::Respond(pairs.clone(), false, elt),
                        Player::II,
                        true,
                        format!("match left element {elt}"),
                    );
                    builder.add_move(cursor, to);
                }
                for elt in 0..b.universe_size {
                    let to = builder.intern(
                        BnfKey::Respond(pairs.clone(), true, elt),
                        Player::II,
                        true,
                        format!("match right element {elt}"),
                    );
                    builder.add_move(cursor, to);
                }
            }
            BnfKey::Respond(pairs, side, elt) => {
                let n_other = if side { a.universe_size } else { b.universe_size };
                for partner in 0..n_other {
                    let pair = if side { (partner, elt) } else { (elt, partner) };
                    let mut next = pairs.clone();
                    if !next.contains(&pair) {
                        next.push(pair);
                        next.sort_unstable();
                    }
                    if !pairs_consistent(a, b, &next) {
                        continue;
                    }
                    let to = builder.intern(
                        BnfKey::Demand(next),
                        Player::I,
                        true,
                        "matched".to_string(),
                    );
                    builder.add_move(cursor, to);
                }
            }
        }
        cursor += 1;
    }
    Ok(solve_closed_game(&builder.finish(initial)).ii_wins())
}

/// Brute-force isomorphism search.
pub fn brute_force_isomorphic(a: &RelStructure, b: &RelStructure) -> Result<bool, ModelError> {
    if !a.same_language(b) {
        return Err(ModelError::LanguageMismatch);
    }
    if a.universe_size != b.universe_size {
        return Ok(false);
    }
    Ok((0..b.universe_size)
        .permutations(a.universe_size)
        .any(|f| partial_map_consistent(a, b, &f)))
}

/// Every structure with one binary relation `E` on the given universe, in
/// the order of their edge bitmasks.
pub fn all_binary_structures(universe: usize) -> Vec<RelStructure> {
    let pairs = all_tuples(universe, 2);
    let count = 1usize << pairs.len();
    (0..count)
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, t)| (t[0], t[1]))
                .collect();
            RelStructure::binary(universe, &edges)
        })
        .collect()
}

/// A finite sequence over a finite alphabet of symbolic letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeqInstance {
    entries: Vec<u8>,
}

impl SeqInstance {
    pub fn new(entries: Vec<u8>) -> SeqInstance {
        SeqInstance { entries }
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = [false; 256];
        for &e in &self.entries {
            if seen[e as usize] {
                return false;
            }
            seen[e as usize] = true;
        }
        true
    }

    pub fn range(&self) -> BTreeSet<u8> {
        self.entries.iter().copied().collect()
    }
}

/// Equality of ranges: the finite form of the jump of equality.
pub fn eq_plus(x: &SeqInstance, y: &SeqInstance) -> bool {
    x.range() == y.range()
}

/// Range containment for injective sequences.
pub fn ran_subset(x: &SeqInstance, y: &SeqInstance) -> Result<bool, ModelError> {
    if !x.is_injective() || !y.is_injective() {
        return Err(ModelError::NotInjective);
    }
    Ok(x.range().is_subset(&y.range()))
}

/// Drops the head of the sequence.
pub fn shift(y: &SeqInstance) -> SeqInstance {
    SeqInstance::new(y.entries.iter().skip(1).copied().collect())
}

/// Game formulation of the sequence embedding: Player I demands agreement
/// on the next coordinate of `x`, Player II supplies a fresh coordinate of
/// `y` carrying the same letter. Coincides with [`ran_subset`].
pub fn symbolic_becker_seq(x: &SeqInstance, y: &SeqInstance) -> Result<bool, ModelError> {
    if !x.is_injective() || !y.is_injective() {
        return Err(ModelError::NotInjective);
    }
    let xs = x.entries.clone();
    let ys = y.entries.clone();
    Ok(extension_game_value(xs.len(), ys.len(), |map, img| {
        !map.contains(&img) && ys[img] == xs[map.len()]
    }))
}

/// All injective sequences of length up to `max_len` over the first
/// `alphabet` letters, shortest first, lexicographic within a length.
pub fn injective_sequences(max_len: usize, alphabet: u8) -> Vec<SeqInstance> {
    let mut out = vec![SeqInstance::new(Vec::new())];
    for len in 1..=max_len {
        for combo in (0..alphabet).permutations(len) {
            out.push(SeqInstance::new(combo));
        }
    }
    out
}

/// A diagonal operator with symbolic eigenvalue labels standing for
/// distinct unit scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagUnitary {
    pub dim: usize,
    pub eigenvalues: Vec<u8>,
}

impl DiagUnitary {
    pub fn from_seq(seq: &SeqInstance) -> DiagUnitary {
        DiagUnitary {
            dim: seq.len(),
            eigenvalues: seq.entries().to_vec(),
        }
    }
}

/// Searches for a permutation matrix conjugating one diagonal operator
/// into the other; purely symbolic, so the selfadjoint reading (labels as
/// reals) is the same computation.
pub fn permutation_conjugate(a: &DiagUnitary, b: &DiagUnitary) -> Option<Vec<usize>> {
    if a.dim != b.dim {
        return None;
    }
    (0..a.dim)
        .permutations(a.dim)
        .find(|sigma| (0..a.dim).all(|i| b.eigenvalues[i] == a.eigenvalues[sigma[i]]))
}

/// Joint verdict of the jump relation and unitary conjugacy on the
/// diagonal operators built from two label sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagReductionCheck {
    pub eq_plus: bool,
    pub conjugate: bool,
    pub agree: bool,
}

pub fn diag_reduction_check(
    lambda: &SeqInstance,
    mu: &SeqInstance,
) -> Result<DiagReductionCheck, ModelError> {
    if !lambda.is_injective() || !mu.is_injective() {
        return Err(ModelError::NotInjective);
    }
    if lambda.len() != mu.len() {
        return Err(ModelError::LengthMismatch);
    }
    let eq = eq_plus(lambda, mu);
    let conjugate = permutation_conjugate(
        &DiagUnitary::from_seq(lambda),
        &DiagUnitary::from_seq(mu),
    )
    .is_some();
    Ok(DiagReductionCheck {
        eq_plus: eq,
        conjugate,
        agree: eq == conjugate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge() -> RelStructure {
        RelStructure::binary(2, &[(0, 1), (1, 0)])
    }

    fn triangle() -> RelStructure {
        RelStructure::binary(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)])
    }

    fn path2() -> RelStructure {
        RelStructure::binary(3, &[(0, 1), (1, 0), (1, 2), (2, 1)])
    }

    #[test]
    fn embedding_examples() {
        assert!(f_embedding_exists(&edge(), &triangle()).unwrap().is_some());
        assert!(f_embedding_exists(&triangle(), &edge()).unwrap().is_none());
        assert!(f_embedding_exists(&edge(), &edge()).unwrap().is_some());
    }

    #[test]
    fn language_mismatch_is_an_error() {
        let unary = RelStructure::new(
            2,
            vec![Relation {
                name: "P".to_string(),
                arity: 1,
                tuples: BTreeSet::new(),
            }],
        );
        assert_eq!(
            f_embedding_exists(&edge(), &unary),
            Err(ModelError::LanguageMismatch)
        );
    }

    #[test]
    fn becker_game_examples() {
        assert!(logic_becker_game(&edge(), &triangle()).unwrap());
        let two_edges = RelStructure::binary(4, &[(0, 1), (1, 0), (2, 3), (3, 2)]);
        assert!(!logic_becker_game(&two_edges, &edge()).unwrap());
        let empty = RelStructure::binary(0, &[]);
        assert!(logic_becker_game(&empty, &triangle()).unwrap());
    }

    #[test]
    fn hjorth_game_examples() {
        assert!(logic_hjorth_game(&triangle(), &triangle()).unwrap());
        assert!(!logic_hjorth_game(&path2(), &triangle()).unwrap());
        // Isomorphic structures embed both ways.
        let renamed = RelStructure::binary(2, &[(1, 0), (0, 1)]);
        assert!(logic_hjorth_game(&edge(), &renamed).unwrap());
        assert!(logic_becker_game(&edge(), &renamed).unwrap());
        assert!(logic_becker_game(&renamed, &edge()).unwrap());
    }

    #[test]
    fn game_matches_brute_force_on_small_structures() {
        let all2 = all_binary_structures(2);
        for a in &all2 {
            for b in &all2 {
                assert_eq!(
                    logic_becker_game(a, b).unwrap(),
                    f_embedding_exists(a, b).unwrap().is_some()
                );
                assert_eq!(
                    logic_hjorth_game(a, b).unwrap(),
                    brute_force_isomorphic(a, b).unwrap()
                );
            }
        }
    }

    fn seq(s: &[u8]) -> SeqInstance {
        SeqInstance::new(s.to_vec())
    }

    #[test]
    fn sequence_examples() {
        assert!(eq_plus(&seq(&[0, 1]), &seq(&[1, 0])));
        assert!(!eq_plus(&seq(&[0, 1]), &seq(&[0, 1, 2])));
        assert!(ran_subset(&seq(&[0, 1]), &seq(&[0, 1, 2])).unwrap());
        assert!(!ran_subset(&seq(&[0, 2]), &seq(&[0, 1])).unwrap());
        assert_eq!(
            ran_subset(&seq(&[0, 0]), &seq(&[0, 1])),
            Err(ModelError::NotInjective)
        );
    }

    #[test]
    fn shift_drops_the_head() {
        let y = seq(&[3, 1, 4]);
        assert_eq!(shift(&y), seq(&[1, 4]));
        assert!(ran_subset(&shift(&y), &y).unwrap());
        assert!(!eq_plus(&shift(&y), &y));
        assert!(symbolic_becker_seq(&shift(&y), &y).unwrap());
    }

    #[test]
    fn symbolic_game_examples() {
        assert!(symbolic_becker_seq(&seq(&[0, 1]), &seq(&[0, 1])).unwrap());
        assert!(!symbolic_becker_seq(&seq(&[0, 5]), &seq(&[0, 1, 2])).unwrap());
        let all = injective_sequences(3, 4);
        for x in &all {
            for y in &all {
                assert_eq!(
                    symbolic_becker_seq(x, y).unwrap(),
                    ran_subset(x, y).unwrap(),
                    "x={:?} y={:?}",
                    x.entries(),
                    y.entries()
                );
            }
        }
    }

    #[test]
    fn diag_examples() {
        let r = diag_reduction_check(&seq(&[0, 1]), &seq(&[1, 0])).unwrap();
        assert!(r.eq_plus && r.conjugate && r.agree);
        let r = diag_reduction_check(&seq(&[0, 1]), &seq(&[0, 2])).unwrap();
        assert!(!r.eq_plus && !r.conjugate && r.agree);
        let r = diag_reduction_check(&seq(&[0, 1, 2]), &seq(&[0, 1, 2])).unwrap();
        assert!(r.eq_plus && r.conjugate && r.agree);
        assert_eq!(
            diag_reduction_check(&seq(&[0]), &seq(&[0, 1])),
            Err(ModelError::LengthMismatch)
        );
    }

    #[test]
    fn eq_plus_is_two_sided_containment() {
        let all = injective_sequences(3, 4);
        for x in &all {
            for y in &all {
                assert_eq!(
                    eq_plus(x, y),
                    ran_subset(x, y).unwrap() && ran_subset(y, x).unwrap()
                );
            }
        }
    }
}
