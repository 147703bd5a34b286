//! Orbit-quotient graphs, graph homomorphism checking, and the executable
//! obstruction criterion.

use crate::actions::GroupAction;
use crate::becker::{becker_embeddable, groupoid_becker_embeddable};
use crate::groupoids::FiniteGroupoid;
use crate::hjorth::hjorth_isomorphic;
use crate::sets::IdxSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Becker,
    Hjorth,
}

impl std::fmt::Display for GraphKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphKind::Becker => write!(f, "becker"),
            GraphKind::Hjorth => write!(f, "hjorth"),
        }
    }
}

/// Graph on orbit blocks: directed edges for the Becker preorder,
/// unordered edges (stored with the smaller endpoint first) plus loops for
/// the Hjorth relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitQuotientGraph {
    pub kind: GraphKind,
    /// Orbit blocks sorted by least representative.
    pub vertices: Vec<IdxSet>,
    pub edges: Vec<(usize, usize)>,
}

impl OrbitQuotientGraph {
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match self.kind {
            GraphKind::Becker => self.edges.contains(&(u, v)),
            GraphKind::Hjorth => self.edges.contains(&(u.min(v), u.max(v))),
        }
    }

    /// True when every edge is a loop.
    pub fn loops_only(&self) -> bool {
        self.edges.iter().all(|&(u, v)| u == v)
    }

    /// True when every pair of vertices (including each with itself) is
    /// connected.
    pub fn is_complete(&self) -> bool {
        let k = self.vertices.len();
        (0..k).all(|u| (u..k).all(|v| self.has_edge(u, v)))
    }

    /// Least representative of each vertex.
    pub fn representatives(&self) -> Vec<usize> {
        self.vertices.iter().map(|b| b.first().unwrap()).collect()
    }
}

/// Point-level verdict matrix, then collapse to orbits. Panics if verdicts
/// fail to be constant on orbit blocks, which orbit invariance rules out.
fn quotient_graph(
    action: &GroupAction,
    kind: GraphKind,
    verdict: impl Fn(usize, usize) -> bool,
) -> OrbitQuotientGraph {
    let n = action.space().n_points();
    let partition = action.orbit_partition();
    let mut matrix = vec![vec![false; n]; n];
    for (x, row) in matrix.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            *cell = verdict(x, y);
        }
    }
    for x in 0..n {
        for y in 0..n {
            let (bx, by) = (partition.block_of[x], partition.block_of[y]);
            let (rx, ry) = (
                partition.blocks[bx].first().unwrap(),
                partition.blocks[by].first().unwrap(),
            );
            assert_eq!(
                matrix[x][y], matrix[rx][ry],
                "verdict not orbit-invariant at ({x},{y})"
            );
            if kind == GraphKind::Hjorth {
                assert_eq!(matrix[x][y], matrix[y][x], "verdict not symmetric at ({x},{y})");
            }
        }
    }
    let k = partition.blocks.len();
    let mut edges = Vec::new();
    for u in 0..k {
        let ru = partition.blocks[u].first().unwrap();
        for v in 0..k {
            if kind == GraphKind::Hjorth && v < u {
                continue;
            }
            let rv = partition.blocks[v].first().unwrap();
            if matrix[ru][rv] {
                edges.push((u, v));
            }
        }
    }
    OrbitQuotientGraph {
        kind,
        vertices: partition.blocks,
        edges,
    }
}

/// Directed graph of the Becker embeddability preorder on orbits.
pub fn becker_digraph(action: &GroupAction) -> OrbitQuotientGraph {
    quotient_graph(action, GraphKind::Becker, |x, y| {
        becker_embeddable(action, x, y).ii_wins
    })
}

/// Undirected graph of the Hjorth isomorphism relation on orbits.
pub fn hjorth_graph(action: &GroupAction) -> OrbitQuotientGraph {
    quotient_graph(action, GraphKind::Hjorth, |x, y| {
        hjorth_isomorphic(action, x, y).ii_wins
    })
}

/// Checks that a vertex map sends every edge to an edge; on failure returns
/// the first violating edge of the source graph.
pub fn quotient_homomorphism_check(
    map: &[usize],
    g1: &OrbitQuotientGraph,
    g2: &OrbitQuotientGraph,
) -> Result<(), (usize, usize)> {
    assert_eq!(g1.kind, g2.kind, "graph kinds must match");
    assert_eq!(map.len(), g1.vertices.len(), "map must be total on vertices");
    for &m in map {
        assert!(m < g2.vertices.len(), "map image out of range");
    }
    for &(u, v) in &g1.edges {
        if !g2.has_edge(map[u], map[v]) {
            return Err((u, v));
        }
    }
    Ok(())
}

/// One enumerated invariant dense set together with its witness pair, if
/// any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionCase {
    /// Indices of the orbit blocks making up the set.
    pub orbit_indices: Vec<usize>,
    /// The union of those blocks.
    pub points: IdxSet,
    /// A pair `(x, y)` in the set with different orbits and `x` Becker
    /// embeddable into `y`; `None` when the set defeats the criterion.
    pub witness: Option<(usize, usize)>,
}

/// Result of the obstruction criterion: the verdict holds when every
/// invariant dense set of points carries a cross-orbit Becker edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub verdict: bool,
    pub cases: Vec<ObstructionCase>,
}

fn obstruction_over(
    blocks: &[IdxSet],
    is_dense: impl Fn(IdxSet) -> bool,
    embeddable: impl Fn(usize, usize) -> bool,
) -> ObstructionReport {
    let k = blocks.len();
    assert!(k <= 16, "too many orbits to enumerate invariant sets");
    let mut cases = Vec::new();
    let mut verdict = true;
    for mask in 1u32..(1 << k) {
        let orbit_indices: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let points = orbit_indices
            .iter()
            .fold(IdxSet::EMPTY, |acc, &i| acc.union(blocks[i]));
        if !is_dense(points) {
            continue;
        }
        let mut witness = None;
        'search: for x in points.iter() {
            for y in points.iter() {
                let same_orbit = orbit_indices
                    .iter()
                    .any(|&i| blocks[i].contains(x) && blocks[i].contains(y));
                if !same_orbit && embeddable(x, y) {
                    witness = Some((x, y));
                    break 'search;
                }
            }
        }
        if witness.is_none() {
            verdict = false;
        }
        cases.push(ObstructionCase {
            orbit_indices,
            points,
            witness,
        });
    }
    ObstructionReport { verdict, cases }
}

/// Enumerates every invariant dense subset (a union of orbits that is
/// dense) and reports, per subset, a cross-orbit Becker-embeddable pair or
/// its absence.
pub fn cli_obstruction_check(action: &GroupAction) -> ObstructionReport {
    let partition = action.orbit_partition();
    let n = action.space().n_points();
    let verdicts: Vec<Vec<bool>> = (0..n)
        .map(|x| (0..n).map(|y| becker_embeddable(action, x, y).ii_wins).collect())
        .collect();
    obstruction_over(
        &partition.blocks,
        |c| action.space().is_dense(c),
        |x, y| verdicts[x][y],
    )
}

/// The groupoid form of the criterion: invariant dense object sets,
/// density measured against the traces of basic arrow sets on the objects.
pub fn groupoid_obstruction_check(g: &FiniteGroupoid) -> ObstructionReport {
    let partition = g.orbit_partition();
    let traces: Vec<IdxSet> = g
        .basis()
        .iter()
        .map(|b| b.inter(g.objects()))
        .collect();
    let objects: Vec<usize> = g.objects().iter().collect();
    let mut verdicts = std::collections::HashMap::new();
    for &x in &objects {
        for &y in &objects {
            verdicts.insert((x, y), groupoid_becker_embeddable(g, x, y));
        }
    }
    obstruction_over(
        &partition.blocks,
        |c| traces.iter().all(|t| t.is_empty() || t.intersects(c)),
        |x, y| verdicts[&(x, y)],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::TopGroup;
    use crate::spaces::FiniteSpace;

    fn trivial_on(space: FiniteSpace) -> GroupAction {
        GroupAction::trivial(TopGroup::trivial(), space)
    }

    #[test]
    fn discrete_trivial_graphs_are_loops_only() {
        let action = trivial_on(FiniteSpace::discrete(3));
        let b = becker_digraph(&action);
        assert_eq!(b.vertices.len(), 3);
        assert!(b.loops_only());
        assert_eq!(b.edges.len(), 3);
        let h = hjorth_graph(&action);
        assert!(h.loops_only());
    }

    #[test]
    fn sierpinski_becker_digraph_has_one_extra_edge() {
        let action = trivial_on(FiniteSpace::sierpinski());
        let b = becker_digraph(&action);
        assert_eq!(b.edges, vec![(0, 0), (0, 1), (1, 1)]);
    }

    #[test]
    fn indiscrete_hjorth_graph_is_complete() {
        let action = trivial_on(FiniteSpace::indiscrete(2));
        let h = hjorth_graph(&action);
        assert_eq!(h.vertices.len(), 2);
        assert!(h.is_complete());
        assert!(h.has_edge(0, 1));
    }

    #[test]
    fn every_vertex_carries_a_loop() {
        // Reflexivity makes an edgeless quotient graph impossible.
        for space in [
            FiniteSpace::discrete(3),
            FiniteSpace::sierpinski(),
            FiniteSpace::indiscrete(3),
        ] {
            let action = trivial_on(space);
            for graph in [becker_digraph(&action), hjorth_graph(&action)] {
                for v in 0..graph.vertices.len() {
                    assert!(graph.has_edge(v, v));
                }
            }
        }
    }

    #[test]
    fn homomorphism_check_examples() {
        let action = trivial_on(FiniteSpace::sierpinski());
        let b = becker_digraph(&action);
        // Identity map is a homomorphism.
        assert_eq!(quotient_homomorphism_check(&[0, 1], &b, &b), Ok(()));
        // Collapsing onto a loops-only graph breaks the cross edge.
        let loops_only = OrbitQuotientGraph {
            kind: GraphKind::Becker,
            vertices: b.vertices.clone(),
            edges: vec![(0, 0), (1, 1)],
        };
        assert_eq!(
            quotient_homomorphism_check(&[0, 1], &b, &loops_only),
            Err((0, 1))
        );
        // Any map into a clique works.
        let clique = OrbitQuotientGraph {
            kind: GraphKind::Becker,
            vertices: b.vertices.clone(),
            edges: vec![(0, 0), (0, 1), (1, 0), (1, 1)],
        };
        assert_eq!(quotient_homomorphism_check(&[1, 0], &b, &clique), Ok(()));
    }

    #[test]
    fn sierpinski_obstruction_fails_on_the_open_orbit() {
        let action = trivial_on(FiniteSpace::sierpinski());
        let report = cli_obstruction_check(&action);
        assert!(!report.verdict);
        // {1} alone is dense and carries no cross-orbit pair.
        let failing: Vec<&ObstructionCase> =
            report.cases.iter().filter(|c| c.witness.is_none()).collect();
        assert_eq!(failing.len(), 1);
        assert_eq!(failing[0].points, IdxSet::singleton(1));
        // The full space does carry the witness.
        let full = report
            .cases
            .iter()
            .find(|c| c.points == IdxSet::full(2))
            .unwrap();
        assert_eq!(full.witness, Some((0, 1)));
    }

    #[test]
    fn discrete_hausdorff_obstruction_is_false() {
        let action = trivial_on(FiniteSpace::discrete(2));
        let report = cli_obstruction_check(&action);
        assert!(!report.verdict);
    }

    #[test]
    fn groupoid_obstruction_matches_action_on_sierpinski() {
        let action = trivial_on(FiniteSpace::sierpinski());
        let g = crate::groupoids::action_groupoid(&action);
        let report = groupoid_obstruction_check(&g);
        assert!(!report.verdict);
    }
}
