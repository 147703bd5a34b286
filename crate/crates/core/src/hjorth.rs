//! The Hjorth isomorphism game.
//!
//! Two translated points `x_n`, `y_n` evolve in alternation. Player I
//! surrounds the current point of one side with a neighborhood pair
//! `(U, V)`; Player II answers on the opposite side by walking inside its
//! pending local orbit, and the walk must land in the neighborhood Player I
//! just demanded. The y-side starts unconstrained.
//!
//! Shrinking `U` shrinks both the landing demand and the local orbit it
//! feeds, and shrinking `V` shrinks the walk, so every Player I choice is
//! dominated by the minimal pair `(core_open(z), V_m)`. The reduced arena
//! fixes that choice; `full_choice` keeps the whole menu, and the two
//! arenas are checked to agree across the catalog.

use crate::actions::GroupAction;
use crate::arena_build::ArenaBuilder;
use crate::groupoids::{groupoid_local_orbit, FiniteGroupoid};
use crate::sets::IdxSet;
use crate::solver::{extract_strategy, solve_closed_game, Arena, Player, Strategy};
use crate::turbulence::local_orbit;

/// Outcome of one Hjorth game.
#[derive(Clone, Debug)]
pub struct HjorthVerdict {
    pub x: usize,
    pub y: usize,
    pub ii_wins: bool,
    pub strategy: Option<Strategy>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum HjorthKey {
    /// Player I to surround the x-side; `(uy, vy)` is pending for the
    /// upcoming y-move.
    ChooseX { x: usize, y: usize, uy: IdxSet, vy: usize },
    /// Player II to move the y-side inside its pending local orbit, landing
    /// in `ux`.
    MoveY {
        x: usize,
        y: usize,
        uy: IdxSet,
        vy: usize,
        ux: IdxSet,
        vx: usize,
    },
    /// Player I to surround the y-side; `(ux, vx)` pending for the x-move.
    ChooseY { x: usize, y: usize, ux: IdxSet, vx: usize },
    /// Player II to move the x-side, landing in `uy`.
    MoveX {
        x: usize,
        y: usize,
        ux: IdxSet,
        vx: usize,
        uy: IdxSet,
        vy: usize,
    },
}

fn menu(action: &GroupAction, z: usize, full_choice: bool) -> Vec<(IdxSet, usize)> {
    let space = action.space();
    let chain_len = action.group().filter_chain().len();
    if full_choice {
        space
            .basis()
            .iter()
            .filter(|b| b.contains(z))
            .flat_map(|u| (0..chain_len).map(move |v| (*u, v)))
            .collect()
    } else {
        vec![(space.core_open(z), chain_len - 1)]
    }
}

/// Builds the Hjorth arena for `Iso(x, y)`. Player II's moves are exactly
/// the members of the pending local orbit that land inside Player I's
/// demand, so a position with no legal landing is an immediate loss for
/// Player II.
pub fn hjorth_arena(action: &GroupAction, x: usize, y: usize, full_choice: bool) -> Arena {
    let n = action.space().n_points();
    assert!(x < n && y < n, "invalid points ({x}, {y})");
    let chain = action.group().filter_chain().to_vec();
    let everything = action.space().points();

    let mut b: ArenaBuilder<HjorthKey> = ArenaBuilder::new();
    let initial = b.intern(
        HjorthKey::ChooseX {
            x,
            y,
            uy: everything,
            vy: 0,
        },
        Player::I,
        true,
        format!("x={x}, y={y}; I surrounds x"),
    );
    let mut cursor = 0;
    while cursor < b.len() {
        match *b.key(cursor) {
            HjorthKey::ChooseX { x, y, uy, vy } => {
                for (ux, vx) in menu(action, x, full_choice) {
                    let to = b.intern(
                        HjorthKey::MoveY {
                            x,
                            y,
                            uy,
                            vy,
                            ux,
                            vx,
                        },
                        Player::II,
                        true,
                        format!("x={x}, y={y}; II walks y inside {uy}, must land in {ux}"),
                    );
                    b.add_move(cursor, to);
                }
            }
            HjorthKey::MoveY {
                x,
                y,
                uy,
                vy,
                ux,
                vx,
            } => {
                let reachable = local_orbit(action, y, uy, chain[vy]).inter(ux);
                for y2 in reachable.iter() {
                    let to = b.intern(
                        HjorthKey::ChooseY { x, y: y2, ux, vx },
                        Player::I,
                        true,
                        format!("x={x}, y={y2}; I surrounds y"),
                    );
                    b.add_move(cursor, to);
                }
            }
            HjorthKey::ChooseY { x, y, ux, vx } => {
                for (uy, vy) in menu(action, y, full_choice) {
                    let to = b.intern(
                        HjorthKey::MoveX {
                            x,
                            y,
                            ux,
                            vx,
                            uy,
                            vy,
                        },
                        Player::II,
                        true,
                        format!("x={x}, y={y}; II walks x inside {ux}, must land in {uy}"),
                    );
                    b.add_move(cursor, to);
                }
            }
            HjorthKey::MoveX {
                x,
                y,
                ux,
                vx,
                uy,
                vy,
            } => {
                let reachable = local_orbit(action, x, ux, chain[vx]).inter(uy);
                for x2 in reachable.iter() {
                    let to = b.intern(
                        HjorthKey::ChooseX { x: x2, y, uy, vy },
                        Player::I,
                        true,
                        format!("x={x2}, y={y}; I surrounds x"),
                    );
                    b.add_move(cursor, to);
                }
            }
        }
        cursor += 1;
    }
    b.finish(initial)
}

/// Closed form valid for Hausdorff groups: the two points are related
/// exactly when some translate of `y` is topologically interchangeable
/// with `x` (each lies in the other's minimal open set).
pub fn hjorth_witness(action: &GroupAction, x: usize, y: usize) -> Option<usize> {
    let space = action.space();
    let core_x = space.core_open(x);
    (0..action.group().order()).find(|&g| {
        let gy = action.apply(g, y);
        core_x.contains(gy) && space.core_open(gy).contains(x)
    })
}

/// Solves the reduced Hjorth arena.
pub fn hjorth_isomorphic(action: &GroupAction, x: usize, y: usize) -> HjorthVerdict {
    let arena = hjorth_arena(action, x, y, false);
    let result = solve_closed_game(&arena);
    let ii_wins = result.ii_wins();
    let strategy = if ii_wins {
        Some(extract_strategy(&arena, &result, Player::II).expect("winner has a strategy"))
    } else {
        None
    };
    HjorthVerdict {
        x,
        y,
        ii_wins,
        strategy,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum GroupoidHjorthKey {
    ChooseX { x: usize, y: usize, wy: IdxSet },
    MoveY { x: usize, y: usize, wy: IdxSet, wx: IdxSet },
    ChooseY { x: usize, y: usize, wx: IdxSet },
    MoveX { x: usize, y: usize, wx: IdxSet, wy: IdxSet },
}

fn arrow_menu(g: &FiniteGroupoid, z: usize, full_choice: bool) -> Vec<IdxSet> {
    let around: Vec<IdxSet> = g
        .basis()
        .iter()
        .copied()
        .filter(|w| w.contains(z))
        .collect();
    if full_choice {
        around
    } else {
        let all = IdxSet::full(g.n_arrows());
        vec![around.iter().fold(all, |acc, w| acc.inter(*w))]
    }
}

/// Hjorth arena for two objects of a groupoid. Player I plays a single
/// basic arrow set per turn; it both constrains the walk on one side and
/// serves as the landing demand for the other.
pub fn groupoid_hjorth_arena(g: &FiniteGroupoid, x: usize, y: usize, full_choice: bool) -> Arena {
    assert!(g.is_object(x) && g.is_object(y), "arguments must be objects");
    let everything = IdxSet::full(g.n_arrows());

    let mut b: ArenaBuilder<GroupoidHjorthKey> = ArenaBuilder::new();
    let initial = b.intern(
        GroupoidHjorthKey::ChooseX {
            x,
            y,
            wy: everything,
        },
        Player::I,
        true,
        format!("x={x}, y={y}; I picks a basic arrow set around x"),
    );
    let mut cursor = 0;
    while cursor < b.len() {
        match *b.key(cursor) {
            GroupoidHjorthKey::ChooseX { x, y, wy } => {
                for wx in arrow_menu(g, x, full_choice) {
                    let to = b.intern(
                        GroupoidHjorthKey::MoveY { x, y, wy, wx },
                        Player::II,
                        true,
                        format!("x={x}, y={y}; II walks y"),
                    );
                    b.add_move(cursor, to);
                }
            }
            GroupoidHjorthKey::MoveY { x, y, wy, wx } => {
                let reachable = groupoid_local_orbit(g, y, wy).inter(wx);
                for y2 in reachable.iter() {
                    let to = b.intern(
                        GroupoidHjorthKey::ChooseY { x, y: y2, wx },
                        Player::I,
                        true,
                        format!("x={x}, y={y2}; I picks a basic arrow set around y"),
                    );
                    b.add_move(cursor, to);
                }
            }
            GroupoidHjorthKey::ChooseY { x, y, wx } => {
                for wy in arrow_menu(g, y, full_choice) {
                    let to = b.intern(
                        GroupoidHjorthKey::MoveX { x, y, wx, wy },
                        Player::II,
                        true,
                        format!("x={x}, y={y}; II walks x"),
                    );
                    b.add_move(cursor, to);
                }
            }
            GroupoidHjorthKey::MoveX { x, y, wx, wy } => {
                let reachable = groupoid_local_orbit(g, x, wx).inter(wy);
                for x2 in reachable.iter() {
                    let to = b.intern(
                        GroupoidHjorthKey::ChooseX { x: x2, y, wy },
                        Player::I,
                        true,
                        format!("x={x2}, y={y}; I picks a basic arrow set around x"),
                    );
                    b.add_move(cursor, to);
                }
            }
        }
        cursor += 1;
    }
    b.finish(initial)
}

/// Verdict of the reduced groupoid Hjorth game.
pub fn groupoid_hjorth_isomorphic(g: &FiniteGroupoid, x: usize, y: usize) -> bool {
    let arena = groupoid_hjorth_arena(g, x, y, false);
    solve_closed_game(&arena).ii_wins()
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
    fn reflexive_by_staying_put() {
        let action = trivial_on(FiniteSpace::discrete(2));
        assert!(hjorth_isomorphic(&action, 0, 0).ii_wins);
        assert!(hjorth_isomorphic(&action, 1, 1).ii_wins);
    }

    #[test]
    fn indiscrete_pairs_are_indistinguishable() {
        let action = trivial_on(FiniteSpace::indiscrete(2));
        let v = hjorth_isomorphic(&action, 0, 1);
        assert!(v.ii_wins);
        assert!(v.strategy.is_some());
    }

    #[test]
    fn sierpinski_separates_its_points() {
        // Player I demands the open point's own neighborhood {1}; the
        // closed point 0 can never enter it.
        let action = trivial_on(FiniteSpace::sierpinski());
        assert!(!hjorth_isomorphic(&action, 0, 1).ii_wins);
        assert!(!hjorth_isomorphic(&action, 1, 0).ii_wins);
    }

    #[test]
    fn hausdorff_closed_form_matches_on_fixtures() {
        for space in [
            FiniteSpace::discrete(3),
            FiniteSpace::sierpinski(),
            FiniteSpace::indiscrete(3),
        ] {
            let action = trivial_on(space);
            let n = action.space().n_points();
            for x in 0..n {
                for y in 0..n {
                    assert_eq!(
                        hjorth_isomorphic(&action, x, y).ii_wins,
                        hjorth_witness(&action, x, y).is_some(),
                        "pair ({x},{y})"
                    );
                }
            }
        }
    }

    #[test]
    fn discrete_hausdorff_needs_same_orbit() {
        let swap = GroupAction::from_permutations(
            TopGroup::cyclic(2),
            FiniteSpace::discrete(2),
            vec![vec![0, 1], vec![1, 0]],
        );
        assert!(hjorth_isomorphic(&swap, 0, 1).ii_wins);

        let idle = GroupAction::trivial(TopGroup::cyclic(2), FiniteSpace::discrete(2));
        assert!(!hjorth_isomorphic(&idle, 0, 1).ii_wins);
    }

    #[test]
    fn full_choice_agrees_on_fixtures() {
        for space in [FiniteSpace::sierpinski(), FiniteSpace::indiscrete(3)] {
            let action = trivial_on(space);
            let n = action.space().n_points();
            for x in 0..n {
                for y in 0..n {
                    let reduced = solve_closed_game(&hjorth_arena(&action, x, y, false));
                    let full = solve_closed_game(&hjorth_arena(&action, x, y, true));
                    assert_eq!(reduced.ii_wins(), full.ii_wins(), "pair ({x},{y})");
                }
            }
        }
    }
}
