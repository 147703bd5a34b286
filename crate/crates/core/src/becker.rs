//! The Becker embedding game.
//!
//! In the game `Emb(x, y)` Player I plays a shrinking open neighborhood `U`
//! of `x` and an identity neighborhood `V`; Player II answers with a group
//! element from the previously played `V`, accumulating a translate of `y`.
//! Player II wins by keeping the translate inside every demanded `U`. On a
//! finite instance Player I never gains from playing anything above the
//! minimal pair `(core_open(x), V_m)`, so the reduced arena fixes that
//! choice; `full_choice` builds the arena with every basis/chain pair.

use crate::actions::GroupAction;
use crate::arena_build::ArenaBuilder;
use crate::groupoids::FiniteGroupoid;
use crate::sets::IdxSet;
use crate::solver::{extract_strategy, solve_closed_game, Arena, Player, Strategy};

/// Outcome of one Becker game, together with the direct witness: a group
/// element moving `y` into the minimal open set around `x`.
#[derive(Clone, Debug)]
pub struct BeckerVerdict {
    pub x: usize,
    pub y: usize,
    pub ii_wins: bool,
    pub witness: Option<usize>,
    pub strategy: Option<Strategy>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum BeckerKey {
    /// Player I to choose `(U, V)`; `pending_v` constrains Player II's
    /// upcoming reply.
    Choose { z: usize, pending_v: usize },
    /// Player II to reply with `g` from chain element `pending_v`; the
    /// translate must land in `u`, after which `next_v` binds.
    Reply {
        z: usize,
        u: IdxSet,
        pending_v: usize,
        next_v: usize,
    },
    /// Terminal entered when the translate escapes the demanded
    /// neighborhood.
    Violation,
}

fn neighborhood_menu(action: &GroupAction, x: usize, full_choice: bool) -> Vec<(IdxSet, usize)> {
    let space = action.space();
    let chain_len = action.group().filter_chain().len();
    if full_choice {
        space
            .basis()
            .iter()
            .filter(|b| b.contains(x))
            .flat_map(|u| (0..chain_len).map(move |v| (*u, v)))
            .collect()
    } else {
        vec![(space.core_open(x), chain_len - 1)]
    }
}

/// Builds the Becker arena for `Emb(x, y)`. The first reply by Player II is
/// unconstrained (the chain starts at the whole group).
pub fn becker_arena(action: &GroupAction, x: usize, y: usize, full_choice: bool) -> Arena {
    let n = action.space().n_points();
    assert!(x < n && y < n, "invalid points ({x}, {y})");
    let chain = action.group().filter_chain().to_vec();
    let menu = neighborhood_menu(action, x, full_choice);

    let mut b: ArenaBuilder<BeckerKey> = ArenaBuilder::new();
    let initial = b.intern(
        BeckerKey::Choose { z: y, pending_v: 0 },
        Player::I,
        true,
        format!("translate {y}; I picks (U,V)"),
    );
    let mut cursor = 0;
    while cursor < b.len() {
        match *b.key(cursor) {
            BeckerKey::Choose { z, pending_v } => {
                for &(u, next_v) in &menu {
                    let to = b.intern(
                        BeckerKey::Reply {
                            z,
                            u,
                            pending_v,
                            next_v,
                        },
                        Player::II,
                        true,
                        format!("translate {z}; II plays g in V{pending_v}, must land in {u}"),
                    );
                    b.add_move(cursor, to);
                }
            }
            BeckerKey::Reply {
                z,
                u,
                pending_v,
                next_v,
            } => {
                for g in chain[pending_v].iter() {
                    let z2 = action.apply(g, z);
                    let to = if u.contains(z2) {
                        b.intern(
                            BeckerKey::Choose {
                                z: z2,
                                pending_v: next_v,
                            },
                            Player::I,
                            true,
                            format!("translate {z2}; I picks (U,V)"),
                        )
                    } else {
                        b.intern(
                            BeckerKey::Violation,
                            Player::II,
                            false,
                            "translate left the demanded neighborhood".to_string(),
                        )
                    };
                    b.add_move(cursor, to);
                }
            }
            BeckerKey::Violation => {}
        }
        cursor += 1;
    }
    b.finish(initial)
}

/// Direct search for `g` with `g·y` inside the minimal open set around `x`.
/// On finite instances this decides the Becker game: Player II jumps into
/// the core on the unconstrained first move and then stalls with the
/// identity, which every chain element contains.
pub fn becker_witness(action: &GroupAction, x: usize, y: usize) -> Option<usize> {
    let core = action.space().core_open(x);
    (0..action.group().order()).find(|&g| core.contains(action.apply(g, y)))
}

/// Solves the reduced Becker arena and packages the verdict with the
/// witness and, when Player II wins, a winning strategy.
pub fn becker_embeddable(action: &GroupAction, x: usize, y: usize) -> BeckerVerdict {
    let arena = becker_arena(action, x, y, false);
    let result = solve_closed_game(&arena);
    let ii_wins = result.ii_wins();
    let strategy = if ii_wins {
        Some(extract_strategy(&arena, &result, Player::II).expect("winner has a strategy"))
    } else {
        None
    };
    BeckerVerdict {
        x,
        y,
        ii_wins,
        witness: becker_witness(action, x, y),
        strategy,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum GroupoidBeckerKey {
    Choose { z: usize, pending: IdxSet },
    Reply { z: usize, w: IdxSet, pending: IdxSet },
    Violation,
}

/// Basic arrow sets containing the object `x` (as its identity arrow); the
/// reduced menu is the intersection of all of them.
fn arrow_menu(g: &FiniteGroupoid, x: usize, full_choice: bool) -> Vec<IdxSet> {
    let around: Vec<IdxSet> = g
        .basis()
        .iter()
        .copied()
        .filter(|w| w.contains(x))
        .collect();
    if full_choice {
        around
    } else {
        let all = IdxSet::full(g.n_arrows());
        vec![around.iter().fold(all, |acc, w| acc.inter(*w))]
    }
}

/// Becker arena for two objects of a groupoid: Player I plays basic arrow
/// neighborhoods of `x`, Player II plays arrows out of the current object
/// constrained to Player I's previous choice, and the object reached must
/// lie in the current choice.
pub fn groupoid_becker_arena(g: &FiniteGroupoid, x: usize, y: usize, full_choice: bool) -> Arena {
    assert!(g.is_object(x) && g.is_object(y), "arguments must be objects");
    let menu = arrow_menu(g, x, full_choice);
    let everything = IdxSet::full(g.n_arrows());

    let mut b: ArenaBuilder<GroupoidBeckerKey> = ArenaBuilder::new();
    let initial = b.intern(
        GroupoidBeckerKey::Choose {
            z: y,
            pending: everything,
        },
        Player::I,
        true,
        format!("object {y}; I picks a basic arrow set"),
    );
    let mut cursor = 0;
    while cursor < b.len() {
        match *b.key(cursor) {
            GroupoidBeckerKey::Choose { z, pending } => {
                for &w in &menu {
                    let to = b.intern(
                        GroupoidBeckerKey::Reply { z, w, pending },
                        Player::II,
                        true,
                        format!("object {z}; II plays an arrow from the pending set"),
                    );
                    b.add_move(cursor, to);
                }
            }
            GroupoidBeckerKey::Reply { z, w, pending } => {
                for arrow in pending.iter() {
                    if g.src(arrow) != z {
                        continue;
                    }
                    let z2 = g.rng(arrow);
                    let to = if w.contains(z2) {
                        b.intern(
                            GroupoidBeckerKey::Choose { z: z2, pending: w },
                            Player::I,
                            true,
                            format!("object {z2}; I picks a basic arrow set"),
                        )
                    } else {
                        b.intern(
                            GroupoidBeckerKey::Violation,
                            Player::II,
                            false,
                            "object left the demanded arrow set".to_string(),
                        )
                    };
                    b.add_move(cursor, to);
                }
            }
            GroupoidBeckerKey::Violation => {}
        }
        cursor += 1;
    }
    b.finish(initial)
}

/// Verdict of the reduced groupoid Becker game.
pub fn groupoid_becker_embeddable(g: &FiniteGroupoid, x: usize, y: usize) -> bool {
    let arena = groupoid_becker_arena(g, x, y, false);
    solve_closed_game(&arena).ii_wins()
}
