//! Finite two-player games that are open for Player I and closed for
//! Player II: Player II wins a play by keeping it inside the safe positions
//! forever. Solving computes the greatest fixed point of safe positions for
//! Player II; the attractor stage at which Player I captures a position is
//! its rank.

use std::collections::HashMap;
use std::collections::VecDeque;

use rand::Rng;
use thiserror::Error;

/// The two players. Player I tries to force the play into an unsafe
/// position; Player II tries to stay safe forever.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Player {
    I,
    II,
}

impl std::fmt::Display for Player {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Player::I => write!(f, "I"),
            Player::II => write!(f, "II"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GameError {
    #[error("player {player} does not win from the initial position")]
    LoserStrategy { player: Player },
}

/// A finite game graph. A position with no moves is losing for its owner
/// when owned by Player II and winning for Player II when owned by Player I.
#[derive(Clone, Debug)]
pub struct Arena {
    owner: Vec<Player>,
    moves: Vec<Vec<usize>>,
    safe: Vec<bool>,
    initial: usize,
    labels: Vec<String>,
}

impl Arena {
    pub fn new(
        owner: Vec<Player>,
        moves: Vec<Vec<usize>>,
        safe: Vec<bool>,
        initial: usize,
        labels: Vec<String>,
    ) -> Arena {
        let n = owner.len();
        assert_eq!(moves.len(), n);
        assert_eq!(safe.len(), n);
        assert_eq!(labels.len(), n);
        assert!(initial < n, "initial position out of range");
        for (p, ms) in moves.iter().enumerate() {
            for &q in ms {
                assert!(q < n, "dangling move {p} -> {q}");
            }
        }
        Arena {
            owner,
            moves,
            safe,
            initial,
            labels,
        }
    }

    pub fn n_positions(&self) -> usize {
        self.owner.len()
    }

    pub fn owner(&self, p: usize) -> Player {
        self.owner[p]
    }

    pub fn moves(&self, p: usize) -> &[usize] {
        &self.moves[p]
    }

    pub fn is_safe(&self, p: usize) -> bool {
        self.safe[p]
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn label(&self, p: usize) -> &str {
        &self.labels[p]
    }
}

/// Per-position winner and capture rank. `rank[p]` is `Some(k)` exactly
/// when Player I wins `p`, where `k` is the attractor stage at which `p`
/// was removed from Player II's safe region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub initial: usize,
    pub winner: Vec<Player>,
    pub rank: Vec<Option<u32>>,
}

impl SolveResult {
    pub fn winner_at_initial(&self) -> Player {
        self.winner[self.initial]
    }

    pub fn ii_wins(&self) -> bool {
        self.winner_at_initial() == Player::II
    }

    pub fn initial_rank(&self) -> Option<u32> {
        self.rank[self.initial]
    }
}

/// A positional strategy: one chosen move per position owned by the player
/// inside that player's winning region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strategy {
    pub player: Player,
    pub choice: std::collections::BTreeMap<usize, usize>,
}

/// Solves the safety game by computing Player I's attractor to the unsafe
/// positions. Player II wins everywhere the attractor never reaches.
pub fn solve_closed_game(arena: &Arena) -> SolveResult {
    let n = arena.n_positions();
    // Reverse adjacency and, for Player II positions, the count of moves not
    // yet captured.
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    for p in 0..n {
        for &q in arena.moves(p) {
            preds[q].push(p);
        }
    }
    let mut remaining: Vec<usize> = (0..n).map(|p| arena.moves(p).len()).collect();
    let mut rank: Vec<Option<u32>> = vec![None; n];
    let mut queue: VecDeque<usize> = VecDeque::new();

    // The attractor target: unsafe positions, plus safe dead ends owned by
    // Player II, which lose immediately. Seeding both at stage 0 keeps
    // every capture rank strictly below the position count, which the rank
    // hierarchy relies on.
    for (p, slot) in rank.iter_mut().enumerate() {
        let lost_outright = !arena.is_safe(p)
            || (arena.owner(p) == Player::II && arena.moves(p).is_empty());
        if lost_outright {
            *slot = Some(0);
            queue.push_back(p);
        }
    }

    while let Some(q) = queue.pop_front() {
        let stage = rank[q].unwrap();
        for &p in &preds[q] {
            if rank[p].is_some() || !arena.is_safe(p) {
                continue;
            }
            match arena.owner(p) {
                Player::I => {
                    rank[p] = Some(stage + 1);
                    queue.push_back(p);
                }
                Player::II => {
                    remaining[p] -= 1;
                    if remaining[p] == 0 {
                        rank[p] = Some(stage + 1);
                        queue.push_back(p);
                    }
                }
            }
        }
    }

    let winner = rank
        .iter()
        .map(|r| if r.is_some() { Player::I } else { Player::II })
        .collect();
    SolveResult {
        initial: arena.initial(),
        winner,
        rank,
    }
}

/// Extracts the winning player's positional strategy. For Player II the
/// chosen move never leaves the safe greatest fixed point; for Player I the
/// rank strictly decreases along the play. Ties break to the lowest-index
/// move.
pub fn extract_strategy(
    arena: &Arena,
    result: &SolveResult,
    player: Player,
) -> Result<Strategy, GameError> {
    if result.winner[arena.initial()] != player {
        return Err(GameError::LoserStrategy { player });
    }
    let mut choice = std::collections::BTreeMap::new();
    for p in 0..arena.n_positions() {
        if arena.owner(p) != player || result.winner[p] != player || !arena.is_safe(p) {
            continue;
        }
        let pick = match player {
            Player::II => arena
                .moves(p)
                .iter()
                .copied()
                .find(|&q| result.winner[q] == Player::II),
            Player::I => {
                let here = result.rank[p].unwrap();
                arena
                    .moves(p)
                    .iter()
                    .copied()
                    .find(|&q| result.rank[q].is_some_and(|r| r < here))
            }
        };
        if let Some(q) = pick {
            choice.insert(p, q);
        }
    }
    Ok(Strategy { player, choice })
}

/// For each solved arena, whether Player I lacks a winning strategy of rank
/// below `alpha` at the initial position. Antitone in `alpha`; for
/// `alpha > n_positions` it coincides with the exact game value.
pub fn relation_at_rank(results: &[SolveResult], alpha: u32) -> Vec<bool> {
    results
        .iter()
        .map(|r| match r.initial_rank() {
            None => true,
            Some(rank) => rank >= alpha,
        })
        .collect()
}

/// Independent oracle: winner of the depth-truncated game by exhaustive
/// backward induction, where Player II wins any play that survives `depth`
/// moves. Agrees with [`solve_closed_game`] once `depth > n_positions`.
pub fn bounded_play_check(arena: &Arena, depth: u32) -> Player {
    assert!(depth >= 1, "depth must be at least 1");
    let mut memo: HashMap<(usize, u32), Player> = HashMap::new();
    fn go(arena: &Arena, p: usize, d: u32, memo: &mut HashMap<(usize, u32), Player>) -> Player {
        if !arena.is_safe(p) {
            return Player::I;
        }
        if d == 0 {
            return Player::II;
        }
        if let Some(&w) = memo.get(&(p, d)) {
            return w;
        }
        let w = if arena.moves(p).is_empty() {
            match arena.owner(p) {
                Player::II => Player::I,
                Player::I => Player::II,
            }
        } else {
            let mover = arena.owner(p);
            let can_realize = arena
                .moves(p)
                .iter()
                .any(|&q| go(arena, q, d - 1, memo) == mover);
            if can_realize {
                mover
            } else {
                match mover {
                    Player::I => Player::II,
                    Player::II => Player::I,
                }
            }
        };
        memo.insert((p, d), w);
        w
    }
    go(arena, arena.initial(), depth, &mut memo)
}

/// Deterministic generator of small arbitrary arenas, used by tests and
/// benchmarks.
pub fn random_arena<R: Rng>(rng: &mut R, max_positions: usize) -> Arena {
    let n = rng.gen_range(1..=max_positions.max(1));
    let owner: Vec<Player> = (0..n)
        .map(|_| if rng.gen_bool(0.5) { Player::I } else { Player::II })
        .collect();
    let safe: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.85)).collect();
    let moves: Vec<Vec<usize>> = (0..n)
        .map(|_| {
            let deg = rng.gen_range(0..=3);
            (0..deg).map(|_| rng.gen_range(0..n)).collect()
        })
        .collect();
    let labels = (0..n).map(|p| format!("p{p}")).collect();
    Arena::new(owner, moves, safe, 0, labels)
}

/// Incrementally checks that a claimed strategy realizes the claimed winner
/// from the initial position against every opposing line of play.
pub fn strategy_realizes_win(arena: &Arena, result: &SolveResult, strategy: &Strategy) -> bool {
    let mut seen = vec![false; arena.n_positions()];
    let mut stack = vec![arena.initial()];
    while let Some(p) = stack.pop() {
        if seen[p] {
            continue;
        }
        seen[p] = true;
        if !arena.is_safe(p) {
            if strategy.player == Player::II {
                return false;
            }
            continue; // Player I reached an unsafe position: this branch is won.
        }
        match strategy.player {
            Player::II => {
                if arena.owner(p) == Player::II {
                    match strategy.choice.get(&p) {
                        Some(&q) => stack.push(q),
                        None => return false, // stuck inside the claimed winning region
                    }
                } else {
                    if arena.moves(p).is_empty() {
                        continue; // Player I stuck: Player II wins this branch
                    }
                    stack.extend(arena.moves(p).iter().copied());
                }
            }
            Player::I => {
                // Play must strictly decrease rank until an unsafe position.
                let here = match result.rank[p] {
                    Some(r) => r,
                    None => return false,
                };
                let succs: Vec<usize> = if arena.owner(p) == Player::I {
                    match strategy.choice.get(&p) {
                        Some(&q) => vec![q],
                        None => return false,
                    }
                } else {
                    if arena.moves(p).is_empty() {
                        continue; // Player II is stuck: this branch is captured
                    }
                    arena.moves(p).to_vec()
                };
                for q in succs {
                    match result.rank[q] {
                        Some(r) if r < here => stack.push(q),
                        _ => return false,
                    }
                }
            }
        }
    }
    true
}
