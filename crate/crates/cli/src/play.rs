//! Line-oriented interactive play against the solved strategy. No screen
//! control codes, so transcripts diff cleanly.

use std::io::{BufRead, Write};

use orbitgames_core::{extract_strategy, solve_closed_game, Arena, Player};

fn other(p: Player) -> Player {
    match p {
        Player::I => Player::II,
        Player::II => Player::I,
    }
}

/// Runs one game on `arena` with the human as `human`. The engine follows
/// its extracted strategy whenever its side wins the position; otherwise it
/// falls back to the first legal move. A play that survives more moves than
/// there are positions is declared for Player II, matching the truncated
/// game.
pub fn play<R: BufRead, W: Write>(
    arena: &Arena,
    human: Player,
    mut input: R,
    out: &mut W,
) -> std::io::Result<()> {
    let result = solve_closed_game(arena);
    let engine = other(human);
    writeln!(
        out,
        "You are Player {human}; the engine is Player {engine}."
    )?;
    writeln!(
        out,
        "Solver verdict: Player {} wins from the initial position.",
        result.winner_at_initial()
    )?;
    let strategy = extract_strategy(arena, &result, engine).ok();

    let bound = arena.n_positions() as u32 + 1;
    let mut position = arena.initial();
    let mut moves_made = 0u32;
    loop {
        if !arena.is_safe(position) {
            writeln!(out, "Unsafe position entered: Player I wins.")?;
            return Ok(());
        }
        if moves_made >= bound {
            writeln!(
                out,
                "Play survived {moves_made} moves: Player II wins (safety holds forever)."
            )?;
            return Ok(());
        }
        let mover = arena.owner(position);
        let moves = arena.moves(position);
        if moves.is_empty() {
            writeln!(
                out,
                "Player {mover} has no moves: Player {} wins.",
                other(mover)
            )?;
            return Ok(());
        }
        writeln!(out, "[move {moves_made}] {}", arena.label(position))?;
        let chosen = if mover == human {
            writeln!(out, "Your options:")?;
            for (k, &q) in moves.iter().enumerate() {
                writeln!(out, "  {}) {}", k + 1, arena.label(q))?;
            }
            let mut pick = None;
            while pick.is_none() {
                write!(out, "choose [1-{}] or q: ", moves.len())?;
                out.flush()?;
                let mut line = String::new();
                if input.read_line(&mut line)? == 0 {
                    writeln!(out, "\nInput closed; quitting.")?;
                    return Ok(());
                }
                let trimmed = line.trim();
                if trimmed == "q" {
                    writeln!(out, "Quit.")?;
                    return Ok(());
                }
                match trimmed.parse::<usize>() {
                    Ok(k) if k >= 1 && k <= moves.len() => pick = Some(moves[k - 1]),
                    _ => writeln!(out, "Illegal move {trimmed:?}; enter 1-{}.", moves.len())?,
                }
            }
            pick.unwrap()
        } else {
            let q = strategy
                .as_ref()
                .and_then(|s| s.choice.get(&position).copied())
                .unwrap_or(moves[0]);
            writeln!(out, "engine plays -> {}", arena.label(q))?;
            q
        };
        position = chosen;
        moves_made += 1;
    }
}
