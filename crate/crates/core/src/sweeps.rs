//! The oracle-equivalence sweeps behind `oracle-diff`. Every sweep runs a
//! game-engine computation against its independent brute-force oracle over
//! a bundled corpus and reports the mismatches.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::becker::{becker_embeddable, becker_witness};
use crate::catalog::full_catalog;
use crate::hjorth::{hjorth_isomorphic, hjorth_witness};
use crate::models::{
    all_binary_structures, brute_force_isomorphic, diag_reduction_check, eq_plus,
    f_embedding_exists, injective_sequences, logic_becker_game, logic_hjorth_game, ran_subset,
    shift, symbolic_becker_seq, RelStructure,
};

/// Runs `f` over `items` on up to `workers` threads, preserving order.
pub fn parallel_map<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = workers.clamp(1, items.len().max(1));
    let chunk_size = items.len().div_ceil(workers).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk_size)
            .map(|chunk| scope.spawn(|| chunk.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    })
}

/// Worker cap: `ORBITGAMES_THREADS` when set, otherwise the available
/// parallelism.
pub fn worker_count() -> usize {
    std::env::var("ORBITGAMES_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

/// Catalog sweep: solver verdicts against the direct witness searches.
/// The Hjorth closed form only characterizes Hausdorff chains, so it is
/// checked on those instances alone.
pub fn sweep_spaces() -> Vec<String> {
    let catalog = full_catalog();
    let reports = parallel_map(&catalog, worker_count(), |inst| {
        let mut bad = Vec::new();
        let n = inst.action.space().n_points();
        let hausdorff = inst.action.group().is_hausdorff();
        for x in 0..n {
            for y in 0..n {
                let verdict = becker_embeddable(&inst.action, x, y);
                let oracle = becker_witness(&inst.action, x, y).is_some();
                if verdict.ii_wins != oracle {
                    bad.push(format!(
                        "{}: becker({x},{y}) solver={} oracle={}",
                        inst.name, verdict.ii_wins, oracle
                    ));
                }
                if verdict.ii_wins != verdict.witness.is_some() {
                    bad.push(format!("{}: becker({x},{y}) witness inconsistent", inst.name));
                }
                if hausdorff {
                    let verdict = hjorth_isomorphic(&inst.action, x, y);
                    let oracle = hjorth_witness(&inst.action, x, y).is_some();
                    if verdict.ii_wins != oracle {
                        bad.push(format!(
                            "{}: hjorth({x},{y}) solver={} oracle={}",
                            inst.name, verdict.ii_wins, oracle
                        ));
                    }
                }
            }
        }
        bad
    });
    reports.into_iter().flatten().collect()
}

/// Structure pairs: exhaustive on universes up to 3, plus 1000 sampled
/// pairs on universe 4, against the embedding and isomorphism oracles.
pub fn sweep_logic() -> Vec<String> {
    let mut pairs: Vec<(RelStructure, RelStructure)> =
        Vec::new();
    let small: Vec<_> = (0..=3).flat_map(all_binary_structures).collect();
    for a in &small {
        for b in &small {
            pairs.push((a.clone(), b.clone()));
        }
    }
    let big = all_binary_structures(4);
    let mut rng = ChaCha8Rng::seed_from_u64(0x0eb1_7a11);
    for _ in 0..1000 {
        let a = big.choose(&mut rng).unwrap().clone();
        let b = big.choose(&mut rng).unwrap().clone();
        pairs.push((a, b));
    }
    let reports = parallel_map(&pairs, worker_count(), |(a, b)| {
        let mut bad = Vec::new();
        let game = logic_becker_game(a, b).unwrap();
        let oracle = f_embedding_exists(a, b).unwrap().is_some();
        if game != oracle {
            bad.push(format!(
                "becker game={game} embedding={oracle} on universes {}/{}",
                a.universe_size, b.universe_size
            ));
        }
        let game = logic_hjorth_game(a, b).unwrap();
        let oracle = brute_force_isomorphic(a, b).unwrap();
        if game != oracle {
            bad.push(format!(
                "hjorth game={game} isomorphism={oracle} on universes {}/{}",
                a.universe_size, b.universe_size
            ));
        }
        bad
    });
    reports.into_iter().flatten().collect()
}

/// Injective sequences of length up to 4 over six letters: the symbolic
/// game against range containment, plus the shift pairs.
pub fn sweep_sequences() -> Vec<String> {
    let seqs = injective_sequences(4, 6);
    let pairs: Vec<(usize, usize)> = (0..seqs.len())
        .flat_map(|i| (0..seqs.len()).map(move |j| (i, j)))
        .collect();
    let mut mismatches: Vec<String> = parallel_map(&pairs, worker_count(), |&(i, j)| {
        let (x, y) = (&seqs[i], &seqs[j]);
        let game = symbolic_becker_seq(x, y).unwrap();
        let oracle = ran_subset(x, y).unwrap();
        (game != oracle).then(|| {
            format!(
                "becker game={game} ran_subset={oracle} on {:?}/{:?}",
                x.entries(),
                y.entries()
            )
        })
    })
    .into_iter()
    .flatten()
    .collect();
    for y in seqs.iter().filter(|s| !s.is_empty()) {
        let x = shift(y);
        if !symbolic_becker_seq(&x, y).unwrap() || eq_plus(&x, y) {
            mismatches.push(format!("shift pair failed on {:?}", y.entries()));
        }
    }
    mismatches
}

/// Equal-length injective label sequences: the jump relation against
/// permutation conjugacy of the diagonal operators.
pub fn sweep_diag() -> Vec<String> {
    let seqs = injective_sequences(4, 6);
    let pairs: Vec<(usize, usize)> = (0..seqs.len())
        .flat_map(|i| (0..seqs.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| seqs[i].len() == seqs[j].len())
        .collect();
    parallel_map(&pairs, worker_count(), |&(i, j)| {
        let check = diag_reduction_check(&seqs[i], &seqs[j]).unwrap();
        (!check.agree).then(|| {
            format!(
                "diag disagreement on {:?}/{:?}: eq_plus={} conjugate={}",
                seqs[i].entries(),
                seqs[j].entries(),
                check.eq_plus,
                check.conjugate
            )
        })
    })
    .into_iter()
    .flatten()
    .collect()
}
