//! Internal helper for constructing arenas by breadth-first exploration of
//! an interned position space.

use std::collections::HashMap;
use std::hash::Hash;

use crate::solver::{Arena, Player};

pub(crate) struct ArenaBuilder<K> {
    index: HashMap<K, usize>,
    keys: Vec<K>,
    owner: Vec<Player>,
    safe: Vec<bool>,
    moves: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl<K: Hash + Eq + Clone> ArenaBuilder<K> {
    pub fn new() -> Self {
        ArenaBuilder {
            index: HashMap::new(),
            keys: Vec::new(),
            owner: Vec::new(),
            safe: Vec::new(),
            moves: Vec::new(),
            labels: Vec::new(),
        }
    }

    /// Index of `key`, creating the position on first sight.
    pub fn intern(&mut self, key: K, owner: Player, safe: bool, label: String) -> usize {
        if let Some(&i) = self.index.get(&key) {
            return i;
        }
        let i = self.keys.len();
        self.index.insert(key.clone(), i);
        self.keys.push(key);
        self.owner.push(owner);
        self.safe.push(safe);
        self.moves.push(Vec::new());
        self.labels.push(label);
        i
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn key(&self, i: usize) -> &K {
        &self.keys[i]
    }

    /// Appends a move, skipping duplicate targets.
    pub fn add_move(&mut self, from: usize, to: usize) {
        if !self.moves[from].contains(&to) {
            self.moves[from].push(to);
        }
    }

    pub fn finish(self, initial: usize) -> Arena {
        Arena::new(self.owner, self.moves, self.safe, initial, self.labels)
    }
}
