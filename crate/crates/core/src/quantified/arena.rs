//! Exact minimax for "colour the positions in order" games.
//!
//! Position `i` is coloured by `player[i]` with a colour from `allowed[i]`
//! that differs from every earlier adjacent position. Existential wins iff
//! every position gets coloured. Universal either may pick any colour of
//! `1..=k` (QCSP semantics: a bad choice falsifies the sentence) or only
//! legal ones (game semantics: if he has none, Existential loses).
//!
//! Positions are memoised on the colours of the frontier, the earlier
//! positions that still have a later neighbour; the trailing existential
//! block is solved as a list-colouring problem.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::graph::ColourSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    Existential,
    Universal,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Existential => Player::Universal,
            Player::Universal => Player::Existential,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum UniversalRule {
    AnyValue,
    LegalOnly,
}

pub(crate) struct Arena {
    k: u8,
    player: Vec<Player>,
    allowed: Vec<ColourSet>,
    back: Vec<Vec<usize>>,
    adjacent: Vec<Vec<usize>>,
    frontier: Vec<Vec<usize>>,
    tail_start: usize,
    rule: UniversalRule,
    contradiction: bool,
    symmetric: bool,
}

impl Arena {
    /// `pairs` are adjacencies between positions; a pair `(i, i)` makes the
    /// whole instance unsatisfiable.
    pub(crate) fn new(
        k: u8,
        player: Vec<Player>,
        allowed: Vec<ColourSet>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
        rule: UniversalRule,
    ) -> Self {
        let n = player.len();
        let full = ColourSet::full(k);
        let allowed: Vec<ColourSet> = allowed.into_iter().map(|a| a.intersection(full)).collect();
        let mut adjacent = vec![Vec::new(); n];
        let mut contradiction = false;
        for (a, b) in pairs {
            if a == b {
                contradiction = true;
                continue;
            }
            adjacent[a].push(b);
            adjacent[b].push(a);
        }
        for list in &mut adjacent {
            list.sort_unstable();
            list.dedup();
        }
        let back: Vec<Vec<usize>> = (0..n)
            .map(|i| adjacent[i].iter().copied().filter(|&j| j < i).collect())
            .collect();
        let last: Vec<usize> = (0..n)
            .map(|j| adjacent[j].iter().copied().max().unwrap_or(0))
            .collect();
        let frontier = (0..=n)
            .map(|i| (0..i).filter(|&j| last[j] >= i).collect())
            .collect();
        let tail_start = (0..n)
            .rev()
            .take_while(|&i| player[i] == Player::Existential)
            .last()
            .unwrap_or(n);
        let symmetric = allowed.iter().all(|&a| a == full);
        Arena {
            k,
            player,
            allowed,
            back,
            adjacent,
            frontier,
            tail_start,
            rule,
            contradiction,
            symmetric,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.player.len()
    }

    /// Colours the mover at position `colours.len()` may legally use.
    pub(crate) fn legal(&self, colours: &[u8]) -> ColourSet {
        let i = colours.len();
        let mut set = self.allowed[i];
        for &j in &self.back[i] {
            set.remove(colours[j]);
        }
        set
    }

    /// Whether Existential wins from the position where `colours` (indexed by
    /// position) have been played.
    pub(crate) fn existential_wins(&self, colours: &[u8]) -> bool {
        let mut memo = HashMap::new();
        let mut buf = colours.to_vec();
        self.wins(&mut buf, &mut memo)
    }

    /// Colours that keep the mover winning: for Existential the legal colours
    /// after which she still wins, for Universal those after which she loses.
    pub(crate) fn winning_moves(&self, colours: &[u8]) -> ColourSet {
        let i = colours.len();
        if i >= self.len() || self.contradiction {
            return ColourSet::EMPTY;
        }
        let legal = self.legal(colours);
        let mut memo = HashMap::new();
        let mut buf = colours.to_vec();
        let mut out = ColourSet::EMPTY;
        for c in 1..=self.k {
            let good = if legal.contains(c) {
                buf.push(c);
                let after = self.wins(&mut buf, &mut memo);
                buf.pop();
                match self.player[i] {
                    Player::Existential => after,
                    Player::Universal => !after,
                }
            } else {
                self.player[i] == Player::Universal && self.rule == UniversalRule::AnyValue
            };
            if good {
                out.insert(c);
            }
        }
        out
    }

    fn wins(&self, colours: &mut Vec<u8>, memo: &mut HashMap<(usize, Vec<u8>), bool>) -> bool {
        if self.contradiction {
            return false;
        }
        let i = colours.len();
        if i == self.len() {
            return true;
        }
        let key = (i, self.frontier_key(i, colours));
        if let Some(&known) = memo.get(&key) {
            return known;
        }
        let result = if i == self.tail_start {
            self.tail_colourable(colours)
        } else {
            let legal = self.legal(colours);
            let candidates = self.representatives(i, colours, legal);
            match (self.player[i], self.rule) {
                (Player::Existential, _) => candidates.into_iter().any(|c| self.after(colours, c, memo)),
                (Player::Universal, UniversalRule::AnyValue) => {
                    legal == ColourSet::full(self.k) && candidates.into_iter().all(|c| self.after(colours, c, memo))
                }
                (Player::Universal, UniversalRule::LegalOnly) => {
                    !legal.is_empty() && candidates.into_iter().all(|c| self.after(colours, c, memo))
                }
            }
        };
        memo.insert(key, result);
        result
    }

    fn after(&self, colours: &mut Vec<u8>, c: u8, memo: &mut HashMap<(usize, Vec<u8>), bool>) -> bool {
        colours.push(c);
        let r = self.wins(colours, memo);
        colours.pop();
        r
    }

    fn frontier_key(&self, i: usize, colours: &[u8]) -> Vec<u8> {
        let raw = self.frontier[i].iter().map(|&j| colours[j]);
        if !self.symmetric {
            return raw.collect();
        }
        // Without lists the future is invariant under renaming colours.
        let mut rename = [0u8; 32];
        let mut next = 0u8;
        raw.map(|c| {
            if rename[c as usize] == 0 {
                next += 1;
                rename[c as usize] = next;
            }
            rename[c as usize]
        })
        .collect()
    }

    /// Legal colours, keeping only one colour unused by the frontier when the
    /// instance has no lists (all such colours are interchangeable).
    fn representatives(&self, i: usize, colours: &[u8], legal: ColourSet) -> Vec<u8> {
        if !self.symmetric {
            return legal.iter().collect();
        }
        let used = self.frontier[i]
            .iter()
            .fold(ColourSet::EMPTY, |s, &j| s.union(ColourSet::from_colours([colours[j]])));
        let mut out: Vec<u8> = legal.intersection(used).iter().collect();
        if let Some(fresh) = legal.difference(used).iter().next() {
            out.push(fresh);
        }
        out
    }

    /// Can positions `colours.len()..` all be coloured? Backtracking with
    /// singleton propagation over the remaining positions.
    fn tail_colourable(&self, colours: &[u8]) -> bool {
        let start = colours.len();
        let n = self.len();
        let mut domains: Vec<ColourSet> = (start..n)
            .map(|i| {
                let mut d = self.allowed[i];
                for &j in &self.back[i] {
                    if j < start {
                        d.remove(colours[j]);
                    }
                }
                d
            })
            .collect();
        let queue: Vec<usize> = (0..domains.len()).filter(|&i| domains[i].len() == 1).collect();
        if domains.iter().any(|d| d.is_empty()) || !self.settle(start, &mut domains, queue) {
            return false;
        }
        self.tail_branch(start, domains)
    }

    fn settle(&self, start: usize, domains: &mut [ColourSet], mut queue: Vec<usize>) -> bool {
        while let Some(i) = queue.pop() {
            let Some(c) = domains[i].iter().next() else {
                return false;
            };
            if domains[i].len() != 1 {
                continue;
            }
            for &j in &self.adjacent[start + i] {
                if j < start {
                    continue;
                }
                let local = j - start;
                if domains[local].contains(c) {
                    domains[local].remove(c);
                    match domains[local].len() {
                        0 => return false,
                        1 => queue.push(local),
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn tail_branch(&self, start: usize, domains: Vec<ColourSet>) -> bool {
        let pick = (0..domains.len())
            .filter(|&i| domains[i].len() > 1)
            .min_by_key(|&i| (domains[i].len(), std::cmp::Reverse(self.adjacent[start + i].len())));
        let Some(i) = pick else {
            return true;
        };
        domains[i].iter().any(|c| {
            let mut next = domains.clone();
            next[i] = ColourSet::from_colours([c]);
            self.settle(start, &mut next, vec![i]) && self.tail_branch(start, next)
        })
    }
}
