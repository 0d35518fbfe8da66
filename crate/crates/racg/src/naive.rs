//! Brute-force reference implementations, kept deliberately independent of
//! the fast paths in the rest of the crate so the test suites can check the
//! two against each other.
//!
//! In a right-angled system two words represent the same element exactly
//! when they are connected by adjacent-commuting swaps and adjacent-equal
//! cancellations, and a shortest word can always be reached without ever
//! growing the word. So the closure of a word under those two moves
//! contains every reduced expression of its element, and the ShortLex-least
//! word of minimal length in the closure is a canonical form.
//!
//! Everything here works on plain `Vec<Gen>` words and touches nothing from
//! the normal-form machinery.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::presentation::{Gen, Presentation};

/// Canonical form of `word` by exhaustive closure: the ShortLex-least among
/// the shortest words reachable by swaps and cancellations.
pub fn normal_form(p: &Presentation, word: &[Gen]) -> Vec<Gen> {
    let start: Vec<Gen> = word.to_vec();
    let mut seen: HashSet<Vec<Gen>> = HashSet::new();
    let mut queue: VecDeque<Vec<Gen>> = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    let mut best: Option<Vec<Gen>> = None;
    while let Some(w) = queue.pop_front() {
        let better = match &best {
            None => true,
            Some(b) => (w.len(), &w) < (b.len(), b),
        };
        if better {
            best = Some(w.clone());
        }
        for i in 0..w.len().saturating_sub(1) {
            if w[i] == w[i + 1] {
                let mut shorter = w.clone();
                shorter.drain(i..i + 2);
                if seen.insert(shorter.clone()) {
                    queue.push_back(shorter);
                }
            } else if p.commutes(w[i], w[i + 1]) {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                if seen.insert(swapped.clone()) {
                    queue.push_back(swapped);
                }
            }
        }
    }
    best.unwrap()
}

/// Word-problem decision by closure.
pub fn equal(p: &Presentation, w1: &[Gen], w2: &[Gen]) -> bool {
    normal_form(p, w1) == normal_form(p, w2)
}

/// Sphere sizes of the Cayley ball up to `radius`, enumerated by extending
/// canonical words one letter at a time and deduplicating through
/// [`normal_form`].
pub fn sphere_sizes(p: &Presentation, radius: usize) -> Vec<usize> {
    let mut sizes = vec![1];
    let mut frontier: BTreeSet<Vec<Gen>> = BTreeSet::new();
    frontier.insert(Vec::new());
    for k in 0..radius {
        let mut next: BTreeSet<Vec<Gen>> = BTreeSet::new();
        for w in &frontier {
            for s in p.gens() {
                let mut extended = w.clone();
                extended.push(s);
                let canon = normal_form(p, &extended);
                if canon.len() == k + 1 {
                    next.insert(canon);
                }
            }
        }
        sizes.push(next.len());
        frontier = next;
    }
    sizes
}
