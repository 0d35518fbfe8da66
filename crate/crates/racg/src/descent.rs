//! Descent sets and coset representatives.
//!
//! A generator `s` is a right descent of `w` when `ℓ(w·s) < ℓ(w)`. On a
//! ShortLex normal form this is visible directly: `s` is a right descent
//! exactly when some occurrence of `s` commutes with every letter to its
//! right. Descent sets are always cliques of the commutation graph, so they
//! double as the "descent profiles" the ball machinery indexes by.

use crate::error::{Error, Result};
use crate::presentation::{GenSet, Presentation};
use crate::word::NormalForm;

impl Presentation {
    /// Right descent set `{s : ℓ(w·s) < ℓ(w)}`.
    ///
    /// Single right-to-left pass: a letter is a descent while no letter
    /// after it blocks it, and a letter blocks everything it fails to
    /// commute with (itself included).
    pub fn right_descents(&self, w: &NormalForm) -> GenSet {
        let mut descents = GenSet::EMPTY;
        let mut blocked = GenSet::EMPTY;
        for &t in w.letters().iter().rev() {
            if !blocked.contains(t) {
                descents.insert(t);
            }
            blocked |= self.non_commuters(t);
        }
        descents
    }

    /// Left descent set `{s : ℓ(s·w) < ℓ(w)}`.
    pub fn left_descents(&self, w: &NormalForm) -> GenSet {
        self.right_descents(&self.invert(w))
    }

    /// The unique shortest representative of the coset `w·W_T`: strip
    /// descents lying in `T` until none remain.
    pub fn coset_min_rep(&self, w: &NormalForm, t: GenSet) -> NormalForm {
        let mut cur = w.clone();
        loop {
            let strippable = self.right_descents(&cur) & t;
            match strippable.first() {
                None => return cur,
                Some(s) => cur = self.right_multiply(&cur, s),
            }
        }
    }

    /// The unique longest element of `w·W_T`, defined for spherical `T`:
    /// the minimal representative times the product of all of `T`.
    pub fn coset_longest_rep(&self, w: &NormalForm, t: GenSet) -> Result<NormalForm> {
        if !self.is_spherical(t) {
            return Err(Error::NotSpherical(self.set_string(t)));
        }
        let mut cur = self.coset_min_rep(w, t);
        for s in t.iter() {
            cur = self.right_multiply(&cur, s);
        }
        Ok(cur)
    }
}
