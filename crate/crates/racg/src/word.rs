//! Words and ShortLex normal forms.
//!
//! Every group element is represented by the unique reduced word that is
//! smallest in ShortLex order (length first, then lexicographic by the
//! declared generator order). Normal forms are computed by left-to-right
//! insertion. To insert a letter `s` into a normal form `u`:
//!
//! * scan leftward from the end of `u` while letters commute with `s`; if a
//!   copy of `s` is reached, the two cancel and the remaining word is again
//!   a normal form;
//! * otherwise every letter of the scanned suffix window commutes with `s`,
//!   and `s` is placed directly before the leftmost window letter greater
//!   than `s` (at the end if there is none).
//!
//! Note the placement looks at the whole commuting window, not just at one
//! adjacent swap: in a system where c commutes with both a and d but a and d
//! do not commute, inserting c into "d a" must produce "c d a", which a
//! single adjacent comparison against "a" would miss. Insertion is linear in
//! the word length, so reducing a word is quadratic.

use crate::presentation::{Gen, GenSet, Presentation};

/// A reduced word in ShortLex normal form. Instances are only produced by
/// the reduction routines, so the invariant is global: two `NormalForm`s
/// are equal as group elements exactly when they are equal as sequences.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NormalForm(Vec<Gen>);

// The empty word is the group identity; `is_identity` is the emptiness test.
#[allow(clippy::len_without_is_empty)]
impl NormalForm {
    pub fn identity() -> NormalForm {
        NormalForm(Vec::new())
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// The set of letters occurring in the word (its support).
    pub fn support(&self) -> GenSet {
        self.0.iter().copied().collect()
    }
}

impl std::fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{:?}", g)?;
        }
        write!(f, "⟩")
    }
}

/// ShortLex order: by length, then lexicographically by generator order.
impl Ord for NormalForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for NormalForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Presentation {
    /// Insert one letter into a buffer holding a normal form, keeping it a
    /// normal form.
    fn insert_letter(&self, buf: &mut Vec<Gen>, s: Gen) {
        debug_assert!(s.index() < self.generator_count());
        let mut k = buf.len();
        while k > 0 {
            let t = buf[k - 1];
            if t == s {
                buf.remove(k - 1);
                return;
            }
            if !self.commutes(t, s) {
                break;
            }
            k -= 1;
        }
        let pos = buf[k..]
            .iter()
            .position(|&t| t > s)
            .map_or(buf.len(), |off| k + off);
        buf.insert(pos, s);
    }

    /// ShortLex normal form of an arbitrary word.
    pub fn reduce(&self, word: &[Gen]) -> NormalForm {
        let mut buf = Vec::with_capacity(word.len());
        for &s in word {
            self.insert_letter(&mut buf, s);
        }
        NormalForm(buf)
    }

    /// Normal form of `u · v`.
    pub fn multiply(&self, u: &NormalForm, v: &NormalForm) -> NormalForm {
        let mut buf = u.0.clone();
        buf.reserve(v.0.len());
        for &s in &v.0 {
            self.insert_letter(&mut buf, s);
        }
        NormalForm(buf)
    }

    /// Normal form of `u · s`.
    pub fn right_multiply(&self, u: &NormalForm, s: Gen) -> NormalForm {
        let mut buf = u.0.clone();
        self.insert_letter(&mut buf, s);
        NormalForm(buf)
    }

    /// Normal form of `u⁻¹`. Generators are involutions, so the inverse is
    /// the reversed word; reversal preserves reducedness, so only the
    /// ShortLex ordering needs restoring.
    pub fn invert(&self, u: &NormalForm) -> NormalForm {
        let mut buf = Vec::with_capacity(u.0.len());
        for &s in u.0.iter().rev() {
            self.insert_letter(&mut buf, s);
        }
        debug_assert_eq!(buf.len(), u.0.len());
        NormalForm(buf)
    }

    /// Word-problem decision: do the two words represent the same element?
    pub fn equal(&self, w1: &[Gen], w2: &[Gen]) -> bool {
        self.reduce(w1) == self.reduce(w2)
    }

    /// Word-length distance `ℓ(u⁻¹ v)` in the Cayley graph.
    pub fn distance(&self, u: &NormalForm, v: &NormalForm) -> usize {
        self.multiply(&self.invert(u), v).len()
    }
}
