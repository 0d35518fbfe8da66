//! Right-angled Coxeter presentations.
//!
//! A right-angled Coxeter system is determined by its set of generators
//! together with the *commutation graph*: an edge between two generators
//! means their product has order 2, no edge means infinite order. Every
//! generator is an involution. This module fixes the two in-memory
//! workhorses used everywhere else: [`Gen`], an index into the ordered
//! generator list (the generator order is the tiebreak order for ShortLex
//! and for every deterministic selection in the crate), and [`GenSet`], a
//! bitset over generators.

use crate::error::{Error, Result};

/// Hard cap on the generator count, so subsets fit in a `u32` bitmask.
pub const MAX_GENERATORS: usize = 32;

/// A generator, identified by its position in the declared generator order.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(pub(crate) u8);

impl Gen {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Debug for Gen {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "g{}", self.0)
    }
}

/// A set of generators, stored as a bitmask.
///
/// The derived `Ord` compares raw masks and exists only so the type can key
/// ordered maps; it is *not* the lexicographic order on sorted generator
/// sequences. Use [`GenSet::cmp_lex`] when an ordering visible to users is
/// required.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenSet(u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn singleton(g: Gen) -> GenSet {
        GenSet(1 << g.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, g: Gen) -> bool {
        self.0 & (1 << g.0) != 0
    }

    pub fn insert(&mut self, g: Gen) {
        self.0 |= 1 << g.0;
    }

    pub fn remove(&mut self, g: Gen) {
        self.0 &= !(1 << g.0);
    }

    pub fn with(self, g: Gen) -> GenSet {
        GenSet(self.0 | (1 << g.0))
    }

    pub fn without(self, other: GenSet) -> GenSet {
        GenSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// The only element, if this is a singleton.
    pub fn sole_element(self) -> Option<Gen> {
        if self.0.count_ones() == 1 {
            Some(Gen(self.0.trailing_zeros() as u8))
        } else {
            None
        }
    }

    pub fn first(self) -> Option<Gen> {
        if self.0 == 0 {
            None
        } else {
            Some(Gen(self.0.trailing_zeros() as u8))
        }
    }

    /// Iterate members in generator order.
    pub fn iter(self) -> impl Iterator<Item = Gen> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros();
                bits &= bits - 1;
                Some(Gen(i as u8))
            }
        })
    }

    /// Lexicographic comparison of the two sets as sorted generator
    /// sequences ({a} < {a,c} < {b}). This is the order reports use.
    pub fn cmp_lex(self, other: GenSet) -> std::cmp::Ordering {
        let mut xs = self.iter();
        let mut ys = other.iter();
        loop {
            match (xs.next(), ys.next()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (Some(x), Some(y)) => {
                    if x != y {
                        return x.cmp(&y);
                    }
                }
            }
        }
    }
}

impl std::ops::BitOr for GenSet {
    type Output = GenSet;
    fn bitor(self, rhs: GenSet) -> GenSet {
        GenSet(self.0 | rhs.0)
    }
}

impl std::ops::BitOrAssign for GenSet {
    fn bitor_assign(&mut self, rhs: GenSet) {
        self.0 |= rhs.0;
    }
}

impl std::ops::BitAnd for GenSet {
    type Output = GenSet;
    fn bitand(self, rhs: GenSet) -> GenSet {
        GenSet(self.0 & rhs.0)
    }
}

impl FromIterator<Gen> for GenSet {
    fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> GenSet {
        let mut s = GenSet::EMPTY;
        for g in iter {
            s.insert(g);
        }
        s
    }
}

impl std::fmt::Debug for GenSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The order of the product of two distinct involutions `s`, `t`:
/// 2 when they commute, infinite otherwise. `One` is the degenerate
/// `s == t` case.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ProductOrder {
    One,
    Two,
    Infinity,
}

impl std::fmt::Display for ProductOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProductOrder::One => write!(f, "1"),
            ProductOrder::Two => write!(f, "2"),
            ProductOrder::Infinity => write!(f, "inf"),
        }
    }
}

/// A right-angled Coxeter presentation: ordered generator names plus the
/// symmetric, irreflexive commutation relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    /// Commutation adjacency per generator; never contains the generator
    /// itself.
    adj: Vec<GenSet>,
}

impl Presentation {
    pub fn new<S: AsRef<str>>(names: &[S], commuting_pairs: &[(S, S)]) -> Result<Presentation> {
        if names.is_empty() {
            return Err(Error::NoGenerators);
        }
        if names.len() > MAX_GENERATORS {
            return Err(Error::TooManyGenerators(names.len()));
        }
        let names: Vec<String> = names.iter().map(|n| n.as_ref().to_owned()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::EmptyGeneratorName);
            }
            if names[..i].contains(n) {
                return Err(Error::DuplicateGenerator(n.clone()));
            }
        }
        let mut p = Presentation {
            adj: vec![GenSet::EMPTY; names.len()],
            names,
        };
        for (a, b) in commuting_pairs {
            let s = p.gen_by_name(a.as_ref())?;
            let t = p.gen_by_name(b.as_ref())?;
            if s == t {
                return Err(Error::SelfCommutation(p.names[s.index()].clone()));
            }
            p.adj[s.index()].insert(t);
            p.adj[t.index()].insert(s);
        }
        Ok(p)
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> {
        (0..self.names.len() as u8).map(Gen)
    }

    pub fn all_gens(&self) -> GenSet {
        self.gens().collect()
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn gen_by_name(&self, name: &str) -> Result<Gen> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Gen(i as u8))
            .ok_or_else(|| Error::UnknownGenerator(name.to_owned()))
    }

    /// Generators commuting with `g` (excluding `g` itself).
    pub fn commuters(&self, g: Gen) -> GenSet {
        self.adj[g.index()]
    }

    /// Generators that do *not* commute with `g`, including `g`.
    pub fn non_commuters(&self, g: Gen) -> GenSet {
        self.all_gens().without(self.adj[g.index()])
    }

    pub fn commutes(&self, s: Gen, t: Gen) -> bool {
        self.adj[s.index()].contains(t)
    }

    /// Order of the product `s·t`: 1, 2, or infinity. Infinite order is
    /// exactly the absence of a commutation edge.
    pub fn order_product(&self, s: Gen, t: Gen) -> ProductOrder {
        if s == t {
            ProductOrder::One
        } else if self.commutes(s, t) {
            ProductOrder::Two
        } else {
            ProductOrder::Infinity
        }
    }

    /// All unordered commuting pairs, sorted by generator order.
    pub fn commuting_pairs(&self) -> Vec<(Gen, Gen)> {
        let mut out = Vec::new();
        for s in self.gens() {
            for t in self.adj[s.index()].iter() {
                if s < t {
                    out.push((s, t));
                }
            }
        }
        out
    }

    /// The sub-presentation on `t`, generators kept in the ambient order.
    /// Returns the new presentation and the map from new indices to the
    /// generators of `self`.
    pub fn induced(&self, t: GenSet) -> Result<(Presentation, Vec<Gen>)> {
        if t.is_empty() {
            return Err(Error::NoGenerators);
        }
        let old: Vec<Gen> = t.iter().collect();
        let names: Vec<String> = old.iter().map(|&g| self.names[g.index()].clone()).collect();
        let mut adj = vec![GenSet::EMPTY; old.len()];
        for (i, &g) in old.iter().enumerate() {
            for (j, &h) in old.iter().enumerate() {
                if self.commutes(g, h) {
                    adj[i].insert(Gen(j as u8));
                }
            }
        }
        Ok((Presentation { names, adj }, old))
    }

    /// Parse a whitespace-separated word of generator names.
    pub fn parse_word(&self, text: &str) -> Result<Vec<Gen>> {
        text.split_whitespace().map(|n| self.gen_by_name(n)).collect()
    }

    /// Parse a whitespace-separated set of generator names.
    pub fn parse_subset(&self, text: &str) -> Result<GenSet> {
        text.split_whitespace()
            .map(|n| self.gen_by_name(n))
            .collect()
    }

    pub fn word_string(&self, word: &[Gen]) -> String {
        if word.is_empty() {
            "ε".to_owned()
        } else {
            word.iter()
                .map(|&g| self.name(g))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }

    pub fn set_string(&self, set: GenSet) -> String {
        set.iter()
            .map(|g| self.name(g))
            .collect::<Vec<_>>()
            .join(", ")
    }
}
