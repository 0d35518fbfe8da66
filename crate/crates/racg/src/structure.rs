//! Structural analysis of a presentation: spherical subsets, the ∞-graph
//! decomposition, and the boundary-minimality verdict.
//!
//! The ∞-graph has an edge between two generators when their product has
//! infinite order, i.e. it is the complement of the commutation graph. The
//! group splits as a direct product over the connected components of the
//! ∞-graph; singleton components are the finite factors. `S̃` denotes the
//! union of the components of size ≥ 2. The boundary of the Davis complex
//! is minimal exactly when the ∞-graph on `S̃` is connected (and `S̃` is
//! nonempty); with two or more infinite factors the boundary splits as a
//! join and cannot be minimal.

use crate::presentation::{Gen, GenSet, Presentation};

/// The ∞-graph component decomposition of the generator set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Connected components of the ∞-graph, in order of their least
    /// generator. Singletons included.
    pub components: Vec<GenSet>,
    /// Union of the components of size ≥ 2.
    pub s_tilde: GenSet,
    /// Union of the singleton components (the finite direct factor).
    pub finite_part: GenSet,
}

impl Decomposition {
    /// Components of size ≥ 2, i.e. the infinite irreducible factors.
    pub fn infinite_components(&self) -> impl Iterator<Item = GenSet> + '_ {
        self.components.iter().copied().filter(|c| c.len() >= 2)
    }
}

/// Verdict on minimality of the boundary of the Davis complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalityVerdict {
    /// The group is finite (the commutation graph is complete); the
    /// boundary is empty.
    EmptyBoundary,
    /// Every infinite part lies in one irreducible factor; the boundary is
    /// minimal.
    Minimal,
    /// At least two infinite factors: the boundary splits as a join of the
    /// first infinite component against the remaining ones.
    NotMinimal { part_a: GenSet, part_b: GenSet },
}

impl Presentation {
    /// Is the standard parabolic subgroup on `t` finite? In a right-angled
    /// system that happens exactly when `t` is a clique of the commutation
    /// graph.
    pub fn is_spherical(&self, t: GenSet) -> bool {
        t.iter().all(|g| t.without(GenSet::singleton(g)).is_subset_of(self.commuters(g)))
    }

    pub fn is_infinite(&self, t: GenSet) -> bool {
        !self.is_spherical(t)
    }

    /// All maximal cliques of the commutation graph, each reported as a
    /// sorted set, the list sorted lexicographically.
    pub fn maximal_spherical_subsets(&self) -> Vec<GenSet> {
        self.maximal_cliques_within(self.all_gens())
    }

    /// Maximal cliques of the commutation graph induced on `within`.
    /// Bron–Kerbosch with a max-degree pivot; output order is normalized by
    /// an explicit sort, so the traversal order does not matter.
    pub(crate) fn maximal_cliques_within(&self, within: GenSet) -> Vec<GenSet> {
        fn bk(
            adj: &dyn Fn(Gen) -> GenSet,
            r: GenSet,
            mut p: GenSet,
            mut x: GenSet,
            out: &mut Vec<GenSet>,
        ) {
            if p.is_empty() && x.is_empty() {
                out.push(r);
                return;
            }
            let pivot = (p | x)
                .iter()
                .max_by_key(|&u| (adj(u) & p).len())
                .expect("p | x nonempty");
            for v in p.without(adj(pivot)).iter() {
                let n = adj(v);
                bk(adj, r.with(v), p & n, x & n, out);
                p.remove(v);
                x.insert(v);
            }
        }

        let adj = |g: Gen| self.commuters(g) & within;
        let mut out = Vec::new();
        if !within.is_empty() {
            bk(&adj, GenSet::EMPTY, within, GenSet::EMPTY, &mut out);
        }
        out.sort_by(|a, b| a.cmp_lex(*b));
        out
    }

    /// Connected components of the ∞-graph.
    pub fn irreducible_components(&self) -> Decomposition {
        let all = self.all_gens();
        let inf_adj = |g: Gen| all.without(self.commuters(g)).without(GenSet::singleton(g));
        let mut seen = GenSet::EMPTY;
        let mut components = Vec::new();
        for g in self.gens() {
            if seen.contains(g) {
                continue;
            }
            let mut comp = GenSet::singleton(g);
            let mut frontier = vec![g];
            while let Some(u) = frontier.pop() {
                for v in inf_adj(u).without(comp).iter() {
                    comp.insert(v);
                    frontier.push(v);
                }
            }
            seen |= comp;
            components.push(comp);
        }
        let mut s_tilde = GenSet::EMPTY;
        let mut finite_part = GenSet::EMPTY;
        for c in &components {
            if c.len() >= 2 {
                s_tilde |= *c;
            } else {
                finite_part |= *c;
            }
        }
        Decomposition {
            components,
            s_tilde,
            finite_part,
        }
    }

    /// Decide minimality of the boundary of the Davis complex.
    pub fn boundary_minimal(&self) -> MinimalityVerdict {
        let decomp = self.irreducible_components();
        let infinite: Vec<GenSet> = decomp.infinite_components().collect();
        match infinite.len() {
            0 => MinimalityVerdict::EmptyBoundary,
            1 => MinimalityVerdict::Minimal,
            _ => {
                let part_a = infinite[0];
                let part_b = infinite[1..]
                    .iter()
                    .fold(GenSet::EMPTY, |acc, c| acc | *c);
                MinimalityVerdict::NotMinimal { part_a, part_b }
            }
        }
    }

    /// Is the orbit of the parabolic subgroup on `t` dense in the boundary?
    /// Holds exactly when `t` meets every infinite irreducible factor in a
    /// non-spherical set.
    pub fn parabolic_orbit_dense(&self, t: GenSet) -> bool {
        self.irreducible_components()
            .infinite_components()
            .all(|c| self.is_infinite(c & t))
    }
}
