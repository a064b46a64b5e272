use std::fmt;

use crate::poly::{canonical_cmp, Monomial, PolyRing};

/// Monomial ideal stored by its minimal generators, sorted ascending in the
/// canonical degree-lexicographic order so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    mingens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
        gens.sort_by(|a, b| canonical_cmp(a.exponents(), b.exponents()));
        gens.dedup();
        // Ascending degree: a divisor always precedes its multiples.
        let mut mingens: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !mingens.iter().any(|h| h.divides(&g)) {
                mingens.push(g);
            }
        }
        MonomialIdeal { nvars, mingens }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, mingens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn mingens(&self) -> &[Monomial] {
        &self.mingens
    }

    pub fn is_zero(&self) -> bool {
        self.mingens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.mingens.iter().any(|g| g.divides(m))
    }

    /// `self + (m)`.
    pub fn with_generator(&self, m: Monomial) -> Self {
        MonomialIdeal::new(self.nvars, self.mingens.iter().cloned().chain(std::iter::once(m)))
    }

    /// `self : m`.
    pub fn colon(&self, m: &Monomial) -> Self {
        let gens = self.mingens.iter().map(|g| {
            Monomial::new(g.exponents().iter().zip(m.exponents()).map(|(&a, &b)| a.saturating_sub(b)).collect())
        });
        MonomialIdeal::new(self.nvars, gens)
    }

    /// `self` contains every generator of `other`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.mingens.iter().all(|g| self.contains(g))
    }

    /// Least common multiple of all minimal generators.
    pub fn lcm(&self) -> Monomial {
        self.mingens.iter().fold(Monomial::one(self.nvars), |acc, g| acc.lcm(g))
    }

    pub fn to_text(&self, ring: &PolyRing) -> String {
        let parts: Vec<String> = self.mingens.iter().map(|m| m.fmt_with(ring)).collect();
        if parts.is_empty() {
            "(0)".into()
        } else {
            format!("({})", parts.join(", "))
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.mingens.iter().map(|m| format!("{:?}", m.exponents())).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn minimalizes_and_sorts() {
        let a = MonomialIdeal::new(2, [m(&[2, 1]), m(&[1, 1]), m(&[3, 0]), m(&[1, 1])]);
        assert_eq!(a.mingens(), &[m(&[1, 1]), m(&[3, 0])]);
        let b = MonomialIdeal::new(2, [m(&[3, 0]), m(&[1, 1])]);
        assert_eq!(a, b);
    }

    #[test]
    fn colon_and_sum() {
        let i = MonomialIdeal::new(2, [m(&[2, 0]), m(&[1, 1])]);
        assert_eq!(i.colon(&m(&[1, 0])), MonomialIdeal::new(2, [m(&[1, 0]), m(&[0, 1])]));
        assert_eq!(i.with_generator(m(&[0, 2])).mingens().len(), 3);
        assert!(i.contains(&m(&[5, 1])));
        assert!(!i.contains(&m(&[1, 0])));
        assert_eq!(i.lcm(), m(&[2, 1]));
    }
}
