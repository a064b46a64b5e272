//! Monomial orders: Lex, DegLex and (degree) RevLex with an optional
//! variable permutation, weight refinements `tau a`, and the extension
//! `tau a'` to `S = R[t]`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{format_terms, Polynomial, PolyRing, Term, WeightVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseKind {
    Lex,
    DegLex,
    /// Degree first, then reverse lexicographic.
    RevLex,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrderSpec {
    /// `perm[k]` is the index of the `k`-th largest variable; `None` keeps
    /// the declaration order.
    Base { kind: BaseKind, perm: Option<Vec<usize>> },
    /// Compare `a`-degrees first, then `base`.
    WeightRefined { weight: WeightVector, base: Box<OrderSpec> },
    /// On `R[t]`: `a'`-degree first, then the smaller `t`-exponent wins, then
    /// `base` on the `R` part.
    ExtendedToT { weight: WeightVector, base: Box<OrderSpec> },
    /// Block order: DegLex on the `eliminated` variables (natural order among
    /// them), ties broken by `rest` on the whole vector.
    Elimination { eliminated: Vec<usize>, rest: Box<OrderSpec> },
}

impl OrderSpec {
    pub fn lex() -> Self {
        OrderSpec::Base { kind: BaseKind::Lex, perm: None }
    }

    pub fn deglex() -> Self {
        OrderSpec::Base { kind: BaseKind::DegLex, perm: None }
    }

    pub fn revlex() -> Self {
        OrderSpec::Base { kind: BaseKind::RevLex, perm: None }
    }

    pub fn permuted(kind: BaseKind, perm: Vec<usize>) -> Self {
        OrderSpec::Base { kind, perm: Some(perm) }
    }

    pub fn weight_refined(weight: WeightVector, base: OrderSpec) -> Self {
        OrderSpec::WeightRefined { weight, base: Box::new(base) }
    }

    pub fn extended_to_t(weight: WeightVector, base: OrderSpec) -> Self {
        OrderSpec::ExtendedToT { weight, base: Box::new(base) }
    }

    pub fn elimination(eliminated: Vec<usize>, rest: OrderSpec) -> Self {
        OrderSpec::Elimination { eliminated, rest: Box::new(rest) }
    }

    fn contains_extension(&self) -> bool {
        match self {
            OrderSpec::Base { .. } => false,
            OrderSpec::ExtendedToT { .. } => true,
            OrderSpec::WeightRefined { base, .. } => base.contains_extension(),
            OrderSpec::Elimination { rest, .. } => rest.contains_extension(),
        }
    }

    /// Check that this order makes sense on `ring`.
    pub fn validate(&self, ring: &PolyRing) -> Result<()> {
        match self {
            OrderSpec::ExtendedToT { weight, base } => {
                if ring.homvar().is_none() {
                    return Err(Error::InvalidOrder("extended order needs a ring with a homogenizing variable".into()));
                }
                if base.contains_extension() {
                    return Err(Error::InvalidOrder("extended orders do not nest".into()));
                }
                weight.check_len(ring.base_nvars())?;
                base.validate_arity(ring.base_nvars())
            }
            _ => {
                if self.contains_extension() {
                    return Err(Error::InvalidOrder("extended order must be outermost".into()));
                }
                self.validate_arity(ring.nvars())
            }
        }
    }

    fn validate_arity(&self, n: usize) -> Result<()> {
        match self {
            OrderSpec::Base { perm: None, .. } => Ok(()),
            OrderSpec::Base { perm: Some(p), .. } => {
                let mut seen = vec![false; n];
                if p.len() != n {
                    return Err(Error::InvalidOrder(format!("permutation of length {} for {n} variables", p.len())));
                }
                for &i in p {
                    if i >= n || seen[i] {
                        return Err(Error::InvalidOrder(format!("{p:?} is not a permutation")));
                    }
                    seen[i] = true;
                }
                Ok(())
            }
            OrderSpec::WeightRefined { weight, base } => {
                weight.check_len(n)?;
                base.validate_arity(n)
            }
            OrderSpec::ExtendedToT { .. } => Err(Error::InvalidOrder("misplaced extended order".into())),
            OrderSpec::Elimination { eliminated, rest } => {
                if eliminated.iter().any(|&i| i >= n) {
                    return Err(Error::InvalidOrder("eliminated variable out of range".into()));
                }
                rest.validate_arity(n)
            }
        }
    }

    /// Compare exponent vectors. Both slices must have the ring's length.
    pub fn cmp_exponents(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            OrderSpec::Base { kind, perm } => cmp_base(*kind, perm.as_deref(), a, b),
            OrderSpec::WeightRefined { weight, base } => {
                weight.dot(a).cmp(&weight.dot(b)).then_with(|| base.cmp_exponents(a, b))
            }
            OrderSpec::ExtendedToT { weight, base } => {
                let n = a.len() - 1;
                let da = weight.dot(&a[..n]) + u128::from(a[n]);
                let db = weight.dot(&b[..n]) + u128::from(b[n]);
                da.cmp(&db)
                    .then_with(|| b[n].cmp(&a[n]))
                    .then_with(|| base.cmp_exponents(&a[..n], &b[..n]))
            }
            OrderSpec::Elimination { eliminated, rest } => {
                let da: u64 = eliminated.iter().map(|&i| u64::from(a[i])).sum();
                let db: u64 = eliminated.iter().map(|&i| u64::from(b[i])).sum();
                da.cmp(&db)
                    .then_with(|| {
                        for &i in eliminated {
                            match a[i].cmp(&b[i]) {
                                Ordering::Equal => continue,
                                o => return o,
                            }
                        }
                        Ordering::Equal
                    })
                    .then_with(|| rest.cmp_exponents(a, b))
            }
        }
    }

    /// Total order on the monomials of `ring`; `Equal` iff `m1 == m2`.
    pub fn compare(&self, m1: &crate::poly::Monomial, m2: &crate::poly::Monomial, ring: &PolyRing) -> Result<Ordering> {
        if m1.nvars() != ring.nvars() || m2.nvars() != ring.nvars() {
            return Err(Error::RingMismatch("monomial arity differs from the ring".into()));
        }
        self.validate(ring)?;
        Ok(self.cmp_exponents(m1.exponents(), m2.exponents()))
    }

    /// The term of `f` whose monomial is largest under this order.
    pub fn leading_term<'a>(&self, f: &'a Polynomial) -> Result<&'a Term> {
        self.validate(f.ring())?;
        f.terms()
            .iter()
            .max_by(|s, t| self.cmp_exponents(s.monomial().exponents(), t.monomial().exponents()))
            .ok_or(Error::ZeroPolynomial("leading term"))
    }

    /// `f` printed with its terms descending under this order.
    pub fn format(&self, f: &Polynomial) -> String {
        let mut terms: Vec<&Term> = f.terms().iter().collect();
        terms.sort_by(|s, t| self.cmp_exponents(t.monomial().exponents(), s.monomial().exponents()));
        format_terms(f.ring(), terms.into_iter())
    }

    /// Text form accepted by [`OrderSpec::parse`] (extended and elimination
    /// orders print in a descriptive form that does not re-parse).
    pub fn to_text(&self, ring: &PolyRing) -> String {
        match self {
            OrderSpec::Base { kind, perm } => {
                let name = match kind {
                    BaseKind::Lex => "lex",
                    BaseKind::DegLex => "deglex",
                    BaseKind::RevLex => "revlex",
                };
                match perm {
                    None => name.to_string(),
                    Some(p) => {
                        let vars: Vec<&str> = p.iter().map(|&i| ring.names()[i].as_str()).collect();
                        format!("{name}({})", vars.join(","))
                    }
                }
            }
            OrderSpec::WeightRefined { weight, base } => {
                let w: Vec<String> = weight.entries().iter().map(u64::to_string).collect();
                format!("weight({}; {})", w.join(","), base.to_text(ring))
            }
            OrderSpec::ExtendedToT { weight, base } => {
                let w: Vec<String> = weight.entries().iter().map(u64::to_string).collect();
                format!("extended({}; {})", w.join(","), base.to_text(ring))
            }
            OrderSpec::Elimination { eliminated, rest } => {
                let vars: Vec<&str> = eliminated.iter().map(|&i| ring.names()[i].as_str()).collect();
                format!("eliminate({}; {})", vars.join(","), rest.to_text(ring))
            }
        }
    }

    /// Parse `lex`, `deglex`, `revlex`, `lex(y,x,z)` or `weight(3,2,1; lex)`.
    pub fn parse(text: &str, ring: &PolyRing) -> Result<Self> {
        let s = text.trim();
        let bad = |msg: &str| Error::InvalidOrder(format!("{msg}: `{s}`"));
        let (head, args) = match s.find('(') {
            Some(i) => {
                if !s.ends_with(')') {
                    return Err(bad("missing `)`"));
                }
                (s[..i].trim(), Some(&s[i + 1..s.len() - 1]))
            }
            None => (s, None),
        };
        let head = head.to_ascii_lowercase();
        let kind = match head.as_str() {
            "lex" => Some(BaseKind::Lex),
            "deglex" => Some(BaseKind::DegLex),
            "revlex" | "degrevlex" => Some(BaseKind::RevLex),
            _ => None,
        };
        let order = match (kind, args) {
            (Some(kind), None) => OrderSpec::Base { kind, perm: None },
            (Some(kind), Some(list)) => {
                let perm = list
                    .split(',')
                    .map(|v| ring.index_of(v.trim()).ok_or_else(|| bad(&format!("unknown variable `{}`", v.trim()))))
                    .collect::<Result<Vec<_>>>()?;
                OrderSpec::Base { kind, perm: Some(perm) }
            }
            (None, Some(inner)) if head == "weight" => {
                let (ws, base) = inner.split_once(';').ok_or_else(|| bad("expected `weight(a1,...,an; base)`"))?;
                let entries = ws
                    .split(',')
                    .map(|w| w.trim().parse::<u64>().map_err(|_| bad("weights must be positive integers")))
                    .collect::<Result<Vec<_>>>()?;
                let weight = WeightVector::new(entries)?;
                OrderSpec::weight_refined(weight, OrderSpec::parse(base, ring)?)
            }
            _ => return Err(bad("unknown order")),
        };
        order.validate(ring)?;
        Ok(order)
    }
}

fn cmp_base(kind: BaseKind, perm: Option<&[usize]>, a: &[u32], b: &[u32]) -> Ordering {
    let n = a.len();
    let at = |k: usize| perm.map_or(k, |p| p[k]);
    let lex = || {
        for k in 0..n {
            let i = at(k);
            match a[i].cmp(&b[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    };
    match kind {
        BaseKind::Lex => lex(),
        BaseKind::DegLex => degree(a).cmp(&degree(b)).then_with(lex),
        BaseKind::RevLex => degree(a).cmp(&degree(b)).then_with(|| {
            // The smaller exponent in the last differing (smallest) variable wins.
            for k in (0..n).rev() {
                let i = at(k);
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        }),
    }
}

fn degree(a: &[u32]) -> u64 {
    a.iter().map(|&e| u64::from(e)).sum()
}

/// Display helper binding an order to a ring.
pub struct OrderDisplay<'a>(pub &'a OrderSpec, pub &'a PolyRing);

impl fmt::Display for OrderDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.to_text(self.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Monomial, Ring};

    fn ring(names: &[&str]) -> Ring {
        PolyRing::new(names.iter().copied()).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_ignores_degree() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(OrderSpec::lex().compare(&m(&[1, 0, 0]), &m(&[0, 1, 5]), &r).unwrap(), Ordering::Greater);
        assert_eq!(OrderSpec::deglex().compare(&m(&[1, 0, 0]), &m(&[0, 1, 5]), &r).unwrap(), Ordering::Less);
    }

    #[test]
    fn leading_terms_of_the_standard_example() {
        let r = ring(&["x1", "x2", "x3", "x4"]);
        let f = Polynomial::parse(&r, "x1 + x2*x4 + x3^2").unwrap();
        let lead = |o: OrderSpec| o.leading_term(&f).unwrap().monomial().clone();
        assert_eq!(lead(OrderSpec::lex()), m(&[1, 0, 0, 0]));
        assert_eq!(lead(OrderSpec::deglex()), m(&[0, 1, 0, 1]));
        assert_eq!(lead(OrderSpec::revlex()), m(&[0, 0, 2, 0]));
    }

    #[test]
    fn monomial_leads_itself_everywhere() {
        let r = ring(&["x", "y"]);
        let f = Polynomial::parse(&r, "5*x^2*y").unwrap();
        for o in [OrderSpec::lex(), OrderSpec::deglex(), OrderSpec::revlex()] {
            let t = o.leading_term(&f).unwrap();
            assert_eq!(t.coeff(), &crate::poly::integer(5));
            assert_eq!(t.monomial(), &m(&[2, 1]));
        }
        assert!(OrderSpec::lex().leading_term(&Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn extended_order_rules() {
        let s = PolyRing::with_homvar(["x", "y"], "t").unwrap();
        let o = OrderSpec::extended_to_t(WeightVector::ones(2), OrderSpec::lex());
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 1, 1]), &s).unwrap(), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[1, 0, 2]), &s).unwrap(), Ordering::Less);
        // Same a'-degree: smaller t power wins.
        assert_eq!(o.compare(&m(&[0, 2, 0]), &m(&[1, 0, 1]), &s).unwrap(), Ordering::Greater);
        let r = ring(&["x", "y"]);
        assert!(o.compare(&m(&[1, 0]), &m(&[0, 1]), &r).is_err());
    }

    #[test]
    fn parse_and_print() {
        let r = ring(&["x", "y", "z"]);
        let o = OrderSpec::parse("lex(y,x,z)", &r).unwrap();
        assert_eq!(o, OrderSpec::permuted(BaseKind::Lex, vec![1, 0, 2]));
        assert_eq!(o.to_text(&r), "lex(y,x,z)");
        let w = OrderSpec::parse("weight(3,2,1; lex)", &r).unwrap();
        assert_eq!(w.to_text(&r), "weight(3,2,1; lex)");
        assert_eq!(OrderSpec::parse(&w.to_text(&r), &r).unwrap(), w);
        assert!(OrderSpec::parse("lex(x,x,z)", &r).is_err());
        assert!(OrderSpec::parse("weight(3,0,1; lex)", &r).is_err());
        assert!(OrderSpec::parse("weight(3,1; lex)", &r).is_err());
        assert!(OrderSpec::parse("grevlex(", &r).is_err());
    }

    #[test]
    fn permuted_revlex() {
        let r = ring(&["x", "y"]);
        // With y > x, revlex on degree 2 ranks y^2 > x*y > x^2.
        let o = OrderSpec::parse("revlex(y,x)", &r).unwrap();
        assert_eq!(o.compare(&m(&[0, 2]), &m(&[1, 1]), &r).unwrap(), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1]), &m(&[2, 0]), &r).unwrap(), Ordering::Greater);
        let f = Polynomial::parse(&r, "x^2 + x*y + y^2").unwrap();
        assert_eq!(o.format(&f), "y^2 + x*y + x^2");
    }
}
