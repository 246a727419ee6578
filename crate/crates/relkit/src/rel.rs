//! Typed binary relations as bit-packed boolean matrices.
//!
//! A `Rel` of type `A ~ B` stores one row per element of the *target*
//! carrier `A` and one column per element of the *source* carrier `B`;
//! entry `(a, b)` set means `a R b`. Rows are packed into 64-bit words.
//!
//! Relations are value-immutable: every operation returns a fresh value.
//! The special relations ⊥ (empty), ⊤ (full) and `I` (identity) are
//! constructed per carrier pair and never shared globally.
//!
//! Operations that combine relations require compatible carriers and panic
//! otherwise, naming both carriers; see [`crate::error::RelError`] for the
//! non-panicking construction surface.

use std::fmt;
use std::sync::Arc;

use crate::carrier::{require_same, Carrier};
use crate::error::RelError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rel {
    target: Arc<Carrier>,
    source: Arc<Carrier>,
    /// Words per row: ⌈source.size / 64⌉ (0 when the source is empty).
    wpr: usize,
    /// `target.size * wpr` words, row-major.
    bits: Vec<u64>,
}

impl Rel {
    // ----- construction -------------------------------------------------

    /// The empty relation ⊥ of type `target ~ source`.
    pub fn bottom(target: &Arc<Carrier>, source: &Arc<Carrier>) -> Rel {
        let wpr = source.size().div_ceil(64);
        Rel {
            target: Arc::clone(target),
            source: Arc::clone(source),
            wpr,
            bits: vec![0; target.size() * wpr],
        }
    }

    /// The full relation ⊤ of type `target ~ source`.
    pub fn top(target: &Arc<Carrier>, source: &Arc<Carrier>) -> Rel {
        let mut r = Rel::bottom(target, source);
        let masks = r.row_masks();
        for row in r.bits.chunks_mut(r.wpr.max(1)) {
            if r.wpr > 0 {
                row.copy_from_slice(&masks);
            }
        }
        r
    }

    /// The identity relation I of type `c ~ c`.
    pub fn identity(c: &Arc<Carrier>) -> Rel {
        let mut r = Rel::bottom(c, c);
        for i in 0..c.size() {
            r.set(i, i, true);
        }
        r
    }

    /// Build from index pairs; panics if an index is out of range.
    pub fn from_pairs(
        target: &Arc<Carrier>,
        source: &Arc<Carrier>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Rel {
        let mut r = Rel::bottom(target, source);
        for (a, b) in pairs {
            r.set(a, b, true);
        }
        r
    }

    /// Build from label pairs, reporting unknown labels.
    pub fn make<'p>(
        target: &Arc<Carrier>,
        source: &Arc<Carrier>,
        pairs: impl IntoIterator<Item = (&'p str, &'p str)>,
    ) -> Result<Rel, RelError> {
        let mut r = Rel::bottom(target, source);
        for (la, lb) in pairs {
            let a = target.index_of(la).ok_or_else(|| RelError::UnknownLabel {
                carrier: target.name().to_string(),
                label: la.to_string(),
            })?;
            let b = source.index_of(lb).ok_or_else(|| RelError::UnknownLabel {
                carrier: source.name().to_string(),
                label: lb.to_string(),
            })?;
            r.set(a, b, true);
        }
        Ok(r)
    }

    /// Build by evaluating a predicate on every entry.
    pub fn from_fn(
        target: &Arc<Carrier>,
        source: &Arc<Carrier>,
        mut f: impl FnMut(usize, usize) -> bool,
    ) -> Rel {
        let mut r = Rel::bottom(target, source);
        for a in 0..target.size() {
            for b in 0..source.size() {
                if f(a, b) {
                    r.set(a, b, true);
                }
            }
        }
        r
    }

    // ----- access -------------------------------------------------------

    pub fn target(&self) -> &Arc<Carrier> {
        &self.target
    }

    pub fn source(&self) -> &Arc<Carrier> {
        &self.source
    }

    pub fn is_homogeneous(&self) -> bool {
        self.target == self.source
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        assert!(a < self.target.size() && b < self.source.size(), "entry out of range");
        self.bits[a * self.wpr + b / 64] >> (b % 64) & 1 == 1
    }

    pub fn set(&mut self, a: usize, b: usize, value: bool) {
        assert!(a < self.target.size() && b < self.source.size(), "entry out of range");
        let w = &mut self.bits[a * self.wpr + b / 64];
        if value {
            *w |= 1u64 << (b % 64);
        } else {
            *w &= !(1u64 << (b % 64));
        }
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.wpr..(a + 1) * self.wpr]
    }

    /// All set entries in row-major order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.target.size() {
            for (wi, &w) in self.row(a).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    out.push((a, wi * 64 + w.trailing_zeros() as usize));
                    w &= w - 1;
                }
            }
        }
        out
    }

    /// Number of set entries.
    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Valid-bit masks for one row (tail bits beyond the source size are 0).
    fn row_masks(&self) -> Vec<u64> {
        let n = self.source.size();
        (0..self.wpr)
            .map(|wi| {
                let lo = wi * 64;
                let hi = n.min(lo + 64);
                if hi <= lo {
                    0
                } else if hi - lo == 64 {
                    !0
                } else {
                    (1u64 << (hi - lo)) - 1
                }
            })
            .collect()
    }

    // ----- lattice structure -------------------------------------------

    fn require_same_type(&self, op: &str, other: &Rel) {
        require_same(op, &self.target, &other.target);
        require_same(op, &self.source, &other.source);
    }

    /// Pointwise intersection R ∩ S.
    pub fn meet(&self, other: &Rel) -> Rel {
        self.require_same_type("meet", other);
        let mut r = self.clone();
        for (w, o) in r.bits.iter_mut().zip(&other.bits) {
            *w &= o;
        }
        r
    }

    /// Pointwise union R ∪ S.
    pub fn join(&self, other: &Rel) -> Rel {
        self.require_same_type("join", other);
        let mut r = self.clone();
        for (w, o) in r.bits.iter_mut().zip(&other.bits) {
            *w |= o;
        }
        r
    }

    /// Pointwise complement ¬R.
    pub fn complement(&self) -> Rel {
        let mut r = self.clone();
        let masks = r.row_masks();
        for (i, w) in r.bits.iter_mut().enumerate() {
            *w = !*w & masks[i % r.wpr.max(1)];
        }
        r
    }

    /// Inclusion R ⊆ S.
    pub fn leq(&self, other: &Rel) -> bool {
        self.require_same_type("leq", other);
        self.bits.iter().zip(&other.bits).all(|(w, o)| w & !o == 0)
    }

    // ----- monoid structure --------------------------------------------

    /// Composition R ∘ S: `a (R∘S) c ≡ ∃b: a R b ∧ b S c`.
    pub fn compose(&self, other: &Rel) -> Rel {
        require_same("compose", &self.source, &other.target);
        let mut out = Rel::bottom(&self.target, &other.source);
        for a in 0..self.target.size() {
            for (wi, &w) in self.row(a).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let b = wi * 64 + w.trailing_zeros() as usize;
                    w &= w - 1;
                    let (orow_start, wpr) = (b * other.wpr, other.wpr);
                    for k in 0..wpr {
                        out.bits[a * wpr + k] |= other.bits[orow_start + k];
                    }
                }
            }
        }
        out
    }

    /// Converse R˘: `b R˘ a ≡ a R b`.
    pub fn converse(&self) -> Rel {
        let mut out = Rel::bottom(&self.source, &self.target);
        for (a, b) in self.pairs() {
            out.set(b, a, true);
        }
        out
    }

    /// Reflexive-transitive closure R* (homogeneous only), by repeated
    /// squaring of I ∪ R to a fixpoint.
    pub fn rtc(&self) -> Rel {
        assert!(
            self.is_homogeneous(),
            "rtc: requires a homogeneous relation, got `{}` ~ `{}`",
            self.target.name(),
            self.source.name()
        );
        let mut c = self.join(&Rel::identity(&self.target));
        loop {
            let next = c.compose(&c);
            if next == c {
                return c;
            }
            c = next;
        }
    }

    /// Transitive closure R⁺ = R ∘ R*.
    pub fn tc(&self) -> Rel {
        self.compose(&self.rtc())
    }

    // ----- simple predicates -------------------------------------------

    pub fn is_reflexive(&self) -> bool {
        Rel::identity(&self.target).leq(self)
    }

    pub fn is_coreflexive(&self) -> bool {
        self.is_homogeneous() && self.leq(&Rel::identity(&self.target))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_homogeneous() && *self == self.converse()
    }

    pub fn is_transitive(&self) -> bool {
        self.compose(self).leq(self)
    }

    /// Render as a labeled 0/1 grid (for examples and debugging).
    pub fn to_grid_string(&self) -> String {
        let mut s = String::new();
        let rw = self.target.labels().iter().map(|l| l.len()).max().unwrap_or(0);
        s.push_str(&format!(
            "{:rw$} | {}\n",
            "",
            self.source.labels().join(" "),
        ));
        for a in 0..self.target.size() {
            let cells: Vec<String> = (0..self.source.size())
                .map(|b| {
                    let cell = if self.get(a, b) { "1" } else { "." };
                    format!("{:w$}", cell, w = self.source.label(b).len())
                })
                .collect();
            s.push_str(&format!("{:rw$} | {}\n", self.target.label(a), cells.join(" ")));
        }
        s
    }
}

impl fmt::Debug for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .pairs()
            .iter()
            .map(|&(a, b)| format!("({},{})", self.target.label(a), self.source.label(b)))
            .collect();
        write!(
            f,
            "Rel[{}~{}]{{{}}}",
            self.target.name(),
            self.source.name(),
            pairs.join(" ")
        )
    }
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(name: &str, n: usize) -> Arc<Carrier> {
        Carrier::numbered(name, n)
    }

    /// Definitional composition oracle: triple loop over entries.
    fn compose_oracle(r: &Rel, s: &Rel) -> Rel {
        Rel::from_fn(r.target(), s.source(), |a, cc| {
            (0..r.source().size()).any(|b| r.get(a, b) && s.get(b, cc))
        })
    }

    /// Iterate-to-fixpoint closure oracle: keep adding R∘X until stable.
    fn rtc_oracle(r: &Rel) -> Rel {
        let mut x = Rel::identity(r.target());
        loop {
            let next = x.join(&r.compose(&x));
            if next == x {
                return x;
            }
            x = next;
        }
    }

    #[test]
    fn make_special_relations() {
        let a2 = c("A", 2);
        let bot = Rel::bottom(&a2, &a2);
        assert!(bot.is_empty());
        let id = Rel::make(&a2, &a2, [("0", "0"), ("1", "1")]).unwrap();
        assert_eq!(id, Rel::identity(&a2));
        let b3 = c("B", 3);
        let top = Rel::from_pairs(&a2, &b3, (0..2).flat_map(|a| (0..3).map(move |b| (a, b))));
        assert_eq!(top, Rel::top(&a2, &b3));
        assert_eq!(top.count(), 6);
    }

    #[test]
    fn make_rejects_unknown_labels() {
        let a2 = c("A", 2);
        let e = Rel::make(&a2, &a2, [("0", "7")]).unwrap_err();
        assert!(matches!(e, RelError::UnknownLabel { .. }));
    }

    #[test]
    fn compose_identity_and_zero() {
        let a = c("A", 3);
        let b = c("B", 2);
        let r = Rel::from_pairs(&a, &b, [(0, 1), (2, 0)]);
        assert_eq!(Rel::identity(&a).compose(&r), r);
        assert_eq!(r.compose(&Rel::identity(&b)), r);
        assert!(Rel::bottom(&a, &a).compose(&r).is_empty());
        assert!(r.compose(&Rel::bottom(&b, &b)).is_empty());
    }

    #[test]
    fn compose_two_chain_successor_twice_is_empty() {
        let a = c("A", 2);
        let succ = Rel::from_pairs(&a, &a, [(0, 1)]);
        assert!(succ.compose(&succ).is_empty());
    }

    #[test]
    fn compose_matches_oracle_on_randomish_grid() {
        let a = c("A", 5);
        let b = c("B", 7);
        let cc = c("C", 4);
        let r = Rel::from_fn(&a, &b, |x, y| (x * 3 + y * 5) % 4 == 1);
        let s = Rel::from_fn(&b, &cc, |x, y| (x * 7 + y) % 3 == 0);
        assert_eq!(r.compose(&s), compose_oracle(&r, &s));
    }

    #[test]
    fn compose_associative() {
        let a = c("A", 3);
        let r = Rel::from_fn(&a, &a, |x, y| (x + y) % 3 == 1);
        let s = Rel::from_fn(&a, &a, |x, y| x <= y);
        let t = Rel::from_fn(&a, &a, |x, y| x * y % 2 == 0);
        assert_eq!(r.compose(&s).compose(&t), r.compose(&s.compose(&t)));
    }

    #[test]
    fn converse_involution_and_contravariance() {
        let a = c("A", 3);
        let b = c("B", 2);
        let r = Rel::from_pairs(&a, &b, [(0, 1), (1, 0), (2, 1)]);
        assert_eq!(r.converse().converse(), r);
        let s = Rel::from_pairs(&b, &a, [(0, 0), (1, 2)]);
        assert_eq!(r.compose(&s).converse(), s.converse().compose(&r.converse()));
        assert_eq!(Rel::identity(&a).converse(), Rel::identity(&a));
        assert_eq!(Rel::top(&a, &b).converse(), Rel::top(&b, &a));
    }

    #[test]
    fn lattice_laws() {
        let a = c("A", 3);
        let b = c("B", 3);
        let r = Rel::from_fn(&a, &b, |x, y| x < y);
        let top = Rel::top(&a, &b);
        let bot = Rel::bottom(&a, &b);
        assert_eq!(r.meet(&top), r);
        assert_eq!(r.join(&r.complement()), top);
        assert_eq!(r.meet(&r.complement()), bot);
        assert!(bot.leq(&r) && r.leq(&top));
        assert_eq!(r.complement().complement(), r);
        // converse is a lattice isomorphism
        let s = Rel::from_fn(&a, &b, |x, y| x != y);
        assert_eq!(r.meet(&s).converse(), r.converse().meet(&s.converse()));
        assert_eq!(r.join(&s).converse(), r.converse().join(&s.converse()));
    }

    #[test]
    fn rtc_cases() {
        let a = c("A", 3);
        assert_eq!(Rel::bottom(&a, &a).rtc(), Rel::identity(&a));
        assert_eq!(Rel::identity(&a).rtc(), Rel::identity(&a));
        let r = Rel::from_pairs(&a, &a, [(0, 1), (1, 2)]);
        let expect = Rel::identity(&a).join(&Rel::from_pairs(&a, &a, [(0, 1), (1, 2), (0, 2)]));
        assert_eq!(r.rtc(), expect);
        assert_eq!(r.rtc(), rtc_oracle(&r));
        // larger sanity sweep against the fixpoint oracle
        for seed in 0..20usize {
            let g = Rel::from_fn(&a, &a, |x, y| (x * 5 + y * 3 + seed) % 7 < 2);
            assert_eq!(g.rtc(), rtc_oracle(&g));
        }
    }

    #[test]
    fn tc_is_strict_part_of_closure_composition() {
        let a = c("A", 4);
        let r = Rel::from_pairs(&a, &a, [(0, 1), (1, 2), (2, 0)]);
        let tc = r.tc();
        assert!(r.leq(&tc));
        assert!(tc.is_transitive());
        assert_eq!(tc.join(&Rel::identity(&a)), r.rtc());
    }

    #[test]
    fn empty_carrier_operations() {
        let e = Carrier::new("E", Vec::<String>::new()).unwrap();
        let a = c("A", 2);
        let z = Rel::bottom(&e, &a);
        assert_eq!(z, Rel::top(&e, &a)); // no rows: ⊥ = ⊤
        assert_eq!(z.complement(), z);
        let w = Rel::bottom(&a, &e);
        assert_eq!(w.compose(&z), Rel::bottom(&a, &a));
        assert!(w.compose(&z).is_empty());
        let ze = Rel::bottom(&e, &e);
        assert_eq!(ze.rtc(), Rel::identity(&e));
        assert_eq!(z.converse(), w);
    }

    #[test]
    #[should_panic(expected = "compose: carrier mismatch")]
    fn compose_mismatch_panics() {
        let a = c("A", 2);
        let b = c("B", 3);
        let r = Rel::bottom(&a, &b);
        let s = Rel::bottom(&a, &b);
        let _ = r.compose(&s);
    }

    #[test]
    fn wide_relation_crosses_word_boundary() {
        let a = c("A", 2);
        let b = c("B", 130);
        let r = Rel::from_pairs(&a, &b, [(0, 0), (0, 63), (0, 64), (1, 129)]);
        assert!(r.get(0, 63) && r.get(0, 64) && r.get(1, 129));
        assert_eq!(r.count(), 4);
        assert_eq!(r.complement().count(), 2 * 130 - 4);
        assert_eq!(r.converse().converse(), r);
        let s = Rel::top(&b, &a);
        assert_eq!(r.compose(&s), Rel::top(&a, &a));
    }
}
