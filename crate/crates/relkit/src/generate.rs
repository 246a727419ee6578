//! Instance generation for the law harness: exhaustive enumeration of
//! small relations and seeded random generation of structured objects
//! (pers, preorders, provisional orderings, functional and difunctional
//! relations, block-ordered relations, membership relations, dense
//! relations).
//!
//! Every structured generator asserts the defining predicate of what it
//! claims to produce before returning, so a defective generator fails
//! loudly rather than silently weakening the laws that consume it.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::carrier::Carrier;
use crate::domain::{is_difunctional, is_functional, is_per};
use crate::error::RelError;
use crate::order::{
    is_block_ordered, is_provisional_linear_ordering, is_provisional_ordering,
    is_provisional_preorder,
};
use crate::rel::Rel;

/// Exhaustive enumeration is limited to this many matrix entries
/// (2^16 relations at the ceiling).
pub const EXHAUSTIVE_BITS_LIMIT: usize = 16;

/// Resource budget for a law run: the seed, the number of random
/// instances per law, and the exhaustive carrier-size ceilings for
/// single-relation and multi-relation laws.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub seed: u64,
    pub random_instances: usize,
    pub exhaustive_unary: usize,
    pub exhaustive_multi: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget { seed: 0xC0FF_EE00, random_instances: 40, exhaustive_unary: 3, exhaustive_multi: 2 }
    }
}

impl Budget {
    /// A quick configuration for smoke tests.
    pub fn smoke() -> Budget {
        Budget { random_instances: 8, ..Budget::default() }
    }

    pub fn with_seed(self, seed: u64) -> Budget {
        Budget { seed, ..self }
    }

    pub fn with_instances(self, random_instances: usize) -> Budget {
        Budget { random_instances, ..self }
    }

    /// A deterministic generator for one named stream under this
    /// budget's seed (distinct streams are statistically independent).
    pub fn rng(&self, stream: &str) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        // Derive the stream id from the name with a simple FNV-1a hash;
        // the stream keeps per-law sequences independent of ordering.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for byte in stream.bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        rng.set_stream(h);
        rng
    }
}

/// All relations of type `target ~ source`, exactly once, in a fixed
/// order (entry `(a,b)` is bit `a·|source| + b` of an ascending mask).
/// Rejected when the matrix exceeds `EXHAUSTIVE_BITS_LIMIT` entries.
pub fn enumerate_relations(
    target: &Arc<Carrier>,
    source: &Arc<Carrier>,
) -> Result<impl Iterator<Item = Rel>, RelError> {
    let bits = target.size() * source.size();
    if bits > EXHAUSTIVE_BITS_LIMIT {
        return Err(RelError::TooLarge(format!(
            "exhaustive enumeration of {bits}-entry relations (limit {EXHAUSTIVE_BITS_LIMIT}); \
             use randomized generation instead"
        )));
    }
    let target = Arc::clone(target);
    let source = Arc::clone(source);
    let n = source.size();
    Ok((0u32..1 << bits).map(move |mask| {
        Rel::from_fn(&target, &source, |a, b| mask >> (a * n + b) & 1 == 1)
    }))
}

/// `enumerate_relations` collected into a vector.
pub fn all_rels(target: &Arc<Carrier>, source: &Arc<Carrier>) -> Result<Vec<Rel>, RelError> {
    Ok(enumerate_relations(target, source)?.collect())
}

/// A uniform random relation in which each entry holds with
/// probability `density`.
pub fn rand_rel(
    rng: &mut ChaCha8Rng,
    target: &Arc<Carrier>,
    source: &Arc<Carrier>,
    density: f64,
) -> Rel {
    Rel::from_fn(target, source, |_, _| rng.gen_bool(density))
}

/// A random coreflexive (a subset of the identity).
pub fn rand_coreflexive(rng: &mut ChaCha8Rng, c: &Arc<Carrier>, density: f64) -> Rel {
    let mut p = Rel::bottom(c, c);
    for i in 0..c.size() {
        if rng.gen_bool(density) {
            p.set(i, i, true);
        }
    }
    p
}

/// A random permutation of `c`, as a bijective relation.
pub fn rand_permutation(rng: &mut ChaCha8Rng, c: &Arc<Carrier>) -> Rel {
    let n = c.size();
    let mut perm: Vec<usize> = (0..n).collect();
    // Fisher–Yates.
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    Rel::from_fn(c, c, |a, b| perm[b] == a)
}

/// A random equivalence relation (random class assignment).
pub fn gen_equivalence(rng: &mut ChaCha8Rng, c: &Arc<Carrier>) -> Rel {
    let n = c.size();
    let k = rng.gen_range(1..=n.max(1));
    let class: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    let e = Rel::from_fn(c, c, |a, b| class[a] == class[b]);
    debug_assert!(is_per(&e) && e.is_reflexive(), "generator must produce an equivalence");
    e
}

/// A random per (partial equivalence): an equivalence restricted to a
/// random coreflexive.
pub fn gen_per(rng: &mut ChaCha8Rng, c: &Arc<Carrier>) -> Rel {
    let e = gen_equivalence(rng, c);
    let p = rand_coreflexive(rng, c, 0.7);
    let per = p.compose(&e).compose(&p);
    assert!(is_per(&per), "generator must produce a per");
    per
}

/// A random preorder: the reflexive-transitive closure of a random
/// relation.
pub fn gen_preorder(rng: &mut ChaCha8Rng, c: &Arc<Carrier>) -> Rel {
    let t = rand_rel(rng, c, c, 0.3).rtc();
    debug_assert!(t.is_reflexive() && t.is_transitive());
    t
}

/// A random provisional preorder: a preorder restricted to a random
/// coreflexive.
pub fn gen_provisional_preorder(rng: &mut ChaCha8Rng, c: &Arc<Carrier>) -> Rel {
    let p = rand_coreflexive(rng, c, 0.7);
    let t = p.compose(&gen_preorder(rng, c)).compose(&p);
    assert!(is_provisional_preorder(&t), "generator must produce a provisional preorder");
    t
}

/// A random partial order on all of `c`: the reflexive-transitive
/// closure of an index-increasing random DAG, conjugated by a random
/// permutation so element order carries no information.
fn rand_partial_order(rng: &mut ChaCha8Rng, c: &Arc<Carrier>) -> Rel {
    let dag = Rel::from_fn(c, c, |a, b| a < b && rng.gen_bool(0.4));
    let po = dag.rtc();
    let pi = rand_permutation(rng, c);
    pi.converse().compose(&po).compose(&pi)
}

/// A random provisional ordering: a partial order restricted to a
/// random coreflexive.
pub fn gen_provisional_ordering(rng: &mut ChaCha8Rng, c: &Arc<Carrier>) -> Rel {
    let p = rand_coreflexive(rng, c, 0.7);
    let t = p.compose(&rand_partial_order(rng, c)).compose(&p);
    assert!(is_provisional_ordering(&t), "generator must produce a provisional ordering");
    t
}

/// A random provisional linear ordering: a permuted chain restricted
/// to a random coreflexive.
pub fn gen_linear_ordering(rng: &mut ChaCha8Rng, c: &Arc<Carrier>) -> Rel {
    let chain = Rel::from_fn(c, c, |a, b| a <= b);
    let pi = rand_permutation(rng, c);
    let p = rand_coreflexive(rng, c, 0.7);
    let t = p.compose(&pi.converse().compose(&chain).compose(&pi)).compose(&p);
    assert!(is_provisional_linear_ordering(&t), "generator must produce a linear ordering");
    t
}

/// A random functional relation `target ~ source` (each source element
/// maps to at most one target; total with probability `totality`).
pub fn gen_functional(
    rng: &mut ChaCha8Rng,
    target: &Arc<Carrier>,
    source: &Arc<Carrier>,
    totality: f64,
) -> Rel {
    let mut f = Rel::bottom(target, source);
    if target.size() > 0 {
        for b in 0..source.size() {
            if rng.gen_bool(totality) {
                f.set(rng.gen_range(0..target.size()), b, true);
            }
        }
    }
    assert!(is_functional(&f), "generator must produce a functional relation");
    f
}

/// A random difunctional relation `target ~ source`, built as `f˘∘g`
/// from a shared partial class assignment on both carriers.
pub fn gen_difunctional(rng: &mut ChaCha8Rng, target: &Arc<Carrier>, source: &Arc<Carrier>) -> Rel {
    let k = target.size().max(source.size()).max(1);
    let classes = Carrier::numbered("class", k);
    let f = gen_functional(rng, &classes, target, 0.8);
    let g = gen_functional(rng, &classes, source, 0.8);
    let r = f.converse().compose(&g);
    assert!(is_difunctional(&r), "generator must produce a difunctional relation");
    r
}

/// The parts of a generated block-ordered relation: `r = f˘∘t∘g` with
/// `f`, `g` total surjective functionals onto a shared class carrier
/// and `t` a provisional ordering with full domain.
#[derive(Debug, Clone)]
pub struct BlockParts {
    pub f: Rel,
    pub t: Rel,
    pub g: Rel,
    pub r: Rel,
}

/// A random block-ordered relation `target ~ source` together with the
/// decomposition that witnesses it. Carriers must be nonempty.
pub fn gen_block_parts(
    rng: &mut ChaCha8Rng,
    target: &Arc<Carrier>,
    source: &Arc<Carrier>,
) -> BlockParts {
    assert!(
        target.size() > 0 && source.size() > 0,
        "gen_block_parts: carriers must be nonempty"
    );
    let k = rng.gen_range(1..=target.size().min(source.size()));
    let classes = Carrier::numbered("class", k);
    let t = {
        // A partial order on all classes (full domain: reflexive).
        let po = rand_partial_order(rng, &classes);
        debug_assert!(is_provisional_ordering(&po) && po.is_reflexive());
        po
    };
    // Total class assignments covering every class at least once: the
    // first k elements of a random permutation hit each class.
    let onto = |rng: &mut ChaCha8Rng, c: &Arc<Carrier>| {
        let n = c.size();
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            order.swap(i, j);
        }
        let mut class = vec![0usize; n];
        for (slot, &elem) in order.iter().enumerate() {
            class[elem] = if slot < k { slot } else { rng.gen_range(0..k) };
        }
        class
    };
    let fa = onto(rng, target);
    let ga = onto(rng, source);
    let f = Rel::from_fn(&classes, target, |cl, x| fa[x] == cl);
    let g = Rel::from_fn(&classes, source, |cl, y| ga[y] == cl);
    let r = f.converse().compose(&t).compose(&g);
    assert!(is_block_ordered(&r), "generator must produce a block-ordered relation");
    BlockParts { f, t, g, r }
}

/// A random membership relation `elements ~ sets`: each named set is a
/// random subset, with occasional duplicated columns so set-equality
/// classes are nontrivial.
pub fn gen_membership(rng: &mut ChaCha8Rng, elements: &Arc<Carrier>, set_count: usize) -> Rel {
    let sets = Carrier::numbered("S", set_count);
    let mut columns: Vec<u64> = Vec::with_capacity(set_count);
    for s in 0..set_count {
        if s > 0 && rng.gen_bool(0.25) {
            let dup = columns[rng.gen_range(0..s)];
            columns.push(dup);
        } else {
            let mut bits = 0u64;
            for e in 0..elements.size() {
                if rng.gen_bool(0.5) {
                    bits |= 1 << e;
                }
            }
            columns.push(bits);
        }
    }
    Rel::from_fn(elements, &sets, |e, s| columns[s] >> e & 1 == 1)
}

/// A random dense relation (`R ⊆ R∘R`). Produces a mix of idempotent
/// instances (preorders, hence `R = R∘R`) and merely dense ones
/// (complete multipartite relations over ≥3 groups, which are
/// irreflexive yet dense).
pub fn gen_dense(rng: &mut ChaCha8Rng, c: &Arc<Carrier>) -> Rel {
    let r = if c.size() >= 3 && rng.gen_bool(0.4) {
        let groups = rng.gen_range(3..=c.size());
        let class: Vec<usize> = (0..c.size()).map(|_| rng.gen_range(0..groups)).collect();
        let multipartite = Rel::from_fn(c, c, |a, b| class[a] != class[b]);
        // Degenerate assignments can use <3 groups and lose density;
        // fall back to a preorder in that case.
        if multipartite.leq(&multipartite.compose(&multipartite)) {
            multipartite
        } else {
            gen_preorder(rng, c)
        }
    } else {
        gen_preorder(rng, c)
    };
    assert!(r.leq(&r.compose(&r)), "generator must produce a dense relation");
    r
}

/// A random transitive dense relation (`R = R∘R`).
pub fn gen_idempotent(rng: &mut ChaCha8Rng, c: &Arc<Carrier>) -> Rel {
    let r = gen_preorder(rng, c);
    // Restricting a preorder to a coreflexive stays idempotent.
    let p = rand_coreflexive(rng, c, 0.8);
    let r = p.compose(&r).compose(&p);
    assert_eq!(r, r.compose(&r), "generator must produce an idempotent relation");
    r
}

/// Kinds of structured instance the harness can request.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Per,
    Equivalence,
    Preorder,
    ProvisionalPreorder,
    ProvisionalOrdering,
    LinearOrdering,
    Functional,
    Difunctional,
    BlockOrdered,
    Membership,
    Dense,
    Idempotent,
}

/// A generated structured instance: a single relation, or the parts of
/// a block-ordered relation.
#[derive(Debug, Clone)]
pub enum Structured {
    One(Rel),
    Block(BlockParts),
}

impl Structured {
    /// The single relation, or the recomposed relation of block parts.
    pub fn rel(&self) -> &Rel {
        match self {
            Structured::One(r) => r,
            Structured::Block(parts) => &parts.r,
        }
    }
}

/// Generate one structured instance of `kind` over `carriers`,
/// deterministically in `seed`. Unary kinds take one carrier;
/// `Functional`, `Difunctional`, `BlockOrdered` and `Membership` take
/// two (for `Membership`: the element carrier and a set-count carrier
/// whose size is the number of sets). The carrier count is validated.
pub fn gen_structured(
    kind: GenKind,
    carriers: &[&Arc<Carrier>],
    seed: u64,
) -> Result<Structured, RelError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = |rs: &[&Arc<Carrier>]| -> Result<Arc<Carrier>, RelError> {
        match rs {
            [c] => Ok(Arc::clone(c)),
            _ => Err(RelError::precondition(format!(
                "{kind:?} takes exactly one carrier, got {}",
                rs.len()
            ))),
        }
    };
    let two = |rs: &[&Arc<Carrier>]| -> Result<(Arc<Carrier>, Arc<Carrier>), RelError> {
        match rs {
            [a, b] => Ok((Arc::clone(a), Arc::clone(b))),
            _ => Err(RelError::precondition(format!(
                "{kind:?} takes exactly two carriers, got {}",
                rs.len()
            ))),
        }
    };
    Ok(match kind {
        GenKind::Per => Structured::One(gen_per(&mut rng, &one(carriers)?)),
        GenKind::Equivalence => Structured::One(gen_equivalence(&mut rng, &one(carriers)?)),
        GenKind::Preorder => Structured::One(gen_preorder(&mut rng, &one(carriers)?)),
        GenKind::ProvisionalPreorder => {
            Structured::One(gen_provisional_preorder(&mut rng, &one(carriers)?))
        }
        GenKind::ProvisionalOrdering => {
            Structured::One(gen_provisional_ordering(&mut rng, &one(carriers)?))
        }
        GenKind::LinearOrdering => Structured::One(gen_linear_ordering(&mut rng, &one(carriers)?)),
        GenKind::Functional => {
            let (a, b) = two(carriers)?;
            Structured::One(gen_functional(&mut rng, &a, &b, 0.8))
        }
        GenKind::Difunctional => {
            let (a, b) = two(carriers)?;
            Structured::One(gen_difunctional(&mut rng, &a, &b))
        }
        GenKind::BlockOrdered => {
            let (a, b) = two(carriers)?;
            Structured::Block(gen_block_parts(&mut rng, &a, &b))
        }
        GenKind::Membership => {
            let (a, b) = two(carriers)?;
            Structured::One(gen_membership(&mut rng, &a, b.size()))
        }
        GenKind::Dense => Structured::One(gen_dense(&mut rng, &one(carriers)?)),
        GenKind::Idempotent => Structured::One(gen_idempotent(&mut rng, &one(carriers)?)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{is_coreflexive, rdom};
    use crate::residual::sym_rdiv;

    fn c(name: &str, n: usize) -> Arc<Carrier> {
        Carrier::numbered(name, n)
    }

    #[test]
    fn enumeration_counts_and_determinism() {
        assert_eq!(all_rels(&c("A", 1), &c("B", 1)).unwrap().len(), 2);
        assert_eq!(all_rels(&c("A", 2), &c("B", 2)).unwrap().len(), 16);
        assert_eq!(all_rels(&c("A", 3), &c("B", 3)).unwrap().len(), 512);
        let a = all_rels(&c("A", 2), &c("B", 3)).unwrap();
        let b = all_rels(&c("A", 2), &c("B", 3)).unwrap();
        assert_eq!(a, b, "enumeration order is deterministic");
        // No duplicates.
        for (i, x) in a.iter().enumerate() {
            for y in &a[i + 1..] {
                assert_ne!(x, y);
            }
        }
        assert!(matches!(
            enumerate_relations(&c("A", 5), &c("B", 4)),
            Err(RelError::TooLarge(_))
        ));
        // 16 bits exactly is allowed (4×4).
        assert!(enumerate_relations(&c("A", 4), &c("B", 4)).is_ok());
    }

    #[test]
    fn generators_satisfy_their_predicates() {
        // Each generator asserts its own postcondition; exercise them
        // over many seeds and sizes (empty carriers included for the
        // unary kinds).
        let budget = Budget::default();
        let mut rng = budget.rng("predicate-smoke");
        for n in 0..=5 {
            let a = c("A", n);
            let b = c("B", (n + 2) % 6);
            for _ in 0..20 {
                gen_per(&mut rng, &a);
                gen_equivalence(&mut rng, &a);
                gen_preorder(&mut rng, &a);
                gen_provisional_preorder(&mut rng, &a);
                gen_provisional_ordering(&mut rng, &a);
                gen_linear_ordering(&mut rng, &a);
                gen_functional(&mut rng, &a, &b, 0.8);
                gen_difunctional(&mut rng, &a, &b);
                gen_dense(&mut rng, &a);
                gen_idempotent(&mut rng, &a);
                gen_membership(&mut rng, &a, 4);
                if n > 0 && b.size() > 0 {
                    gen_block_parts(&mut rng, &a, &b);
                }
            }
        }
    }

    #[test]
    fn block_parts_witness_their_own_decomposition() {
        let budget = Budget::default().with_seed(7);
        let mut rng = budget.rng("block-parts");
        let a = c("A", 5);
        let b = c("B", 4);
        for _ in 0..30 {
            let parts = gen_block_parts(&mut rng, &a, &b);
            assert_eq!(parts.r, parts.f.converse().compose(&parts.t).compose(&parts.g));
            let d = parts.t.meet(&parts.t.converse());
            assert_eq!(parts.f.compose(&parts.f.converse()), d);
            assert_eq!(parts.g.compose(&parts.g.converse()), d);
            assert!(is_provisional_ordering(&parts.t));
        }
    }

    #[test]
    fn membership_columns_form_partial_order_under_symmetric_division() {
        // in\\in compares sets by inclusion-both-ways: its coreflexive
        // part detects duplicated columns; the under-residual alone is
        // the inclusion preorder, whose symmetric part is set equality.
        let budget = Budget::default();
        let mut rng = budget.rng("membership");
        let x = c("X", 4);
        for _ in 0..20 {
            let memb = gen_membership(&mut rng, &x, 5);
            let same_set = sym_rdiv(&memb, &memb).meet(&Rel::identity(memb.source()));
            assert!(is_coreflexive(&same_set));
            let incl = crate::residual::under(&memb, &memb);
            assert!(incl.is_reflexive() && incl.is_transitive());
        }
    }

    #[test]
    fn gen_structured_dispatch_and_arity_errors() {
        let a = c("A", 3);
        let b = c("B", 4);
        let s = gen_structured(GenKind::Per, &[&a], 99).unwrap();
        assert!(is_per(s.rel()));
        let s = gen_structured(GenKind::BlockOrdered, &[&a, &b], 99).unwrap();
        assert!(is_block_ordered(s.rel()));
        match gen_structured(GenKind::BlockOrdered, &[&a, &b], 99).unwrap() {
            Structured::Block(parts) => assert_eq!(rdom(&parts.f), Rel::identity(parts.f.source())),
            Structured::One(_) => panic!("block kind must return parts"),
        }
        let err = gen_structured(GenKind::Per, &[&a, &b], 99).unwrap_err();
        assert!(err.to_string().contains("exactly one carrier"), "{err}");
        let err = gen_structured(GenKind::Functional, &[&a], 99).unwrap_err();
        assert!(err.to_string().contains("exactly two carriers"), "{err}");
    }

    #[test]
    fn determinism_under_fixed_seed() {
        let a = c("A", 4);
        let b = c("B", 3);
        for kind in [
            GenKind::Per,
            GenKind::Preorder,
            GenKind::LinearOrdering,
            GenKind::Dense,
        ] {
            let x = gen_structured(kind, &[&a], 1234).unwrap();
            let y = gen_structured(kind, &[&a], 1234).unwrap();
            assert_eq!(x.rel(), y.rel(), "{kind:?} must be deterministic in the seed");
            let z = gen_structured(kind, &[&a], 1235).unwrap();
            let _ = z; // different seed may or may not differ; just must not panic
        }
        let x = gen_structured(GenKind::Difunctional, &[&a, &b], 42).unwrap();
        let y = gen_structured(GenKind::Difunctional, &[&a, &b], 42).unwrap();
        assert_eq!(x.rel(), y.rel());
        // Budget streams: same name → same sequence; different name →
        // (almost surely) different sequence.
        let budget = Budget::default();
        let mut r1 = budget.rng("s");
        let mut r2 = budget.rng("s");
        assert_eq!(r1.gen::<u64>(), r2.gen::<u64>());
    }

    #[test]
    fn dense_generator_mixes_idempotent_and_strictly_dense() {
        let budget = Budget::default();
        let mut rng = budget.rng("dense-mix");
        let a = c("A", 5);
        let (mut idem, mut strict) = (0, 0);
        for _ in 0..200 {
            let r = gen_dense(&mut rng, &a);
            if r.compose(&r).leq(&r) {
                idem += 1;
            } else {
                strict += 1;
            }
        }
        assert!(idem > 0 && strict > 0, "mix must cover both regimes: {idem}/{strict}");
    }
}
