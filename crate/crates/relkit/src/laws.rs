//! The law registry and harness: every documented invariant of the
//! library is registered here as an executable law with its own
//! instance generator and checker. Failures carry a serialized
//! counterexample that `recheck` can re-run.
//!
//! Laws are pure: a generator produces instances (each a vector of
//! relations) from a [`Budget`], and a checker maps one instance to an
//! [`Outcome`]. Checkers validate their own premises and report
//! `Premise` (a vacuous pass) rather than panicking, so rechecking a
//! hand-edited counterexample is safe.

use std::sync::Arc;

use rand::Rng;

use crate::carrier::Carrier;
use crate::condense::condense;
use crate::diagonal::diagonal;
use crate::domain::{
    difunctional_battery, is_bijection, is_coreflexive, is_difunctional, is_functional,
    is_injective, is_per, ldom, per_ldom, per_rdom, rdom,
};
use crate::error::RelError;
use crate::generate::{
    enumerate_relations, gen_block_parts, gen_difunctional, gen_functional, gen_linear_ordering,
    gen_membership, gen_per, gen_provisional_ordering, gen_provisional_preorder, rand_coreflexive,
    rand_permutation, rand_rel, Budget,
};
use crate::index::{
    are_isomorphic, core_of, is_difunction_index, is_index, is_per_index, per_index, rel_index,
    split, IsoVerdict,
};
use crate::order::{
    block_decompose, is_block_ordered, is_provisional_ordering, is_provisional_preorder,
    is_staircase, staircase_battery,
};
use crate::rel::Rel;
use crate::report::{LawReport, LawSummary};
use crate::residual::{over, sandwich, sym_rdiv, under};
use crate::textfmt::{file_of, RelFile};

/// Result of checking one law on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The law's equation failed; the message names the broken part.
    Fail(String),
    /// The instance does not satisfy the law's premise; vacuous pass.
    Premise(String),
}

/// One registered law: identifier, owning module, human-readable
/// statement, instance generator, and instance checker.
pub struct Law {
    pub id: &'static str,
    pub module: &'static str,
    pub statement: &'static str,
    pub gen: fn(&Budget) -> Vec<Vec<Rel>>,
    pub check: fn(&[Rel]) -> Outcome,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Outcome::Fail(format!($($msg)+));
        }
    };
}

macro_rules! premise {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Outcome::Premise(format!($($msg)+));
        }
    };
}

// ---------------------------------------------------------------------
// Generator helpers
// ---------------------------------------------------------------------

fn num(name: &str, n: usize) -> Arc<Carrier> {
    Carrier::numbered(name, n)
}

/// All relations of every shape `m×n` with `m, n ≤ u`. Square shapes
/// are produced twice: once on a single carrier (homogeneous) and once
/// across two distinct carriers, so laws sensitive to homogeneity see
/// both.
fn exhaustive_all_shapes(u: usize) -> Vec<Vec<Rel>> {
    let mut out = Vec::new();
    for m in 0..=u {
        for n in 0..=u {
            let a = num("A", m);
            let b = num("B", n);
            for r in enumerate_relations(&a, &b).expect("within exhaustive budget") {
                out.push(vec![r]);
            }
            if m == n {
                for r in enumerate_relations(&a, &a).expect("within exhaustive budget") {
                    out.push(vec![r]);
                }
            }
        }
    }
    out
}

/// All relations on a single carrier of each size `≤ u`.
fn exhaustive_squares(u: usize) -> Vec<Vec<Rel>> {
    let mut out = Vec::new();
    for n in 0..=u {
        let a = num("A", n);
        for r in enumerate_relations(&a, &a).expect("within exhaustive budget") {
            out.push(vec![r]);
        }
    }
    out
}

/// Random single relations of arbitrary shape up to 6×6 (homogeneous
/// when `square` is set).
fn random_unary(b: &Budget, stream: &str, square: bool) -> Vec<Vec<Rel>> {
    let mut rng = b.rng(stream);
    (0..b.random_instances)
        .map(|_| {
            let m = rng.gen_range(0..=6);
            let n = if square { m } else { rng.gen_range(0..=6) };
            let a = num("A", m);
            let bb = if square { Arc::clone(&a) } else { num("B", n) };
            let density = rng.gen_range(0.1..0.9);
            vec![rand_rel(&mut rng, &a, &bb, density)]
        })
        .collect()
}

fn gen_unary_all(b: &Budget) -> Vec<Vec<Rel>> {
    let mut out = exhaustive_all_shapes(b.exhaustive_unary);
    out.extend(random_unary(b, "unary-all", false));
    out.extend(random_unary(b, "unary-square", true));
    out
}

/// All functional relations `target ~ source` (each source element maps
/// to one target or nowhere).
fn enumerate_functionals(target: &Arc<Carrier>, source: &Arc<Carrier>) -> Vec<Rel> {
    let m = target.size();
    let n = source.size();
    let choices = m + 1; // one extra digit for "undefined"
    let total = choices.pow(n as u32);
    (0..total)
        .map(|mut code| {
            let digits: Vec<usize> = (0..n)
                .map(|_| {
                    let d = code % choices;
                    code /= choices;
                    d
                })
                .collect();
            Rel::from_fn(target, source, |a, b| digits[b] == a + 1)
        })
        .collect()
}

fn serialize_instance(inst: &[Rel]) -> String {
    let names: Vec<String> = (0..inst.len()).map(|i| format!("R{i}")).collect();
    file_of(names.iter().map(String::as_str).zip(inst.iter())).to_text()
}

// ---------------------------------------------------------------------
// carrier-rel laws
// ---------------------------------------------------------------------

fn gen_compose_chains(b: &Budget) -> Vec<Vec<Rel>> {
    let u = b.exhaustive_multi.min(2);
    let mut out = Vec::new();
    for sa in 0..=u {
        for sb in 0..=u {
            for sc in 0..=u {
                for sd in 0..=u {
                    let (a, bb, c, d) = (num("A", sa), num("B", sb), num("C", sc), num("D", sd));
                    for r in enumerate_relations(&a, &bb).unwrap() {
                        for s in enumerate_relations(&bb, &c).unwrap() {
                            for t in enumerate_relations(&c, &d).unwrap() {
                                out.push(vec![r.clone(), s.clone(), t]);
                            }
                        }
                    }
                }
            }
        }
    }
    let mut rng = b.rng("compose-chains");
    for _ in 0..b.random_instances {
        let (sa, sb, sc, sd) = (
            rng.gen_range(0..=5),
            rng.gen_range(0..=5),
            rng.gen_range(0..=5),
            rng.gen_range(0..=5),
        );
        let (a, bb, c, d) = (num("A", sa), num("B", sb), num("C", sc), num("D", sd));
        out.push(vec![
            rand_rel(&mut rng, &a, &bb, 0.4),
            rand_rel(&mut rng, &bb, &c, 0.4),
            rand_rel(&mut rng, &c, &d, 0.4),
        ]);
    }
    out
}

fn check_compose_associative(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 3, "expected 3 relations, got {}", inst.len());
    let (r, s, t) = (&inst[0], &inst[1], &inst[2]);
    premise!(
        r.source() == s.target() && s.source() == t.target(),
        "relations do not chain-compose"
    );
    ensure!(
        r.compose(s).compose(t) == r.compose(&s.compose(t)),
        "composition is not associative here"
    );
    Outcome::Pass
}

fn gen_same_type_pairs(b: &Budget) -> Vec<Vec<Rel>> {
    let u = b.exhaustive_multi.min(2);
    let mut out = Vec::new();
    for m in 0..=u {
        for n in 0..=u {
            let a = num("A", m);
            let bb = num("B", n);
            for r in enumerate_relations(&a, &bb).unwrap() {
                for s in enumerate_relations(&a, &bb).unwrap() {
                    out.push(vec![r.clone(), s]);
                }
            }
        }
    }
    let mut rng = b.rng("same-type-pairs");
    for _ in 0..b.random_instances {
        let a = num("A", rng.gen_range(0..=6));
        let bb = num("B", rng.gen_range(0..=6));
        out.push(vec![rand_rel(&mut rng, &a, &bb, 0.5), rand_rel(&mut rng, &a, &bb, 0.5)]);
    }
    out
}

fn check_converse_lattice_isomorphism(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 2, "expected 2 relations, got {}", inst.len());
    let (r, s) = (&inst[0], &inst[1]);
    premise!(
        r.target() == s.target() && r.source() == s.source(),
        "relations are not of the same type"
    );
    ensure!(
        r.meet(s).converse() == r.converse().meet(&s.converse()),
        "converse does not distribute over meet"
    );
    ensure!(
        r.join(s).converse() == r.converse().join(&s.converse()),
        "converse does not distribute over join"
    );
    ensure!(r.converse().converse() == *r, "converse is not an involution");
    ensure!(
        r.complement().converse() == r.converse().complement(),
        "converse does not commute with complement"
    );
    Outcome::Pass
}

fn gen_triangles(b: &Budget, stream: &str) -> Vec<Vec<Rel>> {
    // Typed triples r: A~B, s: B~C, t: A~C.
    let u = b.exhaustive_multi.min(2);
    let mut out = Vec::new();
    for sa in 0..=u {
        for sb in 0..=u {
            for sc in 0..=u {
                let (a, bb, c) = (num("A", sa), num("B", sb), num("C", sc));
                for r in enumerate_relations(&a, &bb).unwrap() {
                    for s in enumerate_relations(&bb, &c).unwrap() {
                        for t in enumerate_relations(&a, &c).unwrap() {
                            out.push(vec![r.clone(), s.clone(), t]);
                        }
                    }
                }
            }
        }
    }
    let mut rng = b.rng(stream);
    for _ in 0..b.random_instances {
        let (a, bb, c) = (
            num("A", rng.gen_range(0..=5)),
            num("B", rng.gen_range(0..=5)),
            num("C", rng.gen_range(0..=5)),
        );
        out.push(vec![
            rand_rel(&mut rng, &a, &bb, 0.4),
            rand_rel(&mut rng, &bb, &c, 0.4),
            rand_rel(&mut rng, &a, &c, 0.4),
        ]);
    }
    out
}

fn gen_dedekind(b: &Budget) -> Vec<Vec<Rel>> {
    gen_triangles(b, "dedekind")
}

fn check_dedekind_both(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 3, "expected 3 relations, got {}", inst.len());
    let (r, s, t) = (&inst[0], &inst[1], &inst[2]);
    premise!(
        r.source() == s.target() && r.target() == t.target() && s.source() == t.source(),
        "relations are not a composable triangle"
    );
    let lhs = r.compose(s).meet(t);
    ensure!(
        lhs.leq(&r.compose(&s.meet(&r.converse().compose(t)))),
        "modular inequality (left form) fails"
    );
    ensure!(
        lhs.leq(&r.meet(&t.compose(&s.converse())).compose(s)),
        "modular inequality (right form) fails"
    );
    Outcome::Pass
}

fn check_cone_rule(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    premise!(
        r.target().size() > 0 && r.source().size() > 0,
        "cone rule requires nonempty carriers"
    );
    let cone = Rel::top(r.target(), r.target())
        .compose(r)
        .compose(&Rel::top(r.source(), r.source()));
    let is_top = cone == Rel::top(r.target(), r.source());
    ensure!(
        is_top == !r.is_empty(),
        "cone is top: {is_top}, but relation nonempty: {}",
        !r.is_empty()
    );
    Outcome::Pass
}

fn gen_square_pairs(b: &Budget, stream: &str) -> Vec<Vec<Rel>> {
    let u = b.exhaustive_multi.min(2);
    let mut out = Vec::new();
    for n in 0..=u {
        let a = num("A", n);
        for r in enumerate_relations(&a, &a).unwrap() {
            for s in enumerate_relations(&a, &a).unwrap() {
                out.push(vec![r.clone(), s]);
            }
        }
    }
    let mut rng = b.rng(stream);
    for _ in 0..b.random_instances {
        let a = num("A", rng.gen_range(0..=6));
        out.push(vec![rand_rel(&mut rng, &a, &a, 0.3), rand_rel(&mut rng, &a, &a, 0.3)]);
    }
    out
}

fn gen_closure_pairs(b: &Budget) -> Vec<Vec<Rel>> {
    gen_square_pairs(b, "closure-pairs")
}

fn check_closure_least_prefixpoint(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 2, "expected 2 relations, got {}", inst.len());
    let (r, s) = (&inst[0], &inst[1]);
    premise!(
        r.is_homogeneous() && r.target() == s.target() && r.source() == s.source(),
        "instance must be two relations on one carrier"
    );
    let c = r.target();
    let t = r.rtc();
    let i = Rel::identity(c);
    ensure!(i.join(&r.compose(&t)) == t, "closure is not a fixpoint of X ↦ I ∪ R∘X");
    // Union of powers R⁰ ∪ … ∪ Rⁿ.
    let mut acc = i.clone();
    let mut pow = i.clone();
    for _ in 0..c.size() {
        pow = pow.compose(r);
        acc = acc.join(&pow);
    }
    ensure!(acc == t, "closure differs from the union of powers");
    // Least among pre-fixpoints: rtc(R ∪ S) is a pre-fixpoint and must
    // dominate.
    let bigger = r.join(s).rtc();
    ensure!(
        i.join(&r.compose(&bigger)).leq(&bigger),
        "rtc of a superset is not a pre-fixpoint (internal defect)"
    );
    ensure!(t.leq(&bigger), "closure is not least among pre-fixpoints");
    Outcome::Pass
}

// ---------------------------------------------------------------------
// residuals laws
// ---------------------------------------------------------------------

fn gen_galois(b: &Budget) -> Vec<Vec<Rel>> {
    gen_triangles(b, "galois")
}

fn check_division_galois(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 3, "expected 3 relations, got {}", inst.len());
    let (r, s, t) = (&inst[0], &inst[1], &inst[2]);
    premise!(
        r.source() == t.target() && r.target() == s.target() && s.source() == t.source(),
        "relations are not a composable triangle"
    );
    let bound = r.compose(t).leq(s);
    ensure!(
        t.leq(&under(r, s)) == bound,
        "left-division characterization disagrees with composition bound"
    );
    ensure!(
        r.leq(&over(s, t)) == bound,
        "right-division characterization disagrees with composition bound"
    );
    Outcome::Pass
}

fn check_division_cancellation(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    ensure!(r.compose(&under(r, r)) == *r, "R∘(R\\R) ≠ R");
    ensure!(over(r, r).compose(r) == *r, "(R/R)∘R ≠ R");
    Outcome::Pass
}

fn check_division_absorption(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    ensure!(over(r, &under(r, r)) == *r, "R/(R\\R) ≠ R");
    ensure!(under(&over(r, r), r) == *r, "(R/R)\\R ≠ R");
    Outcome::Pass
}

fn check_self_division_closure(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    let d = under(r, r);
    ensure!(over(&d, &d) == d, "(R\\R)/(R\\R) ≠ R\\R");
    ensure!(under(&d, &d) == d, "(R\\R)\\(R\\R) ≠ R\\R");
    Outcome::Pass
}

fn gen_converse_divisions(b: &Budget) -> Vec<Vec<Rel>> {
    // r: A~B, s: C~B (common source), s2: A~D, t: E~D.
    let mut out = Vec::new();
    let n = b.exhaustive_multi.min(2);
    let (a, bb, c, d, e) = (num("A", n), num("B", n), num("C", n), num("D", n), num("E", n));
    for r in enumerate_relations(&a, &bb).unwrap() {
        for s in enumerate_relations(&c, &bb).unwrap() {
            for s2 in enumerate_relations(&a, &d).unwrap() {
                for t in enumerate_relations(&e, &d).unwrap() {
                    out.push(vec![r.clone(), s.clone(), s2.clone(), t]);
                }
            }
        }
    }
    let mut rng = b.rng("converse-divisions");
    for _ in 0..b.random_instances {
        let (a, bb, c, d, e) = (
            num("A", rng.gen_range(0..=4)),
            num("B", rng.gen_range(0..=4)),
            num("C", rng.gen_range(0..=4)),
            num("D", rng.gen_range(0..=4)),
            num("E", rng.gen_range(0..=4)),
        );
        out.push(vec![
            rand_rel(&mut rng, &a, &bb, 0.4),
            rand_rel(&mut rng, &c, &bb, 0.4),
            rand_rel(&mut rng, &a, &d, 0.4),
            rand_rel(&mut rng, &e, &d, 0.4),
        ]);
    }
    out
}

fn check_converse_of_divisions(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 4, "expected 4 relations, got {}", inst.len());
    let (r, s, s2, t) = (&inst[0], &inst[1], &inst[2], &inst[3]);
    premise!(r.source() == s.source(), "first pair must share a source");
    premise!(
        r.target() == s2.target() && s2.source() == t.source(),
        "second triple must type as A~B, A~D, E~D"
    );
    ensure!(
        under(&r.converse(), &s.converse()) == over(s, r).converse(),
        "R˘\\S˘ ≠ (S/R)˘"
    );
    ensure!(
        sandwich(r, s2, t).converse() == sandwich(&t.converse(), &s2.converse(), &r.converse()),
        "(R\\S/T)˘ ≠ T˘\\S˘/R˘"
    );
    Outcome::Pass
}

fn gen_residual_pairs(b: &Budget) -> Vec<Vec<Rel>> {
    // r: A~B, s: A~C (common target).
    let u = b.exhaustive_multi.min(2);
    let mut out = Vec::new();
    for sa in 0..=u {
        for sb in 0..=u {
            for sc in 0..=u {
                let (a, bb, c) = (num("A", sa), num("B", sb), num("C", sc));
                for r in enumerate_relations(&a, &bb).unwrap() {
                    for s in enumerate_relations(&a, &c).unwrap() {
                        out.push(vec![r.clone(), s]);
                    }
                }
            }
        }
    }
    let mut rng = b.rng("residual-pairs");
    for _ in 0..b.random_instances {
        let (a, bb, c) = (
            num("A", rng.gen_range(0..=5)),
            num("B", rng.gen_range(0..=5)),
            num("C", rng.gen_range(0..=5)),
        );
        out.push(vec![rand_rel(&mut rng, &a, &bb, 0.4), rand_rel(&mut rng, &a, &c, 0.4)]);
    }
    out
}

fn check_division_paths_agree(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 2, "expected 2 relations, got {}", inst.len());
    let (r, s) = (&inst[0], &inst[1]);
    premise!(r.target() == s.target(), "relations must share a target");
    let na = r.target().size();
    let u = under(r, s);
    let u_pointwise = Rel::from_fn(u.target(), u.source(), |x, y| {
        (0..na).all(|a| !r.get(a, x) || s.get(a, y))
    });
    ensure!(u == u_pointwise, "left residual disagrees with its pointwise meaning");
    let o = over(&s.converse(), &r.converse());
    let o_pointwise = Rel::from_fn(o.target(), o.source(), |x, y| {
        (0..na).all(|a| !r.get(a, y) || s.get(a, x))
    });
    ensure!(o == o_pointwise, "right residual disagrees with its pointwise meaning");
    Outcome::Pass
}

// ---------------------------------------------------------------------
// domains laws
// ---------------------------------------------------------------------

fn gen_coreflexive_pairs(b: &Budget) -> Vec<Vec<Rel>> {
    let mut out = Vec::new();
    for n in 0..=b.exhaustive_unary {
        let a = num("A", n);
        let coreflexives: Vec<Rel> = enumerate_relations(&a, &a)
            .unwrap()
            .filter(is_coreflexive)
            .collect();
        for p in &coreflexives {
            for q in &coreflexives {
                out.push(vec![p.clone(), q.clone()]);
            }
        }
    }
    let mut rng = b.rng("coreflexive-pairs");
    for _ in 0..b.random_instances {
        let a = num("A", rng.gen_range(0..=6));
        out.push(vec![
            rand_coreflexive(&mut rng, &a, 0.5),
            rand_coreflexive(&mut rng, &a, 0.5),
        ]);
    }
    out
}

fn check_coreflexive_calculus(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 2, "expected 2 relations, got {}", inst.len());
    let (p, q) = (&inst[0], &inst[1]);
    premise!(
        is_coreflexive(p) && is_coreflexive(q) && p.target() == q.target(),
        "instance must be two coreflexives on one carrier"
    );
    ensure!(*p == p.converse(), "coreflexive is not symmetric");
    ensure!(*p == p.compose(p), "coreflexive is not idempotent");
    ensure!(p.compose(q) == p.meet(q), "p∘q ≠ p∩q");
    ensure!(p.meet(q) == q.compose(p), "p∩q ≠ q∘p");
    Outcome::Pass
}

fn gen_domain_restriction(b: &Budget) -> Vec<Vec<Rel>> {
    // [r: A~B, p coreflexive on B, P per on B, Q per on A]
    let mut out = Vec::new();
    let n = b.exhaustive_multi.min(2);
    let a = num("A", n);
    let bb = num("B", n);
    let cors: Vec<Rel> = enumerate_relations(&bb, &bb).unwrap().filter(is_coreflexive).collect();
    let pers_b: Vec<Rel> = enumerate_relations(&bb, &bb).unwrap().filter(is_per).collect();
    let pers_a: Vec<Rel> = enumerate_relations(&a, &a).unwrap().filter(is_per).collect();
    for r in enumerate_relations(&a, &bb).unwrap() {
        for p in &cors {
            for pb in &pers_b {
                for qa in &pers_a {
                    out.push(vec![r.clone(), p.clone(), pb.clone(), qa.clone()]);
                }
            }
        }
    }
    let mut rng = b.rng("domain-restriction");
    for _ in 0..b.random_instances * 2 {
        let a = num("A", rng.gen_range(0..=4));
        let bb = num("B", rng.gen_range(0..=4));
        out.push(vec![
            rand_rel(&mut rng, &a, &bb, 0.4),
            rand_coreflexive(&mut rng, &bb, 0.5),
            gen_per(&mut rng, &bb),
            gen_per(&mut rng, &a),
        ]);
    }
    out
}

fn check_domain_least_restriction(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 4, "expected 4 relations, got {}", inst.len());
    let (r, p, pb, qa) = (&inst[0], &inst[1], &inst[2], &inst[3]);
    premise!(
        p.target() == r.source() && is_coreflexive(p),
        "second relation must be a coreflexive on the source carrier"
    );
    premise!(
        pb.target() == r.source() && pb.is_homogeneous() && is_per(pb),
        "third relation must be a per on the source carrier"
    );
    premise!(
        qa.target() == r.target() && qa.is_homogeneous() && is_per(qa),
        "fourth relation must be a per on the target carrier"
    );
    ensure!(
        (*r == r.compose(p)) == (rdom(r) == rdom(r).compose(p)),
        "R = R∘p does not reduce to the right-domain condition"
    );
    let q = ldom(qa);
    ensure!(
        (*r == q.compose(r)) == (ldom(r) == q.compose(&ldom(r))),
        "R = q∘R does not reduce to the left-domain condition"
    );
    ensure!(
        (*r == r.compose(pb)) == (per_rdom(r) == per_rdom(r).compose(pb)),
        "R = R∘P does not reduce to the right-per-domain condition"
    );
    ensure!(
        (*r == qa.compose(r)) == (per_ldom(r) == qa.compose(&per_ldom(r))),
        "R = Q∘R does not reduce to the left-per-domain condition"
    );
    Outcome::Pass
}

fn check_symmetric_division_domains(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    let d = sym_rdiv(r, r);
    let q = rdom(r);
    ensure!(rdom(&d.compose(&q)) == q, "(D∘R>)> ≠ R>");
    ensure!(ldom(&q.compose(&d)) == q, "(R>∘D)< ≠ R>");
    ensure!(ldom(&d.compose(&q)) == q, "(D∘R>)< ≠ R>");
    ensure!(rdom(&q.compose(&d)) == q, "(R>∘D)> ≠ R>");
    ensure!(d.compose(&q) == q.compose(&d).compose(&q), "D∘R> ≠ R>∘D∘R>");
    ensure!(q.compose(&d).compose(&q) == q.compose(&d), "R>∘D∘R> ≠ R>∘D");
    Outcome::Pass
}

fn gen_functional_galois(b: &Budget) -> Vec<Vec<Rel>> {
    // [f: A~B functional, r: B~C, s: A~C, r2: C~B, s2: C~A]
    let mut out = Vec::new();
    let n = b.exhaustive_multi.min(2);
    let (a, bb, c) = (num("A", n), num("B", n), num("C", n));
    let rels_bc: Vec<Rel> = enumerate_relations(&bb, &c).unwrap().collect();
    let rels_ac: Vec<Rel> = enumerate_relations(&a, &c).unwrap().collect();
    let rels_cb: Vec<Rel> = enumerate_relations(&c, &bb).unwrap().collect();
    let rels_ca: Vec<Rel> = enumerate_relations(&c, &a).unwrap().collect();
    for f in enumerate_functionals(&a, &bb) {
        for (i, r) in rels_bc.iter().enumerate() {
            for (j, s) in rels_ac.iter().enumerate() {
                out.push(vec![
                    f.clone(),
                    r.clone(),
                    s.clone(),
                    rels_cb[i].clone(),
                    rels_ca[j].clone(),
                ]);
            }
        }
    }
    let mut rng = b.rng("functional-galois");
    for _ in 0..b.random_instances {
        let (a, bb, c) = (
            num("A", rng.gen_range(1..=4)),
            num("B", rng.gen_range(1..=4)),
            num("C", rng.gen_range(0..=4)),
        );
        out.push(vec![
            gen_functional(&mut rng, &a, &bb, 0.8),
            rand_rel(&mut rng, &bb, &c, 0.4),
            rand_rel(&mut rng, &a, &c, 0.4),
            rand_rel(&mut rng, &c, &bb, 0.4),
            rand_rel(&mut rng, &c, &a, 0.4),
        ]);
    }
    out
}

fn check_functional_galois(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 5, "expected 5 relations, got {}", inst.len());
    let (f, r, s, r2, s2) = (&inst[0], &inst[1], &inst[2], &inst[3], &inst[4]);
    premise!(is_functional(f), "first relation must be functional");
    premise!(
        f.source() == r.target() && f.target() == s.target() && r.source() == s.source(),
        "forward triple must type as f: A~B, R: B~C, S: A~C"
    );
    premise!(
        r2.source() == f.source() && s2.source() == f.target() && r2.target() == s2.target(),
        "converse triple must type as R₂: C~B, S₂: C~A"
    );
    ensure!(
        f.compose(r).leq(s) == rdom(f).compose(r).leq(&f.converse().compose(s)),
        "f∘R ⊆ S does not shift to f>∘R ⊆ f˘∘S"
    );
    ensure!(
        r2.compose(&f.converse()).leq(s2) == r2.compose(&rdom(f)).leq(&s2.compose(f)),
        "R∘f˘ ⊆ S does not shift to R∘f> ⊆ S∘f"
    );
    Outcome::Pass
}

fn gen_functional_with_rel(b: &Budget) -> Vec<Vec<Rel>> {
    // [f: A~B functional, r: A~C]
    let mut out = Vec::new();
    let n = b.exhaustive_multi.min(2);
    let (a, bb, c) = (num("A", n), num("B", n), num("C", n));
    for f in enumerate_functionals(&a, &bb) {
        for r in enumerate_relations(&a, &c).unwrap() {
            out.push(vec![f.clone(), r]);
        }
    }
    let mut rng = b.rng("functional-with-rel");
    for _ in 0..b.random_instances {
        let (a, bb, c) = (
            num("A", rng.gen_range(1..=4)),
            num("B", rng.gen_range(1..=4)),
            num("C", rng.gen_range(0..=4)),
        );
        out.push(vec![gen_functional(&mut rng, &a, &bb, 0.8), rand_rel(&mut rng, &a, &c, 0.4)]);
    }
    out
}

fn check_functional_division_absorption(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 2, "expected 2 relations, got {}", inst.len());
    let (f, r) = (&inst[0], &inst[1]);
    premise!(is_functional(f), "first relation must be functional");
    premise!(f.target() == r.target(), "f and R must share a target");
    ensure!(
        rdom(f).compose(&under(f, r)) == f.converse().compose(r),
        "f>∘(f\\R) ≠ f˘∘R"
    );
    Outcome::Pass
}

fn check_functional_prefix_elimination(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 2, "expected 2 relations, got {}", inst.len());
    let (f, r) = (&inst[0], &inst[1]);
    premise!(is_functional(f), "first relation must be functional");
    premise!(f.target() == r.target(), "f and R must share a target");
    let fc = f.converse();
    ensure!(
        ldom(f).compose(&under(&fc, &fc.compose(r))) == ldom(f).compose(r),
        "f<∘(f˘\\(f˘∘R)) ≠ f<∘R"
    );
    Outcome::Pass
}

fn gen_postfix_distribution(b: &Budget) -> Vec<Vec<Rel>> {
    // [f: A~B functional, r: M~X, s: M~A]
    let mut out = Vec::new();
    let n = b.exhaustive_multi.min(2);
    let (a, bb, m, x) = (num("A", n), num("B", n), num("M", n), num("X", n));
    for f in enumerate_functionals(&a, &bb) {
        for r in enumerate_relations(&m, &x).unwrap() {
            for s in enumerate_relations(&m, &a).unwrap() {
                out.push(vec![f.clone(), r.clone(), s]);
            }
        }
    }
    let mut rng = b.rng("postfix-distribution");
    for _ in 0..b.random_instances {
        let (a, bb, m, x) = (
            num("A", rng.gen_range(1..=4)),
            num("B", rng.gen_range(1..=4)),
            num("M", rng.gen_range(0..=4)),
            num("X", rng.gen_range(0..=4)),
        );
        out.push(vec![
            gen_functional(&mut rng, &a, &bb, 0.8),
            rand_rel(&mut rng, &m, &x, 0.4),
            rand_rel(&mut rng, &m, &a, 0.4),
        ]);
    }
    out
}

fn check_functional_postfix_distribution(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 3, "expected 3 relations, got {}", inst.len());
    let (f, r, s) = (&inst[0], &inst[1], &inst[2]);
    premise!(is_functional(f), "first relation must be functional");
    premise!(
        r.target() == s.target() && s.source() == f.target(),
        "instance must type as R: M~X, S: M~A, f: A~B"
    );
    ensure!(
        under(r, &s.compose(f)).compose(&rdom(f)) == under(r, s).compose(f),
        "(R\\(S∘f))∘f> ≠ (R\\S)∘f"
    );
    Outcome::Pass
}

fn gen_sandwich_shift(b: &Budget) -> Vec<Vec<Rel>> {
    // [f: A~B1, g: C~B2, u, v, w: C~A]
    let mut out = Vec::new();
    let n = 2;
    let (a, b1, c, b2) = (num("A", n), num("B1", n), num("C", n), num("B2", n));
    let canonical_f = [
        Rel::identity(&a),
        Rel::from_fn(&a, &b1, |x, _| x == 0),
        Rel::bottom(&a, &b1),
    ];
    let canonical_g = [
        Rel::identity(&c),
        Rel::from_fn(&c, &b2, |x, _| x == 0),
        Rel::bottom(&c, &b2),
    ];
    for f in &canonical_f {
        for g in &canonical_g {
            for u in enumerate_relations(&c, &a).unwrap() {
                for v in enumerate_relations(&c, &a).unwrap() {
                    for w in enumerate_relations(&c, &a).unwrap() {
                        out.push(vec![f.clone(), g.clone(), u.clone(), v.clone(), w]);
                    }
                }
            }
        }
    }
    let mut rng = b.rng("sandwich-shift");
    for _ in 0..b.random_instances * 2 {
        let (a, b1, c, b2) = (
            num("A", rng.gen_range(1..=3)),
            num("B1", rng.gen_range(1..=3)),
            num("C", rng.gen_range(1..=3)),
            num("B2", rng.gen_range(1..=3)),
        );
        let mut inst = vec![
            gen_functional(&mut rng, &a, &b1, 0.8),
            gen_functional(&mut rng, &c, &b2, 0.8),
        ];
        for _ in 0..3 {
            inst.push(rand_rel(&mut rng, &c, &a, 0.4));
        }
        out.push(inst);
    }
    out
}

fn check_functional_sandwich_shift(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 5, "expected 5 relations, got {}", inst.len());
    let (f, g, u, v, w) = (&inst[0], &inst[1], &inst[2], &inst[3], &inst[4]);
    premise!(is_functional(f) && is_functional(g), "f and g must be functional");
    premise!(
        u.target() == g.target()
            && u.source() == f.target()
            && v.target() == u.target()
            && v.source() == u.source()
            && w.target() == u.target()
            && w.source() == u.source(),
        "U, V, W must type as C~A for f: A~B₁, g: C~B₂"
    );
    let lhs = f
        .converse()
        .compose(&sandwich(&ldom(g).compose(u), v, &w.compose(&ldom(f))))
        .compose(g);
    let gc = g.converse();
    let rhs = rdom(f)
        .compose(&sandwich(
            &gc.compose(u).compose(f),
            &gc.compose(v).compose(f),
            &gc.compose(w).compose(f),
        ))
        .compose(&rdom(g));
    ensure!(lhs == rhs, "factor shift across functionals fails");
    Outcome::Pass
}

fn gen_split_prefix(b: &Budget) -> Vec<Vec<Rel>> {
    // [r: A~B, s: A~C, f: A~F with f functional, ldom f = ldom r,
    //  g: B~G functional]
    let mut rng = b.rng("split-prefix");
    let mut out = Vec::new();
    for _ in 0..b.random_instances * 4 {
        let (a, bb, c) = (
            num("A", rng.gen_range(0..=4)),
            num("B", rng.gen_range(0..=4)),
            num("C", rng.gen_range(0..=4)),
        );
        let r = rand_rel(&mut rng, &a, &bb, 0.5);
        let s = rand_rel(&mut rng, &a, &c, 0.5);
        let f = if rng.gen_bool(0.4) {
            // The left domain itself is the simplest qualifying f.
            ldom(&r)
        } else {
            // A richer f into a fresh carrier: hit each domain element
            // once, then optionally remap extra sources into the image.
            let members: Vec<usize> =
                (0..a.size()).filter(|&x| (0..bb.size()).any(|y| r.get(x, y))).collect();
            let fcar = num("F", a.size() + 2);
            let mut f = Rel::bottom(&a, &fcar);
            for (slot, &m) in members.iter().enumerate() {
                f.set(m, slot, true);
            }
            for slot in members.len()..fcar.size() {
                if !members.is_empty() && rng.gen_bool(0.5) {
                    f.set(members[rng.gen_range(0..members.len())], slot, true);
                }
            }
            f
        };
        let gcar = num("G", rng.gen_range(0..=4));
        let g = gen_functional(&mut rng, &bb, &gcar, 0.8);
        out.push(vec![r, s, f, g]);
    }
    out
}

fn check_split_prefix_elimination(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 4, "expected 4 relations, got {}", inst.len());
    let (r, s, f, g) = (&inst[0], &inst[1], &inst[2], &inst[3]);
    premise!(
        r.target() == s.target() && f.target() == r.target() && g.target() == r.source(),
        "instance must type as R: A~B, S: A~C, f: A~F, g: B~G"
    );
    premise!(is_functional(f) && ldom(f) == ldom(r), "f must be functional with f< = R<");
    premise!(is_functional(g), "g must be functional");
    let x = f.converse().compose(r).compose(g);
    ensure!(
        rdom(g).compose(&under(&x, &f.converse().compose(s))) == g.converse().compose(&under(r, s)),
        "g>∘((f˘∘R∘g)\\(f˘∘S)) ≠ g˘∘(R\\S)"
    );
    ensure!(
        rdom(g).compose(&under(&x, &x)).compose(&rdom(g))
            == g.converse().compose(&under(r, r)).compose(g),
        "g>∘((f˘∘R∘g)\\(f˘∘R∘g))∘g> ≠ g˘∘(R\\R)∘g"
    );
    Outcome::Pass
}

fn check_difunctional_battery_agreement(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let b = difunctional_battery(&inst[0]);
    ensure!(
        b.agree(),
        "the seven difunctionality characterizations disagree: {:?}",
        b.forms
    );
    Outcome::Pass
}

// ---------------------------------------------------------------------
// diagonal laws
// ---------------------------------------------------------------------

fn check_diagonal_difunctional(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let b = difunctional_battery(&diagonal(&inst[0]));
    ensure!(
        b.forms.iter().all(|&(_, v)| v),
        "diagonal is not difunctional by every characterization: {:?}",
        b.forms
    );
    Outcome::Pass
}

fn check_diagonal_converse(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    ensure!(
        diagonal(&r.converse()) == diagonal(r).converse(),
        "diagonal does not commute with converse"
    );
    Outcome::Pass
}

fn check_diagonal_per_domains(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    let d = diagonal(r);
    ensure!(
        per_ldom(&d) == ldom(&d).compose(&per_ldom(r)),
        "Δ's left per domain ≠ Δ's left domain ∘ R's left per domain"
    );
    ensure!(
        per_ldom(&d) == per_ldom(r).compose(&ldom(&d)),
        "left per-domain products do not commute"
    );
    ensure!(
        per_rdom(&d) == rdom(&d).compose(&per_rdom(r)),
        "Δ's right per domain ≠ Δ's right domain ∘ R's right per domain"
    );
    ensure!(
        per_rdom(&d) == per_rdom(r).compose(&rdom(&d)),
        "right per-domain products do not commute"
    );
    Outcome::Pass
}

fn check_diagonal_domain_iff_per_domain(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    let d = diagonal(r);
    ensure!(
        (per_ldom(&d) == per_ldom(r)) == (ldom(&d) == ldom(r)),
        "left per-domain equality does not match left domain equality"
    );
    ensure!(
        (per_rdom(&d) == per_rdom(r)) == (rdom(&d) == rdom(r)),
        "right per-domain equality does not match right domain equality"
    );
    Outcome::Pass
}

fn check_diagonal_contained(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    ensure!(diagonal(r).leq(r), "diagonal is not contained in its relation");
    Outcome::Pass
}

fn gen_membership_mix(b: &Budget) -> Vec<Vec<Rel>> {
    let mut out = exhaustive_all_shapes(b.exhaustive_unary);
    let mut rng = b.rng("membership-mix");
    for _ in 0..b.random_instances {
        let x = num("X", rng.gen_range(0..=5));
        let set_count = rng.gen_range(1..=6);
        out.push(vec![gen_membership(&mut rng, &x, set_count)]);
    }
    out
}

fn check_diagonal_injectivity(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    let u = under(r, r);
    let antisym = u.meet(&u.converse()).leq(&Rel::identity(u.target()));
    premise!(antisym, "the column inclusion order is not anti-symmetric");
    ensure!(
        is_injective(&diagonal(r)),
        "diagonal is not injective although the column order is anti-symmetric"
    );
    Outcome::Pass
}

// ---------------------------------------------------------------------
// index-core laws
// ---------------------------------------------------------------------

fn gen_pers(b: &Budget) -> Vec<Vec<Rel>> {
    let mut out = exhaustive_squares(b.exhaustive_unary);
    let mut rng = b.rng("pers");
    for _ in 0..b.random_instances {
        let a = num("A", rng.gen_range(0..=6));
        out.push(vec![gen_per(&mut rng, &a)]);
    }
    out
}

fn check_per_index_exists(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let p = &inst[0];
    premise!(p.is_homogeneous() && is_per(p), "instance must be a per");
    let j = per_index(p);
    ensure!(is_per_index(&j, p), "computed index fails the index clauses");
    let sp = split(p);
    ensure!(sp.f.converse().compose(&sp.f) == *p, "splitting does not recompose the per");
    ensure!(
        sp.f.compose(&sp.f.converse()) == Rel::identity(sp.class_carrier()),
        "splitting is not surjective onto classes"
    );
    Outcome::Pass
}

fn check_core_domains(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    let cw = core_of(r);
    ensure!(ldom(r) == rdom(&cw.lambda), "R< ≠ λ>");
    ensure!(ldom(&cw.core) == ldom(&cw.lambda), "C< ≠ λ<");
    ensure!(rdom(r) == rdom(&cw.rho), "R> ≠ ρ>");
    ensure!(rdom(&cw.core) == ldom(&cw.rho), "C> ≠ ρ<");
    Outcome::Pass
}

fn check_index_absorbs_per_domains(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    let j = rel_index(r);
    let pl = per_ldom(r);
    let pr = per_rdom(r);
    ensure!(pl.compose(&ldom(&j)).compose(&pl) == pl, "R<per∘J<∘R<per ≠ R<per");
    ensure!(pr.compose(&rdom(&j)).compose(&pr) == pr, "R>per∘J>∘R>per ≠ R>per");
    Outcome::Pass
}

fn check_diagonal_commutes_with_core(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    let cw = core_of(r);
    ensure!(
        diagonal(r) == cw.lambda.converse().compose(&diagonal(&cw.core)).compose(&cw.rho),
        "ΔR ≠ λ˘∘ΔC∘ρ"
    );
    ensure!(
        diagonal(&cw.core) == cw.lambda.compose(&diagonal(r)).compose(&cw.rho.converse()),
        "ΔC ≠ λ∘ΔR∘ρ˘"
    );
    Outcome::Pass
}

fn check_diagonal_of_index(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    ensure!(
        is_index(&diagonal(&rel_index(r)), &diagonal(r)),
        "Δ of the index is not an index of ΔR"
    );
    Outcome::Pass
}

fn check_diagonal_index_translation(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    let j = rel_index(r);
    ensure!(
        diagonal(&j) == ldom(&j).compose(&diagonal(r)).compose(&rdom(&j)),
        "ΔJ ≠ J<∘ΔR∘J>"
    );
    ensure!(
        diagonal(r) == per_ldom(r).compose(&diagonal(&j)).compose(&per_rdom(r)),
        "ΔR ≠ R<per∘ΔJ∘R>per"
    );
    Outcome::Pass
}

fn gen_difunctionals(b: &Budget) -> Vec<Vec<Rel>> {
    let mut out = exhaustive_all_shapes(b.exhaustive_unary.min(3));
    let mut rng = b.rng("difunctionals");
    for _ in 0..b.random_instances {
        let a = num("A", rng.gen_range(0..=6));
        let bb = num("B", rng.gen_range(0..=6));
        out.push(vec![gen_difunctional(&mut rng, &a, &bb)]);
    }
    out
}

fn check_difunction_index_clauses(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    premise!(is_difunctional(r), "instance must be difunctional");
    ensure!(
        is_difunction_index(&rel_index(r), r),
        "the relation index fails the difunction-index clauses"
    );
    Outcome::Pass
}

fn gen_iso_triples(b: &Budget) -> Vec<Vec<Rel>> {
    let mut rng = b.rng("iso-triples");
    let mut out = Vec::new();
    let permuted = |rng: &mut rand_chacha::ChaCha8Rng, r: &Rel, ta: &str, sb: &str| {
        let a2 = num(ta, r.target().size());
        let b2 = num(sb, r.source().size());
        let pa = rand_permutation(rng, &a2);
        let pb = rand_permutation(rng, &b2);
        // pa maps the copy's elements to original positions.
        let pav: Vec<usize> =
            (0..a2.size()).map(|x| (0..a2.size()).find(|&y| pa.get(y, x)).unwrap()).collect();
        let pbv: Vec<usize> =
            (0..b2.size()).map(|x| (0..b2.size()).find(|&y| pb.get(y, x)).unwrap()).collect();
        Rel::from_fn(&a2, &b2, |x, y| r.get(pav[x], pbv[y]))
    };
    for _ in 0..b.random_instances {
        let a = num("A", rng.gen_range(0..=5));
        let bb = num("B", rng.gen_range(0..=5));
        let density = rng.gen_range(0.2..0.8);
        let r = rand_rel(&mut rng, &a, &bb, density);
        let s = permuted(&mut rng, &r, "A2", "B2");
        let t = permuted(&mut rng, &s, "A3", "B3");
        out.push(vec![r, s, t]);
    }
    out
}

fn check_isomorphism_equivalence(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 3, "expected 3 relations, got {}", inst.len());
    let (r, s, t) = (&inst[0], &inst[1], &inst[2]);
    match are_isomorphic(r, r) {
        IsoVerdict::Found { .. } => {}
        IsoVerdict::Unknown => return Outcome::Premise("search budget exceeded".into()),
        IsoVerdict::Absent => return Outcome::Fail("relation not isomorphic to itself".into()),
    }
    let (p1, q1) = match are_isomorphic(r, s) {
        IsoVerdict::Found { phi, psi } => (phi, psi),
        IsoVerdict::Unknown => return Outcome::Premise("search budget exceeded".into()),
        IsoVerdict::Absent => {
            return Outcome::Premise("second relation is not an isomorphic copy".into())
        }
    };
    // Symmetry: the reversed witnesses turn the copy back.
    ensure!(
        p1.compose(&s.compose(&q1.converse())) == *r,
        "reversed witnesses do not recover the original"
    );
    let (p2, q2) = match are_isomorphic(s, t) {
        IsoVerdict::Found { phi, psi } => (phi, psi),
        IsoVerdict::Unknown => return Outcome::Premise("search budget exceeded".into()),
        IsoVerdict::Absent => {
            return Outcome::Premise("third relation is not an isomorphic copy".into())
        }
    };
    // Transitivity: composed witnesses relate the ends.
    let p = p1.compose(&p2);
    let q = q1.compose(&q2);
    ensure!(
        is_bijection(&p) && is_bijection(&q),
        "composed witnesses are not bijections"
    );
    ensure!(
        p.converse().compose(r).compose(&q) == *t,
        "composed witnesses do not carry the first relation to the third"
    );
    ensure!(are_isomorphic(r, t).is_found(), "isomorphism is not transitive");
    Outcome::Pass
}

// ---------------------------------------------------------------------
// order-analysis laws
// ---------------------------------------------------------------------

fn gen_decomposition_parts(b: &Budget) -> Vec<Vec<Rel>> {
    let mut rng = b.rng("decomposition-parts");
    let mut out = Vec::new();
    for _ in 0..b.random_instances * 2 {
        let a = num("A", rng.gen_range(1..=5));
        let bb = num("B", rng.gen_range(1..=5));
        let parts = gen_block_parts(&mut rng, &a, &bb);
        if rng.gen_bool(0.5) {
            // Restrict to a random class subset: stays a valid
            // decomposition, now with a partial-domain ordering.
            let c = rand_coreflexive(&mut rng, parts.t.target(), 0.7);
            out.push(vec![
                c.compose(&parts.f),
                c.compose(&parts.t).compose(&c),
                c.compose(&parts.g),
            ]);
        } else {
            out.push(vec![parts.f, parts.t, parts.g]);
        }
    }
    out
}

fn check_decomposition_conclusions(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 3, "expected 3 relations, got {}", inst.len());
    let (f, t, g) = (&inst[0], &inst[1], &inst[2]);
    premise!(
        t.is_homogeneous() && f.target() == t.target() && g.target() == t.target(),
        "instance must type as f: C~A, T: C~C, g: C~B"
    );
    premise!(is_provisional_ordering(t), "middle relation must be a provisional ordering");
    let d = t.meet(&t.converse());
    premise!(
        f.compose(&f.converse()) == d && ldom(f) == d,
        "f must be a functional with f∘f˘ = f< = T∩T˘"
    );
    premise!(
        g.compose(&g.converse()) == d && ldom(g) == d,
        "g must be a functional with g∘g˘ = g< = T∩T˘"
    );
    let r = f.converse().compose(t).compose(g);
    ensure!(ldom(&r) == rdom(f), "R< ≠ f>");
    ensure!(rdom(&r) == rdom(g), "R> ≠ g>");
    ensure!(
        f.converse().compose(&t.converse()).compose(g)
            == ldom(&r).compose(&sandwich(&r, &r, &r).converse()).compose(&rdom(&r)),
        "f˘∘T˘∘g ≠ R<∘(R\\R/R)˘∘R>"
    );
    ensure!(f.converse().compose(g) == diagonal(&r), "f˘∘g ≠ ΔR");
    ensure!(per_ldom(&r) == f.converse().compose(f), "R<per ≠ f˘∘f");
    ensure!(per_rdom(&r) == g.converse().compose(g), "R>per ≠ g˘∘g");
    Outcome::Pass
}

fn gen_block_mix(b: &Budget) -> Vec<Vec<Rel>> {
    let mut out = exhaustive_all_shapes(b.exhaustive_unary);
    let mut rng = b.rng("block-mix");
    for _ in 0..b.random_instances {
        let a = num("A", rng.gen_range(1..=6));
        let bb = num("B", rng.gen_range(1..=6));
        out.push(vec![gen_block_parts(&mut rng, &a, &bb).r]);
    }
    for _ in 0..b.random_instances {
        let a = num("A", rng.gen_range(0..=6));
        let bb = num("B", rng.gen_range(0..=6));
        let density = rng.gen_range(0.1..0.9);
        out.push(vec![rand_rel(&mut rng, &a, &bb, density)]);
    }
    out
}

fn check_block_ordered_iff_diagonal_spans(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    let d = diagonal(r);
    let spans = ldom(r) == ldom(&d) && rdom(r) == rdom(&d);
    ensure!(
        is_block_ordered(r) == spans,
        "block-ordered test disagrees with the domain equalities"
    );
    match block_decompose(r) {
        Ok(bd) => {
            ensure!(spans, "decomposition succeeded although the diagonal loses a domain");
            ensure!(bd.recompose() == *r, "decomposition does not recompose the relation");
        }
        Err(_) => {
            ensure!(!spans, "decomposition failed although the diagonal spans both domains");
        }
    }
    Outcome::Pass
}

fn check_core_preserves_diagonal_spanning(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    let cw = core_of(r);
    let c = &cw.core;
    ensure!(
        (ldom(r) == ldom(&diagonal(r))) == (ldom(c) == ldom(&diagonal(c))),
        "left diagonal-spanning is not preserved by the core"
    );
    ensure!(
        (rdom(r) == rdom(&diagonal(r))) == (rdom(c) == rdom(&diagonal(c))),
        "right diagonal-spanning is not preserved by the core"
    );
    Outcome::Pass
}

fn check_core_of_block_ordered(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    premise!(is_block_ordered(r), "instance must be block-ordered");
    let bd = match block_decompose(r) {
        Ok(bd) => bd,
        Err(e) => return Outcome::Fail(format!("decomposition refused a block-ordered input: {e}")),
    };
    let cw = core_of(r);
    ensure!(bd.f == cw.lambda, "decomposition f differs from the core's λ");
    let pi = bd.g.compose(&cw.rho.converse());
    ensure!(is_bijection(&pi), "block pairing g∘ρ˘ is not a bijection");
    ensure!(
        cw.core == bd.t.compose(&pi),
        "core is not the decomposition ordering transported along the block pairing"
    );
    Outcome::Pass
}

fn check_staircase_formulations_agree(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let b = staircase_battery(&inst[0]);
    ensure!(b.agree(), "the four staircase formulations disagree: {:?}", b.forms);
    Outcome::Pass
}

fn gen_linear_pairs(b: &Budget) -> Vec<Vec<Rel>> {
    let mut rng = b.rng("linear-pairs");
    let mut out = Vec::new();
    for _ in 0..b.random_instances * 2 {
        let n = rng.gen_range(0..=6);
        let a = num("A", n);
        // A linear preorder: classes ordered along a chain.
        let k = rng.gen_range(1..=n.max(1));
        let class: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
        let t1 = Rel::from_fn(&a, &a, |x, y| class[x] <= class[y]);
        // A transitive connected relation: a permuted strict chain with
        // random reflexive points.
        let pi = rand_permutation(&mut rng, &a);
        let pos: Vec<usize> =
            (0..n).map(|x| (0..n).find(|&y| pi.get(y, x)).unwrap()).collect();
        let refl: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        let t2 = Rel::from_fn(&a, &a, |x, y| pos[x] < pos[y] || (x == y && refl[x]));
        out.push(vec![t1, t2]);
    }
    out
}

fn check_linear_orders_are_staircases(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 2, "expected 2 relations, got {}", inst.len());
    let (t1, t2) = (&inst[0], &inst[1]);
    premise!(t1.is_homogeneous() && t2.is_homogeneous(), "instances must be homogeneous");
    let total =
        |t: &Rel| t.join(&t.converse()).join(&Rel::identity(t.target())) == Rel::top(t.target(), t.target());
    premise!(
        t1.is_reflexive() && t1.is_transitive() && total(t1),
        "first relation must be a linear preorder"
    );
    premise!(
        t2.is_transitive() && total(t2),
        "second relation must be transitive and connected"
    );
    ensure!(is_staircase(t1), "a linear preorder is not a staircase");
    ensure!(is_staircase(t2), "a transitive connected relation is not a staircase");
    Outcome::Pass
}

fn gen_staircase_mix(b: &Budget) -> Vec<Vec<Rel>> {
    let mut out = exhaustive_all_shapes(b.exhaustive_unary);
    let mut rng = b.rng("staircase-mix");
    for _ in 0..b.random_instances {
        // A nested-columns relation is a staircase by construction.
        let m = rng.gen_range(0..=6);
        let n = rng.gen_range(0..=6);
        let a = num("A", m);
        let bb = num("B", n);
        let widths: Vec<usize> = (0..m).map(|_| rng.gen_range(0..=n)).collect();
        let sigma = rand_permutation(&mut rng, &bb);
        let pos: Vec<usize> =
            (0..n).map(|y| (0..n).find(|&z| sigma.get(z, y)).unwrap()).collect();
        out.push(vec![Rel::from_fn(&a, &bb, |x, y| pos[y] < widths[x])]);
    }
    out
}

fn check_staircases_are_block_ordered(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    premise!(is_staircase(r), "instance is not a staircase");
    ensure!(is_block_ordered(r), "a finite staircase failed the block-order test");
    Outcome::Pass
}

fn gen_provisional_mix(b: &Budget) -> Vec<Vec<Rel>> {
    let mut out = gen_unary_all(b);
    let mut rng = b.rng("provisional-mix");
    for _ in 0..b.random_instances {
        let a = num("A", rng.gen_range(0..=5));
        out.push(vec![gen_provisional_preorder(&mut rng, &a)]);
        out.push(vec![gen_provisional_ordering(&mut rng, &a)]);
        out.push(vec![gen_linear_ordering(&mut rng, &a)]);
    }
    out
}

fn check_provisional_preorder_identities(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let r = &inst[0];
    // For every relation, both one-sided division closures are
    // provisional preorders.
    ensure!(
        is_provisional_preorder(&rdom(r).compose(&under(r, r))),
        "R>∘(R\\R) is not a provisional preorder"
    );
    ensure!(
        is_provisional_preorder(&over(r, r).compose(&ldom(r))),
        "(R/R)∘R< is not a provisional preorder"
    );
    if !r.is_homogeneous() {
        return Outcome::Pass;
    }
    let pp = is_provisional_preorder(r);
    let left = *r == ldom(r).compose(&under(r, r))
        && *r == over(r, r).compose(&rdom(r))
        && *r == ldom(r).compose(&sandwich(r, r, r)).compose(&rdom(r));
    ensure!(
        left == pp,
        "the division characterization of provisional preorders disagrees"
    );
    if pp {
        ensure!(ldom(r) == rdom(r), "a provisional preorder's domains differ");
        ensure!(
            is_provisional_preorder(&r.converse()),
            "converse of a provisional preorder is not one"
        );
        ensure!(
            *r == per_ldom(r).compose(&under(r, r))
                && *r == over(r, r).compose(&per_rdom(r))
                && *r == per_ldom(r).compose(&sandwich(r, r, r)).compose(&per_rdom(r)),
            "per-domain division characterization fails"
        );
        let sym = r.meet(&r.converse());
        ensure!(
            per_ldom(r) == sym && per_rdom(r) == sym,
            "per domains differ from the symmetric part"
        );
    }
    if is_provisional_ordering(r) {
        let sym = r.meet(&r.converse());
        ensure!(
            ldom(r) == sym && rdom(r) == sym,
            "an ordering's domains differ from its symmetric part"
        );
    }
    Outcome::Pass
}

// ---------------------------------------------------------------------
// graph-condense laws
// ---------------------------------------------------------------------

fn gen_digraphs(b: &Budget) -> Vec<Vec<Rel>> {
    let mut out = exhaustive_squares(b.exhaustive_unary.min(3));
    let mut rng = b.rng("digraphs");
    for _ in 0..b.random_instances {
        let n = rng.gen_range(4..=10);
        let a = num("V", n);
        out.push(vec![rand_rel(&mut rng, &a, &a, 2.0 / n as f64)]);
    }
    out
}

fn check_condensation_factors_closure(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let g = &inst[0];
    premise!(g.is_homogeneous(), "instance must be homogeneous");
    let cond = condense(g);
    let closure = g.rtc();
    ensure!(
        cond.sc.converse().compose(&cond.sc) == diagonal(&closure),
        "sc˘∘sc is not the mutual-reachability equivalence"
    );
    ensure!(
        cond.sc.converse().compose(&cond.dag.rtc()).compose(&cond.sc) == closure,
        "the condensation does not factor the closure"
    );
    ensure!(
        Rel::identity(cond.dag.target()).meet(&cond.dag.tc()).is_empty(),
        "the condensed graph has a cycle"
    );
    Outcome::Pass
}

fn check_closure_diagonal_total_equivalence(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let g = &inst[0];
    premise!(g.is_homogeneous(), "instance must be homogeneous");
    let e = diagonal(&g.rtc());
    ensure!(is_per(&e), "Δ of the closure is not a per");
    ensure!(e.is_reflexive(), "Δ of the closure is not total");
    Outcome::Pass
}

fn check_condensation_idempotent(inst: &[Rel]) -> Outcome {
    premise!(inst.len() == 1, "expected 1 relation, got {}", inst.len());
    let g = &inst[0];
    premise!(g.is_homogeneous(), "instance must be homogeneous");
    let c1 = condense(g);
    let c2 = condense(&c1.dag);
    ensure!(
        c2.components.iter().all(|comp| comp.len() == 1),
        "condensing an acyclic graph must give singleton components"
    );
    ensure!(is_bijection(&c2.sc), "re-condensation classes are not in bijection with nodes");
    ensure!(
        c2.sc.converse().compose(&c2.dag).compose(&c2.sc) == c1.dag,
        "re-condensation changes the acyclic graph"
    );
    Outcome::Pass
}

// ---------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------

/// `(module, law id)` for every registered law, in registry order. The
/// registry is validated against this manifest by a static test.
pub static MANIFEST: &[(&str, &str)] = &[
    ("carrier-rel", "compose-associative"),
    ("carrier-rel", "converse-lattice-isomorphism"),
    ("carrier-rel", "dedekind-both"),
    ("carrier-rel", "cone-rule"),
    ("carrier-rel", "closure-least-prefixpoint"),
    ("residuals", "division-galois"),
    ("residuals", "division-cancellation"),
    ("residuals", "division-absorption"),
    ("residuals", "self-division-closure"),
    ("residuals", "converse-of-divisions"),
    ("residuals", "division-paths-agree"),
    ("domains", "coreflexive-calculus"),
    ("domains", "domain-least-restriction"),
    ("domains", "symmetric-division-domains"),
    ("domains", "functional-galois"),
    ("domains", "functional-division-absorption"),
    ("domains", "functional-prefix-elimination"),
    ("domains", "functional-postfix-distribution"),
    ("domains", "functional-sandwich-shift"),
    ("domains", "split-prefix-elimination"),
    ("domains", "difunctional-battery-agreement"),
    ("diagonal", "diagonal-difunctional"),
    ("diagonal", "diagonal-converse"),
    ("diagonal", "diagonal-per-domains"),
    ("diagonal", "diagonal-domain-iff-per-domain"),
    ("diagonal", "diagonal-contained"),
    ("diagonal", "diagonal-injective-when-column-order-antisymmetric"),
    ("index-core", "per-index-exists"),
    ("index-core", "core-domains"),
    ("index-core", "index-absorbs-per-domains"),
    ("index-core", "diagonal-commutes-with-core"),
    ("index-core", "diagonal-of-index-indexes-diagonal"),
    ("index-core", "diagonal-index-translation"),
    ("index-core", "difunction-index-clauses"),
    ("index-core", "isomorphism-equivalence"),
    ("order-analysis", "decomposition-conclusions"),
    ("order-analysis", "block-ordered-iff-diagonal-spans"),
    ("order-analysis", "core-preserves-diagonal-spanning"),
    ("order-analysis", "core-of-block-ordered-is-ordering"),
    ("order-analysis", "staircase-formulations-agree"),
    ("order-analysis", "linear-orders-are-staircases"),
    ("order-analysis", "finite-staircases-are-block-ordered"),
    ("order-analysis", "provisional-preorder-identities"),
    ("graph-condense", "condensation-factors-closure"),
    ("graph-condense", "closure-diagonal-is-total-equivalence"),
    ("graph-condense", "condensation-idempotent"),
];

static LAWS: &[Law] = &[
    Law {
        id: "compose-associative",
        module: "carrier-rel",
        statement: "(R∘S)∘T = R∘(S∘T)",
        gen: gen_compose_chains,
        check: check_compose_associative,
    },
    Law {
        id: "converse-lattice-isomorphism",
        module: "carrier-rel",
        statement: "converse distributes over meet and join and is an involution",
        gen: gen_same_type_pairs,
        check: check_converse_lattice_isomorphism,
    },
    Law {
        id: "dedekind-both",
        module: "carrier-rel",
        statement: "R∘S ∩ T ⊆ R∘(S ∩ R˘∘T) and R∘S ∩ T ⊆ (R ∩ T∘S˘)∘S",
        gen: gen_dedekind,
        check: check_dedekind_both,
    },
    Law {
        id: "cone-rule",
        module: "carrier-rel",
        statement: "⊤∘R∘⊤ = ⊤ ≡ R ≠ ⊥ over nonempty carriers",
        gen: gen_unary_all,
        check: check_cone_rule,
    },
    Law {
        id: "closure-least-prefixpoint",
        module: "carrier-rel",
        statement: "R* is the union of powers and the least pre-fixpoint of X ↦ I ∪ R∘X",
        gen: gen_closure_pairs,
        check: check_closure_least_prefixpoint,
    },
    Law {
        id: "division-galois",
        module: "residuals",
        statement: "T ⊆ R\\S ≡ R∘T ⊆ S and R ⊆ S/T ≡ R∘T ⊆ S",
        gen: gen_galois,
        check: check_division_galois,
    },
    Law {
        id: "division-cancellation",
        module: "residuals",
        statement: "R∘(R\\R) = R = (R/R)∘R",
        gen: gen_unary_all,
        check: check_division_cancellation,
    },
    Law {
        id: "division-absorption",
        module: "residuals",
        statement: "R/(R\\R) = R = (R/R)\\R",
        gen: gen_unary_all,
        check: check_division_absorption,
    },
    Law {
        id: "self-division-closure",
        module: "residuals",
        statement: "(R\\R)/(R\\R) = R\\R = (R\\R)\\(R\\R)",
        gen: gen_unary_all,
        check: check_self_division_closure,
    },
    Law {
        id: "converse-of-divisions",
        module: "residuals",
        statement: "R˘\\S˘ = (S/R)˘ and (R\\S/T)˘ = T˘\\S˘/R˘",
        gen: gen_converse_divisions,
        check: check_converse_of_divisions,
    },
    Law {
        id: "division-paths-agree",
        module: "residuals",
        statement: "residuals computed by complements match their pointwise meaning",
        gen: gen_residual_pairs,
        check: check_division_paths_agree,
    },
    Law {
        id: "coreflexive-calculus",
        module: "domains",
        statement: "coreflexives satisfy p = p˘ = p∘p and p∘q = p∩q = q∘p",
        gen: gen_coreflexive_pairs,
        check: check_coreflexive_calculus,
    },
    Law {
        id: "domain-least-restriction",
        module: "domains",
        statement: "R = R∘p ≡ R> = R>∘p, with left and per-domain analogues",
        gen: gen_domain_restriction,
        check: check_domain_least_restriction,
    },
    Law {
        id: "symmetric-division-domains",
        module: "domains",
        statement: "the six domain identities of R>\u{200b} against R\\\\R",
        gen: gen_unary_all,
        check: check_symmetric_division_domains,
    },
    Law {
        id: "functional-galois",
        module: "domains",
        statement: "f∘R ⊆ S ≡ f>∘R ⊆ f˘∘S and R∘f˘ ⊆ S ≡ R∘f> ⊆ S∘f for functional f",
        gen: gen_functional_galois,
        check: check_functional_galois,
    },
    Law {
        id: "functional-division-absorption",
        module: "domains",
        statement: "f>∘(f\\R) = f˘∘R for functional f",
        gen: gen_functional_with_rel,
        check: check_functional_division_absorption,
    },
    Law {
        id: "functional-prefix-elimination",
        module: "domains",
        statement: "f<∘(f˘\\(f˘∘R)) = f<∘R for functional f",
        gen: gen_functional_with_rel,
        check: check_functional_prefix_elimination,
    },
    Law {
        id: "functional-postfix-distribution",
        module: "domains",
        statement: "(R\\(S∘f))∘f> = (R\\S)∘f for functional f",
        gen: gen_postfix_distribution,
        check: check_functional_postfix_distribution,
    },
    Law {
        id: "functional-sandwich-shift",
        module: "domains",
        statement: "the five-variable factor shift across two functionals",
        gen: gen_sandwich_shift,
        check: check_functional_sandwich_shift,
    },
    Law {
        id: "split-prefix-elimination",
        module: "domains",
        statement: "g>∘((f˘∘R∘g)\\(f˘∘S)) = g˘∘(R\\S) when f covers exactly R<",
        gen: gen_split_prefix,
        check: check_split_prefix_elimination,
    },
    Law {
        id: "difunctional-battery-agreement",
        module: "domains",
        statement: "seven characterizations of difunctionality agree on every relation",
        gen: gen_unary_all,
        check: check_difunctional_battery_agreement,
    },
    Law {
        id: "diagonal-difunctional",
        module: "diagonal",
        statement: "ΔR is difunctional for every R",
        gen: gen_unary_all,
        check: check_diagonal_difunctional,
    },
    Law {
        id: "diagonal-converse",
        module: "diagonal",
        statement: "Δ(R˘) = (ΔR)˘",
        gen: gen_unary_all,
        check: check_diagonal_converse,
    },
    Law {
        id: "diagonal-per-domains",
        module: "diagonal",
        statement: "(ΔR)<per = (ΔR)<∘R<per = R<per∘(ΔR)<, and the right dual",
        gen: gen_unary_all,
        check: check_diagonal_per_domains,
    },
    Law {
        id: "diagonal-domain-iff-per-domain",
        module: "diagonal",
        statement: "(ΔR)<per = R<per ≡ (ΔR)< = R<, and the right dual",
        gen: gen_unary_all,
        check: check_diagonal_domain_iff_per_domain,
    },
    Law {
        id: "diagonal-contained",
        module: "diagonal",
        statement: "ΔR ⊆ R",
        gen: gen_unary_all,
        check: check_diagonal_contained,
    },
    Law {
        id: "diagonal-injective-when-column-order-antisymmetric",
        module: "diagonal",
        statement: "if R\\R is anti-symmetric then ΔR is injective",
        gen: gen_membership_mix,
        check: check_diagonal_injectivity,
    },
    Law {
        id: "per-index-exists",
        module: "index-core",
        statement: "every finite per has an index and a splitting",
        gen: gen_pers,
        check: check_per_index_exists,
    },
    Law {
        id: "core-domains",
        module: "index-core",
        statement: "R< = λ>, C< = λ<, R> = ρ>, C> = ρ<",
        gen: gen_unary_all,
        check: check_core_domains,
    },
    Law {
        id: "index-absorbs-per-domains",
        module: "index-core",
        statement: "R<per∘J<∘R<per = R<per and the right dual for J = index(R)",
        gen: gen_unary_all,
        check: check_index_absorbs_per_domains,
    },
    Law {
        id: "diagonal-commutes-with-core",
        module: "index-core",
        statement: "ΔR = λ˘∘ΔC∘ρ and ΔC = λ∘ΔR∘ρ˘",
        gen: gen_unary_all,
        check: check_diagonal_commutes_with_core,
    },
    Law {
        id: "diagonal-of-index-indexes-diagonal",
        module: "index-core",
        statement: "Δ(index(R)) is an index of ΔR",
        gen: gen_unary_all,
        check: check_diagonal_of_index,
    },
    Law {
        id: "diagonal-index-translation",
        module: "index-core",
        statement: "ΔJ = J<∘ΔR∘J> and ΔR = R<per∘ΔJ∘R>per for J = index(R)",
        gen: gen_unary_all,
        check: check_diagonal_index_translation,
    },
    Law {
        id: "difunction-index-clauses",
        module: "index-core",
        statement: "for difunctional R, index(R) satisfies the difunction-index clauses",
        gen: gen_difunctionals,
        check: check_difunction_index_clauses,
    },
    Law {
        id: "isomorphism-equivalence",
        module: "index-core",
        statement: "isomorphism is reflexive, symmetric and transitive with explicit witnesses",
        gen: gen_iso_triples,
        check: check_isomorphism_equivalence,
    },
    Law {
        id: "decomposition-conclusions",
        module: "order-analysis",
        statement: "every valid decomposition (f,T,g) of R determines domains, Δ and per domains",
        gen: gen_decomposition_parts,
        check: check_decomposition_conclusions,
    },
    Law {
        id: "block-ordered-iff-diagonal-spans",
        module: "order-analysis",
        statement: "R is block-ordered exactly when ΔR spans both domains of R",
        gen: gen_block_mix,
        check: check_block_ordered_iff_diagonal_spans,
    },
    Law {
        id: "core-preserves-diagonal-spanning",
        module: "order-analysis",
        statement: "R< = (ΔR)< ≡ C< = (ΔC)<, and the right dual",
        gen: gen_unary_all,
        check: check_core_preserves_diagonal_spanning,
    },
    Law {
        id: "core-of-block-ordered-is-ordering",
        module: "order-analysis",
        statement: "a block-ordered relation's core is its decomposition ordering up to block pairing",
        gen: gen_block_mix,
        check: check_core_of_block_ordered,
    },
    Law {
        id: "staircase-formulations-agree",
        module: "order-analysis",
        statement: "four formulations of the staircase test agree on every relation",
        gen: gen_unary_all,
        check: check_staircase_formulations_agree,
    },
    Law {
        id: "linear-orders-are-staircases",
        module: "order-analysis",
        statement: "linear preorders and transitive connected relations are staircases",
        gen: gen_linear_pairs,
        check: check_linear_orders_are_staircases,
    },
    Law {
        id: "finite-staircases-are-block-ordered",
        module: "order-analysis",
        statement: "every finite staircase relation is block-ordered",
        gen: gen_staircase_mix,
        check: check_staircases_are_block_ordered,
    },
    Law {
        id: "provisional-preorder-identities",
        module: "order-analysis",
        statement: "division characterizations, domains, converse and per domains of provisional preorders",
        gen: gen_provisional_mix,
        check: check_provisional_preorder_identities,
    },
    Law {
        id: "condensation-factors-closure",
        module: "graph-condense",
        statement: "G* = sc˘∘dag*∘sc with sc˘∘sc = Δ(G*) and dag acyclic",
        gen: gen_digraphs,
        check: check_condensation_factors_closure,
    },
    Law {
        id: "closure-diagonal-is-total-equivalence",
        module: "graph-condense",
        statement: "Δ(G*) is a total equivalence relation on nodes",
        gen: gen_digraphs,
        check: check_closure_diagonal_total_equivalence,
    },
    Law {
        id: "condensation-idempotent",
        module: "graph-condense",
        statement: "condensing the condensed graph yields singleton components and the same graph",
        gen: gen_digraphs,
        check: check_condensation_idempotent,
    },
];

/// All registered laws, in registry order.
pub fn laws() -> &'static [Law] {
    LAWS
}

/// The law with the given id, if registered.
pub fn find_law(id: &str) -> Option<&'static Law> {
    LAWS.iter().find(|l| l.id == id)
}

// ---------------------------------------------------------------------
// Running and reporting
// ---------------------------------------------------------------------

fn report_of(law: &Law, instance: usize, inst: &[Rel]) -> LawReport {
    match (law.check)(inst) {
        Outcome::Pass => LawReport::pass(law.id, instance),
        Outcome::Premise(detail) => LawReport::vacuous(law.id, instance, detail),
        Outcome::Fail(detail) => LawReport::fail(law.id, instance, serialize_instance(inst), detail),
    }
}

/// Run one law over its generated instances.
pub fn run_law(law: &Law, budget: &Budget) -> Vec<LawReport> {
    (law.gen)(budget)
        .iter()
        .enumerate()
        .map(|(i, inst)| report_of(law, i, inst))
        .collect()
}

/// Run every registered law whose id contains `filter` (all laws when
/// `filter` is `None`), deterministically in the budget's seed.
/// Reports are ordered by law id, then instance index.
pub fn run_laws(filter: Option<&str>, budget: &Budget) -> Vec<LawReport> {
    let mut out = Vec::new();
    for law in LAWS {
        if let Some(f) = filter {
            if !law.id.contains(f) {
                continue;
            }
        }
        out.extend(run_law(law, budget));
    }
    out.sort_by(|a, b| a.law_id.cmp(&b.law_id).then(a.instance.cmp(&b.instance)));
    out
}

/// Collapse reports into one summary per law (ordered by law id).
pub fn summarize(reports: &[LawReport]) -> Vec<LawSummary> {
    let mut out: Vec<LawSummary> = Vec::new();
    for r in reports {
        match out.iter_mut().find(|s| s.law == r.law_id) {
            Some(s) => {
                s.instances += 1;
                if !r.passed {
                    s.failures += 1;
                }
            }
            None => out.push(LawSummary {
                law: r.law_id.clone(),
                instances: 1,
                failures: usize::from(!r.passed),
            }),
        }
    }
    out.sort_by(|a, b| a.law.cmp(&b.law));
    out
}

/// Machine-readable line-delimited summary (one JSON object per law).
pub fn summary_jsonl(reports: &[LawReport]) -> String {
    summarize(reports)
        .iter()
        .map(|s| serde_json::to_string(s).expect("summary serializes"))
        .fold(String::new(), |mut acc, line| {
            acc.push_str(&line);
            acc.push('\n');
            acc
        })
}

/// Re-run a single law on a serialized instance (relations named `R0`,
/// `R1`, … in a relation file, as produced in failure counterexamples).
/// Reproduces the original outcome for the same input.
pub fn recheck(law_id: &str, instance_text: &str) -> Result<LawReport, RelError> {
    let law = find_law(law_id)
        .ok_or_else(|| RelError::precondition(format!("unknown law id `{law_id}`")))?;
    let file = RelFile::parse(instance_text)?;
    let mut rels = Vec::new();
    while let Ok(r) = file.rel(&format!("R{}", rels.len())) {
        rels.push(r.clone());
    }
    if rels.is_empty() {
        return Err(RelError::precondition(
            "instance text contains no relations named R0, R1, …".to_string(),
        ));
    }
    Ok(report_of(law, 0, &rels))
}
