//! Independent oracles for the integration suites.
//!
//! Every function here recomputes its result from first principles —
//! pointwise quantifier loops, textbook algorithms, exhaustive searches
//! — sharing no algorithmic code with the library implementation it is
//! used to cross-check. `Rel` appears only as a bit container (via
//! `get`/`set`/`bottom` and the carrier accessors).

use std::collections::BTreeSet;

use relkit::{Carrier, Rel};
use std::sync::Arc;

// ---------------------------------------------------------------------
// Pointwise relation algebra
// ---------------------------------------------------------------------

/// Composition by the defining quantifier: `(a,c) ∈ R∘S` iff some `b`
/// has `(a,b) ∈ R` and `(b,c) ∈ S`.
pub fn naive_compose(r: &Rel, s: &Rel) -> Rel {
    assert_eq!(r.source(), s.target(), "naive_compose: middle carriers must agree");
    let mut out = Rel::bottom(r.target(), s.source());
    for a in 0..r.target().size() {
        for c in 0..s.source().size() {
            let hit = (0..r.source().size()).any(|b| r.get(a, b) && s.get(b, c));
            out.set(a, c, hit);
        }
    }
    out
}

/// Converse by pointwise transposition.
pub fn naive_converse(r: &Rel) -> Rel {
    let mut out = Rel::bottom(r.source(), r.target());
    for a in 0..r.target().size() {
        for b in 0..r.source().size() {
            out.set(b, a, r.get(a, b));
        }
    }
    out
}

/// Left residual `R\S` by its defining quantifier: for `R : A ~ B` and
/// `S : A ~ C` (common target), `(b,c)` holds iff every `a` with
/// `(a,b) ∈ R` also has `(a,c) ∈ S`.
pub fn naive_under(r: &Rel, s: &Rel) -> Rel {
    assert_eq!(r.target(), s.target(), "naive_under: targets must agree");
    let mut out = Rel::bottom(r.source(), s.source());
    for b in 0..r.source().size() {
        for c in 0..s.source().size() {
            let all = (0..r.target().size()).all(|a| !r.get(a, b) || s.get(a, c));
            out.set(b, c, all);
        }
    }
    out
}

/// Right residual `S/T` by its defining quantifier: for `S : A ~ D` and
/// `T : E ~ D` (common source), `(a,e)` holds iff every `d` with
/// `(e,d) ∈ T` also has `(a,d) ∈ S`.
pub fn naive_over(s: &Rel, t: &Rel) -> Rel {
    assert_eq!(s.source(), t.source(), "naive_over: sources must agree");
    let mut out = Rel::bottom(s.target(), t.target());
    for a in 0..s.target().size() {
        for e in 0..t.target().size() {
            let all = (0..s.source().size()).all(|d| !t.get(e, d) || s.get(a, d));
            out.set(a, e, all);
        }
    }
    out
}

/// The diagonal (fringe) by its defining quantifier: `(a,b)` survives
/// iff it is in `R` and every completion of the rectangle stays inside:
/// whenever `(a,b') ∈ R` and `(a',b) ∈ R`, also `(a',b') ∈ R`.
pub fn riguet_diagonal(r: &Rel) -> Rel {
    let rows = r.target().size();
    let cols = r.source().size();
    let mut out = Rel::bottom(r.target(), r.source());
    for a in 0..rows {
        for b in 0..cols {
            if !r.get(a, b) {
                continue;
            }
            let rect = (0..rows).all(|a2| {
                (0..cols).all(|b2| !(r.get(a, b2) && r.get(a2, b)) || r.get(a2, b2))
            });
            out.set(a, b, rect);
        }
    }
    out
}

/// Reflexive-transitive closure as the limit of the chain
/// `I ∪ R ∪ R∘R ∪ …`, iterated pointwise until nothing changes.
pub fn fixpoint_rtc(r: &Rel) -> Rel {
    assert_eq!(r.target(), r.source(), "fixpoint_rtc: relation must be homogeneous");
    let n = r.target().size();
    let mut out = Rel::bottom(r.target(), r.source());
    for i in 0..n {
        out.set(i, i, true);
    }
    for a in 0..n {
        for b in 0..n {
            if r.get(a, b) {
                out.set(a, b, true);
            }
        }
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            for c in 0..n {
                if !out.get(a, c) && (0..n).any(|b| out.get(a, b) && out.get(b, c)) {
                    out.set(a, c, true);
                    changed = true;
                }
            }
        }
        if !changed {
            return out;
        }
    }
}

// ---------------------------------------------------------------------
// Strongly connected components (textbook Kosaraju, two DFS passes)
// ---------------------------------------------------------------------

/// Component id per vertex via Kosaraju's algorithm on adjacency lists:
/// one DFS pass records finish order, a second pass over the reversed
/// graph peels components in reverse finish order. Ids are assigned in
/// peel order; compare partitions, not raw ids.
pub fn kosaraju(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut radj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, outs) in adj.iter().enumerate() {
        for &v in outs {
            radj[v].push(u);
        }
    }

    // First pass: explicit-stack DFS recording finish times.
    let mut finished: Vec<usize> = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        seen[start] = true;
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if *next < adj[u].len() {
                let v = adj[u][*next];
                *next += 1;
                if !seen[v] {
                    seen[v] = true;
                    stack.push((v, 0));
                }
            } else {
                finished.push(u);
                stack.pop();
            }
        }
    }

    // Second pass: flood the reversed graph in reverse finish order.
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for &root in finished.iter().rev() {
        if comp[root] != usize::MAX {
            continue;
        }
        let mut stack = vec![root];
        comp[root] = count;
        while let Some(u) = stack.pop() {
            for &v in &radj[u] {
                if comp[v] == usize::MAX {
                    comp[v] = count;
                    stack.push(v);
                }
            }
        }
        count += 1;
    }
    comp
}

/// A partition as a set of label sets, for order-insensitive equality.
pub fn partition_from_ids(carrier: &Arc<Carrier>, ids: &[usize]) -> BTreeSet<BTreeSet<String>> {
    let classes = ids.iter().copied().max().map_or(0, |m| m + 1);
    let mut parts: Vec<BTreeSet<String>> = vec![BTreeSet::new(); classes];
    for (v, &c) in ids.iter().enumerate() {
        parts[c].insert(carrier.label(v).to_string());
    }
    parts.into_iter().filter(|p| !p.is_empty()).collect()
}

/// The same shape built from explicit member-label lists.
pub fn partition_from_lists(components: &[Vec<String>]) -> BTreeSet<BTreeSet<String>> {
    components
        .iter()
        .map(|members| members.iter().cloned().collect())
        .collect()
}

/// Adjacency lists of a homogeneous relation, for the SCC oracle.
pub fn adjacency_of(g: &Rel) -> Vec<Vec<usize>> {
    assert_eq!(g.target(), g.source(), "adjacency_of: relation must be homogeneous");
    let n = g.target().size();
    (0..n)
        .map(|u| (0..n).filter(|&v| g.get(u, v)).collect())
        .collect()
}

// ---------------------------------------------------------------------
// Staircase and adjoint brute force
// ---------------------------------------------------------------------

/// Brute-force staircase test: the columns, read as element sets, must
/// form a chain under inclusion.
pub fn columns_chain(r: &Rel) -> bool {
    let rows = r.target().size();
    let cols = r.source().size();
    let col = |b: usize| -> Vec<bool> { (0..rows).map(|a| r.get(a, b)).collect() };
    let included = |x: &[bool], y: &[bool]| x.iter().zip(y).all(|(&p, &q)| !p || q);
    (0..cols).all(|b1| {
        (0..cols).all(|b2| {
            let c1 = col(b1);
            let c2 = col(b2);
            included(&c1, &c2) || included(&c2, &c1)
        })
    })
}

/// Every total function `target(r) → source(r)`, as a relation
/// `source(r) ~ target(r)` mapping `a` (column) to its value (row) —
/// the orientation the lower-adjoint API uses. The list has
/// `|B|^|A|` entries.
pub fn all_functions_into(b: &Arc<Carrier>, a: &Arc<Carrier>) -> Vec<Rel> {
    let na = a.size();
    let nb = b.size();
    let count = nb.checked_pow(na as u32).expect("function space too large to enumerate");
    (0..count)
        .map(|code| {
            let mut f = Rel::bottom(b, a);
            let mut c = code;
            for x in 0..na {
                f.set(c % nb, x, true);
                c /= nb;
            }
            f
        })
        .collect()
}

/// Exhaustive lower-adjoint search: all total functions `F : A → B`
/// with `R(a,b) ≡ F.a ⊑ b` pointwise. Returns every witness.
pub fn brute_lower_adjoints(r: &Rel, order_b: &Rel) -> Vec<Rel> {
    assert_eq!(r.source(), order_b.target());
    let value_of = |f: &Rel, a: usize| -> usize {
        (0..r.source().size())
            .find(|&y| f.get(y, a))
            .expect("candidate functions are total")
    };
    all_functions_into(r.source(), r.target())
        .into_iter()
        .filter(|f| {
            (0..r.target().size()).all(|a| {
                (0..r.source().size()).all(|b| r.get(a, b) == order_b.get(value_of(f, a), b))
            })
        })
        .collect()
}

/// Exhaustive upper-adjoint search: all total functions `G : B → A`
/// with `R(a,b) ≡ a ⊑ G.b` pointwise. Returns every witness.
pub fn brute_upper_adjoints(r: &Rel, order_a: &Rel) -> Vec<Rel> {
    assert_eq!(r.target(), order_a.target());
    let value_of = |g: &Rel, b: usize| -> usize {
        (0..r.target().size())
            .find(|&x| g.get(x, b))
            .expect("candidate functions are total")
    };
    all_functions_into(r.target(), r.source())
        .into_iter()
        .filter(|g| {
            (0..r.target().size()).all(|a| {
                (0..r.source().size()).all(|b| r.get(a, b) == order_a.get(a, value_of(g, b)))
            })
        })
        .collect()
}

/// Is every fiber `{b : R(a,b)}` a principal filter of the order — an
/// up-set with a single generator? Decided by exhaustive generator
/// search, with no infimum computation.
pub fn fibers_are_principal_filters(r: &Rel, order_b: &Rel) -> bool {
    assert_eq!(r.source(), order_b.target());
    let nb = r.source().size();
    (0..r.target().size()).all(|a| {
        (0..nb).any(|m| (0..nb).all(|b| r.get(a, b) == order_b.get(m, b)))
    })
}

// ---------------------------------------------------------------------
// Bit-table engine (u16 masks, rows·cols ≤ 16) for exhaustive axioms
// ---------------------------------------------------------------------

/// Relation algebra on raw u16 masks: entry `(a,b)` of an `m×n`
/// relation is bit `a·n + b`. Independent of the library's packed-row
/// representation; all operations are quantifier loops over bits.
pub mod table {
    /// `(a,c)` of the `m×k ∘ k×n` composite.
    pub fn compose(r: u16, s: u16, m: usize, k: usize, n: usize) -> u16 {
        let mut out = 0u16;
        for a in 0..m {
            for c in 0..n {
                if (0..k).any(|b| r >> (a * k + b) & 1 == 1 && s >> (b * n + c) & 1 == 1) {
                    out |= 1 << (a * n + c);
                }
            }
        }
        out
    }

    /// Transpose an `m×n` mask into an `n×m` mask.
    pub fn converse(r: u16, m: usize, n: usize) -> u16 {
        let mut out = 0u16;
        for a in 0..m {
            for b in 0..n {
                if r >> (a * n + b) & 1 == 1 {
                    out |= 1 << (b * m + a);
                }
            }
        }
        out
    }

    /// The full `m×n` mask.
    pub fn top(m: usize, n: usize) -> u16 {
        if m * n == 16 {
            u16::MAX
        } else {
            (1u16 << (m * n)) - 1
        }
    }

    /// Inclusion of same-shape masks.
    pub fn leq(r: u16, s: u16) -> bool {
        r & !s == 0
    }

    /// A pre-tabulated composition `m×k ∘ k×n`, plus its argument-swapped
    /// twin for cache-friendly access from either side.
    pub struct ComposeTable {
        pub m: usize,
        pub k: usize,
        pub n: usize,
        by_left: Vec<u16>,
        by_right: Vec<u16>,
    }

    impl ComposeTable {
        pub fn build(m: usize, k: usize, n: usize) -> ComposeTable {
            let lcount = 1usize << (m * k);
            let rcount = 1usize << (k * n);
            let mut by_left = vec![0u16; lcount * rcount];
            let mut by_right = vec![0u16; rcount * lcount];
            for r in 0..lcount {
                for s in 0..rcount {
                    let v = compose(r as u16, s as u16, m, k, n);
                    by_left[r * rcount + s] = v;
                    by_right[s * lcount + r] = v;
                }
            }
            ComposeTable { m, k, n, by_left, by_right }
        }

        /// `r ∘ s` with `r` indexing the major dimension.
        #[inline]
        pub fn at(&self, r: u16, s: u16) -> u16 {
            self.by_left[(r as usize) << (self.k * self.n) | s as usize]
        }

        /// `r ∘ s` with `s` indexing the major dimension.
        #[inline]
        pub fn at_rev(&self, r: u16, s: u16) -> u16 {
            self.by_right[(s as usize) << (self.m * self.k) | r as usize]
        }
    }
}

/// Convert a bit-table mask into a library relation of the same shape.
pub fn rel_of_mask(mask: u16, target: &Arc<Carrier>, source: &Arc<Carrier>) -> Rel {
    let n = source.size();
    let mut out = Rel::bottom(target, source);
    for a in 0..target.size() {
        for b in 0..n {
            if mask >> (a * n + b) & 1 == 1 {
                out.set(a, b, true);
            }
        }
    }
    out
}

/// Convert a library relation into a bit-table mask.
pub fn mask_of_rel(r: &Rel) -> u16 {
    let n = r.source().size();
    assert!(r.target().size() * n <= 16, "mask_of_rel: relation exceeds 16 entries");
    let mut mask = 0u16;
    for a in 0..r.target().size() {
        for b in 0..n {
            if r.get(a, b) {
                mask |= 1 << (a * n + b);
            }
        }
    }
    mask
}
