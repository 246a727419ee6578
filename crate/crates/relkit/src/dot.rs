//! DOT (Graphviz) renderings: a relation as a (bipartite) digraph, a
//! block-order decomposition as clusters linked by ordering edges, and
//! a condensation as component boxes over the acyclic edges.
//!
//! Output is deterministic: nodes are emitted label-sorted, edges
//! sorted by endpoint labels.

use std::fmt::Write;

use crate::condense::CondensationResult;
use crate::order::BlockOrderDecomposition;
use crate::rel::Rel;

/// DOT double-quoted string (escapes backslash and quote).
fn quoted(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            _ => out.push(ch),
        }
    }
    out.push('"');
    out
}

/// `(label, node id)` pairs for each element of a carrier side, sorted
/// by label. The `role` prefix keeps ids unique across sides sharing a
/// carrier.
fn side_nodes(role: &str, labels: &[String]) -> Vec<(String, String)> {
    let mut nodes: Vec<(String, String)> =
        labels.iter().map(|l| (l.clone(), format!("{role}:{l}"))).collect();
    nodes.sort();
    nodes
}

fn emit_node(out: &mut String, indent: &str, id: &str, label: &str, attrs: &str) {
    let _ = writeln!(out, "{indent}{} [label={}{attrs}];", quoted(id), quoted(label));
}

/// Render a relation. Homogeneous relations become a plain digraph
/// (one node per element, one directed edge per pair); heterogeneous
/// relations become two carrier clusters with edges from target
/// elements to source elements.
pub fn rel_dot(name: &str, r: &Rel) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quoted(name));
    if r.is_homogeneous() {
        let nodes = side_nodes("n", r.target().labels());
        for (label, id) in &nodes {
            emit_node(&mut out, "  ", id, label, "");
        }
        let mut edges: Vec<(String, String)> = r
            .pairs()
            .into_iter()
            .map(|(a, b)| (r.target().label(a).to_string(), r.source().label(b).to_string()))
            .collect();
        edges.sort();
        for (a, b) in edges {
            let _ = writeln!(
                out,
                "  {} -> {};",
                quoted(&format!("n:{a}")),
                quoted(&format!("n:{b}"))
            );
        }
    } else {
        let _ = writeln!(out, "  rankdir=LR;");
        for (role, carrier) in [("row", r.target()), ("col", r.source())] {
            let _ = writeln!(out, "  subgraph {} {{", quoted(&format!("cluster_{}", carrier.name())));
            let _ = writeln!(out, "    label={};", quoted(carrier.name()));
            for (label, id) in side_nodes(role, carrier.labels()) {
                emit_node(&mut out, "    ", &id, &label, "");
            }
            let _ = writeln!(out, "  }}");
        }
        let mut edges: Vec<(String, String)> = r
            .pairs()
            .into_iter()
            .map(|(a, b)| (r.target().label(a).to_string(), r.source().label(b).to_string()))
            .collect();
        edges.sort();
        for (a, b) in edges {
            let _ = writeln!(
                out,
                "  {} -> {};",
                quoted(&format!("row:{a}")),
                quoted(&format!("col:{b}"))
            );
        }
    }
    out.push_str("}\n");
    out
}

/// The strict covering pairs of a homogeneous relation `t`: pairs
/// `(i, j)` with `i ≠ j`, `t(i,j)`, and no distinct `k` strictly
/// between them. For an ordering this is its transitive reduction, so
/// a chain renders as a path.
fn cover_pairs(t: &Rel) -> Vec<(usize, usize)> {
    let n = t.target().size();
    let strict = |i: usize, j: usize| i != j && t.get(i, j);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if strict(i, j) && !(0..n).any(|k| k != i && k != j && strict(i, k) && strict(k, j)) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Render a block-order decomposition: one cluster per inhabited
/// block, holding its target-side (ellipse) and source-side (box)
/// elements, the within-block atoms as undirected links, and the
/// block ordering's covering edges between clusters.
pub fn decomposition_dot(name: &str, bd: &BlockOrderDecomposition) -> String {
    let classes = bd.t.target();
    let rows = bd.f.source();
    let cols = bd.g.source();
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quoted(name));
    let _ = writeln!(out, "  compound=true;");
    let _ = writeln!(out, "  rankdir=LR;");

    // Per class: sorted member labels on each side, plus the anchor
    // node id used for inter-cluster edges.
    let mut anchors: Vec<Option<String>> = vec![None; classes.size()];
    let mut class_order: Vec<(String, usize)> =
        (0..classes.size()).map(|c| (classes.label(c).to_string(), c)).collect();
    class_order.sort();
    for (class_label, c) in &class_order {
        let row_members: Vec<String> = (0..rows.size())
            .filter(|&a| bd.f.get(*c, a))
            .map(|a| rows.label(a).to_string())
            .collect();
        let col_members: Vec<String> = (0..cols.size())
            .filter(|&b| bd.g.get(*c, b))
            .map(|b| cols.label(b).to_string())
            .collect();
        if row_members.is_empty() && col_members.is_empty() {
            continue;
        }
        let _ = writeln!(out, "  subgraph {} {{", quoted(&format!("cluster_{class_label}")));
        let _ = writeln!(out, "    label={};", quoted(class_label));
        let row_nodes = side_nodes("row", &row_members);
        let col_nodes = side_nodes("col", &col_members);
        for (label, id) in &row_nodes {
            emit_node(&mut out, "    ", id, label, "");
        }
        for (label, id) in &col_nodes {
            emit_node(&mut out, "    ", id, label, ", shape=box");
        }
        anchors[*c] = row_nodes
            .first()
            .or_else(|| col_nodes.first())
            .map(|(_, id)| id.clone());
        // Within-block atoms: each row is linked to each column.
        for (_, rid) in &row_nodes {
            for (_, cid) in &col_nodes {
                let _ = writeln!(out, "    {} -> {} [dir=none];", quoted(rid), quoted(cid));
            }
        }
        let _ = writeln!(out, "  }}");
    }

    let mut covers: Vec<(String, String, usize, usize)> = cover_pairs(&bd.t)
        .into_iter()
        .map(|(i, j)| (classes.label(i).to_string(), classes.label(j).to_string(), i, j))
        .collect();
    covers.sort();
    for (li, lj, i, j) in covers {
        if let (Some(ai), Some(aj)) = (&anchors[i], &anchors[j]) {
            let _ = writeln!(
                out,
                "  {} -> {} [ltail={}, lhead={}];",
                quoted(ai),
                quoted(aj),
                quoted(&format!("cluster_{li}")),
                quoted(&format!("cluster_{lj}")),
            );
        }
    }
    out.push_str("}\n");
    out
}

/// Render a condensation: one box per strongly connected component
/// (labeled by its least member) and one directed edge per pair of
/// components related by the acyclic relation.
pub fn condensation_dot(name: &str, cond: &CondensationResult) -> String {
    let classes = cond.sc.target();
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quoted(name));
    let _ = writeln!(out, "  compound=true;");

    let mut anchors: Vec<Option<String>> = vec![None; classes.size()];
    let mut class_order: Vec<(String, usize)> =
        (0..classes.size()).map(|c| (classes.label(c).to_string(), c)).collect();
    class_order.sort();
    for (class_label, c) in &class_order {
        let _ = writeln!(out, "  subgraph {} {{", quoted(&format!("cluster_{class_label}")));
        let _ = writeln!(out, "    label={};", quoted(class_label));
        let members = side_nodes("v", &cond.components[*c]);
        for (label, id) in &members {
            emit_node(&mut out, "    ", id, label, "");
        }
        anchors[*c] = members.first().map(|(_, id)| id.clone());
        let _ = writeln!(out, "  }}");
    }

    let mut edges: Vec<(String, String, usize, usize)> = cond
        .dag
        .pairs()
        .into_iter()
        .map(|(i, j)| (classes.label(i).to_string(), classes.label(j).to_string(), i, j))
        .collect();
    edges.sort();
    for (li, lj, i, j) in edges {
        if let (Some(ai), Some(aj)) = (&anchors[i], &anchors[j]) {
            let _ = writeln!(
                out,
                "  {} -> {} [ltail={}, lhead={}];",
                quoted(ai),
                quoted(aj),
                quoted(&format!("cluster_{li}")),
                quoted(&format!("cluster_{lj}")),
            );
        }
    }
    out.push_str("}\n");
    out
}
