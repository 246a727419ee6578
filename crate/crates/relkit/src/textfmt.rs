//! The plain-text relation file format.
//!
//! ```text
//! # comment
//! carrier A = a0 a1 a2
//! carrier B = b0 b1
//! rel R : A ~ B
//! a0 b1
//! a2 b0
//! end
//! ```
//!
//! Lines are whitespace-separated tokens; `#` starts a comment running to
//! the end of the line; a file may declare any number of carriers and
//! relations; the order of pair lines is irrelevant. Every relation body is
//! terminated by `end`. Serialization followed by parsing yields
//! bit-identical relations.

use std::sync::Arc;

use crate::carrier::Carrier;
use crate::error::RelError;
use crate::rel::Rel;

/// A parsed relation file: named carriers and named relations.
#[derive(Debug, Clone, Default)]
pub struct RelFile {
    pub carriers: Vec<Arc<Carrier>>,
    pub rels: Vec<(String, Rel)>,
}

impl RelFile {
    pub fn new() -> RelFile {
        RelFile::default()
    }

    pub fn carrier(&self, name: &str) -> Result<&Arc<Carrier>, RelError> {
        self.carriers
            .iter()
            .find(|c| c.name() == name)
            .ok_or_else(|| RelError::UnknownCarrier(name.to_string()))
    }

    pub fn rel(&self, name: &str) -> Result<&Rel, RelError> {
        self.rels
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, r)| r)
            .ok_or_else(|| RelError::UnknownRel(name.to_string()))
    }

    /// Add a relation, registering its carriers if they are new.
    pub fn push(&mut self, name: impl Into<String>, rel: Rel) {
        for c in [rel.target(), rel.source()] {
            if !self.carriers.iter().any(|k| k.name() == c.name()) {
                self.carriers.push(Arc::clone(c));
            }
        }
        self.rels.push((name.into(), rel));
    }

    pub fn parse(text: &str) -> Result<RelFile, RelError> {
        let mut file = RelFile::new();
        // (line number, tokens) with comments stripped and blanks dropped
        let lines: Vec<(usize, Vec<&str>)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| {
                let l = l.split('#').next().unwrap_or("");
                (i + 1, l.split_whitespace().collect::<Vec<_>>())
            })
            .filter(|(_, t)| !t.is_empty())
            .collect();

        let mut i = 0;
        while i < lines.len() {
            let (ln, toks) = (&lines[i].0, &lines[i].1);
            let ln = *ln;
            match toks[0] {
                "carrier" => {
                    // carrier <Name> = <label>*
                    if toks.len() < 3 || toks[2] != "=" {
                        return Err(RelError::parse(ln, "expected `carrier <name> = <labels...>`"));
                    }
                    let name = toks[1];
                    if file.carriers.iter().any(|c| c.name() == name) {
                        return Err(RelError::parse(ln, format!("carrier `{name}` declared twice")));
                    }
                    let carrier = Carrier::new(name, toks[3..].iter().copied())
                        .map_err(|e| RelError::parse(ln, e.to_string()))?;
                    file.carriers.push(carrier);
                    i += 1;
                }
                "rel" => {
                    // rel <Name> : <A> ~ <B>   (also accepts a single `A~B` token)
                    let mut header: Vec<String> = Vec::new();
                    for t in &toks[1..] {
                        if *t != "~" && t.contains('~') {
                            let (a, b) = t.split_once('~').unwrap();
                            for piece in [a, "~", b] {
                                if !piece.is_empty() {
                                    header.push(piece.to_string());
                                }
                            }
                        } else {
                            header.push(t.to_string());
                        }
                    }
                    if header.len() != 5 || header[1] != ":" || header[3] != "~" {
                        return Err(RelError::parse(ln, "expected `rel <name> : <A> ~ <B>`"));
                    }
                    let rel_name = header[0].clone();
                    if file.rels.iter().any(|(n, _)| *n == rel_name) {
                        return Err(RelError::parse(ln, format!("relation `{rel_name}` declared twice")));
                    }
                    let target = Arc::clone(
                        file.carrier(&header[2])
                            .map_err(|e| RelError::parse(ln, e.to_string()))?,
                    );
                    let source = Arc::clone(
                        file.carrier(&header[4])
                            .map_err(|e| RelError::parse(ln, e.to_string()))?,
                    );
                    let mut rel = Rel::bottom(&target, &source);
                    // pair lines up to `end`
                    i += 1;
                    loop {
                        let Some((pln, ptoks)) = lines.get(i).map(|(n, t)| (*n, t)) else {
                            return Err(RelError::parse(
                                ln,
                                format!("relation `{rel_name}` is missing its `end` line"),
                            ));
                        };
                        if ptoks[0] == "end" {
                            if ptoks.len() != 1 {
                                return Err(RelError::parse(pln, "`end` takes no arguments"));
                            }
                            i += 1;
                            break;
                        }
                        if ptoks.len() != 2 {
                            return Err(RelError::parse(
                                pln,
                                "expected a pair `<target-label> <source-label>` or `end`",
                            ));
                        }
                        let a = target.index_of(ptoks[0]).ok_or_else(|| {
                            RelError::parse(
                                pln,
                                format!("unknown label `{}` for carrier `{}`", ptoks[0], target.name()),
                            )
                        })?;
                        let b = source.index_of(ptoks[1]).ok_or_else(|| {
                            RelError::parse(
                                pln,
                                format!("unknown label `{}` for carrier `{}`", ptoks[1], source.name()),
                            )
                        })?;
                        rel.set(a, b, true);
                        i += 1;
                    }
                    file.rels.push((rel_name, rel));
                }
                other => {
                    return Err(RelError::parse(
                        ln,
                        format!("expected `carrier` or `rel`, found `{other}`"),
                    ));
                }
            }
        }
        Ok(file)
    }

    /// Serialize every carrier and relation in declaration order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.carriers {
            let ls = c.labels().join(" ");
            if ls.is_empty() {
                out.push_str(&format!("carrier {} =\n", c.name()));
            } else {
                out.push_str(&format!("carrier {} = {ls}\n", c.name()));
            }
        }
        for (name, r) in &self.rels {
            out.push_str(&format!(
                "rel {} : {} ~ {}\n",
                name,
                r.target().name(),
                r.source().name()
            ));
            for (a, b) in r.pairs() {
                out.push_str(&format!("{} {}\n", r.target().label(a), r.source().label(b)));
            }
            out.push_str("end\n");
        }
        out
    }
}

/// Convenience: bundle relations into a file, de-duplicating carriers.
pub fn file_of<'a>(rels: impl IntoIterator<Item = (&'a str, &'a Rel)>) -> RelFile {
    let mut f = RelFile::new();
    for (name, r) in rels {
        f.push(name, r.clone());
    }
    f
}
