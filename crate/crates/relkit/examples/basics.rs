//! Carriers, typed relations, the lattice operations, composition,
//! converse, and reachability closure.
//!
//! Run with: cargo run --example basics

use relkit::{Carrier, Rel};

fn main() {
    // A carrier is a named finite set with labeled elements. A relation
    // is typed by a target carrier (rows) and a source carrier (columns).
    let people = Carrier::new("People", ["ann", "ben", "cal"]).unwrap();
    let books = Carrier::new("Books", ["logic", "graphs", "poems", "proofs"]).unwrap();

    let reads = Rel::make(
        &people,
        &books,
        [
            ("ann", "logic"),
            ("ann", "proofs"),
            ("ben", "graphs"),
            ("cal", "logic"),
            ("cal", "poems"),
        ],
    )
    .unwrap();
    println!("reads : People ~ Books");
    println!("{}", reads.to_grid_string());

    // Relations of one type form a boolean lattice.
    let classics = Rel::make(&people, &books, [("ann", "logic"), ("ben", "logic")]).unwrap();
    let both = reads.meet(&classics);
    let either = reads.join(&classics);
    let non_readers = reads.complement();
    assert!(both.leq(&reads) && reads.leq(&either));
    assert_eq!(non_readers.complement(), reads);
    println!("reads ∩ classics has {} pairs; reads ∪ classics has {}.", both.count(), either.count());

    // Composition chains typed relations; converse flips one.
    let cites = Rel::make(
        &books,
        &books,
        [("proofs", "logic"), ("graphs", "logic"), ("poems", "graphs")],
    )
    .unwrap();
    let reads_a_citer_of = reads.compose(&cites);
    println!("reads∘cites : People ~ Books");
    println!("{}", reads_a_citer_of.to_grid_string());
    assert!(reads_a_citer_of.get(0, 0), "ann reads proofs, which cites logic");
    assert_eq!(reads.converse().target(), &books, "converse swaps the typing");

    // Reflexive-transitive closure turns one-step citation into
    // reachability; the closure is the least reflexive transitive
    // relation above `cites`.
    let reachable = cites.rtc();
    assert!(reachable.is_reflexive() && reachable.is_transitive());
    assert!(cites.leq(&reachable));
    assert!(reachable.get(2, 0), "poems reaches logic through graphs");
    println!("citation reachability:\n{}", reachable.to_grid_string());

    // Carriers may be empty; the relations over them are still lawful.
    let nobody = Carrier::new("Nobody", [] as [&str; 0]).unwrap();
    let silent = Rel::bottom(&nobody, &books);
    assert!(silent.is_empty());
    assert_eq!(silent.compose(&cites).source(), &books);
    println!("empty carriers compose without fuss: {} pairs.", silent.compose(&cites).count());
}
