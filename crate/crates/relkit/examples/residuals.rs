//! Residuals (factors): the two division operators adjoint to
//! composition, and the three-sided sandwich factor.
//!
//! Run with: cargo run --example residuals

use relkit::generate::all_rels;
use relkit::residual::{over, sandwich, sym_ldiv, sym_rdiv, under};
use relkit::{Carrier, Rel};

fn main() {
    let tasks = Carrier::new("Tasks", ["build", "test", "ship"]).unwrap();
    let people = Carrier::new("People", ["ann", "ben"]).unwrap();
    let skills = Carrier::new("Skills", ["rust", "ops"]).unwrap();

    // assigned : Tasks ~ People, needs : Tasks ~ Skills.
    let assigned =
        Rel::make(&tasks, &people, [("build", "ann"), ("test", "ann"), ("test", "ben"), ("ship", "ben")])
            .unwrap();
    let needs =
        Rel::make(&tasks, &skills, [("build", "rust"), ("test", "rust"), ("ship", "ops")]).unwrap();

    // under(assigned, needs) : People ~ Skills relates a person to a
    // skill exactly when every task assigned to them needs it. It is
    // the largest X with assigned∘X ⊆ needs.
    let covers = under(&assigned, &needs);
    println!("under(assigned, needs) : People ~ Skills");
    println!("{}", covers.to_grid_string());
    assert!(covers.get(0, 0), "every task of ann's needs rust");
    assert!(!covers.get(1, 0), "ben ships, and shipping needs no rust");

    // The defining Galois property, checked literally over every
    // candidate X of the right type.
    for x in all_rels(&people, &skills).unwrap() {
        assert_eq!(assigned.compose(&x).leq(&needs), x.leq(&covers));
    }
    println!("under is the exact upper adjoint of composition on {} candidates.", 1 << 4);

    // over(S, T) is the mirror factor on the source side: the largest Y
    // with Y∘T ⊆ S.
    let t = Rel::make(&people, &skills, [("ann", "rust"), ("ben", "ops")]).unwrap();
    let widest = over(&needs, &t);
    for y in all_rels(&tasks, &people).unwrap() {
        assert_eq!(y.compose(&t).leq(&needs), y.leq(&widest));
    }
    println!("over is the exact upper adjoint on the other side.");

    // The sandwich factor divides on both flanks at once:
    // sandwich(r, s, t) is the largest M with r∘M∘t ⊆ s, here typed
    // People ~ People.
    let m = sandwich(&assigned, &needs, &t);
    println!("sandwich(assigned, needs, t) : People ~ People");
    println!("{}", m.to_grid_string());
    for cand in all_rels(&people, &people).unwrap() {
        assert_eq!(assigned.compose(&cand).compose(&t).leq(&needs), cand.leq(&m));
    }

    // Symmetric divisions compare rows (resp. columns) for equality of
    // their profiles; each is the meet of a division and its flip.
    let same_duties = sym_rdiv(&assigned, &assigned);
    let same_staff = sym_ldiv(&assigned, &assigned);
    assert!(same_duties.is_symmetric() && same_staff.is_symmetric());
    println!(
        "symmetric divisions: {} people-pairs share all tasks, {} task-pairs share all people.",
        same_duties.count(),
        same_staff.count()
    );
}
