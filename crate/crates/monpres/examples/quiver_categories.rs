//! Categories by generators and relations: free hom-sets as bounded path
//! enumerations, quotient hom-sets by the relation congruence, and
//! functors into finite sets as the models of the presentation.
//!
//! Run with `cargo run --example quiver_categories`.

use monpres::catalog;
use monpres::quiver::{
    check_functor, enumerate_functor_data, free_hom, quotient_hom, CategoryPresentation, Path,
    PathRelation, Quiver, SetFunctorData,
};

fn main() -> monpres::Result<()> {
    // the commuting square from the catalog
    let square = catalog::get("commuting-square")?;
    let cp = square.category_presentation().unwrap();
    let quiver = cp.quiver();
    let a = quiver.object_index("a")?;
    let d = quiver.object_index("d")?;

    let free = free_hom(quiver, a, d, 2);
    println!("free hom(a, d) at length <= 2:");
    for p in &free {
        println!("  {}", p.display(quiver));
    }
    let quotient = quotient_hom(cp, a, d, 2, 10_000)?;
    println!("after the square relation: {} class(es)", quotient.classes.len());

    // a loop with an involution relation
    let mut q = Quiver::new();
    q.add_object("a")?;
    q.add_edge("e", "a", "a")?;
    let ee = Path::from_edges(&q, vec![0, 0], 0)?;
    let involution = CategoryPresentation::new(
        q,
        vec![PathRelation {
            label: Some("inv".into()),
            lhs: ee,
            rhs: Path::identity(0),
        }],
    )?;
    let quotient = quotient_hom(&involution, 0, 0, 3, 10_000)?;
    println!("\nloop with e.e = id at length <= 3:");
    for (i, class) in quotient.classes.iter().enumerate() {
        let members: Vec<String> = class
            .iter()
            .map(|p| p.display(involution.quiver()))
            .collect();
        println!("  class {i}: {}", members.join(" = "));
    }

    // functors into finite sets are the models: the swap is an
    // involution, the collapse map is not
    let swap = SetFunctorData {
        object_sets: vec![2],
        edge_maps: vec![vec![1, 0]],
    };
    let collapse = SetFunctorData {
        object_sets: vec![2],
        edge_maps: vec![vec![0, 0]],
    };
    println!(
        "\nswap on two elements is a model: {}",
        check_functor(&involution, &swap, 3)?
    );
    println!(
        "constant map is a model: {}",
        check_functor(&involution, &collapse, 3)?
    );

    // exhaustively: which assignments of sets of size <= 2 to the square
    // satisfy the relation?
    let all = enumerate_functor_data(cp.quiver(), 2);
    let good = all
        .iter()
        .filter(|f| check_functor(cp, f, 2).unwrap())
        .count();
    println!(
        "\ncommuting-square functor data with object sets of size <= 2: {good} of {} satisfy the relation",
        all.len()
    );
    Ok(())
}
