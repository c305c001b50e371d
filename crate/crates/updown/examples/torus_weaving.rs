//! Torus and weaving words: closed forms for their actions, checked
//! against the sweep.
//!
//! Run with `cargo run --example torus_weaving`.

use updown::{
    act, ou_matrix, torus, torus_action_formula, weaving, weaving_action_formula, ColorVector,
};

fn main() -> updown::Result<()> {
    // T(p, q) is q repetitions of the positive sweep on p strands.
    let t = torus(3, 2)?;
    println!("T(3,2) = {t}");
    let formula = torus_action_formula(3, 2)?;
    println!("  row sums {:?}  col sums {:?}", formula.row_sums, formula.col_sums);
    println!("  zero-tuple action: {}", formula.output);
    assert_eq!(formula.output, act(&ColorVector::zeros(3), &t)?);
    let m = ou_matrix(&t);
    assert_eq!(formula.row_sums, m.row_sums().iter().map(|&r| r as i64).collect::<Vec<_>>());

    // The closed forms cover both q <= p and q > p.
    for (p, q) in [(5, 3), (3, 8), (4, 4)] {
        let direct = act(&ColorVector::zeros(p), &torus(p, q)?)?;
        let formula = torus_action_formula(p, q)?;
        assert_eq!(formula.output, direct);
        println!("T({p},{q}) moves the zero tuple to {direct}");
    }

    // W(p, q) alternates crossing signs along the sweep; with q = p it is
    // pure, irreducible, and fixes every tuple.
    let w = weaving(4, 4)?;
    println!("\nW(4,4) = {w}");
    assert!(w.is_pure() && w.is_irreducible());
    let x = ColorVector::parse("5,-1,7,0")?;
    assert_eq!(act(&x, &w)?, x);
    println!("W(4,4) fixes {x}");

    // For p >= q the action of W(p, q) depends only on the parities of p
    // and q and on where the first strand lands.
    for (p, q) in [(4, 2), (4, 3), (5, 2), (5, 3)] {
        let direct = act(&ColorVector::zeros(p), &weaving(p, q)?)?;
        let formula = weaving_action_formula(p, q)?;
        assert_eq!(formula, direct);
        println!("W({p},{q}) moves the zero tuple to {direct}");
    }
    Ok(())
}
