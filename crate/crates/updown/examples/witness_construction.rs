//! Building explicit words that carry one tuple to another, in every
//! flavor, with self-verification.
//!
//! Run with `cargo run --example witness_construction`.

use updown::{
    act, pure_witness, witness_classical, witness_classical_pure, witness_virtual, ColorVector,
};

fn main() -> updown::Result<()> {
    // Classical witness, reducibility allowed: a type-matching positive
    // word followed by degree-2 transfer blocks.
    let x = ColorVector::parse("1,4,-7,-1,2,9")?;
    let y = ColorVector::parse("4,0,8,-5,3,-2")?;
    let w = witness_classical(&x, &y, false)?;
    assert_eq!(act(&x, &w)?, y);
    println!("classical witness ({} letters): {w}", w.len());

    // The same relation realized without any non-alternating bigon.
    let w = witness_classical(&x, &y, true)?;
    assert_eq!(act(&x, &w)?, y);
    assert!(w.is_irreducible());
    println!("irreducible witness has {} letters", w.len());

    // Pure witnesses need an even, sum-preserving shift.
    let x = ColorVector::parse("1,2,3")?;
    let y = ColorVector::parse("3,4,-1")?;
    let w = witness_classical_pure(&x, &y, true)?;
    assert!(w.is_pure() && w.is_irreducible());
    assert_eq!(act(&x, &w)?, y);
    println!("pure irreducible witness: {w}");

    // The underlying assembly: chained degree-3 blocks realizing any even
    // zero-sum shift of the zero tuple.
    let shift = ColorVector::parse("2,4,-6")?;
    let w = pure_witness(&shift)?;
    assert_eq!(act(&ColorVector::zeros(3), &w)?, shift);
    println!("pure shift {shift} realized by: {w}");

    // Virtual witnesses exist whenever traces agree, and always come out
    // pure and irreducible: per column a power of a two-letter block.
    let x = ColorVector::parse("8,4,2,2")?;
    let y = ColorVector::parse("2,3,5,6")?;
    let w = witness_virtual(&x, &y)?;
    assert_eq!(act(&x, &w)?, y);
    assert!(w.is_pure() && w.is_irreducible());
    println!("virtual witness ({} letters): {w}", w.len());

    // Requests outside the orbit are rejected with the failed invariant.
    let err = witness_classical(&ColorVector::parse("0,1")?, &ColorVector::parse("1,0")?, false)
        .unwrap_err();
    println!("unreachable target rejected: {err}");
    Ok(())
}
