//! Parsing words, applying them to tuples, and reading off full edge
//! labellings.
//!
//! Run with `cargo run --example action_basics`.

use updown::{act, full_coloring, BraidWord, ColorVector};

fn main() -> updown::Result<()> {
    // A word lists crossings top to bottom: s = positive, S = negative,
    // v = virtual. Degree is inferred from the largest index when omitted.
    let w = BraidWord::parse("s1 S2 v1 s2", None)?;
    println!("word:        {w}");
    println!("degree:      {}", w.degree());
    println!("permutation: {:?}", w.permutation().images_one_based());
    println!("pure:        {}", w.is_pure());

    // Sweeping the word moves a tuple from the top bar to the bottom bar.
    let x = ColorVector::parse("0,0,0")?;
    let y = act(&x, &w)?;
    println!("{x} . {w} = {y}");

    // The sweep is a right action: applying u then v equals applying uv.
    let u = BraidWord::parse("s1", Some(3))?;
    let v = BraidWord::parse("s2", Some(3))?;
    let uv = u.concat(&v)?;
    assert_eq!(act(&act(&x, &u)?, &v)?, act(&x, &uv)?);
    println!("chained application agrees with the product word");

    // Every edge of the diagram gets a label; values move by exactly one
    // at each classical crossing on the strand.
    let coloring = full_coloring(&ColorVector::parse("1,2,3")?, &w)?;
    for (i, labels) in coloring.strands.iter().enumerate() {
        let text: Vec<String> = labels.iter().map(|v| v.to_string()).collect();
        println!("strand {}: {}", i + 1, text.join(" -> "));
    }

    // Reversal runs the action backwards, mirroring negates the zero shift.
    let zero = ColorVector::zeros(3);
    let shift = act(&zero, &w)?;
    assert_eq!(act(&y, &w.reversed())?, x);
    assert_eq!(act(&zero, &w.mirror())?, ColorVector(shift.iter().map(|e| -e).collect()));
    println!("reversal and mirror identities hold");
    Ok(())
}
